#include "support.hpp"

#include <cmath>
#include <stdexcept>

namespace testing_support {

dsphere::Form F(const std::string& text, const dsphere::PhiSpec& phi) {
    auto v = dsphere::evalExpr(text, phi);
    if (auto* f = std::get_if<dsphere::Form>(&v)) return *f;
    throw std::invalid_argument("not a form: " + text);
}

Estimate sampleSphereMoment(int m, int p, int q, long samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    double sum = 0, sumSq = 0;
    for (long k = 0; k < samples; ++k) {
        double x[5], r2 = 0;
        for (double& v : x) {
            v = normal(rng);
            r2 += v * v;
        }
        double r = std::sqrt(r2);
        double t = x[4] / r;
        double a2 = (x[0] * x[0] + x[1] * x[1]) / r2;
        double b2 = (x[2] * x[2] + x[3] * x[3]) / r2;
        double v = std::pow(t, m) * std::pow(a2, p) * std::pow(b2, q);
        sum += v;
        sumSq += v * v;
    }
    double n = static_cast<double>(samples);
    double mean = sum / n;
    double var = std::max(0.0, sumSq / n - mean * mean);
    return {mean, std::sqrt(var / n)};
}

}  // namespace testing_support
