#include "dsphere/errors.hpp"
#include "dsphere/matforms.hpp"
#include "dsphere/sphereint.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <functional>
#include <complex>
#include <numbers>

using namespace dsphere;
using testing_support::F;

namespace {

const ExactValue kVol(Gauss(Rational(8, 3)), 2);

ExactValue times(const Rational& r) { return ExactValue(Gauss(r)) * kVol; }

// Classical integrals on the chart (t, psi, alpha, beta) by a tensor midpoint rule. A 4-form term
// f dx1 dx2 dx3 dx4 contributes f det(d x_k / d chart). Every term used here is phase balanced, so the
// integrand is read at alpha = beta = 0 and the angles contribute (2 pi)^2.
// Rows: 0 dt, 1 da, 2 da*, 3 db, 4 db*.
struct ClassicalTerm {
    std::function<double(double t, double c, double s)> f;
    std::array<int, 4> rows;
};

double chartIntegral(const std::vector<ClassicalTerm>& terms, int n) {
    using C = std::complex<double>;
    const double pi = std::numbers::pi;
    const C I(0, 1);
    double sum = 0;
    double ht = 2.0 / n, hp = (pi / 2) / n;
    for (int i = 0; i < n; ++i) {
        double t = -1 + (i + 0.5) * ht;
        double w = std::sqrt(1 - t * t), dw = -t / w;
        for (int j = 0; j < n; ++j) {
            double p = (j + 0.5) * hp, c = std::cos(p), s = std::sin(p);
            // columns d/dt, d/dpsi, d/dalpha, d/dbeta
            C row[5][4] = {{1, 0, 0, 0},
                           {dw * c, -w * s, I * w * c, 0},
                           {dw * c, -w * s, -I * w * c, 0},
                           {dw * s, w * c, 0, I * w * s},
                           {dw * s, w * c, 0, -I * w * s}};
            for (const auto& term : terms) {
                C det = 0;
                int perm[4] = {0, 1, 2, 3};
                do {
                    int inv = 0;
                    for (int x = 0; x < 4; ++x)
                        for (int y = x + 1; y < 4; ++y) inv += perm[x] > perm[y];
                    C prod = inv % 2 ? -1.0 : 1.0;
                    for (int x = 0; x < 4; ++x) prod *= row[term.rows[x]][perm[x]];
                    det += prod;
                } while (std::next_permutation(perm, perm + 4));
                sum += term.f(t, w * c, w * s) * det.real() * ht * hp;
            }
        }
    }
    return sum * 4 * pi * pi;
}

}  // namespace

TEST(SphereInt, Pullbacks) {
    ChartForm x = etaPullback(F("dt*t"));
    ASSERT_EQ(x.terms().size(), 1u);
    const auto& [k, c] = *x.terms().begin();
    EXPECT_EQ(k.word, 1);
    EXPECT_EQ(k.coeff, CoeffMono::tPow(1));
    EXPECT_EQ(c, Gauss(1));

    // w^2 s^2 with w^2 = 1 - t^2 and s^2 = 1 - c^2
    EXPECT_EQ(etaPullback(F("b*b*")).str(), "1 - c^2 - t^2 + t^2 c^2");
}

TEST(SphereInt, VolumeAndMoments) {
    EXPECT_EQ(integralOfForm(volumeForm()), kVol);
    EXPECT_EQ(sphereVolume(), kVol);
    EXPECT_TRUE(integralOfForm(F("t") * volumeForm()).isZero());
    EXPECT_EQ(integralOfForm(F("t^2") * volumeForm()), times(Rational(1, 5)));
    EXPECT_EQ(integralOfForm(F("a*a* * b*b*") * volumeForm()), times(Rational(4, 35)));
    EXPECT_EQ(integralOfForm(chernTopForm()), ExactValue(Gauss(8), 2));
}

TEST(SphereInt, MomentTableClosedForm) {
    auto& m = MomentTable::shared();
    EXPECT_EQ(m.tMoment(2, 0), Rational(2, 3));
    EXPECT_EQ(m.tMoment(0, 1), Rational(4, 3));
    EXPECT_EQ(m.tMoment(3, 2), 0);
    EXPECT_EQ(m.psiMoment(0, 0), ExactValue(Gauss(Rational(1, 2)), 1));
    EXPECT_EQ(m.psiMoment(1, 1), ExactValue(Gauss(Rational(1, 2))));
    EXPECT_EQ(m.sphereMoment(0, 0, 0), 1);
    EXPECT_EQ(m.sphereMoment(2, 0, 0), Rational(1, 5));
    EXPECT_EQ(m.sphereMoment(0, 1, 0), Rational(2, 5));
    EXPECT_EQ(m.sphereMoment(0, 1, 1), Rational(4, 35));
    EXPECT_EQ(m.sphereMoment(1, 1, 1), 0);
}

TEST(SphereInt, MomentsAgreeWithMonteCarlo) {
    auto& table = MomentTable::shared();
    for (int m = 0; m <= 4; ++m)
        for (int p = 0; m + p <= 4; ++p)
            for (int q = 0; m + p + q <= 4; ++q) {
                auto est = testing_support::sampleSphereMoment(m, p, q, 100000, 1000 + 25 * m + 5 * p + q);
                double exact = table.sphereMoment(m, p, q).get_d();
                EXPECT_LE(std::abs(est.mean - exact), 3 * est.stderr_ + 1e-12) << m << " " << p << " " << q;
            }
}

TEST(SphereInt, ClassicalIntegralsAgreeWithQuadrature) {
    // omega = (1/4)(t da da* db db* - 2 a dt da* db db* + 2 dt da da* db b*); |a| = w c, |b| = w s
    std::vector<ClassicalTerm> omega = {
        {[](double t, double, double) { return t / 4; }, {1, 2, 3, 4}},
        {[](double, double a, double) { return -a / 2; }, {0, 2, 3, 4}},
        {[](double, double, double b) { return b / 2; }, {0, 1, 2, 3}},
    };
    std::vector<ClassicalTerm> tTop = {{[](double t, double, double) { return t; }, {1, 2, 3, 4}}};
    std::vector<ClassicalTerm> top = {{[](double, double, double) { return 1.0; }, {1, 2, 3, 4}}};
    double vol = chartIntegral(omega, 400);
    EXPECT_NEAR(std::abs(vol), integralOfForm(volumeForm()).toDouble(), 1e-3 * std::abs(vol));
    // the orientation is fixed by int omega > 0, so compare ratios
    double ratioNum = chartIntegral(tTop, 400) / vol;
    ExactValue ratioExact = integralOfForm(F("t*da*da* * db*db*")) / integralOfForm(volumeForm());
    EXPECT_EQ(ratioExact, ExactValue(Gauss(Rational(4, 5))));
    EXPECT_NEAR(ratioNum, 0.8, 1e-3);
    EXPECT_NEAR(chartIntegral(top, 400) / vol, 0.0, 1e-9);
    EXPECT_EQ(psi(AlgElement::t(), AlgElement::a(), AlgElement::aStar(), AlgElement::b(), AlgElement::bStar()),
              integralOfForm(F("t*da*da* * db*db*")));
}

TEST(SphereInt, PsiWithUnitSlotVanishes) {
    AlgElement one = AlgElement::one();
    EXPECT_TRUE(psi(one, one, AlgElement::a(), AlgElement::b(), AlgElement::bStar()).isZero());
}

TEST(SphereInt, StokesOnSamples) {
    for (const char* rho : {"a*da* * db*db*", "lam*b*dt*da*da*", "t^2*a* * db*da*db*", "phi*b*dt*da*db*"})
        for (const PhiSpec& phi : {PhiSpec::Formal(), PhiSpec::Constant(2), PhiSpec::Polynomial({0, -1, 0, 1})})
            EXPECT_TRUE(integralOfForm(d(F(rho)), phi).isZero()) << rho << " " << phi.str();
}

TEST(SphereInt, RejectsWrongDegree) {
    EXPECT_THROW(integralOfForm(F("da")), DegreeError);
}

TEST(SphereInt, PhiDependentIntegrandIsReported) {
    EXPECT_THROW(integralOfForm(F("phi*t") * volumeForm()), LambdaResidualError);
}
