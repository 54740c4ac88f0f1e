#pragma once

#include "dsphere/exact_value.hpp"
#include "dsphere/forms.hpp"

#include <compare>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

namespace dsphere {

// Chart on S^4:  a = w c e^{i alpha},  b = w s e^{i beta},  w = sqrt(1 - t^2),
// c = cos psi, s = sin psi,  t in [-1, 1], psi in [0, pi/2], alpha, beta in [0, 2 pi).
// Chart differentials: bit 0 dt, bit 1 dpsi, bit 2 dalpha, bit 3 dbeta.
struct ChartKey {
    CoeffMono coeff;  // t-power and the lam/phi jet
    int c = 0;
    int s = 0;        // 0 or 1 after reduction s^2 = 1 - c^2
    int w = 0;        // w^2 = 1 - t^2 is applied for w >= 2; negative powers stay
    int phaseA = 0;   // e^{i phaseA alpha}
    int phaseB = 0;
    std::uint8_t word = 0;
    auto operator<=>(const ChartKey&) const = default;
    bool operator==(const ChartKey&) const = default;
};

class ChartForm {
public:
    using Terms = std::map<ChartKey, Gauss>;

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    void addTerm(const ChartKey& k, const Gauss& c);
    ChartForm& operator+=(const ChartForm& o);
    friend ChartForm operator*(const ChartForm& x, const ChartForm& y);
    friend bool operator==(const ChartForm& x, const ChartForm& y) { return x.terms_ == y.terms_; }
    std::string str() const;

private:
    Terms terms_;
};

// Classical image of a canonical form, written in the chart.
ChartForm etaPullback(const Form& x);

// Exact moments.
class MomentTable {
public:
    // int_{-1}^{1} t^m (1 - t^2)^j dt
    Rational tMoment(int m, int j);
    // int_0^{pi/2} cos^p sin^q dpsi, a rational times pi^0 or pi^1
    ExactValue psiMoment(int p, int q);
    // mean of t^m |a|^{2p} |b|^{2q} over S^4 with the uniform measure
    Rational sphereMoment(int m, int p, int q);

    static MomentTable& shared();

private:
    std::mutex mu_;
    std::map<std::pair<int, int>, Rational> t_;
    std::map<std::pair<int, int>, ExactValue> psi_;
    std::map<std::tuple<int, int, int>, Rational> sphere_;
};

// Integral of a chart 4-form over S^4, oriented so that the volume form integrates to 8/3 pi^2.
// Throws DegreeError on other degrees and LambdaResidualError when a phi-dependent part survives.
// phi is applied to x first; it also fixes d/dt lam when phi-dependent parts are reduced by parts.
ExactValue integrate4(const ChartForm& x, const PhiSpec& phi = PhiSpec::Formal());
ExactValue integralOfForm(const Form& x, const PhiSpec& phi = PhiSpec::Formal());
// a0 da1 da2 da3 da4, and its integral. With lam in the arguments psi alone usually depends on
// phi; identities between psi values are checked by integrating the combined form.
Form psiForm(const AlgElement& a0, const AlgElement& a1, const AlgElement& a2, const AlgElement& a3,
             const AlgElement& a4);
ExactValue psi(const AlgElement& a0, const AlgElement& a1, const AlgElement& a2, const AlgElement& a3,
               const AlgElement& a4);

ExactValue sphereVolume();  // 8/3 pi^2

}  // namespace dsphere
