#pragma once

#include "dsphere/chain.hpp"
#include "dsphere/exact_value.hpp"
#include "dsphere/matforms.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>

namespace dsphere {

// b (x) b* - b* (x) b + lam b* (x) lamc b - lamc b (x) lam b*
Chain chernPairChain();
// t (x) x_i (x) y_i - x_i (x) t (x) y_i + x_i (x) y_i (x) t over the pairs above
Chain ch1Chain();

// -1/(8 pi^2) int Tr(e de de de de), with phi specialized first
ExactValue pairingCh2(const PhiSpec& phi = PhiSpec::Formal());

// ---- 3-sphere a a* + b b* = 1 with lam = lam(r), r = b b* ----

// U = [[a, b], [-lam b*, a*]]; entries live in the 3-sphere algebra (t = 0)
std::array<AlgElement, 4> unitaryU();
bool unitaryCheck();  // U U* = U* U = 1
// Tr(U (x) U*) - Tr(U* (x) U)
Chain oddChernChain();

// Functions on the disk: sums of c(r) b^m b*^n with at most one of m, n nonzero.
// The coefficient ring is reused with t standing for r, so ddt is d/dr and lam = exp(-i phi(r)).
class DiskFunction {
public:
    using Terms = std::map<std::pair<int, int>, CoeffPoly>;

    DiskFunction() = default;
    static DiskFunction fromAlg(const AlgElement& x);  // throws if a or a* occurs
    static DiskFunction r();

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    void addTerm(int m, int n, const CoeffPoly& c);

    DiskFunction& operator+=(const DiskFunction& o);
    DiskFunction& operator-=(const DiskFunction& o);
    friend DiskFunction operator+(DiskFunction x, const DiskFunction& y) { return x += y; }
    friend DiskFunction operator-(DiskFunction x, const DiskFunction& y) { return x -= y; }
    friend DiskFunction operator*(const DiskFunction& x, const DiskFunction& y);
    friend bool operator==(const DiskFunction& x, const DiskFunction& y) { return x.terms_ == y.terms_; }
    std::string str() const;

private:
    Terms terms_;
};

// f db + g db*
struct DiskForm {
    DiskFunction db;
    DiskFunction dbStar;

    DiskForm& operator+=(const DiskForm& o);
    friend DiskForm operator*(const DiskFunction& f, const DiskForm& w);
    friend bool operator==(const DiskForm& x, const DiskForm& y) { return x.db == y.db && x.dbStar == y.dbStar; }
    std::string str() const;
};

DiskForm diskD(const DiskFunction& f);
// sum a0 da1 over a degree-1 chain
DiskForm deRhamImage(const Chain& c);

// Polynomials in r and the jet of f (order -1 is the antiderivative F), times powers of pi.
struct RadialKey {
    int piPower = 0;
    int r = 0;
    std::map<int, int> jet;  // order -> power
    auto operator<=>(const RadialKey&) const = default;
    bool operator==(const RadialKey&) const = default;
};

class RadialPoly {
public:
    using Terms = std::map<RadialKey, Gauss>;

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    void addTerm(const RadialKey& k, const Gauss& c);
    RadialPoly& operator+=(const RadialPoly& o);
    friend RadialPoly operator*(const Gauss& c, const RadialPoly& x);
    friend bool operator==(const RadialPoly& x, const RadialPoly& y) { return x.terms_ == y.terms_; }
    std::string str() const;

private:
    Terms terms_;
};

// h with w = h(r) dr, lam = exp(2 pi i f(r)); throws if w is not radial or lam survives
RadialPoly radialCoefficient(const DiskForm& w);
RadialPoly radialDerivative(const RadialPoly& g);
// explicit antiderivative by parts; terms must be linear in the f jet
RadialPoly radialPrimitive(const RadialPoly& h);
// replace the f jet by a polynomial f(r) = c0 + c1 r + ...
RadialPoly substituteF(const RadialPoly& h, const std::vector<Rational>& f);

struct MatsumotoResult {
    Chain chain;            // from the pair formula
    Chain chainFromU;       // Tr(U (x) U*) - Tr(U* (x) U)
    bool unitary = false;
    DiskForm image;         // sum a0 da1
    DiskForm expectedImage; // b b* (lam d lamc - lamc d lam)
    RadialPoly normalized;  // -1/(2 pi i) image / dr, with lam = exp(2 pi i f)
    RadialPoly primitive;
    bool primitiveChecks = false;
};

// fSpec: formal f, or a polynomial f(r) given by PhiSpec coefficients
MatsumotoResult matsumotoCh(const PhiSpec& fSpec = PhiSpec::Formal());

}  // namespace dsphere
