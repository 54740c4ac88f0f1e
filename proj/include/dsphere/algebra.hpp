#pragma once

#include "dsphere/coeff_poly.hpp"

#include <compare>
#include <map>
#include <string>

namespace dsphere {

// Torus weight. a: (1,0), a*: (-1,0), b: (0,1), b*: (0,-1).
struct Weight {
    int x = 0;
    int y = 0;
    Weight operator+(const Weight& o) const { return {x + o.x, y + o.y}; }
    Weight operator-(const Weight& o) const { return {x - o.x, y - o.y}; }
    Weight operator-() const { return {-x, -y}; }
    auto operator<=>(const Weight&) const = default;
    bool operator==(const Weight&) const = default;
};

// Antisymmetric pairing; x y = lam^{omega(wt x, wt y)} y x for homogeneous x, y.
inline int omega(const Weight& u, const Weight& v) { return u.x * v.y - u.y * v.x; }

// a^alpha a*^beta b^gamma b*^delta in this order. Reduced when not both alpha and beta are positive.
struct AlgMonomial {
    int alpha = 0;
    int beta = 0;
    int gamma = 0;
    int delta = 0;

    Weight weight() const { return {alpha - beta, gamma - delta}; }
    int degree() const { return alpha + beta + gamma + delta; }
    bool isReduced() const { return alpha == 0 || beta == 0; }
    bool isOne() const { return degree() == 0; }
    std::string str() const;  // "a a*^2 b", "1"

    auto operator<=>(const AlgMonomial&) const = default;
    bool operator==(const AlgMonomial&) const = default;
};

// Element of the algebra: reduced monomials with coefficients in CoeffPoly (central).
class AlgElement {
public:
    using Terms = std::map<AlgMonomial, CoeffPoly>;

    AlgElement() = default;
    AlgElement(const CoeffPoly& c);
    AlgElement(const CoeffPoly& c, const AlgMonomial& m);  // m must be reduced

    static AlgElement a() { return AlgElement(CoeffPoly(1), {1, 0, 0, 0}); }
    static AlgElement aStar() { return AlgElement(CoeffPoly(1), {0, 1, 0, 0}); }
    static AlgElement b() { return AlgElement(CoeffPoly(1), {0, 0, 1, 0}); }
    static AlgElement bStar() { return AlgElement(CoeffPoly(1), {0, 0, 0, 1}); }
    static AlgElement t() { return AlgElement(CoeffPoly::t()); }
    static AlgElement one() { return AlgElement(CoeffPoly(1)); }
    // any monomial; the a a* pairs are rewritten through the sphere relation
    static AlgElement monomial(const AlgMonomial& m);

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    void addTerm(const AlgMonomial& m, const CoeffPoly& c);
    // max of (monomial degree + t-degree of coefficient)
    int degree() const;

    AlgElement operator-() const;
    AlgElement& operator+=(const AlgElement& o);
    AlgElement& operator-=(const AlgElement& o);
    friend AlgElement operator+(AlgElement x, const AlgElement& y) { return x += y; }
    friend AlgElement operator-(AlgElement x, const AlgElement& y) { return x -= y; }
    friend AlgElement operator*(const AlgElement& x, const AlgElement& y);
    friend AlgElement operator*(const CoeffPoly& c, const AlgElement& x);
    friend bool operator==(const AlgElement& x, const AlgElement& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const AlgElement& x, const AlgElement& y) { return !(x == y); }

    AlgElement pow(int n) const;
    std::string str() const;
    std::string strLamDot() const;

private:
    Terms terms_;
};

AlgElement mulMonomials(const AlgMonomial& p, const AlgMonomial& q);
AlgElement star(const AlgElement& x);
AlgElement specialize(const AlgElement& x, const PhiSpec& spec);
AlgElement substituteT(const AlgElement& x, const Rational& value);
// (1 - t^2 - b b*)^k
const AlgElement& sphereReductionPower(int k);

// Commutative image: the same monomials read as functions on the classical sphere.
// No sphere rewriting is done, so a a* stays a product of coordinates.
class ClassicalPoly {
public:
    using Terms = std::map<AlgMonomial, CoeffPoly>;
    void addTerm(const AlgMonomial& m, const CoeffPoly& c);
    const Terms& terms() const { return terms_; }
    friend ClassicalPoly operator*(const ClassicalPoly& x, const ClassicalPoly& y);
    friend bool operator==(const ClassicalPoly& x, const ClassicalPoly& y) { return x.terms_ == y.terms_; }
    // Rewrite a a* -> 1 - t^2 - b b* so equal functions on the sphere compare equal.
    ClassicalPoly onSphere() const;
    std::string str() const;

private:
    Terms terms_;
};

ClassicalPoly etaAlg(const AlgElement& x);

}  // namespace dsphere
