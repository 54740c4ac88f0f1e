#pragma once

#include "dsphere/gauss.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace dsphere {

// Monomial t^t lam^lam lamc^lamc prod_k (phi^(k))^jet[k].
// lam * lamc is rewritten to 1, so at most one of lam, lamc is nonzero.
// jet carries no trailing zeros.
struct CoeffMono {
    int t = 0;
    int lam = 0;
    int lamc = 0;
    std::vector<int> jet;

    static CoeffMono one() { return {}; }
    static CoeffMono tPow(int k) { return {k, 0, 0, {}}; }
    static CoeffMono lamPow(int n);  // n < 0 gives lamc^-n
    static CoeffMono phi(int order, int power = 1);

    int lamNet() const { return lam - lamc; }
    bool hasLamOrJet() const { return lam != 0 || lamc != 0 || !jet.empty(); }
    int jetPower(int order) const { return order < static_cast<int>(jet.size()) ? jet[order] : 0; }
    CoeffMono withoutT() const {
        CoeffMono m = *this;
        m.t = 0;
        return m;
    }

    CoeffMono operator*(const CoeffMono& o) const;
    auto operator<=>(const CoeffMono&) const = default;
    bool operator==(const CoeffMono&) const = default;
};

// Polynomial in t, lam, lamc and the jet phi, phi', phi'', ... over Q(i).
// lam stands for exp(-i phi(t)), so ddt(lam) = -i phi' lam.
class CoeffPoly {
public:
    using Terms = std::map<CoeffMono, Gauss>;

    CoeffPoly() = default;
    CoeffPoly(long c) : CoeffPoly(Gauss(c)) {}
    CoeffPoly(const Rational& c) : CoeffPoly(Gauss(c)) {}
    CoeffPoly(const Gauss& c);
    CoeffPoly(const Gauss& c, const CoeffMono& m);

    static CoeffPoly t() { return CoeffPoly(Gauss(1), CoeffMono::tPow(1)); }
    static CoeffPoly lam() { return CoeffPoly(Gauss(1), CoeffMono::lamPow(1)); }
    static CoeffPoly lamc() { return CoeffPoly(Gauss(1), CoeffMono::lamPow(-1)); }
    static CoeffPoly phi(int order) { return CoeffPoly(Gauss(1), CoeffMono::phi(order)); }
    static CoeffPoly lamDot();  // -i phi' lam

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    Gauss constantTerm() const;
    size_t size() const { return terms_.size(); }
    void addTerm(const CoeffMono& m, const Gauss& c);

    CoeffPoly operator-() const;
    CoeffPoly& operator+=(const CoeffPoly& o);
    CoeffPoly& operator-=(const CoeffPoly& o);
    CoeffPoly& operator*=(const Gauss& c);
    friend CoeffPoly operator+(CoeffPoly a, const CoeffPoly& b) { return a += b; }
    friend CoeffPoly operator-(CoeffPoly a, const CoeffPoly& b) { return a -= b; }
    friend CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b);
    friend CoeffPoly operator*(CoeffPoly a, const Gauss& c) { return a *= c; }
    friend CoeffPoly operator*(const Gauss& c, CoeffPoly a) { return a *= c; }
    friend bool operator==(const CoeffPoly& a, const CoeffPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const CoeffPoly& a, const CoeffPoly& b) { return !(a == b); }

    CoeffPoly pow(int n) const;
    // complex conjugation: i -> -i, lam <-> lamc; t and phi are real
    CoeffPoly conj() const;
    // maximal t-degree, and min/max net lam exponent over terms
    int tDegree() const;
    std::pair<int, int> lamRange() const;

    std::string str() const;
    // same, but phi' is shown through lam' = d/dt lam (phi'^k -> (i lam' lamc)^k)
    std::string strLamDot() const;

private:
    Terms terms_;
};

CoeffPoly ddt(const CoeffPoly& x);

// Choice of phi: formal jet symbols, or a polynomial in t (a constant is a degree-0 polynomial).
struct PhiSpec {
    bool formal = true;
    std::vector<Rational> poly;  // coefficients c0 + c1 t + ...

    static PhiSpec Formal() { return {}; }
    static PhiSpec Constant(const Rational& c) { return {false, {c}}; }
    static PhiSpec Polynomial(std::vector<Rational> coeffs) { return {false, std::move(coeffs)}; }
    // "formal", "const:1/3", "poly:0,0,1" (coefficients from t^0 upward)
    static PhiSpec parse(const std::string& s);

    bool isConstant() const;
    CoeffPoly derivative(int k) const;  // phi^(k) as a polynomial in t
    std::string str() const;
};

// Ring homomorphism replacing phi^(k) by its polynomial value; lam stays symbolic.
CoeffPoly specialize(const CoeffPoly& x, const PhiSpec& spec);
CoeffPoly substituteT(const CoeffPoly& x, const Rational& value);

// Pieces of a printed monomial: coefficient text ("", "-", "3/4", "(1 + i)") and symbol text.
struct MonoText {
    Gauss coeff;
    std::string symbols;
};
MonoText monoText(const Gauss& c, const CoeffMono& m, bool lamDot);
std::string joinTerms(const std::vector<std::pair<Gauss, std::string>>& terms);

}  // namespace dsphere
