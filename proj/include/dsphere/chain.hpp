#pragma once

#include "dsphere/algebra.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace dsphere {

// Basis of the algebra over Q(i): a coefficient monomial times a reduced monomial.
// Tensor products are Q(i)-linear only, so lam b* (x) b and b* (x) lam b are different chains.
struct SlotBasis {
    CoeffMono coeff;
    AlgMonomial mono;
    bool isUnit() const { return coeff == CoeffMono::one() && mono.isOne(); }
    AlgElement element() const { return AlgElement(CoeffPoly(Gauss(1), coeff), mono); }
    auto operator<=>(const SlotBasis&) const = default;
    bool operator==(const SlotBasis&) const = default;
};

// Which algebra the slots multiply in: the 4-sphere, or the 3-sphere a a* + b b* = 1 (t set to 0).
enum class Sphere { S4, S3 };

class Chain {
public:
    using Terms = std::map<std::vector<SlotBasis>, Gauss>;

    Chain() = default;
    static Chain tensor(const std::vector<AlgElement>& slots);

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    void addTerm(const std::vector<SlotBasis>& key, const Gauss& c);
    int degree() const;  // n for a0 (x) ... (x) an; -1 when empty or mixed

    Chain& operator+=(const Chain& o);
    Chain& operator-=(const Chain& o);
    friend Chain operator+(Chain x, const Chain& y) { return x += y; }
    friend Chain operator-(Chain x, const Chain& y) { return x -= y; }
    friend Chain operator*(const Gauss& c, const Chain& x);
    friend bool operator==(const Chain& x, const Chain& y) { return x.terms_ == y.terms_; }

    // drop tensors with the unit in a slot other than the first
    Chain normalized() const;
    std::string str() const;

private:
    Terms terms_;
};

// 1 (x) x
Chain prependUnit(const Chain& x);
// Hochschild boundary, with the wrap-around term (-1)^n a_n a_0 (x) a_1 ... a_{n-1}
Chain hochschildB(const Chain& x, Sphere sphere = Sphere::S4);
// Connes operator on normalized chains: sum_i (-1)^{n i} 1 (x) a_i (x) ... (x) a_{i-1}
Chain connesB(const Chain& x);

}  // namespace dsphere
