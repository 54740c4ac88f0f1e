#pragma once

#include "dsphere/algebra.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dsphere {

// Differential letters in canonical order dt < da < da* < db < db*.
enum Diff : int { kDt = 0, kDa = 1, kDaStar = 2, kDb = 3, kDbStar = 4 };

Weight diffWeight(int letter);
const char* diffName(int letter);

// Canonical word: a set of distinct letters, read in canonical order. Bit k is letter k.
using DiffWord = std::uint8_t;
int wordDegree(DiffWord w);
Weight wordWeight(DiffWord w);
std::vector<int> wordLetters(DiffWord w);
std::string wordStr(DiffWord w);
constexpr DiffWord kTopWord = 0x1f;

struct FormKey {
    DiffWord word = 0;
    AlgMonomial mono;
    auto operator<=>(const FormKey&) const = default;
    bool operator==(const FormKey&) const = default;
};

// Sum of coeff * word * monomial: differentials on the left, reduced monomial on the right.
class Form {
public:
    using Terms = std::map<FormKey, CoeffPoly>;

    Form() = default;
    Form(const AlgElement& x);
    Form(const CoeffPoly& c) : Form(AlgElement(c)) {}
    static Form term(const CoeffPoly& c, DiffWord w, const AlgMonomial& m);
    static Form diff(int letter) { return term(CoeffPoly(1), DiffWord(1u << letter), {}); }
    static Form dt() { return diff(kDt); }

    const Terms& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    void addTerm(DiffWord w, const AlgMonomial& m, const CoeffPoly& c);

    // form degree if homogeneous, -1 if mixed, 0 for the zero form
    int degree() const;
    // max of (monomial degree + t-degree)
    int algDegree() const;
    // weight of every term, with word weights included
    std::map<Weight, Form> byWeight() const;
    AlgElement toAlg() const;  // degree-0 part; throws on higher degree terms

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form x, const Form& y) { return x += y; }
    friend Form operator-(Form x, const Form& y) { return x -= y; }
    friend Form operator*(const Form& x, const Form& y);
    friend Form operator*(const CoeffPoly& c, const Form& x);
    friend bool operator==(const Form& x, const Form& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const Form& x, const Form& y) { return !(x == y); }

    Form pow(int n) const;
    std::string str() const;
    // phi' shown through lam' (lam' = -i phi' lam); dt-terms listed after the others
    std::string strLamDot() const;

private:
    Terms terms_;
};

// Ordered product of differential letters, rewritten as a canonical form
// (letters sorted, corrections carry algebra letters to the right).
const Form& sortSeq(const std::vector<int>& letters);
// x * m for an algebra element m placed on the right of every term
Form mulRight(const Form& x, const AlgElement& m);

Form d(const Form& x);
Form star(const Form& x);
Form specialize(const Form& x, const PhiSpec& spec);
Form substituteT(const Form& x, const Rational& value);

// Unevaluated sums and products, evaluated bottom-up into canonical form.
struct RawForm {
    enum class Op { Leaf, Sum, Product };
    Op op = Op::Leaf;
    Form leaf;
    std::vector<RawForm> args;

    static RawForm of(Form f) { return {Op::Leaf, std::move(f), {}}; }
    static RawForm sum(std::vector<RawForm> xs) { return {Op::Sum, {}, std::move(xs)}; }
    static RawForm product(std::vector<RawForm> xs) { return {Op::Product, {}, std::move(xs)}; }
};
Form normalizeForm(const RawForm& raw);

// (1/4) (t da da* db db* - 2 a dt da* db db* + 2 dt da da* db b*), normalized.
Form volumeForm();

}  // namespace dsphere
