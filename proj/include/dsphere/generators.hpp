#pragma once

#include "dsphere/chain.hpp"
#include "dsphere/forms.hpp"

#include <algorithm>
#include <random>

namespace dsphere {

// Small random inputs for property checks. Coefficients are Gaussian integers in a
// small box, optionally times t and lam^{+-1}.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    std::mt19937_64& engine() { return rng_; }

    Gauss gauss();
    CoeffPoly coeff(bool withT = true, bool withLam = true);
    AlgMonomial monomial(int maxDeg);  // reduced: never both a and a*
    AlgElement alg(int maxDeg = 2, int maxTerms = 3, bool withLam = true);
    DiffWord word(int degree);
    Form form(int degree, int maxDeg = 2, int maxTerms = 3, bool withLam = true);
    // generator letters and one-forms, for products of small pieces
    Form piece(bool withLam = true);
    Chain chain(int degree, int maxTerms = 2);

private:
    std::mt19937_64 rng_;
};

}  // namespace dsphere
