#include "dsphere/generators.hpp"

namespace dsphere {

Gauss Gen::gauss() {
    while (true) {
        Gauss g(Rational(uniform(-3, 3)), Rational(uniform(-1, 1)));
        if (!g.isZero()) return g;
    }
}

CoeffPoly Gen::coeff(bool withT, bool withLam) {
    CoeffMono m;
    if (withT) m.t = uniform(0, 1);
    if (withLam) {
        int l = uniform(-1, 1);
        m = m * CoeffMono::lamPow(l);
    }
    return CoeffPoly(gauss(), m);
}

AlgMonomial Gen::monomial(int maxDeg) {
    AlgMonomial m;
    int deg = uniform(0, maxDeg);
    for (int k = 0; k < deg; ++k) {
        switch (uniform(0, 3)) {
            case 0: m.beta ? ++m.beta : ++m.alpha; break;
            case 1: m.alpha ? ++m.alpha : ++m.beta; break;
            case 2: ++m.gamma; break;
            default: ++m.delta; break;
        }
    }
    return m;
}

AlgElement Gen::alg(int maxDeg, int maxTerms, bool withLam) {
    AlgElement x;
    int n = uniform(1, maxTerms);
    for (int k = 0; k < n; ++k) x += coeff(true, withLam) * AlgElement::monomial(monomial(maxDeg));
    return x;
}

DiffWord Gen::word(int degree) {
    std::vector<int> letters{0, 1, 2, 3, 4};
    std::shuffle(letters.begin(), letters.end(), rng_);
    DiffWord w = 0;
    for (int k = 0; k < degree; ++k) w |= DiffWord(1u << letters[static_cast<size_t>(k)]);
    return w;
}

Form Gen::form(int degree, int maxDeg, int maxTerms, bool withLam) {
    Form x;
    int n = uniform(1, maxTerms);
    for (int k = 0; k < n; ++k) {
        AlgElement m = AlgElement::monomial(monomial(maxDeg));
        x += Form::term(coeff(true, withLam), word(degree), {}) * Form(m);
    }
    return x;
}

Form Gen::piece(bool withLam) {
    switch (uniform(0, 3)) {
        case 0: return Form::diff(uniform(0, 4));
        case 1: return Form(coeff(true, withLam));
        case 2: return Form(AlgElement::monomial(monomial(1)));
        default: return Form(coeff(false, withLam)) * Form::diff(uniform(0, 4));
    }
}

Chain Gen::chain(int degree, int maxTerms) {
    Chain c;
    int n = uniform(1, maxTerms);
    for (int k = 0; k < n; ++k) {
        std::vector<AlgElement> slots;
        for (int s = 0; s <= degree; ++s) {
            // the unit shows up often enough to exercise the degeneracy quotient
            if (uniform(0, 4) == 0) slots.push_back(AlgElement::one());
            else slots.push_back(coeff(false, true) * AlgElement::monomial(monomial(1)));
        }
        c += Chain::tensor(slots);
    }
    return c;
}

}  // namespace dsphere
