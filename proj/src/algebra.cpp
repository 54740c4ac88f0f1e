#include "dsphere/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <deque>
#include <vector>

namespace dsphere {

namespace {

std::string letterPow(const char* s, int e) {
    std::string out = s;
    if (e > 1) out += "^" + std::to_string(e);
    return out;
}

template <class Terms>
std::string termsText(const Terms& terms, bool lamDot) {
    std::vector<std::pair<Gauss, std::string>> items;
    for (const auto& [m, c] : terms) {
        std::string ms = m.isOne() ? "" : m.str();
        for (const auto& [cm, cv] : c.terms()) {
            MonoText mt = monoText(cv, cm, lamDot);
            std::string sym = mt.symbols;
            if (!ms.empty()) sym += (sym.empty() ? "" : " ") + ms;
            items.emplace_back(mt.coeff, sym);
        }
    }
    return joinTerms(items);
}

}  // namespace

std::string AlgMonomial::str() const {
    std::vector<std::string> parts;
    if (alpha) parts.push_back(letterPow("a", alpha));
    if (beta) parts.push_back(letterPow("a*", beta));
    if (gamma) parts.push_back(letterPow("b", gamma));
    if (delta) parts.push_back(letterPow("b*", delta));
    if (parts.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) out += (i ? " " : "") + parts[i];
    return out;
}

AlgElement::AlgElement(const CoeffPoly& c) {
    if (!c.isZero()) terms_.emplace(AlgMonomial{}, c);
}

AlgElement::AlgElement(const CoeffPoly& c, const AlgMonomial& m) {
    if (!m.isReduced()) throw std::invalid_argument("AlgElement term must be a reduced monomial");
    if (!c.isZero()) terms_.emplace(m, c);
}

void AlgElement::addTerm(const AlgMonomial& m, const CoeffPoly& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

int AlgElement::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree() + c.tDegree());
    return d;
}

AlgElement AlgElement::operator-() const {
    AlgElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

AlgElement& AlgElement::operator+=(const AlgElement& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

const AlgElement& sphereReductionPower(int k) {
    thread_local std::deque<AlgElement> cache;
    if (cache.empty()) cache.push_back(AlgElement::one());
    while (static_cast<int>(cache.size()) <= k) {
        // (1 - t^2 - b b*) * previous; b b* and t are central
        const AlgElement& prev = cache.back();
        AlgElement next;
        CoeffPoly oneMinusT2 = CoeffPoly(1) - CoeffPoly::t() * CoeffPoly::t();
        for (const auto& [m, c] : prev.terms()) {
            next.addTerm(m, oneMinusT2 * c);
            AlgMonomial mb = m;
            mb.gamma += 1;
            mb.delta += 1;
            next.addTerm(mb, -c);
        }
        cache.push_back(std::move(next));
    }
    return cache[k];
}

AlgElement AlgElement::monomial(const AlgMonomial& m) {
    int k = std::min(m.alpha, m.beta);
    AlgMonomial rest{m.alpha - k, m.beta - k, m.gamma, m.delta};
    if (k == 0) return AlgElement(CoeffPoly(1), rest);
    AlgElement r;
    for (const auto& [bm, c] : sphereReductionPower(k).terms()) {
        AlgMonomial mm{rest.alpha, rest.beta, rest.gamma + bm.gamma, rest.delta + bm.delta};
        r.addTerm(mm, c);
    }
    return r;
}

AlgElement mulMonomials(const AlgMonomial& p, const AlgMonomial& q) {
    // move the b-part of p past the a-part of q
    int n = (p.gamma - p.delta) * (q.beta - q.alpha);
    AlgMonomial m{p.alpha + q.alpha, p.beta + q.beta, p.gamma + q.gamma, p.delta + q.delta};
    AlgElement r = AlgElement::monomial(m);
    if (n == 0) return r;
    CoeffPoly lamN(Gauss(1), CoeffMono::lamPow(n));
    return lamN * r;
}

AlgElement operator*(const AlgElement& x, const AlgElement& y) {
    AlgElement r;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_) {
            CoeffPoly c = cx * cy;
            AlgElement prod = mulMonomials(mx, my);
            for (const auto& [m, cm] : prod.terms_) r.addTerm(m, c * cm);
        }
    return r;
}

AlgElement operator*(const CoeffPoly& c, const AlgElement& x) {
    AlgElement r;
    if (c.isZero()) return r;
    for (const auto& [m, cx] : x.terms_) r.addTerm(m, c * cx);
    return r;
}

AlgElement AlgElement::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power of an algebra element");
    AlgElement r = one();
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

std::string AlgElement::str() const { return termsText(terms_, false); }
std::string AlgElement::strLamDot() const { return termsText(terms_, true); }

AlgElement star(const AlgElement& x) {
    AlgElement r;
    for (const auto& [m, c] : x.terms()) {
        // (a^al a*^be b^ga b*^de)* = b^de b*^ga a^be a*^al
        AlgElement s = mulMonomials({0, 0, m.delta, m.gamma}, {m.beta, m.alpha, 0, 0});
        r += c.conj() * s;
    }
    return r;
}

AlgElement specialize(const AlgElement& x, const PhiSpec& spec) {
    AlgElement r;
    for (const auto& [m, c] : x.terms()) r.addTerm(m, specialize(c, spec));
    return r;
}

AlgElement substituteT(const AlgElement& x, const Rational& value) {
    AlgElement r;
    for (const auto& [m, c] : x.terms()) r.addTerm(m, substituteT(c, value));
    return r;
}

void ClassicalPoly::addTerm(const AlgMonomial& m, const CoeffPoly& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

ClassicalPoly operator*(const ClassicalPoly& x, const ClassicalPoly& y) {
    ClassicalPoly r;
    for (const auto& [mx, cx] : x.terms_)
        for (const auto& [my, cy] : y.terms_)
            r.addTerm({mx.alpha + my.alpha, mx.beta + my.beta, mx.gamma + my.gamma, mx.delta + my.delta}, cx * cy);
    return r;
}

ClassicalPoly ClassicalPoly::onSphere() const {
    ClassicalPoly r;
    for (const auto& [m, c] : terms_) {
        AlgElement reduced = AlgElement::monomial(m);
        for (const auto& [mm, cm] : reduced.terms()) r.addTerm(mm, c * cm);
    }
    return r;
}

std::string ClassicalPoly::str() const { return termsText(terms_, false); }

ClassicalPoly etaAlg(const AlgElement& x) {
    ClassicalPoly r;
    for (const auto& [m, c] : x.terms()) r.addTerm(m, c);
    return r;
}

}  // namespace dsphere
