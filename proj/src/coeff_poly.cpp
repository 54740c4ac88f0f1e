#include "dsphere/coeff_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dsphere {

CoeffMono CoeffMono::lamPow(int n) {
    CoeffMono m;
    if (n >= 0) m.lam = n;
    else m.lamc = -n;
    return m;
}

CoeffMono CoeffMono::phi(int order, int power) {
    CoeffMono m;
    m.jet.assign(order + 1, 0);
    m.jet[order] = power;
    return m;
}

CoeffMono CoeffMono::operator*(const CoeffMono& o) const {
    CoeffMono r;
    r.t = t + o.t;
    int net = lamNet() + o.lamNet();
    r.lam = std::max(net, 0);
    r.lamc = std::max(-net, 0);
    r.jet.assign(std::max(jet.size(), o.jet.size()), 0);
    for (size_t k = 0; k < jet.size(); ++k) r.jet[k] += jet[k];
    for (size_t k = 0; k < o.jet.size(); ++k) r.jet[k] += o.jet[k];
    while (!r.jet.empty() && r.jet.back() == 0) r.jet.pop_back();
    return r;
}

CoeffPoly::CoeffPoly(const Gauss& c) {
    if (!c.isZero()) terms_.emplace(CoeffMono::one(), c);
}

CoeffPoly::CoeffPoly(const Gauss& c, const CoeffMono& m) {
    if (!c.isZero()) terms_.emplace(m, c);
}

CoeffPoly CoeffPoly::lamDot() {
    CoeffMono m = CoeffMono::phi(1) * CoeffMono::lamPow(1);
    return CoeffPoly(Gauss(0, -1), m);
}

bool CoeffPoly::isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == CoeffMono::one());
}

Gauss CoeffPoly::constantTerm() const {
    auto it = terms_.find(CoeffMono::one());
    return it == terms_.end() ? Gauss(0) : it->second;
}

void CoeffPoly::addTerm(const CoeffMono& m, const Gauss& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

CoeffPoly CoeffPoly::operator-() const {
    CoeffPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

CoeffPoly& CoeffPoly::operator+=(const CoeffPoly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

CoeffPoly& CoeffPoly::operator-=(const CoeffPoly& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

CoeffPoly& CoeffPoly::operator*=(const Gauss& c) {
    if (c.isZero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

CoeffPoly operator*(const CoeffPoly& a, const CoeffPoly& b) {
    CoeffPoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.addTerm(ma * mb, ca * cb);
    return r;
}

CoeffPoly CoeffPoly::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power of a coefficient polynomial");
    CoeffPoly r(1), base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

CoeffPoly CoeffPoly::conj() const {
    CoeffPoly r;
    for (const auto& [m, c] : terms_) {
        CoeffMono mm = m;
        std::swap(mm.lam, mm.lamc);
        r.addTerm(mm, c.conj());
    }
    return r;
}

int CoeffPoly::tDegree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.t);
    return d;
}

std::pair<int, int> CoeffPoly::lamRange() const {
    int lo = 0, hi = 0;
    for (const auto& [m, c] : terms_) {
        lo = std::min(lo, m.lamNet());
        hi = std::max(hi, m.lamNet());
    }
    return {lo, hi};
}

CoeffPoly ddt(const CoeffPoly& x) {
    CoeffPoly r;
    const CoeffMono phi1 = CoeffMono::phi(1);
    for (const auto& [m, c] : x.terms()) {
        if (m.t > 0) {
            CoeffMono mm = m;
            mm.t -= 1;
            r.addTerm(mm, c * Gauss(m.t));
        }
        if (m.lam > 0) r.addTerm(m * phi1, c * Gauss(0, -m.lam));
        if (m.lamc > 0) r.addTerm(m * phi1, c * Gauss(0, m.lamc));
        for (size_t k = 0; k < m.jet.size(); ++k) {
            if (m.jet[k] == 0) continue;
            CoeffMono mm = m;
            mm.jet[k] -= 1;
            while (!mm.jet.empty() && mm.jet.back() == 0) mm.jet.pop_back();
            r.addTerm(mm * CoeffMono::phi(static_cast<int>(k) + 1), c * Gauss(m.jet[k]));
        }
    }
    return r;
}

PhiSpec PhiSpec::parse(const std::string& s) {
    if (s == "formal") return Formal();
    auto colon = s.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad phi specification: " + s);
    std::string kind = s.substr(0, colon), body = s.substr(colon + 1);
    if (kind == "const") return Constant(parseRational(body));
    if (kind == "poly") {
        std::vector<Rational> coeffs;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(parseRational(item));
        if (coeffs.empty()) throw std::invalid_argument("empty polynomial in phi specification");
        return Polynomial(std::move(coeffs));
    }
    throw std::invalid_argument("bad phi specification: " + s);
}

bool PhiSpec::isConstant() const {
    if (formal) return false;
    for (size_t k = 1; k < poly.size(); ++k)
        if (sgn(poly[k]) != 0) return false;
    return true;
}

CoeffPoly PhiSpec::derivative(int k) const {
    if (formal) return CoeffPoly::phi(k);
    CoeffPoly r;
    for (size_t n = static_cast<size_t>(k); n < poly.size(); ++n) {
        Rational c = poly[n];
        for (size_t j = 0; j < static_cast<size_t>(k); ++j) c *= static_cast<long>(n - j);
        r.addTerm(CoeffMono::tPow(static_cast<int>(n) - k), Gauss(c));
    }
    return r;
}

std::string PhiSpec::str() const {
    if (formal) return "formal";
    if (poly.size() == 1) return "const:" + rationalStr(poly[0]);
    std::string out = "poly:";
    for (size_t k = 0; k < poly.size(); ++k) out += (k ? "," : "") + rationalStr(poly[k]);
    return out;
}

CoeffPoly specialize(const CoeffPoly& x, const PhiSpec& spec) {
    if (spec.formal) return x;
    std::vector<CoeffPoly> values;
    CoeffPoly r;
    for (const auto& [m, c] : x.terms()) {
        CoeffMono base = m;
        base.jet.clear();
        CoeffPoly term(c, base);
        for (size_t k = 0; k < m.jet.size(); ++k) {
            if (m.jet[k] == 0) continue;
            while (values.size() <= k) values.push_back(spec.derivative(static_cast<int>(values.size())));
            term = term * values[k].pow(m.jet[k]);
        }
        r += term;
    }
    return r;
}

CoeffPoly substituteT(const CoeffPoly& x, const Rational& value) {
    CoeffPoly r;
    for (const auto& [m, c] : x.terms()) {
        Rational p = 1;
        for (int k = 0; k < m.t; ++k) p *= value;
        CoeffMono mm = m;
        mm.t = 0;
        r.addTerm(mm, c * Gauss(p));
    }
    return r;
}

namespace {

std::string powText(const std::string& sym, int e) {
    return e == 1 ? sym : sym + "^" + std::to_string(e);
}

std::string jetName(size_t k) {
    if (k == 0) return "phi";
    if (k <= 3) return "phi" + std::string(k, '\'');
    return "phi^(" + std::to_string(k) + ")";
}

}  // namespace

MonoText monoText(const Gauss& c, const CoeffMono& m, bool lamDot) {
    MonoText out{c, {}};
    std::vector<std::string> parts;
    int net = m.lamNet();
    int dots = 0;
    if (lamDot && m.jetPower(1) > 0) {
        // phi' = i lam' lamc
        dots = m.jetPower(1);
        out.coeff *= ipow(dots);
        net -= dots;
    }
    if (m.t) parts.push_back(powText("t", m.t));
    if (dots) parts.push_back(powText("lam'", dots));
    if (net > 0) parts.push_back(powText("lam", net));
    if (net < 0) parts.push_back(powText("lamc", -net));
    for (size_t k = 0; k < m.jet.size(); ++k) {
        if (m.jet[k] == 0 || (dots && k == 1)) continue;
        parts.push_back(powText(jetName(k), m.jet[k]));
    }
    for (size_t i = 0; i < parts.size(); ++i) out.symbols += (i ? " " : "") + parts[i];
    return out;
}

namespace {

// Splits c into a sign and a printable magnitude.
std::pair<bool, std::string> coeffText(const Gauss& c, bool bare) {
    auto frac = [](const Rational& r) {
        return r.get_den() == 1 ? rationalStr(r) : "(" + rationalStr(r) + ")";
    };
    if (c.isReal()) {
        bool neg = sgn(c.re) < 0;
        Rational a = abs(c.re);
        if (a == 1 && !bare) return {neg, ""};
        return {neg, bare ? rationalStr(a) : frac(a)};
    }
    if (sgn(c.re) == 0) {
        bool neg = sgn(c.im) < 0;
        Rational a = abs(c.im);
        if (a == 1) return {neg, "i"};
        return {neg, frac(a) + " i"};
    }
    return {false, c.str()};
}

}  // namespace

std::string joinTerms(const std::vector<std::pair<Gauss, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, sym] : terms) {
        auto [neg, mag] = coeffText(c, sym.empty());
        std::string body = mag.empty() ? sym : (sym.empty() ? mag : mag + " " + sym);
        if (first) out += neg ? "-" + body : body;
        else out += (neg ? " - " : " + ") + body;
        first = false;
    }
    return out;
}

namespace {

std::string polyText(const CoeffPoly& p, bool lamDot) {
    std::vector<std::pair<Gauss, std::string>> items;
    for (const auto& [m, c] : p.terms()) {
        MonoText mt = monoText(c, m, lamDot);
        items.emplace_back(mt.coeff, mt.symbols);
    }
    return joinTerms(items);
}

}  // namespace

std::string CoeffPoly::str() const { return polyText(*this, false); }
std::string CoeffPoly::strLamDot() const { return polyText(*this, true); }

}  // namespace dsphere
