#include "dsphere/chern.hpp"

#include "dsphere/errors.hpp"
#include "dsphere/sphereint.hpp"

#include <sstream>
#include <stdexcept>

namespace dsphere {

namespace {

std::vector<std::pair<AlgElement, AlgElement>> chernPairs() {
    AlgElement b = AlgElement::b(), bs = AlgElement::bStar();
    AlgElement lb = CoeffPoly::lam() * bs, lcb = CoeffPoly::lamc() * b;
    return {{b, bs}, {-bs, b}, {lb, lcb}, {-lcb, CoeffPoly::lam() * bs}};
}

}  // namespace

Chain chernPairChain() {
    Chain c;
    for (const auto& [x, y] : chernPairs()) c += Chain::tensor({x, y});
    return c;
}

Chain ch1Chain() {
    Chain c;
    AlgElement t = AlgElement::t();
    for (const auto& [x, y] : chernPairs()) {
        c += Chain::tensor({t, x, y});
        c -= Chain::tensor({x, t, y});
        c += Chain::tensor({x, y, t});
    }
    return c;
}

ExactValue pairingCh2(const PhiSpec& phi) {
    ExactValue integral = integralOfForm(chernTopForm(), phi);
    return ExactValue(Gauss(Rational(-1, 8)), -2) * integral;
}

std::array<AlgElement, 4> unitaryU() {
    return {AlgElement::a(), AlgElement::b(), -(CoeffPoly::lam() * AlgElement::bStar()), AlgElement::aStar()};
}

namespace {

std::array<AlgElement, 4> adjoint(const std::array<AlgElement, 4>& u) {
    return {star(u[0]), star(u[2]), star(u[1]), star(u[3])};
}

std::array<AlgElement, 4> mul3(const std::array<AlgElement, 4>& x, const std::array<AlgElement, 4>& y) {
    std::array<AlgElement, 4> r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[2 * i + j] = substituteT(x[2 * i] * y[j] + x[2 * i + 1] * y[2 + j], 0);
    return r;
}

// Tr(x (x) y) = sum_{ij} x_ij (x) y_ji
Chain traceTensor(const std::array<AlgElement, 4>& x, const std::array<AlgElement, 4>& y) {
    Chain c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) c += Chain::tensor({x[2 * i + j], y[2 * j + i]});
    return c;
}

}  // namespace

bool unitaryCheck() {
    auto u = unitaryU(), us = adjoint(u);
    std::array<AlgElement, 4> id{AlgElement::one(), AlgElement(), AlgElement(), AlgElement::one()};
    return mul3(u, us) == id && mul3(us, u) == id;
}

Chain oddChernChain() {
    auto u = unitaryU(), us = adjoint(u);
    return traceTensor(u, us) - traceTensor(us, u);
}

// ---- disk calculus ----

void DiskFunction::addTerm(int m, int n, const CoeffPoly& c) {
    if (c.isZero()) return;
    int k = std::min(m, n);
    CoeffPoly cc = k ? CoeffPoly(Gauss(1), CoeffMono::tPow(k)) * c : c;
    auto [it, inserted] = terms_.try_emplace({m - k, n - k}, cc);
    if (!inserted) {
        it->second += cc;
        if (it->second.isZero()) terms_.erase(it);
    }
}

DiskFunction DiskFunction::fromAlg(const AlgElement& x) {
    DiskFunction f;
    for (const auto& [m, c] : x.terms()) {
        if (m.alpha || m.beta) throw std::invalid_argument("disk functions contain only b, b*: " + x.str());
        f.addTerm(m.gamma, m.delta, c);
    }
    return f;
}

DiskFunction DiskFunction::r() {
    DiskFunction f;
    f.addTerm(1, 1, CoeffPoly(1));
    return f;
}

DiskFunction& DiskFunction::operator+=(const DiskFunction& o) {
    for (const auto& [k, c] : o.terms_) addTerm(k.first, k.second, c);
    return *this;
}

DiskFunction& DiskFunction::operator-=(const DiskFunction& o) {
    for (const auto& [k, c] : o.terms_) addTerm(k.first, k.second, -c);
    return *this;
}

DiskFunction operator*(const DiskFunction& x, const DiskFunction& y) {
    DiskFunction r;
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_) r.addTerm(kx.first + ky.first, kx.second + ky.second, cx * cy);
    return r;
}

namespace {

std::string withR(const std::string& symbols) {
    std::istringstream in(symbols);
    std::string tok, out;
    while (in >> tok) {
        if (tok == "t" || tok.rfind("t^", 0) == 0) tok = "r" + tok.substr(1);
        out += (out.empty() ? "" : " ") + tok;
    }
    return out;
}

}  // namespace

std::string DiskFunction::str() const {
    std::vector<std::pair<Gauss, std::string>> items;
    for (const auto& [k, c] : terms_) {
        std::string mono;
        if (k.first) mono = k.first == 1 ? "b" : "b^" + std::to_string(k.first);
        if (k.second) mono = k.second == 1 ? "b*" : "b*^" + std::to_string(k.second);
        for (const auto& [cm, cv] : c.terms()) {
            MonoText mt = monoText(cv, cm, false);
            std::string s = withR(mt.symbols);
            if (!mono.empty()) s += (s.empty() ? "" : " ") + mono;
            items.emplace_back(mt.coeff, s);
        }
    }
    return joinTerms(items);
}

DiskForm& DiskForm::operator+=(const DiskForm& o) {
    db += o.db;
    dbStar += o.dbStar;
    return *this;
}

DiskForm operator*(const DiskFunction& f, const DiskForm& w) { return {f * w.db, f * w.dbStar}; }

std::string DiskForm::str() const {
    auto part = [](const DiskFunction& f, const std::string& diff) -> std::string {
        if (f.isZero()) return "";
        return "(" + f.str() + ") " + diff;
    };
    std::string x = part(db, "db"), y = part(dbStar, "db*");
    if (x.empty() && y.empty()) return "0";
    if (x.empty() || y.empty()) return x + y;
    return x + " + " + y;
}

DiskForm diskD(const DiskFunction& f) {
    DiskForm w;
    for (const auto& [k, c] : f.terms()) {
        auto [m, n] = k;
        // d c(r) = c'(r) (b* db + b db*)
        CoeffPoly dc = ddt(c);
        w.db.addTerm(m, n + 1, dc);
        w.dbStar.addTerm(m + 1, n, dc);
        if (m) w.db.addTerm(m - 1, n, CoeffPoly(m) * c);
        if (n) w.dbStar.addTerm(m, n - 1, CoeffPoly(n) * c);
    }
    return w;
}

DiskForm deRhamImage(const Chain& c) {
    DiskForm w;
    for (const auto& [k, g] : c.terms()) {
        if (k.size() != 2) throw DegreeError("de Rham image is defined here for degree-1 chains");
        DiskFunction a0 = DiskFunction::fromAlg(k[0].element());
        DiskFunction a1 = DiskFunction::fromAlg(k[1].element());
        DiskFunction scaled;
        scaled.addTerm(0, 0, CoeffPoly(g));
        w += (scaled * a0) * diskD(a1);
    }
    return w;
}

// ---- radial polynomials ----

void RadialPoly::addTerm(const RadialKey& k, const Gauss& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

RadialPoly& RadialPoly::operator+=(const RadialPoly& o) {
    for (const auto& [k, c] : o.terms_) addTerm(k, c);
    return *this;
}

RadialPoly operator*(const Gauss& c, const RadialPoly& x) {
    RadialPoly r;
    for (const auto& [k, v] : x.terms_) r.addTerm(k, c * v);
    return r;
}

namespace {

std::string fJetName(int order) {
    if (order == -1) return "F";
    if (order < -1) return "F^(" + std::to_string(order + 1) + ")";
    if (order <= 3) return "f" + std::string(order, '\'');
    return "f^(" + std::to_string(order) + ")";
}

std::string pw(const std::string& s, int e) { return e == 1 ? s : s + "^" + std::to_string(e); }

RadialKey mulKeys(RadialKey x, const RadialKey& y) {
    x.piPower += y.piPower;
    x.r += y.r;
    for (const auto& [o, e] : y.jet) x.jet[o] += e;
    return x;
}

RadialPoly mulRadial(const RadialPoly& x, const RadialPoly& y) {
    RadialPoly r;
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) r.addTerm(mulKeys(kx, ky), cx * cy);
    return r;
}

RadialPoly single(const RadialKey& k, const Gauss& c) {
    RadialPoly p;
    p.addTerm(k, c);
    return p;
}

// int r^m f^(order) dr = r^m f^(order-1) - m int r^{m-1} f^(order-1) dr
void byParts(RadialPoly& out, const Gauss& c, int pi, int m, int order) {
    RadialKey k{pi, m, {{order - 1, 1}}};
    out.addTerm(k, c);
    if (m) byParts(out, -c * Gauss(m), pi, m - 1, order - 1);
}

}  // namespace

std::string RadialPoly::str() const {
    std::vector<std::pair<Gauss, std::string>> items;
    for (const auto& [k, c] : terms_) {
        std::vector<std::string> parts;
        if (k.piPower) parts.push_back(pw("pi", k.piPower));
        if (k.r) parts.push_back(pw("r", k.r));
        for (const auto& [o, e] : k.jet) parts.push_back(pw(fJetName(o), e));
        std::string s;
        for (size_t i = 0; i < parts.size(); ++i) s += (i ? " " : "") + parts[i];
        items.emplace_back(c, s);
    }
    return joinTerms(items);
}

RadialPoly radialCoefficient(const DiskForm& w) {
    // w = h dr = h b* db + h b db*
    CoeffPoly h;
    for (const auto& [k, c] : w.dbStar.terms()) {
        if (k != std::pair{1, 0}) throw std::domain_error("form is not a multiple of d(b b*): " + w.str());
        h = c;
    }
    DiskFunction hb;
    hb.addTerm(0, 1, h);
    if (!(hb == w.db)) throw std::domain_error("form is not a multiple of d(b b*): " + w.str());

    // lam = exp(2 pi i f) means phi = -2 pi f
    RadialPoly out;
    for (const auto& [m, c] : h.terms()) {
        if (m.lam || m.lamc) throw LambdaResidualError("lam survives in the radial coefficient: " + h.str());
        RadialKey k{0, m.t, {}};
        Gauss coeff = c;
        for (size_t o = 0; o < m.jet.size(); ++o) {
            if (!m.jet[o]) continue;
            k.jet[static_cast<int>(o)] = m.jet[o];
            k.piPower += m.jet[o];
            for (int e = 0; e < m.jet[o]; ++e) coeff *= Gauss(-2);
        }
        out.addTerm(k, coeff);
    }
    return out;
}

RadialPoly radialDerivative(const RadialPoly& g) {
    RadialPoly out;
    for (const auto& [k, c] : g.terms()) {
        if (k.r) {
            RadialKey d = k;
            --d.r;
            out.addTerm(d, c * Gauss(k.r));
        }
        for (const auto& [o, e] : k.jet) {
            RadialKey d = k;
            if (--d.jet[o] == 0) d.jet.erase(o);
            ++d.jet[o + 1];
            out.addTerm(d, c * Gauss(e));
        }
    }
    return out;
}

RadialPoly radialPrimitive(const RadialPoly& h) {
    RadialPoly out;
    for (const auto& [k, c] : h.terms()) {
        if (k.jet.empty()) {
            out.addTerm({k.piPower, k.r + 1, {}}, c / Gauss(k.r + 1));
        } else if (k.jet.size() == 1 && k.jet.begin()->second == 1) {
            byParts(out, c, k.piPower, k.r, k.jet.begin()->first);
        } else {
            throw std::domain_error("no closed primitive for a term nonlinear in f: " + single(k, c).str());
        }
    }
    return out;
}

RadialPoly substituteF(const RadialPoly& h, const std::vector<Rational>& f) {
    // f^(order) as a polynomial in r; order -1 is the antiderivative vanishing at 0
    auto jetPoly = [&f](int order) {
        std::vector<Rational> c = f;
        for (; order < 0; ++order) {
            std::vector<Rational> up{Rational(0)};
            for (size_t j = 0; j < c.size(); ++j) up.push_back(c[j] / Rational(static_cast<long>(j + 1)));
            c = up;
        }
        for (; order > 0; --order) {
            std::vector<Rational> down;
            for (size_t j = 1; j < c.size(); ++j) down.push_back(c[j] * Rational(static_cast<long>(j)));
            c = down;
        }
        RadialPoly p;
        for (size_t j = 0; j < c.size(); ++j) p.addTerm({0, static_cast<int>(j), {}}, Gauss(c[j]));
        return p;
    };
    RadialPoly out;
    for (const auto& [k, c] : h.terms()) {
        RadialPoly term = single({k.piPower, k.r, {}}, c);
        for (const auto& [o, e] : k.jet)
            for (int i = 0; i < e; ++i) term = mulRadial(term, jetPoly(o));
        out += term;
    }
    return out;
}

MatsumotoResult matsumotoCh(const PhiSpec& fSpec) {
    MatsumotoResult res;
    res.chain = chernPairChain();
    res.chainFromU = oddChernChain();
    res.unitary = unitaryCheck();
    res.image = deRhamImage(res.chain);

    DiskFunction lam, lamc;
    lam.addTerm(0, 0, CoeffPoly::lam());
    lamc.addTerm(0, 0, CoeffPoly::lamc());
    DiskForm inner = lam * diskD(lamc);
    DiskForm second = lamc * diskD(lam);
    inner.db -= second.db;
    inner.dbStar -= second.dbStar;
    res.expectedImage = DiskFunction::r() * inner;

    // -1/(2 pi i) = i/(2 pi)
    RadialPoly h = radialCoefficient(res.image);
    RadialPoly scaled;
    for (const auto& [k, c] : h.terms()) {
        RadialKey kk = k;
        --kk.piPower;
        scaled.addTerm(kk, c * Gauss(0, Rational(1, 2)));
    }
    res.normalized = fSpec.formal ? scaled : substituteF(scaled, fSpec.poly);
    res.primitive = radialPrimitive(res.normalized);
    res.primitiveChecks = radialDerivative(res.primitive) == res.normalized;
    return res;
}

}  // namespace dsphere
