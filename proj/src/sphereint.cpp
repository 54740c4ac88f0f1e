#include "dsphere/sphereint.hpp"

#include "dsphere/errors.hpp"

#include <array>
#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace dsphere {

void ChartForm::addTerm(const ChartKey& k, const Gauss& c) {
    if (c.isZero()) return;
    if (k.s >= 2) {
        // s^2 = 1 - c^2
        ChartKey k1 = k, k2 = k;
        k1.s -= 2;
        k2.s -= 2;
        k2.c += 2;
        addTerm(k1, c);
        addTerm(k2, -c);
        return;
    }
    if (k.w >= 2) {
        // w^2 = 1 - t^2
        ChartKey k1 = k, k2 = k;
        k1.w -= 2;
        k2.w -= 2;
        k2.coeff.t += 2;
        addTerm(k1, c);
        addTerm(k2, -c);
        return;
    }
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

ChartForm& ChartForm::operator+=(const ChartForm& o) {
    for (const auto& [k, c] : o.terms_) addTerm(k, c);
    return *this;
}

ChartForm operator*(const ChartForm& x, const ChartForm& y) {
    ChartForm r;
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_) {
            if (kx.word & ky.word) continue;
            // sign of moving each differential of y past the larger ones of x
            int swaps = 0;
            for (int j = 0; j < 4; ++j)
                if (ky.word & (1u << j)) swaps += std::popcount(static_cast<unsigned>(kx.word >> (j + 1)));
            ChartKey k;
            k.coeff = kx.coeff * ky.coeff;
            k.c = kx.c + ky.c;
            k.s = kx.s + ky.s;
            k.w = kx.w + ky.w;
            k.phaseA = kx.phaseA + ky.phaseA;
            k.phaseB = kx.phaseB + ky.phaseB;
            k.word = kx.word | ky.word;
            Gauss c = cx * cy;
            r.addTerm(k, swaps % 2 ? -c : c);
        }
    return r;
}

std::string ChartForm::str() const {
    static const char* names[4] = {"dt", "dpsi", "dalpha", "dbeta"};
    std::vector<std::pair<Gauss, std::string>> items;
    for (const auto& [k, c] : terms_) {
        MonoText mt = monoText(c, k.coeff, false);
        std::ostringstream os;
        os << mt.symbols;
        auto add = [&os](const std::string& s) { os << (os.tellp() > 0 ? " " : "") << s; };
        if (k.c) add(k.c == 1 ? "c" : "c^" + std::to_string(k.c));
        if (k.s) add("s");
        if (k.w) add(k.w == 1 ? "w" : "w^" + std::to_string(k.w));
        if (k.phaseA) add("e^(" + std::to_string(k.phaseA) + " i alpha)");
        if (k.phaseB) add("e^(" + std::to_string(k.phaseB) + " i beta)");
        for (int j = 0; j < 4; ++j)
            if (k.word & (1u << j)) add(names[j]);
        items.emplace_back(mt.coeff, os.str());
    }
    return joinTerms(items);
}

namespace {

ChartForm atom(const ChartKey& k, const Gauss& c = Gauss(1)) {
    ChartForm f;
    f.addTerm(k, c);
    return f;
}

ChartForm sum(std::initializer_list<ChartForm> xs) {
    ChartForm r;
    for (const auto& x : xs) r += x;
    return r;
}

// Pullback of the differential letters.
const ChartForm& letterPullback(int letter) {
    static const std::array<ChartForm, 5> forms = [] {
        auto key = [](int tp, int c, int s, int w, int pa, int pb, int word) {
            ChartKey k;
            k.coeff = CoeffMono::tPow(tp);
            k.c = c;
            k.s = s;
            k.w = w;
            k.phaseA = pa;
            k.phaseB = pb;
            k.word = static_cast<std::uint8_t>(word);
            return k;
        };
        const int dT = 1, dPsi = 2, dAl = 4, dBe = 8;
        const Gauss one(1), mone(-1), I(0, 1), mI(0, -1);
        ChartForm out[5];
        out[0] = atom(key(0, 0, 0, 0, 0, 0, dT));
        // da = w^{-1} e^{i al} (-t c dt - (1 - t^2) s dpsi + i (1 - t^2) c dal), da* is its conjugate
        for (int sgn : {1, -1}) {
            Gauss i = sgn > 0 ? I : mI;
            ChartForm f = sum({atom(key(1, 1, 0, -1, sgn, 0, dT), mone), atom(key(0, 0, 1, -1, sgn, 0, dPsi), mone),
                               atom(key(2, 0, 1, -1, sgn, 0, dPsi), one), atom(key(0, 1, 0, -1, sgn, 0, dAl), i),
                               atom(key(2, 1, 0, -1, sgn, 0, dAl), -i)});
            out[sgn > 0 ? 1 : 2] = f;
        }
        // db = w^{-1} e^{i be} (-t s dt + (1 - t^2) c dpsi + i (1 - t^2) s dbe)
        for (int sgn : {1, -1}) {
            Gauss i = sgn > 0 ? I : mI;
            ChartForm f = sum({atom(key(1, 0, 1, -1, 0, sgn, dT), mone), atom(key(0, 1, 0, -1, 0, sgn, dPsi), one),
                               atom(key(2, 1, 0, -1, 0, sgn, dPsi), mone), atom(key(0, 0, 1, -1, 0, sgn, dBe), i),
                               atom(key(2, 0, 1, -1, 0, sgn, dBe), -i)});
            out[sgn > 0 ? 3 : 4] = f;
        }
        return std::to_array(out);
    }();
    return forms[letter];
}

// Orientation: the volume form is positive on (dpsi, dt, dalpha, dbeta).
constexpr int kOrientation = -1;

using TPoly = std::map<int, Gauss>;

void polyAdd(TPoly& p, int n, const Gauss& c) {
    if (c.isZero()) return;
    auto [it, inserted] = p.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) p.erase(it);
    }
}

TPoly mulOneMinusT2(const TPoly& p, int k) {
    TPoly r = p;
    for (int i = 0; i < k; ++i) {
        TPoly n;
        for (const auto& [e, c] : r) {
            polyAdd(n, e, c);
            polyAdd(n, e + 2, -c);
        }
        r = std::move(n);
    }
    return r;
}

// exact division by (1 - t^2); returns false when there is a remainder
bool divOneMinusT2(TPoly& p) {
    TPoly q, rem = p;
    while (!rem.empty()) {
        auto top = std::prev(rem.end());
        int e = top->first;
        if (e < 2) return false;
        Gauss c = top->second;
        // c t^e = -c t^{e-2} (1 - t^2) + c t^{e-2}
        polyAdd(q, e - 2, -c);
        polyAdd(rem, e, -c);
        polyAdd(rem, e - 2, c);
    }
    p = std::move(q);
    return true;
}

Gauss polyIntegral(const TPoly& p) {
    Gauss r;
    for (const auto& [e, c] : p)
        if (e % 2 == 0) r += c * Gauss(ratio(2, e + 1));
    return r;
}

// Gamma(n/2) = r * sqrt(pi)^s
std::pair<Rational, int> gammaHalf(int n) {
    if (n <= 0) throw std::domain_error("Gamma at a non-positive argument");
    if (n % 2 == 0) {
        Rational r = 1;
        for (int k = 1; k < n / 2; ++k) r *= k;
        return {r, 0};
    }
    Rational r = 1;
    for (int k = 1; k < n; k += 2) r *= ratio(k, 2);
    return {r, 1};
}


// Lowered jet monomials: phi^(k) -> phi^(k-1), and lam^n phi' -> lam^n. Antiderivatives are
// searched among these.
std::vector<CoeffMono> lowerings(const CoeffMono& m) {
    std::vector<CoeffMono> out;
    for (size_t k = 1; k < m.jet.size(); ++k) {
        if (!m.jet[k]) continue;
        CoeffMono l = m;
        --l.jet[k];
        ++l.jet[k - 1];
        while (!l.jet.empty() && l.jet.back() == 0) l.jet.pop_back();
        out.push_back(l);
        if (k == 1 && m.lamNet() != 0) {
            CoeffMono r = m;
            --r.jet[1];
            while (!r.jet.empty() && r.jet.back() == 0) r.jet.pop_back();
            out.push_back(r);
        }
    }
    return out;
}

// Incremental row echelon over Q(i); column `rhs` is the right-hand side.
class Echelon {
public:
    explicit Echelon(int rhs) : rhs_(rhs) {}

    // false when the row reduces to 0 = nonzero
    bool add(std::map<int, Gauss> row) {
        while (true) {
            auto it = row.begin();
            if (it == row.end()) return true;
            if (it->first == rhs_) return false;
            auto piv = pivots_.find(it->first);
            if (piv == pivots_.end()) {
                Gauss inv = Gauss(1) / it->second;
                for (auto& [c, v] : row) v *= inv;
                pivots_.emplace(it->first, std::move(row));
                return true;
            }
            Gauss f = it->second;
            for (const auto& [c, v] : piv->second) {
                auto [jt, inserted] = row.try_emplace(c, -(f * v));
                if (!inserted) {
                    jt->second -= f * v;
                    if (jt->second.isZero()) row.erase(jt);
                }
            }
        }
    }

private:
    int rhs_;
    std::map<int, std::map<int, Gauss>> pivots_;
};

// True when sum_J q_J(t) J(t) = d/dt sum_J' P_J'(t) J'(t) with every P_J'(+-1) = 0, so the
// integral over [-1, 1] vanishes for every phi.
bool exactInT(const std::map<CoeffMono, TPoly>& integrand, const PhiSpec& phi) {
    std::set<CoeffMono> basis;
    int deg = 0;
    for (const auto& [m, q] : integrand) {
        basis.insert(m);
        deg = std::max(deg, q.rbegin()->first);
    }
    for (int round = 0; round < 2; ++round) {
        std::set<CoeffMono> next = basis;
        for (const auto& m : basis)
            for (const auto& l : lowerings(m))
                if (l != CoeffMono::one()) next.insert(l);
        basis = std::move(next);
    }
    const int top = deg + 3;
    std::map<std::pair<CoeffMono, int>, int> rowOf;
    auto rowIndex = [&rowOf](const CoeffMono& m) {
        auto key = std::make_pair(m.withoutT(), m.t);
        return rowOf.try_emplace(key, static_cast<int>(rowOf.size())).first->second;
    };
    std::vector<std::map<int, Gauss>> rows;
    auto entry = [&rows](int r, int c, const Gauss& v) {
        if (static_cast<size_t>(r) >= rows.size()) rows.resize(static_cast<size_t>(r) + 1);
        auto [it, inserted] = rows[static_cast<size_t>(r)].try_emplace(c, v);
        if (!inserted) {
            it->second += v;
            if (it->second.isZero()) rows[static_cast<size_t>(r)].erase(it);
        }
    };
    int col = 0;
    std::vector<std::map<int, Gauss>> boundary;
    for (const auto& m : basis) {
        std::map<int, Gauss> plus, minus;
        for (int j = 0; j <= top; ++j, ++col) {
            CoeffMono u = m;
            u.t = j;
            const CoeffPoly du = specialize(ddt(CoeffPoly(Gauss(1), u)), phi);
            for (const auto& [dm, dc] : du.terms()) entry(rowIndex(dm), col, dc);
            plus[col] = Gauss(1);
            minus[col] = Gauss(j % 2 ? -1 : 1);
        }
        boundary.push_back(plus);
        boundary.push_back(minus);
    }
    const int rhs = col;
    for (const auto& [m, q] : integrand)
        for (const auto& [e, c] : q) {
            CoeffMono u = m;
            u.t = e;
            entry(rowIndex(u), rhs, c);
        }
    Echelon ech(rhs);
    for (auto& b : boundary)
        if (!ech.add(std::move(b))) return false;
    for (auto& r : rows)
        if (!ech.add(std::move(r))) return false;
    return true;
}

}  // namespace

ChartForm etaPullback(const Form& x) {
    ChartForm out;
    for (const auto& [k, c] : x.terms()) {
        ChartForm word;
        word.addTerm(ChartKey{}, Gauss(1));
        for (int l : wordLetters(k.word)) word = word * letterPullback(l);
        const AlgMonomial& m = k.mono;
        ChartForm fn;
        for (const auto& [cm, cv] : c.terms()) {
            ChartKey key;
            key.coeff = cm;
            key.c = m.alpha + m.beta;
            key.s = m.gamma + m.delta;
            key.w = m.degree();
            key.phaseA = m.alpha - m.beta;
            key.phaseB = m.gamma - m.delta;
            fn.addTerm(key, cv);
        }
        out += word * fn;
    }
    return out;
}

MomentTable& MomentTable::shared() {
    static MomentTable table;
    return table;
}

Rational MomentTable::tMoment(int m, int j) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = t_.find({m, j});
    if (it != t_.end()) return it->second;
    Rational r = 0;
    if (m % 2 == 0) {
        mpz_class binom = 1;
        for (int i = 0; i <= j; ++i) {
            Rational term = ratio(binom * 2, m + 2 * i + 1);
            r += (i % 2 ? Rational(-term) : term);
            binom = binom * (j - i) / (i + 1);
        }
    }
    r.canonicalize();
    t_.emplace(std::make_pair(m, j), r);
    return r;
}

ExactValue MomentTable::psiMoment(int p, int q) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = psi_.find({p, q});
    if (it != psi_.end()) return it->second;
    auto [gp, sp] = gammaHalf(p + 1);
    auto [gq, sq] = gammaHalf(q + 1);
    auto [gs, ss] = gammaHalf(p + q + 2);
    int sqrtPi = sp + sq - ss;  // 0 or 2
    ExactValue v(Gauss(Rational(gp * gq / gs) / 2), sqrtPi / 2);
    psi_.emplace(std::make_pair(p, q), v);
    return v;
}

Rational MomentTable::sphereMoment(int m, int p, int q) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_tuple(m, p, q);
    auto it = sphere_.find(key);
    if (it != sphere_.end()) return it->second;
    Rational r = 0;
    if (m % 2 == 0) {
        // (t^2, |a|^2, |b|^2) is Dirichlet(1/2, 1, 1) distributed
        auto [g5, s5] = gammaHalf(5);
        auto [gm, sm] = gammaHalf(m + 1);
        auto [g1, s1] = gammaHalf(1);
        auto [gd, sd] = gammaHalf(5 + m + 2 * p + 2 * q);
        Rational fact = 1;
        for (int k = 2; k <= p; ++k) fact *= k;
        for (int k = 2; k <= q; ++k) fact *= k;
        r = g5 * gm * fact / (g1 * gd);
        (void)s5;
        (void)sm;
        (void)s1;
        (void)sd;
    }
    sphere_.emplace(key, r);
    return r;
}

ExactValue sphereVolume() { return ExactValue(Gauss(Rational(8, 3)), 2); }

ExactValue integrate4(const ChartForm& x, const PhiSpec& phi) {
    // group by (jet part of the coefficient, pi power from the psi integral)
    struct Group {
        std::map<int, TPoly> byW;  // w exponent -> polynomial in t
    };
    std::map<std::pair<CoeffMono, int>, Group> groups;
    MomentTable& table = MomentTable::shared();
    for (const auto& [k, c] : x.terms()) {
        if (k.word != 0xf) throw DegreeError("integration needs a 4-form");
        if (k.phaseA != 0 || k.phaseB != 0) continue;
        ExactValue pm = table.psiMoment(k.c, k.s);
        CoeffMono jet = k.coeff.withoutT();
        polyAdd(groups[{jet, pm.piPower}].byW[k.w], k.coeff.t, c * pm.coeff);
    }
    ExactValue total;
    std::map<int, std::map<CoeffMono, TPoly>> phiParts;  // pi power -> jet monomial -> t polynomial
    for (auto& [key, g] : groups) {
        const auto& [jet, piPow] = key;
        int wMin = g.byW.begin()->first;
        if (wMin % 2 != 0) throw DegreeError("odd power of sqrt(1 - t^2) after phase integration");
        TPoly q;
        for (const auto& [w, p] : g.byW) {
            if ((w - wMin) % 2 != 0) throw DegreeError("odd power of sqrt(1 - t^2) after phase integration");
            for (const auto& [e, c] : mulOneMinusT2(p, (w - wMin) / 2)) polyAdd(q, e, c);
        }
        if (q.empty()) continue;
        if (wMin < 0) {
            for (int i = 0; i < -wMin / 2; ++i)
                if (!divOneMinusT2(q)) throw DegreeError("integrand is singular at the poles");
        } else {
            q = mulOneMinusT2(q, wMin / 2);
        }
        if (jet != CoeffMono::one()) {
            for (const auto& [e, c] : q) polyAdd(phiParts[piPow][jet], e, c);
            continue;
        }
        Gauss v = polyIntegral(q);
        // (2 pi)^2 from the two phase circles
        total += ExactValue(v * Gauss(4 * kOrientation), piPow + 2);
    }
    for (auto& [piPow, parts] : phiParts) {
        for (auto it = parts.begin(); it != parts.end();) it = it->second.empty() ? parts.erase(it) : std::next(it);
        if (parts.empty() || exactInT(parts, phi)) continue;
        CoeffPoly residual;
        for (const auto& [m, q] : parts)
            for (const auto& [e, c] : q) {
                CoeffMono u = m;
                u.t = e;
                residual.addTerm(u, c);
            }
        throw LambdaResidualError("phi-dependent remainder after integration over the fibres: " + residual.str());
    }
    return total;
}

ExactValue integralOfForm(const Form& x, const PhiSpec& phi) {
    if (x.isZero()) return {};
    if (x.degree() != 4) throw DegreeError("integral is defined on 4-forms only");
    return integrate4(etaPullback(specialize(x, phi)), phi);
}

Form psiForm(const AlgElement& a0, const AlgElement& a1, const AlgElement& a2, const AlgElement& a3,
             const AlgElement& a4) {
    return Form(a0) * d(Form(a1)) * d(Form(a2)) * d(Form(a3)) * d(Form(a4));
}

ExactValue psi(const AlgElement& a0, const AlgElement& a1, const AlgElement& a2, const AlgElement& a3,
               const AlgElement& a4) {
    return integralOfForm(psiForm(a0, a1, a2, a3, a4));
}

}  // namespace dsphere
