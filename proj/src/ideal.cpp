#include "dsphere/ideal.hpp"

#include "dsphere/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>

namespace dsphere {

Form relationR() {
    static const Form r = [] {
        Form out;
        out.addTerm(DiffWord(1u << kDaStar), {1, 0, 0, 0}, CoeffPoly(1));
        out.addTerm(DiffWord(1u << kDa), {0, 1, 0, 0}, CoeffPoly(1));
        out.addTerm(DiffWord(1u << kDbStar), {0, 0, 1, 0}, CoeffPoly(1));
        out.addTerm(DiffWord(1u << kDb), {0, 0, 0, 1}, CoeffPoly(1));
        out.addTerm(DiffWord(1u << kDt), {}, CoeffPoly(2) * CoeffPoly::t());
        return out;
    }();
    return r;
}

std::string IdealGenerator::str() const {
    MonoText mt = monoText(Gauss(1), coeff, false);
    std::string out = mt.symbols.empty() ? "" : mt.symbols + " ";
    if (left) out += "(" + wordStr(left) + ") ";
    out += "R";
    if (right) out += " (" + wordStr(right) + ")";
    if (!mono.isOne()) out += " " + mono.str();
    return out;
}

namespace {

Form wordForm(DiffWord w) { return Form::term(CoeffPoly(1), w, {}); }

Form generatorBase(DiffWord left, DiffWord right, const AlgMonomial& mono, const PhiSpec& phi) {
    Form f = wordForm(left) * relationR() * wordForm(right) * Form::term(CoeffPoly(1), 0, mono);
    return phi.formal ? f : specialize(f, phi);
}

}  // namespace

Form IdealCertificate::expand() const {
    Form sum;
    for (const auto& [c, g] : combination)
        sum += CoeffPoly(c, g.coeff) * generatorBase(g.left, g.right, g.mono, phi);
    return sum;
}

int defaultTruncationFromEnv(int fallback) {
    const char* v = std::getenv("DSPHERE_TRUNCATION");
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 0 || n > 64) throw ConfigError(std::string("bad DSPHERE_TRUNCATION value: ") + v);
    return static_cast<int>(n);
}

namespace {

using Key = std::uint64_t;
using SparseVec = std::vector<std::pair<Key, Gauss>>;  // keys strictly decreasing
using Combo = std::map<int, Gauss>;

class KeyCodec {
public:
    Key encode(const CoeffMono& c, DiffWord w, const AlgMonomial& m) {
        auto [it, inserted] = ids_.try_emplace(c, static_cast<Key>(ids_.size()));
        Key k = it->second;
        k = (k << 5) | w;
        k = (k << 8) | static_cast<Key>(m.alpha);
        k = (k << 8) | static_cast<Key>(m.beta);
        k = (k << 8) | static_cast<Key>(m.gamma);
        k = (k << 8) | static_cast<Key>(m.delta);
        return k;
    }

private:
    std::map<CoeffMono, Key> ids_;
};

SparseVec toSparse(const Form& f, const CoeffMono& shift, KeyCodec& codec) {
    SparseVec v;
    for (const auto& [k, c] : f.terms())
        for (const auto& [cm, cv] : c.terms()) v.emplace_back(codec.encode(cm * shift, k.word, k.mono), cv);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    // distinct terms of a canonical form map to distinct keys, so no merging is needed
    return v;
}

// v -= c * p
void axpy(SparseVec& v, const Gauss& c, const SparseVec& p) {
    SparseVec out;
    out.reserve(v.size() + p.size());
    size_t i = 0, j = 0;
    while (i < v.size() || j < p.size()) {
        if (j == p.size() || (i < v.size() && v[i].first > p[j].first)) {
            out.push_back(std::move(v[i++]));
        } else if (i == v.size() || p[j].first > v[i].first) {
            out.emplace_back(p[j].first, -(c * p[j].second));
            ++j;
        } else {
            Gauss s = v[i].second - c * p[j].second;
            if (!s.isZero()) out.emplace_back(v[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    v = std::move(out);
}

void comboAxpy(Combo& v, const Gauss& c, const Combo& p) {
    for (const auto& [g, x] : p) {
        auto [it, inserted] = v.try_emplace(g, -(c * x));
        if (!inserted) {
            it->second -= c * x;
            if (it->second.isZero()) v.erase(it);
        }
    }
}

struct Row {
    SparseVec vec;  // leading coefficient 1
    Combo combo;
};

class Echelon {
public:
    // Adds a spanning vector; returns false when it was dependent.
    bool insert(SparseVec v, Combo combo) {
        while (!v.empty()) {
            auto it = pivots_.find(v.front().first);
            if (it == pivots_.end()) break;
            Gauss c = v.front().second;
            const Row& r = rows_[it->second];
            axpy(v, c, r.vec);
            comboAxpy(combo, c, r.combo);
        }
        if (v.empty()) return false;
        Gauss lead = v.front().second;
        Gauss inv = Gauss(1) / lead;
        for (auto& e : v) e.second *= inv;
        for (auto& [g, x] : combo) x *= inv;
        pivots_.emplace(v.front().first, rows_.size());
        rows_.push_back({std::move(v), std::move(combo)});
        return true;
    }

    // Fully reduces v; returns the combination expressing the original v when it reduces to zero.
    std::optional<Combo> express(SparseVec v) const {
        Combo acc;
        size_t pos = 0;
        while (pos < v.size()) {
            auto it = pivots_.find(v[pos].first);
            if (it == pivots_.end()) {
                ++pos;
                continue;
            }
            Gauss c = v[pos].second;
            const Row& r = rows_[it->second];
            axpy(v, c, r.vec);
            // acc tracks v_original - v_current = sum c * row
            comboAxpy(acc, -c, r.combo);
        }
        if (!v.empty()) return std::nullopt;
        return acc;
    }

private:
    std::vector<Row> rows_;
    std::unordered_map<Key, size_t> pivots_;
};

std::vector<AlgMonomial> monomialsOfWeight(const Weight& w, int maxDeg) {
    std::vector<AlgMonomial> out;
    int base = std::abs(w.x) + std::abs(w.y);
    for (int k = 0; base + 2 * k <= maxDeg; ++k) {
        AlgMonomial m;
        if (w.x >= 0) m.alpha = w.x;
        else m.beta = -w.x;
        m.gamma = std::max(w.y, 0) + k;
        m.delta = std::max(-w.y, 0) + k;
        out.push_back(m);
    }
    return out;
}

std::vector<DiffWord> wordsOfDegree(int k) {
    std::vector<DiffWord> out;
    for (unsigned w = 0; w < 32; ++w)
        if (wordDegree(static_cast<DiffWord>(w)) == k) out.push_back(static_cast<DiffWord>(w));
    return out;
}

struct Attempt {
    bool member = false;
    std::vector<std::pair<Gauss, IdealGenerator>> combination;
    size_t generators = 0;
};

// One homogeneous component (fixed form degree and weight) at a fixed multiplier window.
Attempt tryComponent(const Form& x, int degree, const Weight& weight, int window, const PhiSpec& phi) {
    Attempt res;
    auto [lamLo, lamHi] = std::pair<int, int>{0, 0};
    std::set<CoeffMono> jets;
    jets.insert(CoeffMono::one());
    if (phi.formal) jets.insert(CoeffMono::phi(1));
    for (const auto& [k, c] : x.terms()) {
        auto [lo, hi] = c.lamRange();
        lamLo = std::min(lamLo, lo);
        lamHi = std::max(lamHi, hi);
        for (const auto& [cm, cv] : c.terms()) {
            CoeffMono j = cm;
            j.t = j.lam = j.lamc = 0;
            jets.insert(j);
            if (j.jetPower(1) > 0) {
                j.jet[1] -= 1;
                while (!j.jet.empty() && j.jet.back() == 0) j.jet.pop_back();
                jets.insert(j);
            }
        }
    }
    constexpr int kLamMargin = 2;

    KeyCodec codec;
    struct Candidate {
        IdealGenerator gen;
        SparseVec vec;
    };
    std::vector<Candidate> cands;
    for (int lk = 0; lk < degree; ++lk) {
        for (DiffWord left : wordsOfDegree(lk)) {
            for (DiffWord right : wordsOfDegree(degree - 1 - lk)) {
                Weight need = weight - wordWeight(left) - wordWeight(right);
                for (const AlgMonomial& m : monomialsOfWeight(need, window)) {
                    Form base = generatorBase(left, right, m, phi);
                    if (base.isZero()) continue;
                    for (int tp = 0; tp + m.degree() <= window; ++tp)
                        for (int lp = lamLo - kLamMargin; lp <= lamHi + kLamMargin; ++lp)
                            for (const CoeffMono& j : jets) {
                                CoeffMono shift = CoeffMono::tPow(tp) * CoeffMono::lamPow(lp) * j;
                                cands.push_back({{shift, left, right, m}, toSparse(base, shift, codec)});
                            }
                }
            }
        }
    }
    std::stable_sort(cands.begin(), cands.end(),
                     [](const Candidate& a, const Candidate& b) { return a.vec.size() < b.vec.size(); });
    res.generators = cands.size();

    Echelon ech;
    for (size_t i = 0; i < cands.size(); ++i) ech.insert(cands[i].vec, Combo{{static_cast<int>(i), Gauss(1)}});
    auto combo = ech.express(toSparse(x, CoeffMono::one(), codec));
    if (!combo) return res;
    res.member = true;
    for (const auto& [g, c] : *combo) res.combination.emplace_back(c, cands[g].gen);
    return res;
}

}  // namespace

MembershipResult idealMember(const Form& x, const IdealOptions& opts) {
    MembershipResult out;
    int deg = x.algDegree();
    int cap = opts.truncation ? *opts.truncation : deg + 6;
    if (cap < deg)
        throw ConfigError("truncation " + std::to_string(cap) + " is below the degree " + std::to_string(deg) +
                          " of the tested form");
    Form target = opts.phi.formal ? x : specialize(x, opts.phi);
    IdealCertificate cert{target, opts.phi, {}};
    if (target.isZero()) {
        out.member = true;
        out.certificate = cert;
        return out;
    }

    std::map<std::pair<int, Weight>, Form> parts;
    for (const auto& [k, c] : target.terms())
        parts[{wordDegree(k.word), wordWeight(k.word) + k.mono.weight()}].addTerm(k.word, k.mono, c);

    for (const auto& [key, part] : parts) {
        const auto& [degree, weight] = key;
        // degree 0 meets the ideal only in 0
        if (degree == 0) return out;
        bool found = false;
        int window = std::min(cap, deg + 2);
        while (true) {
            Attempt a = tryComponent(part, degree, weight, window, opts.phi);
            out.window = window;
            out.generators = a.generators;
            if (a.member) {
                cert.combination.insert(cert.combination.end(), a.combination.begin(), a.combination.end());
                found = true;
                break;
            }
            if (window >= cap) break;
            window = std::min(cap, window + 2);
        }
        if (!found) return out;
    }
    out.member = true;
    out.certificate = std::move(cert);
    return out;
}

bool equalMod(const Form& x, const Form& y, const IdealOptions& opts) {
    return idealMember(x - y, opts).member;
}

}  // namespace dsphere
