#include "dsphere/forms.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace dsphere {

namespace {

const Weight kLetterWeights[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

AlgMonomial algLetter(int k) {
    AlgMonomial m;
    if (k == 0) m.alpha = 1;
    else if (k == 1) m.beta = 1;
    else if (k == 2) m.gamma = 1;
    else m.delta = 1;
    return m;
}

CoeffPoly lamPow(int n) { return CoeffPoly(Gauss(1), CoeffMono::lamPow(n)); }

// (1/2) B for A = lam^n, with B = n lam' lamc = -i n phi'
CoeffPoly halfB(int n) { return CoeffPoly(Gauss(0, ratio(-n, 2)), CoeffMono::phi(1)); }

struct Moved {
    CoeffPoly coeff;
    std::vector<int> seq;
    int extra;  // algebra letter appended after X, or -1
};

// X * seq = sum coeff * seq' * X * extra, for X homogeneous of weight wt.
// At most one correction survives since it introduces dt.
std::vector<Moved> moveAlgPast(const Weight& wt, const std::vector<int>& seq) {
    std::vector<Moved> out;
    int n = 0;
    for (int l : seq) n += omega(wt, diffWeight(l));
    out.push_back({lamPow(n), seq, -1});
    if (std::find(seq.begin(), seq.end(), kDt) != seq.end()) return out;
    for (size_t p = 0; p < seq.size(); ++p) {
        int nb = omega(wt, diffWeight(seq[p]));
        if (nb == 0) continue;
        int n1 = 0, n2 = 0;
        for (size_t q = 0; q < p; ++q) n1 += omega(wt, diffWeight(seq[q]));
        Weight w2 = wt + diffWeight(seq[p]);
        for (size_t q = p + 1; q < seq.size(); ++q) n2 += omega(w2, diffWeight(seq[q]));
        std::vector<int> ns = seq;
        ns[p] = kDt;
        out.push_back({lamPow(n1 + n2) * halfB(nb), std::move(ns), seq[p] - 1});
    }
    return out;
}

std::uint64_t seqKey(const std::vector<int>& s) {
    std::uint64_t k = s.size();
    for (int l : s) k = k * 8 + static_cast<std::uint64_t>(l);
    return k;
}

Form computeSortSeq(const std::vector<int>& seq) {
    for (size_t p = 0; p + 1 < seq.size(); ++p)
        if (seq[p] == seq[p + 1]) return {};
    for (size_t p = 0; p + 1 < seq.size(); ++p) {
        int i = seq[p], j = seq[p + 1];
        if (i <= j) continue;
        std::vector<int> sw = seq;
        std::swap(sw[p], sw[p + 1]);
        if (j == kDt) return -sortSeq(sw);
        int n = omega(diffWeight(i), diffWeight(j));
        Form res = (-lamPow(n)) * sortSeq(sw);
        if (n == 0) return res;
        // dx^i dx^j = -A dx^j dx^i + (1/2) B A dt dx^j x^i - (1/2) B dt dx^i x^j
        struct Corr {
            CoeffPoly c;
            int x;
            int y;
        };
        const Corr corrections[2] = {{halfB(n) * lamPow(n), i - 1, j}, {-halfB(n), j - 1, i}};
        std::vector<int> tail(seq.begin() + static_cast<long>(p) + 2, seq.end());
        for (const Corr& corr : corrections) {
            for (const Moved& mv : moveAlgPast(kLetterWeights[corr.x], tail)) {
                AlgElement alg = AlgElement::monomial(algLetter(corr.x));
                if (mv.extra >= 0) alg = alg * AlgElement::monomial(algLetter(mv.extra));
                std::vector<int> head(seq.begin(), seq.begin() + static_cast<long>(p));
                head.push_back(kDt);
                head.push_back(corr.y);
                head.insert(head.end(), mv.seq.begin(), mv.seq.end());
                res += (corr.c * mv.coeff) * mulRight(sortSeq(head), alg);
            }
        }
        return res;
    }
    DiffWord w = 0;
    for (int l : seq) w |= DiffWord(1u << l);
    return Form::term(CoeffPoly(1), w, {});
}

Form mulTerms(const FormKey& k1, const CoeffPoly& c1, const FormKey& k2, const CoeffPoly& c2) {
    Form res;
    std::vector<int> w1 = wordLetters(k1.word);
    for (const Moved& mv : moveAlgPast(k1.mono.weight(), wordLetters(k2.word))) {
        AlgElement alg = AlgElement::monomial(k1.mono);
        if (mv.extra >= 0) alg = alg * AlgElement::monomial(algLetter(mv.extra));
        alg = alg * AlgElement::monomial(k2.mono);
        std::vector<int> seq = w1;
        seq.insert(seq.end(), mv.seq.begin(), mv.seq.end());
        res += (c1 * c2 * mv.coeff) * mulRight(sortSeq(seq), alg);
    }
    return res;
}

// d of a reduced monomial, as a canonical form
Form dMonomial(const AlgMonomial& m) {
    std::vector<int> letters;
    for (int k = 0; k < m.alpha; ++k) letters.push_back(0);
    for (int k = 0; k < m.beta; ++k) letters.push_back(1);
    for (int k = 0; k < m.gamma; ++k) letters.push_back(2);
    for (int k = 0; k < m.delta; ++k) letters.push_back(3);
    Form res;
    Weight pre;
    int bSum = 0;
    for (int l : letters) {
        AlgMonomial rest = m;
        if (l == 0) rest.alpha--;
        else if (l == 1) rest.beta--;
        else if (l == 2) rest.gamma--;
        else rest.delta--;
        int n = omega(pre, kLetterWeights[l]);
        res.addTerm(DiffWord(1u << (l + 1)), rest, lamPow(n));
        bSum += n;
        pre = pre + kLetterWeights[l];
    }
    if (bSum != 0) res.addTerm(DiffWord(1u << kDt), m, halfB(bSum));
    return res;
}

}  // namespace

Weight diffWeight(int letter) {
    return letter == kDt ? Weight{} : kLetterWeights[letter - 1];
}

const char* diffName(int letter) {
    static const char* names[5] = {"dt", "da", "da*", "db", "db*"};
    return names[letter];
}

int wordDegree(DiffWord w) { return std::popcount(static_cast<unsigned>(w)); }

Weight wordWeight(DiffWord w) {
    Weight r;
    for (int l : wordLetters(w)) r = r + diffWeight(l);
    return r;
}

std::vector<int> wordLetters(DiffWord w) {
    std::vector<int> out;
    for (int l = 0; l < 5; ++l)
        if (w & (1u << l)) out.push_back(l);
    return out;
}

std::string wordStr(DiffWord w) {
    std::string out;
    for (int l : wordLetters(w)) out += (out.empty() ? "" : " ") + std::string(diffName(l));
    return out;
}

Form::Form(const AlgElement& x) {
    for (const auto& [m, c] : x.terms()) terms_.emplace(FormKey{0, m}, c);
}

Form Form::term(const CoeffPoly& c, DiffWord w, const AlgMonomial& m) {
    Form f;
    AlgElement reduced = AlgElement::monomial(m);
    for (const auto& [mm, cm] : reduced.terms()) f.addTerm(w, mm, c * cm);
    return f;
}

void Form::addTerm(DiffWord w, const AlgMonomial& m, const CoeffPoly& c) {
    if (c.isZero()) return;
    if (!m.isReduced()) throw std::invalid_argument("Form term must carry a reduced monomial");
    auto [it, inserted] = terms_.try_emplace(FormKey{w, m}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

int Form::degree() const {
    int deg = -2;
    for (const auto& [k, c] : terms_) {
        int dk = wordDegree(k.word);
        if (deg == -2) deg = dk;
        else if (deg != dk) return -1;
    }
    return deg == -2 ? 0 : deg;
}

int Form::algDegree() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.mono.degree() + c.tDegree());
    return d;
}

std::map<Weight, Form> Form::byWeight() const {
    std::map<Weight, Form> out;
    for (const auto& [k, c] : terms_) out[wordWeight(k.word) + k.mono.weight()].addTerm(k.word, k.mono, c);
    return out;
}

AlgElement Form::toAlg() const {
    AlgElement r;
    for (const auto& [k, c] : terms_) {
        if (k.word != 0) throw std::domain_error("form of positive degree where an algebra element was expected");
        r.addTerm(k.mono, c);
    }
    return r;
}

Form Form::operator-() const {
    Form r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

Form& Form::operator+=(const Form& o) {
    for (const auto& [k, c] : o.terms_) addTerm(k.word, k.mono, c);
    return *this;
}

Form& Form::operator-=(const Form& o) {
    for (const auto& [k, c] : o.terms_) addTerm(k.word, k.mono, -c);
    return *this;
}

Form operator*(const Form& x, const Form& y) {
    Form r;
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_) r += mulTerms(kx, cx, ky, cy);
    return r;
}

Form operator*(const CoeffPoly& c, const Form& x) {
    Form r;
    if (c.isZero()) return r;
    for (const auto& [k, cx] : x.terms_) r.addTerm(k.word, k.mono, c * cx);
    return r;
}

Form Form::pow(int n) const {
    if (n < 0) throw std::invalid_argument("negative power of a form");
    Form r(CoeffPoly(1));
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

namespace {

std::string formText(const Form::Terms& terms, bool lamDot) {
    struct Item {
        bool hasDt;
        std::vector<int> letters;
        AlgMonomial mono;
        CoeffMono cm;
        Gauss coeff;
        std::string sym;
    };
    std::vector<Item> items;
    for (const auto& [k, c] : terms) {
        for (const auto& [cm, cv] : c.terms()) {
            MonoText mt = monoText(cv, cm, lamDot);
            std::string sym = mt.symbols;
            std::string ws = wordStr(k.word);
            if (!ws.empty()) sym += (sym.empty() ? "" : " ") + ws;
            if (!k.mono.isOne()) sym += (sym.empty() ? "" : " ") + k.mono.str();
            items.push_back({(k.word & 1u) != 0, wordLetters(k.word), k.mono, cm, mt.coeff, sym});
        }
    }
    std::stable_sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
        return std::tie(x.hasDt, x.letters, x.mono, x.cm) < std::tie(y.hasDt, y.letters, y.mono, y.cm);
    });
    std::vector<std::pair<Gauss, std::string>> out;
    for (auto& it : items) out.emplace_back(it.coeff, it.sym);
    return joinTerms(out);
}

}  // namespace

std::string Form::str() const { return formText(terms_, false); }
std::string Form::strLamDot() const { return formText(terms_, true); }

const Form& sortSeq(const std::vector<int>& letters) {
    thread_local std::unordered_map<std::uint64_t, Form> cache;
    std::uint64_t key = seqKey(letters);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Form f = computeSortSeq(letters);
    return cache.emplace(key, std::move(f)).first->second;
}

Form mulRight(const Form& x, const AlgElement& m) {
    Form r;
    for (const auto& [k, c] : x.terms()) {
        AlgElement prod = AlgElement(c, k.mono) * m;
        for (const auto& [mm, cm] : prod.terms()) r.addTerm(k.word, mm, cm);
    }
    return r;
}

Form d(const Form& x) {
    Form res;
    for (const auto& [k, c] : x.terms()) {
        if (!(k.word & 1u)) {
            CoeffPoly dc = ddt(c);
            if (!dc.isZero()) res.addTerm(DiffWord(k.word | 1u), k.mono, dc);
        }
        if (k.mono.isOne()) continue;
        std::vector<int> w = wordLetters(k.word);
        CoeffPoly sc = (w.size() % 2 == 0) ? c : -c;
        Form dm = dMonomial(k.mono);
        for (const auto& [k2, c2] : dm.terms()) {
            std::vector<int> seq = w;
            for (int l : wordLetters(k2.word)) seq.push_back(l);
            res += (sc * c2) * mulRight(sortSeq(seq), AlgElement::monomial(k2.mono));
        }
    }
    return res;
}

Form star(const Form& x) {
    Form res;
    for (const auto& [k, c] : x.terms()) {
        std::vector<int> letters = wordLetters(k.word);
        std::reverse(letters.begin(), letters.end());
        for (int& l : letters) {
            if (l == kDa) l = kDaStar;
            else if (l == kDaStar) l = kDa;
            else if (l == kDb) l = kDbStar;
            else if (l == kDbStar) l = kDb;
        }
        int n = static_cast<int>(letters.size());
        CoeffPoly sc = ((n * (n - 1) / 2) % 2 == 0) ? c.conj() : -c.conj();
        res += sc * (Form(star(AlgElement(CoeffPoly(1), k.mono))) * sortSeq(letters));
    }
    return res;
}

Form specialize(const Form& x, const PhiSpec& spec) {
    Form r;
    for (const auto& [k, c] : x.terms()) r.addTerm(k.word, k.mono, specialize(c, spec));
    return r;
}

Form substituteT(const Form& x, const Rational& value) {
    Form r;
    for (const auto& [k, c] : x.terms()) r.addTerm(k.word, k.mono, substituteT(c, value));
    return r;
}

Form normalizeForm(const RawForm& raw) {
    switch (raw.op) {
        case RawForm::Op::Leaf: return raw.leaf;
        case RawForm::Op::Sum: {
            Form r;
            for (const auto& a : raw.args) r += normalizeForm(a);
            return r;
        }
        case RawForm::Op::Product: {
            Form r(CoeffPoly(1));
            for (const auto& a : raw.args) r = r * normalizeForm(a);
            return r;
        }
    }
    return {};
}

Form volumeForm() {
    static const Form omegaForm = [] {
        Form da = Form::diff(kDa), das = Form::diff(kDaStar), db = Form::diff(kDb), dbs = Form::diff(kDbStar);
        Form dt = Form::dt();
        Form t(AlgElement::t()), a(AlgElement::a()), bs(AlgElement::bStar());
        Form sum = t * da * das * db * dbs - CoeffPoly(2) * (a * dt * das * db * dbs) +
                   CoeffPoly(2) * (dt * da * das * db * bs);
        return CoeffPoly(Rational(1, 4)) * sum;
    }();
    return omegaForm;
}

}  // namespace dsphere
