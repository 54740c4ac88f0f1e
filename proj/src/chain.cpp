#include "dsphere/chain.hpp"

namespace dsphere {

namespace {

std::vector<std::vector<std::pair<SlotBasis, Gauss>>> expandSlots(const std::vector<AlgElement>& slots) {
    std::vector<std::vector<std::pair<SlotBasis, Gauss>>> out;
    for (const auto& x : slots) {
        std::vector<std::pair<SlotBasis, Gauss>> basis;
        for (const auto& [m, c] : x.terms())
            for (const auto& [cm, cv] : c.terms()) basis.push_back({{cm, m}, cv});
        out.push_back(std::move(basis));
    }
    return out;
}

void addProduct(Chain& out, const std::vector<AlgElement>& slots, const Gauss& scale) {
    auto basis = expandSlots(slots);
    for (const auto& b : basis)
        if (b.empty()) return;
    std::vector<size_t> idx(basis.size(), 0);
    while (true) {
        std::vector<SlotBasis> key;
        Gauss c = scale;
        for (size_t s = 0; s < basis.size(); ++s) {
            key.push_back(basis[s][idx[s]].first);
            c *= basis[s][idx[s]].second;
        }
        out.addTerm(key, c);
        size_t s = 0;
        while (s < basis.size() && ++idx[s] == basis[s].size()) idx[s++] = 0;
        if (s == basis.size()) break;
    }
}

}  // namespace

Chain Chain::tensor(const std::vector<AlgElement>& slots) {
    Chain c;
    addProduct(c, slots, Gauss(1));
    return c;
}

void Chain::addTerm(const std::vector<SlotBasis>& key, const Gauss& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

int Chain::degree() const {
    int deg = -2;
    for (const auto& [k, c] : terms_) {
        int n = static_cast<int>(k.size()) - 1;
        if (deg == -2) deg = n;
        else if (deg != n) return -1;
    }
    return deg == -2 ? -1 : deg;
}

Chain& Chain::operator+=(const Chain& o) {
    for (const auto& [k, c] : o.terms_) addTerm(k, c);
    return *this;
}

Chain& Chain::operator-=(const Chain& o) {
    for (const auto& [k, c] : o.terms_) addTerm(k, -c);
    return *this;
}

Chain operator*(const Gauss& c, const Chain& x) {
    Chain r;
    for (const auto& [k, v] : x.terms_) r.addTerm(k, c * v);
    return r;
}

Chain Chain::normalized() const {
    Chain r;
    for (const auto& [k, c] : terms_) {
        bool degenerate = false;
        for (size_t s = 1; s < k.size(); ++s) degenerate = degenerate || k[s].isUnit();
        if (!degenerate) r.addTerm(k, c);
    }
    return r;
}

std::string Chain::str() const {
    std::vector<std::pair<Gauss, std::string>> items;
    for (const auto& [k, c] : terms_) {
        std::string s;
        for (size_t i = 0; i < k.size(); ++i) {
            MonoText mt = monoText(Gauss(1), k[i].coeff, false);
            std::string slot = mt.symbols;
            if (!k[i].mono.isOne() || slot.empty()) slot += (slot.empty() ? "" : " ") + k[i].mono.str();
            s += (i ? " (x) " : "") + slot;
        }
        items.emplace_back(c, s);
    }
    return joinTerms(items);
}

Chain prependUnit(const Chain& x) {
    Chain r;
    for (const auto& [k, c] : x.terms()) {
        std::vector<SlotBasis> key{SlotBasis{}};
        key.insert(key.end(), k.begin(), k.end());
        r.addTerm(key, c);
    }
    return r;
}

Chain hochschildB(const Chain& x, Sphere sphere) {
    Chain r;
    auto mul = [sphere](const SlotBasis& p, const SlotBasis& q) {
        AlgElement prod = p.element() * q.element();
        return sphere == Sphere::S3 ? substituteT(prod, 0) : prod;
    };
    for (const auto& [k, c] : x.terms()) {
        size_t n = k.size() - 1;
        if (n == 0) continue;
        for (size_t i = 0; i < n; ++i) {
            std::vector<AlgElement> slots;
            for (size_t s = 0; s < i; ++s) slots.push_back(k[s].element());
            slots.push_back(mul(k[i], k[i + 1]));
            for (size_t s = i + 2; s <= n; ++s) slots.push_back(k[s].element());
            addProduct(r, slots, i % 2 ? -c : c);
        }
        std::vector<AlgElement> slots{mul(k[n], k[0])};
        for (size_t s = 1; s < n; ++s) slots.push_back(k[s].element());
        addProduct(r, slots, n % 2 ? -c : c);
    }
    return r;
}

Chain connesB(const Chain& x) {
    Chain r;
    const Chain nx = x.normalized();
    for (const auto& [k, c] : nx.terms()) {
        size_t n = k.size() - 1;
        for (size_t i = 0; i <= n; ++i) {
            std::vector<SlotBasis> key{SlotBasis{}};
            for (size_t s = 0; s <= n; ++s) key.push_back(k[(i + s) % (n + 1)]);
            r.addTerm(key, (n * i) % 2 ? -c : c);
        }
    }
    return r.normalized();
}

}  // namespace dsphere
