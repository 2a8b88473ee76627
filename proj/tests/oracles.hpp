#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// a from-scratch bar differential over full (not normalization-compressed)
// tuple tables, a dumb automorphism counter that assigns images element by
// element, and a brute-force coboundary witness search driven by the naive
// differential.

#include "p2g/cochain.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace oracle {

using p2g::Cochain;
using p2g::Elem;
using p2g::FiniteGroup;
using p2g::GModule;

// A cochain as a plain map over all |G|^k tuples.
struct DenseCochain {
    int degree = 0;
    std::map<std::vector<Elem>, Elem> values;

    Elem at(const std::vector<Elem>& t) const { return values.at(t); }
};

inline void for_all_tuples(const FiniteGroup& g, int k,
                           const std::function<void(const std::vector<Elem>&)>& visit) {
    std::vector<Elem> t(k, 0);
    if (k == 0) {
        visit(t);
        return;
    }
    while (true) {
        visit(t);
        int i = k - 1;
        for (; i >= 0; --i) {
            if (++t[i] < g.order()) break;
            t[i] = 0;
        }
        if (i < 0) break;
    }
}

inline DenseCochain densify(const Cochain& c) {
    DenseCochain d;
    d.degree = c.degree();
    const auto& g = *c.module()->acting;
    for_all_tuples(g, c.degree(), [&](const std::vector<Elem>& t) {
        d.values[t] = c.value(std::span<const Elem>(t.data(), t.size()));
    });
    return d;
}

// (dc)(g1..g_{k+1}) = g1 . c(g2..) + sum_i (-1)^i c(.. g_i g_{i+1} ..)
//                     + (-1)^{k+1} c(g1..gk), evaluated literally.
inline DenseCochain naive_coboundary(const GModule& m, const DenseCochain& c) {
    const auto& g = *m.acting;
    const auto& a = *m.coeff;
    const int k = c.degree;
    DenseCochain d;
    d.degree = k + 1;
    for_all_tuples(g, k + 1, [&](const std::vector<Elem>& t) {
        Elem acc = m.act(t[0], c.at(std::vector<Elem>(t.begin() + 1, t.end())));
        int sign = 1;
        for (int i = 1; i <= k; ++i) {
            sign = -sign;
            std::vector<Elem> merged;
            merged.reserve(k);
            for (int j = 0; j < i - 1; ++j) merged.push_back(t[j]);
            merged.push_back(g.mul(t[i - 1], t[i]));
            for (int j = i + 1; j <= k; ++j) merged.push_back(t[j]);
            Elem term = c.at(merged);
            acc = a.mul(acc, sign < 0 ? a.inv(term) : term);
        }
        sign = -sign;
        Elem last = c.at(std::vector<Elem>(t.begin(), t.end() - 1));
        acc = a.mul(acc, sign < 0 ? a.inv(last) : last);
        d.values[t] = acc;
    });
    return d;
}

inline bool dense_is_zero(const GModule& m, const DenseCochain& d) {
    for (const auto& [t, v] : d.values)
        if (v != m.coeff->identity()) return false;
    return true;
}

// Brute-force witness search over all normalized (k-1)-cochains, using only
// the naive differential.
inline std::optional<DenseCochain> brute_force_witness(const GModule& m, const DenseCochain& z) {
    const auto& g = *m.acting;
    const int k = z.degree;
    std::vector<std::vector<Elem>> slots;  // non-identity tuples of length k-1
    for_all_tuples(g, k - 1, [&](const std::vector<Elem>& t) {
        for (Elem x : t)
            if (x == g.identity()) return;
        slots.push_back(t);
    });
    std::vector<Elem> vals(slots.size(), 0);
    while (true) {
        DenseCochain c;
        c.degree = k - 1;
        for_all_tuples(g, k - 1, [&](const std::vector<Elem>& t) {
            c.values[t] = m.coeff->identity();
        });
        for (std::size_t i = 0; i < slots.size(); ++i) c.values[slots[i]] = vals[i];
        DenseCochain dc = naive_coboundary(m, c);
        bool match = true;
        for (const auto& [t, v] : z.values)
            if (dc.values.at(t) != v) {
                match = false;
                break;
            }
        if (match) return c;
        std::size_t i = slots.size();
        while (i > 0) {
            --i;
            if (++vals[i] < m.coeff->order()) break;
            vals[i] = 0;
            if (i == 0) return std::nullopt;
        }
        if (slots.empty()) return std::nullopt;
    }
}

// Counts bijective homomorphisms dom -> cod by assigning images element by
// element in index order, checking every defined product along the way. No
// generating sets, no fingerprints.
inline long long dumb_isomorphism_count(const FiniteGroup& dom, const FiniteGroup& cod) {
    if (dom.order() != cod.order()) return 0;
    const int n = dom.order();
    std::vector<Elem> img(n, -1);
    std::vector<char> used(n, 0);
    img[dom.identity()] = cod.identity();
    used[cod.identity()] = 1;
    long long count = 0;

    std::function<void(Elem)> rec = [&](Elem x) {
        while (x < n && img[x] >= 0) ++x;
        if (x == n) {
            ++count;
            return;
        }
        for (Elem y = 0; y < n; ++y) {
            if (used[y] || cod.element_order(y) != dom.element_order(x)) continue;
            // tentatively assign and propagate products with defined elements
            std::vector<std::pair<Elem, Elem>> assigned;
            auto assign = [&](Elem d, Elem c) {
                if (img[d] >= 0) return img[d] == c;
                if (used[c]) return false;
                img[d] = c;
                used[c] = 1;
                assigned.emplace_back(d, c);
                return true;
            };
            bool ok = assign(x, y);
            for (std::size_t i = 0; ok && i < assigned.size(); ++i) {
                Elem d = assigned[i].first;
                for (Elem e = 0; e < n && ok; ++e) {
                    if (img[e] < 0) continue;
                    ok = assign(dom.mul(d, e), cod.mul(img[d], img[e])) &&
                         assign(dom.mul(e, d), cod.mul(img[e], img[d]));
                }
            }
            if (ok) rec(x + 1);
            for (auto it = assigned.rbegin(); it != assigned.rend(); ++it) {
                img[it->first] = -1;
                used[it->second] = 0;
            }
        }
    };
    rec(0);
    return count;
}

// The quaternion group {1,-1,i,-i,j,-j,k,-k} as an 8x8 table.
inline p2g::GroupPtr quaternion8() {
    // index: 1=0, -1=1, i=2, -i=3, j=4, -j=5, k=6, -k=7
    auto neg = [](Elem a) { return a < 2 ? (a ^ 1) : (a ^ 1); };
    auto mulq = [&](Elem a, Elem b) -> Elem {
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == 1) return neg(b);
        if (b == 1) return neg(a);
        bool sa = a & 1, sb = b & 1;  // sign bits
        int ua = (a | 1) - 1, ub = (b | 1) - 1;  // 2=i, 4=j, 6=k
        Elem r;
        if (ua == ub) r = 1;  // i*i = -1
        else if (ua == 2 && ub == 4) r = 6;    // ij = k
        else if (ua == 4 && ub == 2) r = 7;    // ji = -k
        else if (ua == 4 && ub == 6) r = 2;    // jk = i
        else if (ua == 6 && ub == 4) r = 3;    // kj = -i
        else if (ua == 6 && ub == 2) r = 4;    // ki = j
        else r = 5;                            // ik = -j
        if (sa != sb) r = neg(r);
        return r;
    };
    std::vector<Elem> table(64);
    for (Elem a = 0; a < 8; ++a)
        for (Elem b = 0; b < 8; ++b) table[a * 8 + b] = mulq(a, b);
    return p2g::FiniteGroup::from_table(std::move(table), 0,
                                        {"1", "-1", "i", "-i", "j", "-j", "k", "-k"}, "Q8");
}

// Dicyclic group of order 4n: <a, b | a^{2n} = e, b^2 = a^n, b a b^{-1} = a^{-1}>.
// dicyclic(2) is the quaternion group.
inline p2g::GroupPtr dicyclic(int n) {
    const int m = 4 * n;
    auto idx = [&](int i, int j) { return ((i % (2 * n)) + 2 * n) % (2 * n) + j * 2 * n; };
    std::vector<Elem> table(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2 * n; ++k)
                for (int l = 0; l < 2; ++l) {
                    int row = idx(i, j), col = idx(k, l);
                    Elem v;
                    if (j == 0)
                        v = idx(i + k, l);
                    else if (l == 0)
                        v = idx(i - k, 1);
                    else
                        v = idx(i - k + n, 0);
                    table[static_cast<std::size_t>(row) * m + col] = v;
                }
    return p2g::FiniteGroup::from_table(std::move(table), 0, {},
                                        "dicyclic(" + std::to_string(n) + ")");
}

// Semidihedral group of order 16: <r, s | r^8 = s^2 = e, s r s = r^3>.
inline p2g::GroupPtr semidihedral16() {
    const int m = 16;
    auto idx = [](int i, int j) { return ((i % 8) + 8) % 8 + j * 8; };
    std::vector<Elem> table(256);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 8; ++k)
                for (int l = 0; l < 2; ++l) {
                    // (r^i s^j)(r^k s^l): s r^k = r^{3k} s
                    Elem v = j == 0 ? idx(i + k, l) : idx(i + 3 * k, 1 ^ l);
                    table[static_cast<std::size_t>(idx(i, j)) * m + idx(k, l)] = v;
                }
    return p2g::FiniteGroup::from_table(std::move(table), 0, {}, "semidihedral(16)");
}

}  // namespace oracle
