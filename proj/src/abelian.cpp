#include "p2g/abelian.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace p2g {

namespace {

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> fs;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            fs.emplace_back(p, e);
        }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

// Backtracking search for generators whose cyclic subgroups form an internal
// direct sum filling the whole group. Candidates are tried in decreasing
// element order, so the first solution found has invariant-factor shape.
bool extend_basis(const FiniteGroup& g, const std::vector<Elem>& by_order_desc,
                  std::vector<char>& span, int span_size, std::vector<Elem>& chosen) {
    if (span_size == g.order()) return true;
    for (Elem cand : by_order_desc) {
        if (span[cand]) continue;
        int ord = g.element_order(cand);
        if (static_cast<long long>(span_size) * ord > g.order()) continue;
        // <cand> meets the span trivially iff no prime-order power of cand lies in it.
        bool clean = true;
        for (auto [p, e] : factorize(ord))
            if (span[g.power(cand, ord / p)]) {
                clean = false;
                break;
            }
        if (!clean) continue;
        // Extend the span by <cand>.
        std::vector<Elem> new_members;
        for (Elem x = 0; x < g.order(); ++x) {
            if (!span[x]) continue;
            Elem acc = x;
            for (int k = 1; k < ord; ++k) {
                acc = g.mul(acc, cand);
                if (!span[acc]) {
                    span[acc] = 1;
                    new_members.push_back(acc);
                }
            }
        }
        chosen.push_back(cand);
        if (extend_basis(g, by_order_desc, span, span_size * ord, chosen)) return true;
        chosen.pop_back();
        for (Elem x : new_members) span[x] = 0;
    }
    return false;
}

}  // namespace

AbelianDecomposition decompose_abelian(const GroupPtr& g) {
    if (!g->is_abelian()) throw InvalidInput("decompose_abelian: group is not abelian");
    AbelianDecomposition dec;
    dec.group = g;

    std::vector<Elem> by_order_desc;
    for (Elem x = 0; x < g->order(); ++x)
        if (x != g->identity()) by_order_desc.push_back(x);
    std::stable_sort(by_order_desc.begin(), by_order_desc.end(), [&](Elem a, Elem b) {
        return g->element_order(a) > g->element_order(b);
    });

    std::vector<char> span(g->order(), 0);
    span[g->identity()] = 1;
    std::vector<Elem> chosen;
    if (!extend_basis(*g, by_order_desc, span, 1, chosen))
        throw std::logic_error("abelian group has no cyclic direct-sum basis");

    // Split each cyclic generator into prime-power cyclic factors.
    for (Elem c : chosen) {
        int ord = g->element_order(c);
        for (auto [p, e] : factorize(ord)) {
            long long pe = 1;
            for (int i = 0; i < e; ++i) pe *= p;
            dec.factors.push_back({p, e, pe, g->power(c, ord / pe)});
        }
    }
    std::stable_sort(dec.factors.begin(), dec.factors.end(),
                     [](const CyclicFactor& a, const CyclicFactor& b) {
                         if (a.prime != b.prime) return a.prime < b.prime;
                         return a.exp > b.exp;
                     });

    // Coordinate tables (also re-validates that the sum is direct).
    const int s = static_cast<int>(dec.factors.size());
    long long total = 1;
    for (const auto& f : dec.factors) total *= f.modulus;
    if (total != g->order()) throw std::logic_error("cyclic factors do not fill the group");
    dec.coords.assign(g->order(), {});
    dec.element_of_rank.assign(g->order(), -1);
    std::vector<long long> tuple(s, 0);
    for (long long rank = 0; rank < total; ++rank) {
        long long r = rank;
        for (int j = s - 1; j >= 0; --j) {
            tuple[j] = r % dec.factors[j].modulus;
            r /= dec.factors[j].modulus;
        }
        Elem x = g->identity();
        for (int j = 0; j < s; ++j)
            x = g->mul(x, g->power(dec.factors[j].generator, tuple[j]));
        if (!dec.coords[x].empty()) throw std::logic_error("cyclic factor sum is not direct");
        dec.coords[x] = tuple;
        dec.element_of_rank[rank] = x;
    }
    return dec;
}

Elem AbelianDecomposition::from_coords(const std::vector<long long>& c) const {
    long long rank = 0;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        long long v = ((c[j] % factors[j].modulus) + factors[j].modulus) % factors[j].modulus;
        rank = rank * factors[j].modulus + v;
    }
    return element_of_rank[rank];
}

std::string AbelianDecomposition::structure_string() const {
    if (factors.empty()) return "1";
    // Assemble invariant factors d_1 | d_2 | ... from the prime-power multiset.
    std::map<long long, std::vector<long long>> by_prime;  // prime -> moduli, descending
    for (const auto& f : factors) by_prime[f.prime].push_back(f.modulus);
    for (auto& [p, v] : by_prime) std::sort(v.begin(), v.end(), std::greater<>());
    std::size_t layers = 0;
    for (auto& [p, v] : by_prime) layers = std::max(layers, v.size());
    std::vector<long long> invariant(layers, 1);
    for (auto& [p, v] : by_prime)
        for (std::size_t i = 0; i < v.size(); ++i) invariant[i] *= v[i];
    std::sort(invariant.begin(), invariant.end());
    std::string s;
    for (std::size_t i = 0; i < invariant.size(); ++i) {
        if (i) s += " x ";
        s += "Z" + std::to_string(invariant[i]);
    }
    return s;
}

std::string abelian_structure_string(const GroupPtr& g) {
    if (g->order() == 1) return "1";
    return decompose_abelian(g).structure_string();
}

}  // namespace p2g
