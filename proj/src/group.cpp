#include "p2g/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace p2g {

const Caps& default_caps() {
    static const Caps caps{};
    return caps;
}

namespace {

std::string triple_message(const char* what, Elem a, Elem b, Elem c) {
    std::ostringstream os;
    os << what << " at triple (" << a << ", " << b << ", " << c << ")";
    return os.str();
}

void check_latin(const std::vector<Elem>& table, int n) {
    std::vector<char> seen(n);
    for (int a = 0; a < n; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < n; ++b) {
            Elem v = table[static_cast<std::size_t>(a) * n + b];
            if (v < 0 || v >= n) throw InvalidInput("table entry out of range");
            if (seen[v]) throw InvalidInput("table row " + std::to_string(a) + " is not a permutation");
            seen[v] = 1;
        }
    }
    for (int b = 0; b < n; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < n; ++a) {
            Elem v = table[static_cast<std::size_t>(a) * n + b];
            if (seen[v]) throw InvalidInput("table column " + std::to_string(b) + " is not a permutation");
            seen[v] = 1;
        }
    }
}

void check_associative(const std::vector<Elem>& table, int n, Elem id) {
    auto mul = [&](Elem a, Elem b) { return table[static_cast<std::size_t>(a) * n + b]; };
    if (n <= FiniteGroup::kLightTestThreshold) {
        for (Elem a = 0; a < n; ++a)
            for (Elem b = 0; b < n; ++b) {
                Elem ab = mul(a, b);
                for (Elem c = 0; c < n; ++c)
                    if (mul(ab, c) != mul(a, mul(b, c)))
                        throw InvalidInput(triple_message("non-associative table", a, b, c));
            }
        return;
    }
    // Light's test on a generating set. The identity law is already known, so
    // magma closure of {id, gens} under the table reaching all of G suffices.
    std::vector<char> in(n, 0);
    std::vector<Elem> members;
    in[id] = 1;
    members.push_back(id);
    std::vector<Elem> gens;
    for (Elem x = 0; x < n && static_cast<int>(members.size()) < n; ++x) {
        if (in[x]) continue;
        gens.push_back(x);
        std::vector<Elem> frontier{x};
        in[x] = 1;
        members.push_back(x);
        while (!frontier.empty()) {
            std::vector<Elem> next;
            for (Elem f : frontier)
                for (std::size_t i = 0; i < members.size(); ++i) {
                    for (Elem p : {mul(f, members[i]), mul(members[i], f)})
                        if (!in[p]) {
                            in[p] = 1;
                            members.push_back(p);
                            next.push_back(p);
                        }
                }
            frontier = std::move(next);
        }
    }
    for (Elem g : gens)
        for (Elem x = 0; x < n; ++x) {
            Elem gx = mul(g, x);
            for (Elem y = 0; y < n; ++y)
                if (mul(gx, y) != mul(g, mul(x, y)))
                    throw InvalidInput(triple_message("non-associative table", g, x, y));
        }
}

}  // namespace

GroupPtr FiniteGroup::from_table(std::vector<Elem> table, Elem identity,
                                 std::vector<std::string> labels, std::string family_tag,
                                 const Caps& caps) {
    const auto n_sq = table.size();
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n_sq))));
    if (n <= 0 || static_cast<std::size_t>(n) * n != n_sq)
        throw InvalidInput("table is not square");
    if (n > caps.max_group_order)
        throw CapExceeded("group order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(caps.max_group_order));
    if (identity < 0 || identity >= n) throw InvalidInput("identity index out of range");
    if (!labels.empty() && static_cast<int>(labels.size()) != n)
        throw InvalidInput("labels size mismatch");

    auto mul = [&](Elem a, Elem b) { return table[static_cast<std::size_t>(a) * n + b]; };
    for (Elem x = 0; x < n; ++x)
        if (mul(identity, x) != x || mul(x, identity) != x)
            throw InvalidInput("identity law fails at element " + std::to_string(x));
    check_latin(table, n);
    check_associative(table, n, identity);

    auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
    g->order_ = n;
    g->identity_ = identity;
    g->table_ = std::move(table);
    g->labels_ = std::move(labels);
    g->family_tag_ = std::move(family_tag);

    g->inverse_.assign(n, 0);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (g->mul(a, b) == identity) {
                g->inverse_[a] = b;
                break;
            }

    g->elem_order_.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
        Elem x = a;
        int k = 1;
        while (x != identity) {
            x = g->mul(x, a);
            ++k;
        }
        g->elem_order_[a] = k;
    }

    g->class_id_.assign(n, -1);
    g->class_size_.assign(n, 0);
    int next_class = 0;
    for (Elem a = 0; a < n; ++a) {
        if (g->class_id_[a] >= 0) continue;
        std::vector<Elem> orbit;
        for (Elem h = 0; h < n; ++h) {
            Elem c = g->conjugate(h, a);
            if (g->class_id_[c] < 0) {
                g->class_id_[c] = next_class;
                orbit.push_back(c);
            }
        }
        for (Elem c : orbit) g->class_size_[c] = static_cast<int>(orbit.size());
        ++next_class;
    }

    g->abelian_ = true;
    for (Elem a = 0; a < n && g->abelian_; ++a)
        for (Elem b = a + 1; b < n; ++b)
            if (g->mul(a, b) != g->mul(b, a)) {
                g->abelian_ = false;
                break;
            }

    return g;
}

Elem FiniteGroup::power(Elem a, long long k) const {
    int ord = elem_order_[a];
    long long e = ((k % ord) + ord) % ord;
    Elem acc = identity_;
    for (long long i = 0; i < e; ++i) acc = mul(acc, a);
    return acc;
}

std::string FiniteGroup::label(Elem a) const {
    if (!labels_.empty()) return labels_[a];
    return "#" + std::to_string(a);
}

int FiniteGroup::compare(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_ ? -1 : 1;
    if (a.table_ != b.table_) return a.table_ < b.table_ ? -1 : 1;
    if (a.identity_ != b.identity_) return a.identity_ < b.identity_ ? -1 : 1;
    return 0;
}

GroupPtr trivial_group() {
    static const GroupPtr t = cyclic(1);
    return t;
}

GroupPtr cyclic(int n, const Caps& caps) {
    if (n < 1) throw InvalidInput("cyclic: n must be >= 1");
    std::vector<Elem> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    std::vector<std::string> labels(n);
    labels[0] = "e";
    for (int a = 1; a < n; ++a) labels[a] = a == 1 ? "g" : "g" + std::to_string(a);
    return FiniteGroup::from_table(std::move(table), 0, std::move(labels),
                                   "cyclic(" + std::to_string(n) + ")", caps);
}

GroupPtr dihedral(int n, const Caps& caps) {
    if (n < 2) throw InvalidInput("dihedral: n must be >= 2");
    // Elements: r^i for i<n at index i, then s r^i at index n+i, with
    // r^n = s^2 = e and s r = r^{-1} s.
    int m = 2 * n;
    auto idx = [&](int flip, int rot) { return flip * n + ((rot % n + n) % n); };
    std::vector<Elem> table(static_cast<std::size_t>(m) * m);
    for (int f1 = 0; f1 < 2; ++f1)
        for (int r1 = 0; r1 < n; ++r1)
            for (int f2 = 0; f2 < 2; ++f2)
                for (int r2 = 0; r2 < n; ++r2) {
                    // (s^f1 r^r1)(s^f2 r^r2) = s^{f1+f2} r^{(-1)^{f2} r1 + r2}
                    int f = (f1 + f2) % 2;
                    int r = (f2 ? -r1 : r1) + r2;
                    table[static_cast<std::size_t>(idx(f1, r1)) * m + idx(f2, r2)] = idx(f, r);
                }
    std::vector<std::string> labels(m);
    for (int r = 0; r < n; ++r) {
        labels[idx(0, r)] = r == 0 ? "e" : (r == 1 ? "r" : "r" + std::to_string(r));
        labels[idx(1, r)] = r == 0 ? "s" : (r == 1 ? "sr" : "sr" + std::to_string(r));
    }
    return FiniteGroup::from_table(std::move(table), 0, std::move(labels),
                                   "dihedral(" + std::to_string(n) + ")", caps);
}

std::vector<std::vector<int>> permutations_lex(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

GroupPtr symmetric(int n, const Caps& caps) {
    if (n < 0) throw InvalidInput("symmetric: n must be >= 0");
    if (n > caps.max_symmetric_n)
        throw CapExceeded("symmetric: n = " + std::to_string(n) + " exceeds cap " +
                          std::to_string(caps.max_symmetric_n));
    if (n <= 1) {
        std::vector<Elem> table{0};
        return FiniteGroup::from_table(std::move(table), 0, {"e"},
                                       "symmetric(" + std::to_string(n) + ")", caps);
    }
    auto perms = permutations_lex(n);
    int m = static_cast<int>(perms.size());
    if (m > caps.max_group_order)
        throw CapExceeded("symmetric(" + std::to_string(n) + ") order " + std::to_string(m) +
                          " exceeds cap " + std::to_string(caps.max_group_order));
    std::vector<Elem> table(static_cast<std::size_t>(m) * m);
    // index of a one-line permutation by Lehmer code
    auto index_of = [&](const std::vector<int>& q) {
        long long idx = 0;
        for (int i = 0; i < n; ++i) {
            int smaller = 0;
            for (int j = i + 1; j < n; ++j)
                if (q[j] < q[i]) ++smaller;
            long long fact = 1;
            for (int j = 2; j <= n - 1 - i; ++j) fact *= j;
            idx += smaller * fact;
        }
        return static_cast<Elem>(idx);
    };
    std::vector<int> comp(n);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
            table[static_cast<std::size_t>(a) * m + b] = index_of(comp);
        }
    std::vector<std::string> labels(m);
    for (int a = 0; a < m; ++a) {
        std::string s = "[";
        for (int i = 0; i < n; ++i) s += std::to_string(perms[a][i]);
        s += "]";
        labels[a] = s;
    }
    return FiniteGroup::from_table(std::move(table), 0, std::move(labels),
                                   "symmetric(" + std::to_string(n) + ")", caps);
}

std::vector<Elem> ProductShape::decode(Elem x) const {
    std::vector<Elem> t(factor_orders.size());
    for (int i = static_cast<int>(factor_orders.size()) - 1; i >= 0; --i) {
        t[i] = x % factor_orders[i];
        x /= factor_orders[i];
    }
    return t;
}

Elem ProductShape::encode(const std::vector<Elem>& tuple) const {
    Elem x = 0;
    for (std::size_t i = 0; i < factor_orders.size(); ++i)
        x = x * factor_orders[i] + tuple[i];
    return x;
}

GroupPtr direct_product(const std::vector<GroupPtr>& factors, const Caps& caps) {
    if (factors.empty()) return trivial_group();
    long long m = 1;
    ProductShape shape;
    for (const auto& f : factors) {
        shape.factor_orders.push_back(f->order());
        m *= f->order();
        if (m > caps.max_group_order)
            throw CapExceeded("direct product order exceeds cap " +
                              std::to_string(caps.max_group_order));
    }
    int n = static_cast<int>(m);
    std::vector<Elem> table(static_cast<std::size_t>(n) * n);
    for (Elem a = 0; a < n; ++a) {
        auto ta = shape.decode(a);
        for (Elem b = 0; b < n; ++b) {
            auto tb = shape.decode(b);
            std::vector<Elem> tc(factors.size());
            for (std::size_t i = 0; i < factors.size(); ++i) tc[i] = factors[i]->mul(ta[i], tb[i]);
            table[static_cast<std::size_t>(a) * n + b] = shape.encode(tc);
        }
    }
    std::vector<std::string> labels(n);
    for (Elem a = 0; a < n; ++a) {
        auto ta = shape.decode(a);
        std::string s = "(";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += ",";
            s += factors[i]->label(ta[i]);
        }
        s += ")";
        labels[a] = s;
    }
    std::string tag = "product(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) tag += ",";
        tag += factors[i]->family_tag().empty() ? ("order" + std::to_string(factors[i]->order()))
                                                : factors[i]->family_tag();
    }
    tag += ")";
    return FiniteGroup::from_table(std::move(table), 0, std::move(labels), std::move(tag), caps);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const Caps& caps) {
    return direct_product(std::vector<GroupPtr>{a, b}, caps);
}

std::vector<Elem> center(const FiniteGroup& g) {
    std::vector<Elem> z;
    for (Elem a = 0; a < g.order(); ++a) {
        bool central = true;
        for (Elem b = 0; b < g.order(); ++b)
            if (g.mul(a, b) != g.mul(b, a)) {
                central = false;
                break;
            }
        if (central) z.push_back(a);
    }
    return z;
}

Elem conjugate(const FiniteGroup& g, Elem a, Elem x) {
    if (a < 0 || a >= g.order() || x < 0 || x >= g.order())
        throw InvalidInput("conjugate: element index out of range");
    return g.conjugate(a, x);
}

std::vector<Elem> generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens) {
    std::vector<char> in(g.order(), 0);
    std::vector<Elem> members{g.identity()};
    in[g.identity()] = 1;
    std::vector<Elem> frontier = members;
    for (Elem x : gens)
        if (!in[x]) {
            in[x] = 1;
            members.push_back(x);
        }
    frontier = members;
    while (!frontier.empty()) {
        std::vector<Elem> next;
        for (Elem f : frontier)
            for (std::size_t i = 0; i < members.size(); ++i) {
                Elem p = g.mul(f, members[i]);
                Elem q = g.mul(members[i], f);
                for (Elem v : {p, q})
                    if (!in[v]) {
                        in[v] = 1;
                        members.push_back(v);
                        next.push_back(v);
                    }
            }
        frontier = std::move(next);
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<Elem> greedy_generators(const FiniteGroup& g) {
    std::vector<Elem> gens;
    std::vector<Elem> cur{g.identity()};
    for (Elem x = 0; x < g.order(); ++x) {
        if (static_cast<int>(cur.size()) == g.order()) break;
        if (std::binary_search(cur.begin(), cur.end(), x)) continue;
        gens.push_back(x);
        cur = generated_subgroup(g, gens);
    }
    return gens;
}

}  // namespace p2g
