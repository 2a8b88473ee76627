#include "p2g/autos.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace p2g {

bool GroupHom::is_bijective() const {
    if (domain->order() != codomain->order()) return false;
    std::vector<char> seen(codomain->order(), 0);
    for (Elem v : images) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

void GroupHom::validate() const {
    if (static_cast<int>(images.size()) != domain->order())
        throw InvalidInput("hom image array size mismatch");
    if (images[domain->identity()] != codomain->identity())
        throw InvalidInput("hom does not preserve identity");
    for (Elem x = 0; x < domain->order(); ++x)
        for (Elem y = 0; y < domain->order(); ++y)
            if (images[domain->mul(x, y)] != codomain->mul(images[x], images[y]))
                throw InvalidInput("homomorphism law fails at (" + std::to_string(x) + ", " +
                                   std::to_string(y) + ")");
}

namespace detail {

namespace {

struct SpanningTree {
    std::vector<Elem> order;    // BFS order, identity first
    std::vector<Elem> parent;   // x = parent[x] * gens[via[x]]
    std::vector<int> via;
};

SpanningTree build_tree(const FiniteGroup& g, const std::vector<Elem>& gens) {
    SpanningTree t;
    t.parent.assign(g.order(), -1);
    t.via.assign(g.order(), -1);
    std::vector<char> seen(g.order(), 0);
    seen[g.identity()] = 1;
    t.order.push_back(g.identity());
    for (std::size_t head = 0; head < t.order.size(); ++head) {
        Elem x = t.order[head];
        for (std::size_t i = 0; i < gens.size(); ++i) {
            Elem y = g.mul(x, gens[i]);
            if (!seen[y]) {
                seen[y] = 1;
                t.parent[y] = x;
                t.via[y] = static_cast<int>(i);
                t.order.push_back(y);
            }
        }
    }
    return t;
}

// Extends generator images along the tree and checks the homomorphism law
// against every (element, generator) pair, which suffices for a full check.
bool realize(const FiniteGroup& dom, const FiniteGroup& cod, const std::vector<Elem>& gens,
             const SpanningTree& tree, const std::vector<Elem>& gen_images,
             std::vector<Elem>& out_images) {
    out_images.assign(dom.order(), -1);
    out_images[dom.identity()] = cod.identity();
    for (Elem x : tree.order) {
        if (x == dom.identity()) continue;
        out_images[x] = cod.mul(out_images[tree.parent[x]], gen_images[tree.via[x]]);
    }
    for (Elem x = 0; x < dom.order(); ++x)
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (out_images[dom.mul(x, gens[i])] != cod.mul(out_images[x], gen_images[i]))
                return false;
    std::vector<char> seen(cod.order(), 0);
    for (Elem v : out_images) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace

void for_each_isomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                          const std::function<bool(const std::vector<Elem>&)>& emit) {
    if (dom.order() != cod.order()) return;
    if (dom.is_abelian() != cod.is_abelian()) return;

    // Fingerprint pre-check: element order / class size profiles must match.
    auto profile = [](const FiniteGroup& g) {
        std::vector<std::pair<int, int>> p(g.order());
        for (Elem x = 0; x < g.order(); ++x)
            p[x] = {g.element_order(x), g.conjugacy_class_size(x)};
        std::sort(p.begin(), p.end());
        return p;
    };
    if (profile(dom) != profile(cod)) return;

    auto gens = greedy_generators(dom);
    if (gens.empty()) {  // trivial group
        emit(std::vector<Elem>{cod.identity()});
        return;
    }
    auto tree = build_tree(dom, gens);

    std::vector<std::vector<Elem>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (Elem y = 0; y < cod.order(); ++y)
            if (cod.element_order(y) == dom.element_order(gens[i]) &&
                cod.conjugacy_class_size(y) == dom.conjugacy_class_size(gens[i]))
                candidates[i].push_back(y);

    std::vector<Elem> chosen(gens.size());
    std::vector<Elem> images;
    bool stop = false;
    std::function<void(std::size_t)> dfs = [&](std::size_t d) {
        if (stop) return;
        if (d == gens.size()) {
            if (realize(dom, cod, gens, tree, chosen, images))
                if (!emit(images)) stop = true;
            return;
        }
        for (Elem cand : candidates[d]) {
            bool ok = true;
            for (std::size_t i = 0; i < d && ok; ++i)
                ok = cod.element_order(cod.mul(chosen[i], cand)) ==
                     dom.element_order(dom.mul(gens[i], gens[d]));
            if (!ok) continue;
            chosen[d] = cand;
            dfs(d + 1);
            if (stop) return;
        }
    };
    dfs(0);
}

}  // namespace detail

std::vector<std::vector<Elem>> all_automorphism_images(const FiniteGroup& g) {
    std::vector<std::vector<Elem>> found;
    detail::for_each_isomorphism(g, g, [&](const std::vector<Elem>& images) {
        found.push_back(images);
        return true;
    });
    std::sort(found.begin(), found.end());
    return found;
}

std::optional<GroupHom> is_isomorphic(const GroupPtr& g, const GroupPtr& h) {
    std::optional<GroupHom> result;
    detail::for_each_isomorphism(*g, *h, [&](const std::vector<Elem>& images) {
        result = GroupHom{g, h, images};
        return false;
    });
    if (result) result->validate();
    return result;
}

Elem OuterStructure::inner_from(Elem g) const { return inner_index_of_[g]; }

std::vector<Elem> OuterStructure::conjugators_of(Elem aut_index) const {
    std::vector<Elem> gs;
    for (Elem g = 0; g < base->order(); ++g)
        if (inner_index_of_[g] == aut_index) gs.push_back(g);
    return gs;
}

std::vector<Elem> OuterStructure::outer_class_members(Elem out_index) const {
    std::vector<Elem> ms;
    for (Elem a = 0; a < aut->order(); ++a)
        if (projection[a] == out_index) ms.push_back(a);
    return ms;
}

OuterStructure automorphism_group(const GroupPtr& g, const Caps& caps) {
    OuterStructure os;
    os.base = g;
    os.aut_images = all_automorphism_images(*g);
    const int m = static_cast<int>(os.aut_images.size());
    if (m == 0 || os.aut_images[0] != [&] {
            std::vector<Elem> id(g->order());
            std::iota(id.begin(), id.end(), 0);
            return id;
        }())
        throw std::logic_error("automorphism enumeration lost the identity");

    // Compose via generator images: an automorphism is determined by where it
    // sends a generating set.
    auto gens = greedy_generators(*g);
    if (gens.empty()) gens.push_back(g->identity());
    auto key_of = [&](const std::vector<Elem>& images) {
        std::vector<Elem> k(gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) k[i] = images[gens[i]];
        return k;
    };
    std::map<std::vector<Elem>, Elem> index_by_key;
    for (Elem a = 0; a < m; ++a) index_by_key[key_of(os.aut_images[a])] = a;

    std::vector<Elem> table(static_cast<std::size_t>(m) * m);
    std::vector<Elem> k(gens.size());
    for (Elem a = 0; a < m; ++a)
        for (Elem b = 0; b < m; ++b) {
            for (std::size_t i = 0; i < gens.size(); ++i)
                k[i] = os.aut_images[a][os.aut_images[b][gens[i]]];
            auto it = index_by_key.find(k);
            if (it == index_by_key.end())
                throw std::logic_error("automorphism composition escaped the enumeration");
            table[static_cast<std::size_t>(a) * m + b] = it->second;
        }
    os.aut = FiniteGroup::from_table(std::move(table), 0, {}, "aut(" + g->family_tag() + ")",
                                     caps);

    // Inner automorphisms.
    os.inner_index_of_.assign(g->order(), 0);
    for (Elem h = 0; h < g->order(); ++h) {
        for (std::size_t i = 0; i < gens.size(); ++i) k[i] = g->conjugate(h, gens[i]);
        auto it = index_by_key.find(k);
        if (it == index_by_key.end()) throw std::logic_error("inner automorphism not enumerated");
        os.inner_index_of_[h] = it->second;
    }
    os.inn = os.inner_index_of_;
    std::sort(os.inn.begin(), os.inn.end());
    os.inn.erase(std::unique(os.inn.begin(), os.inn.end()), os.inn.end());

    // Outer classes a * Inn, labelled in order of least member.
    os.projection.assign(m, -1);
    for (Elem a = 0; a < m; ++a) {
        if (os.projection[a] >= 0) continue;
        Elem cls = static_cast<Elem>(os.section.size());
        os.section.push_back(a);
        for (Elem i : os.inn) os.projection[os.aut->mul(a, i)] = cls;
    }
    const int q = static_cast<int>(os.section.size());
    if (m != static_cast<int>(os.inn.size()) * q)
        throw std::logic_error("|Aut| != |Inn| * |Out|");

    std::vector<Elem> out_table(static_cast<std::size_t>(q) * q);
    for (Elem o1 = 0; o1 < q; ++o1)
        for (Elem o2 = 0; o2 < q; ++o2)
            out_table[static_cast<std::size_t>(o1) * q + o2] =
                os.projection[os.aut->mul(os.section[o1], os.section[o2])];
    os.out = FiniteGroup::from_table(std::move(out_table), 0, {}, "out(" + g->family_tag() + ")",
                                     caps);

    // Conjugator witness t: least g with phi = c_g o s[p(phi)].
    os.conjugator.assign(m, -1);
    for (Elem a = 0; a < m; ++a) {
        Elem rep = os.section[os.projection[a]];
        Elem chi = os.aut->mul(a, os.aut->inv(rep));  // inner by construction
        for (Elem h = 0; h < g->order(); ++h)
            if (os.inner_index_of_[h] == chi) {
                os.conjugator[a] = h;
                break;
            }
        if (os.conjugator[a] < 0) throw std::logic_error("no conjugator witness found");
    }

    // Epinglage sanity: t(s[o]) = e and phi = c_{t(phi)} o s[p(phi)].
    for (Elem o = 0; o < q; ++o) {
        if (os.projection[os.section[o]] != o) throw std::logic_error("section law violated");
        if (os.conjugator[os.section[o]] != g->identity())
            throw std::logic_error("conjugator not normalized on the section");
    }
    for (Elem a = 0; a < m; ++a) {
        Elem expect = os.aut->mul(os.inner_index_of_[os.conjugator[a]],
                                  os.section[os.projection[a]]);
        if (expect != a) throw std::logic_error("epinglage identity violated");
    }
    return os;
}

Elem inner_from(const OuterStructure& outer, Elem g) { return outer.inner_from(g); }

}  // namespace p2g
