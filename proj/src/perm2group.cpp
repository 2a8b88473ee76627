#include "p2g/perm2group.hpp"

#include <algorithm>
#include <random>

namespace p2g {

namespace {

// Z(G) as its own table group, reindexed over the sorted center elements.
GroupPtr center_group(const FiniteGroup& g, const std::vector<Elem>& z, const Caps& caps) {
    const int m = static_cast<int>(z.size());
    std::vector<Elem> back(g.order(), -1);
    for (int i = 0; i < m; ++i) back[z[i]] = i;
    std::vector<Elem> table(static_cast<std::size_t>(m) * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Elem p = g.mul(z[i], z[j]);
            if (back[p] < 0) throw std::logic_error("center is not closed under product");
            table[static_cast<std::size_t>(i) * m + j] = back[p];
        }
    std::vector<std::string> labels(m);
    for (int i = 0; i < m; ++i) labels[i] = g.label(z[i]);
    return FiniteGroup::from_table(std::move(table), back[g.identity()], std::move(labels),
                                   "center(" + g.family_tag() + ")", caps);
}

}  // namespace

Cochain classifying_cocycle_with(const SymPresentation& sp, const std::vector<Elem>& section,
                                 const std::vector<Elem>& conjugator, const Caps& caps) {
    const auto& outer = sp.outer;
    const auto& aut = *outer.aut;
    const auto& out = *outer.out;
    const auto& g = *sp.base;

    auto s = [&](Elem o) { return section[o]; };
    auto t = [&](Elem a) { return conjugator[a]; };

    // Witness of the Sinh comparison loop at (s[x] s[x']) s[x''] vs
    // s[x] (s[x'] s[x'']), an endomorphism of s[x x' x''] and hence central:
    //   t(s[x] s[x'x''])^{-1} s[x](t(s[x'] s[x'']))^{-1} t(s[x] s[x']) t(s[xx'] s[x'']).
    Cochain z = Cochain::build(3, sp.pres.pi1, [&](std::span<const Elem> o) {
        Elem sp0 = s(o[0]), sp1 = s(o[1]), sp2 = s(o[2]);
        Elem term1 = g.inv(t(aut.mul(sp0, s(out.mul(o[1], o[2])))));
        Elem term2 = g.inv(outer.apply(sp0, t(aut.mul(sp1, sp2))));
        Elem term3 = t(aut.mul(sp0, sp1));
        Elem term4 = t(aut.mul(s(out.mul(o[0], o[1])), sp2));
        Elem v = g.mul(g.mul(g.mul(term1, term2), term3), term4);
        Elem c = sp.center_index(v);
        if (c < 0)
            throw std::logic_error("classifying cocycle value escaped the center at (" +
                                   std::to_string(o[0]) + "," + std::to_string(o[1]) + "," +
                                   std::to_string(o[2]) + ")");
        return c;
    }, caps);
    if (!is_cocycle(z, caps))
        throw std::logic_error("classifying cocycle failed the 3-cocycle re-check");
    return z;
}

Cochain classifying_cocycle(const SymPresentation& sp, const Caps& caps) {
    return classifying_cocycle_with(sp, sp.outer.section, sp.outer.conjugator, caps);
}

SymPresentation sym_invariants(const GroupPtr& g, const Caps& caps) {
    SymPresentation sp;
    sp.base = g;
    sp.outer = automorphism_group(g, caps);
    sp.center_elems = center(*g);
    sp.base_to_center.assign(g->order(), -1);
    for (std::size_t i = 0; i < sp.center_elems.size(); ++i)
        sp.base_to_center[sp.center_elems[i]] = static_cast<Elem>(i);

    GroupPtr zg = center_group(*g, sp.center_elems, caps);

    // Action [phi] . z = s[phi](z). Well defined because inner automorphisms
    // fix the center pointwise; asserted over every automorphism.
    const int q = sp.outer.out->order();
    const int zc = zg->order();
    for (Elem a = 0; a < sp.outer.aut->order(); ++a) {
        Elem rep = sp.outer.section[sp.outer.projection[a]];
        for (Elem i = 0; i < zc; ++i) {
            Elem x = sp.center_elems[i];
            if (sp.outer.apply(a, x) != sp.outer.apply(rep, x))
                throw std::logic_error("center action depends on the class representative");
        }
    }
    std::vector<std::vector<Elem>> action(q, std::vector<Elem>(zc));
    for (Elem o = 0; o < q; ++o)
        for (Elem i = 0; i < zc; ++i) {
            Elem img = sp.outer.apply(sp.outer.section[o], sp.center_elems[i]);
            Elem c = sp.base_to_center[img];
            if (c < 0) throw std::logic_error("automorphism does not preserve the center");
            action[o][i] = c;
        }
    ModulePtr pi1 = make_module(sp.outer.out, zg, std::move(action));
    sp.pres = TwoGroupPresentation::make_unchecked(sp.outer.out, pi1, Cochain(3, pi1));
    sp.pres.z = classifying_cocycle(sp, caps);
    return sp;
}

void for_each_epinglage(const SymPresentation& sp,
                        const std::function<bool(const std::vector<Elem>&,
                                                 const std::vector<Elem>&)>& visit,
                        std::int64_t budget) {
    const auto& outer = sp.outer;
    const auto& aut = *outer.aut;
    const int q = outer.out->order();
    const int m = aut.order();

    std::vector<std::vector<Elem>> class_members(q);
    for (Elem o = 0; o < q; ++o) class_members[o] = outer.outer_class_members(o);

    std::int64_t sections = 1;
    for (Elem o = 1; o < q; ++o) sections *= static_cast<std::int64_t>(class_members[o].size());
    // t is free on non-section elements, |Z(G)| choices each.
    std::int64_t t_choices = 1;
    const std::int64_t zc = static_cast<std::int64_t>(sp.center_elems.size());
    for (int i = 0; i < m - q; ++i) {
        t_choices *= zc;
        if (t_choices > budget) break;
    }
    if (sections > budget || t_choices > budget || sections * t_choices > budget)
        throw CapExceeded("epinglage enumeration exceeds budget");

    std::vector<Elem> section(q);
    section[0] = 0;
    std::vector<int> sec_idx(q, 0);
    while (true) {
        for (Elem o = 1; o < q; ++o) section[o] = class_members[o][sec_idx[o]];

        // Valid conjugators per aut element: the Z(G)-coset with c_g = phi o s[p(phi)]^{-1};
        // elements of the section itself are pinned to e.
        std::vector<std::vector<Elem>> choices(m);
        bool ok = true;
        for (Elem a = 0; a < m && ok; ++a) {
            Elem rep = section[outer.projection[a]];
            if (a == rep) {
                choices[a] = {sp.base->identity()};
                continue;
            }
            Elem chi = aut.mul(a, aut.inv(rep));
            choices[a] = outer.conjugators_of(chi);
            if (choices[a].empty()) ok = false;
        }
        if (!ok) throw std::logic_error("section member without conjugator witness");

        std::vector<int> t_idx(m, 0);
        std::vector<Elem> conjugator(m);
        bool stop = false;
        while (!stop) {
            for (Elem a = 0; a < m; ++a) conjugator[a] = choices[a][t_idx[a]];
            if (!visit(section, conjugator)) return;
            int i = m - 1;
            for (; i >= 0; --i) {
                if (++t_idx[i] < static_cast<int>(choices[i].size())) break;
                t_idx[i] = 0;
            }
            if (i < 0) stop = true;
        }

        int o = q - 1;
        for (; o >= 1; --o) {
            if (++sec_idx[o] < static_cast<int>(class_members[o].size())) break;
            sec_idx[o] = 0;
        }
        if (o < 1) break;
    }
}

std::string to_string(SplitMethod m) {
    switch (m) {
        case SplitMethod::Coboundary: return "coboundary";
        case SplitMethod::SectionSearch: return "section-search";
        case SplitMethod::NonsplitWitness: return "nonsplit-witness";
    }
    return "?";
}

std::optional<NonsplitCertificate> nonsplit_witness(const SymPresentation& sp) {
    const auto& outer = sp.outer;
    const auto& aut = *outer.aut;
    const int q = outer.out->order();
    for (Elem o = 1; o < q; ++o) {
        if (outer.out->mul(o, o) != outer.out->identity()) continue;
        NonsplitCertificate cert;
        cert.out_class = o;
        cert.members = outer.outer_class_members(o);
        bool all_moved = true;
        for (Elem a : cert.members) {
            NonsplitMemberEvidence ev;
            ev.member = a;
            ev.square = aut.mul(a, a);
            ev.conjugators = outer.conjugators_of(ev.square);
            if (ev.conjugators.empty())
                throw std::logic_error("square of an order-2 outer class is not inner");
            for (Elem g : ev.conjugators) {
                Elem img = outer.apply(a, g);
                ev.images.push_back(img);
                if (img == g) all_moved = false;
            }
            cert.evidence.push_back(std::move(ev));
            if (!all_moved) break;
        }
        if (all_moved) return cert;
    }
    return std::nullopt;
}

namespace {

SplitnessVerdict section_search(const SymPresentation& sp, const Caps& caps) {
    SplitnessVerdict v;
    v.method = SplitMethod::SectionSearch;
    const auto& outer = sp.outer;
    const auto& aut = *outer.aut;
    const auto& g = *sp.base;
    const int q = outer.out->order();

    std::vector<std::vector<Elem>> class_members(q);
    std::int64_t sections = 1;
    for (Elem o = 0; o < q; ++o) {
        class_members[o] = outer.outer_class_members(o);
        if (o > 0) {
            sections *= static_cast<std::int64_t>(class_members[o].size());
            if (sections > caps.max_sections)
                throw CapExceeded("section-search: section budget exhausted");
        }
    }
    const std::int64_t zc = static_cast<std::int64_t>(sp.center_elems.size());
    {
        std::int64_t liftings = 1;
        for (int i = 0; i < (q - 1) * (q - 1); ++i) {
            liftings *= zc;
            if (liftings > caps.max_liftings)
                throw CapExceeded("section-search: lifting budget exhausted");
        }
    }

    std::vector<Elem> section(q);
    section[0] = 0;
    std::vector<int> sec_idx(q, 0);
    const int pairs = (q - 1) * (q - 1);
    while (true) {
        for (Elem o = 1; o < q; ++o) section[o] = class_members[o][sec_idx[o]];

        // Candidate lifting values per nontrivial pair: the coset of g's with
        // c_g = s-hat(o1, o2) = s[o1] s[o2] s[o1 o2]^{-1}.
        std::vector<std::vector<Elem>> cand(pairs);
        for (Elem o1 = 1; o1 < q; ++o1)
            for (Elem o2 = 1; o2 < q; ++o2) {
                Elem shat = aut.mul(aut.mul(section[o1], section[o2]),
                                    aut.inv(section[outer.out->mul(o1, o2)]));
                cand[(o1 - 1) * (q - 1) + (o2 - 1)] = outer.conjugators_of(shat);
            }

        std::vector<int> pick(pairs, 0);
        std::vector<Elem> psi(static_cast<std::size_t>(q) * q, g.identity());
        bool stop = pairs == 0;
        bool first = true;
        while (first || !stop) {
            first = false;
            for (int i = 0; i < pairs; ++i)
                psi[static_cast<std::size_t>(i / (q - 1) + 1) * q + (i % (q - 1) + 1)] =
                    cand[i][pick[i]];
            bool good = true;
            for (Elem o1 = 0; o1 < q && good; ++o1)
                for (Elem o2 = 0; o2 < q && good; ++o2)
                    for (Elem o3 = 0; o3 < q && good; ++o3) {
                        Elem lhs = g.mul(psi[o1 * q + o2],
                                         psi[outer.out->mul(o1, o2) * q + o3]);
                        Elem rhs = g.mul(outer.apply(section[o1], psi[o2 * q + o3]),
                                         psi[o1 * q + outer.out->mul(o2, o3)]);
                        good = lhs == rhs;
                    }
            if (good) {
                v.split = true;
                v.section_witness = SectionSearchWitness{section, psi};
                return v;
            }
            if (pairs == 0) break;
            int i = pairs - 1;
            for (; i >= 0; --i) {
                if (++pick[i] < static_cast<int>(cand[i].size())) break;
                pick[i] = 0;
            }
            if (i < 0) stop = true;
        }

        int o = q - 1;
        for (; o >= 1; --o) {
            if (++sec_idx[o] < static_cast<int>(class_members[o].size())) break;
            sec_idx[o] = 0;
        }
        if (o < 1) break;
    }
    v.split = false;
    return v;
}

}  // namespace

SplitnessVerdict is_permutationally_split(const SymPresentation& sp, SplitMethod method,
                                          const Caps& caps) {
    SplitnessVerdict v;
    v.method = method;
    switch (method) {
        case SplitMethod::Coboundary: {
            auto w = is_coboundary(sp.pres.z, caps);
            v.split = w.has_value();
            if (w) v.trivializing = std::move(*w);
            return v;
        }
        case SplitMethod::SectionSearch: {
            v = section_search(sp, caps);
            if (v.split && v.section_witness) {
                // Re-verify the witness against its defining equations.
                const auto& w = *v.section_witness;
                const int q = sp.outer.out->order();
                for (Elem o = 0; o < q; ++o)
                    if (sp.outer.projection[w.section[o]] != o)
                        throw std::logic_error("section witness is not a section");
                for (Elem o1 = 0; o1 < q; ++o1)
                    for (Elem o2 = 0; o2 < q; ++o2) {
                        Elem shat = sp.outer.aut->mul(
                            sp.outer.aut->mul(w.section[o1], w.section[o2]),
                            sp.outer.aut->inv(w.section[sp.outer.out->mul(o1, o2)]));
                        if (sp.outer.inner_from(w.psi[o1 * q + o2]) != shat)
                            throw std::logic_error("lifting witness does not lift s-hat");
                    }
            }
            return v;
        }
        case SplitMethod::NonsplitWitness: {
            auto cert = nonsplit_witness(sp);
            if (cert) {
                v.split = false;
                v.conclusive = true;
                v.certificate = std::move(*cert);
            } else {
                v.split = false;
                v.conclusive = false;
            }
            return v;
        }
    }
    throw std::logic_error("unknown split method");
}

bool sym_cell_valid(const OuterStructure& outer, const SymCell& c) {
    return outer.aut->mul(outer.inner_from(c.g), c.src) == c.dst;
}

SymCell sym_identity_cell(const OuterStructure& outer, Elem aut_index) {
    return SymCell{outer.base->identity(), aut_index, aut_index};
}

SymCell sym_compose(const OuterStructure& outer, const SymCell& later, const SymCell& earlier) {
    if (!sym_cell_valid(outer, later) || !sym_cell_valid(outer, earlier))
        throw InvalidInput("sym_compose: invalid cell");
    if (earlier.dst != later.src) throw InvalidInput("sym_compose: cells do not chain");
    SymCell out{outer.base->mul(later.g, earlier.g), earlier.src, later.dst};
    if (!sym_cell_valid(outer, out)) throw std::logic_error("sym_compose produced an invalid cell");
    return out;
}

SymCell sym_tensor(const OuterStructure& outer, const SymCell& a, const SymCell& b) {
    if (!sym_cell_valid(outer, a) || !sym_cell_valid(outer, b))
        throw InvalidInput("sym_tensor: invalid cell");
    SymCell out{outer.base->mul(a.g, outer.apply(a.src, b.g)),
                outer.aut->mul(a.src, b.src), outer.aut->mul(a.dst, b.dst)};
    if (!sym_cell_valid(outer, out)) throw std::logic_error("sym_tensor produced an invalid cell");
    return out;
}

Elem sym_object_tensor(const OuterStructure& outer, Elem a, Elem b) {
    return outer.aut->mul(a, b);
}

CoproductSym::CoproductSym(int n, GroupPtr base, const Caps& caps)
    : n_(n), base_(std::move(base)), outer_(automorphism_group(base_, caps)) {
    if (n < 1) throw InvalidInput("CoproductSym: n must be >= 1");
    long long count = 1;
    for (int i = 0; i < n; ++i) {
        count *= outer_.aut->order();
        if (count > caps.max_group_order * 1024LL)
            throw CapExceeded("CoproductSym: object group too large");
    }
}

long long CoproductSym::object_count() const {
    long long c = 1;
    for (int i = 0; i < n_; ++i) c *= outer_.aut->order();
    long long f = 1;
    for (int i = 2; i <= n_; ++i) f *= i;
    return c * f;
}

bool CoproductSym::cell_valid(const Cell& c) const {
    for (int i = 0; i < n_; ++i)
        if (outer_.aut->mul(outer_.inner_from(c.g[i]), c.src[i]) != c.dst[i]) return false;
    return true;
}

CoproductSym::Object CoproductSym::object_tensor(const Object& a, const Object& b) const {
    Object r;
    r.sigma.resize(n_);
    r.phis.resize(n_);
    for (int i = 0; i < n_; ++i) {
        r.sigma[i] = a.sigma[b.sigma[i]];
        r.phis[i] = outer_.aut->mul(a.phis[b.sigma[i]], b.phis[i]);
    }
    return r;
}

CoproductSym::Cell CoproductSym::cell_compose(const Cell& later, const Cell& earlier) const {
    if (later.sigma != earlier.sigma)
        throw InvalidInput("cell_compose: natural isomorphisms over different permutations");
    if (!cell_valid(later) || !cell_valid(earlier)) throw InvalidInput("cell_compose: invalid cell");
    if (later.src != earlier.dst) throw InvalidInput("cell_compose: cells do not chain");
    Cell r;
    r.sigma = later.sigma;
    r.g.resize(n_);
    r.src = earlier.src;
    r.dst = later.dst;
    for (int i = 0; i < n_; ++i) r.g[i] = base_->mul(later.g[i], earlier.g[i]);
    if (!cell_valid(r)) throw std::logic_error("cell_compose produced an invalid cell");
    return r;
}

CoproductSym::Cell CoproductSym::cell_tensor(const Cell& a, const Cell& b) const {
    if (!cell_valid(a) || !cell_valid(b)) throw InvalidInput("cell_tensor: invalid cell");
    Cell r;
    r.sigma.resize(n_);
    r.g.resize(n_);
    r.src.resize(n_);
    r.dst.resize(n_);
    for (int i = 0; i < n_; ++i) {
        int bi = b.sigma[i];
        r.sigma[i] = a.sigma[bi];
        r.g[i] = base_->mul(a.g[bi], outer_.apply(a.src[bi], b.g[i]));
        r.src[i] = outer_.aut->mul(a.src[bi], b.src[i]);
        r.dst[i] = outer_.aut->mul(a.dst[bi], b.dst[i]);
    }
    if (!cell_valid(r)) throw std::logic_error("cell_tensor produced an invalid cell");
    return r;
}

CoproductSym::Object CoproductSym::object_tensor_via_wreath(const Object& a, const Object& b) const {
    // (sigma, x) (sigma', x') = (sigma sigma', (x |> sigma') ox x') with the
    // componentwise tensor of Sym(G)^n.
    Object r;
    r.sigma.resize(n_);
    r.phis.resize(n_);
    for (int i = 0; i < n_; ++i) r.sigma[i] = a.sigma[b.sigma[i]];
    for (int i = 0; i < n_; ++i)
        r.phis[i] = sym_object_tensor(outer_, a.phis[b.sigma[i]], b.phis[i]);
    return r;
}

CoproductSym::Cell CoproductSym::cell_tensor_via_wreath(const Cell& a, const Cell& b) const {
    Cell r;
    r.sigma.resize(n_);
    r.g.resize(n_);
    r.src.resize(n_);
    r.dst.resize(n_);
    for (int i = 0; i < n_; ++i) r.sigma[i] = a.sigma[b.sigma[i]];
    for (int i = 0; i < n_; ++i) {
        SymCell ca{a.g[b.sigma[i]], a.src[b.sigma[i]], a.dst[b.sigma[i]]};
        SymCell cb{b.g[i], b.src[i], b.dst[i]};
        SymCell prod = sym_tensor(outer_, ca, cb);
        r.g[i] = prod.g;
        r.src[i] = prod.src;
        r.dst[i] = prod.dst;
    }
    return r;
}

CoproductSym::Object CoproductSym::object_by_rank(long long rank) const {
    // Mixed radix, sigma major, then the aut-index tuple.
    auto perms = permutations_lex(n_);
    long long powm = 1;
    for (int i = 0; i < n_; ++i) powm *= outer_.aut->order();
    Object o;
    o.sigma = perms[static_cast<std::size_t>(rank / powm)];
    o.phis.resize(n_);
    long long rest = rank % powm;
    for (int i = n_ - 1; i >= 0; --i) {
        o.phis[i] = static_cast<Elem>(rest % outer_.aut->order());
        rest /= outer_.aut->order();
    }
    return o;
}

CoproductSym::Cell CoproductSym::random_cell(std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    auto perms = permutations_lex(n_);
    Cell c;
    c.sigma = perms[rng() % perms.size()];
    c.g.resize(n_);
    c.src.resize(n_);
    c.dst.resize(n_);
    for (int i = 0; i < n_; ++i) {
        c.g[i] = static_cast<Elem>(rng() % base_->order());
        c.src[i] = static_cast<Elem>(rng() % outer_.aut->order());
        c.dst[i] = outer_.aut->mul(outer_.inner_from(c.g[i]), c.src[i]);
    }
    return c;
}

}  // namespace p2g
