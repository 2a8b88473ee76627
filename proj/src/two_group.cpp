#include "p2g/two_group.hpp"

namespace p2g {

TwoGroupPresentation TwoGroupPresentation::make(GroupPtr pi0, ModulePtr pi1, Cochain z,
                                                const Caps& caps) {
    if (pi1->acting->order() != pi0->order())
        throw InvalidInput("presentation: pi1 must be a module over pi0");
    if (z.degree() != 3) throw InvalidInput("presentation: z must have degree 3");
    if (z.module()->acting->order() != pi0->order() ||
        z.module()->coeff->order() != pi1->coeff->order())
        throw InvalidInput("presentation: cocycle lives over the wrong module");
    if (!is_cocycle(z, caps)) throw InvalidInput("presentation: z is not a 3-cocycle");
    return TwoGroupPresentation{std::move(pi0), std::move(pi1), std::move(z)};
}

TwoGroupPresentation TwoGroupPresentation::make_unchecked(GroupPtr pi0, ModulePtr pi1, Cochain z) {
    return TwoGroupPresentation{std::move(pi0), std::move(pi1), std::move(z)};
}

TwoCell identity_cell(const TwoGroupPresentation& t, Elem x) {
    return TwoCell{t.pi1->zero(), x};
}

TwoCell tensor_cells(const TwoGroupPresentation& t, TwoCell a, TwoCell b) {
    return TwoCell{t.pi1->add(a.u, t.pi1->act(a.x, b.u)), t.pi0->mul(a.x, b.x)};
}

TwoCell compose_cells(const TwoGroupPresentation& t, TwoCell f, TwoCell g) {
    if (f.x != g.x) throw InvalidInput("compose_cells: cells sit on different objects");
    return TwoCell{t.pi1->add(f.u, g.u), f.x};
}

TwoCell inverse_cell(const TwoGroupPresentation& t, TwoCell a) {
    return TwoCell{t.pi1->neg(a.u), a.x};
}

TwoCell associator(const TwoGroupPresentation& t, Elem x, Elem y, Elem z) {
    return TwoCell{t.z.value({x, y, z}), t.pi0->mul(t.pi0->mul(x, y), z)};
}

CoherenceReport verify_coherence(const TwoGroupPresentation& t, const Caps& caps) {
    CoherenceReport report;
    const auto& g = *t.pi0;
    const int n = g.order();
    if (static_cast<std::int64_t>(n) * n * n * n > caps.max_cochain_entries)
        throw CapExceeded("verify_coherence: pi0 too large for exhaustive pentagon check");

    Cochain dz = coboundary(t.z, caps);
    for (Elem w = 0; w < n; ++w)
        for (Elem x = 0; x < n; ++x)
            for (Elem y = 0; y < n; ++y)
                for (Elem v = 0; v < n; ++v) {
                    // (a_{w,x,y} ox id_v) o a_{w,xy,v} o (id_w ox a_{x,y,v})
                    TwoCell lhs = compose_cells(
                        t, tensor_cells(t, associator(t, w, x, y), identity_cell(t, v)),
                        compose_cells(t, associator(t, w, g.mul(x, y), v),
                                      tensor_cells(t, identity_cell(t, w), associator(t, x, y, v))));
                    TwoCell rhs = compose_cells(t, associator(t, g.mul(w, x), y, v),
                                                associator(t, w, x, g.mul(y, v)));
                    bool pentagon = lhs == rhs;
                    bool cocycle_here = dz.value({w, x, y, v}) == t.pi1->zero();
                    if (pentagon != cocycle_here) report.pentagon_matches_cocycle = false;
                    if (!pentagon) {
                        report.pentagon_ok = false;
                        ++report.pentagon_violation_count;
                        if (report.pentagon_violations.size() <
                            CoherenceReport::kMaxListedViolations)
                            report.pentagon_violations.push_back({w, x, y, v});
                    }
                }
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            if (!(associator(t, x, g.identity(), y) ==
                  identity_cell(t, g.mul(x, y)))) {
                report.triangle_ok = false;
                ++report.triangle_violation_count;
                if (report.triangle_violations.size() < CoherenceReport::kMaxListedViolations)
                    report.triangle_violations.push_back({x, y});
            }
    return report;
}

TwoGroupPresentation product_presentation(const std::vector<TwoGroupPresentation>& family,
                                          const Caps& caps) {
    if (family.empty()) throw InvalidInput("product_presentation: empty family");
    std::vector<ModulePtr> mods;
    std::vector<Cochain> zs;
    for (const auto& t : family) {
        mods.push_back(t.pi1);
        zs.push_back(t.z);
    }
    ProductModule pm = product_module(mods, caps);
    Cochain z = zeta(pm, zs, caps);
    return TwoGroupPresentation::make(pm.module->acting, pm.module, std::move(z), caps);
}

WreathPresentation wreath_presentation(int n, const TwoGroupPresentation& t, const Caps& caps) {
    WreathModule wm = wreath_module(n, t.pi1, caps);
    Cochain z = xi(wm, t.z, caps);
    TwoGroupPresentation pres =
        TwoGroupPresentation::make(wm.module->acting, wm.module, std::move(z), caps);
    return WreathPresentation{std::move(pres), std::move(wm)};
}

std::pair<std::vector<int>, std::vector<Elem>> wreath_object_tensor(
    const FiniteGroup& base, const std::vector<int>& sigma, const std::vector<Elem>& xs,
    const std::vector<int>& sigma_p, const std::vector<Elem>& xs_p) {
    const int n = static_cast<int>(sigma.size());
    if (static_cast<int>(xs.size()) != n || static_cast<int>(xs_p.size()) != n ||
        static_cast<int>(sigma_p.size()) != n)
        throw InvalidInput("wreath_object_tensor: size mismatch");
    std::vector<int> sprod(n);
    for (int i = 0; i < n; ++i) sprod[i] = sigma[sigma_p[i]];
    std::vector<Elem> comps(n);
    for (int i = 0; i < n; ++i) comps[i] = base.mul(xs[sigma_p[i]], xs_p[i]);
    return {sprod, comps};
}

namespace {

// All isomorphisms dom -> cod in lexicographic generator-image order.
std::vector<std::vector<Elem>> all_isomorphisms(const GroupPtr& dom, const GroupPtr& cod) {
    std::vector<std::vector<Elem>> out;
    detail::for_each_isomorphism(*dom, *cod, [&](const std::vector<Elem>& images) {
        out.push_back(images);
        return true;
    });
    return out;
}

}  // namespace

std::optional<TwoGroupMorphismData> presentations_equivalent(const TwoGroupPresentation& t,
                                                             const TwoGroupPresentation& u,
                                                             const Caps& caps) {
    if (t.pi0->order() != u.pi0->order() || t.pi1->coeff->order() != u.pi1->coeff->order())
        return std::nullopt;
    if (t.pi0->order() > caps.max_equiv_pi0 || t.pi1->coeff->order() > caps.max_equiv_pi1)
        throw CapExceeded("presentations_equivalent: iso-search budget exceeded");

    auto rhos = all_isomorphisms(t.pi0, u.pi0);
    auto betas = all_isomorphisms(t.pi1->coeff, u.pi1->coeff);
    if (rhos.empty() || betas.empty()) return std::nullopt;

    std::vector<Elem> rho_inv(t.pi0->order());
    for (const auto& rho : rhos) {
        for (Elem x = 0; x < t.pi0->order(); ++x) rho_inv[rho[x]] = x;
        for (const auto& beta : betas) {
            // beta must be a module map over rho: beta(g . a) = rho(g) . beta(a)
            bool equivariant = true;
            for (Elem g = 0; g < t.pi0->order() && equivariant; ++g)
                for (Elem a = 0; a < t.pi1->coeff->order(); ++a)
                    if (beta[t.pi1->act(g, a)] != u.pi1->act(rho[g], beta[a])) {
                        equivariant = false;
                        break;
                    }
            if (!equivariant) continue;

            Cochain transported =
                Cochain::build(3, u.pi1, [&](std::span<const Elem> s) {
                    return beta[t.z.value({rho_inv[s[0]], rho_inv[s[1]], rho_inv[s[2]]})];
                }, caps);
            Cochain diff = transported.minus(u.z, caps);
            if (auto w = is_coboundary(diff, caps)) {
                TwoGroupMorphismData data{GroupHom{t.pi0, u.pi0, rho},
                                          GroupHom{t.pi1->coeff, u.pi1->coeff, beta},
                                          std::move(*w)};
                data.rho.validate();
                data.beta.validate();
                return data;
            }
        }
    }
    return std::nullopt;
}

}  // namespace p2g
