#include "p2g/transfer.hpp"

namespace p2g {

WreathModule wreath_module(int n, const ModulePtr& base, const Caps& caps) {
    WreathModule wm;
    wm.base = base;
    wm.wreath = wreath_symmetric(n, base->acting, caps);
    std::vector<GroupPtr> copies(n, base->coeff);
    GroupPtr coeff = direct_product(copies, caps);
    wm.coeff_shape.factor_orders.assign(n, base->coeff->order());

    const auto& w = wm.wreath;
    std::vector<std::vector<Elem>> action(w.group->order());
    std::vector<Elem> out(n);
    for (Elem g = 0; g < w.group->order(); ++g) {
        Elem sigma = w.sigma_of(g);
        auto comps = w.comps_of(g);
        const auto& inv = w.perms[w.sym_inverse[sigma]];
        action[g].resize(coeff->order());
        for (Elem a = 0; a < coeff->order(); ++a) {
            auto av = wm.coeff_shape.decode(a);
            for (int j = 0; j < n; ++j) out[j] = base->act(comps[inv[j]], av[inv[j]]);
            action[g][a] = wm.coeff_shape.encode(out);
        }
    }
    wm.module = make_module(w.group, std::move(coeff), std::move(action));
    return wm;
}

Elem xi_value(const WreathModule& wm, const Cochain& c, std::span<const Elem> t) {
    const int k = c.degree();
    if (static_cast<int>(t.size()) != k) throw InvalidInput("xi_value: wrong arity");
    const auto& w = wm.wreath;
    const int n = w.n;
    std::vector<std::vector<Elem>> comps(k);
    std::vector<const std::vector<int>*> inv_prefix(k);
    std::vector<Elem> args(k);
    std::vector<Elem> out(n);
    Elem prefix = w.sym->identity();
    for (int i = 0; i < k; ++i) {
        prefix = w.sym->mul(prefix, w.sigma_of(t[i]));
        inv_prefix[i] = &w.perms[w.sym_inverse[prefix]];
        comps[i] = w.comps_of(t[i]);
    }
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < k; ++i) args[i] = comps[i][(*inv_prefix[i])[j]];
        out[j] = c.value(std::span<const Elem>(args.data(), args.size()));
    }
    return wm.coeff_shape.encode(out);
}

Cochain xi(const WreathModule& wm, const Cochain& c, const Caps& caps) {
    if (c.module()->acting->order() != wm.base->acting->order() ||
        c.module()->coeff->order() != wm.base->coeff->order())
        throw InvalidInput("xi: cochain does not live over the wreath base module");
    if (c.is_zero_stored()) return Cochain(c.degree(), wm.module);
    return Cochain::build(c.degree(), wm.module,
                          [&](std::span<const Elem> t) { return xi_value(wm, c, t); }, caps);
}

Cochain xi(int n, const Cochain& c, const Caps& caps) {
    return xi(wreath_module(n, c.module(), caps), c, caps);
}

ProductModule product_module(const std::vector<ModulePtr>& factors, const Caps& caps) {
    if (factors.empty()) throw InvalidInput("product_module: empty family");
    ProductModule pm;
    pm.factors = factors;
    std::vector<GroupPtr> actings, coeffs;
    for (const auto& f : factors) {
        actings.push_back(f->acting);
        coeffs.push_back(f->coeff);
        pm.acting_shape.factor_orders.push_back(f->acting->order());
        pm.coeff_shape.factor_orders.push_back(f->coeff->order());
    }
    GroupPtr acting = direct_product(actings, caps);
    GroupPtr coeff = direct_product(coeffs, caps);
    const int m = static_cast<int>(factors.size());
    std::vector<std::vector<Elem>> action(acting->order());
    std::vector<Elem> out(m);
    for (Elem g = 0; g < acting->order(); ++g) {
        auto gv = pm.acting_shape.decode(g);
        action[g].resize(coeff->order());
        for (Elem a = 0; a < coeff->order(); ++a) {
            auto av = pm.coeff_shape.decode(a);
            for (int i = 0; i < m; ++i) out[i] = factors[i]->act(gv[i], av[i]);
            action[g][a] = pm.coeff_shape.encode(out);
        }
    }
    pm.module = make_module(std::move(acting), std::move(coeff), std::move(action));
    return pm;
}

Cochain zeta(const ProductModule& pm, const std::vector<Cochain>& zs, const Caps& caps) {
    if (zs.size() != pm.factors.size()) throw InvalidInput("zeta: family size mismatch");
    if (zs.empty()) throw InvalidInput("zeta: empty family");
    const int k = zs[0].degree();
    for (const auto& z : zs)
        if (z.degree() != k) throw InvalidInput("zeta: mixed degrees");
    for (std::size_t i = 0; i < zs.size(); ++i)
        if (zs[i].module()->acting->order() != pm.factors[i]->acting->order() ||
            zs[i].module()->coeff->order() != pm.factors[i]->coeff->order())
            throw InvalidInput("zeta: cochain/module mismatch at factor " + std::to_string(i));

    bool all_zero = true;
    for (const auto& z : zs) all_zero = all_zero && z.is_zero_stored();
    if (all_zero) return Cochain(k, pm.module);

    const int m = static_cast<int>(zs.size());
    std::vector<std::vector<Elem>> decoded(k);
    std::vector<Elem> args(k);
    std::vector<Elem> out(m);
    return Cochain::build(k, pm.module, [&](std::span<const Elem> t) {
        for (int i = 0; i < k; ++i) decoded[i] = pm.acting_shape.decode(t[i]);
        for (int f = 0; f < m; ++f) {
            for (int i = 0; i < k; ++i) args[i] = decoded[i][f];
            out[f] = zs[f].value(std::span<const Elem>(args.data(), args.size()));
        }
        return pm.coeff_shape.encode(out);
    }, caps);
}

Cochain zeta(const std::vector<Cochain>& zs, const Caps& caps) {
    std::vector<ModulePtr> mods;
    for (const auto& z : zs) mods.push_back(z.module());
    return zeta(product_module(mods, caps), zs, caps);
}

}  // namespace p2g
