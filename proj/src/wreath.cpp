#include "p2g/wreath.hpp"

namespace p2g {

Elem WreathGroup::encode(Elem sigma, const std::vector<Elem>& comps) const {
    Elem x = sigma;
    for (int i = 0; i < n; ++i) x = x * base->order() + comps[i];
    return x;
}

Elem WreathGroup::sigma_of(Elem w) const {
    Elem x = w;
    for (int i = 0; i < n; ++i) x /= base->order();
    return x;
}

std::vector<Elem> WreathGroup::comps_of(Elem w) const {
    std::vector<Elem> comps(n);
    for (int i = n - 1; i >= 0; --i) {
        comps[i] = w % base->order();
        w /= base->order();
    }
    return comps;
}

WreathGroup wreath_symmetric(int n, const GroupPtr& base, const Caps& caps) {
    if (n < 1) throw InvalidInput("wreath_symmetric: n must be >= 1");
    WreathGroup w;
    w.n = n;
    w.base = base;
    w.sym = symmetric(n, caps);
    w.perms = permutations_lex(n);

    long long total = w.sym->order();
    for (int i = 0; i < n; ++i) {
        total *= base->order();
        if (total > caps.max_group_order)
            throw CapExceeded("wreath product order exceeds cap " +
                              std::to_string(caps.max_group_order));
    }
    const int m = static_cast<int>(total);

    w.sym_inverse.assign(w.sym->order(), 0);
    for (Elem s = 0; s < w.sym->order(); ++s) w.sym_inverse[s] = w.sym->inv(s);

    std::vector<Elem> table(static_cast<std::size_t>(m) * m);
    std::vector<Elem> hc(n);
    for (Elem a = 0; a < m; ++a) {
        Elem sa = w.sigma_of(a);
        auto ha = w.comps_of(a);
        for (Elem b = 0; b < m; ++b) {
            Elem sb = w.sigma_of(b);
            auto hb = w.comps_of(b);
            const auto& pb = w.perms[sb];
            for (int i = 0; i < n; ++i) hc[i] = base->mul(ha[pb[i]], hb[i]);
            table[static_cast<std::size_t>(a) * m + b] = w.encode(w.sym->mul(sa, sb), hc);
        }
    }
    std::vector<std::string> labels;
    if (m <= 4096) {
        labels.resize(m);
        for (Elem a = 0; a < m; ++a) {
            auto ha = w.comps_of(a);
            std::string s = w.sym->label(w.sigma_of(a)) + "(";
            for (int i = 0; i < n; ++i) {
                if (i) s += ",";
                s += base->label(ha[i]);
            }
            s += ")";
            labels[a] = s;
        }
    }
    std::string tag = "wreath(" + std::to_string(n) + "," +
                      (base->family_tag().empty() ? "order" + std::to_string(base->order())
                                                  : base->family_tag()) +
                      ")";
    w.group = FiniteGroup::from_table(std::move(table), 0, std::move(labels), std::move(tag), caps);
    return w;
}

}  // namespace p2g
