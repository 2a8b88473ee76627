#pragma once

#include "p2g/group.hpp"

#include <vector>

namespace p2g {

// S_n wr H as a table group. Elements are pairs (sigma, h_1..h_n) with
// product (sigma, h) * (sigma', h') = (sigma sigma', (h |> sigma') h'),
// where (h |> sigma')_i = h_{sigma'(i)} and sigma sigma' composes as
// functions (sigma' applied first). Index order: sigma major, then the
// h-tuple in mixed radix with h_1 most significant; the identity is 0.
struct WreathGroup {
    GroupPtr group;
    GroupPtr sym;   // S_n
    GroupPtr base;  // H
    int n = 1;
    std::vector<std::vector<int>> perms;  // sym index -> one-line permutation
    std::vector<Elem> sym_inverse;        // sym index -> index of inverse

    Elem encode(Elem sigma, const std::vector<Elem>& comps) const;
    Elem sigma_of(Elem w) const;
    std::vector<Elem> comps_of(Elem w) const;
};

WreathGroup wreath_symmetric(int n, const GroupPtr& base, const Caps& caps = default_caps());

}  // namespace p2g
