#pragma once

#include "p2g/group.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace p2g {

// A homomorphism as an image array indexed by domain elements.
struct GroupHom {
    GroupPtr domain;
    GroupPtr codomain;
    std::vector<Elem> images;

    Elem operator()(Elem x) const { return images[x]; }
    bool is_bijective() const;
    /// Re-checks images[identity] = identity and the full homomorphism law.
    void validate() const;
};

// Aut(G) packaged with its inner subgroup, outer quotient and a fixed
// epinglage (normalized section s, conjugator witness t).
//
// Conventions: the aut table composes as phi * psi = phi o psi (apply psi
// first); aut elements are enumerated in lexicographic order of their image
// arrays, so index 0 is the identity automorphism. Outer classes are ordered
// by least member, the section picks that least member (the identity in the
// trivial class) and t(phi) is the least g with phi = c_g o s[p(phi)].
struct OuterStructure {
    GroupPtr base;
    GroupPtr aut;
    std::vector<std::vector<Elem>> aut_images;  // aut index -> image array on base
    std::vector<Elem> inn;                      // sorted aut indices forming Inn(G)
    GroupPtr out;
    std::vector<Elem> projection;  // aut index -> out index
    std::vector<Elem> section;     // out index -> aut index, s
    std::vector<Elem> conjugator;  // aut index -> base element, t

    Elem apply(Elem aut_index, Elem x) const { return aut_images[aut_index][x]; }
    /// Index of c_g in the aut enumeration.
    Elem inner_from(Elem g) const;
    /// All g with c_g equal to the given inner automorphism (a Z(G)-coset).
    std::vector<Elem> conjugators_of(Elem aut_index) const;
    /// Members of an outer class, ascending aut indices.
    std::vector<Elem> outer_class_members(Elem out_index) const;

    std::vector<Elem> inner_index_of_;  // base element g -> aut index of c_g
};

OuterStructure automorphism_group(const GroupPtr& g, const Caps& caps = default_caps());

/// Index of c_g in outer.aut; the map g -> c_g is a homomorphism with kernel Z(G).
Elem inner_from(const OuterStructure& outer, Elem g);

/// First isomorphism in canonical search order, if any.
std::optional<GroupHom> is_isomorphic(const GroupPtr& g, const GroupPtr& h);

/// All automorphism image arrays of g, sorted lexicographically.
std::vector<std::vector<Elem>> all_automorphism_images(const FiniteGroup& g);

namespace detail {
// Backtracking search over generator images; hits `emit` once per
// (iso)morphism found, in lexicographic candidate order. Stops early when
// emit returns false.
void for_each_isomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                          const std::function<bool(const std::vector<Elem>&)>& emit);
}  // namespace detail

}  // namespace p2g
