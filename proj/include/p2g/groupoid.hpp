#pragma once

#include "p2g/perm2group.hpp"

#include <vector>

namespace p2g {

// A finite-type groupoid in normal form: homogeneous components given by
// (multiplicity, base group), base groups pairwise non-isomorphic.
struct GroupoidComponent {
    int multiplicity = 1;
    GroupPtr group;
};

struct GroupoidSpec {
    std::vector<GroupoidComponent> components;
};

// Merges isomorphic base groups by summing multiplicities and orders the
// components canonically (group order, then table).
GroupoidSpec normalize(std::vector<GroupoidComponent> raw);

struct AssembledInvariants {
    GroupoidSpec spec;
    std::vector<SymPresentation> component_sym;       // per component, Sym(G_i)
    std::vector<WreathPresentation> component_wreath; // S_{n_i} wrwr Sym(G_i)
    TwoGroupPresentation pres;                        // product over components
};

// pi0 = prod S_{n_i} wr Out(G_i), pi1 = prod Z(G_i)^{n_i} with the
// permute-then-act action, z = zeta(xi_{n_i}(z_i)).
AssembledInvariants assemble_invariants(const GroupoidSpec& spec,
                                        const Caps& caps = default_caps());

struct FiniteTypeSplitReport {
    bool split = false;
    std::vector<SplitnessVerdict> per_component;
    bool global_class_trivial = false;  // is_coboundary on the assembled cocycle
};

// Split iff every component group is permutationally split; the global
// Postnikov-class test must agree and is asserted.
FiniteTypeSplitReport is_split_finite_type(const GroupoidSpec& spec,
                                           const Caps& caps = default_caps());

}  // namespace p2g
