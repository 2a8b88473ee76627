#pragma once

#include "p2g/two_group.hpp"

#include <functional>
#include <optional>
#include <string>

namespace p2g {

// Sym(G) for a group G, reduced to its Sinh presentation: pi0 = Out(G),
// pi1 = Z(G) with [phi] . z = s[phi](z), and z the classifying 3-cocycle
// computed from the epinglage carried by the OuterStructure.
struct SymPresentation {
    GroupPtr base;
    OuterStructure outer;
    std::vector<Elem> center_elems;     // ascending base indices
    std::vector<Elem> base_to_center;   // base index -> center index or -1
    TwoGroupPresentation pres;

    Elem center_index(Elem base_elem) const { return base_to_center[base_elem]; }
};

SymPresentation sym_invariants(const GroupPtr& g, const Caps& caps = default_caps());

// z_{s,t}([p],[p'],[p'']) = s[p](t(s[p'] s[p''])) t(s([p][p']) s[p''])^{-1}
//                           t(s[p] s([p'][p''])) t(s[p] s[p'])^{-1},
// evaluated in G; every value lands in Z(G) and the result is a normalized
// 3-cocycle (both re-checked).
Cochain classifying_cocycle(const SymPresentation& sp, const Caps& caps = default_caps());
Cochain classifying_cocycle_with(const SymPresentation& sp, const std::vector<Elem>& section,
                                 const std::vector<Elem>& conjugator,
                                 const Caps& caps = default_caps());

// Iterate every epinglage (normalized section s, conjugator witness t) of
// Sym(G); visit returns false to stop. Throws CapExceeded past the budget.
void for_each_epinglage(const SymPresentation& sp,
                        const std::function<bool(const std::vector<Elem>&,
                                                 const std::vector<Elem>&)>& visit,
                        std::int64_t budget = 1 << 24);

enum class SplitMethod { Coboundary, SectionSearch, NonsplitWitness };
std::string to_string(SplitMethod m);

struct SectionSearchWitness {
    std::vector<Elem> section;  // out index -> aut index
    std::vector<Elem> psi;      // (o1 * |out| + o2) -> base element
};

struct NonsplitMemberEvidence {
    Elem member = 0;                  // aut index, in the witness class
    Elem square = 0;                  // aut index of member^2 (inner)
    std::vector<Elem> conjugators;    // all g with c_g = square (|Z(G)| of them)
    std::vector<Elem> images;         // member(g) per conjugator; all must differ from g
};

struct NonsplitCertificate {
    Elem out_class = 0;
    std::vector<Elem> members;
    std::vector<NonsplitMemberEvidence> evidence;
};

struct SplitnessVerdict {
    bool split = false;
    bool conclusive = true;  // the witness method may be inconclusive
    SplitMethod method = SplitMethod::Coboundary;
    std::optional<Cochain> trivializing;               // coboundary, when split
    std::optional<SectionSearchWitness> section_witness;  // section-search, when split
    std::optional<NonsplitCertificate> certificate;    // witness method, when non-split
};

// Decides whether G is permutationally split.
//  - Coboundary (default): exact; split iff the classifying cocycle bounds.
//  - SectionSearch: exhausts normalized sections s and normalized liftings
//    psi_s of s-hat([p],[p']) = s[p] s[p'] s[pp']^{-1} against the 2-cocycle
//    condition psi(p,p') psi(pp',p'') = s[p](psi(p',p'')) psi(p,p'p'').
//    Exact within budget; throws CapExceeded past it.
//  - NonsplitWitness: scans outer classes for [phi]^2 = [id] where no member
//    fixes any conjugator witness of its square; certifies non-splitness or
//    reports inconclusive.
SplitnessVerdict is_permutationally_split(const SymPresentation& sp,
                                          SplitMethod method = SplitMethod::Coboundary,
                                          const Caps& caps = default_caps());

std::optional<NonsplitCertificate> nonsplit_witness(const SymPresentation& sp);

// Explicit Sym(G) cell arithmetic: tau(g; phi, psi): E(phi) => E(psi) with
// psi = c_g o phi.
struct SymCell {
    Elem g;    // base element
    Elem src;  // aut index
    Elem dst;  // aut index
    bool operator==(const SymCell&) const = default;
};

bool sym_cell_valid(const OuterStructure& outer, const SymCell& c);
SymCell sym_identity_cell(const OuterStructure& outer, Elem aut_index);
/// tau(h; psi, chi) o tau(g; phi, psi) = tau(hg; phi, chi).
SymCell sym_compose(const OuterStructure& outer, const SymCell& later, const SymCell& earlier);
/// tau(g; ...) ox tau(g'; ...) = tau(g phi(g'); phi phi', psi psi').
SymCell sym_tensor(const OuterStructure& outer, const SymCell& a, const SymCell& b);
Elem sym_object_tensor(const OuterStructure& outer, Elem a, Elem b);

// Explicit arithmetic of Sym(n copies of G) together with the transport
// isomorphism from the wreath 2-product S_n wrwr Sym(G).
class CoproductSym {
public:
    CoproductSym(int n, GroupPtr base, const Caps& caps = default_caps());

    struct Object {
        std::vector<int> sigma;   // one-line permutation
        std::vector<Elem> phis;   // aut indices
        bool operator==(const Object&) const = default;
    };
    struct Cell {
        std::vector<int> sigma;
        std::vector<Elem> g;      // base elements
        std::vector<Elem> src;    // aut indices
        std::vector<Elem> dst;    // aut indices, dst_i = c_{g_i} o src_i
        bool operator==(const Cell&) const = default;
    };

    int n() const { return n_; }
    const OuterStructure& outer() const { return outer_; }
    long long object_count() const;

    bool cell_valid(const Cell& c) const;
    Object object_tensor(const Object& a, const Object& b) const;
    Cell cell_compose(const Cell& later, const Cell& earlier) const;
    Cell cell_tensor(const Cell& a, const Cell& b) const;

    // The same tensors computed through the wreath 2-product structure
    // (permute the component tuple, then operate componentwise); the
    // transport isomorphism is the identity on underlying data, so both
    // routes must agree exactly.
    Object object_tensor_via_wreath(const Object& a, const Object& b) const;
    Cell cell_tensor_via_wreath(const Cell& a, const Cell& b) const;

    Object object_by_rank(long long rank) const;
    Cell random_cell(std::uint64_t seed) const;

private:
    int n_;
    GroupPtr base_;
    OuterStructure outer_;
};

}  // namespace p2g
