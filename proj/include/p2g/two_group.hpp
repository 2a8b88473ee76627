#pragma once

#include "p2g/autos.hpp"
#include "p2g/cochain.hpp"
#include "p2g/transfer.hpp"

#include <array>
#include <optional>

namespace p2g {

// Skeletal special 2-group A[1] x|_z G[0]: objects are pi0 elements, the
// morphisms of [x] are the pairs (u, [x]) with u in pi1, and the associator
// at (x, x', x'') is the cell (z(x,x',x''), x x' x'').
struct TwoGroupPresentation {
    GroupPtr pi0;
    ModulePtr pi1;  // module over pi0
    Cochain z;      // normalized 3-cocycle over (pi0, pi1)

    /// Verifies the cocycle and normalization invariants.
    static TwoGroupPresentation make(GroupPtr pi0, ModulePtr pi1, Cochain z,
                                     const Caps& caps = default_caps());
    /// No invariant checks; needed to represent corrupted candidates.
    static TwoGroupPresentation make_unchecked(GroupPtr pi0, ModulePtr pi1, Cochain z);
};

// The morphism (u, [x]): [x] -> [x].
struct TwoCell {
    Elem u;
    Elem x;
    bool operator==(const TwoCell&) const = default;
};

TwoCell identity_cell(const TwoGroupPresentation& t, Elem x);
/// (u, x) tensor (u', x') = (u + x . u', x x').
TwoCell tensor_cells(const TwoGroupPresentation& t, TwoCell a, TwoCell b);
/// Composition f o g (g first); both cells must sit on the same object.
TwoCell compose_cells(const TwoGroupPresentation& t, TwoCell f, TwoCell g);
TwoCell inverse_cell(const TwoGroupPresentation& t, TwoCell a);
/// a_{x,x',x''} = (z(x,x',x''), x x' x'').
TwoCell associator(const TwoGroupPresentation& t, Elem x, Elem y, Elem z);

struct CoherenceReport {
    bool pentagon_ok = true;
    bool triangle_ok = true;
    // Whether the cell-level pentagon verdict coincided with dz = 0 at every quadruple.
    bool pentagon_matches_cocycle = true;
    std::int64_t pentagon_violation_count = 0;
    std::int64_t triangle_violation_count = 0;
    // the first violations, up to kMaxListedViolations each
    std::vector<std::array<Elem, 4>> pentagon_violations;
    std::vector<std::array<Elem, 2>> triangle_violations;
    static constexpr std::size_t kMaxListedViolations = 4096;
    bool pass() const { return pentagon_ok && triangle_ok && pentagon_matches_cocycle; }
};

// Re-derives the pentagon from tensor/compose/associator arithmetic over all
// object quadruples and cross-checks it against the 3-cocycle condition;
// checks the triangle on all (x, y) via the associator at (x, e, y).
CoherenceReport verify_coherence(const TwoGroupPresentation& t, const Caps& caps = default_caps());

// pi0 = product, pi1 = product module (componentwise action), z = zeta(z_i).
// The result is re-verified against the presentation invariants.
TwoGroupPresentation product_presentation(const std::vector<TwoGroupPresentation>& family,
                                          const Caps& caps = default_caps());

struct WreathPresentation {
    TwoGroupPresentation pres;
    WreathModule wm;  // decode tables for pi0 = S_n wr pi0(T) and pi1 = pi1(T)^n
};

// pi0 = S_n wr pi0, pi1 = pi1^n with the permute-then-act action, z = xi(n, z).
WreathPresentation wreath_presentation(int n, const TwoGroupPresentation& t,
                                       const Caps& caps = default_caps());

// Object tensor in S_n wrwr G: (sigma, x) (sigma', x') =
// (sigma sigma', (x_{sigma'(1)} x'_1, ..., x_{sigma'(n)} x'_n)).
// Permutations are one-line arrays over 0..n-1.
std::pair<std::vector<int>, std::vector<Elem>> wreath_object_tensor(
    const FiniteGroup& base, const std::vector<int>& sigma, const std::vector<Elem>& xs,
    const std::vector<int>& sigma_p, const std::vector<Elem>& xs_p);

// Equivalence witness: pi0-isomorphism rho, compatible pi1-isomorphism beta,
// and the 2-cochain w with dw = (transport of z along (rho, beta)) - z'.
struct TwoGroupMorphismData {
    GroupHom rho;
    GroupHom beta;
    Cochain w;
};

// Decides equivalence of presentations by Sinh's classification: searches
// isomorphisms rho: pi0 -> pi0' and module isomorphisms beta over rho, then
// tests triviality of the transported cocycle difference. Deterministic:
// first witness in lexicographic (rho, beta) order.
std::optional<TwoGroupMorphismData> presentations_equivalent(const TwoGroupPresentation& t,
                                                             const TwoGroupPresentation& u,
                                                             const Caps& caps = default_caps());

}  // namespace p2g
