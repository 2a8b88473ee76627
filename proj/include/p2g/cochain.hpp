#pragma once

#include "p2g/group.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace p2g {

// A finite abelian coefficient group with a left action of a finite group.
// The action law action[gh] = action[g] o action[h] and abelianness of the
// coefficients are re-checked at construction.
struct GModule {
    GroupPtr acting;
    GroupPtr coeff;
    std::vector<std::vector<Elem>> action;  // acting index -> automorphism image array of coeff

    Elem act(Elem g, Elem a) const { return action[g][a]; }
    Elem add(Elem a, Elem b) const { return coeff->mul(a, b); }
    Elem neg(Elem a) const { return coeff->inv(a); }
    Elem zero() const { return coeff->identity(); }
};

using ModulePtr = std::shared_ptr<const GModule>;

ModulePtr make_module(GroupPtr acting, GroupPtr coeff, std::vector<std::vector<Elem>> action);
ModulePtr trivial_module(GroupPtr acting, GroupPtr coeff);

// A normalized k-cochain with values in a GModule, stored densely over the
// tuples of non-identity acting-group elements (identity slots are implicit
// zeros). An empty value store means the zero cochain of that degree, which
// keeps zero cochains over huge groups representable.
class Cochain {
public:
    Cochain() = default;  // placeholder; only assignment is valid on it
    Cochain(int degree, ModulePtr module);  // zero cochain
    static Cochain build(int degree, ModulePtr module,
                         const std::function<Elem(std::span<const Elem>)>& fill,
                         const Caps& caps = default_caps());

    int degree() const { return degree_; }
    const ModulePtr& module() const { return module_; }
    bool is_zero_stored() const { return values_.empty(); }

    Elem value(std::span<const Elem> args) const;
    Elem value(std::initializer_list<Elem> args) const;

    bool same_shape_as(const Cochain& other) const;
    bool operator==(const Cochain& other) const;

    /// Pointwise difference this - other (same degree and module).
    Cochain minus(const Cochain& other, const Caps& caps = default_caps()) const;

    // Iterate all tuples of non-identity elements of the acting group in
    // lexicographic order; stops early if visit returns false.
    void for_each_nonidentity_tuple(
        const std::function<bool(std::span<const Elem>, Elem)>& visit) const;

    std::int64_t stored_entries() const { return static_cast<std::int64_t>(values_.size()); }

private:
    int degree_ = 0;
    ModulePtr module_;
    std::vector<Elem> values_;

    std::int64_t tuple_count() const;
    std::int64_t rank_of(std::span<const Elem> args) const;
};

std::int64_t nonidentity_tuple_count(const FiniteGroup& g, int degree);

/// Bar-resolution differential; the result is normalized whenever the input is.
Cochain coboundary(const Cochain& c, const Caps& caps = default_caps());

/// (dc)(args) at a single tuple, without materializing the full coboundary.
Elem coboundary_value(const Cochain& c, std::span<const Elem> args);

/// True iff the coboundary vanishes identically.
bool is_cocycle(const Cochain& z, const Caps& caps = default_caps());

// Decides triviality of the class of a normalized cocycle z: returns a
// normalized (k-1)-cochain c with dc = z when one exists. The witness is
// re-checked against z before it is returned. Exact for any finite abelian
// coefficient module (linear algebra over Z_{p^e} per prime p, with an
// exhaustive-enumeration fallback for tiny instances).
std::optional<Cochain> is_coboundary(const Cochain& z, const Caps& caps = default_caps());

/// Uniform random normalized cochain (for property tests and the CLI self-checks).
Cochain random_cochain(int degree, const ModulePtr& module, std::uint64_t seed,
                       const Caps& caps = default_caps());

namespace detail {
/// Brute-force search over all normalized (k-1)-cochains; used as the small-case
/// fallback and as an independent oracle. Null when the search space exceeds the cap.
std::optional<std::optional<Cochain>> enumerate_coboundary_witness(
    const Cochain& z, std::int64_t max_candidates, const Caps& caps = default_caps());
}  // namespace detail

}  // namespace p2g
