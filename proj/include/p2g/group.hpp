#pragma once

#include "p2g/caps.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace p2g {

using Elem = std::int32_t;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Thrown when a construction or computation exceeds a configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when an input fails a structural precondition (bad table, bad index, ...).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A finite group as a dense multiplication table over element indices
// 0..order-1. Instances are immutable after construction and safe to share.
//
// Construction always validates the identity law, the Latin-square property
// and associativity (exhaustively for small orders, by Light's generator test
// above kLightTestThreshold; both are exact).
class FiniteGroup {
public:
    static constexpr int kLightTestThreshold = 512;

    // table is row-major: table[a * order + b] = a * b.
    static GroupPtr from_table(std::vector<Elem> table, Elem identity,
                               std::vector<std::string> labels = {},
                               std::string family_tag = {},
                               const Caps& caps = default_caps());

    int order() const { return order_; }
    Elem identity() const { return identity_; }
    Elem mul(Elem a, Elem b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    Elem inv(Elem a) const { return inverse_[a]; }
    Elem conjugate(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
    Elem power(Elem a, long long k) const;

    int element_order(Elem a) const { return elem_order_[a]; }
    int conjugacy_class_size(Elem a) const { return class_size_[a]; }
    int conjugacy_class_id(Elem a) const { return class_id_[a]; }

    bool is_abelian() const { return abelian_; }

    const std::vector<Elem>& table() const { return table_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& family_tag() const { return family_tag_; }
    std::string label(Elem a) const;

    // Total order on groups used for canonical normal forms: by order, then
    // by the flattened table, then identity.
    static int compare(const FiniteGroup& a, const FiniteGroup& b);

private:
    FiniteGroup() = default;

    int order_ = 0;
    Elem identity_ = 0;
    std::vector<Elem> table_;
    std::vector<Elem> inverse_;
    std::vector<int> elem_order_;
    std::vector<int> class_size_;
    std::vector<int> class_id_;
    bool abelian_ = false;
    std::vector<std::string> labels_;
    std::string family_tag_;
};

// Canonical constructors. Element orderings are fixed so downstream
// lexicographic tie-breaks are reproducible:
//   cyclic(n):    e, g, g^2, ..., g^{n-1}
//   dihedral(n):  e, r, ..., r^{n-1}, s, sr, ..., sr^{n-1}
//   symmetric(n): permutations in lexicographic one-line order
//   direct_product: mixed-radix over the factors, first factor most significant
GroupPtr cyclic(int n, const Caps& caps = default_caps());
GroupPtr dihedral(int n, const Caps& caps = default_caps());
GroupPtr symmetric(int n, const Caps& caps = default_caps());
GroupPtr direct_product(const std::vector<GroupPtr>& factors, const Caps& caps = default_caps());
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b, const Caps& caps = default_caps());
GroupPtr trivial_group();

/// Elements commuting with all of G, sorted ascending.
std::vector<Elem> center(const FiniteGroup& g);

/// g x g^{-1}.
Elem conjugate(const FiniteGroup& G, Elem g, Elem x);

/// Closure of the given elements under multiplication, sorted ascending.
std::vector<Elem> generated_subgroup(const FiniteGroup& g, const std::vector<Elem>& gens);

/// Small generating set picked greedily in canonical element order.
std::vector<Elem> greedy_generators(const FiniteGroup& g);

/// All permutations of {0..n-1} in lexicographic one-line order.
std::vector<std::vector<int>> permutations_lex(int n);

// Mixed-radix decode/encode helpers for direct products built by
// direct_product(): index <-> tuple of factor indices (first factor most
// significant).
struct ProductShape {
    std::vector<int> factor_orders;
    std::vector<Elem> decode(Elem x) const;
    Elem encode(const std::vector<Elem>& tuple) const;
};

}  // namespace p2g
