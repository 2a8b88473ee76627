#pragma once

#include "p2g/group.hpp"

#include <string>
#include <vector>

namespace p2g {

// Direct-sum decomposition of a finite abelian group into cyclic factors of
// prime-power order, with coordinate lookup tables in both directions.
struct CyclicFactor {
    long long prime;
    int exp;
    long long modulus;  // prime^exp
    Elem generator;
};

struct AbelianDecomposition {
    GroupPtr group;
    std::vector<CyclicFactor> factors;            // sorted by (prime, -exp)
    std::vector<std::vector<long long>> coords;   // element -> coordinate per factor
    std::vector<Elem> element_of_rank;            // mixed-radix rank -> element

    Elem from_coords(const std::vector<long long>& c) const;
    /// Invariant-factor description, e.g. "1", "Z2", "Z2 x Z4".
    std::string structure_string() const;
};

AbelianDecomposition decompose_abelian(const GroupPtr& g);

/// Invariant-factor string for an abelian group ("1" for the trivial group).
std::string abelian_structure_string(const GroupPtr& g);

}  // namespace p2g
