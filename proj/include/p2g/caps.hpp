#pragma once

#include <cstdint>

namespace p2g {

// Resource limits shared across the library. Everything here is a hard cap:
// exceeding one raises CapExceeded instead of silently degrading.
struct Caps {
    int max_group_order = 5040;              // dense tables get expensive past S_7
    int max_symmetric_n = 8;
    std::int64_t max_cochain_entries = 1 << 23;
    std::int64_t max_sections = 1'000'000;   // section-search: product of coset sizes
    std::int64_t max_liftings = 1'000'000;   // section-search: lifting choices per section
    int max_equiv_pi0 = 24;                  // presentations_equivalent iso-search budget
    int max_equiv_pi1 = 16;
};

const Caps& default_caps();

}  // namespace p2g
