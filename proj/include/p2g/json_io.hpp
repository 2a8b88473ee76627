#pragma once

#include "p2g/groupoid.hpp"

#include <json.hpp>

namespace p2g {

using json = nlohmann::json;

/// {order, table (row-major), identity, labels?, family_tag?}; bit-exact round-trip.
json group_to_json(const FiniteGroup& g);
GroupPtr group_from_json(const json& j, const Caps& caps = default_caps());

json hom_to_json(const GroupHom& h);

/// Aut table, image arrays, inn/out/projection/section/conjugator arrays.
json outer_to_json(const OuterStructure& os);

json module_to_json(const GModule& m);

/// {degree, acting_group_ref, coeff_ref, entries: [[tuple, value], ...]} with
/// only the nonzero entries listed.
json cochain_to_json(const Cochain& c);

/// Bundles pi0, pi1 (with action arrays) and the cocycle entries.
json presentation_to_json(const TwoGroupPresentation& t);

// Full verdict with re-verifiable certificates: trivializing cochains carry
// their entries, section witnesses carry the section image arrays and the
// lifting table, non-split certificates carry the class members with their
// image arrays, squares, conjugator witnesses and images.
json verdict_to_json(const SplitnessVerdict& v, const SymPresentation& sp);

}  // namespace p2g
