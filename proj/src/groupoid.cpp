#include "p2g/groupoid.hpp"

#include <algorithm>

namespace p2g {

GroupoidSpec normalize(std::vector<GroupoidComponent> raw) {
    for (const auto& c : raw) {
        if (c.multiplicity < 1) throw InvalidInput("groupoid component multiplicity must be >= 1");
        if (!c.group) throw InvalidInput("groupoid component without a group");
    }
    GroupoidSpec spec;
    for (auto& c : raw) {
        bool merged = false;
        for (auto& have : spec.components) {
            if (have.group->order() != c.group->order()) continue;
            if (is_isomorphic(have.group, c.group)) {
                have.multiplicity += c.multiplicity;
                // keep the canonically smaller representative
                if (FiniteGroup::compare(*c.group, *have.group) < 0) have.group = c.group;
                merged = true;
                break;
            }
        }
        if (!merged) spec.components.push_back(c);
    }
    std::sort(spec.components.begin(), spec.components.end(),
              [](const GroupoidComponent& a, const GroupoidComponent& b) {
                  return FiniteGroup::compare(*a.group, *b.group) < 0;
              });
    return spec;
}

AssembledInvariants assemble_invariants(const GroupoidSpec& spec, const Caps& caps) {
    if (spec.components.empty()) throw InvalidInput("assemble_invariants: empty groupoid spec");
    AssembledInvariants out;
    out.spec = spec;
    std::vector<TwoGroupPresentation> factors;
    for (const auto& comp : spec.components) {
        SymPresentation sp = sym_invariants(comp.group, caps);
        WreathPresentation wp = wreath_presentation(comp.multiplicity, sp.pres, caps);
        factors.push_back(wp.pres);
        out.component_sym.push_back(std::move(sp));
        out.component_wreath.push_back(std::move(wp));
    }
    out.pres = product_presentation(factors, caps);
    return out;
}

FiniteTypeSplitReport is_split_finite_type(const GroupoidSpec& spec, const Caps& caps) {
    FiniteTypeSplitReport report;
    AssembledInvariants inv = assemble_invariants(spec, caps);
    bool all = true;
    for (const auto& sp : inv.component_sym) {
        SplitnessVerdict v = is_permutationally_split(sp, SplitMethod::Coboundary, caps);
        all = all && v.split;
        report.per_component.push_back(std::move(v));
    }
    report.split = all;
    report.global_class_trivial = is_coboundary(inv.pres.z, caps).has_value();
    if (report.global_class_trivial != report.split)
        throw std::logic_error(
            "global Postnikov-class test disagrees with componentwise splitness");
    return report;
}

}  // namespace p2g
