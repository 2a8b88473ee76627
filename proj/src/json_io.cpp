#include "p2g/json_io.hpp"

namespace p2g {

json group_to_json(const FiniteGroup& g) {
    json j;
    j["order"] = g.order();
    j["identity"] = g.identity();
    j["table"] = g.table();
    if (!g.labels().empty()) j["labels"] = g.labels();
    if (!g.family_tag().empty()) j["family_tag"] = g.family_tag();
    return j;
}

GroupPtr group_from_json(const json& j, const Caps& caps) {
    if (!j.is_object() || !j.contains("order") || !j.contains("table") || !j.contains("identity"))
        throw InvalidInput("group json needs order, table and identity");
    int order = j.at("order").get<int>();
    auto table = j.at("table").get<std::vector<Elem>>();
    if (static_cast<std::size_t>(order) * order != table.size())
        throw InvalidInput("group json table size does not match order");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    std::string tag;
    if (j.contains("family_tag")) tag = j.at("family_tag").get<std::string>();
    return FiniteGroup::from_table(std::move(table), j.at("identity").get<Elem>(),
                                   std::move(labels), std::move(tag), caps);
}

json hom_to_json(const GroupHom& h) {
    return json{{"domain_order", h.domain->order()},
                {"codomain_order", h.codomain->order()},
                {"images", h.images}};
}

json outer_to_json(const OuterStructure& os) {
    json j;
    j["base"] = group_to_json(*os.base);
    j["aut_table"] = os.aut->table();
    j["aut_images"] = os.aut_images;
    j["inn"] = os.inn;
    j["out_table"] = os.out->table();
    j["projection"] = os.projection;
    j["section"] = os.section;
    j["conjugator"] = os.conjugator;
    return j;
}

json module_to_json(const GModule& m) {
    return json{{"acting", group_to_json(*m.acting)},
                {"coeff", group_to_json(*m.coeff)},
                {"action", m.action}};
}

json cochain_to_json(const Cochain& c) {
    json entries = json::array();
    c.for_each_nonidentity_tuple([&](std::span<const Elem> t, Elem v) {
        if (v != c.module()->zero())
            entries.push_back(json{std::vector<Elem>(t.begin(), t.end()), v});
        return true;
    });
    const auto& m = *c.module();
    auto ref = [](const FiniteGroup& g) {
        json r{{"order", g.order()}};
        if (!g.family_tag().empty()) r["family_tag"] = g.family_tag();
        return r;
    };
    return json{{"degree", c.degree()},
                {"acting_group_ref", ref(*m.acting)},
                {"coeff_ref", ref(*m.coeff)},
                {"entries", entries}};
}

json presentation_to_json(const TwoGroupPresentation& t) {
    return json{{"pi0", group_to_json(*t.pi0)},
                {"pi1", module_to_json(*t.pi1)},
                {"z", cochain_to_json(t.z)}};
}

json verdict_to_json(const SplitnessVerdict& v, const SymPresentation& sp) {
    json j;
    j["split"] = v.split;
    j["conclusive"] = v.conclusive;
    j["method"] = to_string(v.method);
    if (v.trivializing) j["trivializing_cochain"] = cochain_to_json(*v.trivializing);
    if (v.section_witness) {
        const auto& w = *v.section_witness;
        json sec = json::array();
        for (Elem a : w.section)
            sec.push_back(json{{"aut_index", a}, {"images", sp.outer.aut_images[a]}});
        json psi = json::array();
        const int q = sp.outer.out->order();
        for (Elem o1 = 0; o1 < q; ++o1)
            for (Elem o2 = 0; o2 < q; ++o2)
                psi.push_back(json{{"pair", {o1, o2}}, {"value", w.psi[o1 * q + o2]}});
        j["section_witness"] = json{{"section", sec}, {"psi", psi}};
    }
    if (v.certificate) {
        const auto& c = *v.certificate;
        json members = json::array();
        for (const auto& ev : c.evidence) {
            json m;
            m["member"] = ev.member;
            m["member_images"] = sp.outer.aut_images[ev.member];
            m["square"] = ev.square;
            m["square_images"] = sp.outer.aut_images[ev.square];
            m["conjugators"] = ev.conjugators;
            m["images_of_conjugators"] = ev.images;
            members.push_back(std::move(m));
        }
        j["certificate"] = json{{"out_class", c.out_class},
                                {"class_members", c.members},
                                {"evidence", members},
                                {"center_order", sp.center_elems.size()}};
    }
    return j;
}

}  // namespace p2g
