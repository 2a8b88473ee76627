#include "p2g/cli.hpp"

#include "p2g/abelian.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

namespace p2g::cli {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!try_consume(c)) throw ParseError(pos, std::string("expected ") + what);
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_' || text[pos] == '-'))
            ++pos;
        if (pos == start) throw ParseError(pos, "expected a name");
        return text.substr(start, pos - start);
    }
    long long number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError(pos, "expected a number");
        return std::stoll(text.substr(start, pos - start));
    }
    // The multiplication sign in groupoid specs: 'x', '*' or UTF-8 U+00D7.
    bool try_consume_times() {
        skip_ws();
        if (pos < text.size() && (text[pos] == 'x' || text[pos] == '*')) {
            ++pos;
            return true;
        }
        if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos]) == 0xC3 &&
            static_cast<unsigned char>(text[pos + 1]) == 0x97) {
            pos += 2;
            return true;
        }
        return false;
    }
};

GroupPtr parse_expr(Cursor& cur, const Caps& caps);

GroupPtr parse_atom(Cursor& cur, const Caps& caps) {
    std::size_t at = cur.pos;
    std::string name = cur.ident();
    if (name == "product") {
        cur.expect('(', "'(' after product");
        std::vector<GroupPtr> factors;
        factors.push_back(parse_expr(cur, caps));
        while (cur.try_consume(',')) factors.push_back(parse_expr(cur, caps));
        cur.expect(')', "')' closing product");
        return direct_product(factors, caps);
    }
    if (name == "table") {
        cur.expect(':', "':' after table");
        cur.expect('@', "'@' before the file path");
        std::size_t start = cur.pos;
        while (cur.pos < cur.text.size() && cur.text[cur.pos] != ',' && cur.text[cur.pos] != ')' &&
               cur.text[cur.pos] != ' ')
            ++cur.pos;
        std::string path = cur.text.substr(start, cur.pos - start);
        std::ifstream in(path);
        if (!in) throw InvalidInput("cannot open group table file '" + path + "'");
        json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw InvalidInput("invalid JSON in '" + path + "': " + e.what());
        }
        return group_from_json(j, caps);
    }
    cur.expect(':', "':' after the family name");
    long long n = cur.number();
    if (name == "dihedral") return dihedral(static_cast<int>(n), caps);
    if (name == "symmetric") return symmetric(static_cast<int>(n), caps);
    if (name == "cyclic") return cyclic(static_cast<int>(n), caps);
    throw ParseError(at, "unknown group family '" + name + "'");
}

GroupPtr parse_expr(Cursor& cur, const Caps& caps) { return parse_atom(cur, caps); }

}  // namespace

GroupPtr parse_group_expression(const std::string& text, const Caps& caps) {
    Cursor cur{text};
    GroupPtr g = parse_expr(cur, caps);
    if (!cur.eof()) throw ParseError(cur.pos, "trailing input");
    return g;
}

std::vector<GroupoidComponent> parse_groupoid_spec(const std::string& text, const Caps& caps) {
    std::vector<GroupoidComponent> comps;
    std::size_t first = text.find_first_not_of(" \t");
    if (first != std::string::npos && text[first] == '[') {
        json j;
        try {
            j = json::parse(text);
        } catch (const std::exception& e) {
            throw InvalidInput(std::string("invalid groupoid JSON: ") + e.what());
        }
        for (const auto& item : j) {
            if (!item.contains("n") || !item.contains("group"))
                throw InvalidInput("groupoid JSON items need fields n and group");
            GroupoidComponent c;
            c.multiplicity = item.at("n").get<int>();
            if (item.at("group").is_string())
                c.group = parse_group_expression(item.at("group").get<std::string>(), caps);
            else
                c.group = group_from_json(item.at("group"), caps);
            comps.push_back(std::move(c));
        }
        return comps;
    }
    Cursor cur{text};
    while (true) {
        GroupoidComponent c;
        c.multiplicity = static_cast<int>(cur.number());
        if (!cur.try_consume_times()) throw ParseError(cur.pos, "expected multiplication sign");
        c.group = parse_expr(cur, caps);
        comps.push_back(std::move(c));
        if (!cur.try_consume(',')) break;
    }
    if (!cur.eof()) throw ParseError(cur.pos, "trailing input");
    if (comps.empty()) throw InvalidInput("empty groupoid spec");
    return comps;
}

std::string group_structure_string(const GroupPtr& g) {
    if (g->is_abelian()) return abelian_structure_string(g);
    if (!g->family_tag().empty()) return g->family_tag();
    return "order" + std::to_string(g->order());
}

namespace {

struct Options {
    bool json_out = false;
    bool timing = false;
    std::string method = "coboundary";
    std::optional<int> cap_order;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> positional;
};

Options parse_options(const std::vector<std::string>& args, std::size_t from) {
    Options o;
    for (std::size_t i = from; i < args.size(); ++i) {
        const std::string& a = args[i];
        auto need_value = [&](const char* flag) -> const std::string& {
            if (i + 1 >= args.size()) throw InvalidInput(std::string(flag) + " needs a value");
            return args[++i];
        };
        if (a == "--json")
            o.json_out = true;
        else if (a == "--timing")
            o.timing = true;
        else if (a == "--method")
            o.method = need_value("--method");
        else if (a == "--cap-order")
            o.cap_order = std::stoi(need_value("--cap-order"));
        else if (a == "--seed")
            o.seed = std::stoull(need_value("--seed"));
        else if (!a.empty() && a[0] == '-')
            throw InvalidInput("unknown flag '" + a + "'");
        else
            o.positional.push_back(a);
    }
    if (o.method != "coboundary" && o.method != "section-search" && o.method != "witness" &&
        o.method != "all")
        throw InvalidInput("unknown method '" + o.method +
                           "' (expected coboundary|section-search|witness|all)");
    return o;
}

Caps caps_from(const Options& o) {
    Caps caps = default_caps();
    if (o.cap_order) caps.max_group_order = *o.cap_order;
    return caps;
}

json invariants_json(const SymPresentation& sp) {
    json inv;
    inv["pi0_order"] = sp.pres.pi0->order();
    inv["pi0_structure"] = group_structure_string(sp.pres.pi0);
    inv["pi1_order"] = sp.pres.pi1->coeff->order();
    inv["pi1_structure"] = group_structure_string(sp.pres.pi1->coeff);
    bool action_trivial = true;
    for (const auto& img : sp.pres.pi1->action)
        for (Elem x = 0; x < sp.pres.pi1->coeff->order(); ++x)
            if (img[x] != x) action_trivial = false;
    inv["action_trivial"] = action_trivial;
    std::int64_t nonzero = 0;
    sp.pres.z.for_each_nonidentity_tuple([&](std::span<const Elem>, Elem v) {
        if (v != sp.pres.pi1->zero()) ++nonzero;
        return true;
    });
    inv["cocycle_nonzero_entries"] = nonzero;
    return inv;
}

std::string elementary_description(const GroupPtr& pi0, const GroupPtr& pi1_coeff,
                                   bool action_trivial) {
    const bool p0 = pi0->order() == 1;
    const bool p1 = pi1_coeff->order() == 1;
    if (p0 && p1) return "1";
    auto wrap = [](std::string s) {
        if (s.find(' ') != std::string::npos) s = "(" + s + ")";
        return s;
    };
    std::string a = wrap(group_structure_string(pi1_coeff)) + "[1]";
    std::string b = wrap(group_structure_string(pi0)) + "[0]";
    if (p1) return b;
    if (p0) return a;
    return a + (action_trivial ? " x " : " x| ") + b;
}

struct MethodOutcome {
    std::optional<SplitnessVerdict> verdict;  // empty when the budget fired
    json j;
};

MethodOutcome run_method(const SymPresentation& sp, const std::string& method, const Caps& caps,
                         bool budget_is_error) {
    SplitMethod m = SplitMethod::Coboundary;
    if (method == "section-search") m = SplitMethod::SectionSearch;
    if (method == "witness") m = SplitMethod::NonsplitWitness;
    try {
        SplitnessVerdict v = is_permutationally_split(sp, m, caps);
        json j = verdict_to_json(v, sp);
        return {std::move(v), std::move(j)};
    } catch (const CapExceeded& e) {
        if (budget_is_error) throw;
        return {std::nullopt, json{{"method", method}, {"budget_exceeded", e.what()}}};
    }
}

json analyze_group(const GroupPtr& g, const std::string& input, const Options& opt,
                   const Caps& caps, int& exit_code) {
    SymPresentation sp = sym_invariants(g, caps);
    json report;
    report["schema"] = 1;
    report["command"] = "analyze";
    report["input"] = input;
    report["group"] = json{{"order", g->order()},
                           {"family", g->family_tag()},
                           {"center_order", sp.center_elems.size()},
                           {"aut_order", sp.outer.aut->order()},
                           {"inn_order", sp.outer.inn.size()},
                           {"out_order", sp.outer.out->order()}};
    report["invariants"] = invariants_json(sp);

    std::vector<std::string> methods;
    if (opt.method == "all")
        methods = {"coboundary", "section-search", "witness"};
    else
        methods = {opt.method};

    // A requested single method that exceeds its budget is a hard error;
    // under "all", budget-limited methods are reported as such and skipped in
    // the agreement check (the coboundary method always runs and is exact).
    std::optional<bool> decided;
    json per_method;
    for (const auto& name : methods) {
        MethodOutcome mo = run_method(sp, name, caps, opt.method != "all");
        per_method[name] = mo.j;
        if (mo.verdict && mo.verdict->conclusive) {
            if (decided && *decided != mo.verdict->split)
                throw std::logic_error("splitness methods disagree on " + input);
            decided = mo.verdict->split;
        }
    }
    if (opt.method == "all") {
        report["methods"] = per_method;
        report["verdict"] = per_method["coboundary"];
    } else {
        report["verdict"] = per_method[opt.method];
    }

    if (decided) {
        report["split"] = *decided;
        if (*decided)
            report["equivalent_to"] = elementary_description(
                sp.pres.pi0, sp.pres.pi1->coeff, report["invariants"]["action_trivial"]);
        exit_code = *decided ? 0 : 3;
    } else {
        report["split"] = nullptr;
        exit_code = 2;
    }
    return report;
}

std::string render_analyze_text(const json& r) {
    std::ostringstream os;
    const auto& g = r["group"];
    os << "group " << g["family"].get<std::string>() << ": order " << g["order"]
       << ", |Z|=" << g["center_order"] << ", |Aut|=" << g["aut_order"]
       << ", |Inn|=" << g["inn_order"] << ", |Out|=" << g["out_order"] << "\n";
    const auto& inv = r["invariants"];
    os << "pi0 = Out: " << inv["pi0_structure"].get<std::string>() << " (order "
       << inv["pi0_order"] << "); pi1 = Z: " << inv["pi1_structure"].get<std::string>()
       << "; action " << (inv["action_trivial"].get<bool>() ? "trivial" : "nontrivial") << "\n";
    os << "classifying cocycle: " << inv["cocycle_nonzero_entries"] << " nonzero entries\n";
    if (r["split"].is_null()) {
        os << "verdict: INCONCLUSIVE (method " << r["verdict"]["method"].get<std::string>()
           << ")\n";
    } else if (r["split"].get<bool>()) {
        os << "verdict: SPLIT (method " << r["verdict"]["method"].get<std::string>() << "), "
           << "Sym(G) ~= " << r["equivalent_to"].get<std::string>() << "\n";
    } else {
        os << "verdict: NON-SPLIT (method " << r["verdict"]["method"].get<std::string>() << ")\n";
        if (r["verdict"].contains("certificate")) {
            const auto& c = r["verdict"]["certificate"];
            os << "  witness outer class " << c["out_class"] << " with "
               << c["class_members"].size() << " members; no member fixes a conjugator witness\n";
        }
    }
    return os.str();
}

json cmd_analyze(const Options& opt, int& exit_code) {
    if (opt.positional.size() != 1)
        throw InvalidInput("analyze expects exactly one group expression");
    Caps caps = caps_from(opt);
    GroupPtr g = parse_group_expression(opt.positional[0], caps);
    return analyze_group(g, opt.positional[0], opt, caps, exit_code);
}

json cmd_groupoid(const Options& opt, int& exit_code) {
    if (opt.positional.size() != 1) throw InvalidInput("groupoid expects exactly one spec");
    Caps caps = caps_from(opt);
    auto raw = parse_groupoid_spec(opt.positional[0], caps);
    GroupoidSpec spec = normalize(std::move(raw));

    AssembledInvariants inv = assemble_invariants(spec, caps);
    json report;
    report["schema"] = 1;
    report["command"] = "groupoid";
    report["input"] = opt.positional[0];

    json comps = json::array();
    bool all_split = true;
    for (std::size_t i = 0; i < spec.components.size(); ++i) {
        const auto& sp = inv.component_sym[i];
        SplitMethod m = SplitMethod::Coboundary;
        if (opt.method == "section-search") m = SplitMethod::SectionSearch;
        if (opt.method == "witness") m = SplitMethod::NonsplitWitness;
        SplitnessVerdict v = is_permutationally_split(sp, m, caps);
        if (opt.method == "all") {
            try {
                SplitnessVerdict v2 =
                    is_permutationally_split(sp, SplitMethod::SectionSearch, caps);
                if (v2.split != v.split) throw std::logic_error("splitness methods disagree");
            } catch (const CapExceeded&) {
                // section-search budget exhausted for this component; the
                // coboundary verdict stands on its own
            }
        }
        if (!v.conclusive) {
            // The witness scan alone cannot certify splitness; fall back for the verdict.
            v = is_permutationally_split(sp, SplitMethod::Coboundary, caps);
        }
        all_split = all_split && v.split;
        json c;
        c["multiplicity"] = spec.components[i].multiplicity;
        c["group"] = json{{"order", spec.components[i].group->order()},
                          {"family", spec.components[i].group->family_tag()}};
        c["verdict"] = verdict_to_json(v, sp);
        c["invariants"] = invariants_json(sp);
        comps.push_back(std::move(c));
    }
    report["components"] = comps;

    json global;
    global["pi0_order"] = inv.pres.pi0->order();
    global["pi0_structure"] = group_structure_string(inv.pres.pi0);
    global["pi1_order"] = inv.pres.pi1->coeff->order();
    global["pi1_structure"] = group_structure_string(inv.pres.pi1->coeff);
    bool action_trivial = true;
    for (const auto& img : inv.pres.pi1->action)
        for (Elem x = 0; x < inv.pres.pi1->coeff->order(); ++x)
            if (img[x] != x) action_trivial = false;
    global["action_trivial"] = action_trivial;
    bool global_trivial = is_coboundary(inv.pres.z, caps).has_value();
    global["class_trivial"] = global_trivial;
    if (global_trivial != all_split)
        throw std::logic_error("global Postnikov-class test disagrees with components");
    global["split"] = all_split;
    if (all_split)
        global["equivalent_to"] =
            elementary_description(inv.pres.pi0, inv.pres.pi1->coeff, action_trivial);
    report["global"] = global;
    exit_code = all_split ? 0 : 3;
    return report;
}

std::string render_groupoid_text(const json& r) {
    std::ostringstream os;
    for (const auto& c : r["components"]) {
        os << "component " << c["multiplicity"] << " x " << c["group"]["family"].get<std::string>()
           << ": " << (c["verdict"]["split"].get<bool>() ? "split" : "NON-SPLIT") << "\n";
    }
    const auto& g = r["global"];
    os << "global: pi0 " << g["pi0_structure"].get<std::string>() << " (order " << g["pi0_order"]
       << "), pi1 " << g["pi1_structure"].get<std::string>() << ", class "
       << (g["class_trivial"].get<bool>() ? "trivial" : "nontrivial") << "\n";
    os << "verdict: " << (g["split"].get<bool>() ? "SPLIT" : "NON-SPLIT");
    if (g.contains("equivalent_to"))
        os << ", Sym ~= " << g["equivalent_to"].get<std::string>();
    os << "\n";
    return os.str();
}

json cmd_table(const Options& opt, int& exit_code) {
    if (opt.positional.size() != 2)
        throw InvalidInput("table expects a family and a range, e.g. symmetric 1..6");
    const std::string& family = opt.positional[0];
    if (family != "symmetric" && family != "dihedral" && family != "cyclic")
        throw InvalidInput("table family must be symmetric, dihedral or cyclic");
    const std::string& range = opt.positional[1];
    auto dots = range.find("..");
    if (dots == std::string::npos) throw InvalidInput("range must look like a..b");
    int lo = std::stoi(range.substr(0, dots));
    int hi = std::stoi(range.substr(dots + 2));
    if (lo > hi) throw InvalidInput("empty range");
    Caps caps = caps_from(opt);

    json report;
    report["schema"] = 1;
    report["command"] = "table";
    report["input"] = family + " " + range;
    json rows = json::array();
    for (int n = lo; n <= hi; ++n) {
        GroupPtr g = family == "symmetric" ? symmetric(n, caps)
                     : family == "dihedral" ? dihedral(n, caps)
                                            : cyclic(n, caps);
        SymPresentation sp = sym_invariants(g, caps);
        SplitnessVerdict v = is_permutationally_split(sp, SplitMethod::Coboundary, caps);
        json row;
        row["n"] = n;
        row["group_order"] = g->order();
        row["invariants"] = invariants_json(sp);
        row["split"] = v.split;
        row["equivalent_to"] =
            v.split ? json(elementary_description(sp.pres.pi0, sp.pres.pi1->coeff,
                                                  row["invariants"]["action_trivial"].get<bool>()))
                    : json();
        rows.push_back(std::move(row));
    }
    report["rows"] = rows;
    exit_code = 0;
    return report;
}

std::string render_table_text(const json& r) {
    std::ostringstream os;
    os << "n\t|G|\tpi0\tpi1\tsplit\tequivalent_to\n";
    for (const auto& row : r["rows"]) {
        os << row["n"] << "\t" << row["group_order"] << "\t"
           << row["invariants"]["pi0_structure"].get<std::string>() << "\t"
           << row["invariants"]["pi1_structure"].get<std::string>() << "\t"
           << (row["split"].get<bool>() ? "yes" : "NO") << "\t"
           << (row["equivalent_to"].is_null() ? "-" : row["equivalent_to"].get<std::string>())
           << "\n";
    }
    return os.str();
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    RunResult res;
    if (args.empty() || args[0] == "--help" || args[0] == "help") {
        res.out =
            "usage: permsym <command> ...\n"
            "  analyze  <group-expr>     structure and splitness of Sym(G)\n"
            "  groupoid <spec>           finite-type groupoid analysis\n"
            "  table    <family> <a..b>  one row per n\n"
            "flags: --json --method coboundary|section-search|witness|all\n"
            "       --cap-order N --seed S --timing\n"
            "group expressions: dihedral:N symmetric:N cyclic:N product(...) table:@file\n";
        res.exit_code = args.empty() ? 2 : 0;
        return res;
    }
    const std::string& command = args[0];
    auto started = std::chrono::steady_clock::now();
    try {
        Options opt = parse_options(args, 1);
        json report;
        if (command == "analyze")
            report = cmd_analyze(opt, res.exit_code);
        else if (command == "groupoid")
            report = cmd_groupoid(opt, res.exit_code);
        else if (command == "table")
            report = cmd_table(opt, res.exit_code);
        else
            throw InvalidInput("unknown command '" + command + "'");

        if (opt.seed) report["seed"] = *opt.seed;
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - started)
                           .count();
        if (opt.timing) report["timing_ms"] = elapsed;
        if (opt.json_out) {
            res.out = report.dump(2) + "\n";
        } else {
            if (command == "analyze") res.out = render_analyze_text(report);
            if (command == "groupoid") res.out = render_groupoid_text(report);
            if (command == "table") res.out = render_table_text(report);
            res.err = "elapsed: " + std::to_string(elapsed) + " ms\n";
        }
    } catch (const CapExceeded& e) {
        res.err = std::string("error: cap exceeded: ") + e.what() + "\n";
        res.exit_code = 2;
    } catch (const std::exception& e) {
        res.err = std::string("error: ") + e.what() + "\n";
        res.exit_code = 2;
    }
    return res;
}

}  // namespace p2g::cli
