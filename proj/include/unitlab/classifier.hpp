#pragma once

// Theorem-level classification of finite 2-groups by explicit isomorphism
// against the known good families, the built-in catalog, and the end-to-end
// verification run.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "unitlab/involutions.hpp"
#include "unitlab/io.hpp"
#include "unitlab/todd_coxeter.hpp"

namespace unitlab {

struct Classification {
    enum class Kind { AbelianTriviallyGood, GoodByTheorem, BadByTheorem };
    Kind kind = Kind::BadByTheorem;
    std::string family;  // set for GoodByTheorem, e.g. "(i) S(2,3)"

    bool good() const { return kind != Kind::BadByTheorem; }
};

inline std::string to_string(const Classification& c) {
    switch (c.kind) {
        case Classification::Kind::AbelianTriviallyGood: return "abelian";
        case Classification::Kind::GoodByTheorem: return "good " + c.family;
        default: return "bad";
    }
}

// A nonabelian 2-group has commuting normalized-unit involutions exactly when
// it is one of: (i) S(n,m) (n,m >= 2) or Q8; (ii) Q8 x C_{2^k}, k >= 1;
// (iii) the cyclic-by-quaternion groups TheoremIII(n); (iv) the order-32 group
// H32. Families are tried in that order; the first isomorphism match wins.
inline Classification theorem_classify(const FiniteGroup& g) {
    if (g.order > 4096) throw std::invalid_argument("theorem_classify: order > 4096");
    int e = 0;
    while ((1 << e) < g.order) ++e;
    if ((1 << e) != g.order)
        throw std::invalid_argument("theorem_classify: order is not a power of 2");
    if (is_abelian(g)) return {Classification::Kind::AbelianTriviallyGood, ""};

    struct Candidate {
        std::string family;
        std::function<FiniteGroup()> build;
    };
    std::vector<Candidate> candidates;
    if (g.order == 8)
        candidates.push_back({"(i) Q8", [] { return todd_coxeter(builtin("Q8"), 100); }});
    for (int n = 2; n + 2 <= e; ++n) {
        int m = e - n;
        candidates.push_back({"(i) S(" + std::to_string(n) + "," + std::to_string(m) + ")",
                              [n, m, ord = g.order] {
                                  return todd_coxeter(builtin("S", {n, m}), 10 * ord);
                              }});
    }
    if (e >= 4)
        candidates.push_back({"(ii) Q8 x C" + std::to_string(1 << (e - 3)),
                              [k = e - 3] {
                                  FiniteGroup q8 = todd_coxeter(builtin("Q8"), 100);
                                  FiniteGroup c =
                                      todd_coxeter(builtin("Cyclic", {1 << k}), 10 << k);
                                  return direct_product(q8, c);
                              }});
    if (e >= 5)
        candidates.push_back({"(iii) TheoremIII(" + std::to_string(e - 3) + ")",
                              [n = e - 3, ord = g.order] {
                                  return todd_coxeter(builtin("TheoremIII", {n}), 10 * ord);
                              }});
    if (g.order == 32)
        candidates.push_back(
            {"(iv) H32", [] { return todd_coxeter(builtin("H32"), 400); }});

    for (const auto& c : candidates) {
        FiniteGroup h = c.build();
        if (h.order != g.order) continue;
        if (isomorphism_test(g, h)) return {Classification::Kind::GoodByTheorem, c.family};
    }
    return {Classification::Kind::BadByTheorem, ""};
}

// ---------------------------------------------------------------------------
// Catalog

struct CatalogEntry {
    std::string name;
    std::function<FiniteGroup()> build;
    int expected_order = 0;
    enum class Expected { Good, Bad, Abelian } expected = Expected::Good;
    // True for the groups with Frattini = Omega, central, of order 4
    // (the order-dividing-128 list used by the classification).
    bool structure_listed = false;
    std::string note;
};

inline std::vector<CatalogEntry> builtin_catalog() {
    auto tc = [](const char* family, std::vector<int> params, int limit) {
        return [family, params, limit] { return todd_coxeter(builtin(family, params), limit); };
    };
    auto q8 = [] { return todd_coxeter(builtin("Q8"), 100); };
    auto cyc = [](int n) { return todd_coxeter(builtin("Cyclic", {n}), 10 * n); };
    using E = CatalogEntry::Expected;
    std::vector<CatalogEntry> cat;
    // Good side.
    cat.push_back({"Q8", tc("Q8", {}, 100), 8, E::Good, false, "family (i)"});
    cat.push_back({"S22", tc("S", {2, 2}, 200), 16, E::Good, true, "family (i)"});
    cat.push_back({"S23", tc("S", {2, 3}, 400), 32, E::Good, false, "family (i)"});
    cat.push_back({"S32", tc("S", {3, 2}, 400), 32, E::Good, false, "family (i)"});
    cat.push_back({"Q8xC2",
                   [q8, cyc] { return direct_product(q8(), cyc(2)); },
                   16, E::Good, false, "family (ii)"});
    cat.push_back({"Q8xC4",
                   [q8, cyc] { return direct_product(q8(), cyc(4)); },
                   32, E::Good, true, "family (ii)"});
    cat.push_back({"TIII2", tc("TheoremIII", {2}, 400), 32, E::Good, true, "family (iii)"});
    cat.push_back({"TIII3", tc("TheoremIII", {3}, 800), 64, E::Good, false, "family (iii)"});
    cat.push_back({"H32", tc("H32", {}, 400), 32, E::Good, true, "family (iv)"});
    // Bad side.
    cat.push_back({"D8", tc("DihedralPow", {3}, 100), 8, E::Bad, false, "dihedral"});
    cat.push_back({"GQ16", tc("GenQuaternion", {4}, 200), 16, E::Bad, false,
                   "generalized quaternion of order 16"});
    cat.push_back({"ModS31", tc("ModularS", {3}, 200), 16, E::Bad, false,
                   "modular group of order 16"});
    cat.push_back({"Q8xC2xC2",
                   [q8, cyc] {
                       return direct_product(direct_product(q8(), cyc(2)), cyc(2));
                   },
                   32, E::Bad, false, "Omega too large"});
    cat.push_back({"Q8xQ8",
                   [q8] { return direct_product(q8(), q8()); },
                   64, E::Bad, true, "product of two quaternion groups"});
    cat.push_back({"H245", tc("H245", {}, 2000), 64, E::Bad, true, "Suzuki 2-group"});
    cat.push_back({"S22oQ8",
                   [q8] {
                       FiniteGroup s22 = todd_coxeter(builtin("S", {2, 2}), 200);
                       int zg = eval_word(s22, parse_word("a^2*b^2", {"a", "b"}));
                       FiniteGroup q = q8();
                       int zh = eval_word(q, parse_word("a^2", {"a", "b"}));
                       return central_product(s22, q, zg, zh);
                   },
                   64, E::Bad, true, "central product glued along a^2 b^2"});
    // Abelian controls.
    cat.push_back({"C4xC4",
                   [cyc] { return direct_product(cyc(4), cyc(4)); },
                   16, E::Abelian, true, "abelian control"});
    cat.push_back({"C2xC8",
                   [cyc] { return direct_product(cyc(2), cyc(8)); },
                   16, E::Abelian, false, "abelian control"});
    cat.push_back({"C16", [cyc] { return cyc(16); }, 16, E::Abelian, false,
                   "abelian control"});
    return cat;
}

// ---------------------------------------------------------------------------
// End-to-end verification

struct GroupReport {
    std::string name;
    int order = 0;
    StructuralReport structure;
    Classification classification;
    Verdict verdict;           // over GF(2)
    std::string witness1, witness2;  // literals when verdict is Bad
    bool agreement = false;    // verdict tag matches the classification
    bool unknown = false;
    std::vector<std::string> failures;  // entry-level check failures
};

struct PaperReport {
    std::vector<GroupReport> groups;
    bool witnesses_ok = false;          // hard-coded order-64 witness pairs
    bool quaternion_witness_ok = false; // order-16 generalized quaternion pair
    bool lemma4_ok = false;
    bool lemma5_ok = false;
    bool field_independence_ok = false;
    bool structure_ok = false;          // Frattini = Omega, central, order 4
    bool blackburn_ok = false;          // |G| <= |Omega|^3 consequence
    bool dimensions_ok = false;         // dim L and dim I identities
    bool omega_ideal_ok = false;        // Omega(V) = 1 + I(Omega(G)) where decidable
    std::vector<std::string> failures;
    int exit_code = 1;
};

struct PaperOptions {
    int max_dim = kDefaultMaxDim;
    int workers = 1;
    bool check_gf4 = true;
    bool check_omega_ideal = true;
};

// Computational verdict for one group: exhaustive enumeration when the kernel
// dimension permits, otherwise a witness search (which can only produce Bad).
inline Verdict decide(const Algebra& alg, int max_dim, int workers) {
    Verdict v = all_involutions_commute(alg, max_dim, workers);
    if (v.tag == Verdict::Tag::Unknown) {
        auto w = witness_search(alg);
        if (w) {
            v.tag = Verdict::Tag::Bad;
            v.witness = w;
            v.note = "witness search (enumeration out of range)";
        }
    }
    return v;
}

inline PaperReport run_paper_verification(const PaperOptions& opt = {}) {
    PaperReport rep;
    auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

    std::vector<CatalogEntry> cat = builtin_catalog();
    std::sort(cat.begin(), cat.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.name < b.name; });

    bool all_agree = true;
    bool any_unknown = false;
    rep.lemma4_ok = true;
    rep.field_independence_ok = true;
    rep.structure_ok = true;
    rep.blackburn_ok = true;
    rep.dimensions_ok = true;
    rep.omega_ideal_ok = true;

    for (const auto& entry : cat) {
        GroupReport gr;
        gr.name = entry.name;
        FiniteGroup g = entry.build();
        gr.order = g.order;
        if (g.order != entry.expected_order)
            gr.failures.push_back("constructed order " + std::to_string(g.order) +
                                  " != expected " + std::to_string(entry.expected_order));
        gr.structure = structural_report(g);
        gr.classification = theorem_classify(g);
        {
            using K = Classification::Kind;
            using E = CatalogEntry::Expected;
            bool match = (entry.expected == E::Abelian &&
                          gr.classification.kind == K::AbelianTriviallyGood) ||
                         (entry.expected == E::Good &&
                          gr.classification.kind == K::GoodByTheorem) ||
                         (entry.expected == E::Bad &&
                          gr.classification.kind == K::BadByTheorem);
            if (!match)
                gr.failures.push_back("classification " + to_string(gr.classification) +
                                      " does not match the catalog expectation");
        }

        Algebra alg(g, Field::GF2);
        gr.verdict = decide(alg, opt.max_dim, opt.workers);
        if (gr.verdict.witness) {
            gr.witness1 = alg.to_literal(gr.verdict.witness->first);
            gr.witness2 = alg.to_literal(gr.verdict.witness->second);
        }
        if (gr.verdict.tag == Verdict::Tag::Unknown) {
            gr.unknown = true;
            any_unknown = true;
        } else {
            bool verdict_good = gr.verdict.tag == Verdict::Tag::Good;
            gr.agreement = verdict_good == gr.classification.good();
            if (!gr.agreement) {
                all_agree = false;
                gr.failures.push_back("computational verdict disagrees with classification");
            }
        }

        // Structure list: Frattini = Omega, central, of order 4.
        if (entry.structure_listed &&
            !(gr.structure.phi_equals_omega && gr.structure.omega_central &&
              gr.structure.omega_order == 4)) {
            rep.structure_ok = false;
            fail(entry.name + ": expected Frattini = Omega, central, of order 4");
        }
        // |G| <= |Omega(G)|^3 for exponent-4 groups with Frattini = Omega of order 4.
        if (gr.structure.exponent == 4 && gr.structure.phi_equals_omega &&
            gr.structure.omega_order == 4 && gr.order > 64) {
            rep.blackburn_ok = false;
            fail(entry.name + ": violates |G| <= |Omega(G)|^3");
        }
        // dim L(KG) = |G| - #classes; dim I(Omega) = |G| - [G : Omega].
        {
            int dimL = alg.commutator_subspace().rank();
            Subgroup om = omega_subgroup(g);
            int dimI = alg.augmentation_ideal(om).rank();
            if (dimL != g.order - gr.structure.num_classes ||
                dimI != g.order - g.order / om.size()) {
                rep.dimensions_ok = false;
                fail(entry.name + ": dimension identity fails");
            }
        }
        // Omega(V) = 1 + I(Omega(G)) must hold for the good groups (where the
        // enumeration completes); for bad groups it may fail either way.
        if (opt.check_omega_ideal && entry.expected == CatalogEntry::Expected::Good) {
            OmegaCheck oc = omega_v_equals_ideal(alg, opt.max_dim, opt.workers);
            if (!oc.holds) {
                rep.omega_ideal_ok = false;
                fail(entry.name + ": Omega(V) != 1 + I(Omega(G)): " + oc.diagnostic);
            }
        }
        // Field independence for the small groups.
        if (opt.check_gf4 && g.order <= 16) {
            Algebra alg4(g, Field::GF4);
            Verdict v4 = decide(alg4, opt.max_dim, opt.workers);
            if (v4.tag == Verdict::Tag::Unknown || v4.tag != gr.verdict.tag) {
                rep.field_independence_ok = false;
                fail(entry.name + ": GF(4) verdict differs from GF(2)");
            }
        }
        // Abelian oracle.
        if (entry.expected == CatalogEntry::Expected::Abelian && g.order <= 16 &&
            !lemma4_oracle(alg)) {
            rep.lemma4_ok = false;
            fail(entry.name + ": square-zero set differs from I(Omega(G))");
        }

        for (const auto& f : gr.failures) fail(entry.name + ": " + f);
        rep.groups.push_back(std::move(gr));
    }

    // Hard-coded order-64 witness pairs, on their native presentations.
    rep.witnesses_ok = true;
    for (const auto& s2 : section2_witnesses()) {
        Algebra alg(s2.host, Field::GF2);
        if (!verify_witness_pair(alg, s2.lit1, s2.lit2)) {
            rep.witnesses_ok = false;
            fail(s2.host_name + ": hard-coded witness pair failed");
        }
    }
    // Noncommuting involutions in the order-16 generalized quaternion group:
    // 1+(1+c^2)(c+b) and 1+(1+c^2)(c+cb) with c = a of order 8.
    {
        FiniteGroup gq = todd_coxeter(builtin("GenQuaternion", {4}), 200);
        Algebra alg(gq, Field::GF2);
        rep.quaternion_witness_ok =
            verify_witness_pair(alg, "1+a+b+a^3+a^2*b", "1+a+a*b+a^3+a^3*b");
        if (!rep.quaternion_witness_ok) fail("GQ16: quaternion witness pair failed");
    }
    // Abelian square-zero oracle on the stated list.
    for (const char* spec : {"4", "8", "2x4", "2x8", "4x4", "16"}) {
        std::string s(spec);
        FiniteGroup g;
        auto cyc = [](int n) { return todd_coxeter(builtin("Cyclic", {n}), 10 * n); };
        if (s == "4") g = cyc(4);
        else if (s == "8") g = cyc(8);
        else if (s == "16") g = cyc(16);
        else if (s == "2x4") g = direct_product(cyc(2), cyc(4));
        else if (s == "2x8") g = direct_product(cyc(2), cyc(8));
        else g = direct_product(cyc(4), cyc(4));
        Algebra alg(g, Field::GF2);
        if (!lemma4_oracle(alg)) {
            rep.lemma4_ok = false;
            fail("abelian oracle failed for C" + s);
        }
    }
    rep.lemma5_ok = lemma5_oracle(2) && lemma5_oracle(3) && lemma5_oracle(4);
    if (!rep.lemma5_ok) fail("cyclic-subalgebra square oracle found a counterexample");

    bool any_failure = !rep.failures.empty() || !all_agree;
    rep.exit_code = any_failure ? 1 : (any_unknown ? 2 : 0);
    return rep;
}

inline nlohmann::json paper_report_to_json(const PaperReport& rep) {
    nlohmann::json j;
    j["groups"] = nlohmann::json::array();
    for (const auto& gr : rep.groups) {
        nlohmann::json e;
        e["group"] = gr.name;
        e["order"] = gr.order;
        e["structure"] = structural_report_to_json(gr.structure);
        e["classification"] = to_string(gr.classification);
        e["field"] = "gf2";
        e["verdict"] = to_string(gr.verdict.tag);
        e["kernel_dim"] = gr.verdict.kernel_dim;
        e["elapsed"] = gr.verdict.elapsed_seconds;
        if (gr.verdict.involution_count >= 0)
            e["involution_count"] = gr.verdict.involution_count;
        if (!gr.witness1.empty()) e["witness"] = {gr.witness1, gr.witness2};
        if (!gr.verdict.note.empty()) e["note"] = gr.verdict.note;
        e["agreement"] = gr.agreement;
        e["unknown"] = gr.unknown;
        j["groups"].push_back(std::move(e));
    }
    j["checks"] = {{"witness_pairs", rep.witnesses_ok},
                   {"quaternion_witness", rep.quaternion_witness_ok},
                   {"abelian_square_zero", rep.lemma4_ok},
                   {"cyclic_subalgebra_squares", rep.lemma5_ok},
                   {"field_independence", rep.field_independence_ok},
                   {"structure_list", rep.structure_ok},
                   {"order_bound", rep.blackburn_ok},
                   {"dimension_identities", rep.dimensions_ok},
                   {"omega_ideal", rep.omega_ideal_ok}};
    j["failures"] = rep.failures;
    j["exit_code"] = rep.exit_code;
    return j;
}

}  // namespace unitlab
