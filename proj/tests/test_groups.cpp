#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "unitlab/io.hpp"
#include "unitlab/todd_coxeter.hpp"

using namespace unitlab;

namespace {

FiniteGroup cyc(int n) { return todd_coxeter(builtin("Cyclic", {n})); }

// Relabel a group's elements through a permutation; the result is isomorphic
// by construction but has a scrambled table.
FiniteGroup relabeled(const FiniteGroup& g, unsigned seed) {
    std::vector<int> p(g.order);
    std::iota(p.begin(), p.end(), 0);
    std::mt19937 rng(seed);
    std::shuffle(p.begin(), p.end(), rng);
    FiniteGroup h;
    h.order = g.order;
    h.identity = p[g.identity];
    h.mul.assign(g.order, std::vector<int>(g.order));
    h.inv.assign(g.order, 0);
    for (int a = 0; a < g.order; ++a) {
        h.inv[p[a]] = p[g.inv[a]];
        for (int b = 0; b < g.order; ++b) h.mul[p[a]][p[b]] = p[g.mul[a][b]];
    }
    for (int gen : g.generators) h.generators.push_back(p[gen]);
    validate_group(h);
    return h;
}

}  // namespace

TEST_CASE("element orders and exponent") {
    FiniteGroup g = todd_coxeter(builtin("Q8"));
    REQUIRE(exponent(g) == 4);
    std::map<int, int> census;
    for (int x = 0; x < g.order; ++x) census[element_order(g, x)]++;
    REQUIRE(census == std::map<int, int>{{1, 1}, {2, 1}, {4, 6}});
    REQUIRE(element_power(g, g.generators[0], 4) == g.identity);
    REQUIRE(element_power(g, g.generators[0], -1) == g.inv[g.generators[0]]);
}

TEST_CASE("characteristic subgroups of Q8") {
    FiniteGroup g = todd_coxeter(builtin("Q8"));
    REQUIRE(center(g).size() == 2);
    REQUIRE(commutator_subgroup(g).size() == 2);
    REQUIRE(frattini_subgroup(g).size() == 2);
    REQUIRE(omega_subgroup(g).size() == 2);
    REQUIRE(agemo_like(g, 1).size() == 2);
    REQUIRE(omega_like(g, 1).size() == 2);
    REQUIRE(omega_like(g, 2).size() == 8);
}

TEST_CASE("characteristic subgroups of S(2,2)") {
    FiniteGroup g = todd_coxeter(builtin("S22"));
    REQUIRE(g.order == 16);
    Subgroup om = omega_subgroup(g);
    Subgroup phi = frattini_subgroup(g);
    REQUIRE(center(g).size() == 4);
    REQUIRE(om.size() == 4);
    REQUIRE(phi.elements == om.elements);
    REQUIRE(is_central(g, om));
    REQUIRE(is_normal(g, om));
}

TEST_CASE("structural report of the dihedral group of order 8") {
    StructuralReport r = structural_report(todd_coxeter(builtin("DihedralPow", {3})));
    REQUIRE(r.order == 8);
    REQUIRE(r.exponent == 4);
    REQUIRE(!r.abelian);
    REQUIRE(r.num_involutions == 5);
    REQUIRE(r.num_classes == 5);
    REQUIRE(r.center_order == 2);
    REQUIRE(r.commutator_order == 2);
    REQUIRE(r.frattini_order == 2);
    REQUIRE(r.omega_order == 8);
    REQUIRE(!r.phi_equals_omega);
    REQUIRE(!r.omega_central);
    REQUIRE(!r.involutions_central);
    REQUIRE(r.commutator_in_omega);
}

TEST_CASE("the two Frattini computations agree on the catalog") {
    for (const char* fam : {"Q8", "S22", "H32", "H245"}) {
        FiniteGroup g = todd_coxeter(builtin(fam));
        REQUIRE(frattini_subgroup(g).elements ==
                frattini_via_maximal_subgroups(g).elements);
    }
    FiniteGroup d8 = todd_coxeter(builtin("DihedralPow", {3}));
    REQUIRE(frattini_subgroup(d8).elements ==
            frattini_via_maximal_subgroups(d8).elements);
}

TEST_CASE("conjugacy classes partition the group and Lagrange holds") {
    FiniteGroup g = todd_coxeter(builtin("S", {2, 3}));
    auto classes = conjugacy_classes(g);
    int total = 0;
    for (const auto& cl : classes) total += static_cast<int>(cl.size());
    REQUIRE(total == g.order);
    REQUIRE(static_cast<int>(classes.size()) == 20);
    for (const Subgroup& s :
         {center(g), commutator_subgroup(g), frattini_subgroup(g), omega_subgroup(g)})
        REQUIRE(g.order % s.size() == 0);
}

TEST_CASE("direct product") {
    FiniteGroup g = direct_product(todd_coxeter(builtin("Q8")), cyc(2));
    REQUIRE(g.order == 16);
    REQUIRE(involutions_of(g).size() == 3);
    REQUIRE(!is_abelian(g));
    FiniteGroup h = direct_product(cyc(4), cyc(4));
    REQUIRE(h.order == 16);
    REQUIRE(is_abelian(h));
    REQUIRE(exponent(h) == 4);
}

TEST_CASE("semidirect product with trivial action is the direct product") {
    FiniteGroup n = cyc(4), h = todd_coxeter(builtin("Q8"));
    std::vector<int> id(n.order);
    std::iota(id.begin(), id.end(), 0);
    FiniteGroup sd = semidirect_product(n, h, {id, id});
    FiniteGroup dp = direct_product(n, h);
    REQUIRE(sd.order == dp.order);
    REQUIRE(sd.mul == dp.mul);
}

TEST_CASE("a cyclic group extended by the quaternion group") {
    // C8 with a in Q8 acting by d -> d^5 and b acting trivially.
    FiniteGroup c8 = cyc(8), q8 = todd_coxeter(builtin("Q8"));
    std::vector<int> five(8), id(8);
    std::iota(id.begin(), id.end(), 0);
    for (int k = 0; k < 8; ++k) {
        // Element index k is the k-th power of the generator.
        REQUIRE(element_power(c8, c8.generators[0], k) == k);
        five[k] = (5 * k) % 8;
    }
    FiniteGroup sd = semidirect_product(c8, q8, {five, id});
    REQUIRE(sd.order == 64);
    FiniteGroup t3 = todd_coxeter(builtin("TheoremIII", {3}));
    REQUIRE(isomorphism_test(sd, t3).has_value());
}

TEST_CASE("semidirect product rejects bad actions") {
    FiniteGroup n = cyc(4), h = cyc(2);
    // Not an automorphism: swap identity with another element.
    REQUIRE_THROWS_AS(semidirect_product(n, h, {{1, 0, 3, 2}}), GroupError);
    // An automorphism whose order does not divide |h|: k -> 3k has order 2,
    // fine for C2; but pairing C4's inversion with C1-like trivial h is the
    // wrong arity.
    REQUIRE_THROWS_AS(semidirect_product(n, h, {}), GroupError);
}

TEST_CASE("quotient by a normal subgroup") {
    FiniteGroup g = todd_coxeter(builtin("Q8"));
    FiniteGroup q = quotient_by_normal(g, center(g));
    REQUIRE(q.order == 4);
    REQUIRE(is_abelian(q));
    REQUIRE(exponent(q) == 2);
}

TEST_CASE("central product of two quaternion groups has order 32") {
    FiniteGroup q8 = todd_coxeter(builtin("Q8"));
    int z = eval_word(q8, parse_word("a^2", {"a", "b"}));
    FiniteGroup cp = central_product(q8, q8, z, z);
    REQUIRE(cp.order == 32);
    REQUIRE(center(cp).size() == 2);
}

TEST_CASE("isomorphism testing separates and identifies") {
    FiniteGroup c4c4 = direct_product(cyc(4), cyc(4));
    FiniteGroup c2c8 = direct_product(cyc(2), cyc(8));
    REQUIRE(!isomorphism_test(c4c4, c2c8).has_value());
    FiniteGroup d8 = todd_coxeter(builtin("DihedralPow", {3}));
    FiniteGroup q8 = todd_coxeter(builtin("Q8"));
    REQUIRE(!isomorphism_test(d8, q8).has_value());
    FiniteGroup h32 = todd_coxeter(builtin("H32"));
    FiniteGroup t2 = todd_coxeter(builtin("TheoremIII", {2}));
    REQUIRE(!isomorphism_test(h32, t2).has_value());

    // S(2,2) is the semidirect product C4 x| C4 with the inverting action.
    FiniteGroup s22 = todd_coxeter(builtin("S22"));
    FiniteGroup sd = semidirect_product(cyc(4), cyc(4), {{0, 3, 2, 1}});
    auto phi = isomorphism_test(s22, sd);
    REQUIRE(phi.has_value());
    for (int a = 0; a < s22.order; ++a)
        for (int b = 0; b < s22.order; ++b)
            REQUIRE((*phi)[s22.mul[a][b]] == sd.mul[(*phi)[a]][(*phi)[b]]);
}

TEST_CASE("isomorphism testing is label-independent") {
    for (const char* fam : {"Q8", "S22", "H32"}) {
        FiniteGroup g = todd_coxeter(builtin(fam));
        FiniteGroup h = relabeled(g, 12345);
        REQUIRE(isomorphism_test(g, h).has_value());
    }
}

TEST_CASE("group JSON round trip") {
    FiniteGroup g = todd_coxeter(builtin("S22"));
    FiniteGroup h = group_from_json(group_to_json(g));
    REQUIRE(h.order == g.order);
    REQUIRE(h.identity == g.identity);
    REQUIRE(h.mul == g.mul);
    REQUIRE(h.inv == g.inv);
    REQUIRE(h.generators == g.generators);
    REQUIRE(h.names == g.names);
}

TEST_CASE("validate_group rejects broken tables") {
    FiniteGroup g = todd_coxeter(builtin("Q8"));
    FiniteGroup broken = g;
    broken.mul[3][4] = (broken.mul[3][4] + 1) % broken.order;
    REQUIRE_THROWS_AS(validate_group(broken), GroupError);
    broken = g;
    broken.generators = {g.identity};
    REQUIRE_THROWS_AS(validate_group(broken), GroupError);
}
