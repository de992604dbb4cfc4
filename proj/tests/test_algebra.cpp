#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "unitlab/algebra.hpp"
#include "unitlab/todd_coxeter.hpp"

using namespace unitlab;

namespace {

BitVec random_elem(const Algebra& alg, std::mt19937& rng) {
    BitVec v(alg.dim());
    for (int i = 0; i < alg.dim(); ++i)
        if (rng() & 1) v.set(i);
    return v;
}

}  // namespace

TEST_CASE("basic arithmetic in KQ8 over GF(2)") {
    FiniteGroup g = todd_coxeter(builtin("Q8"));
    Algebra alg(g, Field::GF2);
    REQUIRE(alg.dim() == 8);
    BitVec one = alg.one();
    BitVec a = alg.parse_literal("a");
    REQUIRE(alg.mul(one, a) == a);
    REQUIRE(alg.mul(a, one) == a);
    // (1+a)^2 = 1 + a^2 in characteristic 2.
    BitVec x = one ^ a;
    REQUIRE(alg.square(x) == (one ^ alg.parse_literal("a^2")));
    // a^4 = 1, so (1+a)^4 = 1 + a^4 = 0.
    REQUIRE(alg.square(alg.square(x)).none());
}

TEST_CASE("augmentation is a ring homomorphism onto the field") {
    FiniteGroup g = todd_coxeter(builtin("S22"));
    for (Field f : {Field::GF2, Field::GF4}) {
        Algebra alg(g, f);
        std::mt19937 rng(7);
        for (int t = 0; t < 20; ++t) {
            BitVec x = random_elem(alg, rng), y = random_elem(alg, rng);
            F4 cx = alg.augmentation(x), cy = alg.augmentation(y);
            F4 sum{cx.a != cy.a, cx.b != cy.b};
            F4 prod{(cx.a && cy.a) != (cx.b && cy.b),
                    ((cx.a && cy.b) != (cx.b && cy.a)) != (cx.b && cy.b)};
            REQUIRE(alg.augmentation(x ^ y) == sum);
            REQUIRE(alg.augmentation(alg.mul(x, y)) == prod);
        }
    }
}

TEST_CASE("the fast product agrees with the reference product") {
    for (const char* fam : {"Q8", "DihedralPow", "S22"}) {
        FiniteGroup g = fam == std::string("DihedralPow")
                            ? todd_coxeter(builtin(fam, {3}))
                            : todd_coxeter(builtin(fam));
        for (Field f : {Field::GF2, Field::GF4}) {
            Algebra alg(g, f);
            std::mt19937 rng(42);
            for (int t = 0; t < 25; ++t) {
                BitVec x = random_elem(alg, rng), y = random_elem(alg, rng);
                REQUIRE(alg.mul(x, y) == alg.mul_reference(x, y));
            }
        }
    }
}

TEST_CASE("GF(4) scalar plane behaves like w with w^2 = w + 1") {
    FiniteGroup g = todd_coxeter(builtin("Cyclic", {4}));
    Algebra alg(g, Field::GF4);
    BitVec one = alg.one();
    BitVec w = alg.basis_elem(g.identity, 1);
    // w * w = w + 1.
    REQUIRE(alg.mul(w, w) == (w ^ one));
    // w * (w + 1) = w^2 + w = 1.
    REQUIRE(alg.mul(w, w ^ one) == one);
    REQUIRE(alg.scale_w(one) == w);
    REQUIRE(alg.scale_w(w) == (w ^ one));
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        BitVec x = random_elem(alg, rng);
        REQUIRE(alg.scale_w(x) == alg.mul(w, x));
    }
}

TEST_CASE("polarization identity for squares") {
    FiniteGroup g = todd_coxeter(builtin("S", {2, 2}));
    for (Field f : {Field::GF2, Field::GF4}) {
        Algebra alg(g, f);
        std::mt19937 rng(99);
        for (int t = 0; t < 15; ++t) {
            BitVec x = random_elem(alg, rng), y = random_elem(alg, rng);
            BitVec lhs = alg.square(x ^ y);
            BitVec rhs = alg.square(x) ^ alg.square(y) ^ alg.mul(x, y) ^ alg.mul(y, x);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("dimension of the commutator subspace is |G| minus the class count") {
    struct Row {
        const char* fam;
        std::vector<int> params;
        int dimL;
    };
    for (const Row& r : {Row{"Q8", {}, 3}, Row{"S22", {}, 6}, Row{"S", {2, 3}, 12},
                         Row{"H32", {}, 18}, Row{"GenQuaternion", {4}, 9},
                         Row{"Cyclic", {8}, 0}}) {
        FiniteGroup g = todd_coxeter(builtin(r.fam, r.params));
        Algebra alg(g, Field::GF2);
        REQUIRE(alg.commutator_subspace().rank() == r.dimL);
        REQUIRE(r.dimL ==
                g.order - static_cast<int>(conjugacy_classes(g).size()));
    }
}

TEST_CASE("the commutator subspace doubles over GF(4)") {
    FiniteGroup g = todd_coxeter(builtin("Q8"));
    REQUIRE(Algebra(g, Field::GF4).commutator_subspace().rank() == 6);
}

TEST_CASE("augmentation ideal of a subgroup") {
    FiniteGroup g = todd_coxeter(builtin("Q8"));
    Algebra alg(g, Field::GF2);
    Subgroup om = omega_subgroup(g);
    REQUIRE(om.size() == 2);
    GF2Basis ideal = alg.augmentation_ideal(om);
    // dim I(N) = |G| - [G : N].
    REQUIRE(ideal.rank() == 4);
    // The ideal is two-sided: closed under left and right multiplication by
    // group elements.
    for (const auto& v : ideal.rows())
        for (int x = 0; x < g.order; ++x) {
            REQUIRE(ideal.contains(alg.mul(alg.basis_elem(x), v)));
            REQUIRE(ideal.contains(alg.mul(v, alg.basis_elem(x))));
        }
    // Over GF(4) the GF(2)-dimension doubles.
    REQUIRE(Algebra(g, Field::GF4).augmentation_ideal(om).rank() == 8);
}

TEST_CASE("bar element kills g - 1") {
    FiniteGroup g = todd_coxeter(builtin("GenQuaternion", {4}));
    Algebra alg(g, Field::GF2);
    for (int x : {g.generators[0], g.generators[1]}) {
        BitVec xbar = alg.bar(x);
        REQUIRE(xbar.popcount() == element_order(g, x));
        BitVec diff = alg.basis_elem(x) ^ alg.one();
        REQUIRE(alg.mul(xbar, diff).none());
        REQUIRE(alg.mul(diff, xbar).none());
    }
}

TEST_CASE("augmentation-zero basis spans the kernel of the augmentation") {
    FiniteGroup g = todd_coxeter(builtin("Q8"));
    for (Field f : {Field::GF2, Field::GF4}) {
        Algebra alg(g, f);
        auto basis = alg.augzero_basis();
        int expect = (f == Field::GF2 ? 1 : 2) * (g.order - 1);
        REQUIRE(static_cast<int>(basis.size()) == expect);
        GF2Basis b(alg.dim());
        for (const auto& v : basis) {
            REQUIRE(alg.augmentation(v).is_zero());
            REQUIRE(b.insert(v));
        }
    }
}

TEST_CASE("unit inverse via the nilpotent part") {
    FiniteGroup g = todd_coxeter(builtin("S22"));
    Algebra alg(g, Field::GF2);
    std::mt19937 rng(17);
    for (int t = 0; t < 10; ++t) {
        BitVec u = random_elem(alg, rng);
        if (!alg.augmentation(u).is_one()) u ^= alg.one();
        if (!alg.augmentation(u).is_one()) continue;
        BitVec ui = alg.unit_inverse(u);
        REQUIRE(alg.mul(u, ui) == alg.one());
        REQUIRE(alg.mul(ui, u) == alg.one());
    }
    REQUIRE_THROWS_AS(alg.unit_inverse(alg.zero()), std::invalid_argument);
}

TEST_CASE("literal round trip") {
    FiniteGroup g = todd_coxeter(builtin("Q8"));
    {
        Algebra alg(g, Field::GF2);
        for (const char* lit : {"1", "a", "1+a+b", "1+a+b+a^3+a^2*b", "a*b+b*a"}) {
            BitVec v = alg.parse_literal(lit);
            REQUIRE(alg.parse_literal(alg.to_literal(v)) == v);
        }
        REQUIRE(alg.to_literal(alg.zero()) == "0");
        REQUIRE_THROWS_AS(alg.parse_literal("w*a"), std::invalid_argument);
    }
    {
        Algebra alg(g, Field::GF4);
        for (const char* lit : {"w*a", "1+w2*b", "w*1+a^2", "1+w*a+w2*a*b"}) {
            BitVec v = alg.parse_literal(lit);
            REQUIRE(alg.parse_literal(alg.to_literal(v)) == v);
        }
    }
}

TEST_CASE("elements of mismatched algebras are rejected") {
    FiniteGroup g = todd_coxeter(builtin("Q8"));
    Algebra a2(g, Field::GF2), a4(g, Field::GF4);
    REQUIRE_THROWS_AS(a2.mul(a2.one(), a4.one()), std::invalid_argument);
    REQUIRE_THROWS_AS(a2.scale_w(a2.one()), std::invalid_argument);
}
