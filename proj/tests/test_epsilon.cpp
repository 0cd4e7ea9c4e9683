// Gauss sums, the character-multiset engine, the generic epsilon0 formula,
// its closed forms, and the Rankin-Selberg gamma factor routes.

#include <glneps/epsilon.hpp>
#include <glneps/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace glneps;

namespace {
const std::vector<long> kQuartic = {2, 0, 0, 2, 1};
}

TEST_CASE("basic Gauss sum values over F_3") {
    AmbientField F(3, 4, kQuartic);
    GaussContext ctx(F, AdditiveChar{1});
    CHECK(ctx.gauss_sum(1, 0) == Cyclotomic(1));
    CHECK(ctx.gauss_sum(2, 0) == Cyclotomic(1));
    // the quadratic Gauss sum of F_3 under this sign convention is -i sqrt(3)
    CHECK(ctx.gauss_sum(1, 1) == Cyclotomic::zeta(3, 2) - Cyclotomic::zeta(3, 1));
    // |tau|^2 = q^n for every nontrivial character
    CHECK(ctx.gauss_sum(4, 66).abs_square() == Cyclotomic(81));
    CHECK(ctx.gauss_sum(2, 1).abs_square() == Cyclotomic(9));
    // cached and uncached paths agree, including across the orbit
    CHECK(ctx.gauss_sum(4, 66) == ctx.gauss_sum_direct(4, 66));
    CHECK(ctx.gauss_sum_direct(4, 38) == ctx.gauss_sum_direct(4, 66));
    CHECK(ctx.gauss_sum_orbit(frobenius_orbit(GammaChar{3, 4, 38})) == ctx.gauss_sum(4, 66));
    CHECK_THROWS_AS(GaussContext(F, AdditiveChar{3}), precondition_error);
}

TEST_CASE("a Hasse-Davenport instance in closed form") {
    AmbientField F(3, 4, kQuartic);
    GaussContext ctx(F, AdditiveChar{1});
    // F-set of the quadratic character of F_3 at ambient degree 2
    Cyclotomic lifted = ctx.gauss_sum_fset(f_set(GammaChar{3, 1, 1}, 2));
    CHECK(lifted == ctx.gauss_sum(1, 1).pow(2));
    CHECK(lifted == Cyclotomic(-3));  // (i sqrt 3)^2
}

TEST_CASE("partition-valued functions track degrees and the trivial slot") {
    PartitionFn lambda(3);
    lambda.add(GammaChar{3, 4, 66}, {1});
    lambda.add(GammaChar{3, 1, 0}, {2, 1});
    CHECK(lambda.total_degree() == 4 + 3);
    CHECK(lambda.at_one() == Partition{2, 1});
    CHECK(s_exponent(lambda) == 3);
    CHECK_FALSE(cor27_applies(lambda));
    PartitionFn mu(3);
    mu.add(GammaChar{3, 2, 1}, {1, 1});
    CHECK(cor27_applies(mu));
    CHECK(s_exponent(mu) == 0);
    // adding twice concatenates partitions
    mu.add(GammaChar{3, 2, 3}, {2});  // same orbit as 2:1
    auto entries = mu.entries();
    REQUIRE(entries.size() == 1);
    CHECK(entries[0].partition == Partition{2, 1, 1});
    CHECK_THROWS_AS(normalized_partition(Partition{1, 0}), precondition_error);
}

TEST_CASE("character multisets are canonical and F-stability is enforced") {
    CharMultiset s(3);
    s.add(GammaChar{3, 4, 20});  // canonicalizes to 2:2
    CHECK(s.multiplicity(GammaChar{3, 2, 2}) == 1);
    CHECK_FALSE(s.f_stable());
    CHECK_THROWS_AS(s.validate(), non_f_stable_input);
    s.add(GammaChar{3, 2, 6});  // the Frobenius partner
    CHECK(s.f_stable());
    CHECK(s.degree() == 2);
    CHECK(s.orbits().size() == 1);
    CHECK_THROWS_AS(s.add(GammaChar{3, 1, 0}, 0), precondition_error);
}

TEST_CASE("tensor multisets have the CRT F-set shape") {
    FOrbit f = frobenius_orbit(GammaChar{3, 4, 66});
    FOrbit g = frobenius_orbit(GammaChar{3, 2, 1});
    CharMultiset t = ms_tensor(orbit_multiset(f), orbit_multiset(g));
    CHECK(t.degree() == 8);
    // gcd(4,2) = 2 F-sets, each spanning lcm(4,2) = 4 characters
    long span = 0;
    for (const auto& entry : t.orbits()) span += entry.mult * entry.orbit.degree();
    CHECK(span == 8);
    CHECK(t.f_stable());
    // wedge2 + sym2 partition the tensor square
    CharMultiset sq = ms_tensor(orbit_multiset(f), orbit_multiset(f));
    CharMultiset both = ms_direct_sum(ms_wedge2(orbit_multiset(f)), ms_sym2(orbit_multiset(f)));
    CHECK(sq.members() == both.members());
    CHECK(ms_wedge2(orbit_multiset(f)).degree() == 6);
}

TEST_CASE("epsilon0 of the trivial representation of GL_1") {
    AmbientField F(3, 4, kQuartic);
    GaussContext ctx(F, AdditiveChar{1});
    CharMultiset s(3);
    s.add(GammaChar{3, 1, 0});
    QHalfScalar eps = epsilon0_generic(ctx, s);
    CHECK(eps.equals(QHalfScalar(3, Cyclotomic(-1), -1)));  // -q^(-1/2)
    PartitionFn lambda(3);
    lambda.add(GammaChar{3, 1, 0}, {1});
    CHECK(epsilon0(ctx, lambda).equals(eps));
    CHECK(epsilon0_direct_sum(ctx, lambda, lambda).equals(eps * eps));
}

TEST_CASE("tensor closed form agrees with the generic engine on GL_1 pairs") {
    AmbientField F(3, 4, kQuartic);
    GaussContext ctx(F, AdditiveChar{1});
    FOrbit quad = frobenius_orbit(GammaChar{3, 1, 1});
    QHalfScalar closed = epsilon0_tensor_cuspidal(ctx, quad, quad);
    // quad * quad is trivial, so epsilon0 = -q^(-1/2)
    CHECK(closed.equals(QHalfScalar(3, Cyclotomic(-1), -1)));
    CHECK(closed.equals(epsilon0_generic(ctx, ms_tensor(orbit_multiset(quad),
                                                        orbit_multiset(quad)))));
    // non-regular orbits are rejected
    FOrbit bad{3, 2, {2}};  // level 2 but orbit size 1
    CHECK_THROWS_AS(epsilon0_tensor_cuspidal(ctx, bad, quad), non_regular_orbit);
}

TEST_CASE("exterior square closed form agrees with the generic engine") {
    AmbientField F(3, 4, kQuartic);
    GaussContext ctx(F, AdditiveChar{1});
    for (long e : {66L, 1L, 2L}) {
        FOrbit f = frobenius_orbit(GammaChar{3, 4, e});
        if (f.degree() != 4) continue;
        QHalfScalar closed = epsilon0_wedge2_cuspidal(ctx, f);
        QHalfScalar generic = epsilon0_generic(ctx, ms_wedge2(orbit_multiset(f)));
        INFO("exponent " << e);
        CHECK(closed.equals(generic));
    }
    FOrbit line = frobenius_orbit(GammaChar{3, 1, 1});
    CHECK_THROWS_AS(epsilon0_wedge2_cuspidal(ctx, line), degree_too_small);
}

TEST_CASE("epsilon0 is unitary off the trivial character") {
    AmbientField F(3, 4, kQuartic);
    GaussContext ctx(F, AdditiveChar{1});
    PartitionFn lambda(3);
    lambda.add(GammaChar{3, 4, 66}, {2});
    lambda.add(GammaChar{3, 2, 1}, {1, 1});
    CHECK(restriction_multiset(lambda).trivial_multiplicity() == 0);
    CHECK(epsilon0(ctx, lambda).abs_square() == Cyclotomic(1));
}

TEST_CASE("gamma factor routes agree and the refuted formula differs") {
    SuiteReport rep = reproduce_example();
    INFO("failures: " << (rep.failures.empty() ? "none" : rep.failures[0].name));
    CHECK(rep.all_pass());
    CHECK(rep.cases == 6);
}

TEST_CASE("gamma factor precondition and modulus checks") {
    AmbientField F(3, 4, kQuartic);
    GaussContext ctx(F, AdditiveChar{1});
    FOrbit f = frobenius_orbit(GammaChar{3, 4, 66});
    FOrbit g = frobenius_orbit(GammaChar{3, 2, 1});
    CHECK_THROWS_AS(rs_gamma_thm44(ctx, g, f), degree_order_violation);
    QHalfScalar gamma = rs_gamma_via_epsilon(ctx, f, g);
    CHECK(gamma.abs_square() == Cyclotomic(Rational(1, 9)));  // q^(-m(n-m-1))
    // for n=2, m=1 the factor is unitary and Nien-Zhang has the same modulus
    FOrbit f2 = frobenius_orbit(GammaChar{3, 2, 1});
    FOrbit g1 = frobenius_orbit(GammaChar{3, 1, 1});
    AmbientField F2(3, 2);
    GaussContext ctx2(F2, AdditiveChar{1});
    QHalfScalar gam = rs_gamma_via_epsilon(ctx2, f2, g1);
    QHalfScalar nz = nien_zhang_rhs(ctx2, f2, g1);
    CHECK(gam.abs_square() == Cyclotomic(1));
    CHECK(nz.abs_square() == Cyclotomic(1));
}

TEST_CASE("verification sweeps pass end to end") {
    SECTION("gauss basics") {
        SuiteReport rep = verify_gauss_basics({2, 3}, 3);
        CHECK(rep.all_pass());
        CHECK(rep.cases > 0);
    }
    SECTION("hasse davenport") {
        SuiteReport rep = verify_hasse_davenport({2, 3}, 4);
        CHECK(rep.all_pass());
        CHECK(rep.cases > 0);
    }
    SECTION("degenerate wedge2") {
        SuiteReport rep = verify_degenerate_wedge2();
        CHECK(rep.all_pass());
        CHECK(rep.cases > 0);
    }
    SECTION("oracle equivalence, reduced bounds") {
        SuiteReport rep = verify_oracle_equivalence({2, 3}, 3, 9, 20260824, 2);
        CHECK(rep.all_pass());
        CHECK(rep.cases > 0);
    }
}
