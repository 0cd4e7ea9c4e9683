// Characters of the multiplicative direct limit: canonical levels,
// Frobenius orbits, inflation, F-sets, and evaluation against the field.

#include <glneps/ambient_field.hpp>
#include <glneps/characters.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace glneps;

namespace {
const std::vector<long> kQuartic = {2, 0, 0, 2, 1};
}

TEST_CASE("canonicalization finds the minimal level") {
    // level-4 exponent 20 over F_3 is fixed by Frobenius squared: level 2
    CHECK(orbit_degree(GammaChar{3, 4, 20}) == 2);
    CHECK(canonicalize(GammaChar{3, 4, 20}) == GammaChar{3, 2, 2});
    // exponent 66 is genuinely of level 4
    CHECK(orbit_degree(GammaChar{3, 4, 66}) == 4);
    CHECK(canonicalize(GammaChar{3, 4, 66}) == GammaChar{3, 4, 66});
    // the trivial character lives at level 1
    CHECK(canonicalize(GammaChar{3, 4, 0}) == GammaChar{3, 1, 0});
    CHECK(is_trivial(GammaChar{3, 4, 0}));
    CHECK_FALSE(is_trivial(GammaChar{3, 4, 66}));
    CHECK(normalized(GammaChar{3, 2, -1}).exponent == 7);
}

TEST_CASE("inflation is inverse to canonicalization and composes") {
    GammaChar beta{3, 2, 1};
    CHECK(inflate(beta, 8) == GammaChar{3, 8, 820});  // (3^8-1)/(3^2-1) = 820
    CHECK(inflate(beta, 4) == GammaChar{3, 4, 10});
    CHECK(canonicalize(inflate(beta, 8)) == beta);
    CHECK(inflate(inflate(beta, 4), 8) == inflate(beta, 8));
    CHECK_THROWS_AS(inflate(beta, 3), non_divisor_degree);
}

TEST_CASE("Frobenius orbits enumerate exponent cycles") {
    FOrbit f = frobenius_orbit(GammaChar{3, 4, 66});
    CHECK(f.exponents == std::vector<long>{66, 38, 34, 22});
    CHECK(f.degree() == 4);
    CHECK(f.rep() == GammaChar{3, 4, 66});
    FOrbit g = frobenius_orbit(GammaChar{3, 2, 1});
    CHECK(g.exponents == std::vector<long>{1, 3});
    CHECK(frobenius_orbit(GammaChar{3, 1, 0}).exponents == std::vector<long>{0});
    CHECK(frobenius_twist(GammaChar{3, 4, 66}) == GammaChar{3, 4, 38});
}

TEST_CASE("regularity means a full-size orbit") {
    CHECK(is_regular(GammaChar{3, 2, 1}, 2));
    CHECK_FALSE(is_regular(GammaChar{3, 2, 4}, 2));  // 4*3 = 12 = 4 mod 8
    CHECK_FALSE(is_regular(GammaChar{3, 1, 1}, 2));  // level-1 char inflated is non-regular
    CHECK(is_regular(GammaChar{3, 1, 1}, 1));
    CHECK_THROWS_AS(is_regular(GammaChar{3, 2, 1}, 3), non_divisor_degree);
}

TEST_CASE("F-sets count inflated copies of an orbit") {
    FSet h = f_set(GammaChar{3, 2, 1}, 8);
    CHECK(h.multiplicity() == 4);
    CHECK(f_set(GammaChar{3, 1, 1}, 4).multiplicity() == 4);
    CHECK_THROWS_AS(f_set(GammaChar{3, 2, 1}, 5), non_divisor_degree);
}

TEST_CASE("multiplicative evaluation matches the exponent convention") {
    AmbientField F(3, 4, kQuartic);
    GammaChar alpha{3, 4, 66};
    // alpha(xi_4) = zeta_80^66 = zeta_40^33
    CHECK(char_eval(F, alpha, F.xi()) == Cyclotomic::zeta(80, 66));
    CHECK(char_eval(F, alpha, F.xi()) == Cyclotomic::zeta(40, 33));
    // multiplicativity and Frobenius equivariance on every nonzero element
    for (long j = 0; j < 80; j += 3) {
        Fq x = F.exp(j), y = F.exp(j + 1);
        CHECK(char_eval(F, alpha, F.mul(x, y)) ==
              char_eval(F, alpha, x) * char_eval(F, alpha, y));
        CHECK(char_eval(F, frobenius_twist(alpha), x) == char_eval(F, alpha, F.frobenius(x)));
    }
    CHECK_THROWS_AS(char_eval(F, alpha, F.zero()), zero_element);
}

TEST_CASE("inflation evaluates through the norm") {
    AmbientField F(3, 4, kQuartic);
    GammaChar beta{3, 2, 1};
    GammaChar beta4 = inflate(beta, 4);
    for (long j = 0; j < 80; ++j) {
        Fq x = F.exp(j);
        CHECK(char_eval(F, beta4, x) == char_eval(F, beta, F.norm(x, 4, 2)));
    }
}

TEST_CASE("the sign at -1 matches direct evaluation") {
    AmbientField F(3, 4, kQuartic);
    Fq minus_one = F.neg(F.one());
    for (long e = 0; e < 8; ++e) {
        GammaChar g{3, 2, e};
        CHECK(char_eval(F, g, minus_one) == Cyclotomic(sign_at_minus_one(g)));
    }
    CHECK(sign_at_minus_one(GammaChar{3, 2, 1}) == -1);
    CHECK(sign_at_minus_one(GammaChar{3, 2, 2}) == 1);
    CHECK(sign_at_minus_one(GammaChar{2, 3, 5}) == 1);  // q = 2 has no -1
}

TEST_CASE("additive characters evaluate through the trace") {
    AmbientField F(3, 4, kQuartic);
    AdditiveChar psi{1};
    CHECK(additive_eval(F, psi, 1, F.one()) == Cyclotomic::zeta(3, 1));
    CHECK(additive_eval(F, psi, 1, F.zero()) == Cyclotomic(1));
    CHECK(additive_eval(F, inverse(psi, 3), 1, F.one()) == Cyclotomic::zeta(3, 2));
    CHECK(inverse(psi, 3).a == 2);
    CHECK(inverse(inverse(psi, 3), 3).a == psi.a);
    // additivity and Frobenius invariance of psi_n
    for (long j = 0; j < 80; j += 5) {
        Fq x = F.exp(j), y = F.exp(j + 2);
        CHECK(additive_eval(F, psi, 4, F.add(x, y)) ==
              additive_eval(F, psi, 4, x) * additive_eval(F, psi, 4, y));
        CHECK(additive_eval(F, psi, 4, F.frobenius(x)) == additive_eval(F, psi, 4, x));
    }
}

TEST_CASE("character specs print as level:exponent") {
    CHECK(char_spec(GammaChar{3, 4, 66}) == "4:66");
    CHECK(char_spec(GammaChar{3, 1, 0}) == "1:0");
}
