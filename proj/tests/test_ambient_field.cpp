// Ambient finite field tables: modulus validation, subfield towers, trace
// and norm, Frobenius, and anchoring of an externally supplied modulus.

#include <glneps/ambient_field.hpp>
#include <glneps/characters.hpp>

#include <catch2/catch_amalgamated.hpp>

using namespace glneps;

namespace {
const std::vector<long> kQuartic = {2, 0, 0, 2, 1};  // x^4 + 2x^3 + 2 over F_3
}

TEST_CASE("the quartic modulus field F_81 has the expected structure") {
    AmbientField F(3, 4, kQuartic);
    CHECK(F.order() == 80);
    CHECK(F.q() == 3);
    CHECK(F.degree() == 4);
    CHECK(F.eval_poly(kQuartic, F.xi()) == F.zero());
    // -1 is the unique element of order 2
    Fq minus_one = F.neg(F.one());
    CHECK(F.dlog(minus_one) == 40);
    CHECK(F.exp(40) == minus_one);
    // compatible subfield generators
    CHECK(F.subfield_generator(2) == F.exp(10));
    CHECK(F.subfield_generator(1) == F.exp(40));
    CHECK(F.subfield_order(2) == 8);
    CHECK(F.norm(F.xi(), 4, 2) == F.exp(10));
    CHECK(F.residue(F.norm(F.xi(), 4, 1)) == 2);  // norm to F_3 of a generator is -1
}

TEST_CASE("exp and dlog are inverse bijections") {
    AmbientField F(2, 6);
    for (long j = 0; j < F.order(); ++j) CHECK(F.dlog(F.exp(j)) == j);
    CHECK_THROWS_AS(F.dlog(F.zero()), zero_element);
    CHECK_THROWS_AS(F.inv(F.zero()), zero_element);
}

TEST_CASE("field axioms and Frobenius additivity hold on samples") {
    AmbientField F(3, 4, kQuartic);
    for (long i = 0; i < 80; i += 7)
        for (long j = 0; j < 80; j += 11) {
            Fq a = F.exp(i), b = F.exp(j);
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            CHECK(F.mul(a, F.inv(a)) == F.one());
            CHECK(F.sub(F.add(a, b), b) == a);
            CHECK(F.mul(a, F.add(b, F.one())) == F.add(F.mul(a, b), a));
            CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
            CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
        }
    // Frobenius has order L on a generator
    Fq x = F.xi();
    for (int i = 0; i < 4; ++i) x = F.frobenius(x);
    CHECK(x == F.xi());
}

TEST_CASE("trace and norm are transitive through the tower") {
    AmbientField F(3, 4, kQuartic);
    for (long j = 0; j < 80; ++j) {
        Fq x = F.exp(j);
        CHECK(F.trace(x, 4, 1) == F.trace(F.trace(x, 4, 2), 2, 1));
        CHECK(F.norm(x, 4, 1) == F.norm(F.norm(x, 4, 2), 2, 1));
    }
    // trace of 1 from level n to level m is n/m in the prime field
    CHECK(F.trace(F.one(), 4, 2) == F.from_residue(2));
    CHECK(F.trace(F.one(), 4, 1) == F.from_residue(4 % 3));
    CHECK_THROWS_AS(F.trace(F.xi(), 4, 3), non_divisor_degree);
    CHECK_THROWS_AS(F.trace(F.exp(1), 2, 1), element_not_in_subfield);
}

TEST_CASE("subfield membership tracks divisibility of discrete logs") {
    AmbientField F(3, 4, kQuartic);
    CHECK(F.in_subfield(F.exp(10), 2));
    CHECK_FALSE(F.in_subfield(F.exp(1), 2));
    CHECK(F.in_subfield(F.zero(), 1));
    CHECK(F.dlog_at_level(F.exp(30), 2) == 3);
    CHECK_THROWS_AS(F.dlog_at_level(F.exp(1), 2), element_not_in_subfield);
    CHECK_THROWS_AS(F.subfield_generator(3), non_divisor_degree);
}

TEST_CASE("the default modulus search is deterministic and self-consistent") {
    AmbientField a(3, 4);
    AmbientField b(3, 4);
    CHECK(a.modulus() == b.modulus());
    // rebuilding with the found modulus reproduces the same tables
    AmbientField c(3, 4, a.modulus());
    CHECK(c.exp(17) == a.exp(17));
    // degree-1 fields work, including the trivial group F_2^x
    AmbientField f2(2, 1);
    CHECK(f2.order() == 1);
    CHECK(f2.xi() == f2.one());
    AmbientField f5(5, 1);
    CHECK(f5.order() == 4);
    CHECK(f5.pow(f5.xi(), 4) == f5.one());
}

TEST_CASE("invalid moduli and scales are rejected with specific errors") {
    CHECK_THROWS_AS(AmbientField(4, 2), non_prime_base);
    CHECK_THROWS_AS(AmbientField(3, 4, std::vector<long>{1, 0, 0, 0, 1}), reducible_modulus);
    // x^4+x^3+x^2+x+1 is irreducible over F_3 but its roots have order 5
    CHECK_THROWS_AS(AmbientField(3, 4, std::vector<long>{1, 1, 1, 1, 1}), non_primitive_modulus);
    CHECK_THROWS_AS(AmbientField(3, 16), scale_exceeded);
    CHECK_THROWS_AS(AmbientField(3, 4, std::vector<long>{2, 0, 2, 1}), precondition_error);
}

TEST_CASE("anchoring a smaller modulus preserves character labels") {
    AmbientField F(3, 8);
    CharRelabel rl = anchor_relabel(F, kQuartic);
    CHECK(rl.anchor_degree == 4);
    CHECK(std::gcd(rl.k, 80L) == 1);
    Fq root = F.pow(F.subfield_generator(4), rl.k);
    CHECK(F.eval_poly(kQuartic, root) == F.zero());
    // a character labeled e relative to the anchored root evaluates there
    // exactly as the label promises, at every level dividing the anchor
    long e4 = rl.apply(F, 4, 66);
    CHECK(char_eval(F, GammaChar{3, 4, e4}, root) == Cyclotomic::zeta(80, 66));
    long e2 = rl.apply(F, 2, 1);
    Fq root2 = F.pow(root, 80 / 8);  // compatible degree-2 generator under the anchor
    CHECK(char_eval(F, GammaChar{3, 2, e2}, root2) == Cyclotomic::zeta(8, 1));
    CHECK_THROWS_AS(rl.apply(F, 8, 1), non_divisor_degree);
    // a quartic whose roots are non-generators cannot serve as an anchor
    CHECK_THROWS_AS(anchor_relabel(F, std::vector<long>{1, 1, 1, 1, 1}), precondition_error);
}
