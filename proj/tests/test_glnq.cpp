// GL_n(F_q) machinery: enumeration, coset representatives, conjugacy-class
// identification, cuspidal character values, and Bessel functions.

#include <glneps/glnq.hpp>
#include <glneps/verify.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace glneps;

namespace {
const std::vector<long> kQuartic = {2, 0, 0, 2, 1};

Mat mat2(long q, long a, long b, long c, long d) {
    Mat m;
    m.n = 2;
    m.at(0, 0) = static_cast<std::uint8_t>(a);
    m.at(0, 1) = static_cast<std::uint8_t>(b);
    m.at(1, 0) = static_cast<std::uint8_t>(c);
    m.at(1, 1) = static_cast<std::uint8_t>(d);
    return m;
}
}  // namespace

TEST_CASE("group enumeration has the right orders") {
    CHECK(enumerate_gl(2, 2).size() == 6);
    CHECK(enumerate_gl(2, 3).size() == 48);
    CHECK(enumerate_gl(3, 2).size() == 168);
    CHECK(enumerate_unipotent(2, 3).size() == 3);
    CHECK(enumerate_unipotent(3, 2).size() == 8);
    CHECK(enumerate_unipotent(4, 3).size() == 729);
    CHECK_THROWS_AS(check_gl_scale(5, 2), scale_exceeded);
    CHECK_THROWS_AS(check_gl_scale(4, 7), scale_exceeded);
}

TEST_CASE("determinants and characteristic polynomials match closed forms") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> entry(0, 2);
    for (int trial = 0; trial < 40; ++trial) {
        long a = entry(rng), b = entry(rng), c = entry(rng), d = entry(rng);
        Mat m = mat2(3, a, b, c, d);
        long det = ((a * d - b * c) % 3 + 3) % 3;
        CHECK(mat_det(m, 3) == det);
        detail::Poly cp = char_poly(m, 3);
        REQUIRE(cp.size() == 3);
        CHECK(cp[2] == 1);
        CHECK(cp[1] == ((-(a + d)) % 3 + 3) % 3);
        CHECK(cp[0] == det);
    }
    // char_poly of the identity in higher rank: (x-1)^4 over F_3
    detail::Poly cp4 = char_poly(mat_identity(4), 3);
    CHECK(cp4 == detail::Poly{1, 2, 0, 2, 1});  // x^4 - 4x^3 + 6x^2 - 4x + 1 mod 3
}

TEST_CASE("unipotent coset representatives are canonical and complete") {
    CHECK(coset_reps(1, 3).size() == 2);
    CHECK(coset_reps(2, 3).size() == 16);  // |GL_2(F_3)| / |U_2| = 48/3
    CHECK(coset_reps(2, 2).size() == 3);
    // idempotence: u*g and g share a representative
    std::mt19937_64 rng(5);
    auto G = enumerate_gl(2, 3);
    auto U = enumerate_unipotent(2, 3);
    std::uniform_int_distribution<std::size_t> pg(0, G.size() - 1), pu(0, U.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        const Mat& g = G[pg(rng)];
        const Mat& u = U[pu(rng)];
        CHECK(coset_canonical(mat_mul(u, g, 3), 3) == coset_canonical(g, 3));
    }
}

TEST_CASE("conjugacy-class data identifies primary classes") {
    AmbientField F(3, 4, kQuartic);
    ClassData id = class_data(F, mat_identity(2));
    CHECK(id.primary);
    CHECK(id.d == 1);
    CHECK(id.blocks == 2);
    CHECK(id.eigenvalue == F.one());

    ClassData uni = class_data(F, mat2(3, 1, 1, 0, 1));
    CHECK(uni.primary);
    CHECK(uni.d == 1);
    CHECK(uni.blocks == 1);

    ClassData split = class_data(F, mat2(3, 1, 0, 0, 2));
    CHECK_FALSE(split.primary);

    // companion matrix of x^2 + 1 (irreducible over F_3): elliptic class
    Mat comp = mat2(3, 0, 2, 1, 0);
    ClassData ell = class_data(F, comp);
    CHECK(ell.primary);
    CHECK(ell.d == 2);
    CHECK(ell.blocks == 1);
    CHECK(F.eval_poly(ell.irr, ell.eigenvalue) == F.zero());
    // the Frobenius conjugate is the other root
    CHECK(F.eval_poly(ell.irr, F.frobenius(ell.eigenvalue)) == F.zero());
    CHECK(F.frobenius(ell.eigenvalue) != ell.eigenvalue);
}

TEST_CASE("cuspidal character of GL_2(F_2) takes values 1, -1, 1") {
    AmbientField F(2, 2);
    CuspidalCharacter chi(F, frobenius_orbit(GammaChar{2, 2, 1}));
    CHECK(chi(mat_identity(2)) == Cyclotomic(1));  // dimension q - 1
    CHECK(chi(mat2(2, 1, 1, 0, 1)) == Cyclotomic(-1));
    CHECK(chi(mat2(2, 0, 1, 1, 1)) == Cyclotomic(1));  // order-3 element
}

TEST_CASE("cuspidal dimension for GL_4(F_3) without enumeration") {
    AmbientField F(3, 4, kQuartic);
    CuspidalCharacter chi(F, frobenius_orbit(GammaChar{3, 4, 66}));
    CHECK(chi(mat_identity(4)) == Cyclotomic(416));  // (3-1)(9-1)(27-1)
    // non-primary classes get zero
    Mat split;
    split.n = 4;
    for (int i = 0; i < 4; ++i) split.at(i, i) = static_cast<std::uint8_t>(i % 2 + 1);
    CHECK(chi(split) == Cyclotomic(0));
    // non-regular orbits are rejected
    CHECK_THROWS_AS(CuspidalCharacter(F, frobenius_orbit(GammaChar{3, 4, 20})),
                    non_regular_orbit);
}

TEST_CASE("character values are constant on Frobenius-conjugate eigenvalues") {
    AmbientField F(3, 2);
    GammaChar alpha{3, 2, 1};
    for (long j = 0; j < 8; ++j) {
        Fq t = F.exp(j);
        Cyclotomic a = char_eval(F, alpha, t) + char_eval(F, alpha, F.frobenius(t));
        Cyclotomic b = char_eval(F, alpha, F.frobenius(t)) +
                       char_eval(F, alpha, F.frobenius(F.frobenius(t)));
        CHECK(a == b);
    }
}

TEST_CASE("orthogonality, class-function, and Bessel convention gates pass") {
    SuiteReport rep = verify_character_gates();
    INFO("failures: " << (rep.failures.empty() ? "none" : rep.failures[0].name));
    CHECK(rep.all_pass());
    CHECK(rep.cases > 0);
}

TEST_CASE("Bessel gamma sweep matches the epsilon route at small rank") {
    SuiteReport rep = verify_thm44_sweep({2, 3}, 2, false);
    INFO("failures: " << (rep.failures.empty() ? "none" : rep.failures[0].name));
    CHECK(rep.all_pass());
    CHECK(rep.cases > 0);
}

TEST_CASE("Bessel gamma factor rejects degenerate degree orders") {
    AmbientField F(3, 2);
    FOrbit f = frobenius_orbit(GammaChar{3, 2, 1});
    CHECK_THROWS_AS(rs_gamma_bessel(F, f, f, AdditiveChar{1}), degree_order_violation);
}
