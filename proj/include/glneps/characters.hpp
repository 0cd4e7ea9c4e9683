#pragma once

// The character direct limit Gamma = lim Gamma_n.  A multiplicative
// character of F_{q^n}^x is a pair (level n, exponent e mod q^n - 1),
// meaning gamma(xi_n^j) = zeta_{q^n-1}^(e*j) relative to the distinguished
// generator xi_n of the ambient field.  Frobenius acts by gamma -> gamma^q,
// i.e. e -> e*q; norm inflation to a higher level multiplies the exponent
// by (q^N-1)/(q^n-1).

#include <glneps/ambient_field.hpp>
#include <glneps/cyclotomic.hpp>
#include <glneps/errors.hpp>

#include <numeric>
#include <string>
#include <vector>

namespace glneps {

struct GammaChar {
    long q = 0;
    long level = 1;
    long exponent = 0;  // mod q^level - 1

    friend bool operator==(const GammaChar& a, const GammaChar& b) {
        return a.q == b.q && a.level == b.level && a.exponent == b.exponent;
    }
};

inline long char_modulus(const GammaChar& g) {
    long m = 1;
    for (long i = 0; i < g.level; ++i) m *= g.q;
    return m - 1;
}

inline GammaChar normalized(GammaChar g) {
    long m = char_modulus(g);
    g.exponent = ((g.exponent % m) + m) % m;
    return g;
}

// Minimal degree d with e*q^d == e mod (q^n - 1); always divides the level.
inline long orbit_degree(const GammaChar& g0) {
    GammaChar g = normalized(g0);
    long m = char_modulus(g);
    long e = g.exponent * g.q % m;
    long d = 1;
    while (e != g.exponent) {
        e = e * g.q % m;
        ++d;
    }
    return d;
}

// Canonical form: the same character expressed at its minimal level
// d = orbit_degree, where the exponent divides down by (q^n-1)/(q^d-1).
inline GammaChar canonicalize(GammaChar g) {
    g = normalized(g);
    long d = orbit_degree(g);
    if (d == g.level) return g;
    long md = 1;
    for (long i = 0; i < d; ++i) md *= g.q;
    md -= 1;
    long ratio = char_modulus(g) / md;
    // e*q^d == e mod q^n-1 means ratio | e, so the division is exact
    return GammaChar{g.q, d, g.exponent / ratio};
}

inline GammaChar inflate(const GammaChar& g0, long n) {
    GammaChar g = normalized(g0);
    if (n % g.level != 0)
        throw non_divisor_degree("cannot inflate a level-" + std::to_string(g.level) +
                                 " character to level " + std::to_string(n));
    long mn = 1;
    for (long i = 0; i < n; ++i) mn *= g.q;
    mn -= 1;
    long ratio = mn / char_modulus(g);
    return GammaChar{g.q, n, g.exponent * ratio % mn};
}

inline GammaChar frobenius_twist(const GammaChar& g0) {
    GammaChar g = normalized(g0);
    return GammaChar{g.q, g.level, g.exponent * g.q % char_modulus(g)};
}

inline bool is_trivial(const GammaChar& g) { return normalized(g).exponent == 0; }

// The Frobenius orbit {e, e*q, e*q^2, ...} at a common level.
struct FOrbit {
    long q = 0;
    long level = 1;
    std::vector<long> exponents;

    long degree() const { return static_cast<long>(exponents.size()); }
    GammaChar member(long i) const { return GammaChar{q, level, exponents[i]}; }
    GammaChar rep() const { return member(0); }
};

inline FOrbit frobenius_orbit(const GammaChar& g0) {
    GammaChar g = normalized(g0);
    long m = char_modulus(g);
    FOrbit f{g.q, g.level, {g.exponent}};
    long e = g.exponent * g.q % m;
    while (e != g.exponent) {
        f.exponents.push_back(e);
        e = e * g.q % m;
    }
    return f;
}

// N/d copies of the degree-d orbit of the base character, viewed in Gamma_N.
struct FSet {
    GammaChar base;        // at its own level d
    long ambient_degree;   // N, multiple of d

    long multiplicity() const { return ambient_degree / orbit_degree(base); }
};

inline FSet f_set(const GammaChar& g0, long N) {
    GammaChar g = normalized(g0);
    if (N % g.level != 0)
        throw non_divisor_degree("F-set ambient degree " + std::to_string(N) +
                                 " is not a multiple of the character level");
    return FSet{g, N};
}

// True iff the orbit of g has size n; such orbits parameterize the
// irreducible cuspidal representations of GL_n(F_q).
inline bool is_regular(const GammaChar& g0, long n) {
    GammaChar g = normalized(g0);
    if (n % g.level != 0)
        throw non_divisor_degree("character level must divide n in the regularity test");
    return orbit_degree(inflate(g, n)) == n;
}

// Additive character psi(x) = zeta_q^(a*x) on the prime field; psi_n is its
// composition with the trace from level n.
struct AdditiveChar {
    long a = 1;  // in 1..q-1
};

inline AdditiveChar inverse(const AdditiveChar& psi, long q) {
    return AdditiveChar{(q - psi.a % q) % q};
}

inline Cyclotomic char_eval(const AmbientField& F, const GammaChar& g0, Fq x) {
    GammaChar g = normalized(g0);
    if (x.code == 0) throw zero_element("multiplicative character at zero");
    long j = F.dlog_at_level(x, g.level);  // throws if x is outside the subfield
    long m = char_modulus(g);
    return Cyclotomic::zeta(m, g.exponent * j % m);
}

inline Cyclotomic additive_eval(const AmbientField& F, const AdditiveChar& psi, long n, Fq x) {
    Fq t = F.trace(x, n, 1);
    long r = F.residue(t);
    return Cyclotomic::zeta(F.q(), psi.a % F.q() * r);
}

// -1 in F_q^x as seen by the character: gamma(-1) = zeta^(e * (q^n-1)/2),
// which is +1 or -1 (or +1 identically when q = 2).
inline long sign_at_minus_one(const GammaChar& g0) {
    GammaChar g = normalized(g0);
    if (g.q == 2) return 1;
    long m = char_modulus(g);
    return (g.exponent * (m / 2)) % m == 0 ? 1 : -1;
}

inline std::string char_spec(const GammaChar& g) {
    return std::to_string(g.level) + ":" + std::to_string(g.exponent);
}

}  // namespace glneps
