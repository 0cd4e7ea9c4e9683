#pragma once

// Gauss sums, the F-stable character-multiset engine, the generic epsilon0
// formula, and the closed forms for direct sums, tensor products, and
// exterior squares.  epsilon0_generic is the single source of truth: every
// closed form here is a fast path that the verification sweeps compare
// against the generic multiset route.

#include <glneps/ambient_field.hpp>
#include <glneps/characters.hpp>
#include <glneps/cyclotomic.hpp>
#include <glneps/errors.hpp>

#include <algorithm>
#include <list>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace glneps {

// ---------------------------------------------------------------------------
// Partitions and partition-valued functions

using Partition = std::vector<long>;  // weakly decreasing, positive parts

inline Partition normalized_partition(Partition p) {
    for (long part : p)
        if (part <= 0) throw precondition_error("partition parts must be positive");
    std::sort(p.begin(), p.end(), std::greater<long>());
    return p;
}

inline long partition_weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0L);
}

// Canonical representative of the Frobenius orbit of a character: the
// minimal exponent at the canonical (minimal) level.
inline GammaChar orbit_rep(const GammaChar& g) {
    FOrbit f = frobenius_orbit(canonicalize(g));
    long e = *std::min_element(f.exponents.begin(), f.exponents.end());
    return GammaChar{f.q, f.level, e};
}

// A partition-valued function on Gamma, constant on F-orbits (lambda in
// P_n(Gamma)); total degree n = sum over orbits of d(f) * |lambda(f)|.
class PartitionFn {
  public:
    struct Entry {
        GammaChar rep;  // canonical orbit representative
        long degree;    // d(f)
        Partition partition;
    };

    explicit PartitionFn(long q) : q_(q) {}

    long q() const { return q_; }

    // Assigns a partition to the orbit of g; assigning twice concatenates
    // (this is the lambda + mu operation restricted to one orbit).
    void add(const GammaChar& g, Partition p) {
        p = normalized_partition(std::move(p));
        if (p.empty()) return;
        GammaChar rep = orbit_rep(g);
        Partition& slot = entries_[{rep.level, rep.exponent}];
        slot.insert(slot.end(), p.begin(), p.end());
        slot = normalized_partition(std::move(slot));
    }

    std::vector<Entry> entries() const {
        std::vector<Entry> out;
        for (const auto& [key, part] : entries_) {
            GammaChar rep{q_, key.first, key.second};
            out.push_back({rep, orbit_degree(rep), part});
        }
        return out;
    }

    long total_degree() const {
        long n = 0;
        for (const auto& e : entries()) n += e.degree * partition_weight(e.partition);
        return n;
    }

    // lambda(1): the partition at the trivial character (empty if absent).
    Partition at_one() const {
        auto it = entries_.find({1, 0});
        return it == entries_.end() ? Partition{} : it->second;
    }

  private:
    long q_;
    std::map<std::pair<long, long>, Partition> entries_;
};

inline PartitionFn concat(const PartitionFn& a, const PartitionFn& b) {
    if (a.q() != b.q()) throw precondition_error("partition functions over different base fields");
    PartitionFn out = a;
    for (const auto& e : b.entries()) out.add(e.rep, e.partition);
    return out;
}

// |lambda(1)|: the exponent of q^s in the s-dependence of the epsilon factor.
inline long s_exponent(const PartitionFn& lambda) { return partition_weight(lambda.at_one()); }

// lambda(1) = (): the representation has no inertia invariants and its
// epsilon factor is s-independent.
inline bool cor27_applies(const PartitionFn& lambda) { return lambda.at_one().empty(); }

// ---------------------------------------------------------------------------
// F-stable character multisets

// Multiset of characters of Gamma with multiplicities, stored at canonical
// levels.  This is the semisimplified restriction-to-inertia of a
// representation; all closed forms are checked against it.
class CharMultiset {
  public:
    explicit CharMultiset(long q) : q_(q) {}

    long q() const { return q_; }

    void add(const GammaChar& g, long mult = 1) {
        if (mult <= 0) throw precondition_error("multiplicity must be positive");
        GammaChar c = canonicalize(g);
        m_[{c.level, c.exponent}] += mult;
    }

    long degree() const {
        long n = 0;
        for (const auto& [key, mult] : m_) n += mult;
        return n;
    }

    long multiplicity(const GammaChar& g) const {
        GammaChar c = canonicalize(g);
        auto it = m_.find({c.level, c.exponent});
        return it == m_.end() ? 0 : it->second;
    }

    long trivial_multiplicity() const { return multiplicity(GammaChar{q_, 1, 0}); }

    bool f_stable() const {
        for (const auto& [key, mult] : m_) {
            GammaChar g{q_, key.first, key.second};
            if (multiplicity(frobenius_twist(g)) != mult) return false;
        }
        return true;
    }

    void validate() const {
        if (!f_stable())
            throw non_f_stable_input("character multiset is not Frobenius-stable");
    }

    // Flat list of (canonical character, multiplicity).
    std::vector<std::pair<GammaChar, long>> members() const {
        std::vector<std::pair<GammaChar, long>> out;
        for (const auto& [key, mult] : m_)
            out.emplace_back(GammaChar{q_, key.first, key.second}, mult);
        return out;
    }

    struct OrbitEntry {
        FOrbit orbit;  // at canonical level, representative first
        long mult;     // common multiplicity of every member
    };

    // Orbit decomposition; requires F-stability.
    std::vector<OrbitEntry> orbits() const {
        validate();
        std::vector<OrbitEntry> out;
        std::map<std::pair<long, long>, bool> seen;
        for (const auto& [key, mult] : m_) {
            GammaChar rep = orbit_rep(GammaChar{q_, key.first, key.second});
            auto tag = std::make_pair(rep.level, rep.exponent);
            if (seen[tag]) continue;
            seen[tag] = true;
            out.push_back({frobenius_orbit(rep), mult});
        }
        return out;
    }

  private:
    long q_;
    std::map<std::pair<long, long>, long> m_;  // canonical (level, exponent) -> mult
};

inline CharMultiset orbit_multiset(const FOrbit& f) {
    CharMultiset out(f.q);
    for (long i = 0; i < f.degree(); ++i) out.add(f.member(i));
    return out;
}

// (rho_lambda)_I: each character in an orbit f appears |lambda(f)| times.
inline CharMultiset restriction_multiset(const PartitionFn& lambda) {
    CharMultiset out(lambda.q());
    for (const auto& e : lambda.entries()) {
        FOrbit f = frobenius_orbit(e.rep);
        for (long i = 0; i < f.degree(); ++i)
            out.add(f.member(i), partition_weight(e.partition));
    }
    return out;
}

inline CharMultiset ms_direct_sum(const CharMultiset& a, const CharMultiset& b) {
    a.validate();
    b.validate();
    CharMultiset out = a;
    for (const auto& [g, mult] : b.members()) out.add(g, mult);
    return out;
}

namespace detail {

// Product of two characters after inflating to the common level.
inline GammaChar char_product(const GammaChar& a, const GammaChar& b) {
    long l = std::lcm(a.level, b.level);
    GammaChar ia = inflate(a, l), ib = inflate(b, l);
    long m = char_modulus(ia);
    return GammaChar{a.q, l, (ia.exponent + ib.exponent) % m};
}

// Expanded list: each character repeated by multiplicity.
inline std::vector<GammaChar> flat_members(const CharMultiset& s) {
    std::vector<GammaChar> out;
    for (const auto& [g, mult] : s.members())
        for (long i = 0; i < mult; ++i) out.push_back(g);
    return out;
}

}  // namespace detail

inline CharMultiset ms_tensor(const CharMultiset& a, const CharMultiset& b) {
    a.validate();
    b.validate();
    CharMultiset out(a.q());
    for (const auto& [ga, ma] : a.members())
        for (const auto& [gb, mb] : b.members())
            out.add(detail::char_product(ga, gb), ma * mb);
    return out;
}

inline CharMultiset ms_wedge2(const CharMultiset& a) {
    a.validate();
    CharMultiset out(a.q());
    auto xs = detail::flat_members(a);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            out.add(detail::char_product(xs[i], xs[j]));
    return out;
}

inline CharMultiset ms_sym2(const CharMultiset& a) {
    a.validate();
    CharMultiset out(a.q());
    auto xs = detail::flat_members(a);
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i; j < xs.size(); ++j)
            out.add(detail::char_product(xs[i], xs[j]));
    return out;
}

// ---------------------------------------------------------------------------
// Gauss sums

// Computes and caches Gauss sums tau(gamma, psi_n) over one ambient field.
// Cache keys are normalized to the minimal orbit representative, which is
// sound by Frobenius invariance (verified independently in the test suite
// via the uncached direct path).  Values of small conductor are kept
// permanently; the handful of huge level-12 values (tens of MB each) live
// in a tiny LRU so closed-form and generic routes share one computation.
class GaussContext {
  public:
    GaussContext(const AmbientField& F, AdditiveChar psi) : F_(F), psi_(psi) {
        if (psi.a % F.q() == 0)
            throw precondition_error("additive character parameter a must be nonzero mod q");
    }

    const AmbientField& field() const { return F_; }
    AdditiveChar psi() const { return psi_; }

    // tau(gamma, psi_n) = -sum_{x in F_{q^n}^x} gamma(x^-1) psi_n(x),
    // evaluated at the stated level.
    Cyclotomic gauss_sum(long level, long exponent) const {
        long M = F_.subfield_order(level);
        long e = ((exponent % M) + M) % M;
        if (e == 0) return Cyclotomic(1);
        // normalize the key to the orbit minimum (Frobenius invariance)
        long rep = e, cur = e;
        do {
            cur = cur * F_.q() % M;
            rep = std::min(rep, cur);
        } while (cur != e);
        auto key = std::make_pair(level, rep);
        long conductor = F_.q() * M;
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (auto it = small_.find(key); it != small_.end()) return it->second;
            for (auto it = big_.begin(); it != big_.end(); ++it)
                if (it->first == key) {
                    big_.splice(big_.begin(), big_, it);
                    return it->second;
                }
        }
        Cyclotomic value = gauss_sum_direct(level, rep);
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (conductor <= kSmallConductor) {
                small_.emplace(key, value);
            } else {
                big_.emplace_front(key, value);
                while (big_.size() > kBigCapacity) big_.pop_back();
            }
        }
        return value;
    }

    Cyclotomic gauss_sum(const GammaChar& g) const {
        if (g.q != F_.q()) throw precondition_error("character base does not match the field");
        return gauss_sum(g.level, g.exponent);
    }

    // Gauss sum of any orbit member at the orbit's level (well defined by
    // Frobenius invariance).
    Cyclotomic gauss_sum_orbit(const FOrbit& f) const { return gauss_sum(f.level, f.exponents[0]); }

    // F-set version: the base character inflated to the ambient level N.
    Cyclotomic gauss_sum_fset(const FSet& h) const {
        GammaChar g = inflate(h.base, h.ambient_degree);
        return gauss_sum(g.level, g.exponent);
    }

    // Uncached direct summation at the stated level and exponent; the
    // invariance and well-definedness property tests use this path so the
    // cache normalization above cannot mask a bug.
    Cyclotomic gauss_sum_direct(long level, long exponent) const {
        long q = F_.q();
        long M = F_.subfield_order(level);
        long e = ((exponent % M) + M) % M;
        if (e == 0) return Cyclotomic(1);
        long C = q * M;
        const std::vector<std::uint8_t>& tr = trace_residues(level);
        std::vector<long long> counts(C, 0);
        long a = psi_.a % q;
        for (long j = 0; j < M; ++j) {
            // gamma(x^-1) psi_n(x) at x = xi_level^j, as a power of zeta_C:
            // zeta_M = zeta_C^q and zeta_q = zeta_C^M.
            long em = (M - e * j % M) % M;
            long ep = a * tr[j] % q;
            counts[(q * em + M * ep) % C] += 1;
        }
        return -Cyclotomic::from_exponent_counts(C, counts);
    }

  private:
    static constexpr long kSmallConductor = 200000;
    static constexpr std::size_t kBigCapacity = 2;

    const std::vector<std::uint8_t>& trace_residues(long level) const {
        std::lock_guard<std::mutex> lock(trace_mu_);
        auto it = traces_.find(level);
        if (it != traces_.end()) return it->second;
        long M = F_.subfield_order(level);
        std::vector<std::uint8_t> tr(M);
        Fq x = F_.one();
        Fq gen = F_.subfield_generator(level);
        for (long j = 0; j < M; ++j) {
            tr[j] = static_cast<std::uint8_t>(F_.residue(F_.trace(x, level, 1)));
            x = F_.mul(x, gen);
        }
        return traces_.emplace(level, std::move(tr)).first->second;
    }

    const AmbientField& F_;
    AdditiveChar psi_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<long, long>, Cyclotomic> small_;
    mutable std::list<std::pair<std::pair<long, long>, Cyclotomic>> big_;
    mutable std::mutex trace_mu_;
    mutable std::map<long, std::vector<std::uint8_t>> traces_;
};

// ---------------------------------------------------------------------------
// epsilon0: generic engine and closed forms

// (-1)^N q^(-N/2) prod_f tau(f, psi_d(f))^mult(f) over the orbits of S.
inline QHalfScalar epsilon0_generic(const GaussContext& ctx, const CharMultiset& S) {
    S.validate();
    long N = S.degree();
    Cyclotomic c(N % 2 == 0 ? 1 : -1);
    for (const auto& entry : S.orbits())
        c *= ctx.gauss_sum_orbit(entry.orbit).pow(entry.mult);
    return QHalfScalar(S.q(), std::move(c), -N);
}

inline QHalfScalar epsilon0(const GaussContext& ctx, const PartitionFn& lambda) {
    return epsilon0_generic(ctx, restriction_multiset(lambda));
}

inline QHalfScalar epsilon0_direct_sum(const GaussContext& ctx, const PartitionFn& lambda,
                                       const PartitionFn& mu) {
    return epsilon0(ctx, lambda) * epsilon0(ctx, mu);
}

namespace detail {

inline void require_regular(const FOrbit& f) {
    if (f.degree() != f.level)
        throw non_regular_orbit("orbit of size " + std::to_string(f.degree()) +
                                " at level " + std::to_string(f.level) +
                                " does not parameterize a cuspidal");
}

}  // namespace detail

// Tensor closed form for cuspidal pairs: with d = gcd(n, m), l = lcm(n, m),
//   epsilon0(pi_f x pi_g) = (-1)^(nm) q^(-nm/2) prod_{i=0}^{d-1} tau(alpha beta^(q^i), psi_l).
inline QHalfScalar epsilon0_tensor_cuspidal(const GaussContext& ctx, const FOrbit& f,
                                            const FOrbit& g) {
    detail::require_regular(f);
    detail::require_regular(g);
    long n = f.degree(), m = g.degree();
    long d = std::gcd(n, m), l = std::lcm(n, m);
    long q = ctx.field().q();
    long Ml = ctx.field().subfield_order(l);
    long ea = inflate(f.rep(), l).exponent;
    long eb = inflate(g.rep(), l).exponent;
    Cyclotomic c(n * m % 2 == 0 ? 1 : -1);
    long ebi = eb;
    for (long i = 0; i < d; ++i) {
        c *= ctx.gauss_sum(l, (ea + ebi) % Ml);
        ebi = ebi * q % Ml;
    }
    return QHalfScalar(q, std::move(c), -n * m);
}

inline QHalfScalar epsilon0_tensor(const GaussContext& ctx, const PartitionFn& lambda,
                                   const PartitionFn& mu) {
    long q = ctx.field().q();
    QHalfScalar acc(q, Cyclotomic(1), 0);
    for (const auto& el : lambda.entries())
        for (const auto& em : mu.entries()) {
            long exp = partition_weight(el.partition) * partition_weight(em.partition);
            acc *= epsilon0_tensor_cuspidal(ctx, frobenius_orbit(el.rep), frobenius_orbit(em.rep))
                       .pow(exp);
        }
    return acc;
}

// Exterior-square closed form for a cuspidal of degree n, m = floor(n/2):
//   (-1)^C(n,2) q^(-C(n,2)/2) tau(alpha^(1+q^m), psi_d) prod_{i=1}^{m-1} tau(alpha^(1+q^i), psi_n)
// with d = n for odd n and d = m for even n; in the even case the exponent
// of alpha^(1+q^m) deflates to level m as e mod (q^m - 1).
inline QHalfScalar epsilon0_wedge2_cuspidal(const GaussContext& ctx, const FOrbit& f) {
    detail::require_regular(f);
    long n = f.degree();
    if (n < 2) throw degree_too_small("exterior square needs degree >= 2");
    long m = n / 2;
    long q = ctx.field().q();
    long Mn = ctx.field().subfield_order(n);
    long e = f.rep().exponent;
    long qm = 1;
    for (long i = 0; i < m; ++i) qm *= q;
    long choose2 = n * (n - 1) / 2;
    Cyclotomic c(choose2 % 2 == 0 ? 1 : -1);
    long emain = e % Mn * (1 + qm) % Mn;
    if (n % 2 == 0) {
        long Mm = qm - 1;
        long ed = e % Mm;
        // the deflated exponent must inflate back to alpha^(1+q^m)
        if (ed * (Mn / Mm) % Mn != emain)
            throw internal_mismatch("exterior-square deflation consistency failed");
        c *= ctx.gauss_sum(m, ed);
    } else {
        c *= ctx.gauss_sum(n, emain);
    }
    long qi = 1;
    for (long i = 1; i <= m - 1; ++i) {
        qi = qi * q % Mn;
        c *= ctx.gauss_sum(n, e % Mn * (1 + qi) % Mn);
    }
    return QHalfScalar(q, std::move(c), -choose2);
}

// Exterior square of a general lambda (multiplicativity): with support
// orbits f_i and n_i = |lambda(f_i)|,
//   prod_{i<j} e0(f_i x f_j)^(n_i n_j) * prod_i e0(f_i x f_i)^C(n_i,2)
//   * prod_i e0(f_i, wedge2)^(n_i),
// where the last factor is trivial for degree-1 orbits (wedge of a line).
inline QHalfScalar epsilon0_wedge2(const GaussContext& ctx, const PartitionFn& lambda) {
    long q = ctx.field().q();
    auto entries = lambda.entries();
    QHalfScalar acc(q, Cyclotomic(1), 0);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        FOrbit fi = frobenius_orbit(entries[i].rep);
        long ni = partition_weight(entries[i].partition);
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            FOrbit fj = frobenius_orbit(entries[j].rep);
            long nj = partition_weight(entries[j].partition);
            acc *= epsilon0_tensor_cuspidal(ctx, fi, fj).pow(ni * nj);
        }
        acc *= epsilon0_tensor_cuspidal(ctx, fi, fi).pow(ni * (ni - 1) / 2);
        if (fi.degree() >= 2) acc *= epsilon0_wedge2_cuspidal(ctx, fi).pow(ni);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Rankin-Selberg gamma factors

// gamma(pi_f x pi_g, psi) for regular orbits of degrees n > m, computed by
// both equivalent expressions
//   q^(-m(n-m-1)/2) omega_g(-1)^(n-1) epsilon0(pi_f x pi_g, psi)
// and the expanded form
//   (-1)^(nm) q^(-nm + m(m+1)/2) beta(-1)^(n-1) prod_{i=0}^{d-1} tau(alpha beta^(q^i), psi_l);
// the two must agree or the implementation is broken.
namespace detail {

inline void require_gamma_pair(const FOrbit& f, const FOrbit& g) {
    require_regular(f);
    require_regular(g);
    if (f.degree() <= g.degree()) throw degree_order_violation("gamma factor needs n > m");
}

}  // namespace detail

// q^(-m(n-m-1)/2) omega_g(-1)^(n-1) epsilon0(pi_f x pi_g, psi).
inline QHalfScalar rs_gamma_thm44(const GaussContext& ctx, const FOrbit& f, const FOrbit& g) {
    detail::require_gamma_pair(f, g);
    long n = f.degree(), m = g.degree();
    long omega = sign_at_minus_one(g.rep());  // central character of pi_g at -1
    long sign = (n - 1) % 2 == 0 ? 1 : omega;
    return epsilon0_tensor_cuspidal(ctx, f, g).times(Rational(sign)).shifted(-m * (n - m - 1));
}

// The expanded Gauss-sum form of the same factor:
// (-1)^(nm) q^(-nm + m(m+1)/2) beta(-1)^(n-1) prod_{i=0}^{d-1} tau(alpha beta^(q^i), psi_l).
inline QHalfScalar rs_gamma_cor45(const GaussContext& ctx, const FOrbit& f, const FOrbit& g) {
    detail::require_gamma_pair(f, g);
    long n = f.degree(), m = g.degree();
    long q = ctx.field().q();
    long omega = sign_at_minus_one(g.rep());
    long sign = (n - 1) % 2 == 0 ? 1 : omega;
    long d = std::gcd(n, m), l = std::lcm(n, m);
    long Ml = ctx.field().subfield_order(l);
    long ea = inflate(f.rep(), l).exponent;
    long eb = inflate(g.rep(), l).exponent;
    Cyclotomic c(n * m % 2 == 0 ? sign : -sign);
    long ebi = eb;
    for (long i = 0; i < d; ++i) {
        c *= ctx.gauss_sum(l, (ea + ebi) % Ml);
        ebi = ebi * q % Ml;
    }
    return QHalfScalar(q, std::move(c), -2 * n * m + m * (m + 1));
}

inline QHalfScalar rs_gamma_via_epsilon(const GaussContext& ctx, const FOrbit& f,
                                        const FOrbit& g) {
    QHalfScalar route_a = rs_gamma_thm44(ctx, f, g);
    QHalfScalar route_b = rs_gamma_cor45(ctx, f, g);
    if (!route_a.equals(route_b))
        throw internal_mismatch("gamma factor expressions disagree: " + route_a.to_string() +
                                " vs " + route_b.to_string());
    return route_a;
}

// The Nien-Zhang expression (the conjectured formula this library's
// acceptance test refutes): a single level-nm Gauss sum,
//   (-1)^(nm-m+1) q^(-nm + m(m+1)/2) alpha(-1)^(m-1) beta(-1)^(n-1) tau(alpha beta, psi_nm).
inline QHalfScalar nien_zhang_rhs(const GaussContext& ctx, const FOrbit& f, const FOrbit& g) {
    detail::require_regular(f);
    detail::require_regular(g);
    long n = f.degree(), m = g.degree();
    if (n <= m) throw degree_order_violation("gamma factor needs n > m");
    long q = ctx.field().q();
    long nm = n * m;
    long Mnm = ctx.field().subfield_order(nm);
    long ea = inflate(f.rep(), nm).exponent;
    long eb = inflate(g.rep(), nm).exponent;
    Cyclotomic c = ctx.gauss_sum(nm, (ea + eb) % Mnm);
    long s = ((nm - m + 1) % 2 == 0 ? 1 : -1);
    if ((m - 1) % 2 != 0) s *= sign_at_minus_one(f.rep());
    if ((n - 1) % 2 != 0) s *= sign_at_minus_one(g.rep());
    return QHalfScalar(q, c * Rational(s), -2 * nm + m * (m + 1));
}

// Degenerate exterior square: for a regular orbit of even degree n = 2m
// whose character is trivial on the degree-m subfield, the epsilon factor
// is the constant -q^(-m/2) and the trivial character appears with
// multiplicity m in the wedge multiset (the inertia-invariant dimension).
inline std::pair<QHalfScalar, long> degenerate_wedge2_report(const GaussContext& ctx,
                                                            const FOrbit& f) {
    detail::require_regular(f);
    long n = f.degree();
    if (n % 2 != 0) throw precondition_not_degenerate("degree must be even");
    long m = n / 2;
    long q = ctx.field().q();
    long Mm = ctx.field().subfield_order(m);
    if (f.rep().exponent % Mm != 0)
        throw precondition_not_degenerate(
            "character is not trivial on the degree-" + std::to_string(m) + " subfield");
    QHalfScalar value = epsilon0_wedge2_cuspidal(ctx, f);
    long mult = ms_wedge2(orbit_multiset(f)).trivial_multiplicity();
    if (!value.equals(QHalfScalar(q, Cyclotomic(-1), -m)) || mult != m)
        throw internal_mismatch("degenerate exterior-square constants failed: got " +
                                value.to_string() + ", multiplicity " + std::to_string(mult));
    return {value, mult};
}

}  // namespace glneps
