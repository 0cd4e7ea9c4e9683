#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N), plus the scaled value
// type c * q^(e/2) that houses epsilon factors.
//
// Elements are stored as sparse rational combinations of canonical basis
// roots of unity.  The canonical basis is the tensor (Zumbroich-style)
// basis: writing N = prod p^k, the exponent e of zeta_N^e decomposes by CRT
// into one coordinate a_p modulo each prime power, and e is a basis exponent
// iff every coordinate satisfies 0 <= a_p < phi(p^k).  A coordinate at or
// above phi(p^k) is rewritten with the relation
//   zeta^(phi(p^k) + r) = -sum_{t=0}^{p-2} zeta^(r + t*p^(k-1)),
// which only touches that one coordinate, so reduction per prime is a single
// pass and the representation is canonical (basis coefficients are unique).
// This replaces division by Phi_N, which is impractical at the conductors
// (~1.6e6) reached by the level-12 Gauss sums in the tensor sweep.

#include <glneps/errors.hpp>

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace glneps {

using Rational = mpq_class;

// Factorization data for a conductor, cached process-wide.
struct PrimePower {
    long p = 0;         // prime
    long k = 0;         // exponent
    long pp = 0;        // p^k
    long phi = 0;       // (p-1) * p^(k-1)
    long pk1 = 0;       // p^(k-1)
    long cofactor = 0;  // N / p^k
    long coinv = 0;     // inverse of cofactor modulo p^k
};

struct ConductorInfo {
    long n = 1;
    std::vector<PrimePower> primes;
};

namespace detail {

inline long mod_inverse(long a, long m) {
    long t = 0, new_t = 1, r = m, new_r = ((a % m) + m) % m;
    while (new_r != 0) {
        long quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    // r == gcd(a, m); callers only invert units.
    return ((t % m) + m) % m;
}

inline const ConductorInfo& conductor_info(long n) {
    static std::map<long, ConductorInfo> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    ConductorInfo info;
    info.n = n;
    long rest = n;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        PrimePower pw;
        pw.p = p;
        while (rest % p == 0) {
            rest /= p;
            ++pw.k;
        }
        info.primes.push_back(pw);
    }
    if (rest > 1) info.primes.push_back({rest, 1});
    for (auto& pw : info.primes) {
        pw.pp = 1;
        for (long i = 0; i < pw.k; ++i) pw.pp *= pw.p;
        pw.pk1 = pw.pp / pw.p;
        pw.phi = pw.pk1 * (pw.p - 1);
        pw.cofactor = n / pw.pp;
        pw.coinv = mod_inverse(pw.cofactor, pw.pp);
    }
    return cache.emplace(n, std::move(info)).first->second;
}

}  // namespace detail

class Cyclotomic {
  public:
    Cyclotomic() = default;
    Cyclotomic(long v) : Cyclotomic(Rational(v)) {}
    Cyclotomic(const Rational& v) {
        if (v != 0) coeff_[0] = v;
    }

    // zeta_n^e, canonicalized.
    static Cyclotomic zeta(long n, long e) {
        Cyclotomic out;
        out.conductor_ = n;
        canonicalize_into(detail::conductor_info(n), mod(e, n), Rational(1), out.coeff_);
        out.strip_zeros();
        return out;
    }

    static Cyclotomic from_terms(long n, const std::vector<std::pair<long, Rational>>& terms) {
        const auto& info = detail::conductor_info(n);
        Cyclotomic out;
        out.conductor_ = n;
        for (const auto& [e, c] : terms)
            canonicalize_into(info, mod(e, n), c, out.coeff_);
        out.strip_zeros();
        return out;
    }

    // Fast path for huge sums of roots of unity with integer multiplicities
    // (Gauss sums): counts[e] holds the multiplicity of zeta_n^e.  Reduces
    // in place with one dense pass per prime, then gathers the nonzeros.
    // Consumes the counts buffer.
    static Cyclotomic from_exponent_counts(long n, std::vector<long long>& counts) {
        const auto& info = detail::conductor_info(n);
        for (const auto& pw : info.primes) {
            for (long e = 0; e < n; ++e) {
                long long v = counts[e];
                if (v == 0) continue;
                long a = (e % pw.pp) * pw.coinv % pw.pp;
                if (a < pw.phi) continue;
                counts[e] = 0;
                long r = a - pw.phi;
                for (long t = 0; t < pw.p - 1; ++t) {
                    long delta = r + t * pw.pk1 - a;  // shift of the p-coordinate
                    long e2 = mod(e + delta * pw.cofactor, n);
                    counts[e2] -= v;
                }
            }
        }
        Cyclotomic out;
        out.conductor_ = n;
        auto hint = out.coeff_.end();
        for (long e = 0; e < n; ++e)
            if (counts[e] != 0)
                hint = out.coeff_.emplace_hint(hint, e, Rational(static_cast<long>(counts[e])));
        counts.clear();
        return out;
    }

    long conductor() const { return conductor_; }
    const std::map<long, Rational>& coeffs() const { return coeff_; }
    bool is_zero() const { return coeff_.empty(); }

    // Same element viewed in Q(zeta_n2); basis exponents scale by n2/n.
    Cyclotomic raised(long n2) const {
        if (n2 == conductor_) return *this;
        if (n2 % conductor_ != 0)
            throw non_divisor_degree("conductor " + std::to_string(conductor_) +
                                     " does not divide " + std::to_string(n2));
        long ratio = n2 / conductor_;
        Cyclotomic out;
        out.conductor_ = n2;
        auto hint = out.coeff_.end();
        for (const auto& [e, c] : coeff_)
            hint = out.coeff_.emplace_hint(hint, e * ratio, c);
        return out;
    }

    // Equivalent element of minimal conductor.
    Cyclotomic reduced() const {
        Cyclotomic out = *this;
        if (out.coeff_.empty()) {
            out.conductor_ = 1;
            return out;
        }
        bool again = true;
        while (again) {
            again = false;
            const auto& info = detail::conductor_info(out.conductor_);
            for (const auto& pw : info.primes) {
                bool divisible = true;
                for (const auto& [e, c] : out.coeff_)
                    if (e % pw.p != 0) {
                        divisible = false;
                        break;
                    }
                if (!divisible) continue;
                std::map<long, Rational> lowered;
                auto hint = lowered.end();
                for (const auto& [e, c] : out.coeff_)
                    hint = lowered.emplace_hint(hint, e / pw.p, c);
                out.coeff_ = std::move(lowered);
                out.conductor_ /= pw.p;
                again = true;
                break;  // factorization changed; restart
            }
        }
        return out;
    }

    bool is_rational() const { return reduced().conductor_ == 1; }

    Rational rational_value() const {
        Cyclotomic r = reduced();
        if (r.conductor_ != 1)
            throw internal_mismatch("cyclotomic value is not rational");
        return r.coeff_.empty() ? Rational(0) : r.coeff_.begin()->second;
    }

    Cyclotomic conj() const {
        std::vector<std::pair<long, Rational>> terms;
        terms.reserve(coeff_.size());
        for (const auto& [e, c] : coeff_)
            terms.emplace_back(mod(-e, conductor_), c);
        return from_terms(conductor_, terms);
    }

    Cyclotomic abs_square() const { return *this * conj(); }

    Cyclotomic pow(long k) const {
        Cyclotomic acc(1);
        Cyclotomic base = *this;
        for (; k > 0; k >>= 1) {
            if (k & 1) acc *= base;
            if (k > 1) base *= base;
        }
        return acc;
    }

    std::complex<double> approx() const {
        constexpr double two_pi = 6.283185307179586476925286766559;
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [e, c] : coeff_) {
            double angle = two_pi * static_cast<double>(e) / static_cast<double>(conductor_);
            acc += c.get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
        }
        return acc;
    }

    Cyclotomic& operator+=(const Cyclotomic& rhs) {
        long n = std::lcm(conductor_, rhs.conductor_);
        if (n != conductor_) *this = raised(n);
        const Cyclotomic rr = (rhs.conductor_ == n) ? rhs : rhs.raised(n);
        for (const auto& [e, c] : rr.coeff_) coeff_[e] += c;
        strip_zeros();
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& rhs) {
        *this += -rhs;
        return *this;
    }
    Cyclotomic& operator*=(const Cyclotomic& rhs) {
        *this = *this * rhs;
        return *this;
    }
    Cyclotomic& operator*=(const Rational& s) {
        if (s == 0) {
            coeff_.clear();
            return *this;
        }
        for (auto& [e, c] : coeff_) c *= s;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator-(const Cyclotomic& a) {
        Cyclotomic out = a;
        for (auto& [e, c] : out.coeff_) c = -c;
        return out;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        long n = std::lcm(a.conductor_, b.conductor_);
        const Cyclotomic aa = (a.conductor_ == n) ? a : a.raised(n);
        const Cyclotomic bb = (b.conductor_ == n) ? b : b.raised(n);
        const auto& info = detail::conductor_info(n);
        Cyclotomic out;
        out.conductor_ = n;
        for (const auto& [ea, ca] : aa.coeff_)
            for (const auto& [eb, cb] : bb.coeff_)
                canonicalize_into(info, mod(ea + eb, n), ca * cb, out.coeff_);
        out.strip_zeros();
        return out;
    }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) { return a *= s; }
    friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return a *= s; }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        long n = std::lcm(a.conductor_, b.conductor_);
        const Cyclotomic aa = (a.conductor_ == n) ? a : a.raised(n);
        const Cyclotomic bb = (b.conductor_ == n) ? b : b.raised(n);
        return aa.coeff_ == bb.coeff_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Basis exponents of the canonical basis of Q(zeta_n), ascending.
    static std::vector<long> basis_exponents(long n) {
        const auto& info = detail::conductor_info(n);
        std::vector<long> out;
        for (long e = 0; e < n; ++e) {
            bool ok = true;
            for (const auto& pw : info.primes)
                if ((e % pw.pp) * pw.coinv % pw.pp >= pw.phi) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back(e);
        }
        return out;
    }

    std::string to_string() const {
        if (coeff_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeff_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.get_str() << ")";
            if (e != 0) os << "*z" << conductor_ << "^" << e;
        }
        return os.str();
    }

  private:
    static long mod(long a, long m) { return ((a % m) + m) % m; }

    // Adds c * zeta^e to out, rewriting into the canonical basis.
    static void canonicalize_into(const ConductorInfo& info, long e, const Rational& c,
                                  std::map<long, Rational>& out) {
        for (const auto& pw : info.primes) {
            long a = (e % pw.pp) * pw.coinv % pw.pp;
            if (a < pw.phi) continue;
            long r = a - pw.phi;
            for (long t = 0; t < pw.p - 1; ++t) {
                long delta = r + t * pw.pk1 - a;
                canonicalize_into(info, mod(e + delta * pw.cofactor, info.n), -c, out);
            }
            return;
        }
        out[e] += c;
    }

    void strip_zeros() {
        for (auto it = coeff_.begin(); it != coeff_.end();)
            it = (it->second == 0) ? coeff_.erase(it) : std::next(it);
    }

    long conductor_ = 1;
    std::map<long, Rational> coeff_;  // basis exponent -> coefficient
};

inline Rational rational_power(long base, long e) {
    Rational out(1);
    Rational b(base);
    if (e < 0) {
        b = Rational(1) / b;
        e = -e;
    }
    for (; e > 0; --e) out *= b;
    return out;
}

// Value c * q^(e/2) with exact cyclotomic c.  Epsilon factors carry a
// factor q^(-N/2) that is irrational for odd N, so the half power of q is
// tracked symbolically; normal form keeps e in {0, 1}.
class QHalfScalar {
  public:
    QHalfScalar(long q, Cyclotomic c, long half_exponent)
        : q_(q), c_(std::move(c)), e_(half_exponent) {
        normalize();
    }
    static QHalfScalar from_cyclotomic(long q, Cyclotomic c) {
        return QHalfScalar(q, std::move(c), 0);
    }

    long q() const { return q_; }
    const Cyclotomic& c() const { return c_; }
    long half_exponent() const { return e_; }
    bool is_zero() const { return c_.is_zero(); }

    friend QHalfScalar operator*(const QHalfScalar& a, const QHalfScalar& b) {
        if (a.q_ != b.q_)
            throw precondition_error("QHalfScalar base mismatch: " + std::to_string(a.q_) +
                                     " vs " + std::to_string(b.q_));
        return QHalfScalar(a.q_, a.c_ * b.c_, a.e_ + b.e_);
    }
    QHalfScalar& operator*=(const QHalfScalar& b) { return *this = *this * b; }

    QHalfScalar times(const Cyclotomic& x) const { return QHalfScalar(q_, c_ * x, e_); }
    QHalfScalar times(const Rational& s) const { return QHalfScalar(q_, c_ * s, e_); }
    QHalfScalar shifted(long half_exponent_delta) const {
        return QHalfScalar(q_, c_, e_ + half_exponent_delta);
    }
    QHalfScalar pow(long k) const {
        QHalfScalar acc(q_, Cyclotomic(1), 0);
        for (long i = 0; i < k; ++i) acc *= *this;
        return acc;
    }

    // |value|^2; always a genuine cyclotomic since |c|^2 * q^e has e in {0,1}.
    Cyclotomic abs_square() const { return c_.abs_square() * rational_power(q_, e_); }

    std::complex<double> approx() const {
        return c_.approx() * std::pow(static_cast<double>(q_), static_cast<double>(e_) / 2.0);
    }

    // Canonical equality.  Matching half-exponent parity reduces to exact
    // cyclotomic equality.  Mixed parity means comparing c1 with c2*sqrt(q):
    // sqrt(q) is not available exactly, so compare |.|^2 exactly and break
    // the sign ambiguity with a float check (margin is enormous at this
    // scale; tolerance pinned at 1e-9).
    bool equals(const QHalfScalar& other) const {
        if (q_ != other.q_)
            throw precondition_error("QHalfScalar base mismatch in comparison");
        if (((e_ - other.e_) & 1L) == 0) {
            // Same parity: normal form makes the exponents equal unless one
            // side is zero.
            if (c_.is_zero() || other.c_.is_zero())
                return c_.is_zero() && other.c_.is_zero();
            return e_ == other.e_ && c_ == other.c_;
        }
        if (c_.is_zero() || other.c_.is_zero())
            return c_.is_zero() && other.c_.is_zero();
        if (abs_square() != other.abs_square()) return false;
        return std::abs(approx() - other.approx()) < 1e-9;
    }

    std::string to_string() const {
        std::string s = c_.to_string();
        if (e_ != 0) s += " * " + std::to_string(q_) + "^(" + std::to_string(e_) + "/2)";
        return s;
    }

  private:
    void normalize() {
        if (c_.is_zero()) {
            e_ = 0;
            return;
        }
        // Fold whole powers of q into c so that e lands in {0, 1}.
        long shift = (e_ >= 0) ? e_ / 2 : -((-e_ + 1) / 2);
        if (shift != 0) {
            c_ *= rational_power(q_, shift);
            e_ -= 2 * shift;
        }
    }

    long q_;
    Cyclotomic c_;
    long e_;
};

}  // namespace glneps
