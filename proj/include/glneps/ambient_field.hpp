#pragma once

// One ambient finite field F_{q^L} housing every extension degree a
// computation needs.  The distinguished generator xi is a root of a
// primitive modulus; each subfield of degree d | L gets the compatible
// generator xi_d = xi^((q^L-1)/(q^d-1)).  Discrete logs are precomputed
// (full table), so multiplicative structure reduces to exponent arithmetic.

#include <glneps/cyclotomic.hpp>
#include <glneps/errors.hpp>

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace glneps {

// Element of the ambient field: coefficients of the polynomial
// representative packed base q (digit i = coefficient of x^i).
struct Fq {
    std::uint32_t code = 0;
    friend bool operator==(Fq a, Fq b) { return a.code == b.code; }
    friend bool operator!=(Fq a, Fq b) { return a.code != b.code; }
    friend bool operator<(Fq a, Fq b) { return a.code < b.code; }
};

namespace detail {

inline bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<long> prime_factors(long n) {
    std::vector<long> out;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Dense little-endian polynomials over F_q, always reduced mod q.
using Poly = std::vector<long>;

inline Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline Poly poly_mod(Poly a, const Poly& f, long q) {
    // f monic
    long df = static_cast<long>(f.size()) - 1;
    for (long i = static_cast<long>(a.size()) - 1; i >= df; --i) {
        long c = a[i];
        if (c == 0) continue;
        a[i] = 0;
        for (long j = 0; j < df; ++j)
            a[i - df + j] = (a[i - df + j] + (q - c % q) * f[j]) % q;
    }
    a.resize(df);
    return a;
}

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, long q) {
    Poly prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % q;
    }
    return poly_mod(std::move(prod), f, q);
}

inline Poly poly_powmod(Poly base, long long e, const Poly& f, long q) {
    Poly acc(f.size() - 1, 0);
    acc[0] = 1;
    base = poly_mod(std::move(base), f, q);
    while (e > 0) {
        if (e & 1) acc = poly_mulmod(acc, base, f, q);
        base = poly_mulmod(base, base, f, q);
        e >>= 1;
    }
    return acc;
}

inline Poly poly_gcd(Poly a, Poly b, long q) {
    a = poly_trim(std::move(a));
    b = poly_trim(std::move(b));
    while (!b.empty()) {
        // a mod b with b made monic
        long lead = b.back();
        if (lead != 1) {
            long inv = 1;
            for (long t = 1; t < q; ++t)
                if (lead * t % q == 1) inv = t;
            for (auto& c : b) c = c * inv % q;
        }
        Poly r = poly_trim(poly_mod(std::move(a), b, q));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline bool poly_is_irreducible(const Poly& f, long q) {
    long L = static_cast<long>(f.size()) - 1;
    if (L < 1) return false;
    if (L == 1) return true;  // monic linear polynomials
    Poly x = {0, 1};
    // x^(q^L) == x mod f
    Poly xq = poly_powmod(x, 1, f, q);
    {
        Poly acc = x;
        for (long i = 0; i < L; ++i) acc = poly_powmod(acc, q, f, q);
        Poly diff = acc;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + q - 1) % q;
        if (!poly_trim(diff).empty()) return false;
    }
    for (long r : prime_factors(L)) {
        Poly acc = x;
        for (long i = 0; i < L / r; ++i) acc = poly_powmod(acc, q, f, q);
        Poly diff = acc;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + q - 1) % q;
        diff = poly_trim(std::move(diff));
        if (diff.empty()) return false;  // x^(q^(L/r)) == x: f splits below L
        Poly g = poly_gcd(f, diff, q);
        if (static_cast<long>(poly_trim(g).size()) - 1 > 0) return false;
    }
    return true;
}

inline bool poly_root_is_primitive(const Poly& f, long q, long order) {
    // order = q^L - 1; x primitive mod f iff x^(order/r) != 1 for each prime r
    Poly x = {0, 1};
    for (long r : prime_factors(order)) {
        Poly p = poly_powmod(x, order / r, f, q);
        Poly diff = p;
        diff[0] = (diff[0] + q - 1) % q;
        if (poly_trim(diff).empty()) return false;
    }
    return true;
}

}  // namespace detail

class AmbientField {
  public:
    // modulus (if given) is the coefficient list c0..cL, constant term
    // first, monic of degree L.  Without one, the search picks the first
    // primitive polynomial in ascending packed-code order (constant
    // coefficient = least significant digit), which is deterministic.
    AmbientField(long q, long L, std::optional<std::vector<long>> modulus = std::nullopt)
        : q_(q), L_(L) {
        if (!detail::is_prime(q)) throw non_prime_base("base size " + std::to_string(q) + " is not prime");
        if (L < 1) throw precondition_error("ambient degree must be >= 1");
        size_ = 1;
        for (long i = 0; i < L; ++i) {
            size_ *= q;
            if (size_ > (1L << 23))
                throw scale_exceeded("field size q^L exceeds the 2^23 table guard");
        }
        order_ = size_ - 1;
        if (modulus) {
            mod_ = *modulus;
            validate_modulus();
        } else {
            search_modulus();
        }
        build_tables();
    }

    long q() const { return q_; }
    long degree() const { return L_; }
    long order() const { return order_; }  // q^L - 1
    const std::vector<long>& modulus() const { return mod_; }

    long subfield_order(long d) const {
        check_divisor(d);
        long m = 1;
        for (long i = 0; i < d; ++i) m *= q_;
        return m - 1;
    }

    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    Fq xi() const { return exp(1); }

    Fq exp(long j) const { return Fq{exp_table_[umod(j, order_)]}; }

    long dlog(Fq x) const {
        if (x.code == 0) throw zero_element("dlog of zero");
        return dlog_table_[x.code];
    }

    Fq from_residue(long r) const { return Fq{static_cast<std::uint32_t>(umod(r, q_))}; }

    long residue(Fq x) const {
        if (x.code >= static_cast<std::uint32_t>(q_))
            throw element_not_in_subfield("element is not in the prime field");
        return static_cast<long>(x.code);
    }

    std::vector<long> coeffs(Fq x) const {
        std::vector<long> out(L_);
        std::uint32_t c = x.code;
        for (long i = 0; i < L_; ++i) {
            out[i] = c % q_;
            c /= q_;
        }
        return out;
    }

    Fq add(Fq a, Fq b) const {
        std::uint32_t out = 0, mul = 1, ca = a.code, cb = b.code;
        for (long i = 0; i < L_; ++i) {
            out += (ca % q_ + cb % q_) % q_ * mul;
            ca /= q_;
            cb /= q_;
            mul *= q_;
        }
        return Fq{out};
    }
    Fq neg(Fq a) const {
        std::uint32_t out = 0, mul = 1, ca = a.code;
        for (long i = 0; i < L_; ++i) {
            out += (q_ - ca % q_) % q_ * mul;
            ca /= q_;
            mul *= q_;
        }
        return Fq{out};
    }
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }

    Fq mul(Fq a, Fq b) const {
        if (a.code == 0 || b.code == 0) return Fq{0};
        return exp(dlog(a) + dlog(b));
    }
    Fq inv(Fq a) const {
        if (a.code == 0) throw zero_element("inverse of zero");
        return exp(order_ - dlog(a));
    }
    Fq pow(Fq a, long long e) const {
        if (a.code == 0) {
            if (e <= 0) throw zero_element("zero to a non-positive power");
            return Fq{0};
        }
        long long r = e % order_;
        return exp(static_cast<long>(((dlog(a) * r) % order_ + order_) % order_));
    }
    Fq frobenius(Fq a) const { return pow(a, q_); }

    // Generator xi_d = xi^((q^L-1)/(q^d-1)) of the degree-d subfield.
    Fq subfield_generator(long d) const {
        check_divisor(d);
        return exp(order_ / subfield_order(d));
    }

    bool in_subfield(Fq x, long d) const {
        check_divisor(d);
        if (x.code == 0) return true;
        return dlog(x) % (order_ / subfield_order(d)) == 0;
    }

    // Discrete log of x relative to xi_n (x must lie in the degree-n subfield).
    long dlog_at_level(Fq x, long n) const {
        if (x.code == 0) throw zero_element("dlog of zero");
        if (!in_subfield(x, n))
            throw element_not_in_subfield("element is not in the degree-" + std::to_string(n) +
                                          " subfield");
        return dlog(x) / (order_ / subfield_order(n));
    }

    Fq trace(Fq x, long n, long m) const {
        check_tower(x, n, m);
        Fq acc{0};
        Fq term = x;
        for (long i = 0; i < n / m; ++i) {
            acc = add(acc, term);
            term = pow(term, powl_small(m));
        }
        return acc;
    }

    Fq norm(Fq x, long n, long m) const {
        check_tower(x, n, m);
        if (x.code == 0) return Fq{0};
        long ratio = subfield_order(n) / subfield_order(m);
        return pow(x, ratio);
    }

    // Evaluate a polynomial (constant term first, residue coefficients) at x.
    Fq eval_poly(const std::vector<long>& coeffs, Fq x) const {
        Fq acc{0};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = add(mul(acc, x), from_residue(*it));
        return acc;
    }

  private:
    long umod(long a, long m) const { return ((a % m) + m) % m; }

    long long powl_small(long m) const {
        long long e = 1;
        for (long i = 0; i < m; ++i) e *= q_;
        return e;  // q^m, used as a Frobenius power; fits easily
    }

    void check_divisor(long d) const {
        if (d < 1 || L_ % d != 0)
            throw non_divisor_degree("degree " + std::to_string(d) + " does not divide " +
                                     std::to_string(L_));
    }

    void check_tower(Fq x, long n, long m) const {
        check_divisor(n);
        if (m < 1 || n % m != 0)
            throw non_divisor_degree("degree " + std::to_string(m) + " does not divide " +
                                     std::to_string(n));
        if (!in_subfield(x, n))
            throw element_not_in_subfield("element is not in the degree-" + std::to_string(n) +
                                          " subfield");
    }

    void validate_modulus() {
        if (static_cast<long>(mod_.size()) != L_ + 1 || mod_.back() != 1)
            throw precondition_error("modulus must be monic of degree L");
        for (auto& c : mod_) c = umod(c, q_);
        if (!detail::poly_is_irreducible(mod_, q_))
            throw reducible_modulus("modulus is reducible over F_" + std::to_string(q_));
        if (!detail::poly_root_is_primitive(mod_, q_, order_))
            throw non_primitive_modulus("modulus is irreducible but not primitive");
    }

    void search_modulus() {
        for (long code = 0; code < size_; ++code) {
            if (code % q_ == 0) continue;  // constant term must be nonzero
            std::vector<long> f(L_ + 1);
            long c = code;
            for (long i = 0; i < L_; ++i) {
                f[i] = c % q_;
                c /= q_;
            }
            f[L_] = 1;
            if (!detail::poly_is_irreducible(f, q_)) continue;
            if (!detail::poly_root_is_primitive(f, q_, order_)) continue;
            mod_ = std::move(f);
            return;
        }
        throw internal_mismatch("no primitive polynomial found");  // unreachable
    }

    void build_tables() {
        exp_table_.assign(order_, 0);
        dlog_table_.assign(size_, -1);
        std::vector<long> v(L_, 0);
        v[0] = 1;
        for (long j = 0; j < order_; ++j) {
            std::uint32_t code = 0, mul = 1;
            for (long i = 0; i < L_; ++i) {
                code += static_cast<std::uint32_t>(v[i]) * mul;
                mul *= q_;
            }
            exp_table_[j] = code;
            dlog_table_[code] = j;
            // multiply by x and reduce mod the modulus
            long carry = v[L_ - 1];
            for (long i = L_ - 1; i > 0; --i) v[i] = v[i - 1];
            v[0] = 0;
            if (carry != 0)
                for (long i = 0; i < L_; ++i) v[i] = umod(v[i] - carry * mod_[i], q_);
        }
        // closing the cycle certifies the order of xi
        std::uint32_t code = 0, mul = 1;
        for (long i = 0; i < L_; ++i) {
            code += static_cast<std::uint32_t>(v[i]) * mul;
            mul *= q_;
        }
        if (code != 1) throw internal_mismatch("generator order check failed after table build");
    }

    long q_, L_;
    long size_ = 0, order_ = 0;
    std::vector<long> mod_;
    std::vector<std::uint32_t> exp_table_;
    std::vector<long> dlog_table_;
};

// Translation of character labels between two choices of generator for the
// same subfield tower.  When a degree-n0 modulus is supplied but the
// computation needs a larger ambient degree L, the field is built with its
// default modulus and the supplied polynomial is anchored inside it: its
// root of smallest discrete log, xi_{n0}^k, plays the role the caller's
// labels refer to.  A character given as e relative to that root becomes
// e * k^(-1) mod (q^d - 1) relative to xi_d, for every level d | n0.
struct CharRelabel {
    long q = 0;
    long anchor_degree = 1;
    long k = 1;  // xi_{anchor_degree}^k is the anchored root

    long apply(const AmbientField& F, long level, long e) const {
        if (anchor_degree % level != 0)
            throw non_divisor_degree("character level " + std::to_string(level) +
                                     " does not divide the anchor degree " +
                                     std::to_string(anchor_degree));
        long m = F.subfield_order(level);
        long kinv = detail::mod_inverse(k % m, m);
        return ((e % m) * kinv) % m;
    }
};

inline CharRelabel anchor_relabel(const AmbientField& F, const std::vector<long>& anchor_modulus) {
    long n0 = static_cast<long>(anchor_modulus.size()) - 1;
    if (n0 < 1 || anchor_modulus.back() % F.q() != 1)
        throw precondition_error("anchor modulus must be monic of degree >= 1");
    if (F.degree() % n0 != 0)
        throw non_divisor_degree("anchor degree does not divide the ambient degree");
    long m = F.subfield_order(n0);
    Fq gen = F.subfield_generator(n0);
    for (long k = 1; k <= m; ++k) {
        Fq root = F.pow(gen, k);
        if (F.eval_poly(anchor_modulus, root).code == 0) {
            if (std::gcd(k, m) != 1)
                throw non_primitive_modulus("anchor modulus root is not a generator");
            return CharRelabel{F.q(), n0, k};
        }
    }
    throw reducible_modulus("anchor modulus has no root in its degree's subfield");
}

}  // namespace glneps
