#pragma once

// Brute-force character-theoretic route to the Rankin-Selberg gamma factor:
// GL_n(F_q) element enumeration, conjugacy-class identification (primary
// classes), cuspidal character values, normalized Bessel functions, and the
// bilinear Bessel sum over U_m \ GL_m.

#include <glneps/ambient_field.hpp>
#include <glneps/characters.hpp>
#include <glneps/cyclotomic.hpp>
#include <glneps/epsilon.hpp>
#include <glneps/errors.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace glneps {

// Square matrix over the prime field F_q, n <= 4.
struct Mat {
    int n = 0;
    std::array<std::uint8_t, 16> a{};

    std::uint8_t& at(int i, int j) { return a[i * n + j]; }
    std::uint8_t at(int i, int j) const { return a[i * n + j]; }

    friend bool operator==(const Mat& x, const Mat& y) { return x.n == y.n && x.a == y.a; }
};

inline Mat mat_identity(int n) {
    Mat m;
    m.n = n;
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline Mat mat_mul(const Mat& x, const Mat& y, long q) {
    Mat out;
    out.n = x.n;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            long acc = 0;
            for (int k = 0; k < x.n; ++k) acc += x.at(i, k) * y.at(k, j);
            out.at(i, j) = static_cast<std::uint8_t>(acc % q);
        }
    return out;
}

inline std::uint64_t mat_key(const Mat& m, long q) {
    std::uint64_t key = 0;
    for (int i = m.n * m.n - 1; i >= 0; --i) key = key * q + m.a[i];
    return key;
}

inline long mat_det(Mat m, long q) {
    long det = 1;
    for (int c = 0; c < m.n; ++c) {
        int pivot = -1;
        for (int r = c; r < m.n; ++r)
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != c) {
            for (int j = 0; j < m.n; ++j) std::swap(m.at(c, j), m.at(pivot, j));
            det = (q - det) % q;
        }
        long p = m.at(c, c);
        det = det * p % q;
        long pinv = detail::mod_inverse(p, q);
        for (int r = c + 1; r < m.n; ++r) {
            long factor = m.at(r, c) * pinv % q;
            if (factor == 0) continue;
            for (int j = c; j < m.n; ++j)
                m.at(r, j) = static_cast<std::uint8_t>((m.at(r, j) + (q - factor) * m.at(c, j)) % q);
        }
    }
    return det;
}

inline void check_gl_scale(int n, long q) {
    double cells = 1;
    for (int i = 0; i < n * n; ++i) cells *= static_cast<double>(q);
    if (n > 4 || cells > 3.4e7)
        throw scale_exceeded("GL_" + std::to_string(n) + "(F_" + std::to_string(q) +
                             ") enumeration exceeds the desk-scale guard");
}

inline std::vector<Mat> enumerate_gl(int n, long q) {
    check_gl_scale(n, q);
    std::vector<Mat> out;
    long cells = n * n;
    long total = 1;
    for (long i = 0; i < cells; ++i) total *= q;
    for (long code = 0; code < total; ++code) {
        Mat m;
        m.n = n;
        long c = code;
        for (long i = 0; i < cells; ++i) {
            m.a[i] = static_cast<std::uint8_t>(c % q);
            c /= q;
        }
        if (mat_det(m, q) != 0) out.push_back(m);
    }
    return out;
}

// All upper unitriangular matrices of U_n(F_q).
inline std::vector<Mat> enumerate_unipotent(int n, long q) {
    long cells = n * (n - 1) / 2;
    long total = 1;
    for (long i = 0; i < cells; ++i) total *= q;
    std::vector<Mat> out;
    out.reserve(total);
    for (long code = 0; code < total; ++code) {
        Mat m = mat_identity(n);
        long c = code;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                m.at(i, j) = static_cast<std::uint8_t>(c % q);
                c /= q;
            }
        out.push_back(m);
    }
    return out;
}

// Canonical form of g under left multiplication by U_m: working bottom-up,
// each row is cleared at the pivot columns of the rows below it (only
// additions of lower rows to upper rows are available in U_m).  One
// representative per coset.
inline Mat coset_canonical(Mat g, long q) {
    int n = g.n;
    std::vector<int> pivot(n, -1);
    for (int r = n - 1; r >= 0; --r) {
        for (int s = r + 1; s < n; ++s) {
            int p = pivot[s];
            long c = g.at(r, p);
            if (c == 0) continue;
            long t = (q - c * detail::mod_inverse(g.at(s, p), q) % q) % q;
            for (int j = 0; j < n; ++j)
                g.at(r, j) = static_cast<std::uint8_t>((g.at(r, j) + t * g.at(s, j)) % q);
        }
        for (int j = 0; j < n; ++j)
            if (g.at(r, j) != 0) {
                pivot[r] = j;
                break;
            }
    }
    return g;
}

inline std::vector<Mat> coset_reps(int m, long q) {
    std::vector<Mat> out;
    std::map<std::uint64_t, bool> seen;
    for (const Mat& g : enumerate_gl(m, q)) {
        Mat canon = coset_canonical(g, q);
        std::uint64_t key = mat_key(canon, q);
        if (seen[key]) continue;
        seen[key] = true;
        out.push_back(canon);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conjugacy-class data

namespace detail {

// Monic irreducible polynomials over F_q of each degree up to maxdeg,
// little-endian coefficients, found by trial division.
inline std::vector<Poly> monic_irreducibles(long q, long maxdeg) {
    std::vector<Poly> out;
    for (long deg = 1; deg <= maxdeg; ++deg) {
        long total = 1;
        for (long i = 0; i < deg; ++i) total *= q;
        for (long code = 0; code < total; ++code) {
            Poly f(deg + 1);
            long c = code;
            for (long i = 0; i < deg; ++i) {
                f[i] = c % q;
                c /= q;
            }
            f[deg] = 1;
            bool irred = true;
            for (const Poly& p : out) {
                if (2 * (static_cast<long>(p.size()) - 1) > deg + 1) break;
                if (static_cast<long>(p.size()) - 1 > deg / 2) continue;
                if (poly_trim(poly_mod(f, p, q)).empty()) {
                    irred = false;
                    break;
                }
            }
            if (irred) out.push_back(f);
        }
    }
    return out;
}

inline const std::vector<Poly>& irreducible_table(long q, long maxdeg) {
    static std::map<std::pair<long, long>, std::vector<Poly>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(q, maxdeg);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, monic_irreducibles(q, maxdeg)).first->second;
}

}  // namespace detail

// Characteristic polynomial det(xI - M), little-endian, by permutation
// expansion (n <= 4: at most 24 terms of products of linear polynomials).
inline detail::Poly char_poly(const Mat& m, long q) {
    int n = m.n;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    detail::Poly result(n + 1, 0);
    auto process = [&](const std::vector<int>& p, int sign) {
        detail::Poly term = {1};
        for (int i = 0; i < n; ++i) {
            // entry (i, p[i]) of xI - M
            detail::Poly cell;
            long off = (q - m.at(i, p[i]) % q) % q;
            if (i == p[i])
                cell = {off, 1};
            else
                cell = {off};
            detail::Poly prod(term.size() + cell.size() - 1, 0);
            for (std::size_t s = 0; s < term.size(); ++s)
                for (std::size_t t = 0; t < cell.size(); ++t)
                    prod[s + t] = (prod[s + t] + term[s] * cell[t]) % q;
            term = std::move(prod);
        }
        for (std::size_t s = 0; s < term.size(); ++s) {
            long v = sign > 0 ? term[s] : (q - term[s]) % q;
            result[s] = (result[s] + v) % q;
        }
    };
    // Heap's algorithm, tracking parity by swap count
    std::vector<int> c(n, 0);
    int sign = 1;
    process(perm, sign);
    int i = 0;
    while (i < n) {
        if (c[i] < i) {
            if (i % 2 == 0)
                std::swap(perm[0], perm[i]);
            else
                std::swap(perm[c[i]], perm[i]);
            sign = -sign;
            process(perm, sign);
            ++c[i];
            i = 0;
        } else {
            c[i] = 0;
            ++i;
        }
    }
    return result;
}

struct ClassData {
    bool primary = false;
    detail::Poly irr;    // the single irreducible factor when primary
    long d = 0;          // its degree
    long blocks = 0;     // Jordan block count of the unipotent part
    Fq eigenvalue{0};    // one root of irr in the degree-d subfield
};

namespace detail {

inline long mat_rank(Mat m, long q) {
    int n = m.n;
    int rank = 0;
    for (int c = 0; c < n && rank < n; ++c) {
        int pivot = -1;
        for (int r = rank; r < n; ++r)
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < n; ++j) std::swap(m.at(rank, j), m.at(pivot, j));
        long pinv = mod_inverse(m.at(rank, c), q);
        for (int r = rank + 1; r < n; ++r) {
            long factor = m.at(r, c) * pinv % q;
            if (factor == 0) continue;
            for (int j = c; j < n; ++j)
                m.at(r, j) = static_cast<std::uint8_t>((m.at(r, j) + (q - factor) * m.at(rank, j)) % q);
        }
        ++rank;
    }
    return rank;
}

// f(M) for a polynomial over F_q.
inline Mat mat_eval_poly(const Poly& f, const Mat& m, long q) {
    Mat acc;
    acc.n = m.n;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
        acc = mat_mul(acc, m, q);
        for (int i = 0; i < m.n; ++i)
            acc.at(i, i) = static_cast<std::uint8_t>((acc.at(i, i) + *it) % q);
    }
    return acc;
}

}  // namespace detail

inline ClassData class_data(const AmbientField& F, const Mat& g) {
    long q = F.q();
    int n = g.n;
    detail::Poly cp = char_poly(g, q);
    ClassData out;
    const auto& irreducibles = detail::irreducible_table(q, n);
    detail::Poly remaining = cp;
    for (const detail::Poly& f : irreducibles) {
        if (static_cast<long>(f.size()) > static_cast<long>(remaining.size())) break;
        if (!detail::poly_trim(detail::poly_mod(remaining, f, q)).empty()) continue;
        // f divides the characteristic polynomial
        out.irr = f;
        out.d = static_cast<long>(f.size()) - 1;
        // divide out all copies of f
        long count = 0;
        while (detail::poly_trim(detail::poly_mod(remaining, f, q)).empty()) {
            // exact division remaining / f
            detail::Poly quot(remaining.size() - f.size() + 1, 0);
            detail::Poly rem = remaining;
            for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
                long c = rem[i + f.size() - 1];
                quot[i] = c;
                if (c == 0) continue;
                for (std::size_t j = 0; j < f.size(); ++j)
                    rem[i + j] = (rem[i + j] + (q - c % q) * f[j]) % q;
            }
            remaining = std::move(quot);
            ++count;
        }
        out.primary = (count * out.d == n);
        break;
    }
    if (!out.primary) return out;
    // Jordan block count over F_{q^d}: dim ker f(g) / d
    Mat fg = detail::mat_eval_poly(out.irr, g, q);
    out.blocks = (n - detail::mat_rank(fg, q)) / out.d;
    // locate one root of irr in the degree-d subfield of the ambient field
    if (F.degree() % out.d != 0)
        throw non_divisor_degree("factor degree " + std::to_string(out.d) +
                                 " does not divide the ambient degree");
    Fq gen = F.subfield_generator(out.d);
    long sub_order = F.subfield_order(out.d);
    Fq t = F.one();
    bool found = false;
    for (long k = 0; k < sub_order; ++k) {
        if (F.eval_poly(out.irr, t).code == 0) {
            found = true;
            break;
        }
        t = F.mul(t, gen);
    }
    if (!found) throw internal_mismatch("irreducible factor has no root in its splitting subfield");
    out.eigenvalue = t;
    return out;
}

// ---------------------------------------------------------------------------
// Cuspidal characters and Bessel functions

// Character chi_f of the irreducible cuspidal representation of GL_n(F_q)
// attached to a regular orbit f of degree n.  Values: zero off primary
// classes; for a primary class with data (d, t, blocks),
//   chi(g) = (-1)^(n-1) * prod_{k=1}^{blocks-1} (1 - q^(d k))
//            * sum_{i=0}^{d-1} alpha(t^(q^i)).
// The formula is validated (not assumed) by the orthonormality, dimension,
// and end-to-end gamma-factor gates in the test suite.
class CuspidalCharacter {
  public:
    CuspidalCharacter(const AmbientField& F, const FOrbit& f) : F_(F), f_(f) {
        detail::require_regular(f);
        n_ = f.degree();
        alpha_ = normalized(f.rep());
    }

    long degree() const { return n_; }

    Cyclotomic operator()(const Mat& g) const {
        ClassData cd = class_data(F_, g);
        if (!cd.primary) return Cyclotomic(0);
        long key_poly = 0;
        for (auto it = cd.irr.rbegin(); it != cd.irr.rend(); ++it)
            key_poly = key_poly * F_.q() + *it;
        auto key = std::make_pair(key_poly, cd.blocks);
        {
            std::lock_guard<std::mutex> lock(mu_);
            if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        }
        long q = F_.q();
        Rational factor(((n_ - 1) % 2 == 0) ? 1 : -1);
        Rational qdk(1);
        for (long k = 1; k < cd.blocks; ++k) {
            for (long i = 0; i < cd.d; ++i) qdk *= q;
            factor *= Rational(1) - qdk;
        }
        Cyclotomic charsum(0);
        Fq t = cd.eigenvalue;
        for (long i = 0; i < cd.d; ++i) {
            charsum += char_eval(F_, alpha_, t);
            t = F_.frobenius(t);
        }
        Cyclotomic value = charsum * factor;
        std::lock_guard<std::mutex> lock(mu_);
        return cache_.emplace(key, std::move(value)).first->second;
    }

  private:
    const AmbientField& F_;
    FOrbit f_;
    long n_;
    GammaChar alpha_;
    mutable std::mutex mu_;
    mutable std::map<std::pair<long, long>, Cyclotomic> cache_;
};

// Which sign of psi appears in the Bessel averaging.  The inverse
// convention is the one satisfying the normalization B(1) = 1 together
// with the two-sided equivariance B(u g u') = psi(u) psi(u') B(g); the
// plain convention is kept behind this switch so the test suite can verify
// that exactly one convention passes the gates (they coincide at q = 2).
enum class BesselConvention { inverse, plain };

// Normalized Bessel function B_{f,psi} of the cuspidal attached to f:
//   B(g) = (1/|U_n|) sum_{u in U_n} chi_f(g u) psi(u)^{-1},
// where psi(u) = psi(u_{12} + u_{23} + ... + u_{n-1,n}).
class BesselFunction {
  public:
    BesselFunction(const AmbientField& F, const FOrbit& f, AdditiveChar psi,
                   BesselConvention conv = BesselConvention::inverse)
        : F_(F), chi_(F, f), psi_(psi), conv_(conv) {
        n_ = f.degree();
        unipotents_ = enumerate_unipotent(static_cast<int>(n_), F.q());
        super_.reserve(unipotents_.size());
        for (const Mat& u : unipotents_) {
            long s = 0;
            for (int i = 0; i + 1 < u.n; ++i) s += u.at(i, i + 1);
            super_.push_back(s % F.q());
        }
    }

    long psi_exponent(const Mat& u) const {
        long s = 0;
        for (int i = 0; i + 1 < u.n; ++i) s += u.at(i, i + 1);
        return psi_.a * s % F_.q();
    }

    Cyclotomic operator()(const Mat& g) const {
        long q = F_.q();
        std::vector<Cyclotomic> bucket(q);  // sums of chi(g u) by superdiagonal residue
        for (std::size_t k = 0; k < unipotents_.size(); ++k) {
            Cyclotomic v = chi_(mat_mul(g, unipotents_[k], q));
            if (!v.is_zero()) bucket[super_[k]] += v;
        }
        Cyclotomic acc(0);
        for (long s = 0; s < q; ++s) {
            if (bucket[s].is_zero()) continue;
            long twist = psi_.a * s % q;
            if (conv_ == BesselConvention::inverse) twist = (q - twist) % q;
            acc += bucket[s] * Cyclotomic::zeta(q, twist);
        }
        long usize = static_cast<long>(unipotents_.size());
        return acc * (Rational(1) / Rational(usize));
    }

  private:
    const AmbientField& F_;
    CuspidalCharacter chi_;
    AdditiveChar psi_;
    BesselConvention conv_;
    long n_;
    std::vector<Mat> unipotents_;
    std::vector<long> super_;
};

// gamma(pi_f x pi_g, psi) as the bilinear Bessel sum over U_m \ GL_m:
//   sum_h B_{f,psi}( [[0, I_{n-m}], [h, 0]] ) * B_{g,psi^{-1}}(h).
inline Cyclotomic rs_gamma_bessel(const AmbientField& F, const FOrbit& f, const FOrbit& g,
                                  AdditiveChar psi,
                                  BesselConvention conv = BesselConvention::inverse) {
    detail::require_regular(f);
    detail::require_regular(g);
    long n = f.degree(), m = g.degree();
    if (n <= m) throw degree_order_violation("Bessel gamma factor needs n > m");
    check_gl_scale(static_cast<int>(m), F.q());
    BesselFunction bf(F, f, psi, conv);
    BesselFunction bg(F, g, inverse(psi, F.q()), conv);
    Cyclotomic acc(0);
    for (const Mat& h : coset_reps(static_cast<int>(m), F.q())) {
        Mat J;
        J.n = static_cast<int>(n);
        for (long i = 0; i < n - m; ++i) J.at(static_cast<int>(i), static_cast<int>(m + i)) = 1;
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j)
                J.at(static_cast<int>(n - m + i), static_cast<int>(j)) = h.at(static_cast<int>(i), static_cast<int>(j));
        Cyclotomic first = bf(J);
        if (first.is_zero()) continue;
        acc += first * bg(h);
    }
    return acc;
}

}  // namespace glneps
