#ifndef OCTOLIN_OCTONION_HPP
#define OCTOLIN_OCTONION_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "octolin/errors.hpp"

namespace octolin {

/// Absolute per-coordinate tolerance for octonion equality tests.
inline constexpr double kTolEq = 1e-9;

/// Signed basis product: e_i * e_j = sign * e_index.
struct BasisProduct {
    int sign;
    int index;
};

namespace detail {

/// The seven index triples (i,j,k) with e_i e_j = e_k; closed under cyclic
/// permutation, antisymmetric under transposition.
inline constexpr std::array<std::array<int, 3>, 7> kTriples = {{
    {1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 6, 5},
}};

struct MulTable {
    std::array<std::array<std::int8_t, 8>, 8> sign{};
    std::array<std::array<std::int8_t, 8>, 8> index{};
};

constexpr MulTable build_mul_table() {
    MulTable t{};
    for (int j = 0; j < 8; ++j) {
        t.sign[0][j] = 1;
        t.index[0][j] = static_cast<std::int8_t>(j);
        t.sign[j][0] = 1;
        t.index[j][0] = static_cast<std::int8_t>(j);
    }
    for (int i = 1; i < 8; ++i) {
        t.sign[i][i] = -1;
        t.index[i][i] = 0;
    }
    for (const auto& tr : kTriples) {
        const int a = tr[0], b = tr[1], c = tr[2];
        const int even[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
        for (const auto& p : even) {
            t.sign[p[0]][p[1]] = 1;
            t.index[p[0]][p[1]] = static_cast<std::int8_t>(p[2]);
            t.sign[p[1]][p[0]] = -1;
            t.index[p[1]][p[0]] = static_cast<std::int8_t>(p[2]);
        }
    }
    return t;
}

inline constexpr MulTable kMulTable = build_mul_table();

} // namespace detail

/// Exact signed product of basis elements, 0 <= i, j <= 7.
constexpr BasisProduct basis_mul(int i, int j) {
    return {detail::kMulTable.sign[i][j], detail::kMulTable.index[i][j]};
}

/// An octonion as 8 real coordinates; coordinate i is the coefficient
/// of e_i, with e_0 = 1. Constructors reject non-finite coordinates.
class Octonion {
public:
    Octonion() : c_{} {}

    Octonion(double c0, double c1, double c2, double c3,
             double c4, double c5, double c6, double c7)
        : c_{c0, c1, c2, c3, c4, c5, c6, c7} {
        check_finite();
    }

    explicit Octonion(const std::array<double, 8>& coords) : c_(coords) {
        check_finite();
    }

    /// The real octonion r*1.
    static Octonion real(double r) { return Octonion(r, 0, 0, 0, 0, 0, 0, 0); }

    /// The basis element e_i, 0 <= i <= 7.
    static Octonion unit(int i) {
        Octonion p;
        p.c_[static_cast<std::size_t>(i)] = 1.0;
        return p;
    }

    double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
    const std::array<double, 8>& coords() const { return c_; }

    Octonion& operator+=(const Octonion& q) {
        for (int i = 0; i < 8; ++i) c_[i] += q.c_[i];
        return *this;
    }
    Octonion& operator-=(const Octonion& q) {
        for (int i = 0; i < 8; ++i) c_[i] -= q.c_[i];
        return *this;
    }
    Octonion& operator*=(double s) {
        for (double& x : c_) x *= s;
        return *this;
    }
    Octonion& operator/=(double s) {
        for (double& x : c_) x /= s;
        return *this;
    }

private:
    void check_finite() const {
        for (double x : c_) {
            if (!std::isfinite(x)) throw DomainError("octonion coordinate is not finite");
        }
    }

    std::array<double, 8> c_;
};

inline Octonion operator+(Octonion p, const Octonion& q) { return p += q; }
inline Octonion operator-(Octonion p, const Octonion& q) { return p -= q; }
inline Octonion operator-(Octonion p) { return p *= -1.0; }
inline Octonion operator*(Octonion p, double s) { return p *= s; }
inline Octonion operator*(double s, Octonion p) { return p *= s; }
inline Octonion operator/(Octonion p, double s) { return p /= s; }

/// Octonionic product, bilinear extension of basis_mul.
inline Octonion operator*(const Octonion& p, const Octonion& q) {
    std::array<double, 8> r{};
    for (int i = 0; i < 8; ++i) {
        const double pi = p[i];
        if (pi == 0.0) continue;
        for (int j = 0; j < 8; ++j) {
            const BasisProduct b = basis_mul(i, j);
            r[static_cast<std::size_t>(b.index)] += b.sign * pi * q[j];
        }
    }
    return Octonion(r);
}

inline Octonion conj(const Octonion& p) {
    return Octonion(p[0], -p[1], -p[2], -p[3], -p[4], -p[5], -p[6], -p[7]);
}

inline double re(const Octonion& p) { return p[0]; }

inline Octonion im(const Octonion& p) {
    Octonion q = p;
    q[0] = 0.0;
    return q;
}

inline double norm_sq(const Octonion& p) {
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += p[i] * p[i];
    return s;
}

inline double norm(const Octonion& p) { return std::sqrt(norm_sq(p)); }

/// Multiplicative inverse conj(p)/|p|^2; near-zero p is a domain error.
inline Octonion inv(const Octonion& p) {
    const double n = norm(p);
    if (n <= kTolEq) throw DomainError("zero divisor");
    return conj(p) / (n * n);
}

/// [p,q,r] = (pq)r - p(qr); alternating in all three arguments.
inline Octonion associator(const Octonion& p, const Octonion& q, const Octonion& r) {
    return (p * q) * r - p * (q * r);
}

/// Real-part projection computed as (5/12) p - (1/12) sum_i e_i p e_i;
/// coincides with the coordinate-0 projection.
inline Octonion real_part_formula(const Octonion& p) {
    Octonion acc;
    for (int i = 1; i < 8; ++i) {
        const Octonion ei = Octonion::unit(i);
        acc += (ei * p) * ei;
    }
    return p * (5.0 / 12.0) - acc * (1.0 / 12.0);
}

inline double max_abs_diff(const Octonion& p, const Octonion& q) {
    double m = 0.0;
    for (int i = 0; i < 8; ++i) m = std::max(m, std::abs(p[i] - q[i]));
    return m;
}

inline bool approx_equal(const Octonion& p, const Octonion& q, double tol = kTolEq) {
    return max_abs_diff(p, q) <= tol;
}

/// Renders e.g. "1 - 0.5 e3"; coefficients use `digits` significant digits.
std::string to_string(const Octonion& p, int digits = 6);

std::ostream& operator<<(std::ostream& os, const Octonion& p);

} // namespace octolin

#endif // OCTOLIN_OCTONION_HPP
