#ifndef OCTOLIN_OVECTOR_HPP
#define OCTOLIN_OVECTOR_HPP

#include <array>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "octolin/errors.hpp"
#include "octolin/octonion.hpp"

namespace octolin {

/// A row vector in O^n, n >= 1.
class OVector {
public:
    explicit OVector(std::size_t n) : e_(n) {
        if (n == 0) throw DimensionError("OVector length must be >= 1");
    }

    OVector(std::initializer_list<Octonion> init) : e_(init) {
        if (e_.empty()) throw DimensionError("OVector length must be >= 1");
    }

    explicit OVector(std::vector<Octonion> entries) : e_(std::move(entries)) {
        if (e_.empty()) throw DimensionError("OVector length must be >= 1");
    }

    /// The standard basis row vector with 1 in slot j (0-based).
    static OVector standard_basis(std::size_t n, std::size_t j) {
        OVector v(n);
        v[j] = Octonion::real(1.0);
        return v;
    }

    std::size_t size() const { return e_.size(); }
    const Octonion& operator[](std::size_t i) const { return e_[i]; }
    Octonion& operator[](std::size_t i) { return e_[i]; }

    auto begin() const { return e_.begin(); }
    auto end() const { return e_.end(); }

    OVector& operator+=(const OVector& y);
    OVector& operator-=(const OVector& y);
    OVector& operator*=(double s);

private:
    std::vector<Octonion> e_;
};

OVector operator+(OVector x, const OVector& y);
OVector operator-(OVector x, const OVector& y);
OVector operator-(OVector x);
OVector operator*(OVector x, double s);
OVector operator*(double s, OVector x);

double vnorm_sq(const OVector& x);
double vnorm(const OVector& x);

/// <x,y> = sum_i x_i conj(y_i).
Octonion inner(const OVector& x, const OVector& y);

/// Re<x,y>; equals the 8n-dimensional real dot product of the coordinates.
double inner_real(const OVector& x, const OVector& y);

/// A_p(u,v) = <pu,v> - p<u,v>; purely imaginary, antisymmetric in (u,v).
Octonion second_associator(const Octonion& p, const OVector& u, const OVector& v);

OVector scalar_mul_left(const Octonion& p, const OVector& x);
OVector scalar_mul_right(const OVector& x, const Octonion& p);

/// Entrywise associator vector ([p,q,v_1], ..., [p,q,v_n]).
OVector entrywise_associator(const Octonion& p, const Octonion& q, const OVector& v);

/// Splitting x = sum_i e_i parts[i] with all-real parts.
struct RealDecomposition {
    std::vector<OVector> parts; // 8 all-real vectors, indexed by basis element
};

RealDecomposition decompose_real(const OVector& x);
OVector recompose_real(const RealDecomposition& d);

/// <x,y> recovered as sum_i e_i <conj(e_i) x, y>_R; must agree with inner().
Octonion inner_from_real(const OVector& x, const OVector& y);

/// Polarization form (1/4) sum_i e_i (|conj(e_i)x + y|^2 - |conj(e_i)x - y|^2);
/// must agree with inner().
Octonion polarization_inner(const OVector& x, const OVector& y);

/// Flattened coordinates (entry-major: 8 coords of x_0, then x_1, ...).
std::vector<double> coords(const OVector& x);
OVector vector_from_coords(const std::vector<double>& c);

double max_abs_diff(const OVector& x, const OVector& y);

} // namespace octolin

#endif // OCTOLIN_OVECTOR_HPP
