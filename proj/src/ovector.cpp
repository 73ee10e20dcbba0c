#include "octolin/ovector.hpp"

#include <algorithm>
#include <cmath>

namespace octolin {

namespace {

void require_same_length(const OVector& x, const OVector& y) {
    if (x.size() != y.size())
        throw DimensionError("vector length mismatch: " + std::to_string(x.size()) +
                             " vs " + std::to_string(y.size()));
}

} // namespace

OVector& OVector::operator+=(const OVector& y) {
    require_same_length(*this, y);
    for (std::size_t i = 0; i < size(); ++i) e_[i] += y[i];
    return *this;
}

OVector& OVector::operator-=(const OVector& y) {
    require_same_length(*this, y);
    for (std::size_t i = 0; i < size(); ++i) e_[i] -= y[i];
    return *this;
}

OVector& OVector::operator*=(double s) {
    for (auto& p : e_) p *= s;
    return *this;
}

OVector operator+(OVector x, const OVector& y) { return x += y; }
OVector operator-(OVector x, const OVector& y) { return x -= y; }
OVector operator-(OVector x) { return x *= -1.0; }
OVector operator*(OVector x, double s) { return x *= s; }
OVector operator*(double s, OVector x) { return x *= s; }

double vnorm_sq(const OVector& x) {
    double s = 0.0;
    for (const auto& p : x) s += norm_sq(p);
    return s;
}

double vnorm(const OVector& x) { return std::sqrt(vnorm_sq(x)); }

Octonion inner(const OVector& x, const OVector& y) {
    require_same_length(x, y);
    Octonion acc;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * conj(y[i]);
    return acc;
}

double inner_real(const OVector& x, const OVector& y) {
    require_same_length(x, y);
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (int k = 0; k < 8; ++k) acc += x[i][k] * y[i][k];
    return acc;
}

Octonion second_associator(const Octonion& p, const OVector& u, const OVector& v) {
    return inner(scalar_mul_left(p, u), v) - p * inner(u, v);
}

OVector scalar_mul_left(const Octonion& p, const OVector& x) {
    OVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = p * x[i];
    return r;
}

OVector scalar_mul_right(const OVector& x, const Octonion& p) {
    OVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * p;
    return r;
}

OVector entrywise_associator(const Octonion& p, const Octonion& q, const OVector& v) {
    OVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = associator(p, q, v[i]);
    return r;
}

RealDecomposition decompose_real(const OVector& x) {
    RealDecomposition d;
    d.parts.reserve(8);
    for (int k = 0; k < 8; ++k) {
        OVector part(x.size());
        for (std::size_t j = 0; j < x.size(); ++j) part[j] = Octonion::real(x[j][k]);
        d.parts.push_back(std::move(part));
    }
    return d;
}

OVector recompose_real(const RealDecomposition& d) {
    OVector acc = scalar_mul_left(Octonion::unit(0), d.parts[0]);
    for (int k = 1; k < 8; ++k) acc += scalar_mul_left(Octonion::unit(k), d.parts[static_cast<std::size_t>(k)]);
    return acc;
}

Octonion inner_from_real(const OVector& x, const OVector& y) {
    require_same_length(x, y);
    Octonion acc;
    for (int i = 0; i < 8; ++i) {
        const Octonion ei = Octonion::unit(i);
        acc += ei * inner_real(scalar_mul_left(conj(ei), x), y);
    }
    return acc;
}

Octonion polarization_inner(const OVector& x, const OVector& y) {
    require_same_length(x, y);
    Octonion acc;
    for (int i = 0; i < 8; ++i) {
        const OVector eix = scalar_mul_left(conj(Octonion::unit(i)), x);
        const double d = vnorm_sq(eix + y) - vnorm_sq(eix - y);
        acc += Octonion::unit(i) * d;
    }
    return acc * 0.25;
}

std::vector<double> coords(const OVector& x) {
    std::vector<double> c;
    c.reserve(8 * x.size());
    for (const auto& p : x)
        for (int k = 0; k < 8; ++k) c.push_back(p[k]);
    return c;
}

OVector vector_from_coords(const std::vector<double>& c) {
    if (c.empty() || c.size() % 8 != 0)
        throw DimensionError("coordinate count must be a positive multiple of 8");
    OVector x(c.size() / 8);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (int k = 0; k < 8; ++k) x[i][k] = c[8 * i + static_cast<std::size_t>(k)];
    return x;
}

double max_abs_diff(const OVector& x, const OVector& y) {
    require_same_length(x, y);
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, max_abs_diff(x[i], y[i]));
    return m;
}

} // namespace octolin
