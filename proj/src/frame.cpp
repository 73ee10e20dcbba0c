#include "octolin/frame.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace octolin {

Frame::Frame(std::vector<OVector> vectors) : vs_(std::move(vectors)) {
    if (vs_.empty()) throw DimensionError("frame must contain at least one vector");
    const std::size_t n = vs_.front().size();
    for (const auto& v : vs_)
        if (v.size() != n) throw DimensionError("frame vectors must have uniform length");
}

Frame Frame::standard_basis(std::size_t n) {
    std::vector<OVector> vs;
    vs.reserve(n);
    for (std::size_t j = 0; j < n; ++j) vs.push_back(OVector::standard_basis(n, j));
    return Frame(std::move(vs));
}

CheckResult is_orthonormal(const Frame& f, double tol) {
    double worst = 0.0;
    for (std::size_t a = 0; a < f.size(); ++a) {
        for (std::size_t b = a; b < f.size(); ++b) {
            Octonion g = inner(f[a], f[b]);
            if (a == b) g[0] -= 1.0;
            worst = std::max(worst, norm(g));
        }
    }
    return {worst <= tol, worst};
}

double max_associator_residual(const Frame& f) {
    double worst = 0.0;
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = 0; b < f.size(); ++b)
            for (int m = 1; m < 8; ++m)
                worst = std::max(worst, norm(second_associator(Octonion::unit(m), f[a], f[b])));
    return worst;
}

CheckResult is_weak_associative(const Frame& f, const FrameTolerances& tol) {
    const CheckResult on = is_orthonormal(f, tol.gram);
    const double assoc = max_associator_residual(f);
    return {on.ok && assoc <= tol.assoc, std::max(on.max_residual, assoc)};
}

double max_imaginary_residual(const Frame& f) {
    double worst = 0.0;
    for (const auto& v : f)
        for (const auto& p : v)
            for (int k = 1; k < 8; ++k) worst = std::max(worst, std::abs(p[k]));
    return worst;
}

bool is_associative_frame(const Frame& f, const FrameTolerances& tol) {
    return is_orthonormal(f, tol.gram).ok && max_imaginary_residual(f) <= tol.assoc;
}

int real_span_rank(const Frame& f, double tol_rank) {
    const auto k = static_cast<Eigen::Index>(f.size());
    const auto n = static_cast<Eigen::Index>(f.dim());
    Eigen::MatrixXd m(8 * k, 8 * n);
    for (Eigen::Index a = 0; a < k; ++a) {
        for (int i = 0; i < 8; ++i) {
            const std::vector<double> c =
                coords(scalar_mul_left(Octonion::unit(i), f[static_cast<std::size_t>(a)]));
            for (std::size_t j = 0; j < c.size(); ++j)
                m(8 * a + i, static_cast<Eigen::Index>(j)) = c[j];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    const double cutoff = tol_rank * sv(0);
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    return r;
}

FrameReport classify_frame(const Frame& f, const FrameTolerances& tol) {
    FrameReport rep;
    const CheckResult on = is_orthonormal(f, tol.gram);
    rep.orthonormal = on.ok;
    rep.max_gram_residual = on.max_residual;
    rep.max_assoc_residual = max_associator_residual(f);
    rep.weak_associative = rep.orthonormal && rep.max_assoc_residual <= tol.assoc;
    rep.associative = rep.orthonormal && max_imaginary_residual(f) <= tol.assoc;
    rep.complete = rep.weak_associative &&
                   real_span_rank(f, tol.rank) == static_cast<int>(8 * f.dim());
    return rep;
}

ParsevalResult parseval_check(const Frame& f, const OVector& x) {
    if (f.dim() != x.size())
        throw DimensionError("parseval_check: vector length does not match frame dimension");
    double energy = 0.0;
    OVector recon(x.size());
    for (const auto& xa : f) {
        const Octonion c = inner(x, xa);
        energy += norm_sq(c);
        recon += scalar_mul_left(c, xa);
    }
    return {energy, vnorm(x - recon)};
}

Frame frame_scalar_action(const Octonion& p, const Frame& f, Side side, double tol) {
    if (std::abs(norm(p) - 1.0) > tol)
        throw DomainError("frame_scalar_action requires a unit scalar");
    std::vector<OVector> vs;
    vs.reserve(f.size());
    for (const auto& v : f)
        vs.push_back(side == Side::Left ? scalar_mul_left(p, v) : scalar_mul_right(v, p));
    return Frame(std::move(vs));
}

std::optional<ParsevalWitness> parseval_witness(const Frame& f, double tol) {
    const std::size_t n = f.dim();
    for (int i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const OVector x = scalar_mul_left(Octonion::unit(i), OVector::standard_basis(n, j));
            const ParsevalResult r = parseval_check(f, x);
            const double dev = std::abs(r.coef_energy - vnorm_sq(x));
            if (dev > tol || r.reconstruction_residual > tol)
                return ParsevalWitness{x, dev, r.reconstruction_residual};
        }
    }
    return std::nullopt;
}

double bessel_residual(const Frame& f, const OVector& x, const FrameTolerances& tol) {
    if (!is_weak_associative(f, tol).ok)
        throw ClassificationError("bessel_residual requires a weak associative orthonormal set");
    if (f.dim() != x.size())
        throw DimensionError("bessel_residual: vector length does not match frame dimension");
    double energy = 0.0;
    OVector partial(x.size());
    for (const auto& xi : f) {
        const Octonion c = inner(x, xi);
        energy += norm_sq(c);
        partial += scalar_mul_left(c, xi);
    }
    const double tail = vnorm_sq(x - partial);
    return std::abs(vnorm_sq(x) - (energy + tail));
}

} // namespace octolin
