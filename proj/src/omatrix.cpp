#include "octolin/omatrix.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace octolin {

namespace {

void require_square(const OMatrix& t, const char* op) {
    if (!t.is_square())
        throw DimensionError(std::string(op) + " requires a square matrix");
}

} // namespace

OMatrix::OMatrix(std::vector<OVector> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw DimensionError("matrix must have at least one row");
    const std::size_t n = rows_.front().size();
    for (const auto& r : rows_)
        if (r.size() != n) throw DimensionError("matrix rows must have equal length");
}

OMatrix OMatrix::identity(std::size_t n) {
    std::vector<OVector> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(OVector::standard_basis(n, i));
    return OMatrix(std::move(rows));
}

OMatrix OMatrix::zero(std::size_t k, std::size_t n) {
    return OMatrix(std::vector<OVector>(k, OVector(n)));
}

Frame OMatrix::row_frame() const { return Frame(rows_); }

Frame OMatrix::column_dagger_frame() const {
    require_square(*this, "column_dagger_frame");
    std::vector<OVector> daggers;
    daggers.reserve(cols());
    for (std::size_t j = 0; j < cols(); ++j) {
        OVector c(rows());
        for (std::size_t i = 0; i < rows(); ++i) c[i] = conj(rows_[i][j]);
        daggers.push_back(std::move(c));
    }
    return Frame(std::move(daggers));
}

double max_abs_diff(const OMatrix& a, const OMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("matrix dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        m = std::max(m, max_abs_diff(a.row(i), b.row(i)));
    return m;
}

double max_abs_diff_identity(const OMatrix& a) {
    require_square(a, "max_abs_diff_identity");
    return max_abs_diff(a, OMatrix::identity(a.rows()));
}

OVector apply(const OMatrix& t, const OVector& y) {
    if (y.size() != t.rows())
        throw DimensionError("apply: vector length does not match matrix rows");
    OVector r(t.cols());
    for (std::size_t j = 0; j < t.cols(); ++j) {
        Octonion acc;
        for (std::size_t i = 0; i < t.rows(); ++i) acc += y[i] * t(i, j);
        r[j] = acc;
    }
    return r;
}

OVector op_second_associator(const Octonion& p, const OVector& x, const OMatrix& t) {
    return apply(t, scalar_mul_left(p, x)) - scalar_mul_left(p, apply(t, x));
}

OVector op_second_associator_closed(const Octonion& p, const OVector& x, const OMatrix& t) {
    if (x.size() != t.rows())
        throw DimensionError("op_second_associator: vector length does not match matrix rows");
    OVector r(t.cols());
    for (std::size_t j = 0; j < t.cols(); ++j) {
        Octonion acc;
        for (std::size_t i = 0; i < t.rows(); ++i) acc += associator(p, x[i], t(i, j));
        r[j] = acc;
    }
    return r;
}

OMatrix dual(const OMatrix& t) {
    require_square(t, "dual");
    const std::size_t n = t.rows();
    std::vector<OVector> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        OVector r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = conj(t(j, i));
        rows.push_back(std::move(r));
    }
    return OMatrix(std::move(rows));
}

OMatrix matmul(const OMatrix& a, const OMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul: inner dimensions do not match");
    std::vector<OVector> rows;
    rows.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        OVector r(b.cols());
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Octonion acc;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            r[j] = acc;
        }
        rows.push_back(std::move(r));
    }
    return OMatrix(std::move(rows));
}

OVector bracket_fgx(const OMatrix& s, const OMatrix& t, const OVector& x) {
    if (s.rows() != t.cols())
        throw DimensionError("bracket_fgx: matrix dimensions do not match");
    OVector acc(s.cols());
    for (int i = 0; i < 8; ++i) {
        const OVector a = op_second_associator(Octonion::unit(i), x, t);
        const OVector fa = apply(s, a);
        OVector real_part(fa.size());
        for (std::size_t j = 0; j < fa.size(); ++j) real_part[j] = Octonion::real(re(fa[j]));
        acc += scalar_mul_left(Octonion::unit(i), real_part);
    }
    return -acc;
}

OMatrix regular_compose(const OMatrix& s, const OMatrix& t) {
    if (!s.is_square() || !t.is_square() || s.rows() != t.rows())
        throw DimensionError("regular_compose requires square matrices of equal size");
    const OMatrix k = matmul(t, s);
    // Both paths are para-linear, so agreement on the probes e_i eps^j
    // decides equality on all of O^n.
    const std::size_t n = t.rows();
    for (std::size_t j = 0; j < n; ++j) {
        for (int i = 0; i < 8; ++i) {
            const OVector x = scalar_mul_left(Octonion::unit(i), OVector::standard_basis(n, j));
            const OVector lhs = apply(s, apply(t, x)) + bracket_fgx(s, t, x);
            const OVector rhs = apply(k, x);
            if (max_abs_diff(lhs, rhs) > 1e-9 * std::max(1.0, max_abs_diff(rhs, OVector(n))))
                throw Error("regular_compose: definitional and matrix paths disagree");
        }
    }
    return k;
}

OperatorFn scalar_action_right(const OMatrix& t, const Octonion& p) {
    return [t, p](const OVector& x) {
        return scalar_mul_right(apply(t, x), p) - op_second_associator(p, x, t);
    };
}

OperatorFn scalar_action_left(const Octonion& p, const OMatrix& t) {
    return [t, p](const OVector& x) {
        return apply(t, scalar_mul_right(x, p)) + op_second_associator(p, x, t);
    };
}

OMatrix scalar_matrix_right(const OMatrix& t, const Octonion& p) {
    std::vector<OVector> rows;
    rows.reserve(t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) rows.push_back(scalar_mul_right(t.row(i), p));
    return OMatrix(std::move(rows));
}

OMatrix scalar_matrix_left(const Octonion& p, const OMatrix& t) {
    std::vector<OVector> rows;
    rows.reserve(t.rows());
    for (std::size_t i = 0; i < t.rows(); ++i) rows.push_back(scalar_mul_left(p, t.row(i)));
    return OMatrix(std::move(rows));
}

OVector moufang_right(const OMatrix& t, const Octonion& p, const OVector& x) {
    const Octonion pinv = inv(p);
    const OVector inner_val = apply(t, scalar_mul_left(pinv, x));
    return scalar_mul_right(scalar_mul_left(p, inner_val), p);
}

OVector moufang_left(const Octonion& p, const OMatrix& t, const OVector& x) {
    const Octonion pinv = inv(p);
    const OVector pxp = scalar_mul_right(scalar_mul_left(p, x), p);
    return scalar_mul_left(pinv, apply(t, pxp));
}

RealMatrix real_matrix(const OMatrix& t) {
    require_square(t, "real_matrix");
    const std::size_t n = t.rows();
    RealMatrix m(8 * n, 8 * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (int i = 0; i < 8; ++i) {
            const OVector image =
                apply(t, scalar_mul_left(Octonion::unit(i), OVector::standard_basis(n, j)));
            const std::vector<double> c = coords(image);
            const auto row = static_cast<Eigen::Index>(8 * j + static_cast<std::size_t>(i));
            for (std::size_t k = 0; k < c.size(); ++k)
                m(row, static_cast<Eigen::Index>(k)) = c[k];
        }
    }
    return m;
}

namespace {

Eigen::JacobiSVD<RealMatrix> svd_of(const OMatrix& t) {
    return Eigen::JacobiSVD<RealMatrix>(real_matrix(t), Eigen::ComputeFullU);
}

int svd_rank(const Eigen::JacobiSVD<RealMatrix>& svd, double tol_rank) {
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return 0;
    const double cutoff = tol_rank * sv(0);
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    return r;
}

} // namespace

int real_rank(const OMatrix& t, double tol_rank) {
    return svd_rank(svd_of(t), tol_rank);
}

std::vector<OVector> kernel(const OMatrix& t, double tol_rank) {
    // coords(y) M = 0 iff coords(y) lies in the span of the left singular
    // vectors whose singular values fall below the cutoff.
    const auto svd = svd_of(t);
    const int r = svd_rank(svd, tol_rank);
    const RealMatrix& u = svd.matrixU();
    std::vector<OVector> basis;
    for (Eigen::Index col = r; col < u.cols(); ++col) {
        std::vector<double> c(static_cast<std::size_t>(u.rows()));
        for (Eigen::Index i = 0; i < u.rows(); ++i) c[static_cast<std::size_t>(i)] = u(i, col);
        basis.push_back(vector_from_coords(c));
    }
    return basis;
}

RealCompositionCheck compose_real_check(const OMatrix& t, double tol) {
    require_square(t, "compose_real_check");
    const RealMatrix m = real_matrix(t);
    const RealMatrix mstar = real_matrix(dual(t));
    const auto n = m.rows();
    const RealMatrix id = RealMatrix::Identity(n, n);
    // coords((T* o T)(y)) = coords(y) M M*, so T* o T = Id iff M M* = I.
    const double r1 = (m * mstar - id).cwiseAbs().maxCoeff();
    const double r2 = (mstar * m - id).cwiseAbs().maxCoeff();
    return {r1 <= tol, r2 <= tol, r1, r2};
}

} // namespace octolin
