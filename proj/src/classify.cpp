#include "octolin/classify.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "octolin/random.hpp"

namespace octolin {

namespace {

double coord_dot(const Octonion& a, const Octonion& b) {
    double s = 0.0;
    for (int k = 0; k < 8; ++k) s += a[k] * b[k];
    return s;
}

std::vector<OVector> basis_probes(std::size_t n) {
    std::vector<OVector> probes;
    probes.reserve(8 * n);
    for (std::size_t j = 0; j < n; ++j)
        for (int i = 0; i < 8; ++i)
            probes.push_back(scalar_mul_left(Octonion::unit(i), OVector::standard_basis(n, j)));
    return probes;
}

double paralinearity_residual(const OMatrix& t, const std::vector<OVector>& probes) {
    double worst = 0.0;
    for (int m = 1; m < 8; ++m) {
        const Octonion em = Octonion::unit(m);
        for (const auto& x : probes) {
            const OVector a = op_second_associator(em, x, t);
            for (const auto& entry : a) worst = std::max(worst, std::abs(re(entry)));
        }
    }
    return worst;
}

} // namespace

ClassificationReport classify_operator(const OMatrix& t, const ClassifyOptions& opts) {
    if (!t.is_square()) throw DimensionError("classify_operator requires a square matrix");
    const std::size_t n = t.rows();

    ClassificationReport rep;

    std::vector<OVector> probes = basis_probes(n);
    Rng rng(opts.seed);
    for (int i = 0; i < opts.probes; ++i) probes.push_back(rng.unit_ovector(n));

    rep.is_paralinear_residual = paralinearity_residual(t, probes);

    const OMatrix tstar = dual(t);
    rep.gram_TTstar_residual = max_abs_diff_identity(matmul(t, tstar));
    rep.gram_TstarT_residual = max_abs_diff_identity(matmul(tstar, t));

    rep.rows_weak_assoc = is_weak_associative(t.row_frame(), opts.frame).ok;
    rep.cols_weak_assoc = is_weak_associative(t.column_dagger_frame(), opts.frame).ok;

    const RealCompositionCheck rc = compose_real_check(t, opts.frame.gram);
    rep.real_composition_identity = rc.tstar_t_identity && rc.t_tstar_identity;

    double norm_residual = 0.0;
    for (const auto& x : probes) {
        const double nx = vnorm(x);
        if (nx == 0.0) continue;
        norm_residual = std::max(norm_residual, std::abs(vnorm(apply(t, x)) / nx - 1.0));
    }
    rep.norm_preserving = norm_residual <= opts.frame.gram;

    rep.is_isometry = rep.rows_weak_assoc;

    // Kernel and the restriction to its complement, through the real
    // realization.
    const RealMatrix m = real_matrix(t);
    Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? opts.frame.rank * sv(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    const auto dim = static_cast<int>(8 * n);
    rep.kernel_dim = dim - rank;

    const RealMatrix& u = svd.matrixU();
    const RealMatrix kernel_basis = u.rightCols(rep.kernel_dim); // coords as columns
    const RealMatrix compl_basis = u.leftCols(rank);

    // ker T is an O-submodule iff left multiplication by each e_m maps the
    // kernel into itself.
    rep.kernel_is_O_submodule = true;
    for (Eigen::Index col = 0; col < kernel_basis.cols() && rep.kernel_is_O_submodule; ++col) {
        std::vector<double> c(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) c[static_cast<std::size_t>(i)] = kernel_basis(i, col);
        const OVector v = vector_from_coords(c);
        for (int mIdx = 1; mIdx < 8; ++mIdx) {
            const std::vector<double> wv = coords(scalar_mul_left(Octonion::unit(mIdx), v));
            Eigen::VectorXd w(dim);
            for (int i = 0; i < dim; ++i) w(i) = wv[static_cast<std::size_t>(i)];
            const Eigen::VectorXd resid = w - kernel_basis * (kernel_basis.transpose() * w);
            if (resid.norm() > opts.frame.gram) {
                rep.kernel_is_O_submodule = false;
                break;
            }
        }
    }

    // Norm preservation on the complement: its orthonormal basis plus
    // seeded random combinations.
    bool restriction_isometric = true;
    if (rank > 0) {
        Rng comb_rng(opts.seed + 1);
        const auto check_coords = [&](const Eigen::VectorXd& c) {
            const double len = c.norm();
            if (len == 0.0) return;
            const Eigen::VectorXd image = (c.transpose() * m).transpose();
            if (std::abs(image.norm() / len - 1.0) > opts.frame.gram)
                restriction_isometric = false;
        };
        for (Eigen::Index col = 0; col < compl_basis.cols(); ++col)
            check_coords(compl_basis.col(col));
        for (int trial = 0; trial < opts.probes && restriction_isometric; ++trial) {
            Eigen::VectorXd coeff(rank);
            for (int i = 0; i < rank; ++i) coeff(i) = comb_rng.uniform(-1.0, 1.0);
            check_coords(compl_basis * coeff);
        }
    }
    rep.is_partial_isometry = rep.kernel_is_O_submodule && restriction_isometric;

    return rep;
}

std::optional<Frame> associative_complement_basis(const OMatrix& t, const ClassifyOptions& opts) {
    if (!t.is_square()) throw DimensionError("associative_complement_basis requires a square matrix");
    const std::size_t n = t.rows();
    const std::vector<OVector> ker = kernel(t, opts.frame.rank);

    // The complement is the coordinate submodule O^S exactly when every
    // kernel vector is supported off S and the kernel fills the remaining
    // slots completely: 8 * |S^c| real dimensions.
    std::vector<bool> slot_touched(n, false);
    for (const auto& v : ker)
        for (std::size_t jslot = 0; jslot < n; ++jslot)
            if (norm(v[jslot]) > opts.frame.gram) slot_touched[jslot] = true;
    std::size_t touched = 0;
    for (bool b : slot_touched) touched += b ? 1 : 0;
    if (ker.size() != 8 * touched) return std::nullopt;

    std::vector<OVector> basis;
    for (std::size_t jslot = 0; jslot < n; ++jslot)
        if (!slot_touched[jslot]) basis.push_back(OVector::standard_basis(n, jslot));
    if (basis.empty()) return std::nullopt;
    return Frame(std::move(basis));
}

OMatrix iso2_reconstruct(const Iso2Decomposition& d) {
    return scalar_matrix_left(d.p, d.u);
}

bool iso2_on_spine(const Iso2Decomposition& d, double tol) {
    return max_imaginary_residual(d.u.row_frame()) <= tol;
}

Iso2Decomposition iso2_decompose(const OMatrix& t, const ClassifyOptions& opts) {
    if (t.rows() != 2 || t.cols() != 2)
        throw DimensionError("iso2_decompose requires a 2x2 matrix");
    if (!classify_operator(t, opts).is_isometry)
        throw ClassificationError("iso2_decompose requires an isometry");

    const Octonion a = t(0, 0);
    Octonion p;
    if (norm(a) <= opts.eq) {
        // Antidiagonal isometry [[0, b], [c, 0]]: the leading entry gives no
        // phase, so take it from b instead; conj(b) b = 1 makes U's first
        // row (0, 1) and conj(b) c lands in a single C_J.
        const Octonion b = t(0, 1);
        p = b / norm(b);
    } else if (norm(im(a)) <= opts.eq) {
        p = Octonion::real(1.0);
    } else {
        p = a / norm(a);
    }
    const OMatrix u = scalar_matrix_left(conj(p), t);

    // J from the first entry with a nonreal part, scanning a, b, c, d.
    Octonion j = Octonion::unit(1);
    bool found = false;
    for (std::size_t r = 0; r < 2 && !found; ++r) {
        for (std::size_t c = 0; c < 2 && !found; ++c) {
            const Octonion imag = im(u(r, c));
            if (norm(imag) > opts.eq) {
                j = imag / norm(imag);
                found = true;
            }
        }
    }

    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            const Octonion imag = im(u(r, c));
            const Octonion off_page = imag - j * coord_dot(imag, j);
            if (norm(off_page) > opts.frame.gram)
                throw ClassificationError("iso2_decompose: entry outside C_J");
        }
    }
    if (max_abs_diff_identity(matmul(u, dual(u))) > opts.frame.gram)
        throw ClassificationError("iso2_decompose: U is not unitary over C_J");

    Iso2Decomposition d{p, j, u, 0.0};
    d.residual = max_abs_diff(iso2_reconstruct(d), t);
    return d;
}

Iso2Decomposition loop_mul(const Iso2Decomposition& a, const Iso2Decomposition& b,
                           const ClassifyOptions& opts) {
    const bool spine_a = iso2_on_spine(a, opts.eq);
    const bool spine_b = iso2_on_spine(b, opts.eq);
    if (!spine_a && !spine_b) {
        // C_J and C_{-J} are the same page.
        const double same = max_abs_diff(a.j, b.j);
        const double flipped = max_abs_diff(a.j, -b.j);
        if (std::min(same, flipped) > opts.frame.gram)
            throw ClassificationError("loop_mul: operands live on different pages");
    }
    const OMatrix product = scalar_matrix_left(a.p * b.p, matmul(a.u, b.u));
    return iso2_decompose(product, opts);
}

StiefelReport stiefel_OOy_dim(const OVector& y, const ClassifyOptions& opts) {
    if (std::abs(vnorm(y) - 1.0) > opts.eq)
        throw DomainError("stiefel_OOy_dim requires a unit vector");
    const std::size_t n = y.size();
    Eigen::MatrixXd m(64, static_cast<Eigen::Index>(8 * n));
    for (int i = 0; i < 8; ++i) {
        for (int jdx = 0; jdx < 8; ++jdx) {
            const OVector v =
                scalar_mul_left(Octonion::unit(i), scalar_mul_left(Octonion::unit(jdx), y));
            const std::vector<double> c = coords(v);
            for (std::size_t k = 0; k < c.size(); ++k)
                m(8 * i + jdx, static_cast<Eigen::Index>(k)) = c[k];
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 ? opts.frame.rank * sv(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return {y, rank, static_cast<int>(8 * n) - rank};
}

CheckResult is_stiefel_frame(const Frame& f, const ClassifyOptions& opts) {
    if (f.size() > f.dim())
        throw DimensionError("a weak associative orthonormal set in O^n has at most n elements");
    return is_weak_associative(f, opts.frame);
}

} // namespace octolin
