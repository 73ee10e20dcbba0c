#ifndef OCTOLIN_OMATRIX_HPP
#define OCTOLIN_OMATRIX_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <vector>

#include "octolin/errors.hpp"
#include "octolin/frame.hpp"
#include "octolin/ovector.hpp"

namespace octolin {

/// Dense 8n x 8n matrix of the induced real-linear map, acting on row
/// coordinate vectors from the right: coords(T(y)) = coords(y) * M.
using RealMatrix = Eigen::MatrixXd;

/// A k x n octonionic matrix stored by rows; represents the left
/// para-linear operator y |-> y T (row-vector action) when square.
class OMatrix {
public:
    explicit OMatrix(std::vector<OVector> rows);

    static OMatrix identity(std::size_t n);
    static OMatrix zero(std::size_t k, std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return rows_.front().size(); }
    bool is_square() const { return rows() == cols(); }

    const OVector& row(std::size_t i) const { return rows_[i]; }
    const Octonion& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    Octonion& operator()(std::size_t i, std::size_t j) { return rows_[i][j]; }

    Frame row_frame() const;
    /// Conjugate-transposed columns as a frame (square matrices).
    Frame column_dagger_frame() const;

private:
    std::vector<OVector> rows_;
};

double max_abs_diff(const OMatrix& a, const OMatrix& b);
/// Largest entry deviation from the identity matrix.
double max_abs_diff_identity(const OMatrix& a);

/// Row-vector action (y T)_j = sum_i y_i t_{ij}.
OVector apply(const OMatrix& t, const OVector& y);

/// A_p(x, f_T) = T(px) - p T(x).
OVector op_second_associator(const Octonion& p, const OVector& x, const OMatrix& t);

/// Closed form (sum_i [p, x_i, t_{i1}], ..., sum_i [p, x_i, t_{in}]);
/// agrees with op_second_associator.
OVector op_second_associator_closed(const Octonion& p, const OVector& x, const OMatrix& t);

/// Conjugate transpose; the matrix of the real dual operator T*.
OMatrix dual(const OMatrix& t);

/// Octonionic matrix product sum_k a_{ik} b_{kj}.
OMatrix matmul(const OMatrix& a, const OMatrix& b);

/// Correction term [f,g,x] = -sum_i e_i Re( f(A_{e_i}(x, g)) ) with f, g
/// the operators of the matrices s and t.
OVector bracket_fgx(const OMatrix& s, const OMatrix& t, const OVector& x);

/// Matrix of the regular composition f_S (*) f_T, which is matmul(t, s).
/// Validates the definitional form f_S(f_T(x)) + [f_S, f_T, x] against the
/// product matrix on all basis vectors e_i eps^j.
OMatrix regular_compose(const OMatrix& s, const OMatrix& t);

using OperatorFn = std::function<OVector(const OVector&)>;

/// (T . p)(x) = T(x) p - A_p(x, T).
OperatorFn scalar_action_right(const OMatrix& t, const Octonion& p);
/// (p . T)(x) = T(x p) + A_p(x, T).
OperatorFn scalar_action_left(const Octonion& p, const OMatrix& t);

/// Matrices of the scalar actions: entrywise t_{ij} p resp. p t_{ij}
/// (the actions agree with these matrices on all of O^n).
OMatrix scalar_matrix_right(const OMatrix& t, const Octonion& p);
OMatrix scalar_matrix_left(const Octonion& p, const OMatrix& t);

/// Moufang forms p T(p^{-1} x) p and p^{-1} T(p x p); for unit p these
/// equal the corresponding scalar actions. Requires |p| > kTolEq.
OVector moufang_right(const OMatrix& t, const Octonion& p, const OVector& x);
OVector moufang_left(const Octonion& p, const OMatrix& t, const OVector& x);

/// The 8n x 8n real matrix of the induced real-linear map (square t).
RealMatrix real_matrix(const OMatrix& t);

/// Rank of real_matrix(t) with relative singular-value threshold
/// tol_rank * sigma_max.
int real_rank(const OMatrix& t, double tol_rank = kTolRank);

/// Orthonormal real basis of { y : T(y) = 0 }, as vectors in O^n.
std::vector<OVector> kernel(const OMatrix& t, double tol_rank = kTolRank);

struct RealCompositionCheck {
    bool tstar_t_identity; // T* o T = Id as real maps
    bool t_tstar_identity; // T o T* = Id as real maps
    double tstar_t_residual;
    double t_tstar_residual;
};

/// Checks the ordinary compositions of the induced real maps against the
/// identity. Distinct from the octonionic products T T* and T* T.
RealCompositionCheck compose_real_check(const OMatrix& t, double tol = kTolGram);

} // namespace octolin

#endif // OCTOLIN_OMATRIX_HPP
