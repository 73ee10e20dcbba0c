#ifndef OCTOLIN_CLASSIFY_HPP
#define OCTOLIN_CLASSIFY_HPP

#include <cstdint>
#include <optional>

#include "octolin/frame.hpp"
#include "octolin/omatrix.hpp"

namespace octolin {

struct ClassifyOptions {
    FrameTolerances frame{};
    double eq = kTolEq;
    std::uint64_t seed = 42;
    int probes = 32;
};

struct ClassificationReport {
    double is_paralinear_residual = 0.0;
    double gram_TTstar_residual = 0.0;
    double gram_TstarT_residual = 0.0;
    bool rows_weak_assoc = false;
    bool cols_weak_assoc = false;
    bool real_composition_identity = false; // T* o T = T o T* = Id as real maps
    bool norm_preserving = false;           // on basis vectors and seeded probes
    bool is_isometry = false;
    int kernel_dim = 0;
    bool kernel_is_O_submodule = false;
    bool is_partial_isometry = false;
};

/// Full verdict for a square matrix operator. is_isometry is decided by the
/// row frame being a weak associative orthonormal basis; the octonionic Gram
/// products, the real-composition identity, norm preservation on probes and
/// the conjugate-transposed column frame are computed alongside as
/// cross-checks (they agree for exact inputs).
ClassificationReport classify_operator(const OMatrix& t, const ClassifyOptions& opts = {});

inline ClassificationReport classify_isometry(const OMatrix& t, const ClassifyOptions& opts = {}) {
    return classify_operator(t, opts);
}

inline ClassificationReport classify_partial_isometry(const OMatrix& t,
                                                      const ClassifyOptions& opts = {}) {
    return classify_operator(t, opts);
}

/// Associative orthonormal basis of (ker T)^perp when the complement is a
/// coordinate submodule O^S (detected from the kernel projector); nullopt
/// when no all-real basis of that shape exists.
std::optional<Frame> associative_complement_basis(const OMatrix& t,
                                                  const ClassifyOptions& opts = {});

/// Class representative of an element of Iso_O(2) as p * U with p a unit
/// octonion and U unitary over C_J = R + R J.
struct Iso2Decomposition {
    Octonion p;
    Octonion j;
    OMatrix u;
    double residual; // reconstruction deviation |p U - T|_max
};

/// Decomposes a 2x2 isometry. Throws ClassificationError when the input is
/// not an isometry or when an entry falls outside C_J (which cannot happen
/// for exact isometries).
Iso2Decomposition iso2_decompose(const OMatrix& t, const ClassifyOptions& opts = {});

/// The matrix p * U of a decomposition.
OMatrix iso2_reconstruct(const Iso2Decomposition& d);

/// True when all entries of U are real (the O(2) spine, which lies in
/// every page of the book).
bool iso2_on_spine(const Iso2Decomposition& d, double tol = kTolEq);

/// Loop product [p,T][q,S] = [pq, TS], renormalized through
/// iso2_decompose. Requires the operands to live on a common page: equal
/// J up to sign, or a spine operand.
Iso2Decomposition loop_mul(const Iso2Decomposition& a, const Iso2Decomposition& b,
                           const ClassifyOptions& opts = {});

struct StiefelReport {
    OVector y;
    int dim_OOy;   // real dimension of span{ p (r y) : p, r in O }
    int fiber_dim; // 8n - dim_OOy
};

/// Rank of the 64 x 8n matrix with rows coords(e_i (e_j y)) for a unit y.
StiefelReport stiefel_OOy_dim(const OVector& y, const ClassifyOptions& opts = {});

/// Whether k <= n vectors form a point of the Stiefel space V_k^w(O^n);
/// k > n is rejected (weak associative sets cannot exceed n elements).
CheckResult is_stiefel_frame(const Frame& f, const ClassifyOptions& opts = {});

} // namespace octolin

#endif // OCTOLIN_CLASSIFY_HPP
