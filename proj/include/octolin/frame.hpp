#ifndef OCTOLIN_FRAME_HPP
#define OCTOLIN_FRAME_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "octolin/errors.hpp"
#include "octolin/ovector.hpp"

namespace octolin {

/// Default tolerance on Gram-matrix residuals.
inline constexpr double kTolGram = 1e-8;
/// Default tolerance on second-associator residuals.
inline constexpr double kTolAssoc = 1e-8;
/// Default relative singular-value threshold for rank decisions.
inline constexpr double kTolRank = 1e-8;

struct FrameTolerances {
    double gram = kTolGram;
    double assoc = kTolAssoc;
    double rank = kTolRank;
};

/// An ordered system of k vectors in O^n, uniform length.
class Frame {
public:
    explicit Frame(std::vector<OVector> vectors);

    std::size_t size() const { return vs_.size(); }        // k
    std::size_t dim() const { return vs_.front().size(); } // n
    const OVector& operator[](std::size_t i) const { return vs_[i]; }

    auto begin() const { return vs_.begin(); }
    auto end() const { return vs_.end(); }

    static Frame standard_basis(std::size_t n);

private:
    std::vector<OVector> vs_;
};

struct CheckResult {
    bool ok;
    double max_residual;
};

/// Gram matrix against delta_{ab}; residual is the largest octonion-norm
/// deviation over all ordered pairs.
CheckResult is_orthonormal(const Frame& f, double tol = kTolGram);

/// Orthonormal and A_{e_m}(x_a, x_b) = 0 for m = 1..7 and all pairs.
/// Vanishing on the imaginary basis is equivalent to vanishing for all p
/// (A_p is real-linear in p and A_1 = 0). Residual is the larger of the
/// Gram and associator residuals.
CheckResult is_weak_associative(const Frame& f, const FrameTolerances& tol = {});

/// Orthonormal with all entries real.
bool is_associative_frame(const Frame& f, const FrameTolerances& tol = {});

/// Largest |A_{e_m}(x_a, x_b)| over m = 1..7 and all ordered pairs.
double max_associator_residual(const Frame& f);

/// Largest imaginary coordinate magnitude over all entries.
double max_imaginary_residual(const Frame& f);

/// Rank of the 8k x 8n real matrix whose rows are coords(e_i x_a);
/// this spans the left O-module generated by the frame.
int real_span_rank(const Frame& f, double tol_rank = kTolRank);

struct FrameReport {
    bool orthonormal = false;
    bool associative = false;
    bool weak_associative = false;
    bool complete = false; // weak associative and O-span rank equals 8n
    double max_gram_residual = 0.0;
    double max_assoc_residual = 0.0;
};

FrameReport classify_frame(const Frame& f, const FrameTolerances& tol = {});

struct ParsevalResult {
    double coef_energy;             // sum of |<x, x_a>|^2
    double reconstruction_residual; // |x - sum <x, x_a> x_a|
};

ParsevalResult parseval_check(const Frame& f, const OVector& x);

enum class Side { Left, Right };

/// Entrywise p x_a (left) or x_a p (right) for a unit scalar p.
Frame frame_scalar_action(const Octonion& p, const Frame& f, Side side,
                          double tol = kTolEq);

/// | |x|^2 - (sum |<x,xi_i>|^2 + |x - sum <x,xi_i> xi_i|^2) | for a weak
/// associative set f; throws if f is not weak associative.
double bessel_residual(const Frame& f, const OVector& x,
                       const FrameTolerances& tol = {});

struct ParsevalWitness {
    OVector x;
    double energy_deviation;          // |coef_energy - |x|^2|
    double reconstruction_residual;
};

/// Scans x over e_i eps^j (i = 0..7 outer, j = 1..n inner) and returns the
/// first vector violating the Parseval identity at tol; nullopt if none.
std::optional<ParsevalWitness> parseval_witness(const Frame& f, double tol = kTolGram);

} // namespace octolin

#endif // OCTOLIN_FRAME_HPP
