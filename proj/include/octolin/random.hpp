#ifndef OCTOLIN_RANDOM_HPP
#define OCTOLIN_RANDOM_HPP

#include <cstdint>
#include <random>

#include "octolin/frame.hpp"
#include "octolin/omatrix.hpp"
#include "octolin/octonion.hpp"
#include "octolin/ovector.hpp"

namespace octolin {

/// Seeded generator for test values. Distributions are derived from raw
/// mt19937_64 output so sequences do not depend on the standard library's
/// distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    double normal();

    Octonion octonion(double scale = 1.0);
    Octonion unit_octonion();
    Octonion unit_imaginary();

    OVector ovector(std::size_t n, double scale = 1.0);
    OVector unit_ovector(std::size_t n);
    OVector real_unit_ovector(std::size_t n);

    OMatrix omatrix(std::size_t k, std::size_t n, double scale = 1.0);
    OMatrix real_orthogonal(std::size_t n);
    /// Unitary matrix with entries in C_J = R + R J.
    OMatrix cj_unitary(std::size_t n, const Octonion& j);

    /// k rows of a random weak associative orthonormal basis of O^n:
    /// a random real orthogonal matrix scaled by a random unit octonion.
    Frame weak_associative_frame(std::size_t k, std::size_t n);

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace octolin

#endif // OCTOLIN_RANDOM_HPP
