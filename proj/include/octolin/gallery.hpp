#ifndef OCTOLIN_GALLERY_HPP
#define OCTOLIN_GALLERY_HPP

#include <cmath>

#include "octolin/frame.hpp"
#include "octolin/omatrix.hpp"

namespace octolin::gallery {

inline Octonion e(int i) { return Octonion::unit(i); }

/// (1/sqrt 2) [[e1, e2], [e2, e1]]; an isometry of O^2.
inline OMatrix swap_isometry2() {
    const double s = 1.0 / std::sqrt(2.0);
    return OMatrix({OVector{e(1) * s, e(2) * s}, OVector{e(2) * s, e(1) * s}});
}

/// (1/sqrt 2) [[e1, e2], [e1, -e2]]; an isometry of O^2.
inline OMatrix reflection_isometry2() {
    const double s = 1.0 / std::sqrt(2.0);
    return OMatrix({OVector{e(1) * s, e(2) * s}, OVector{e(1) * s, e(2) * (-s)}});
}

/// (1/sqrt 6) [[sqrt2 e4, sqrt2 e1, sqrt2 e2], [0, sqrt3 e2, sqrt3 e1],
/// [-2 e4, e1, e2]]; an isometry of O^3.
inline OMatrix mixed_isometry3() {
    const double s = 1.0 / std::sqrt(6.0);
    const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
    return OMatrix({OVector{e(4) * (r2 * s), e(1) * (r2 * s), e(2) * (r2 * s)},
                    OVector{Octonion(), e(2) * (r3 * s), e(1) * (r3 * s)},
                    OVector{e(4) * (-2 * s), e(1) * s, e(2) * s}});
}

/// (1/sqrt 2) [[e7, e3], [e2, -e6]]: T T* = I but T* T != I; the rows are
/// orthonormal while the conjugate-transposed columns are not.
inline OMatrix one_sided_gram_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    return OMatrix({OVector{e(7) * s, e(3) * s}, OVector{e(2) * s, e(6) * (-s)}});
}

/// (1/sqrt 2) [[1, e1], [-e3, e2]]: both octonionic Gram products equal the
/// identity (the rows live in the quaternion subalgebra spanned by e1, e2),
/// yet the induced real map is singular -- (e4, e7) maps to zero -- so this
/// is not an isometry.
inline OMatrix quaternionic_gram_matrix() {
    const double s = 1.0 / std::sqrt(2.0);
    return OMatrix({OVector{Octonion::real(s), e(1) * s},
                    OVector{e(3) * (-s), e(2) * s}});
}

/// The 4-element orthonormal system of O^2,
/// (1/sqrt 2) {(e1,e2), (e4,e7), (e6,e5), (1,e3)}: orthonormal but not weak
/// associative; the Parseval identity fails on it.
inline Frame four_vector_orthonormal_o2() {
    const double s = 1.0 / std::sqrt(2.0);
    return Frame({OVector{e(1) * s, e(2) * s}, OVector{e(4) * s, e(7) * s},
                  OVector{e(6) * s, e(5) * s}, OVector{Octonion::real(s), e(3) * s}});
}

} // namespace octolin::gallery

#endif // OCTOLIN_GALLERY_HPP
