#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octolin/gallery.hpp"
#include "octolin/omatrix.hpp"
#include "octolin/random.hpp"

using namespace octolin;

namespace {

const Octonion kOne = Octonion::real(1.0);
Octonion e(int i) { return Octonion::unit(i); }

// Row-reduction rank oracle, independent of the SVD used by the library.
int gauss_rank(Eigen::MatrixXd m, double tol) {
    const double scale = m.cwiseAbs().maxCoeff();
    if (scale == 0.0) return 0;
    int rank = 0;
    for (Eigen::Index col = 0; col < m.cols() && rank < m.rows(); ++col) {
        Eigen::Index pivot = rank;
        for (Eigen::Index r = rank + 1; r < m.rows(); ++r)
            if (std::abs(m(r, col)) > std::abs(m(pivot, col))) pivot = r;
        if (std::abs(m(pivot, col)) <= tol * scale) continue;
        m.row(pivot).swap(m.row(rank));
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            m.row(r) -= (m(r, col) / m(rank, col)) * m.row(rank);
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("apply fixed values") {
    Rng rng(3);
    const OVector y = rng.ovector(3);
    CHECK(max_abs_diff(apply(OMatrix::identity(3), y), y) == 0.0);

    CHECK(vnorm(apply(gallery::quaternionic_gram_matrix(), OVector{e(4), e(7)})) <= 1e-15);

    // Diagonal matrix acting on a real vector multiplies entrywise.
    const Octonion p = rng.octonion();
    OMatrix diag = OMatrix::zero(3, 3);
    for (std::size_t i = 0; i < 3; ++i) diag(i, i) = p;
    OVector xr(3);
    for (std::size_t i = 0; i < 3; ++i) xr[i] = Octonion::real(rng.uniform(-1, 1));
    const OVector image = apply(diag, xr);
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(max_abs_diff(image[i], xr[i] * p) <= 1e-15);
}

TEST_CASE("matrix shape errors") {
    CHECK_THROWS_AS(OMatrix({OVector(2), OVector(3)}), DimensionError);
    CHECK_THROWS_AS(apply(OMatrix::identity(2), OVector(3)), DimensionError);
    CHECK_THROWS_AS(dual(OMatrix::zero(2, 3)), DimensionError);
    CHECK_THROWS_AS(matmul(OMatrix::zero(2, 3), OMatrix::zero(2, 3)), DimensionError);
    CHECK_THROWS_AS(real_matrix(OMatrix::zero(2, 3)), DimensionError);
}

TEST_CASE("operator second associator") {
    Rng rng(5);
    const OMatrix t = rng.omatrix(3, 3);
    OVector xr(3);
    for (std::size_t i = 0; i < 3; ++i) xr[i] = Octonion::real(rng.uniform(-1, 1));
    CHECK(vnorm(op_second_associator(rng.octonion(), xr, t)) <= 1e-12);

    const OMatrix treal = rng.real_orthogonal(3);
    CHECK(vnorm(op_second_associator(rng.octonion(), rng.ovector(3), treal)) <= 1e-12);

    const OMatrix t2({OVector{e(2), Octonion()}, OVector{Octonion(), kOne}});
    const OVector expected{e(7) * 2.0, Octonion()};
    CHECK(max_abs_diff(op_second_associator(e(4), OVector{e(1), Octonion()}, t2), expected) <= 1e-15);
    CHECK(max_abs_diff(op_second_associator_closed(e(4), OVector{e(1), Octonion()}, t2),
                       expected) <= 1e-15);

    for (int trial = 0; trial < 100; ++trial) {
        const Octonion p = rng.octonion();
        const OVector x = rng.ovector(3);
        const OVector def = op_second_associator(p, x, t);
        CHECK(max_abs_diff(def, op_second_associator_closed(p, x, t)) <= 1e-10);
        for (const auto& entry : def) CHECK(std::abs(re(entry)) <= 1e-12);
    }
}

TEST_CASE("dual is the conjugate transpose") {
    Rng rng(7);
    const OMatrix q = rng.real_orthogonal(3);
    const OMatrix qd = dual(q);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(max_abs_diff(qd(i, j), q(j, i)) == 0.0);

    const double s = 1.0 / std::sqrt(2.0);
    const OMatrix expected({OVector{e(7) * (-s), e(2) * (-s)},
                            OVector{e(3) * (-s), e(6) * s}});
    CHECK(max_abs_diff(dual(gallery::one_sided_gram_matrix()), expected) <= 1e-15);

    const OMatrix t = rng.omatrix(3, 3);
    CHECK(max_abs_diff(dual(dual(t)), t) == 0.0);
}

TEST_CASE("octonionic gram products of the one-sided example") {
    const OMatrix t = gallery::one_sided_gram_matrix();
    CHECK(max_abs_diff(matmul(t, OMatrix::identity(2)), t) == 0.0);
    CHECK(max_abs_diff_identity(matmul(t, dual(t))) <= 1e-15);
    const OMatrix expected({OVector{kOne, -e(4)}, OVector{e(4), kOne}});
    CHECK(max_abs_diff(matmul(dual(t), t), expected) <= 1e-15);
}

TEST_CASE("regular composition") {
    Rng rng(11);
    const OMatrix s = rng.omatrix(3, 3);
    CHECK(max_abs_diff(regular_compose(s, OMatrix::identity(3)), s) <= 1e-15);

    const OMatrix ar = rng.real_orthogonal(3), br = rng.real_orthogonal(3);
    CHECK(max_abs_diff(regular_compose(ar, br), matmul(br, ar)) <= 1e-14);

    const OMatrix t = rng.omatrix(3, 3);
    const OMatrix k = regular_compose(s, t);
    for (int trial = 0; trial < 50; ++trial) {
        OVector xr(3);
        for (std::size_t i = 0; i < 3; ++i) xr[i] = Octonion::real(rng.uniform(-1, 1));
        // On real arguments the correction vanishes and the regular
        // composition is the plain composition.
        CHECK(vnorm(bracket_fgx(s, t, xr)) <= 1e-12);
        CHECK(max_abs_diff(apply(k, xr), apply(s, apply(t, xr))) <= 1e-10);

        const OVector x = rng.ovector(3);
        const OVector lhs = apply(s, apply(t, x)) + bracket_fgx(s, t, x);
        CHECK(max_abs_diff(lhs, apply(k, x)) <= 1e-9);
    }

    const OMatrix greal = rng.real_orthogonal(3);
    CHECK(vnorm(bracket_fgx(s, greal, rng.ovector(3))) <= 1e-12);
}

TEST_CASE("scalar actions and Moufang forms") {
    Rng rng(13);
    const OMatrix t = rng.omatrix(3, 3);
    const OVector x = rng.ovector(3);

    CHECK(max_abs_diff(scalar_action_right(t, kOne)(x), apply(t, x)) <= 1e-13);
    CHECK(max_abs_diff(scalar_action_left(kOne, t)(x), apply(t, x)) <= 1e-13);

    OVector xr(3);
    for (std::size_t i = 0; i < 3; ++i) xr[i] = Octonion::real(rng.uniform(-1, 1));
    const Octonion p = rng.octonion();
    CHECK(max_abs_diff(scalar_action_right(t, p)(xr),
                       scalar_mul_right(apply(t, xr), p)) <= 1e-12);

    for (int trial = 0; trial < 100; ++trial) {
        const Octonion up = rng.unit_octonion();
        const OVector z = rng.ovector(3);
        CHECK(max_abs_diff(scalar_action_right(t, up)(z), moufang_right(t, up, z)) <= 1e-9);
        CHECK(max_abs_diff(scalar_action_left(up, t)(z), moufang_left(up, t, z)) <= 1e-9);
        // The action matrices represent the action operators everywhere.
        CHECK(max_abs_diff(apply(scalar_matrix_right(t, up), z),
                           scalar_action_right(t, up)(z)) <= 1e-10);
        CHECK(max_abs_diff(apply(scalar_matrix_left(up, t), z),
                           scalar_action_left(up, t)(z)) <= 1e-10);
    }

    CHECK_THROWS_AS(moufang_right(t, Octonion(), x), DomainError);
}

TEST_CASE("real matrix realization") {
    const RealMatrix id = real_matrix(OMatrix::identity(2));
    CHECK((id - RealMatrix::Identity(16, 16)).cwiseAbs().maxCoeff() == 0.0);

    // Diagonal (e1, e1): block-diagonal right-multiplication-by-e1 blocks.
    OMatrix diag = OMatrix::zero(2, 2);
    diag(0, 0) = e(1);
    diag(1, 1) = e(1);
    const RealMatrix m = real_matrix(diag);
    CHECK(m.block(0, 8, 8, 8).cwiseAbs().maxCoeff() == 0.0);
    CHECK(m.block(8, 0, 8, 8).cwiseAbs().maxCoeff() == 0.0);
    CHECK((m.block(0, 0, 8, 8) - m.block(8, 8, 8, 8)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(m(0, 1) == 1.0); // 1 * e1 = e1

    Rng rng(17);
    const OMatrix t = rng.omatrix(3, 3);
    const RealMatrix rm = real_matrix(t);
    for (int trial = 0; trial < 20; ++trial) {
        const OVector y = rng.ovector(3);
        const std::vector<double> cy = coords(y);
        Eigen::RowVectorXd v(24);
        for (int i = 0; i < 24; ++i) v(i) = cy[static_cast<std::size_t>(i)];
        const Eigen::RowVectorXd img = v * rm;
        const std::vector<double> ca = coords(apply(t, y));
        for (int i = 0; i < 24; ++i)
            CHECK(std::abs(ca[static_cast<std::size_t>(i)] - img(i)) <= 1e-10);
    }
}

TEST_CASE("kernel and rank") {
    Rng rng(19);
    const OMatrix iso = scalar_matrix_left(rng.unit_octonion(), rng.real_orthogonal(2));
    CHECK(kernel(iso).empty());
    CHECK(real_rank(iso) == 16);

    CHECK(real_rank(OMatrix::zero(2, 2)) == 0);
    CHECK(kernel(OMatrix::zero(2, 2)).size() == 16);

    const OMatrix t = gallery::quaternionic_gram_matrix();
    const std::vector<OVector> ker = kernel(t);
    CHECK(ker.size() >= 1);
    CHECK(real_rank(t) + static_cast<int>(ker.size()) == 16);

    // (e4, e7) lies in the kernel: check it projects onto the basis fully.
    const OVector witness{e(4), e(7)};
    const std::vector<double> wc = coords(witness);
    double proj_sq = 0.0;
    for (const auto& k : ker) {
        double dot = 0.0;
        const std::vector<double> kc = coords(k);
        for (std::size_t i = 0; i < wc.size(); ++i) dot += wc[i] * kc[i];
        proj_sq += dot * dot;
    }
    CHECK(std::sqrt(proj_sq) == doctest::Approx(vnorm(witness)).epsilon(1e-9));

    // Independent elimination oracle agrees with the SVD rank.
    CHECK(gauss_rank(real_matrix(t), 1e-10) == real_rank(t));
    CHECK(gauss_rank(real_matrix(iso), 1e-10) == 16);
}

TEST_CASE("real composition check") {
    const RealCompositionCheck ok = compose_real_check(OMatrix::identity(3));
    CHECK(ok.tstar_t_identity);
    CHECK(ok.t_tstar_identity);

    const RealCompositionCheck iso3 = compose_real_check(gallery::mixed_isometry3());
    CHECK(iso3.tstar_t_identity);
    CHECK(iso3.t_tstar_identity);

    const RealCompositionCheck bad = compose_real_check(gallery::quaternionic_gram_matrix());
    CHECK_FALSE(bad.tstar_t_identity);
    CHECK_FALSE(bad.t_tstar_identity);
}

TEST_CASE("dual operator identities") {
    Rng rng(23);
    const OMatrix t = rng.omatrix(3, 3);
    const OMatrix tstar = dual(t);
    // The real matrix of the dual is the transpose of the real matrix.
    CHECK((real_matrix(tstar) - real_matrix(t).transpose()).cwiseAbs().maxCoeff() <= 1e-12);

    for (int trial = 0; trial < 100; ++trial) {
        const OVector x = rng.ovector(3), y = rng.ovector(3);
        CHECK(std::abs(inner_real(apply(t, x), y) - inner_real(x, apply(tstar, y))) <= 1e-10);

        Octonion correction;
        for (int i = 1; i < 8; ++i) {
            const Octonion ei = Octonion::unit(i);
            correction += ei * inner_real(op_second_associator(ei, x, t), y);
        }
        CHECK(max_abs_diff(inner(x, apply(tstar, y)),
                           inner(apply(t, x), y) - correction) <= 1e-10);

        OVector xr(3);
        for (std::size_t i = 0; i < 3; ++i) xr[i] = Octonion::real(rng.uniform(-1, 1));
        CHECK(max_abs_diff(inner(xr, apply(tstar, y)), inner(apply(t, xr), y)) <= 1e-10);
        CHECK(max_abs_diff(inner(x, apply(tstar, xr)), inner(apply(t, x), xr)) <= 1e-10);
    }
}

TEST_CASE("paralinearity of matrix operators") {
    Rng rng(29);
    const OMatrix t = rng.omatrix(3, 3);
    for (int m = 1; m < 8; ++m) {
        for (int trial = 0; trial < 20; ++trial) {
            const OVector a = op_second_associator(e(m), rng.ovector(3), t);
            for (const auto& entry : a) CHECK(std::abs(re(entry)) <= 1e-12);
        }
    }
}
