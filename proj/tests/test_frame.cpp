#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "octolin/frame.hpp"
#include "octolin/gallery.hpp"
#include "octolin/random.hpp"

using namespace octolin;

namespace {
const Octonion kOne = Octonion::real(1.0);
Octonion e(int i) { return Octonion::unit(i); }
} // namespace

TEST_CASE("standard basis classification") {
    const FrameReport r = classify_frame(Frame::standard_basis(2));
    CHECK(r.orthonormal);
    CHECK(r.associative);
    CHECK(r.weak_associative);
    CHECK(r.complete);
    CHECK(r.max_gram_residual <= 1e-15);
    CHECK(r.max_assoc_residual <= 1e-15);
}

TEST_CASE("frame requires uniform vector length") {
    CHECK_THROWS_AS(Frame({OVector(2), OVector(3)}), DimensionError);
}

TEST_CASE("the cardinality-4 orthonormal system of O^2") {
    const Frame f = gallery::four_vector_orthonormal_o2();
    CHECK(is_orthonormal(f).ok);
    CHECK_FALSE(is_weak_associative(f).ok);
    CHECK_FALSE(is_associative_frame(f));

    // Locate a concrete witness by exhaustive scan over m and pairs.
    bool found = false;
    for (int m = 1; m < 8 && !found; ++m)
        for (std::size_t a = 0; a < f.size() && !found; ++a)
            for (std::size_t b = 0; b < f.size() && !found; ++b)
                if (norm(second_associator(e(m), f[a], f[b])) > 0.5) found = true;
    CHECK(found);
}

TEST_CASE("duplicated vector is not orthonormal") {
    const Frame f({OVector{kOne, Octonion()}, OVector{kOne, Octonion()}});
    CHECK_FALSE(is_orthonormal(f).ok);
}

TEST_CASE("the 3x3 mixed isometry rows are weak associative") {
    const Frame f = gallery::mixed_isometry3().row_frame();
    const CheckResult r = is_weak_associative(f);
    CHECK(r.ok);
    CHECK(r.max_residual <= 1e-12);
    CHECK_FALSE(is_associative_frame(f));
    CHECK(classify_frame(f).complete);
}

TEST_CASE("a frame with an imaginary entry is not associative") {
    const Frame f({OVector{e(1), Octonion()}, OVector{Octonion(), kOne}});
    CHECK(is_orthonormal(f).ok);
    CHECK_FALSE(is_associative_frame(f));
}

TEST_CASE("parseval on a weak associative basis") {
    const Frame basis = Frame::standard_basis(4);
    Rng rng(31);
    for (int t = 0; t < 50; ++t) {
        const OVector x = rng.ovector(4);
        const ParsevalResult r = parseval_check(basis, x);
        CHECK(std::abs(r.coef_energy - vnorm_sq(x)) <= 1e-9);
        CHECK(r.reconstruction_residual <= 1e-9);
    }

    // A frame member reproduces itself with unit coefficient energy.
    const Frame wa = rng.weak_associative_frame(3, 3);
    const ParsevalResult r = parseval_check(wa, wa[0]);
    CHECK(r.coef_energy == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.reconstruction_residual <= 1e-9);
}

TEST_CASE("parseval witness for the 4-element system") {
    const Frame f = gallery::four_vector_orthonormal_o2();
    const auto w = parseval_witness(f);
    REQUIRE(w.has_value());
    // The scan finds the failure already at x = (1, 0), with coefficient
    // energy 2 instead of 1.
    CHECK(max_abs_diff(w->x, OVector::standard_basis(2, 0)) == 0.0);
    CHECK(w->energy_deviation == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_FALSE(parseval_witness(Frame::standard_basis(2)).has_value());
}

TEST_CASE("unit scalar action") {
    const Frame basis = Frame::standard_basis(2);
    const Frame same = frame_scalar_action(kOne, basis, Side::Left);
    CHECK(max_abs_diff(same[0], basis[0]) == 0.0);
    CHECK(max_abs_diff(same[1], basis[1]) == 0.0);

    const Frame acted = frame_scalar_action(e(1), basis, Side::Left);
    CHECK(max_abs_diff(acted[0], OVector{e(1), Octonion()}) == 0.0);
    CHECK(max_abs_diff(acted[1], OVector{Octonion(), e(1)}) == 0.0);
    CHECK(is_weak_associative(acted).ok);

    CHECK_THROWS_AS(frame_scalar_action(e(1) * 2.0, basis, Side::Left), DomainError);

    Rng rng(37);
    for (int t = 0; t < 50; ++t) {
        const Frame f = rng.weak_associative_frame(2, 2);
        const Octonion p = rng.unit_octonion();
        CHECK(is_weak_associative(frame_scalar_action(p, f, Side::Left)).ok);
        CHECK(is_weak_associative(frame_scalar_action(p, f, Side::Right)).ok);
    }
}

TEST_CASE("bessel identity") {
    const Frame basis = Frame::standard_basis(3);
    Rng rng(41);
    CHECK(bessel_residual(basis, rng.ovector(3)) <= 1e-9);

    // A single-vector set: the tail carries all of an orthogonal vector.
    const Frame single({OVector{kOne, Octonion()}});
    const OVector x{Octonion(), kOne};
    CHECK(bessel_residual(single, x) <= 1e-12);
    const ParsevalResult p = parseval_check(single, x);
    CHECK(p.coef_energy <= 1e-12);
    CHECK(p.reconstruction_residual == doctest::Approx(1.0));

    for (int t = 0; t < 30; ++t) {
        const Frame f = rng.weak_associative_frame(2, 3);
        CHECK(bessel_residual(f, rng.ovector(3)) <= 1e-9);
    }

    CHECK_THROWS_AS(bessel_residual(gallery::four_vector_orthonormal_o2(), OVector(2)),
                    ClassificationError);
}

TEST_CASE("completeness tracks cardinality for weak associative systems") {
    Rng rng(43);
    for (int t = 0; t < 10; ++t) {
        CHECK(classify_frame(rng.weak_associative_frame(3, 3)).complete);
        CHECK_FALSE(classify_frame(rng.weak_associative_frame(2, 3)).complete);
    }
    CHECK(real_span_rank(Frame::standard_basis(2)) == 16);
    CHECK(real_span_rank(Frame({OVector::standard_basis(2, 0)})) == 8);
}

TEST_CASE("gram hermiticity") {
    Rng rng(47);
    for (int t = 0; t < 20; ++t) {
        std::vector<OVector> vs;
        for (int i = 0; i < 3; ++i) vs.push_back(rng.ovector(3));
        const Frame f(vs);
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = 0; b < f.size(); ++b)
                CHECK(max_abs_diff(inner(f[a], f[b]), conj(inner(f[b], f[a]))) <= 1e-12);
    }
}
