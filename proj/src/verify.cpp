#include "octolin/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "octolin/classify.hpp"
#include "octolin/frame.hpp"
#include "octolin/gallery.hpp"
#include "octolin/omatrix.hpp"
#include "octolin/octonion.hpp"
#include "octolin/ovector.hpp"
#include "octolin/random.hpp"

namespace octolin {

namespace {

constexpr double kInfo = std::numeric_limits<double>::infinity();

struct Suite {
    std::vector<PropertyResult> results;

    void add(std::string name, double residual, double tol) {
        results.push_back({std::move(name), residual, tol, residual <= tol});
    }
    void add_flag(std::string name, bool ok) { add(std::move(name), ok ? 0.0 : 1.0, 0.0); }
    void add_info(std::string name, double residual) {
        results.push_back({std::move(name), residual, kInfo, true});
    }
};

// Brute-force regeneration of the basis product table from the seven
// triples; independent of the table used by the arithmetic.
int table_regeneration_mismatches() {
    int sign[8][8] = {};
    int index[8][8] = {};
    for (int j = 0; j < 8; ++j) {
        sign[0][j] = 1;
        index[0][j] = j;
        sign[j][0] = 1;
        index[j][0] = j;
    }
    for (int i = 1; i < 8; ++i) {
        sign[i][i] = -1;
        index[i][i] = 0;
    }
    const int triples[7][3] = {{1, 2, 3}, {1, 4, 5}, {1, 7, 6}, {2, 4, 6},
                               {2, 5, 7}, {3, 4, 7}, {3, 6, 5}};
    // epsilon is completely antisymmetric with value 1 on the listed
    // triples: enumerate all six permutations explicitly.
    for (const auto& t : triples) {
        const int a = t[0], b = t[1], c = t[2];
        const int perms[6][4] = {{a, b, c, 1},  {b, c, a, 1},  {c, a, b, 1},
                                 {b, a, c, -1}, {a, c, b, -1}, {c, b, a, -1}};
        for (const auto& p : perms) {
            sign[p[0]][p[1]] = p[3];
            index[p[0]][p[1]] = p[2];
        }
    }
    int mismatches = 0;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const BasisProduct bp = basis_mul(i, j);
            if (bp.sign != sign[i][j] || bp.index != index[i][j]) ++mismatches;
        }
    }
    return mismatches;
}

void octonion_suite(Suite& s, Rng& rng, int trials) {
    s.add_flag("octonion/table-regeneration", table_regeneration_mismatches() == 0);

    double trace_resid = 0.0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 8; ++k) {
                const Octonion ei = Octonion::unit(i), ej = Octonion::unit(j),
                               ek = Octonion::unit(k);
                trace_resid =
                    std::max(trace_resid, std::abs(re(ei * (ej * ek)) - re((ei * ej) * ek)));
            }
    s.add("octonion/trace-associativity", trace_resid, 0.0);

    double norm_law = 0.0, alt = 0.0, repart = 0.0;
    const auto probe = [&](const Octonion& p, const Octonion& q) {
        norm_law = std::max(norm_law, std::abs(norm(p * q) - norm(p) * norm(q)));
        alt = std::max(alt, norm(associator(p, p, q)));
        alt = std::max(alt, norm(associator(p, q, q)));
        alt = std::max(alt, norm(associator(p, q, p)));
        repart = std::max(repart, max_abs_diff(real_part_formula(p), Octonion::real(re(p))));
    };
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) probe(Octonion::unit(i), Octonion::unit(j));
    probe(Octonion(2, 0, 1, 0, 0, 0, 0, -1), Octonion(0, 1, 0, 0, 3, 0, 0, 0));
    for (int t = 0; t < trials; ++t) probe(rng.octonion(), rng.octonion());
    s.add("octonion/composition-norm-law", norm_law, 1e-10);
    s.add("octonion/associator-alternating", alt, 1e-12);
    s.add("octonion/real-part-formula", repart, 1e-12);
}

void ovector_suite(Suite& s, Rng& rng, int trials) {
    double herm = 0.0, antisym = 0.0, expand1 = 0.0, expand2 = 0.0;
    double imA = 0.0, leftalt = 0.0, from_real = 0.0, polar = 0.0, decomp = 0.0;
    const std::size_t n = 3;

    const auto probe = [&](const Octonion& p, const Octonion& q, const OVector& u,
                           const OVector& v) {
        herm = std::max(herm, max_abs_diff(inner(u, v), conj(inner(v, u))));
        antisym = std::max(antisym, max_abs_diff(second_associator(p, u, v),
                                                 -second_associator(p, v, u)));
        expand1 = std::max(expand1,
                           max_abs_diff(inner(u, scalar_mul_left(p, v)),
                                        inner(u, v) * conj(p) + second_associator(p, u, v)));
        const Octonion lhs = inner(scalar_mul_left(p, u), scalar_mul_left(q, v));
        const Octonion rhs = (p * inner(u, v)) * conj(q) + second_associator(p * q, u, v) +
                             inner(entrywise_associator(p, q, v), u);
        expand2 = std::max(expand2, max_abs_diff(lhs, rhs));
        imA = std::max(imA, std::abs(re(second_associator(p, u, v))));
        leftalt = std::max(leftalt, max_abs_diff(entrywise_associator(p, q, u),
                                                 -entrywise_associator(q, p, u)));
        from_real = std::max(from_real, max_abs_diff(inner_from_real(u, v), inner(u, v)));
        polar = std::max(polar, max_abs_diff(polarization_inner(u, v), inner(u, v)));
        decomp = std::max(decomp, max_abs_diff(recompose_real(decompose_real(u)), u));
    };

    const Octonion one = Octonion::real(1.0);
    probe(Octonion::unit(4), Octonion::unit(2),
          OVector{one, Octonion::unit(1), Octonion::unit(2)},
          OVector{-Octonion::unit(3), Octonion::unit(2), one});
    for (int t = 0; t < trials; ++t)
        probe(rng.octonion(), rng.octonion(), rng.ovector(n), rng.ovector(n));

    s.add("ovector/inner-hermitian", herm, 1e-12);
    s.add("ovector/second-associator-antisymmetry", antisym, 1e-10);
    s.add("ovector/inner-left-scalar-expansion", expand1, 1e-10);
    s.add("ovector/inner-two-scalar-expansion", expand2, 1e-10);
    s.add("ovector/second-associator-imaginary-part", imA, 1e-12);
    s.add("ovector/left-alternative", leftalt, 1e-12);
    s.add("ovector/inner-from-real-agreement", from_real, 1e-10);
    s.add("ovector/polarization-agreement", polar, 1e-10);
    s.add("ovector/real-decomposition-roundtrip", decomp, 1e-12);
}

void frame_suite(Suite& s, Rng& rng, int trials) {
    const int reps = trials <= 0 ? 0 : std::max(trials / 10, 1);

    double gram_herm = 0.0;
    const auto gram_probe = [&](const Frame& f) {
        for (std::size_t a = 0; a < f.size(); ++a)
            for (std::size_t b = 0; b < f.size(); ++b)
                gram_herm = std::max(gram_herm, max_abs_diff(inner(f[a], f[b]),
                                                             conj(inner(f[b], f[a]))));
    };
    gram_probe(gallery::four_vector_orthonormal_o2());
    gram_probe(gallery::mixed_isometry3().row_frame());
    for (int t = 0; t < reps; ++t) {
        std::vector<OVector> vs;
        for (int i = 0; i < 3; ++i) vs.push_back(rng.ovector(3));
        gram_probe(Frame(vs));
    }
    s.add("frame/gram-hermitian", gram_herm, 1e-12);

    bool assoc_implies_weak = is_weak_associative(Frame::standard_basis(3)).ok;
    for (int t = 0; t < reps; ++t) {
        const Frame f = rng.real_orthogonal(3).row_frame();
        if (is_associative_frame(f))
            assoc_implies_weak = assoc_implies_weak && is_weak_associative(f).ok;
    }
    s.add_flag("frame/associative-implies-weak-associative", assoc_implies_weak);

    bool cardinality_ok = classify_frame(Frame::standard_basis(3)).complete &&
                          !classify_frame(Frame({OVector::standard_basis(3, 0)})).complete;
    for (int t = 0; t < reps; ++t) {
        cardinality_ok = cardinality_ok && classify_frame(rng.weak_associative_frame(3, 3)).complete &&
                         !classify_frame(rng.weak_associative_frame(2, 3)).complete;
    }
    s.add_flag("frame/weak-assoc-basis-cardinality", cardinality_ok);

    double action_resid =
        is_weak_associative(frame_scalar_action(Octonion::unit(1), Frame::standard_basis(2),
                                                Side::Left))
            .max_residual;
    for (int t = 0; t < reps; ++t) {
        const Frame f = rng.weak_associative_frame(3, 3);
        const Octonion p = rng.unit_octonion();
        action_resid = std::max(
            action_resid, is_weak_associative(frame_scalar_action(p, f, Side::Left)).max_residual);
        action_resid = std::max(
            action_resid, is_weak_associative(frame_scalar_action(p, f, Side::Right)).max_residual);
    }
    s.add("frame/unit-scalar-action-preserves-weak-assoc", action_resid, 1e-9);

    double parseval_resid = 0.0;
    const Frame std4 = Frame::standard_basis(4);
    const auto parseval_probe = [&](const OVector& x) {
        const ParsevalResult r = parseval_check(std4, x);
        parseval_resid = std::max(parseval_resid, std::abs(r.coef_energy - vnorm_sq(x)));
        parseval_resid = std::max(parseval_resid, r.reconstruction_residual);
    };
    parseval_probe(OVector{Octonion::unit(1), Octonion::unit(2), Octonion::real(1.0),
                           Octonion::unit(7)});
    for (int t = 0; t < reps; ++t) parseval_probe(rng.ovector(4));
    s.add("frame/parseval-weak-assoc-basis", parseval_resid, 1e-9);

    const Frame four = gallery::four_vector_orthonormal_o2();
    const bool four_ok = is_orthonormal(four).ok && !is_weak_associative(four).ok &&
                         parseval_witness(four).has_value();
    s.add_flag("frame/parseval-fails-off-weak-assoc", four_ok);

    double bessel = bessel_residual(Frame({OVector::standard_basis(3, 0)}),
                                    OVector{Octonion::unit(2), Octonion::real(1.0), Octonion()});
    for (int t = 0; t < reps; ++t) {
        const Frame f = rng.weak_associative_frame(2, 3);
        bessel = std::max(bessel, bessel_residual(f, rng.ovector(3)));
    }
    s.add("frame/bessel-identity", bessel, 1e-9);
}

void paralinear_suite(Suite& s, Rng& rng, int trials) {
    const std::size_t n = 3;
    const int reps = trials <= 0 ? 0 : std::max(trials / 5, 1);

    double para = 0.0, closed = 0.0, dual_real = 0.0, dual_oct = 0.0, dual_re_arg = 0.0;
    double regular = 0.0, moufang = 0.0, apply_agree = 0.0;

    const auto probe = [&](const OMatrix& m, const OMatrix& s2, const OVector& x,
                           const OVector& y, const Octonion& p, const Octonion& up) {
        const OMatrix mstar = dual(m);

        for (int i = 1; i < 8; ++i) {
            const OVector a = op_second_associator(Octonion::unit(i), x, m);
            for (const auto& entry : a) para = std::max(para, std::abs(re(entry)));
        }
        closed = std::max(closed, max_abs_diff(op_second_associator(p, x, m),
                                               op_second_associator_closed(p, x, m)));
        dual_real = std::max(dual_real, std::abs(inner_real(apply(m, x), y) -
                                                 inner_real(x, apply(mstar, y))));

        Octonion correction;
        for (int i = 1; i < 8; ++i) {
            const Octonion ei = Octonion::unit(i);
            correction += ei * inner_real(op_second_associator(ei, x, m), y);
        }
        dual_oct = std::max(dual_oct, max_abs_diff(inner(x, apply(mstar, y)),
                                                   inner(apply(m, x), y) - correction));

        OVector xr(n);
        for (std::size_t i = 0; i < n; ++i) xr[i] = Octonion::real(x[i][0]);
        dual_re_arg = std::max(dual_re_arg, max_abs_diff(inner(xr, apply(mstar, y)),
                                                         inner(apply(m, xr), y)));
        dual_re_arg = std::max(dual_re_arg, max_abs_diff(inner(x, apply(mstar, xr)),
                                                         inner(apply(m, x), xr)));

        const OMatrix k = regular_compose(s2, m); // matrix of f_{s2} (*) f_m
        const OVector lhs = apply(s2, apply(m, x)) + bracket_fgx(s2, m, x);
        regular = std::max(regular, max_abs_diff(lhs, apply(k, x)));

        moufang = std::max(moufang, max_abs_diff(scalar_action_right(m, up)(x),
                                                 moufang_right(m, up, x)));
        moufang = std::max(moufang, max_abs_diff(scalar_action_left(up, m)(x),
                                                 moufang_left(up, m, x)));

        const RealMatrix rm = real_matrix(m);
        const std::vector<double> cx = coords(x);
        Eigen::RowVectorXd cv(static_cast<Eigen::Index>(cx.size()));
        for (std::size_t i = 0; i < cx.size(); ++i) cv(static_cast<Eigen::Index>(i)) = cx[i];
        const Eigen::RowVectorXd img = cv * rm;
        const std::vector<double> ca = coords(apply(m, x));
        for (std::size_t i = 0; i < ca.size(); ++i)
            apply_agree = std::max(apply_agree,
                                   std::abs(ca[i] - img(static_cast<Eigen::Index>(i))));
    };

    {
        OMatrix fixed = OMatrix::identity(3);
        fixed(0, 1) = Octonion::unit(2);
        fixed(2, 0) = Octonion::unit(4) * 0.5;
        probe(fixed, gallery::mixed_isometry3(),
              OVector{Octonion::real(1.0), Octonion::unit(1), Octonion::unit(5)},
              OVector{Octonion::unit(3), Octonion::real(-2.0), Octonion::unit(6)},
              Octonion::unit(4), Octonion::unit(7));
    }
    for (int t = 0; t < reps; ++t)
        probe(rng.omatrix(n, n), rng.omatrix(n, n), rng.ovector(n), rng.ovector(n),
              rng.octonion(), rng.unit_octonion());

    s.add("paralinear/matrix-operators-are-paralinear", para, 1e-12);
    s.add("paralinear/second-associator-closed-form", closed, 1e-10);
    s.add("paralinear/dual-is-real-adjoint", dual_real, 1e-10);
    s.add("paralinear/dual-octonionic-identity", dual_oct, 1e-10);
    s.add("paralinear/dual-real-argument-adjoint", dual_re_arg, 1e-10);
    s.add("paralinear/regular-composition-opposite-product", regular, 1e-9);
    s.add("paralinear/moufang-identities", moufang, 1e-9);
    s.add("paralinear/real-matrix-apply-agreement", apply_agree, 1e-10);

    double iso_gram = max_abs_diff_identity(
        matmul(gallery::mixed_isometry3(), dual(gallery::mixed_isometry3())));
    for (int t = 0; t < reps; ++t) {
        const OMatrix q = scalar_matrix_left(rng.unit_octonion(), rng.real_orthogonal(n));
        iso_gram = std::max(iso_gram, max_abs_diff_identity(matmul(q, dual(q))));
        iso_gram = std::max(iso_gram, max_abs_diff_identity(matmul(dual(q), q)));
    }
    s.add("paralinear/isometry-gram-products-identity", iso_gram, 1e-9);
}

std::vector<OMatrix> verification_corpus(Rng& rng, int randoms) {
    std::vector<OMatrix> corpus = {gallery::swap_isometry2(), gallery::reflection_isometry2(),
                                   gallery::mixed_isometry3(), gallery::one_sided_gram_matrix(),
                                   gallery::quaternionic_gram_matrix()};
    for (int t = 0; t < randoms; ++t) {
        corpus.push_back(rng.real_orthogonal(2 + t % 2));
        corpus.push_back(scalar_matrix_left(rng.unit_octonion(),
                                            rng.cj_unitary(2, rng.unit_imaginary())));
        corpus.push_back(rng.omatrix(2 + t % 2, 2 + t % 2));
    }
    return corpus;
}

void classify_suite(Suite& s, Rng& rng, int trials) {
    const int reps = trials <= 0 ? 0 : std::max(trials / 20, 1);

    bool web = true;
    for (const auto& m : verification_corpus(rng, 4 * reps)) {
        const ClassificationReport r = classify_operator(m);
        web = web && (r.rows_weak_assoc == r.cols_weak_assoc) &&
              (r.rows_weak_assoc == r.real_composition_identity) &&
              (r.rows_weak_assoc == r.norm_preserving);
    }
    s.add_flag("classify/isometry-equivalence-web", web);

    double action = is_weak_associative(
        scalar_matrix_right(gallery::mixed_isometry3(), Octonion::unit(3)).row_frame())
        .max_residual;
    for (int t = 0; t < reps; ++t) {
        const OMatrix q = scalar_matrix_left(rng.unit_octonion(), rng.real_orthogonal(3));
        const Octonion p = rng.unit_octonion();
        action = std::max(action,
                          is_weak_associative(scalar_matrix_right(q, p).row_frame()).max_residual);
        action = std::max(action,
                          is_weak_associative(scalar_matrix_left(p, q).row_frame()).max_residual);
    }
    s.add("classify/scalar-action-preserves-isometry", action, 1e-9);

    bool partial_ok = true;
    double image_resid = 0.0;
    const auto partial_probe = [&](const Frame& wa, std::size_t n) {
        std::vector<OVector> rows(wa.begin(), wa.end());
        while (rows.size() < n) rows.push_back(OVector(n));
        const OMatrix m(rows);
        const ClassificationReport r = classify_partial_isometry(m);
        partial_ok = partial_ok && r.is_partial_isometry && r.kernel_is_O_submodule &&
                     r.kernel_dim == static_cast<int>(8 * (n - wa.size()));
        if (const auto basis = associative_complement_basis(m)) {
            std::vector<OVector> image;
            for (const auto& eps : *basis) image.push_back(apply(m, eps));
            image_resid = std::max(image_resid, is_weak_associative(Frame(image)).max_residual);
        } else {
            partial_ok = false;
        }
    };
    partial_probe(Frame({gallery::mixed_isometry3().row(0)}), 3);
    for (int t = 0; t < reps; ++t)
        partial_probe(rng.weak_associative_frame(1 + static_cast<std::size_t>(t % 2), 3), 3);
    s.add_flag("classify/partial-isometry-normal-forms", partial_ok);
    s.add("classify/partial-isometry-image-weak-assoc", image_resid, 1e-8);

    const ClassificationReport ra = classify_operator(gallery::one_sided_gram_matrix());
    const ClassificationReport rb = classify_operator(gallery::quaternionic_gram_matrix());
    const OMatrix ta = gallery::one_sided_gram_matrix();
    const OMatrix expected_tstar_t = OMatrix({OVector{Octonion::real(1), gallery::e(4) * -1.0},
                                              OVector{gallery::e(4), Octonion::real(1)}});
    const double counter_resid =
        std::max({ra.gram_TTstar_residual, max_abs_diff(matmul(dual(ta), ta), expected_tstar_t),
                  rb.gram_TTstar_residual, rb.gram_TstarT_residual});
    const bool counter_flags = !ra.is_isometry && !rb.is_isometry && rb.kernel_dim >= 1;
    s.add("classify/counterexample-gram-values", counter_resid, 1e-12);
    s.add_flag("classify/counterexample-verdicts", counter_flags);

    double round_trip = std::max(iso2_decompose(gallery::swap_isometry2()).residual,
                                 iso2_decompose(gallery::reflection_isometry2()).residual);
    for (int t = 0; t < std::max(trials / 2, 0); ++t) {
        const Octonion p = rng.unit_octonion();
        const Octonion j = rng.unit_imaginary();
        const OMatrix m = scalar_matrix_left(p, rng.cj_unitary(2, j));
        round_trip = std::max(round_trip, iso2_decompose(m).residual);
    }
    s.add("classify/iso2-decompose-roundtrip", round_trip, 1e-9);

    double spine_laws = 0.0;
    double off_spine = 0.0;
    const auto law_residual = [&](const Iso2Decomposition& a, const Iso2Decomposition& x) {
        const OMatrix lhs1 = iso2_reconstruct(loop_mul(a, loop_mul(a, x)));
        const OMatrix rhs1 = iso2_reconstruct(loop_mul(loop_mul(a, a), x));
        const OMatrix lhs2 = iso2_reconstruct(loop_mul(loop_mul(a, x), a));
        const OMatrix rhs2 = iso2_reconstruct(loop_mul(a, loop_mul(x, a)));
        const OMatrix lhs3 = iso2_reconstruct(loop_mul(x, loop_mul(a, a)));
        const OMatrix rhs3 = iso2_reconstruct(loop_mul(loop_mul(x, a), a));
        return std::max(
            {max_abs_diff(lhs1, rhs1), max_abs_diff(lhs2, rhs2), max_abs_diff(lhs3, rhs3)});
    };
    {
        const Iso2Decomposition a = iso2_decompose(
            scalar_matrix_left(Octonion(0.5, 0.5, 0.5, 0.5, 0, 0, 0, 0), OMatrix::identity(2)));
        const Iso2Decomposition x = iso2_decompose(gallery::swap_isometry2());
        spine_laws = law_residual(a, iso2_decompose(scalar_matrix_left(
                                         Octonion::unit(6), OMatrix::identity(2))));
        off_spine = law_residual(a, x);
    }
    for (int t = 0; t < reps; ++t) {
        const Iso2Decomposition a =
            iso2_decompose(scalar_matrix_left(rng.unit_octonion(), rng.real_orthogonal(2)));
        const Iso2Decomposition x_spine =
            iso2_decompose(scalar_matrix_left(rng.unit_octonion(), rng.real_orthogonal(2)));
        spine_laws = std::max(spine_laws, law_residual(a, x_spine));
        const Iso2Decomposition x_page = iso2_decompose(
            scalar_matrix_left(rng.unit_octonion(), rng.cj_unitary(2, rng.unit_imaginary())));
        off_spine = std::max(off_spine, law_residual(a, x_page));
    }
    s.add("classify/loop-alternative-laws-on-spine", spine_laws, 1e-9);
    s.add_info("classify/loop-alternative-laws-off-spine (informational)", off_spine);

    bool stiefel_ok = stiefel_OOy_dim(OVector::standard_basis(3, 0)).dim_OOy == 8;
    for (int t = 0; t < reps; ++t) {
        const StiefelReport r = stiefel_OOy_dim(rng.real_unit_ovector(3));
        stiefel_ok = stiefel_ok && r.dim_OOy == 8 && r.fiber_dim == 16;
    }
    const double s2 = 1.0 / std::sqrt(2.0);
    const OVector mixed{Octonion::real(s2), Octonion::unit(1) * s2, Octonion()};
    ClassifyOptions opt;
    const int d8 = stiefel_OOy_dim(mixed, opt).dim_OOy;
    for (double tol : {1e-6, 1e-10}) {
        opt.frame.rank = tol;
        stiefel_ok = stiefel_ok && stiefel_OOy_dim(mixed, opt).dim_OOy == d8;
    }
    stiefel_ok = stiefel_ok && d8 >= 9;
    s.add_flag("classify/stiefel-dimension-computations", stiefel_ok);
}

} // namespace

std::vector<PropertyResult> run_verification(std::uint64_t seed, int trials, bool inject_fault) {
    Suite s;
    Rng rng(seed);
    octonion_suite(s, rng, trials);
    ovector_suite(s, rng, trials);
    frame_suite(s, rng, trials);
    paralinear_suite(s, rng, trials);
    classify_suite(s, rng, trials);
    if (inject_fault) s.results.push_back({"injected-fault", 1.0, 0.0, false});
    return s.results;
}

} // namespace octolin
