#include "octolin/random.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <complex>

namespace octolin {

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Octonion Rng::octonion(double scale) {
    std::array<double, 8> c{};
    for (double& x : c) x = uniform(-scale, scale);
    return Octonion(c);
}

Octonion Rng::unit_octonion() {
    Octonion p = octonion();
    double n = norm(p);
    while (n < 1e-3) {
        p = octonion();
        n = norm(p);
    }
    return p / n;
}

Octonion Rng::unit_imaginary() {
    Octonion p = im(octonion());
    double n = norm(p);
    while (n < 1e-3) {
        p = im(octonion());
        n = norm(p);
    }
    return p / n;
}

OVector Rng::ovector(std::size_t n, double scale) {
    OVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = octonion(scale);
    return x;
}

OVector Rng::unit_ovector(std::size_t n) {
    OVector x = ovector(n);
    double m = vnorm(x);
    while (m < 1e-3) {
        x = ovector(n);
        m = vnorm(x);
    }
    return x * (1.0 / m);
}

OVector Rng::real_unit_ovector(std::size_t n) {
    OVector x(n);
    double s = 0.0;
    do {
        for (std::size_t i = 0; i < n; ++i) x[i] = Octonion::real(uniform(-1.0, 1.0));
        s = vnorm(x);
    } while (s < 1e-3);
    return x * (1.0 / s);
}

OMatrix Rng::omatrix(std::size_t k, std::size_t n, double scale) {
    std::vector<OVector> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) rows.push_back(ovector(n, scale));
    return OMatrix(std::move(rows));
}

OMatrix Rng::real_orthogonal(std::size_t n) {
    const auto m = static_cast<Eigen::Index>(n);
    Eigen::MatrixXd g(m, m);
    for (Eigen::Index i = 0; i < m; ++i)
        for (Eigen::Index j = 0; j < m; ++j) g(i, j) = normal();
    const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ();
    std::vector<OVector> rows;
    rows.reserve(n);
    for (Eigen::Index i = 0; i < m; ++i) {
        OVector r(n);
        for (Eigen::Index j = 0; j < m; ++j) r[static_cast<std::size_t>(j)] = Octonion::real(q(i, j));
        rows.push_back(std::move(r));
    }
    return OMatrix(std::move(rows));
}

OMatrix Rng::cj_unitary(std::size_t n, const Octonion& j) {
    const auto m = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd g(m, m);
    for (Eigen::Index r = 0; r < m; ++r)
        for (Eigen::Index c = 0; c < m; ++c) g(r, c) = std::complex<double>(normal(), normal());
    const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(g).householderQ();
    std::vector<OVector> rows;
    rows.reserve(n);
    for (Eigen::Index r = 0; r < m; ++r) {
        OVector row(n);
        for (Eigen::Index c = 0; c < m; ++c)
            row[static_cast<std::size_t>(c)] =
                Octonion::real(q(r, c).real()) + j * q(r, c).imag();
        rows.push_back(std::move(row));
    }
    return OMatrix(std::move(rows));
}

Frame Rng::weak_associative_frame(std::size_t k, std::size_t n) {
    const OMatrix q = real_orthogonal(n);
    const Octonion p = unit_octonion();
    std::vector<OVector> vs;
    vs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) vs.push_back(scalar_mul_left(p, q.row(i)));
    return Frame(std::move(vs));
}

} // namespace octolin
