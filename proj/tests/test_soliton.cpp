#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kdv/rng.hpp"
#include "kdv/soliton.hpp"

using namespace kdv;

namespace {

ScatteringData one_soliton() { return {{{std::sqrt(2.0), 1.0}}}; }

ScatteringData random_scattering(int n, std::uint64_t seed) {
    Xoshiro256pp rng(seed);
    ScatteringData sd;
    for (int i = 0; i < n; ++i) {
        const double c = 0.6 + 0.8 * rng.uniform();
        const double kappa = 0.4 + 0.7 * rng.uniform() + 0.35 * i;  // spread keeps them distinct
        sd.modes.push_back({c, kappa});
    }
    return sd;
}

double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

TEST_CASE("one-soliton matrix is 1 + e^{8t-2x}") {
    const auto sd = one_soliton();
    for (double x : {-1.0, 0.0, 0.7}) {
        for (double t : {-0.05, 0.0, 0.1}) {
            const auto a = soliton_matrix(sd, x, t);
            REQUIRE(a.rows() == 1);
            CHECK(a(0, 0) == doctest::Approx(1.0 + std::exp(8.0 * t - 2.0 * x)).epsilon(1e-14));
        }
    }
    CHECK(tau_soliton(sd, 0.0, 0.0) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("soliton matrix decays to the identity for large x") {
    const auto sd = random_scattering(3, 11);
    const auto a = soliton_matrix(sd, 40.0, 0.0);
    CHECK((a - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(tau_soliton(sd, 40.0, 0.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("two-soliton determinant against direct 2x2 arithmetic") {
    const ScatteringData sd{{{1.0, 1.0}, {1.0, 2.0}}};
    // at x=t=0: [[1+1/2, 1/3], [1/3, 1+1/4]]
    const double expected = 1.5 * 1.25 - (1.0 / 3.0) * (1.0 / 3.0);
    CHECK(tau_soliton(sd, 0.0, 0.0) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("empty scattering data has tau = 1") {
    CHECK(tau_soliton(ScatteringData{}, 3.0, -1.0) == 1.0);
    CHECK(tau_gaussian_closed(ScatteringData{}, 3.0, -1.0) == 1.0);
}

TEST_CASE("scattering data validation") {
    CHECK_THROWS_AS(tau_soliton({{{1.0, 1.0}, {1.0, 1.0}}}, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tau_soliton({{{-1.0, 1.0}}}, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tau_soliton({{{1.0, 0.0}}}, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("cauchy covariance values and positivity") {
    const auto single = cauchy_covariance({1.0});
    CHECK(single(0, 0) == 0.5);

    const auto pair = cauchy_covariance({1.0, 2.0});
    CHECK(pair(0, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pair(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(pair(1, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(pair(1, 1) == doctest::Approx(0.25).epsilon(1e-15));

    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Xoshiro256pp rng(seed);
        std::vector<double> kappa;
        for (int i = 0; i < 5; ++i) kappa.push_back(0.3 + rng.uniform() + 0.8 * i);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cauchy_covariance(kappa),
                                                          Eigen::EigenvaluesOnly);
        CHECK(es.eigenvalues().minCoeff() > 0.0);
    }
    CHECK_THROWS_AS(cauchy_covariance({1.0, 1.0}), std::invalid_argument);
}

TEST_CASE("gaussian closed form reproduces the one-soliton tau") {
    const auto sd = one_soliton();
    for (double x : {-0.5, 0.0, 1.2}) {
        for (double t : {-0.1, 0.0, 0.08}) {
            CHECK(tau_gaussian_closed(sd, x, t) ==
                  doctest::Approx(1.0 + std::exp(8.0 * t - 2.0 * x)).epsilon(1e-13));
        }
    }
    CHECK(tau_gaussian_closed(sd, 50.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("matrix route and gaussian route agree to 1e-12 on the test grid") {
    for (int n : {1, 2, 3}) {
        const auto sd = random_scattering(n, 100 + n);
        for (int ix = 0; ix <= 20; ++ix) {
            const double x = -2.0 + 0.2 * ix;
            for (int it = 0; it <= 4; ++it) {
                const double t = -0.1 + 0.05 * it;
                const double a = tau_soliton(sd, x, t);
                const double b = tau_gaussian_closed(sd, x, t);
                CHECK(rel_diff(a, b) < 1e-12);
                CHECK(a > 0.0);
            }
        }
    }
}

TEST_CASE("kp soliton tau: direct evaluation and edge cases") {
    KpScatteringData kpd;
    kpd.p = Eigen::VectorXd::Constant(1, 1.0);
    kpd.q = Eigen::VectorXd::Constant(1, -1.0);
    kpd.m = Eigen::VectorXd::Constant(1, 1.0);
    CHECK(kp_soliton_tau(kpd) == doctest::Approx(1.5).epsilon(1e-14));

    CHECK(kp_soliton_tau(KpScatteringData{}) == 1.0);

    KpScatteringData bad = kpd;
    bad.q(0) = 1.0;
    CHECK_THROWS_AS(kp_soliton_tau(bad), std::invalid_argument);

    KpScatteringData deep = kpd;
    deep.hierarchy.assign(17, 0.0);
    CHECK_THROWS_AS(kp_soliton_tau(deep), std::invalid_argument);
}

TEST_CASE("kp reduction p=eta, q=-eta, x1=x, x3=t matches the hierarchy matrix") {
    Eigen::VectorXd eta(3);
    eta << 0.5, 0.9, 1.4;
    Eigen::VectorXd m(3);
    m << 1.0, 0.7, 1.8;

    for (double x : {-0.5, 0.3, 1.0}) {
        for (double t : {-0.05, 0.0, 0.1}) {
            KpScatteringData kpd;
            kpd.p = eta;
            kpd.q = -eta;
            kpd.m = m;
            kpd.hierarchy = {x, 0.0, t};

            const Eigen::MatrixXd g = kdv_hierarchy_matrix(m, eta, x, t);
            const double tau_direct =
                (Eigen::MatrixXd::Identity(3, 3) + g).determinant();
            CHECK(rel_diff(kp_soliton_tau(kpd), tau_direct) < 1e-12);
        }
    }
}

TEST_CASE("aihara determinant basics") {
    Eigen::VectorXd lambda(1);
    lambda << 0.8;
    CHECK(aihara_det(lambda, Eigen::MatrixXd::Zero(1, 1)) ==
          doctest::Approx(std::cosh(0.8)).epsilon(1e-15));

    Eigen::VectorXd zero2 = Eigen::VectorXd::Zero(2);
    Eigen::MatrixXd c(2, 2);
    c << 0.3, -0.2, 0.1, 0.4;
    CHECK(aihara_det(zero2, c) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("aihara determinant factorization through the cayley transform") {
    for (int n : {1, 2, 3}) {
        Xoshiro256pp rng(40 + n);
        Eigen::MatrixXd p(n, n);
        Eigen::VectorXd xi(n), m(n);
        for (int i = 0; i < n; ++i) {
            xi(i) = 2.0 * rng.uniform() - 1.0;
            m(i) = 0.5 + 1.5 * rng.uniform();
            for (int j = 0; j < n; ++j) p(i, j) = 0.5 * (2.0 * rng.uniform() - 1.0);
        }
        const Eigen::MatrixXd c = cayley_transform(p);
        Eigen::VectorXd lambda(n);
        for (int i = 0; i < n; ++i) lambda(i) = 0.5 * (xi(i) - std::log(m(i)));

        const double lhs = aihara_det(lambda, c);
        const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
        // det((I+C)e^Lambda) = det(I+C) e^{sum lambda_i} with
        // lambda_i = (xi_i - log m_i)/2.
        const double rhs = std::pow(2.0, -n) * (id + c).determinant() *
                           std::exp(lambda.sum()) *
                           (id + p * (-2.0 * lambda.array()).exp().matrix().asDiagonal()
                                        .toDenseMatrix())
                               .determinant();
        CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("aihara factorization with unit weights, where e^{sum lambda} = e^{sum xi/2}") {
    const int n = 2;
    Xoshiro256pp rng(99);
    Eigen::MatrixXd p(n, n);
    Eigen::VectorXd xi(n);
    for (int i = 0; i < n; ++i) {
        xi(i) = 2.0 * rng.uniform() - 1.0;
        for (int j = 0; j < n; ++j) p(i, j) = 0.4 * (2.0 * rng.uniform() - 1.0);
    }
    const Eigen::MatrixXd c = cayley_transform(p);
    const Eigen::VectorXd lambda = 0.5 * xi;  // m_i = 1
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    const double rhs =
        0.25 * (id + c).determinant() * std::exp(0.5 * xi.sum()) *
        (id + p * (-2.0 * lambda.array()).exp().matrix().asDiagonal().toDenseMatrix())
            .determinant();
    CHECK(aihara_det(lambda, c) == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("cayley transform: fixed points and involution") {
    const Eigen::MatrixXd zero3 = Eigen::MatrixXd::Zero(3, 3);
    CHECK(cayley_transform(zero3).isApprox(Eigen::MatrixXd::Identity(3, 3), 1e-15));

    Eigen::MatrixXd one(1, 1);
    one << 1.0;
    CHECK(std::abs(cayley_transform(one)(0, 0)) < 1e-15);

    Xoshiro256pp rng(7);
    Eigen::MatrixXd p(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) p(i, j) = 0.28 * (2.0 * rng.uniform() - 1.0);
    }
    double cond = 0.0;
    const Eigen::MatrixXd c = cayley_transform(p, &cond);
    CHECK(cond >= 1.0);
    CHECK(cayley_transform(c).isApprox(p, 1e-12));

    Eigen::MatrixXd minus_id = -Eigen::MatrixXd::Identity(2, 2);
    CHECK_THROWS_AS(cayley_transform(minus_id), std::domain_error);
}
