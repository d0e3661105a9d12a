#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "kdv/poppe.hpp"
#include "kdv/soliton.hpp"

using namespace kdv;

namespace {

SpectralMeasure one_soliton_measure() { return measure_from_atoms({{1.0, 2.0}}); }

}  // namespace

TEST_CASE("F_eval: atoms, empty measure, and a flat density") {
    CHECK(F_eval(one_soliton_measure(), 0.0, 0.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(F_eval(SpectralMeasure{}, 1.0, 1.0) == 0.0);

    const auto uniform = measure_with_uniform_density(1.0, 2.0, 1.0, 32);
    CHECK(F_eval(uniform, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-12));
    // int_1^2 e^{-k} dk = e^{-1} - e^{-2}
    CHECK(F_eval(uniform, 1.0, 0.0) ==
          doctest::Approx(std::exp(-1.0) - std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("F_eval: overflow guard names the offending exponent") {
    const auto spiky = measure_from_atoms({{10.0, 1.0}});
    CHECK_THROWS_AS(F_eval(spiky, 0.0, 1.0), std::overflow_error);  // 8*1000 > 700
    CHECK_NOTHROW(F_eval(spiky, 0.0, 0.0));
}

TEST_CASE("measure validation") {
    CHECK_THROWS_AS(measure_from_atoms({{0.0, 1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(measure_from_atoms({{1.0, -0.5}}), std::invalid_argument);
    CHECK_THROWS_AS(measure_with_uniform_density(0.0, 2.0, 1.0, 16), std::invalid_argument);
    CHECK_THROWS_AS(measure_with_uniform_density(2.0, 1.0, 1.0, 16), std::invalid_argument);
    CHECK_THROWS_AS(measure_with_cauchy_window(1.0, 2.0, 0.0, 16), std::invalid_argument);
}

TEST_CASE("linearized flow residual vanishes at second order") {
    const auto mu = measure_from_atoms({{0.5, 1.0}});
    for (double x : {-1.0, 0.0, 1.5}) {
        for (double t : {0.0, 0.05}) {
            const double f = F_eval(mu, x, t);
            CHECK(std::abs(linearized_residual(mu, x, t, 1e-2)) < 1e-4 * std::max(1.0, std::abs(f)));
        }
    }

    CHECK(linearized_residual(SpectralMeasure{}, 0.3, 0.1, 1e-2) == 0.0);

    const double rh = std::abs(linearized_residual(mu, 0.5, 0.02, 2e-2));
    const double rh2 = std::abs(linearized_residual(mu, 0.5, 0.02, 1e-2));
    CHECK(rh / rh2 > 3.5);
    CHECK(rh / rh2 < 4.5);
}

TEST_CASE("phi L2 norm: closed form, monotonicity, quadrature oracle") {
    const auto mu = one_soliton_measure();
    CHECK(phi_l2_norm(mu, 0.0, 0.0) == doctest::Approx(1.0).epsilon(1e-14));

    double prev = phi_l2_norm(mu, 0.0, 0.0);
    for (double x : {0.5, 1.0, 2.0, 4.0}) {
        const double norm = phi_l2_norm(mu, x, 0.0);
        CHECK(norm < prev);
        prev = norm;
    }

    // brute-force 2-D quadrature of the squared kernel for two atoms
    const auto two = measure_from_atoms({{0.8, 1.0}, {1.5, 0.6}});
    const double x = 0.4;
    const double t = 0.02;
    const auto rule = map_semi_infinite(gauss_rule(64), 1.0);
    double brute = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
        for (int j = 0; j < rule.size(); ++j) {
            const double phi = F_eval(two, rule.nodes[i] + rule.nodes[j] + 2.0 * x, t);
            brute += rule.weights[i] * rule.weights[j] * phi * phi;
        }
    }
    CHECK(phi_l2_norm(two, x, t) == doctest::Approx(std::sqrt(brute)).epsilon(1e-8));
}

TEST_CASE("admissibility report") {
    // finite atom set: integrals finite for any (x,t) without overflow
    const auto mu = one_soliton_measure();
    const auto at_one = admissibility_check(mu, 1.0, 0.0);
    CHECK(std::isfinite(at_one.near_zero));
    CHECK(std::isfinite(at_one.tail));
    CHECK(at_one.ok);

    // ||phi|| = 1 exactly at the origin: not admissible
    const auto at_zero = admissibility_check(mu, 0.0, 0.0);
    CHECK(at_zero.phi_norm == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_FALSE(at_zero.ok);

    // uniform density on [1,2]: near-zero part empty, tail = 2(sqrt(2)-1)
    const auto uniform = measure_with_uniform_density(1.0, 2.0, 1.0, 32);
    const auto report = admissibility_check(uniform, 0.0, 0.0);
    CHECK(report.near_zero == 0.0);
    CHECK(report.tail == doctest::Approx(2.0 * (std::sqrt(2.0) - 1.0)).epsilon(1e-10));

    // overflow lands in the fields, not in an exception
    const auto spiky = measure_from_atoms({{10.0, 1.0}});
    const auto hot = admissibility_check(spiky, 0.0, 1.0);
    CHECK_FALSE(hot.ok);
    CHECK(std::isinf(hot.tail));
}

TEST_CASE("poppe kernel is symmetric by construction") {
    const auto op = poppe_operator(one_soliton_measure(), 0.7, 0.05);
    for (double a : {0.0, 0.3, 2.0}) {
        for (double b : {0.1, 1.7}) {
            CHECK(op.kernel(a, b) == op.kernel(b, a));
        }
    }
}

TEST_CASE("tau_poppe: trivial lambda and the 1-soliton closed form") {
    const auto mu = one_soliton_measure();
    CHECK(tau_poppe(mu, 0.3, 0.0, 0.0) == 1.0);
    CHECK(tau_poppe(SpectralMeasure{}, 0.3, 0.0) == 1.0);

    for (double x : {0.5, 1.0, 2.0, 3.0}) {
        for (double t : {0.0, 0.05, 0.1}) {
            const double expected = 1.0 + std::exp(8.0 * t - 2.0 * x);
            CHECK(std::abs(tau_poppe(mu, x, t) - expected) < 1e-8);
        }
    }
}

TEST_CASE("tau_poppe: rank-N atomic measures reduce to the soliton matrix") {
    const ScatteringData sd{{{1.0, 0.7}, {0.8, 1.3}}};
    SpectralMeasure mu;
    for (const auto& mode : sd.modes) mu.atoms.push_back({mode.kappa, mode.c * mode.c});

    for (double x : {0.5, 1.0, 2.0}) {
        for (double t : {0.0, 0.1}) {
            CHECK(std::abs(tau_poppe(mu, x, t) - tau_soliton(sd, x, t)) < 1e-7);
        }
    }
}

TEST_CASE("tau_poppe: doubling nodes moves the value below 1e-8") {
    const auto mu = one_soliton_measure();
    for (double x : {0.5, 1.5, 3.0}) {
        const double coarse = tau_poppe(mu, x, 0.05, 1.0, 64);
        const double fine = tau_poppe(mu, x, 0.05, 1.0, 128);
        CHECK(std::abs(fine - coarse) < 1e-8);
    }
}

TEST_CASE("tau_poppe_checked attaches warnings off the admissible region") {
    const auto mu = one_soliton_measure();
    const auto bad = tau_poppe_checked(mu, 0.0, 0.0);
    CHECK_FALSE(bad.admissible);
    CHECK_FALSE(bad.warning.empty());

    const auto good = tau_poppe_checked(mu, 1.0, 0.0);
    CHECK(good.admissible);
    CHECK(good.warning.empty());
    CHECK(good.value == doctest::Approx(1.0 + std::exp(-2.0)).epsilon(1e-8));
}

TEST_CASE("measure serialization round trip") {
    const auto atoms_only = measure_from_atoms({{1.0, 2.0}, {1.7, 0.3}});
    const auto atoms_back = measure_from_json_text(measure_to_json_text(atoms_only));
    REQUIRE(atoms_back.atoms.size() == 2);
    CHECK(atoms_back.atoms[1].kappa == 1.7);
    CHECK(atoms_back.atoms[1].weight == 0.3);
    CHECK_FALSE(atoms_back.density.has_value());

    const auto uniform = measure_with_uniform_density(1.0, 2.0, 0.7, 24, {{0.5, 1.0}});
    const auto uniform_back = measure_from_json_text(measure_to_json_text(uniform));
    REQUIRE(uniform_back.density.has_value());
    CHECK(uniform_back.density->family == "uniform");
    CHECK(uniform_back.density->rule.size() == 24);
    CHECK(F_eval(uniform_back, 0.8, 0.03) ==
          doctest::Approx(F_eval(uniform, 0.8, 0.03)).epsilon(1e-15));

    const auto window = measure_with_cauchy_window(0.5, 3.0, 0.8, 16);
    const auto window_back = measure_from_json_text(measure_to_json_text(window));
    CHECK(F_eval(window_back, 1.0, 0.0) ==
          doctest::Approx(F_eval(window, 1.0, 0.0)).epsilon(1e-15));

    CHECK_THROWS_AS(measure_from_json_text(R"({"density":{"family":"triangle","support":[1,2]}})"),
                    std::invalid_argument);
}
