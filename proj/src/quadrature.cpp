#include "kdv/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace kdv {

QuadratureRule gauss_rule(int n) {
    if (n < 1 || n > 512) {
        throw std::invalid_argument("gauss_rule: node count must be in [1, 512], got " +
                                    std::to_string(n));
    }

    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    rule.domain = Domain::finite;
    rule.a = -1.0;
    rule.b = 1.0;

    // Newton iteration on the Legendre polynomial, filling symmetric pairs.
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            dp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z_prev = z;
            z = z_prev - p1 / dp;
            if (std::abs(z - z_prev) <= 1e-15) break;
        }
        if (2 * i == n - 1) z = 0.0;  // center node of odd rules is exact

        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

namespace {

void require_reference_rule(const QuadratureRule& rule, const char* caller) {
    if (rule.domain != Domain::finite || rule.a != -1.0 || rule.b != 1.0) {
        throw std::invalid_argument(std::string(caller) + ": expected a rule on [-1, 1]");
    }
}

}  // namespace

QuadratureRule map_to_interval(const QuadratureRule& rule, double a, double b) {
    require_reference_rule(rule, "map_to_interval");
    if (!(a < b)) {
        throw std::invalid_argument("map_to_interval: requires a < b, got a=" +
                                    std::to_string(a) + ", b=" + std::to_string(b));
    }

    QuadratureRule out;
    const int n = rule.size();
    out.nodes.resize(n);
    out.weights.resize(n);
    out.domain = Domain::finite;
    out.a = a;
    out.b = b;

    const double mid = 0.5 * (a + b);
    const double halfwidth = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        out.nodes[i] = mid + halfwidth * rule.nodes[i];
        out.weights[i] = halfwidth * rule.weights[i];
    }
    return out;
}

QuadratureRule map_semi_infinite(const QuadratureRule& rule, double L) {
    require_reference_rule(rule, "map_semi_infinite");
    if (!(L > 0.0)) {
        throw std::invalid_argument("map_semi_infinite: requires L > 0");
    }

    QuadratureRule out;
    const int n = rule.size();
    out.nodes.resize(n);
    out.weights.resize(n);
    out.domain = Domain::semi_infinite;
    out.a = 0.0;
    out.b = std::numeric_limits<double>::infinity();
    out.map_length = L;

    // s = L(1+t)/(1-t), ds/dt = 2L/(1-t)^2; Gauss nodes stay interior so the
    // pole at t = 1 is never touched.
    for (int i = 0; i < n; ++i) {
        const double t = rule.nodes[i];
        const double om = 1.0 - t;
        out.nodes[i] = L * (1.0 + t) / om;
        out.weights[i] = rule.weights[i] * 2.0 * L / (om * om);
    }
    return out;
}

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
    double acc = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
        acc += rule.weights[i] * f(rule.nodes[i]);
    }
    return acc;
}

}  // namespace kdv
