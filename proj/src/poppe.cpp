#include "kdv/poppe.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace kdv {

namespace {

constexpr double kExponentCap = 700.0;

double checked_exp(double exponent, double kappa, double x, double t) {
    if (exponent > kExponentCap) {
        throw std::overflow_error("exponent overflow: 8 k^3 t - k x = " +
                                  std::to_string(exponent) + " at kappa=" + std::to_string(kappa) +
                                  ", x=" + std::to_string(x) + ", t=" + std::to_string(t));
    }
    return std::exp(exponent);
}

double atom_term(const MeasureAtom& atom, double x, double t) {
    const double k = atom.kappa;
    return atom.weight * checked_exp(8.0 * k * k * k * t - k * x, k, x, t);
}

}  // namespace

double F_eval(const SpectralMeasure& mu, double x, double t) {
    mu.validate();
    double acc = 0.0;
    for (const auto& atom : mu.atoms) acc += atom_term(atom, x, t);
    if (mu.density.has_value()) {
        const auto& d = *mu.density;
        for (int i = 0; i < d.rule.size(); ++i) {
            const double kappa = d.rule.nodes[i];
            acc += d.rule.weights[i] * d.density(kappa) *
                   checked_exp(8.0 * kappa * kappa * kappa * t - kappa * x, kappa, x, t);
        }
    }
    return acc;
}

double linearized_residual(const SpectralMeasure& mu, double x, double t, double h) {
    if (mu.empty()) return 0.0;
    const double ft = (F_eval(mu, x, t + h) - F_eval(mu, x, t - h)) / (2.0 * h);
    const double fxxx = (F_eval(mu, x + 2.0 * h, t) - 2.0 * F_eval(mu, x + h, t) +
                         2.0 * F_eval(mu, x - h, t) - F_eval(mu, x - 2.0 * h, t)) /
                        (2.0 * h * h * h);
    return ft + 8.0 * fxxx;
}

double phi_l2_norm(const SpectralMeasure& mu, double x, double t) {
    const auto nodes = discretize_measure(mu);
    double acc = 0.0;
    for (const auto& a : nodes) {
        for (const auto& b : nodes) {
            const double ks = a.kappa + b.kappa;
            if (!(ks > 0.0)) {
                throw std::domain_error("phi_l2_norm: divergent pair (kappa=" +
                                        std::to_string(a.kappa) + ", kappa=" +
                                        std::to_string(b.kappa) + ")");
            }
            const double e = 8.0 * (a.kappa * a.kappa * a.kappa +
                                    b.kappa * b.kappa * b.kappa) * t - 2.0 * ks * x;
            acc += a.weight * b.weight * checked_exp(e, a.kappa, x, t) / (ks * ks);
        }
    }
    return std::sqrt(acc);
}

AdmissibilityReport admissibility_check(const SpectralMeasure& mu, double x, double t) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    AdmissibilityReport report;
    try {
        for (const auto& node : discretize_measure(mu)) {
            const double k = node.kappa;
            const double v =
                node.weight * checked_exp(8.0 * k * k * k * t - 2.0 * k * x, k, x, t);
            if (k < 1.0) {
                report.near_zero += v / k;
            } else {
                report.tail += v / std::sqrt(k);
            }
        }
    } catch (const std::overflow_error&) {
        report.near_zero = inf;
        report.tail = inf;
    }
    try {
        report.phi_norm = phi_l2_norm(mu, x, t);
    } catch (const std::overflow_error&) {
        report.phi_norm = inf;
    }
    report.ok = std::isfinite(report.near_zero) && std::isfinite(report.tail) &&
                report.phi_norm < 1.0;
    return report;
}

KernelOperator poppe_operator(const SpectralMeasure& mu, double x, double t, int nodes,
                              double map_length) {
    mu.validate();
    KernelOperator op;
    op.rule = map_semi_infinite(gauss_rule(nodes), map_length);
    op.kernel = [mu, x, t](double a, double b) { return F_eval(mu, a + b + 2.0 * x, t); };
    return op;
}

double tau_poppe(const SpectralMeasure& mu, double x, double t, double lambda, int nodes) {
    if (lambda == 0.0) return 1.0;
    if (mu.empty()) return 1.0;
    return fredholm_det(poppe_operator(mu, x, t, nodes), lambda);
}

TauResult tau_poppe_checked(const SpectralMeasure& mu, double x, double t, double lambda,
                            int nodes) {
    TauResult result;
    const AdmissibilityReport report = admissibility_check(mu, x, t);
    result.admissible = report.ok;
    if (!report.ok) {
        result.warning = "inadmissible at (x=" + std::to_string(x) + ", t=" +
                         std::to_string(t) + "): phi L2 norm " +
                         std::to_string(report.phi_norm);
    } else if (!mu.empty()) {
        const auto decay = check_kernel_decay(poppe_operator(mu, x, t, nodes));
        if (!decay.decaying) {
            result.warning = "weighted kernel norm attained at outer nodes";
        }
    }
    result.value = tau_poppe(mu, x, t, lambda, nodes);
    if (result.value <= 0.0) {
        result.warning += std::string(result.warning.empty() ? "" : "; ") +
                          "determinant sign change: tau <= 0";
    }
    return result;
}

}  // namespace kdv
