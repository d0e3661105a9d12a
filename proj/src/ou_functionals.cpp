#include "kdv/ou_functionals.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "kdv/rng.hpp"

namespace kdv {

namespace {

struct OuStepCoeffs {
    std::vector<double> decay;  // exp(p dt)
    std::vector<double> noise;  // sqrt((exp(2 p dt) - 1) / (2p)), dt-limit at p = 0
};

OuStepCoeffs ou_step_coeffs(const Eigen::VectorXd& p, double dt) {
    const int n = static_cast<int>(p.size());
    OuStepCoeffs coeffs;
    coeffs.decay.resize(n);
    coeffs.noise.resize(n);
    for (int i = 0; i < n; ++i) {
        coeffs.decay[i] = std::exp(p(i) * dt);
        const double two_p = 2.0 * p(i);
        const double var = two_p == 0.0 ? dt : std::expm1(two_p * dt) / two_p;
        coeffs.noise[i] = std::sqrt(var);
    }
    return coeffs;
}

void validate_ou_inputs(const Eigen::VectorXd& p, double x_end, std::int64_t steps) {
    if (p.size() == 0) throw std::invalid_argument("OU system needs at least one component");
    if (!(x_end > 0.0)) throw std::invalid_argument("OU horizon must be positive");
    if (steps < 100) {
        throw std::invalid_argument("OU simulation needs at least 100 steps, got " +
                                    std::to_string(steps));
    }
}

}  // namespace

OuPath simulate_ou(const Eigen::VectorXd& p, double x_end, std::int64_t steps,
                   std::uint64_t seed, std::uint64_t path_index) {
    validate_ou_inputs(p, x_end, steps);
    const int n = static_cast<int>(p.size());
    const double dt = x_end / static_cast<double>(steps);
    const OuStepCoeffs coeffs = ou_step_coeffs(p, dt);

    const std::uint64_t path_seed = derive_stream(seed, path_index);
    std::vector<GaussianStream> streams;
    streams.reserve(n);
    for (int i = 0; i < n; ++i) streams.emplace_back(path_seed, static_cast<std::uint64_t>(i));

    OuPath path;
    path.dt = dt;
    path.states = Eigen::MatrixXd::Zero(steps + 1, n);
    for (std::int64_t k = 0; k < steps; ++k) {
        for (int i = 0; i < n; ++i) {
            path.states(k + 1, i) =
                coeffs.decay[i] * path.states(k, i) + coeffs.noise[i] * streams[i].next();
        }
    }
    return path;
}

McEstimate ou_quadratic_mc(const Eigen::VectorXd& p, const Eigen::VectorXd& c, double a,
                           double x, const McConfig& cfg) {
    validate_ou_inputs(p, x, cfg.steps);
    const int n = static_cast<int>(p.size());
    if (c.size() != n) throw std::invalid_argument("ou_quadratic_mc: p and c sizes differ");
    for (int i = 0; i < n; ++i) {
        if (!(c(i) > 0.0)) throw std::invalid_argument("ou_quadratic_mc: c must be positive");
        for (int j = i + 1; j < n; ++j) {
            if (p(i) == p(j)) {
                throw std::invalid_argument("ou_quadratic_mc: p entries must be distinct");
            }
        }
    }
    if (a == 0.0) return {1.0, 0.0, cfg.paths};

    const double dt = x / static_cast<double>(cfg.steps);
    const OuStepCoeffs coeffs = ou_step_coeffs(p, dt);
    const double half_a2 = 0.5 * a * a;

    const auto sample = [&](std::int64_t path, double sign) {
        const std::uint64_t path_seed = derive_stream(cfg.seed, path);
        std::vector<GaussianStream> streams;
        streams.reserve(n);
        for (int i = 0; i < n; ++i) {
            streams.emplace_back(path_seed, static_cast<std::uint64_t>(i));
        }
        std::vector<double> xi(n, 0.0);
        double integral = 0.0;
        double f_prev = 0.0;  // <c, xi(0)>^2 = 0
        for (std::int64_t k = 0; k < cfg.steps; ++k) {
            double dot = 0.0;
            for (int i = 0; i < n; ++i) {
                xi[i] = coeffs.decay[i] * xi[i] + coeffs.noise[i] * sign * streams[i].next();
                dot += c(i) * xi[i];
            }
            const double f = dot * dot;
            integral += 0.5 * dt * (f_prev + f);
            f_prev = f;
        }
        return std::exp(-half_a2 * integral);
    };

    if (cfg.antithetic) {
        const std::int64_t pairs = cfg.paths / 2;
        McEstimate est = mc_run(
            pairs, [&](std::int64_t i) { return 0.5 * (sample(i, 1.0) + sample(i, -1.0)); });
        est.paths_used = 2 * pairs;
        return est;
    }
    return mc_run(cfg.paths, [&](std::int64_t i) { return sample(i, 1.0); });
}

double ou_quadratic_closed_form(const Eigen::VectorXd& p, const Eigen::VectorXd& c, double a,
                                double x, double t) {
    const int n = static_cast<int>(p.size());
    if (c.size() != n) {
        throw std::invalid_argument("ou_quadratic_closed_form: p and c sizes differ");
    }

    const Eigen::MatrixXd quad_matrix =
        Eigen::MatrixXd(p.array().square().matrix().asDiagonal()) + a * a * c * c.transpose();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(quad_matrix);
    if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0) {
        throw std::domain_error(
            "ou_quadratic_closed_form: D^2 + a^2 c c^T is not positive definite");
    }
    const Eigen::VectorXd r = es.eigenvalues().cwiseSqrt();
    const Eigen::MatrixXd u = es.eigenvectors();
    const Eigen::MatrixXd drift_in_basis = u.transpose() * p.asDiagonal() * u;

    const auto phi_det = [&](double z) {
        Eigen::VectorXd zeta = z * r + t * r.array().cube().matrix();
        Eigen::MatrixXd inner = -((zeta.array().sinh() / r.array()).matrix().asDiagonal() *
                                  drift_in_basis);
        inner += Eigen::MatrixXd(zeta.array().cosh().matrix().asDiagonal());
        const Eigen::MatrixXd phi = u * inner * u.transpose();
        return phi.partialPivLu().determinant();
    };

    const double ratio = phi_det(0.0) / phi_det(x);
    if (!(ratio > 0.0)) {
        throw std::domain_error("ou_quadratic_closed_form: determinant ratio not positive");
    }
    return std::sqrt(ratio) * std::exp(-0.5 * x * p.sum());
}

BlockKernelOperator ou_chaos_operator(const Eigen::VectorXd& p, const Eigen::VectorXd& c,
                                      double a, double x, int nodes) {
    const int n = static_cast<int>(p.size());
    if (c.size() != n) throw std::invalid_argument("ou_chaos_operator: p and c sizes differ");
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (p(i) + p(j) == 0.0) {
                throw std::domain_error("ou_chaos_operator: pole p_i + p_j = 0 at (" +
                                        std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }

    BlockKernelOperator op;
    op.blocks = n;
    op.rule = map_to_interval(gauss_rule(nodes), 0.0, x);
    const Eigen::VectorXd pv = p;
    const Eigen::VectorXd cv = c;
    op.kernel = [pv, cv, a, x](double v, int j, double u, int i) {
        const double ps = pv(i) + pv(j);
        return a * a * cv(i) * cv(j) / ps *
               (std::exp(ps * x) - std::exp(ps * std::max(u, v))) *
               std::exp(-pv(i) * u - pv(j) * v);
    };
    return op;
}

double ou_chaos_trace(const Eigen::VectorXd& p, const Eigen::VectorXd& c, double a, double x) {
    double acc = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        const double pi = p(i);
        acc += c(i) * c(i) / (4.0 * pi * pi) * (std::exp(2.0 * pi * x) - 2.0 * pi * x - 1.0);
    }
    return a * a * acc;
}

}  // namespace kdv
