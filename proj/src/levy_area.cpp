#include "kdv/levy_area.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kdv/rng.hpp"
#include "kdv/soliton.hpp"

namespace kdv {

ComplexMcEstimate mc_levy_area(const Eigen::VectorXd& lambda, const Eigen::MatrixXd& C,
                               const McConfig& cfg) {
    const int n = static_cast<int>(lambda.size());
    if (C.rows() != n || C.cols() != n) {
        throw std::invalid_argument("mc_levy_area: dimension mismatch");
    }
    if (lambda.minCoeff() < 0.0) {
        throw std::invalid_argument("mc_levy_area: lambda entries must be nonnegative");
    }
    if (cfg.steps < 500) {
        throw std::invalid_argument("mc_levy_area: needs at least 500 steps");
    }
    if (lambda.isZero(0.0)) return {{1.0, 0.0}, 0.0, 0.0, cfg.paths};

    const Eigen::MatrixXd sym = 0.5 * (C + C.transpose());
    const Eigen::MatrixXd skew = 0.5 * (C - C.transpose());
    const Eigen::VectorXd root = lambda.cwiseSqrt();
    const Eigen::MatrixXd scaled_sym = root.asDiagonal() * sym * root.asDiagonal();
    const Eigen::MatrixXd scaled_skew = root.asDiagonal() * skew * root.asDiagonal();

    const double dt = 1.0 / static_cast<double>(cfg.steps);
    const double sqrt_dt = std::sqrt(dt);

    const auto sample = [&](std::int64_t path, double sign) {
        const std::uint64_t path_seed = derive_stream(cfg.seed, path);
        std::vector<GaussianStream> streams;
        streams.reserve(n);
        for (int l = 0; l < n; ++l) {
            streams.emplace_back(path_seed, static_cast<std::uint64_t>(l));
        }

        Eigen::VectorXd w1 = Eigen::VectorXd::Zero(n);
        Eigen::VectorXd w2 = Eigen::VectorXd::Zero(n);
        std::vector<double> area(n, 0.0);
        for (std::int64_t k = 0; k < cfg.steps; ++k) {
            for (int l = 0; l < n; ++l) {
                const double d1 = sign * sqrt_dt * streams[l].next();
                const double d2 = sign * sqrt_dt * streams[l].next();
                area[l] += w2(l) * d1 - w1(l) * d2;
                w1(l) += d1;
                w2(l) += d2;
            }
        }

        double imag = 0.0;
        for (int l = 0; l < n; ++l) imag += lambda(l) * area[l];
        imag += w2.dot(scaled_skew * w1);
        // Quadratic endpoint term damps at sigma = i; the anti-damping sign
        // produces det(cosh - C sinh)^{-1} instead of the target.
        const double real =
            -0.5 * (w1.dot(scaled_sym * w1) + w2.dot(scaled_sym * w2));
        const double magnitude = std::exp(real);
        return std::complex<double>(magnitude * std::cos(imag), magnitude * std::sin(imag));
    };

    if (cfg.antithetic) {
        const std::int64_t pairs = cfg.paths / 2;
        ComplexMcEstimate est = mc_run_complex(
            pairs, [&](std::int64_t i) { return 0.5 * (sample(i, 1.0) + sample(i, -1.0)); });
        est.paths_used = 2 * pairs;
        return est;
    }
    return mc_run_complex(cfg.paths, [&](std::int64_t i) { return sample(i, 1.0); });
}

AreaParams area_params_from_kdv(const Eigen::VectorXd& eta, const Eigen::VectorXd& m,
                                double x, double t) {
    const int n = static_cast<int>(eta.size());
    if (m.size() != n) throw std::invalid_argument("area_params_from_kdv: size mismatch");

    AreaParams params;
    params.lambda.resize(n);
    for (int l = 0; l < n; ++l) {
        if (!(eta(l) > 0.0) || !(m(l) > 0.0)) {
            throw std::invalid_argument("area_params_from_kdv: eta and m must be positive");
        }
        params.lambda(l) = eta(l) * x + eta(l) * eta(l) * eta(l) * t - 0.5 * std::log(m(l));
        if (!(params.lambda(l) > 0.0)) {
            throw std::invalid_argument(
                "area_params_from_kdv: lambda_" + std::to_string(l) +
                " is not positive; move (x, t) or shrink m");
        }
    }

    Eigen::MatrixXd p(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) p(i, j) = 1.0 / (eta(i) + eta(j));
    }
    params.C = cayley_transform(p);
    return params;
}

}  // namespace kdv
