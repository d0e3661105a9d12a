#include "kdv/gaussian_mc.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "kdv/poppe.hpp"
#include "kdv/rng.hpp"
#include "kdv/soliton.hpp"

namespace kdv {

GaussianEnsemble GaussianEnsemble::build(const Eigen::MatrixXd& covariance) {
    GaussianEnsemble ensemble;
    ensemble.covariance = covariance;

    Eigen::LLT<Eigen::MatrixXd> llt(covariance);
    if (llt.info() != Eigen::Success) {
        const auto n = covariance.rows();
        ensemble.jitter = 1e-12 * (1.0 + covariance.norm());
        llt.compute(covariance + ensemble.jitter * Eigen::MatrixXd::Identity(n, n));
        if (llt.info() != Eigen::Success) {
            throw std::domain_error("GaussianEnsemble: covariance not positive definite");
        }
    }
    ensemble.factor = llt.matrixL();
    return ensemble;
}

namespace {

/// Mean of sample(i, sign) with antithetic pairing folded in per McConfig.
McEstimate run_quadratic(const McConfig& cfg,
                         const std::function<double(std::int64_t, double)>& sample) {
    if (cfg.paths < 2) throw std::invalid_argument("McConfig: need at least 2 paths");
    if (cfg.antithetic) {
        const std::int64_t pairs = cfg.paths / 2;
        McEstimate est = mc_run(pairs, [&](std::int64_t i) {
            return 0.5 * (sample(i, 1.0) + sample(i, -1.0));
        });
        est.paths_used = 2 * pairs;
        return est;
    }
    return mc_run(cfg.paths, [&](std::int64_t i) { return sample(i, 1.0); });
}

}  // namespace

McEstimate mc_gaussian_quadratic(const Eigen::VectorXd& r_diag, const Eigen::MatrixXd& cov,
                                 const McConfig& cfg) {
    const int n = static_cast<int>(r_diag.size());
    if (cov.rows() != n || cov.cols() != n) {
        throw std::invalid_argument("mc_gaussian_quadratic: dimension mismatch");
    }
    if (n == 0 || r_diag.isZero(0.0)) {
        return {1.0, 0.0, cfg.paths};
    }

    const GaussianEnsemble ensemble = GaussianEnsemble::build(cov);

    // Spectrum of I + R cov via the symmetric form I + L^T R L.
    Eigen::MatrixXd sym = ensemble.factor.transpose() * r_diag.asDiagonal() * ensemble.factor;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= -1.0) {
        throw representation_invalid(
            "mc_gaussian_quadratic: I + R cov has nonpositive spectrum (min eig " +
            std::to_string(1.0 + es.eigenvalues().minCoeff()) + ")");
    }

    return run_quadratic(cfg, [&](std::int64_t path, double sign) {
        GaussianStream normals(cfg.seed, path);
        Eigen::VectorXd z(n);
        for (int i = 0; i < n; ++i) z(i) = sign * normals.next();
        const Eigen::VectorXd x = ensemble.factor * z;
        double quad = 0.0;
        for (int i = 0; i < n; ++i) quad += r_diag(i) * x(i) * x(i);
        return std::exp(-0.5 * quad);
    });
}

McEstimate mc_tau_cauchy(const SpectralMeasure& mu, double x, double t, const McConfig& cfg) {
    if (mu.empty()) return {1.0, 0.0, cfg.paths};

    const AdmissibilityReport report = admissibility_check(mu, x, t);
    if (!report.ok) {
        throw representation_invalid("mc_tau_cauchy: measure inadmissible at (x=" +
                                     std::to_string(x) + ", t=" + std::to_string(t) +
                                     "), phi L2 norm " + std::to_string(report.phi_norm));
    }

    const std::vector<MeasureAtom> nodes = discretize_measure(mu);
    const int n = static_cast<int>(nodes.size());
    std::vector<double> kappa(n);
    Eigen::VectorXd r(n);
    for (int i = 0; i < n; ++i) {
        kappa[i] = nodes[i].kappa;
        const double k = nodes[i].kappa;
        r(i) = nodes[i].weight * std::exp(8.0 * k * k * k * t - 2.0 * k * x);
    }
    return mc_gaussian_quadratic(r, cauchy_covariance(kappa), cfg);
}

McEstimate mc_carleman_quadratic(const Eigen::MatrixXd& phi, const McConfig& cfg) {
    const int n = static_cast<int>(phi.rows());
    if (phi.cols() != n) throw std::invalid_argument("mc_carleman_quadratic: phi must be square");
    if (!phi.isApprox(phi.transpose(), 1e-12)) {
        throw std::invalid_argument("mc_carleman_quadratic: phi must be symmetric");
    }
    if (n == 0) return {1.0, 0.0, cfg.paths};

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(phi, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= -1.0) {
        throw representation_invalid("mc_carleman_quadratic: phi has an eigenvalue <= -1");
    }

    const double tr = phi.trace();
    return run_quadratic(cfg, [&](std::int64_t path, double sign) {
        GaussianStream normals(cfg.seed, path);
        Eigen::VectorXd z(n);
        for (int i = 0; i < n; ++i) z(i) = sign * normals.next();
        const double quad = z.dot(phi * z);
        return std::exp(-0.5 * (quad - tr));
    });
}

double carleman_quadratic_target(const Eigen::MatrixXd& phi) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(phi, Eigen::EigenvaluesOnly);
    double target = 1.0;
    for (const double lambda : es.eigenvalues()) {
        if (lambda <= -1.0) {
            throw representation_invalid("carleman_quadratic_target: eigenvalue <= -1");
        }
        target *= std::exp(0.5 * lambda) / std::sqrt(1.0 + lambda);
    }
    return target;
}

}  // namespace kdv
