#pragma once

#include <Eigen/Dense>

#include "kdv/mc.hpp"
#include "kdv/spectral_measure.hpp"

namespace kdv {

/// Cholesky-factored sampler for a centered Gaussian with the given
/// covariance. If the plain factorization fails, one jitter of
/// 1e-12 (1 + ||cov||) I is added and recorded; a second failure throws.
struct GaussianEnsemble {
    Eigen::MatrixXd covariance;
    Eigen::MatrixXd factor;  // lower triangular, factor * factor^T = covariance + jitter I
    double jitter = 0.0;

    static GaussianEnsemble build(const Eigen::MatrixXd& covariance);
};

/// E[exp(-X' R X / 2)] for X ~ N(0, cov) and diagonal R (given as its
/// diagonal). Target value det(I + R cov)^{-1/2}. Throws
/// representation_invalid when I + R cov has an eigenvalue <= 0, in which
/// case the expectation need not exist.
McEstimate mc_gaussian_quadratic(const Eigen::VectorXd& r_diag, const Eigen::MatrixXd& cov,
                                 const McConfig& cfg);

/// E[exp(-1/2 integral of exp(8 k^3 t - 2 k x) X_k^2 dmu(k))] where X is the
/// centered Gaussian process with Cauchy covariance 1/(k1+k2), reduced to the
/// measure's atom/quadrature nodes. Equals tau_poppe(mu,x,t)^{-1/2} in the
/// admissible region. Requires admissibility_check ok.
McEstimate mc_tau_cauchy(const SpectralMeasure& mu, double x, double t, const McConfig& cfg);

/// E[exp(-(Z' phi Z - Tr phi)/2)] for Z standard normal and symmetric phi:
/// the finite-dimensional centered Gaussian chaos whose Laplace transform is
/// the inverse square root of the Carleman determinant. Requires all
/// eigenvalues of phi above -1.
McEstimate mc_carleman_quadratic(const Eigen::MatrixXd& phi, const McConfig& cfg);

/// prod (1 + lambda_i)^{-1/2} exp(lambda_i / 2) over the eigenvalues of phi:
/// the exact value matched by mc_carleman_quadratic.
double carleman_quadratic_target(const Eigen::MatrixXd& phi);

}  // namespace kdv
