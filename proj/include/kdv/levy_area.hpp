#pragma once

#include <Eigen/Dense>

#include "kdv/mc.hpp"

namespace kdv {

/// MC estimate of E[exp(S_hat(i))] where, for n independent planar Brownian
/// motions on [0,1] with areas S^l,
///   S_hat(i) = i sum_l lambda_l S^l + i <L C^- L W_1^1, W_1^2>
///              - 1/2 sum_{k=1,2} <L C^+ L W_1^k, W_1^k>,
/// L = Lambda^{1/2}, C^+/- the symmetric/skew parts of C. Areas use the
/// left-point (Ito) sum over cfg.steps increments; steps >= 500 keeps the
/// discretization bias below statistical resolution. Target value
/// det(cosh Lambda + C sinh Lambda)^{-1}.
ComplexMcEstimate mc_levy_area(const Eigen::VectorXd& lambda, const Eigen::MatrixXd& C,
                               const McConfig& cfg);

/// Lambda and C realizing the N-soliton tau of the hierarchy-normalized KdV
/// through the area functional: lambda_l = eta_l x + eta_l^3 t - log(m_l)/2
/// and C the Cayley transform of P = (1/(eta_i + eta_j)). All lambda_l must
/// come out positive.
struct AreaParams {
    Eigen::VectorXd lambda;
    Eigen::MatrixXd C;
};
AreaParams area_params_from_kdv(const Eigen::VectorXd& eta, const Eigen::VectorXd& m,
                                double x, double t);

}  // namespace kdv
