#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "kdv/fredholm.hpp"
#include "kdv/mc.hpp"

namespace kdv {

/// One sample path of the N-component Ornstein-Uhlenbeck system
/// d xi_i = dW_i + p_i xi_i ds, xi(0) = 0, on [0, x_end], stored at the
/// steps+1 grid times. Each component is driven by its own stream derived
/// from (seed, path, component). The update uses the exact Gaussian
/// transition, so the grid-point law carries no discretization bias.
struct OuPath {
    double dt = 0.0;
    Eigen::MatrixXd states;  // (steps+1) x N
};
OuPath simulate_ou(const Eigen::VectorXd& p, double x_end, std::int64_t steps,
                   std::uint64_t seed, std::uint64_t path_index = 0);

/// MC estimate of E[exp(-a^2/2 * integral_0^x <c, xi(y)>^2 dy)], the
/// quadratic OU functional at t = 0. The path integral uses the trapezoid
/// rule along each simulated path; the estimate never exceeds 1.
McEstimate ou_quadratic_mc(const Eigen::VectorXd& p, const Eigen::VectorXd& c, double a,
                           double x, const McConfig& cfg);

/// Closed form of the same Laplace transform for any t:
///   (det phi_a(0,t) / det phi_a(x,t))^{1/2} * exp(-x/2 * sum p_i)
/// where phi_a(z,t) = U { cosh(zeta) - sinh(zeta) R^{-1} U^T D U } U^T is
/// built from the eigendecomposition D^2 + a^2 c c^T = U R^2 U^T. Requires
/// that matrix to be positive definite.
double ou_quadratic_closed_form(const Eigen::VectorXd& p, const Eigen::VectorXd& c, double a,
                                double x, double t);

/// The second-chaos integral operator of the same functional (t = 0) on
/// [0,x] x {1..N}:
///   K((v,j),(u,i)) = a^2 c_i c_j/(p_i+p_j) (e^{(p_i+p_j)x} - e^{(p_i+p_j) max(u,v)})
///                    e^{-p_i u} e^{-p_j v}.
/// det(I + K)^{-1/2} equals the two routes above. p_i + p_j = 0 is a pole.
BlockKernelOperator ou_chaos_operator(const Eigen::VectorXd& p, const Eigen::VectorXd& c,
                                      double a, double x, int nodes = kDefaultNodes);

/// Exact trace of that operator:
/// a^2 sum_i c_i^2/(4 p_i^2) (e^{2 p_i x} - 2 p_i x - 1).
double ou_chaos_trace(const Eigen::VectorXd& p, const Eigen::VectorXd& c, double a, double x);

}  // namespace kdv
