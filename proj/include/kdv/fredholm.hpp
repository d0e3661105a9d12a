#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "kdv/quadrature.hpp"

namespace kdv {

/// Integral operator (A f)(s) = ∫ K(s,u) f(u) du over the rule's domain.
struct KernelOperator {
    std::function<double(double, double)> kernel;
    QuadratureRule rule;
};

/// Integral operator on the product space [a,b] x {0..blocks-1} carrying
/// Lebesgue x counting measure. The kernel takes ((s,i),(u,j)) flattened as
/// four arguments; blocks index the discrete component.
struct BlockKernelOperator {
    std::function<double(double, int, double, int)> kernel;
    QuadratureRule rule;  // finite rule shared by every block
    int blocks = 1;
};

/// Symmetrized Nystrom matrix M_ij = sqrt(w_i w_j) K(s_i, s_j) together with
/// the flattened node/weight vectors it was built from. Immutable after
/// construction; a symmetric kernel yields a symmetric matrix exactly.
struct DiscretizedOperator {
    Eigen::MatrixXd matrix;
    std::vector<double> nodes;
    std::vector<double> weights;
};

DiscretizedOperator discretize(const KernelOperator& op);
DiscretizedOperator discretize(const BlockKernelOperator& op);

/// det(I + z M) by pivoted LU factorization.
double fredholm_det(const DiscretizedOperator& disc, double z);
double fredholm_det(const KernelOperator& op, double z);
double fredholm_det(const BlockKernelOperator& op, double z);

/// det(I + z M) as the product of (1 + z lambda_k) over the eigenvalues of the
/// symmetrized matrix. Requires a symmetric kernel; kept as an independent
/// route for cross-checking the LU path.
double fredholm_det_eig(const DiscretizedOperator& disc, double z);

/// Truncated Fredholm series 1 + sum_{mu=1}^{order} z^mu e_mu, where e_mu is
/// the mu-fold product-quadrature integral of the order-mu kernel minor.
/// Evaluated through traces of matrix powers (exactly equal to the quadrature
/// sums, with no factorization involved), so it is an arithmetic route
/// independent of fredholm_det. Refused for order > 8.
double fredholm_det_series(const DiscretizedOperator& disc, double z, int order);
double fredholm_det_series(const KernelOperator& op, double z, int order);

/// Trace sum_i w_i K(s_i, s_i).
double trace(const DiscretizedOperator& disc);
double trace(const KernelOperator& op);
double trace(const BlockKernelOperator& op);

/// Carleman regularization det2(I + zA) = det(I + zA) exp(-z Tr A).
double carleman_det2(const DiscretizedOperator& disc, double z);
double carleman_det2(const KernelOperator& op, double z);

/// d/dx log det(I + z A(x)) = Tr( z dA/dx (I + z A)^{-1} ), with the kernel
/// x-derivative taken by central difference of the operator family.
/// All operators produced by the family must share one quadrature rule.
double log_det_x_derivative(const std::function<KernelOperator(double)>& family,
                            double x, double z, double step = 1e-5);

/// Tr(M^n) of the discretized operator, n >= 2. For Volterra kernels the
/// continuum value is 0; the discrete value decays as the rule refines.
double volterra_trace_power(const KernelOperator& op, int n);

/// Weighted sup-norm sup (1+s)^nu (1+u)^nu |K(s,u)| over the node set, plus a
/// flag telling whether the sup is attained away from the outermost nodes.
/// A sup sitting on the outer shell suggests the kernel is not decaying fast
/// enough for the truncation to be trusted.
struct KernelDecayCheck {
    double norm = 0.0;
    bool decaying = true;
};
KernelDecayCheck check_kernel_decay(const KernelOperator& op, double nu = 0.75);

}  // namespace kdv
