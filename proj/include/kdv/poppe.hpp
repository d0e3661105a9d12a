#pragma once

#include <string>

#include "kdv/fredholm.hpp"
#include "kdv/spectral_measure.hpp"

namespace kdv {

/// F(x,t) = integral of exp(8 kappa^3 t - kappa x) over the measure. Solves
/// the linearized flow F_t + 8 F_xxx = 0. Exponents above 700 raise an
/// overflow error naming the offending (kappa, x, t).
double F_eval(const SpectralMeasure& mu, double x, double t);

/// Central-difference estimate of F_t + 8 F_xxx at (x,t); vanishes to O(h^2).
double linearized_residual(const SpectralMeasure& mu, double x, double t, double h);

/// L2(R_+^2) norm of the kernel phi(a,b) = F(a+b+2x, t). For a discretized
/// measure this is the closed double sum
///   sqrt( sum_{j,k} m_j m_k exp(8(k_j^3+k_k^3)t - 2(k_j+k_k)x) / (k_j+k_k)^2 ).
double phi_l2_norm(const SpectralMeasure& mu, double x, double t);

/// Convergence bookkeeping for the measure at (x,t): the near-zero integral
/// of (1/kappa) exp(8 kappa^3 t - 2 kappa x) over (0,1], the tail integral of
/// (1/sqrt(kappa)) over [1,inf), and the kernel L2 norm. ok requires both
/// integrals finite and the L2 norm strictly below 1. Divergence and overflow
/// are reported in the fields (as +inf), never thrown.
struct AdmissibilityReport {
    double near_zero = 0.0;
    double tail = 0.0;
    double phi_norm = 0.0;
    bool ok = false;
};
AdmissibilityReport admissibility_check(const SpectralMeasure& mu, double x, double t);

/// The tau-generating operator: kernel phi(a,b) = F(a+b+2x, t) on [0,inf),
/// discretized by an n-node rational-map rule. Symmetric in (a,b).
KernelOperator poppe_operator(const SpectralMeasure& mu, double x, double t,
                              int nodes = kDefaultNodes,
                              double map_length = kDefaultMapLength);

/// tau(x,t;lambda) = det(I + lambda * operator). lambda defaults to 1.
double tau_poppe(const SpectralMeasure& mu, double x, double t, double lambda = 1.0,
                 int nodes = kDefaultNodes);

/// tau_poppe plus admissibility/decay diagnostics; inadmissible points still
/// produce a value, with the warning attached.
struct TauResult {
    double value = 0.0;
    bool admissible = false;
    std::string warning;  // empty when clean
};
TauResult tau_poppe_checked(const SpectralMeasure& mu, double x, double t,
                            double lambda = 1.0, int nodes = kDefaultNodes);

}  // namespace kdv
