#pragma once

#include "kdv/grid_field.hpp"

namespace kdv {

/// Constant multiplying the second x-derivative of log tau:
///   kdv_minus2        u = -2 d^2/dx^2 log tau      (u_t - 6uu_x + u_xxx = 0)
///   kdv4_minus4       u = -4 d^2/dx^2 log tau      (u_t = 3/2 uu_x + 1/4 u_xxx)
///   expectation_plus4 u = +4 d^2/dx^2 log E        (E = tau^{-1/2})
enum class TauConvention { kdv_minus2, kdv4_minus4, expectation_plus4 };

/// Second x-derivative of log tau by the 5-point central stencil, scaled by
/// the convention constant. tau must be strictly positive; output is trimmed
/// by two columns on each x-boundary.
GridField u_from_tau(const GridField& tau, TauConvention convention);

/// Pointwise u_t - 6 u u_x + u_xxx by central differences (u_xxx by the
/// 7-point stencil). Trimmed by 3 in x and 1 in t; raw, unnormalized values.
GridField kdv_residual(const GridField& u);

/// Pointwise u_t - 3/2 u u_x - 1/4 u_xxx, same stencils and trimming.
GridField kdv4_residual(const GridField& u);

/// max over the trimmed grid of |residual| / max(1, sum of |term| magnitudes):
/// the grid-portable relative residual used by tolerance checks.
double kdv_relative_residual(const GridField& u);
double kdv4_relative_residual(const GridField& u);

/// tau tau_xt - tau_x tau_t + tau tau_xxxx - 4 tau_x tau_xxx + 3 tau_xx^2,
/// each derivative by its central stencil (tau_xxxx by the 9-point one),
/// normalized pointwise by max(1, sum of |term| magnitudes). Trimmed by 4 in
/// x and 1 in t.
GridField hirota_residual(const GridField& tau);

/// D_t D_x (a . b) = a_xt b + a b_xt - a_t b_x - a_x b_t by central
/// differences; both fields must share one grid. Trimmed by 1 in x and t.
GridField hirota_bilinear_xt(const GridField& a, const GridField& b);

}  // namespace kdv
