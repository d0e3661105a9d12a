#pragma once

#include <functional>
#include <vector>

namespace kdv {

enum class Domain {
    finite,         // [a, b]
    semi_infinite,  // [0, inf), reached through a rational map
};

/// A fixed quadrature rule: strictly increasing nodes with positive weights.
///
/// Rules are immutable values; every constructor below is deterministic, so
/// identical inputs yield bit-identical nodes and weights.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    Domain domain = Domain::finite;
    double a = -1.0;         // left endpoint (finite domains; 0 for semi-infinite)
    double b = 1.0;          // right endpoint (finite domains only)
    double map_length = 0.0; // L parameter of the rational map (semi-infinite only)

    [[nodiscard]] int size() const { return static_cast<int>(nodes.size()); }
};

inline constexpr int kDefaultNodes = 64;
inline constexpr double kDefaultMapLength = 1.0;

/// Gauss-Legendre rule with n points on [-1, 1]. Exact for polynomials up to
/// degree 2n-1. Requires 1 <= n <= 512.
QuadratureRule gauss_rule(int n);

/// Affine image of a [-1, 1] rule on [a, b]; weights scaled by (b-a)/2.
QuadratureRule map_to_interval(const QuadratureRule& rule, double a, double b);

/// Image of a [-1, 1] rule on [0, inf) under s = L(1+t)/(1-t), with the
/// Jacobian folded into the weights. Converges for integrands decaying at
/// least like (1+s)^(-2*nu) with nu > 1/2; L tunes where nodes cluster.
QuadratureRule map_semi_infinite(const QuadratureRule& rule, double L);

/// Weighted sum of f over the rule's nodes.
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

}  // namespace kdv
