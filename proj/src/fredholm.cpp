#include "kdv/fredholm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kdv {

namespace {

void require_finite(double v, double s, double u) {
    if (!std::isfinite(v)) {
        throw std::runtime_error("discretize: kernel produced non-finite value at (" +
                                 std::to_string(s) + ", " + std::to_string(u) + ")");
    }
}

}  // namespace

DiscretizedOperator discretize(const KernelOperator& op) {
    const int n = op.rule.size();
    std::vector<double> sqw(n);
    for (int i = 0; i < n; ++i) sqw[i] = std::sqrt(op.rule.weights[i]);

    DiscretizedOperator disc;
    disc.nodes = op.rule.nodes;
    disc.weights = op.rule.weights;
    disc.matrix.resize(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = op.kernel(op.rule.nodes[i], op.rule.nodes[j]);
            require_finite(v, op.rule.nodes[i], op.rule.nodes[j]);
            disc.matrix(i, j) = sqw[i] * sqw[j] * v;
        }
    }
    return disc;
}

DiscretizedOperator discretize(const BlockKernelOperator& op) {
    const int n = op.rule.size();
    const int nb = op.blocks;
    const int dim = n * nb;
    std::vector<double> sqw(n);
    for (int i = 0; i < n; ++i) sqw[i] = std::sqrt(op.rule.weights[i]);

    DiscretizedOperator disc;
    disc.nodes.resize(dim);
    disc.weights.resize(dim);
    disc.matrix.resize(dim, dim);
    // Flattened index = block * n + node; counting-measure weight is 1.
    for (int bi = 0; bi < nb; ++bi) {
        for (int i = 0; i < n; ++i) {
            disc.nodes[bi * n + i] = op.rule.nodes[i];
            disc.weights[bi * n + i] = op.rule.weights[i];
        }
    }
    for (int bi = 0; bi < nb; ++bi) {
        for (int i = 0; i < n; ++i) {
            for (int bj = 0; bj < nb; ++bj) {
                for (int j = 0; j < n; ++j) {
                    const double v =
                        op.kernel(op.rule.nodes[i], bi, op.rule.nodes[j], bj);
                    require_finite(v, op.rule.nodes[i], op.rule.nodes[j]);
                    disc.matrix(bi * n + i, bj * n + j) = sqw[i] * sqw[j] * v;
                }
            }
        }
    }
    return disc;
}

double fredholm_det(const DiscretizedOperator& disc, double z) {
    if (z == 0.0) return 1.0;
    const auto dim = disc.matrix.rows();
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(dim, dim) + z * disc.matrix;
    return a.partialPivLu().determinant();
}

double fredholm_det(const KernelOperator& op, double z) {
    return fredholm_det(discretize(op), z);
}

double fredholm_det(const BlockKernelOperator& op, double z) {
    return fredholm_det(discretize(op), z);
}

double fredholm_det_eig(const DiscretizedOperator& disc, double z) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(disc.matrix,
                                                      Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw std::runtime_error("fredholm_det_eig: eigenvalue decomposition failed");
    }
    double det = 1.0;
    for (const double lambda : es.eigenvalues()) det *= 1.0 + z * lambda;
    return det;
}

double fredholm_det_series(const DiscretizedOperator& disc, double z, int order) {
    if (order < 1 || order > 8) {
        throw std::invalid_argument(
            "fredholm_det_series: order must be in [1, 8], got " + std::to_string(order));
    }
    if (z == 0.0) return 1.0;

    // Power traces p_k = Tr(M^k) are exactly the k-fold product-quadrature
    // integrals of the cyclic kernel products; the recursion below rebuilds
    // the series coefficients from them (Plemelj-Smithies).
    std::vector<double> p(order + 1, 0.0);
    Eigen::MatrixXd power = disc.matrix;
    p[1] = power.trace();
    for (int k = 2; k <= order; ++k) {
        power = power * disc.matrix;
        p[k] = power.trace();
    }

    std::vector<double> coeff(order + 1, 0.0);
    coeff[0] = 1.0;
    for (int mu = 1; mu <= order; ++mu) {
        double acc = 0.0;
        double sign = 1.0;
        for (int k = 1; k <= mu; ++k) {
            acc += sign * p[k] * coeff[mu - k];
            sign = -sign;
        }
        coeff[mu] = acc / mu;
    }

    double result = 0.0;
    double zpow = 1.0;
    for (int mu = 0; mu <= order; ++mu) {
        result += zpow * coeff[mu];
        zpow *= z;
    }
    return result;
}

double fredholm_det_series(const KernelOperator& op, double z, int order) {
    return fredholm_det_series(discretize(op), z, order);
}

double trace(const DiscretizedOperator& disc) { return disc.matrix.trace(); }

double trace(const KernelOperator& op) {
    double acc = 0.0;
    for (int i = 0; i < op.rule.size(); ++i) {
        const double s = op.rule.nodes[i];
        const double v = op.kernel(s, s);
        require_finite(v, s, s);
        acc += op.rule.weights[i] * v;
    }
    return acc;
}

double trace(const BlockKernelOperator& op) {
    double acc = 0.0;
    for (int b = 0; b < op.blocks; ++b) {
        for (int i = 0; i < op.rule.size(); ++i) {
            const double s = op.rule.nodes[i];
            const double v = op.kernel(s, b, s, b);
            require_finite(v, s, s);
            acc += op.rule.weights[i] * v;
        }
    }
    return acc;
}

double carleman_det2(const DiscretizedOperator& disc, double z) {
    return fredholm_det(disc, z) * std::exp(-z * trace(disc));
}

double carleman_det2(const KernelOperator& op, double z) {
    return carleman_det2(discretize(op), z);
}

double log_det_x_derivative(const std::function<KernelOperator(double)>& family,
                            double x, double z, double step) {
    if (z == 0.0) return 0.0;

    const DiscretizedOperator at_x = discretize(family(x));
    const DiscretizedOperator plus = discretize(family(x + step));
    const DiscretizedOperator minus = discretize(family(x - step));
    if (plus.matrix.rows() != at_x.matrix.rows() ||
        minus.matrix.rows() != at_x.matrix.rows()) {
        throw std::invalid_argument(
            "log_det_x_derivative: operator family changed discretization size");
    }

    const auto dim = at_x.matrix.rows();
    Eigen::MatrixXd resolvent_arg = Eigen::MatrixXd::Identity(dim, dim) + z * at_x.matrix;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(resolvent_arg);
    lu.setThreshold(1e-10);  // pivots this far below the largest are noise
    if (!lu.isInvertible()) {
        throw std::domain_error("log_det_x_derivative: singular resolvent I + zA");
    }
    Eigen::MatrixXd dm = (z / (2.0 * step)) * (plus.matrix - minus.matrix);
    return lu.solve(dm).trace();
}

double volterra_trace_power(const KernelOperator& op, int n) {
    if (n < 2) {
        throw std::invalid_argument("volterra_trace_power: power must be >= 2");
    }
    const DiscretizedOperator disc = discretize(op);
    Eigen::MatrixXd power = disc.matrix;
    for (int k = 1; k < n; ++k) power = power * disc.matrix;
    return power.trace();
}

KernelDecayCheck check_kernel_decay(const KernelOperator& op, double nu) {
    const int n = op.rule.size();
    KernelDecayCheck check;
    int arg_i = 0;
    int arg_j = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double s = op.rule.nodes[i];
            const double u = op.rule.nodes[j];
            const double v =
                std::pow(1.0 + s, nu) * std::pow(1.0 + u, nu) * std::abs(op.kernel(s, u));
            if (v > check.norm) {
                check.norm = v;
                arg_i = i;
                arg_j = j;
            }
        }
    }
    // Sup attained on the outer shell of a truncated domain means the decay
    // has not set in by the last nodes.
    const int shell = std::max(1, (3 * n) / 4);
    check.decaying = (arg_i < shell && arg_j < shell) || check.norm == 0.0;
    return check;
}

}  // namespace kdv
