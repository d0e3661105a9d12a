#include "kdv/soliton.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace kdv {

void ScatteringData::validate() const {
    for (const auto& mode : modes) {
        if (!(mode.c > 0.0) || !(mode.kappa > 0.0)) {
            throw std::invalid_argument("ScatteringData: amplitudes and wavenumbers must be positive");
        }
    }
    for (size_t i = 0; i < modes.size(); ++i) {
        for (size_t j = i + 1; j < modes.size(); ++j) {
            if (modes[i].kappa == modes[j].kappa) {
                throw std::invalid_argument("ScatteringData: wavenumbers must be pairwise distinct");
            }
        }
    }
}

Eigen::MatrixXd soliton_matrix(const ScatteringData& sd, double x, double t) {
    sd.validate();
    const int n = sd.size();
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
    for (int row = 0; row < n; ++row) {
        const double cn = sd.modes[row].c;
        const double kn = sd.modes[row].kappa;
        const double growth = std::exp(8.0 * kn * kn * kn * t);
        for (int col = 0; col < n; ++col) {
            const double km = sd.modes[col].kappa;
            a(row, col) += cn * cn * std::exp(-(km + kn) * x) / (km + kn) * growth;
        }
    }
    return a;
}

double tau_soliton(const ScatteringData& sd, double x, double t) {
    if (sd.modes.empty()) return 1.0;
    return soliton_matrix(sd, x, t).partialPivLu().determinant();
}

double u_soliton(const ScatteringData& sd, double x, double t) {
    if (sd.modes.empty()) return 0.0;
    const int n = sd.size();
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd ax(n, n);
    Eigen::MatrixXd axx(n, n);
    for (int row = 0; row < n; ++row) {
        const double cn = sd.modes[row].c;
        const double kn = sd.modes[row].kappa;
        const double growth = cn * cn * std::exp(8.0 * kn * kn * kn * t);
        for (int col = 0; col < n; ++col) {
            const double ks = sd.modes[col].kappa + kn;
            const double e = growth * std::exp(-ks * x);
            a(row, col) += e / ks;
            ax(row, col) = -e;
            axx(row, col) = ks * e;
        }
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a);
    const Eigen::MatrixXd inv_ax = lu.solve(ax);
    const Eigen::MatrixXd inv_axx = lu.solve(axx);
    return -2.0 * (inv_axx.trace() - (inv_ax * inv_ax).trace());
}

Eigen::MatrixXd cauchy_covariance(const std::vector<double>& kappa) {
    const int n = static_cast<int>(kappa.size());
    for (int i = 0; i < n; ++i) {
        if (!(kappa[i] > 0.0)) {
            throw std::invalid_argument("cauchy_covariance: wavenumbers must be positive");
        }
        for (int j = i + 1; j < n; ++j) {
            if (kappa[i] == kappa[j]) {
                throw std::invalid_argument("cauchy_covariance: wavenumbers must be distinct");
            }
        }
    }
    Eigen::MatrixXd lambda(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            lambda(i, j) = 1.0 / (kappa[i] + kappa[j]);
        }
    }
    return lambda;
}

Eigen::VectorXd gaussian_weight_diagonal(const ScatteringData& sd, double x, double t) {
    const int n = sd.size();
    Eigen::VectorXd r(n);
    for (int i = 0; i < n; ++i) {
        const double k = sd.modes[i].kappa;
        r(i) = sd.modes[i].c * sd.modes[i].c * std::exp(8.0 * k * k * k * t - 2.0 * k * x);
    }
    return r;
}

double tau_gaussian_closed(const ScatteringData& sd, double x, double t) {
    if (sd.modes.empty()) return 1.0;
    sd.validate();
    const int n = sd.size();
    std::vector<double> kappa(n);
    for (int i = 0; i < n; ++i) kappa[i] = sd.modes[i].kappa;
    const Eigen::MatrixXd lambda = cauchy_covariance(kappa);
    const Eigen::VectorXd r = gaussian_weight_diagonal(sd, x, t);
    const Eigen::MatrixXd a =
        Eigen::MatrixXd::Identity(n, n) + r.asDiagonal().toDenseMatrix() * lambda;
    return a.partialPivLu().determinant();
}

void KpScatteringData::validate() const {
    const int n = size();
    if (q.size() != n || m.size() != n) {
        throw std::invalid_argument("KpScatteringData: p, q, m must have equal length");
    }
    if (hierarchy.size() > 16) {
        throw std::invalid_argument("KpScatteringData: at most 16 hierarchy coordinates");
    }
    for (int i = 0; i < n; ++i) {
        if (!(m(i) > 0.0)) {
            throw std::invalid_argument("KpScatteringData: weights m must be positive");
        }
        for (int j = 0; j < n; ++j) {
            if (p(i) == q(j)) {
                throw std::invalid_argument("KpScatteringData: p_i = q_j at (" +
                                            std::to_string(i) + ", " + std::to_string(j) + ")");
            }
        }
    }
}

Eigen::MatrixXd kp_soliton_matrix(const KpScatteringData& kpd) {
    kpd.validate();
    const int n = kpd.size();

    // xi_i = sum_l (p_i^l - q_i^l) x_l over the supplied coordinates.
    Eigen::VectorXd xi = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
        double pp = 1.0;
        double qp = 1.0;
        for (double xl : kpd.hierarchy) {
            pp *= kpd.p(i);
            qp *= kpd.q(i);
            xi(i) += (pp - qp) * xl;
        }
    }

    Eigen::MatrixXd g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g(i, j) = std::sqrt(kpd.m(i) * kpd.m(j)) / (kpd.p(i) - kpd.q(j)) *
                      std::exp(-0.5 * (xi(i) + xi(j)));
        }
    }
    return g;
}

double kp_soliton_tau(const KpScatteringData& kpd) {
    if (kpd.size() == 0) return 1.0;
    const int n = kpd.size();
    const Eigen::MatrixXd g = kp_soliton_matrix(kpd);
    return (Eigen::MatrixXd::Identity(n, n) + g).partialPivLu().determinant();
}

Eigen::MatrixXd kdv_hierarchy_matrix(const Eigen::VectorXd& m, const Eigen::VectorXd& eta,
                                     double x, double t) {
    const int n = static_cast<int>(m.size());
    if (eta.size() != n) {
        throw std::invalid_argument("kdv_hierarchy_matrix: m and eta must have equal length");
    }
    Eigen::MatrixXd g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const double es = eta(i) + eta(j);
            const double ec = eta(i) * eta(i) * eta(i) + eta(j) * eta(j) * eta(j);
            g(i, j) = std::sqrt(m(i) * m(j)) / es * std::exp(-es * x - ec * t);
        }
    }
    return g;
}

double aihara_det(const Eigen::VectorXd& lambda, const Eigen::MatrixXd& C) {
    const int n = static_cast<int>(lambda.size());
    if (C.rows() != n || C.cols() != n) {
        throw std::invalid_argument("aihara_det: dimension mismatch");
    }
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a(i, j) = C(i, j) * std::sinh(lambda(j));
        }
        a(i, i) += std::cosh(lambda(i));
    }
    if (n == 0) return 1.0;
    return a.partialPivLu().determinant();
}

Eigen::MatrixXd cayley_transform(const Eigen::MatrixXd& P, double* condition) {
    const auto n = P.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(id + P);
    if (!lu.isInvertible()) {
        throw std::domain_error("cayley_transform: I + P is singular");
    }
    if (condition != nullptr) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(id + P);
        const auto& sv = svd.singularValues();
        *condition = sv(0) / sv(sv.size() - 1);
    }
    return (id - P) * lu.solve(id);
}

}  // namespace kdv
