#pragma once

#include <Eigen/Dense>
#include <vector>

namespace kdv {

/// One soliton mode: amplitude c > 0 and wavenumber kappa > 0.
struct SolitonMode {
    double c;
    double kappa;
};

/// Scattering data for the N-soliton tau function. Wavenumbers must be
/// pairwise distinct.
struct ScatteringData {
    std::vector<SolitonMode> modes;

    [[nodiscard]] int size() const { return static_cast<int>(modes.size()); }
    void validate() const;
};

/// A(x,t) with A_nm = delta_nm + c_n^2 exp(-(kappa_m+kappa_n)x) / (kappa_m+kappa_n)
/// * exp(8 kappa_n^3 t).
Eigen::MatrixXd soliton_matrix(const ScatteringData& sd, double x, double t);

/// tau(x,t) = det A(x,t); strictly positive, 1 for empty data.
double tau_soliton(const ScatteringData& sd, double x, double t);

/// u(x,t) = -2 d^2/dx^2 log tau, evaluated in closed form through Jacobi's
/// formula with the exact x-derivatives of the soliton matrix:
///   u = -2 [ Tr(A^{-1} A_xx) - Tr((A^{-1} A_x)^2) ].
/// Free of finite-difference noise, so it serves as the reference field for
/// residual studies.
double u_soliton(const ScatteringData& sd, double x, double t);

/// Cauchy covariance matrix Lambda_mn = 1/(kappa_m + kappa_n); symmetric
/// positive definite for distinct positive wavenumbers.
Eigen::MatrixXd cauchy_covariance(const std::vector<double>& kappa);

/// Diagonal of R = diag{ c_n^2 exp(8 kappa_n^3 t - 2 kappa_n x) }.
Eigen::VectorXd gaussian_weight_diagonal(const ScatteringData& sd, double x, double t);

/// tau(x,t) = det(I + R Lambda); equal to tau_soliton by det(I+AB)=det(I+BA).
/// The Gaussian expectation E exp(-X'RX/2) is the inverse square root of this.
double tau_gaussian_closed(const ScatteringData& sd, double x, double t);

/// Scattering data for the hierarchy soliton matrix: p_i != q_j for all pairs,
/// m_i > 0, finitely many hierarchy coordinates x_1..x_K (K <= 16).
struct KpScatteringData {
    Eigen::VectorXd p;
    Eigen::VectorXd q;
    Eigen::VectorXd m;
    std::vector<double> hierarchy;  // x_1, x_2, ...; trailing coordinates are 0

    [[nodiscard]] int size() const { return static_cast<int>(p.size()); }
    void validate() const;
};

/// G_ij = sqrt(m_i m_j)/(p_i - q_j) * exp(-(xi_i + xi_j)/2) with
/// xi_i = sum_l (p_i^l - q_i^l) x_l.
Eigen::MatrixXd kp_soliton_matrix(const KpScatteringData& kpd);

/// det(I + G); 1 for empty data.
double kp_soliton_tau(const KpScatteringData& kpd);

/// G of the hierarchy-normalized N-soliton:
/// G_ij = sqrt(m_i m_j)/(eta_i + eta_j) * exp(-(eta_i+eta_j)x - (eta_i^3+eta_j^3)t).
/// This is the KdV reduction p_i = eta_i, q_i = -eta_i, x_1 = x, x_3 = t.
Eigen::MatrixXd kdv_hierarchy_matrix(const Eigen::VectorXd& m, const Eigen::VectorXd& eta,
                                     double x, double t);

/// det(cosh(Lambda) + C sinh(Lambda)) for diagonal Lambda (given as its
/// diagonal); cosh/sinh are applied entrywise, which is exact for diagonals.
double aihara_det(const Eigen::VectorXd& lambda, const Eigen::MatrixXd& C);

/// Cayley transform C = (I-P)(I+P)^{-1}; involutive. If `condition` is
/// non-null it receives the 2-norm condition number of I+P.
Eigen::MatrixXd cayley_transform(const Eigen::MatrixXd& P, double* condition = nullptr);

}  // namespace kdv
