#ifndef CORLMC_COVARIANCE_HPP
#define CORLMC_COVARIANCE_HPP

#include <Eigen/Dense>
#include <vector>

#include "corlmc/design.hpp"

namespace corlmc {

// exp(-theta * d^a), theta > 0, 0 < a < 2.
struct PoweredExponential {
    double theta = 1.0;
    double a = 1.0;

    double operator()(double d) const;
    void validate() const;
};

// Linear model of coregionalization: Z_i = sum_k A_ik * Ztilde_k with
// independent unit-variance latent processes Ztilde_k, correlation
// components[k]. Rows of A must have unit norm so Z_i keeps unit variance.
//
// Cor{Z_i1(s1), Z_i2(s2)} = sum_k A_i1k A_i2k components[k](dist).
struct CovarianceSpec {
    Eigen::MatrixXd loadings; // p x r
    std::vector<PoweredExponential> components; // size r

    int p() const { return static_cast<int>(loadings.rows()); }
    int r() const { return static_cast<int>(loadings.cols()); }
    void validate(int design_p) const;
    double correlation(int i1, int i2, double dist) const;

    // One shared component (weight rho_i per variable) plus one idiosyncratic
    // component per variable (weight sqrt(1-rho_i^2)). components must list
    // the shared component first, then one per variable.
    static CovarianceSpec common_idiosyncratic(const std::vector<double>& rho,
                                               const std::vector<PoweredExponential>& comps);

    // Z_i = (Z_0 + Z_i^*)/sqrt(2) with exponential correlations, the simple
    // bivariate structure used throughout for simulation studies. Gives
    // within-variable 0.5{exp(-theta_i h) + exp(-theta_0 h)} and
    // cross-variable 0.5 exp(-theta_0 h).
    static CovarianceSpec bivariate_exponential(double theta0, double theta1, double theta2);
};

// Dense correlation matrix with an eagerly computed Cholesky factor.
class CorrelationMatrix {
  public:
    // Factors S, adding diagonal jitter in steps up to max_jitter if needed.
    // Throws std::runtime_error naming the offending eigenvalue when the
    // matrix is not positive definite even after jitter.
    static CorrelationMatrix from_dense(Eigen::MatrixXd S, double max_jitter = 1e-8);

    // Bordered extension by one row/column: new diagonal 1, off-diagonal
    // column cov. Reuses the existing factor.
    CorrelationMatrix extended(const Eigen::VectorXd& cov, double max_jitter = 1e-8) const;

    int dim() const { return static_cast<int>(sigma_.rows()); }
    const Eigen::MatrixXd& matrix() const { return sigma_; }
    const Eigen::MatrixXd& cholesky() const { return chol_; }
    double log_det() const { return log_det_; }
    double jitter() const { return jitter_; }

    // Sigma^{-1} x through the factor.
    Eigen::VectorXd solve(const Eigen::VectorXd& x) const;

  private:
    CorrelationMatrix() = default;
    Eigen::MatrixXd sigma_;
    Eigen::MatrixXd chol_; // lower triangular L, L L^T = sigma
    double log_det_ = 0.0;
    double jitter_ = 0.0;
};

CorrelationMatrix build_sigma_z(const SpatialDesign& design, const CovarianceSpec& spec);

// log N(x; 0, sigma).
double mvn_logpdf(const Eigen::VectorXd& x, const CorrelationMatrix& sigma);

} // namespace corlmc

#endif
