#ifndef CORLMC_JOINT_HPP
#define CORLMC_JOINT_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <vector>

#include "corlmc/covariance.hpp"
#include "corlmc/design.hpp"
#include "corlmc/margins.hpp"
#include "corlmc/quadrature.hpp"

namespace corlmc {

struct degenerate_density_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Membership of the joint vector's coordinates in the two variables' blocks.
// Coordinates may appear in any order; idx1 and idx2 partition 0..m-1.
struct BlockLayout {
    std::vector<int> idx1;
    std::vector<int> idx2;

    static BlockLayout contiguous(int n1, int n2);
    int dim() const { return static_cast<int>(idx1.size() + idx2.size()); }
};

// Joint density of the bivariate model at a fixed parameter set.
//
// The latent part W* = Z + a0U*E0U - a0L*E0L (common factors only) has the
// closed form
//   f*(w) = K_w exp{(c1^2 c22 + 2 c1 c2 c12 + c2^2 c11)/(2 c_delta)}
//             Phi_{rho*}((c1 c22 + c2 c12)/sqrt(c_delta c22),
//                        (c1 c12 + c2 c11)/sqrt(c_delta c11)),
// with rho* = c12/sqrt(c11 c22) and the c/s constants assembled from
// Sigma^{-1} block sums; all of it collapses to the plain Gaussian density
// when both common factors vanish. The full density convolves f* with the
// idiosyncratic factor differences V_i = a_i^U E_i^U - a_i^L E_i^L over
// Gauss-Legendre nodes mapped to each exponential half-line, evaluated in
// log space.
class JointDensity {
  public:
    JointDensity(CorrelationMatrix sigma, BlockLayout layout, ModelLoadings loadings,
                 int quad_nodes = 30);

    double wstar_logpdf(const Eigen::VectorXd& w) const;
    double logpdf(const Eigen::VectorXd& w) const;

    const CorrelationMatrix& sigma() const { return sigma_; }
    const ModelLoadings& loadings() const { return loadings_; }

  private:
    struct Projection {
        double s1, s2, qf;
    };
    struct HalfLine {
        double sign;
        HalfLineRule rule;
    };

    Projection project(const Eigen::VectorXd& w) const;
    double wstar_from(const Projection& p) const;
    Projection shift(const Projection& p, double v1, double v2) const;

    CorrelationMatrix sigma_;
    BlockLayout layout_;
    ModelLoadings loadings_;

    bool gaussian_wstar_ = false;
    double s11_ = 0.0, s22_ = 0.0, s12_ = 0.0;
    double c11_ = 0.0, c22_ = 0.0, c12_ = 0.0, cdelta_ = 0.0, rho_star_ = 0.0;
    double log_kw_const_ = 0.0;  // (1 - m/2) log(2pi) - 0.5 (log c_delta + log det Sigma)
    double log_gauss_const_ = 0.0;

    std::vector<HalfLine> sides1_, sides2_;
    double log_fv_norm1_ = 0.0, log_fv_norm2_ = 0.0;
};

// Convenience wrappers matching the per-call signatures. w stacks variable 1's
// n coordinates first, then variable 2's.
double wstar_logpdf(const Eigen::VectorXd& w, const SpatialDesign& design,
                    const CovarianceSpec& spec, const ModelLoadings& loadings);
double joint_logpdf(const Eigen::VectorXd& w1, const Eigen::VectorXd& w2,
                    const SpatialDesign& design, const CovarianceSpec& spec,
                    const ModelLoadings& loadings, int quad_nodes = 30);
double copula_logdensity(const Eigen::VectorXd& u1, const Eigen::VectorXd& u2,
                         const SpatialDesign& design, const CovarianceSpec& spec,
                         const ModelLoadings& loadings, int quad_nodes = 30);

} // namespace corlmc

#endif
