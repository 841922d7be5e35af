#include "corlmc/covariance.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace corlmc {

double PoweredExponential::operator()(double d) const {
    if (d == 0.0) return 1.0;
    return std::exp(-theta * std::pow(d, a));
}

void PoweredExponential::validate() const {
    if (!(theta > 0.0))
        throw std::invalid_argument("PoweredExponential: theta must be > 0");
    if (!(a > 0.0 && a < 2.0))
        throw std::invalid_argument("PoweredExponential: exponent must be in (0,2)");
}

void CovarianceSpec::validate(int design_p) const {
    if (p() != design_p)
        throw std::invalid_argument("CovarianceSpec: loading rows do not match design p");
    if (r() < 1 || static_cast<int>(components.size()) != r())
        throw std::invalid_argument("CovarianceSpec: need one correlation component per column");
    for (const auto& c : components) c.validate();
    for (int i = 0; i < p(); ++i) {
        double s = loadings.row(i).squaredNorm();
        if (std::fabs(s - 1.0) > 1e-8)
            throw std::invalid_argument("CovarianceSpec: loading row " + std::to_string(i) +
                                        " must have unit norm, got squared norm " + std::to_string(s));
    }
}

double CovarianceSpec::correlation(int i1, int i2, double dist) const {
    double s = 0.0;
    for (int k = 0; k < r(); ++k)
        s += loadings(i1, k) * loadings(i2, k) * components[k](dist);
    return s;
}

CovarianceSpec CovarianceSpec::common_idiosyncratic(const std::vector<double>& rho,
                                                    const std::vector<PoweredExponential>& comps) {
    const int p = static_cast<int>(rho.size());
    if (static_cast<int>(comps.size()) != p + 1)
        throw std::invalid_argument("common_idiosyncratic: need 1 shared + p idiosyncratic components");
    CovarianceSpec spec;
    spec.loadings = Eigen::MatrixXd::Zero(p, p + 1);
    for (int i = 0; i < p; ++i) {
        if (std::fabs(rho[i]) > 1.0)
            throw std::invalid_argument("common_idiosyncratic: |rho| must be <= 1");
        spec.loadings(i, 0) = rho[i];
        spec.loadings(i, i + 1) = std::sqrt(1.0 - rho[i] * rho[i]);
    }
    spec.components = comps;
    return spec;
}

CovarianceSpec CovarianceSpec::bivariate_exponential(double theta0, double theta1, double theta2) {
    const double w = 1.0 / std::sqrt(2.0);
    return common_idiosyncratic({w, w}, {PoweredExponential{theta0, 1.0},
                                         PoweredExponential{theta1, 1.0},
                                         PoweredExponential{theta2, 1.0}});
}

CorrelationMatrix CorrelationMatrix::from_dense(Eigen::MatrixXd S, double max_jitter) {
    if (S.rows() != S.cols()) throw std::invalid_argument("CorrelationMatrix: matrix not square");
    CorrelationMatrix out;
    double jitter = 0.0;
    for (;;) {
        Eigen::MatrixXd trial = S;
        if (jitter > 0.0) trial.diagonal().array() += jitter;
        Eigen::LLT<Eigen::MatrixXd> llt(trial);
        if (llt.info() == Eigen::Success) {
            out.sigma_ = std::move(trial);
            out.chol_ = llt.matrixL();
            out.log_det_ = 2.0 * out.chol_.diagonal().array().log().sum();
            out.jitter_ = jitter;
            return out;
        }
        jitter = (jitter == 0.0) ? 1e-12 : jitter * 10.0;
        if (jitter > max_jitter) {
            double lam = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(S)
                             .eigenvalues().minCoeff();
            std::ostringstream msg;
            msg << "CorrelationMatrix: not positive definite after jitter "
                << max_jitter << ", smallest eigenvalue " << lam;
            throw std::runtime_error(msg.str());
        }
    }
}

CorrelationMatrix CorrelationMatrix::extended(const Eigen::VectorXd& cov, double max_jitter) const {
    const int m = dim();
    if (cov.size() != m) throw std::invalid_argument("extended: border size mismatch");
    Eigen::VectorXd y = chol_.triangularView<Eigen::Lower>().solve(cov);
    double d2 = 1.0 - y.squaredNorm();
    if (d2 <= 0.0) {
        if (d2 > -max_jitter)
            d2 = max_jitter;
        else
            throw std::runtime_error("CorrelationMatrix::extended: bordered matrix not positive "
                                     "definite, Schur complement " + std::to_string(d2));
    }
    CorrelationMatrix out;
    out.sigma_.resize(m + 1, m + 1);
    out.sigma_.topLeftCorner(m, m) = sigma_;
    out.sigma_.topRightCorner(m, 1) = cov;
    out.sigma_.bottomLeftCorner(1, m) = cov.transpose();
    out.sigma_(m, m) = 1.0;
    out.chol_ = Eigen::MatrixXd::Zero(m + 1, m + 1);
    out.chol_.topLeftCorner(m, m) = chol_;
    out.chol_.block(m, 0, 1, m) = y.transpose();
    out.chol_(m, m) = std::sqrt(d2);
    out.log_det_ = log_det_ + std::log(d2);
    out.jitter_ = jitter_;
    return out;
}

Eigen::VectorXd CorrelationMatrix::solve(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y = chol_.triangularView<Eigen::Lower>().solve(x);
    return chol_.transpose().triangularView<Eigen::Upper>().solve(y);
}

CorrelationMatrix build_sigma_z(const SpatialDesign& design, const CovarianceSpec& spec) {
    spec.validate(design.p());
    const int p = design.p();
    const int n = design.n();
    Eigen::MatrixXd S(p * n, p * n);
    for (int i1 = 0; i1 < p; ++i1)
        for (int i2 = 0; i2 < p; ++i2)
            for (int j1 = 0; j1 < n; ++j1)
                for (int j2 = 0; j2 < n; ++j2)
                    S(i1 * n + j1, i2 * n + j2) =
                        spec.correlation(i1, i2, design.distances()(j1, j2));
    return CorrelationMatrix::from_dense(std::move(S));
}

double mvn_logpdf(const Eigen::VectorXd& x, const CorrelationMatrix& sigma) {
    if (x.size() != sigma.dim()) throw std::invalid_argument("mvn_logpdf: dimension mismatch");
    constexpr double log_2pi = 1.8378770664093454835606594728112353;
    Eigen::VectorXd t = sigma.solve(x);
    return -0.5 * (x.size() * log_2pi + sigma.log_det() + x.dot(t));
}

} // namespace corlmc
