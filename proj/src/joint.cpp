#include "corlmc/joint.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "corlmc/normal.hpp"

namespace corlmc {

namespace {
constexpr double log_2pi = 1.8378770664093454835606594728112353;
constexpr double neg_inf = -std::numeric_limits<double>::infinity();

double log_sum_exp(const std::vector<double>& terms) {
    double mx = neg_inf;
    for (double t : terms) mx = std::max(mx, t);
    if (!std::isfinite(mx)) return mx;
    double s = 0.0;
    for (double t : terms) s += std::exp(t - mx);
    return mx + std::log(s);
}
} // namespace

BlockLayout BlockLayout::contiguous(int n1, int n2) {
    BlockLayout out;
    out.idx1.resize(n1);
    out.idx2.resize(n2);
    for (int j = 0; j < n1; ++j) out.idx1[j] = j;
    for (int j = 0; j < n2; ++j) out.idx2[j] = n1 + j;
    return out;
}

JointDensity::JointDensity(CorrelationMatrix sigma, BlockLayout layout, ModelLoadings loadings,
                           int quad_nodes)
    : sigma_(std::move(sigma)), layout_(std::move(layout)), loadings_(std::move(loadings)) {
    if (loadings_.size() != 2)
        throw std::invalid_argument("JointDensity: bivariate only, need loadings for 2 variables");
    if (layout_.dim() != sigma_.dim())
        throw std::invalid_argument("JointDensity: layout does not match sigma dimension");
    for (const auto& lo : loadings_) lo.validate();

    const int m = sigma_.dim();
    const FactorLoadings& l1 = loadings_[0];
    const FactorLoadings& l2 = loadings_[1];

    Eigen::VectorXd e1 = Eigen::VectorXd::Zero(m), e2 = Eigen::VectorXd::Zero(m);
    for (int j : layout_.idx1) e1[j] = 1.0;
    for (int j : layout_.idx2) e2[j] = 1.0;
    Eigen::VectorXd q1 = sigma_.solve(e1), q2 = sigma_.solve(e2);
    s11_ = e1.dot(q1);
    s22_ = e2.dot(q2);
    s12_ = e1.dot(q2);

    log_gauss_const_ = -0.5 * (m * log_2pi + sigma_.log_det());

    gaussian_wstar_ = (l1.alpha0_U == 0.0 && l2.alpha0_U == 0.0 && l1.alpha0_L == 0.0 &&
                       l2.alpha0_L == 0.0);
    if (!gaussian_wstar_) {
        c11_ = l1.alpha0_U * l1.alpha0_U * s11_ + 2.0 * l1.alpha0_U * l2.alpha0_U * s12_ +
               l2.alpha0_U * l2.alpha0_U * s22_;
        c22_ = l1.alpha0_L * l1.alpha0_L * s11_ + 2.0 * l1.alpha0_L * l2.alpha0_L * s12_ +
               l2.alpha0_L * l2.alpha0_L * s22_;
        c12_ = l1.alpha0_U * l1.alpha0_L * s11_ +
               (l1.alpha0_U * l2.alpha0_L + l1.alpha0_L * l2.alpha0_U) * s12_ +
               l2.alpha0_U * l2.alpha0_L * s22_;
        cdelta_ = c11_ * c22_ - c12_ * c12_;
        if (!(cdelta_ > 0.0)) {
            std::ostringstream msg;
            msg << "JointDensity: degenerate common-factor quadratic form, c_delta = " << cdelta_
                << " for loadings a10U=" << l1.alpha0_U << " a20U=" << l2.alpha0_U
                << " a10L=" << l1.alpha0_L << " a20L=" << l2.alpha0_L;
            throw degenerate_density_error(msg.str());
        }
        rho_star_ = c12_ / std::sqrt(c11_ * c22_);
        log_kw_const_ = (1.0 - 0.5 * m) * log_2pi - 0.5 * (std::log(cdelta_) + sigma_.log_det());
    }

    QuadratureRule rule(quad_nodes);
    auto make_sides = [&rule](const FactorLoadings& lo, std::vector<HalfLine>& sides,
                              double& log_norm) {
        if (lo.alpha_U > 0.0) sides.push_back(HalfLine{+1.0, HalfLineRule(rule, lo.alpha_U)});
        if (lo.alpha_L > 0.0) sides.push_back(HalfLine{-1.0, HalfLineRule(rule, lo.alpha_L)});
        if (!sides.empty()) log_norm = -std::log(lo.alpha_U + lo.alpha_L);
    };
    make_sides(l1, sides1_, log_fv_norm1_);
    make_sides(l2, sides2_, log_fv_norm2_);
}

JointDensity::Projection JointDensity::project(const Eigen::VectorXd& w) const {
    if (w.size() != sigma_.dim())
        throw std::invalid_argument("JointDensity: w does not match sigma dimension");
    Eigen::VectorXd t = sigma_.solve(w);
    Projection p{0.0, 0.0, w.dot(t)};
    for (int j : layout_.idx1) p.s1 += t[j];
    for (int j : layout_.idx2) p.s2 += t[j];
    return p;
}

JointDensity::Projection JointDensity::shift(const Projection& p, double v1, double v2) const {
    Projection q;
    q.qf = p.qf - 2.0 * v1 * p.s1 - 2.0 * v2 * p.s2 + v1 * v1 * s11_ +
           2.0 * v1 * v2 * s12_ + v2 * v2 * s22_;
    q.s1 = p.s1 - v1 * s11_ - v2 * s12_;
    q.s2 = p.s2 - v1 * s12_ - v2 * s22_;
    return q;
}

double JointDensity::wstar_from(const Projection& p) const {
    if (gaussian_wstar_) return log_gauss_const_ - 0.5 * p.qf;
    const FactorLoadings& l1 = loadings_[0];
    const FactorLoadings& l2 = loadings_[1];
    double c1 = l1.alpha0_U * p.s1 + l2.alpha0_U * p.s2 - 1.0;
    double c2 = -l1.alpha0_L * p.s1 - l2.alpha0_L * p.s2 - 1.0;
    double quad = (c1 * c1 * c22_ + 2.0 * c1 * c2 * c12_ + c2 * c2 * c11_) / (2.0 * cdelta_);
    double a1 = (c1 * c22_ + c2 * c12_) / std::sqrt(cdelta_ * c22_);
    double a2 = (c1 * c12_ + c2 * c11_) / std::sqrt(cdelta_ * c11_);
    return log_kw_const_ - 0.5 * p.qf + quad + log_bvn_cdf(a1, a2, rho_star_);
}

double JointDensity::wstar_logpdf(const Eigen::VectorXd& w) const {
    return wstar_from(project(w));
}

double JointDensity::logpdf(const Eigen::VectorXd& w) const {
    Projection base = project(w);
    if (sides1_.empty() && sides2_.empty()) return wstar_from(base);

    std::vector<double> terms;
    auto eval_node = [&](double v1, double v2, double log_w) {
        double t = wstar_from(shift(base, v1, v2)) + log_w;
        if (std::isnan(t)) {
            std::ostringstream msg;
            msg << "joint_logpdf: non-finite quadrature term at v1=" << v1 << " v2=" << v2;
            throw degenerate_density_error(msg.str());
        }
        terms.push_back(t);
    };

    if (sides2_.empty()) {
        terms.reserve(sides1_.size() * sides1_.front().rule.v.size());
        for (const auto& hl : sides1_)
            for (std::size_t i = 0; i < hl.rule.v.size(); ++i) {
                double v = hl.sign * hl.rule.v[i];
                eval_node(v, 0.0, hl.rule.log_jw[i] + log_fv_norm1_ -
                                      hl.rule.v[i] / (hl.sign > 0 ? loadings_[0].alpha_U
                                                                  : loadings_[0].alpha_L));
            }
    } else if (sides1_.empty()) {
        for (const auto& hl : sides2_)
            for (std::size_t i = 0; i < hl.rule.v.size(); ++i) {
                double v = hl.sign * hl.rule.v[i];
                eval_node(0.0, v, hl.rule.log_jw[i] + log_fv_norm2_ -
                                      hl.rule.v[i] / (hl.sign > 0 ? loadings_[1].alpha_U
                                                                  : loadings_[1].alpha_L));
            }
    } else {
        for (const auto& h1 : sides1_)
            for (std::size_t i = 0; i < h1.rule.v.size(); ++i) {
                double v1 = h1.sign * h1.rule.v[i];
                double lw1 = h1.rule.log_jw[i] + log_fv_norm1_ -
                             h1.rule.v[i] /
                                 (h1.sign > 0 ? loadings_[0].alpha_U : loadings_[0].alpha_L);
                for (const auto& h2 : sides2_)
                    for (std::size_t k = 0; k < h2.rule.v.size(); ++k) {
                        double v2 = h2.sign * h2.rule.v[k];
                        double lw2 = h2.rule.log_jw[k] + log_fv_norm2_ -
                                     h2.rule.v[k] / (h2.sign > 0 ? loadings_[1].alpha_U
                                                                 : loadings_[1].alpha_L);
                        eval_node(v1, v2, lw1 + lw2);
                    }
            }
    }

    double out = log_sum_exp(terms);
    if (std::isnan(out))
        throw degenerate_density_error("joint_logpdf: quadrature sum is not a number");
    return out;
}

namespace {
JointDensity make_density(const SpatialDesign& design, const CovarianceSpec& spec,
                          const ModelLoadings& loadings, int quad_nodes) {
    if (design.p() != 2)
        throw std::invalid_argument("joint density: closed form available for p = 2 only");
    return JointDensity(build_sigma_z(design, spec), BlockLayout::contiguous(design.n(), design.n()),
                        loadings, quad_nodes);
}
} // namespace

double wstar_logpdf(const Eigen::VectorXd& w, const SpatialDesign& design,
                    const CovarianceSpec& spec, const ModelLoadings& loadings) {
    return make_density(design, spec, loadings, 30).wstar_logpdf(w);
}

double joint_logpdf(const Eigen::VectorXd& w1, const Eigen::VectorXd& w2,
                    const SpatialDesign& design, const CovarianceSpec& spec,
                    const ModelLoadings& loadings, int quad_nodes) {
    Eigen::VectorXd w(w1.size() + w2.size());
    w << w1, w2;
    return make_density(design, spec, loadings, quad_nodes).logpdf(w);
}

double copula_logdensity(const Eigen::VectorXd& u1, const Eigen::VectorXd& u2,
                         const SpatialDesign& design, const CovarianceSpec& spec,
                         const ModelLoadings& loadings, int quad_nodes) {
    JointDensity den = make_density(design, spec, loadings, quad_nodes);
    Eigen::VectorXd w(u1.size() + u2.size());
    double marg = 0.0;
    for (int j = 0; j < u1.size(); ++j) {
        w[j] = marginal_quantile(u1[j], loadings[0]);
        marg += marginal_log_pdf(w[j], loadings[0]);
    }
    for (int j = 0; j < u2.size(); ++j) {
        w[u1.size() + j] = marginal_quantile(u2[j], loadings[1]);
        marg += marginal_log_pdf(w[u1.size() + j], loadings[1]);
    }
    return den.logpdf(w) - marg;
}

} // namespace corlmc
