#include "corlmc/margins.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "corlmc/normal.hpp"

namespace corlmc {

void FactorLoadings::validate() const {
    if (alpha0_U < 0.0 || alpha_U < 0.0 || alpha0_L < 0.0 || alpha_L < 0.0)
        throw std::invalid_argument("FactorLoadings: coefficients must be nonnegative");
    if (!std::isfinite(alpha0_U) || !std::isfinite(alpha_U) || !std::isfinite(alpha0_L) ||
        !std::isfinite(alpha_L))
        throw std::invalid_argument("FactorLoadings: coefficients must be finite");
}

bool FactorLoadings::all_zero() const {
    return alpha0_U == 0.0 && alpha_U == 0.0 && alpha0_L == 0.0 && alpha_L == 0.0;
}

FactorLoadings FactorLoadings::reflected() const {
    return FactorLoadings{alpha0_L, alpha_L, alpha0_U, alpha_U};
}

double xi_term(double z, double aL, double aU, double a0L, double a0U, double eps_sing) {
    if (aU == 0.0) return 0.0;
    double gap = a0U - aU;
    if (std::fabs(gap) <= eps_sing)
        throw singular_loadings_error(
            "xi_term: coefficients a0U and aU coincide; evaluate on perturbed loadings");
    // Evaluated in log magnitude: the exp{0.5/aU^2} factor alone overflows
    // for small aU while the product stays bounded.
    double logmag = 3.0 * std::log(aU) + 0.5 / (aU * aU) - z / aU +
                    std_normal_logcdf(z - 1.0 / aU) -
                    std::log((a0L + aU) * (aL + aU) * std::fabs(gap));
    double v = std::exp(logmag);
    return gap > 0.0 ? v : -v;
}

FactorLoadings regularize(const FactorLoadings& load, double eps_sing, double perturb_scale) {
    FactorLoadings out = load;
    auto fix_pair = [&](double& a, double& b) {
        if (std::fabs(a - b) <= eps_sing && std::max(a, b) > 0.0) {
            double& smaller = (a <= b) ? a : b;
            smaller = std::max(0.0, smaller - perturb_scale * (1.0 + smaller));
        }
    };
    fix_pair(out.alpha0_U, out.alpha_U);
    fix_pair(out.alpha0_L, out.alpha_L);
    return out;
}

namespace {

double cdf_impl(double z, const FactorLoadings& lo) {
    return std_normal_cdf(z) +
           xi_term(z, lo.alpha_L, lo.alpha_U, lo.alpha0_L, lo.alpha0_U) -
           xi_term(-z, lo.alpha_U, lo.alpha_L, lo.alpha0_U, lo.alpha0_L) +
           xi_term(z, lo.alpha0_L, lo.alpha0_U, lo.alpha_L, lo.alpha_U) -
           xi_term(-z, lo.alpha0_U, lo.alpha0_L, lo.alpha_U, lo.alpha_L);
}

// d/dz of one xi term.
double xi_term_dz(double z, double aL, double aU, double a0L, double a0U) {
    if (aU == 0.0) return 0.0;
    double gap = a0U - aU;
    if (std::fabs(gap) <= kSingularEps)
        throw singular_loadings_error(
            "xi_term: coefficients a0U and aU coincide; evaluate on perturbed loadings");
    double base = 3.0 * std::log(aU) + 0.5 / (aU * aU) - z / aU -
                  std::log((a0L + aU) * (aL + aU) * std::fabs(gap));
    double zc = z - 1.0 / aU;
    // exp(base) * {phi(zc) - Phi(zc)/aU}
    double t1 = std::exp(base + std_normal_logpdf(zc));
    double t2 = std::exp(base + std_normal_logcdf(zc)) / aU;
    double v = t1 - t2;
    return gap > 0.0 ? v : -v;
}

double pdf_impl(double z, const FactorLoadings& lo) {
    return std_normal_pdf(z) +
           xi_term_dz(z, lo.alpha_L, lo.alpha_U, lo.alpha0_L, lo.alpha0_U) +
           xi_term_dz(-z, lo.alpha_U, lo.alpha_L, lo.alpha0_U, lo.alpha0_L) +
           xi_term_dz(z, lo.alpha0_L, lo.alpha0_U, lo.alpha_L, lo.alpha_U) +
           xi_term_dz(-z, lo.alpha0_U, lo.alpha0_L, lo.alpha_U, lo.alpha_L);
}

} // namespace

double marginal_cdf(double z, const FactorLoadings& load) {
    load.validate();
    if (std::isnan(z)) return std::numeric_limits<double>::quiet_NaN();
    double v = cdf_impl(z, regularize(load));
    return std::clamp(v, 0.0, 1.0);
}

double marginal_pdf(double z, const FactorLoadings& load) {
    load.validate();
    double v = pdf_impl(z, regularize(load));
    return std::max(v, 0.0);
}

double marginal_log_pdf(double z, const FactorLoadings& load) {
    return std::log(marginal_pdf(z, load));
}

double marginal_quantile(double u, const FactorLoadings& load) {
    if (!(u > 0.0 && u < 1.0))
        throw std::invalid_argument("marginal_quantile: u must be in (0,1)");
    load.validate();
    FactorLoadings lo = regularize(load);
    double base = std_normal_quantile(u);
    double spread = lo.alpha0_U + lo.alpha_U + lo.alpha0_L + lo.alpha_L;
    double a = base - 10.0 * spread - 1.0;
    double b = base + 10.0 * spread + 1.0;
    // grow the bracket if the tails are heavier than the heuristic
    while (cdf_impl(a, lo) > u) a -= 10.0 * (spread + 1.0);
    while (cdf_impl(b, lo) < u) b += 10.0 * (spread + 1.0);

    // safeguarded Newton: bisection step whenever Newton leaves the bracket
    double x = 0.5 * (a + b);
    for (int it = 0; it < 200; ++it) {
        double f = cdf_impl(x, lo) - u;
        if (std::fabs(f) < 1e-12) return x;
        if (f > 0.0)
            b = x;
        else
            a = x;
        double d = pdf_impl(x, lo);
        double step = (d > 0.0) ? x - f / d : a - 1.0;
        x = (step > a && step < b) ? step : 0.5 * (a + b);
        if (b - a < 1e-14 * (1.0 + std::fabs(x))) break;
    }
    return x;
}

double factor_diff_pdf(double v, double aU, double aL) {
    if (aU < 0.0 || aL < 0.0)
        throw std::invalid_argument("factor_diff_pdf: coefficients must be nonnegative");
    if (aU + aL <= 0.0)
        throw std::invalid_argument("factor_diff_pdf: degenerate point mass at 0, aU + aL must be > 0");
    if (v > 0.0 && aU == 0.0) return 0.0;
    if (v < 0.0 && aL == 0.0) return 0.0;
    double e = v >= 0.0 ? -v / aU : v / aL;
    return std::exp(e) / (aU + aL);
}

} // namespace corlmc
