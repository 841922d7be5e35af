#ifndef CORLMC_MARGINS_HPP
#define CORLMC_MARGINS_HPP

#include <stdexcept>
#include <vector>

namespace corlmc {

// Loadings of one variable on the four exponential factors:
// W = Z + alpha0_U*E0U + alpha_U*EU - alpha0_L*E0L - alpha_L*EL.
struct FactorLoadings {
    double alpha0_U = 0.0;
    double alpha_U = 0.0;
    double alpha0_L = 0.0;
    double alpha_L = 0.0;

    void validate() const;
    bool all_zero() const;
    // Swap upper and lower factor roles; maps the marginal F(z) to 1-F(-z).
    FactorLoadings reflected() const;
};

using ModelLoadings = std::vector<FactorLoadings>; // one entry per variable

// xi denominator vanishes when the two coefficients of a same-tail pair
// coincide; gaps at or below eps_sing are resolved by nudging the smaller
// coefficient down by perturb_scale*(1+coef).
constexpr double kSingularEps = 1e-6;
constexpr double kPerturbScale = 1e-5;

struct singular_loadings_error : std::domain_error {
    using std::domain_error::domain_error;
};

// One term of the closed-form marginal cdf,
//   xi(z) = aU^3 exp{0.5/aU^2 - z/aU} Phi(z - 1/aU)
//           / {(a0L+aU)(aL+aU)(a0U-aU)}.
// Returns 0 when aU = 0. Throws singular_loadings_error when |a0U-aU| is at
// or below eps_sing; callers evaluate on perturbed loadings instead.
double xi_term(double z, double aL, double aU, double a0L, double a0U,
               double eps_sing = kSingularEps);

// Returns a copy with any near-equal same-tail pair perturbed apart.
FactorLoadings regularize(const FactorLoadings& load, double eps_sing = kSingularEps,
                          double perturb_scale = kPerturbScale);

double marginal_cdf(double z, const FactorLoadings& load);
double marginal_pdf(double z, const FactorLoadings& load);
double marginal_log_pdf(double z, const FactorLoadings& load);
// Inverse cdf, bracketed root-finding to 1e-10 in probability.
double marginal_quantile(double u, const FactorLoadings& load);

// Density of V = aU*EU - aL*EL (difference of independent exponentials):
// exp{-v_+/aU - (-v)_+/aL} / (aU + aL). Requires aU + aL > 0.
double factor_diff_pdf(double v, double aU, double aL);

} // namespace corlmc

#endif
