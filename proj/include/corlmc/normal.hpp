#ifndef CORLMC_NORMAL_HPP
#define CORLMC_NORMAL_HPP

namespace corlmc {

// Univariate standard normal. cdf/quantile are accurate to ~1e-15;
// logcdf switches to a Mills-ratio expansion in the far left tail so it
// stays finite for arbitrarily negative arguments.
double std_normal_pdf(double z);
double std_normal_cdf(double z);
double std_normal_logpdf(double z);
double std_normal_logcdf(double z);
double std_normal_quantile(double p);

// Bivariate standard normal cdf P(Z1 <= z1, Z2 <= z2) with correlation rho,
// Genz's rewrite of the Drezner-Wesolowsky quadrature. Absolute accuracy is
// well below 1e-10 over the whole rho range. Throws on non-finite rho.
double bvn_cdf(double z1, double z2, double rho);

// log of bvn_cdf; falls back to the independence lower bound
// logPhi(z1)+logPhi(z2) when the probability underflows to zero in double.
double log_bvn_cdf(double z1, double z2, double rho);

} // namespace corlmc

#endif
