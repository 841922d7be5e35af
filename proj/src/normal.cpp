#include "corlmc/normal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace corlmc {

namespace {
constexpr double inv_sqrt2 = 0.7071067811865475244008443621048490;
constexpr double log_2pi = 1.8378770664093454835606594728112353;
constexpr double two_pi = 6.2831853071795864769252867665590058;
} // namespace

double std_normal_pdf(double z) {
    return std::exp(-0.5 * z * z) / std::sqrt(two_pi);
}

double std_normal_logpdf(double z) {
    return -0.5 * (z * z + log_2pi);
}

double std_normal_cdf(double z) {
    if (std::isnan(z)) return std::numeric_limits<double>::quiet_NaN();
    return 0.5 * std::erfc(-z * inv_sqrt2);
}

double std_normal_logcdf(double z) {
    if (z > -37.0) {
        double p = std_normal_cdf(z);
        if (p > 0.0) return std::log(p);
    }
    // Mills ratio expansion: Phi(z) ~ phi(z)/|z| * (1 - 1/z^2 + 3/z^4 - 15/z^6 + 105/z^8)
    double zz = z * z;
    double r = 1.0 - 1.0 / zz + 3.0 / (zz * zz) - 15.0 / (zz * zz * zz)
               + 105.0 / (zz * zz * zz * zz);
    return std_normal_logpdf(z) - std::log(-z) + std::log(r);
}

// Wichura's AS241 (PPND16), double-precision inverse normal cdf.
double std_normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::invalid_argument("std_normal_quantile: p must be in (0,1)");
    double q = p - 0.5;
    double r;
    if (std::fabs(q) <= 0.425) {
        r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
                     6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
                   1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
                 1.3314166789178437745e+2) * r + 3.3871328727963666080e+0) /
               (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
                     3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
                   5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
                 4.2313330701600911252e+1) * r + 1.0);
    }
    r = (q < 0.0) ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double x;
    if (r <= 5.0) {
        r -= 1.6;
        x = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
                3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
              4.63033784615654529590e+0) * r + 1.42343711074968357734e+0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
              2.05319162663775882187e+0) * r + 1.0);
    } else {
        r -= 5.0;
        x = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
              5.46378491116411436990e+0) * r + 6.65790464350110377720e+0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
    }
    return (q < 0.0) ? -x : x;
}

namespace {

// Genz (2004) BVND, a rewrite of Drezner & Wesolowsky. Gauss-Legendre rules
// of 6/12/20 points depending on |rho|; the |rho| > 0.925 branch integrates
// the residual after removing the perfectly-correlated part.
double bvnu(double dh, double dk, double r) {
    static const double w6[] = {0.1713244923791705, 0.3607615730481384, 0.4679139345726904};
    static const double x6[] = {0.9324695142031522, 0.6612093864662647, 0.2386191860831970};
    static const double w12[] = {0.4717533638651177e-1, 0.1069393259953183, 0.1600783285433464,
                                 0.2031674267230659, 0.2334925365383547, 0.2491470458134029};
    static const double x12[] = {0.9815606342467191, 0.9041172563704750, 0.7699026741943050,
                                 0.5873179542866171, 0.3678314989981802, 0.1252334085114692};
    static const double w20[] = {0.1761400713915212e-1, 0.4060142980038694e-1,
                                 0.6267204833410906e-1, 0.8327674157670475e-1,
                                 0.1019301198172404, 0.1181945319615184,
                                 0.1316886384491766, 0.1420961093183821,
                                 0.1491729864726037, 0.1527533871307259};
    static const double x20[] = {0.9931285991850949, 0.9639719272779138,
                                 0.9122344282513259, 0.8391169718222188,
                                 0.7463319064601508, 0.6360536807265150,
                                 0.5108670019508271, 0.3737060887154196,
                                 0.2277858511416451, 0.7652652113349733e-1};

    const double* w;
    const double* x;
    int ng;
    if (std::fabs(r) < 0.3) {
        ng = 3; w = w6; x = x6;
    } else if (std::fabs(r) < 0.75) {
        ng = 6; w = w12; x = x12;
    } else {
        ng = 10; w = w20; x = x20;
    }

    double h = dh, k = dk;
    double hk = h * k;
    double bvn = 0.0;

    if (std::fabs(r) < 0.925) {
        if (std::fabs(r) > 0.0) {
            double hs = (h * h + k * k) / 2.0;
            double asr = std::asin(r);
            for (int i = 0; i < ng; ++i) {
                for (int is = -1; is <= 1; is += 2) {
                    double sn = std::sin(asr * (is * x[i] + 1.0) / 2.0);
                    bvn += w[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
                }
            }
            bvn = bvn * asr / (2.0 * two_pi);
        }
        bvn += std_normal_cdf(-h) * std_normal_cdf(-k);
    } else {
        if (r < 0.0) {
            k = -k;
            hk = -hk;
        }
        if (std::fabs(r) < 1.0) {
            double as = (1.0 - r) * (1.0 + r);
            double a = std::sqrt(as);
            double bs = (h - k) * (h - k);
            double c = (4.0 - hk) / 8.0;
            double d = (12.0 - hk) / 16.0;
            double asr = -(bs / as + hk) / 2.0;
            if (asr > -100.0)
                bvn = a * std::exp(asr) *
                      (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 +
                       c * d * as * as / 5.0);
            if (-hk < 100.0) {
                double b = std::sqrt(bs);
                bvn -= std::exp(-hk / 2.0) * std::sqrt(two_pi) * std_normal_cdf(-b / a) * b *
                       (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
            }
            a /= 2.0;
            for (int i = 0; i < ng; ++i) {
                for (int is = -1; is <= 1; is += 2) {
                    double xs = a * (is * x[i] + 1.0);
                    xs = xs * xs;
                    double rs = std::sqrt(1.0 - xs);
                    double asr2 = -(bs / xs + hk) / 2.0;
                    if (asr2 > -100.0) {
                        bvn += a * w[i] * std::exp(asr2) *
                               (std::exp(-hk * (1.0 - rs) / (2.0 * (1.0 + rs))) / rs -
                                (1.0 + c * xs * (1.0 + d * xs)));
                    }
                }
            }
            bvn = -bvn / two_pi;
        }
        if (r > 0.0) {
            bvn += std_normal_cdf(-std::max(h, k));
        } else {
            bvn = -bvn;
            if (k > h) bvn += std_normal_cdf(k) - std_normal_cdf(h);
        }
    }
    return bvn;
}

} // namespace

double bvn_cdf(double z1, double z2, double rho) {
    if (!std::isfinite(rho) || std::fabs(rho) > 1.0)
        throw std::invalid_argument("bvn_cdf: rho must be finite in [-1,1]");
    if (std::isnan(z1) || std::isnan(z2))
        return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(z1) || std::isinf(z2)) {
        if (z1 < 0.0 || z2 < 0.0) return 0.0;
        if (std::isinf(z1) && std::isinf(z2)) return 1.0;
        return std::isinf(z1) ? std_normal_cdf(z2) : std_normal_cdf(z1);
    }
    if (rho == 1.0) return std_normal_cdf(std::min(z1, z2));
    if (rho == -1.0) return std::max(0.0, std_normal_cdf(z1) + std_normal_cdf(z2) - 1.0);
    double p = bvnu(-z1, -z2, rho);
    if (p < 0.0) p = 0.0;
    if (p > 1.0) p = 1.0;
    return p;
}

double log_bvn_cdf(double z1, double z2, double rho) {
    double p = bvn_cdf(z1, z2, rho);
    if (p > 0.0) return std::log(p);
    return std_normal_logcdf(z1) + std_normal_logcdf(z2);
}

} // namespace corlmc
