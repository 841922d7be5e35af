#include "corlmc/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace corlmc {

QuadratureRule::QuadratureRule(int n) {
    if (n < 1) throw std::invalid_argument("QuadratureRule: need at least one node");
    nodes.resize(n);
    weights.resize(n);
    // Newton iteration on P_n, roots seeded with the Chebyshev approximation.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double p0, p1, dp;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) nodes[n / 2] = 0.0;
}

UnitRule::UnitRule(const QuadratureRule& rule) {
    nodes.reserve(rule.size());
    weights.reserve(rule.size());
    for (int i = 0; i < rule.size(); ++i) {
        nodes.push_back(0.5 * (rule.nodes[i] + 1.0));
        weights.push_back(0.5 * rule.weights[i]);
    }
}

HalfLineRule::HalfLineRule(const QuadratureRule& rule, double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("HalfLineRule: scale must be positive");
    UnitRule unit(rule);
    v.reserve(unit.nodes.size());
    log_jw.reserve(unit.nodes.size());
    for (std::size_t i = 0; i < unit.nodes.size(); ++i) {
        double t = unit.nodes[i];
        double om = 1.0 - t;
        v.push_back(scale * t / om);
        log_jw.push_back(std::log(scale * unit.weights[i]) - 2.0 * std::log(om));
    }
}

ClusteredUnitRule::ClusteredUnitRule(int n, double strength) {
    QuadratureRule base(n);
    double th = std::tanh(strength);
    nodes.reserve(n);
    weights.reserve(n);
    for (int i = 0; i < n; ++i) {
        double s = base.nodes[i];
        double t = std::tanh(strength * s);
        nodes.push_back(0.5 * (1.0 + t / th));
        weights.push_back(base.weights[i] * 0.5 * strength * (1.0 - t * t) / th);
    }
}

} // namespace corlmc
