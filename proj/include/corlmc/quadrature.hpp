#ifndef CORLMC_QUADRATURE_HPP
#define CORLMC_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace corlmc {

// Gauss-Legendre rule on [-1,1]. Nodes strictly increasing, weights positive
// and summing to 2.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit QuadratureRule(int n = 30);
    int size() const { return static_cast<int>(nodes.size()); }
};

// Same rule mapped to (0,1).
struct UnitRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit UnitRule(const QuadratureRule& rule);
};

// Half-line substitution v = scale * t/(1-t) for integrands decaying like
// exp(-v/scale). Node i carries v and log of (jacobian * weight).
struct HalfLineRule {
    std::vector<double> v;
    std::vector<double> log_jw;

    HalfLineRule(const QuadratureRule& rule, double scale);
};

// (0,1) rule with tanh clustering toward both endpoints, for integrands that
// spike near 0/1 (conditional copula densities).
struct ClusteredUnitRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit ClusteredUnitRule(int n = 64, double strength = 2.0);
};

} // namespace corlmc

#endif
