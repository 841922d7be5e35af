#ifndef CORLMC_SIMULATE_HPP
#define CORLMC_SIMULATE_HPP

#include <cstdint>
#include <vector>

#include "corlmc/covariance.hpp"
#include "corlmc/design.hpp"
#include "corlmc/margins.hpp"
#include "corlmc/rng.hpp"
#include "corlmc/scores.hpp"

namespace corlmc {

struct SimulationConfig {
    SpatialDesign design;
    CovarianceSpec spec;
    ModelLoadings loadings; // size p
    std::int64_t replicates = 1;
    FactorLaw law = FactorLaw::exponential();
    std::uint64_t seed = 0;
    int threads = 0; // 0 = worker_threads()
};

// Exact sampling: per replicate draw Z ~ N(0, Sigma_Z) through the Cholesky
// factor, the four factor families from the common law, and combine
// W_ij = Z_ij + a_i0U*E0U + a_iU*EiU - a_i0L*E0L - a_iL*EiL. Replicate k uses
// counter substream k, so generation order and thread count do not affect
// the output.
ReplicateMatrix simulate(const SimulationConfig& cfg);

// First-principles moments of W implied by the model.
double model_correlation(const CovarianceSpec& spec, const ModelLoadings& loadings,
                         int var1, int var2, double dist);

struct DependenceStat {
    int col1 = 0, col2 = 0;
    double spearman = 0.0;
    double q = 0.0;           // 0 for the spearman row
    double lambda_lower = 0.0;
    double lambda_upper = 0.0;
    bool unstable = false;    // q*N < 5
};

// Empirical Spearman and tail-quadrant copula ratios lambda^q_L = C(q,q)/q,
// lambda^q_U through the reflected copula, per requested column pair.
std::vector<DependenceStat> empirical_dependence_curves(
    const ReplicateMatrix& data, const std::vector<std::pair<int, int>>& pairs,
    const std::vector<double>& q_values);

} // namespace corlmc

#endif
