#include "corlmc/simulate.hpp"

#include <cmath>
#include <stdexcept>

#include "corlmc/threads.hpp"

namespace corlmc {

ReplicateMatrix simulate(const SimulationConfig& cfg) {
    const int p = cfg.design.p();
    const int n = cfg.design.n();
    const int m = p * n;
    if (static_cast<int>(cfg.loadings.size()) != p)
        throw std::invalid_argument("simulate: need loadings for every variable");
    for (const auto& lo : cfg.loadings) lo.validate();
    cfg.law.validate();
    if (cfg.replicates < 1) throw std::invalid_argument("simulate: need at least one replicate");

    CorrelationMatrix sigma = build_sigma_z(cfg.design, cfg.spec);
    const Eigen::MatrixXd& L = sigma.cholesky();

    ReplicateMatrix out;
    out.p = p;
    out.n = n;
    out.values.resize(cfg.replicates, m);

    parallel_for(
        cfg.replicates,
        [&](std::int64_t k) {
            RngStream rng(cfg.seed, static_cast<std::uint64_t>(k));
            Eigen::VectorXd g(m);
            for (int j = 0; j < m; ++j) g[j] = rng.normal();
            Eigen::VectorXd z = L.triangularView<Eigen::Lower>() * g;
            double e0U = cfg.law.sample(rng);
            double e0L = cfg.law.sample(rng);
            for (int i = 0; i < p; ++i) {
                double eiU = cfg.law.sample(rng);
                double eiL = cfg.law.sample(rng);
                const FactorLoadings& lo = cfg.loadings[i];
                double common = lo.alpha0_U * e0U + lo.alpha_U * eiU - lo.alpha0_L * e0L -
                                lo.alpha_L * eiL;
                for (int j = 0; j < n; ++j) out.values(k, i * n + j) = z[i * n + j] + common;
            }
        },
        cfg.threads);
    return out;
}

double model_correlation(const CovarianceSpec& spec, const ModelLoadings& loadings, int var1,
                         int var2, double dist) {
    // Exponential factors have unit variance, so Var W_i = 1 + sum of squared
    // loadings; only the common factors are shared across variables.
    auto sumsq = [](const FactorLoadings& lo) {
        return lo.alpha0_U * lo.alpha0_U + lo.alpha_U * lo.alpha_U + lo.alpha0_L * lo.alpha0_L +
               lo.alpha_L * lo.alpha_L;
    };
    const FactorLoadings& l1 = loadings[var1];
    const FactorLoadings& l2 = loadings[var2];
    double cz = spec.correlation(var1, var2, dist);
    double cov;
    if (var1 == var2)
        cov = cz + sumsq(l1);
    else
        cov = cz + l1.alpha0_U * l2.alpha0_U + l1.alpha0_L * l2.alpha0_L;
    return cov / std::sqrt((1.0 + sumsq(l1)) * (1.0 + sumsq(l2)));
}

std::vector<DependenceStat> empirical_dependence_curves(
    const ReplicateMatrix& data, const std::vector<std::pair<int, int>>& pairs,
    const std::vector<double>& q_values) {
    data.validate();
    for (double q : q_values)
        if (!(q > 0.0 && q < 0.5))
            throw std::invalid_argument("empirical_dependence_curves: q must be in (0, 0.5)");
    const int N = data.replicates();
    const int cols = static_cast<int>(data.values.cols());

    // rank-score only the referenced columns
    std::vector<std::vector<double>> score(cols);
    std::vector<double> raw(N);
    auto scores_of = [&](int c) -> const std::vector<double>& {
        if (c < 0 || c >= cols)
            throw std::invalid_argument("empirical_dependence_curves: column out of range");
        if (score[c].empty()) {
            for (int k = 0; k < N; ++k) raw[k] = data.values(k, c);
            std::vector<double> ranks = average_ranks(raw);
            score[c].resize(N);
            for (int k = 0; k < N; ++k) score[c][k] = (ranks[k] - 0.5) / N;
        }
        return score[c];
    };

    std::vector<DependenceStat> out;
    out.reserve(pairs.size() * q_values.size());
    for (auto [c1, c2] : pairs) {
        const auto& u1 = scores_of(c1);
        const auto& u2 = scores_of(c2);
        double m1 = 0, m2 = 0;
        for (int k = 0; k < N; ++k) {
            m1 += u1[k];
            m2 += u2[k];
        }
        m1 /= N;
        m2 /= N;
        double sxy = 0, sxx = 0, syy = 0;
        for (int k = 0; k < N; ++k) {
            double a = u1[k] - m1, b = u2[k] - m2;
            sxy += a * b;
            sxx += a * a;
            syy += b * b;
        }
        double spearman = sxy / std::sqrt(sxx * syy);
        for (double q : q_values) {
            std::int64_t lower = 0, upper = 0;
            for (int k = 0; k < N; ++k) {
                if (u1[k] <= q && u2[k] <= q) ++lower;
                if (u1[k] > 1.0 - q && u2[k] > 1.0 - q) ++upper;
            }
            DependenceStat st;
            st.col1 = c1;
            st.col2 = c2;
            st.spearman = spearman;
            st.q = q;
            st.lambda_lower = static_cast<double>(lower) / (q * N);
            st.lambda_upper = static_cast<double>(upper) / (q * N);
            st.unstable = q * N < 5.0;
            out.push_back(st);
        }
    }
    return out;
}

} // namespace corlmc
