#ifndef CORLMC_SCORES_HPP
#define CORLMC_SCORES_HPP

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace corlmc {

// N replicates of the p*n observation vector, columns ordered
// (variable i, location j) -> i*n + j.
struct ReplicateMatrix {
    Eigen::MatrixXd values; // N x (p*n)
    int p = 0;
    int n = 0;
    std::vector<double> timestamps; // optional, size N when present

    int replicates() const { return static_cast<int>(values.rows()); }
    int column(int variable, int location) const { return variable * n + location; }
    void validate() const;
};

// Columnwise rank scores (rank - 0.5)/N, strictly inside (0,1).
struct UniformScores {
    Eigen::MatrixXd values;
    int p = 0;
    int n = 0;

    int replicates() const { return static_cast<int>(values.rows()); }
    int column(int variable, int location) const { return variable * n + location; }
};

// Rank transform with average ranks for ties. Throws on constant columns and
// on N < 2.
UniformScores uniform_scores(const ReplicateMatrix& data);

// Average-rank vector of one column, 1-based ranks.
std::vector<double> average_ranks(const std::vector<double>& column);

} // namespace corlmc

#endif
