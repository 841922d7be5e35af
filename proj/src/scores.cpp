#include "corlmc/scores.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace corlmc {

void ReplicateMatrix::validate() const {
    if (p < 1 || n < 1) throw std::invalid_argument("ReplicateMatrix: p and n must be >= 1");
    if (values.cols() != static_cast<Eigen::Index>(p) * n)
        throw std::invalid_argument("ReplicateMatrix: column count does not match p*n");
    if (replicates() < 2) throw std::invalid_argument("ReplicateMatrix: need N >= 2 replicates");
    if (!timestamps.empty() && static_cast<int>(timestamps.size()) != replicates())
        throw std::invalid_argument("ReplicateMatrix: timestamp count does not match N");
    if (!values.allFinite())
        throw std::invalid_argument("ReplicateMatrix: missing or non-finite values are not accepted");
}

std::vector<double> average_ranks(const std::vector<double>& column) {
    const std::size_t n = column.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&column](std::size_t a, std::size_t b) { return column[a] < column[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && column[order[j + 1]] == column[order[i]]) ++j;
        double avg = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j + 1));
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

UniformScores uniform_scores(const ReplicateMatrix& data) {
    data.validate();
    const int N = data.replicates();
    UniformScores out;
    out.p = data.p;
    out.n = data.n;
    out.values.resize(N, data.values.cols());
    std::vector<double> col(N);
    for (Eigen::Index c = 0; c < data.values.cols(); ++c) {
        for (int k = 0; k < N; ++k) col[k] = data.values(k, c);
        if (*std::max_element(col.begin(), col.end()) ==
            *std::min_element(col.begin(), col.end()))
            throw std::invalid_argument("uniform_scores: column " + std::to_string(c) +
                                        " is constant, ranks are undefined");
        std::vector<double> ranks = average_ranks(col);
        for (int k = 0; k < N; ++k) out.values(k, c) = (ranks[k] - 0.5) / N;
    }
    return out;
}

} // namespace corlmc
