#ifndef CORLMC_DESIGN_HPP
#define CORLMC_DESIGN_HPP

#include <Eigen/Dense>
#include <vector>

namespace corlmc {

struct Location {
    int id = 0;
    std::vector<double> coords;
};

// p variables observed at a common set of locations. Column index convention
// everywhere in this library: (variable i, location j) -> i*n + j, variables
// blocked first.
class SpatialDesign {
  public:
    SpatialDesign(int p, std::vector<Location> locations);

    int p() const { return p_; }
    int n() const { return static_cast<int>(locations_.size()); }
    int dim() const { return p_ * n(); }
    const std::vector<Location>& locations() const { return locations_; }
    const Eigen::MatrixXd& distances() const { return dist_; }

    int column(int variable, int location) const { return variable * n() + location; }

    // Design with one location appended (ids stay unique).
    SpatialDesign with_location(const std::vector<double>& coords) const;

    static double euclidean(const Location& a, const Location& b);

    // n equally spaced points on a line, spacing 1 starting at 1.
    static SpatialDesign line(int p, int n);
    // nx-by-ny grid on [0,1]^2.
    static SpatialDesign grid(int p, int nx, int ny);

  private:
    int p_;
    std::vector<Location> locations_;
    Eigen::MatrixXd dist_;
};

} // namespace corlmc

#endif
