#include "corlmc/design.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace corlmc {

SpatialDesign::SpatialDesign(int p, std::vector<Location> locations)
    : p_(p), locations_(std::move(locations)) {
    if (p_ < 1) throw std::invalid_argument("SpatialDesign: p must be >= 1");
    if (locations_.empty()) throw std::invalid_argument("SpatialDesign: need at least one location");
    std::unordered_set<int> ids;
    std::size_t d = locations_.front().coords.size();
    if (d == 0) throw std::invalid_argument("SpatialDesign: empty coordinates");
    for (const auto& loc : locations_) {
        if (!ids.insert(loc.id).second)
            throw std::invalid_argument("SpatialDesign: duplicate location id " + std::to_string(loc.id));
        if (loc.coords.size() != d)
            throw std::invalid_argument("SpatialDesign: inconsistent coordinate dimension");
        for (double c : loc.coords)
            if (!std::isfinite(c))
                throw std::invalid_argument("SpatialDesign: non-finite coordinate");
    }
    const int m = n();
    dist_.resize(m, m);
    for (int i = 0; i < m; ++i) {
        dist_(i, i) = 0.0;
        for (int j = i + 1; j < m; ++j) {
            double d2 = euclidean(locations_[i], locations_[j]);
            dist_(i, j) = d2;
            dist_(j, i) = d2;
        }
    }
}

double SpatialDesign::euclidean(const Location& a, const Location& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.coords.size(); ++k) {
        double d = a.coords[k] - b.coords[k];
        s += d * d;
    }
    return std::sqrt(s);
}

SpatialDesign SpatialDesign::with_location(const std::vector<double>& coords) const {
    int max_id = 0;
    for (const auto& loc : locations_) max_id = std::max(max_id, loc.id);
    auto locs = locations_;
    locs.push_back(Location{max_id + 1, coords});
    return SpatialDesign(p_, std::move(locs));
}

SpatialDesign SpatialDesign::line(int p, int n) {
    std::vector<Location> locs;
    locs.reserve(n);
    for (int j = 0; j < n; ++j) locs.push_back(Location{j + 1, {1.0 + j}});
    return SpatialDesign(p, std::move(locs));
}

SpatialDesign SpatialDesign::grid(int p, int nx, int ny) {
    std::vector<Location> locs;
    locs.reserve(static_cast<std::size_t>(nx) * ny);
    int id = 1;
    for (int ix = 0; ix < nx; ++ix)
        for (int iy = 0; iy < ny; ++iy) {
            double x = nx > 1 ? static_cast<double>(ix) / (nx - 1) : 0.0;
            double y = ny > 1 ? static_cast<double>(iy) / (ny - 1) : 0.0;
            locs.push_back(Location{id++, {x, y}});
        }
    return SpatialDesign(p, std::move(locs));
}

} // namespace corlmc
