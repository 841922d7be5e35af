#ifndef CORLMC_RNG_HPP
#define CORLMC_RNG_HPP

#include <cstdint>
#include <stdexcept>

namespace corlmc {

// Philox4x32-10 counter-based generator (Salmon et al., SC 2011). A stream is
// addressed by (seed, stream_id); draws within a stream are addressed by a
// 64-bit draw counter. Identical (seed, stream, position) gives identical
// output regardless of which thread generates it, so per-replicate substreams
// parallelize without changing results.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint32_t next_u32();
    // uniform on (0,1), never 0 or 1
    double uniform();
    // inverse-cdf standard normal
    double normal();
    // unit-rate exponential
    double exponential();
    // Pareto(scale 1, shape k): cdf 1 - x^{-k} on x >= 1
    double pareto(double k);
    // Weibull(shape kappa, scale 1)
    double weibull(double kappa);

  private:
    void refill();
    std::uint32_t key_[2];
    std::uint64_t counter_hi_;
    std::uint64_t counter_lo_ = 0;
    std::uint32_t buf_[4];
    int buf_pos_ = 4;
};

struct FactorLaw {
    enum class Kind { Exponential, Pareto, Weibull };
    Kind kind = Kind::Exponential;
    double param = 0.0; // Pareto shape k > 1, Weibull shape kappa in (0,1)

    void validate() const;
    double sample(RngStream& rng) const;

    static FactorLaw exponential() { return FactorLaw{Kind::Exponential, 0.0}; }
    static FactorLaw pareto(double k);
    static FactorLaw weibull(double kappa);
};

} // namespace corlmc

#endif
