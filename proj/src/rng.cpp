#include "corlmc/rng.hpp"

#include <cmath>

#include "corlmc/normal.hpp"

namespace corlmc {

namespace {
constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mul_hilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
    std::uint64_t prod = static_cast<std::uint64_t>(a) * b;
    hi = static_cast<std::uint32_t>(prod >> 32);
    lo = static_cast<std::uint32_t>(prod);
}
} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_id) : counter_hi_(stream_id) {
    key_[0] = static_cast<std::uint32_t>(seed);
    key_[1] = static_cast<std::uint32_t>(seed >> 32);
}

void RngStream::refill() {
    std::uint32_t c[4] = {static_cast<std::uint32_t>(counter_lo_),
                          static_cast<std::uint32_t>(counter_lo_ >> 32),
                          static_cast<std::uint32_t>(counter_hi_),
                          static_cast<std::uint32_t>(counter_hi_ >> 32)};
    std::uint32_t k0 = key_[0], k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mul_hilo(kPhiloxM0, c[0], hi0, lo0);
        mul_hilo(kPhiloxM1, c[2], hi1, lo1);
        std::uint32_t n0 = hi1 ^ c[1] ^ k0;
        std::uint32_t n1 = lo1;
        std::uint32_t n2 = hi0 ^ c[3] ^ k1;
        std::uint32_t n3 = lo0;
        c[0] = n0;
        c[1] = n1;
        c[2] = n2;
        c[3] = n3;
        k0 += kPhiloxW0;
        k1 += kPhiloxW1;
    }
    buf_[0] = c[0];
    buf_[1] = c[1];
    buf_[2] = c[2];
    buf_[3] = c[3];
    buf_pos_ = 0;
    ++counter_lo_;
}

std::uint32_t RngStream::next_u32() {
    if (buf_pos_ >= 4) refill();
    return buf_[buf_pos_++];
}

double RngStream::uniform() {
    std::uint64_t hi = next_u32();
    std::uint64_t lo = next_u32();
    std::uint64_t bits = ((hi << 32) | lo) >> 11; // 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double RngStream::normal() {
    return std_normal_quantile(uniform());
}

double RngStream::exponential() {
    return -std::log(uniform());
}

double RngStream::pareto(double k) {
    return std::pow(uniform(), -1.0 / k);
}

double RngStream::weibull(double kappa) {
    return std::pow(-std::log(uniform()), 1.0 / kappa);
}

void FactorLaw::validate() const {
    switch (kind) {
        case Kind::Exponential: return;
        case Kind::Pareto:
            if (!(param > 1.0)) throw std::invalid_argument("FactorLaw: Pareto shape must be > 1");
            return;
        case Kind::Weibull:
            if (!(param > 0.0 && param < 1.0))
                throw std::invalid_argument("FactorLaw: Weibull shape must be in (0,1)");
            return;
    }
    throw std::invalid_argument("FactorLaw: unknown kind");
}

double FactorLaw::sample(RngStream& rng) const {
    switch (kind) {
        case Kind::Exponential: return rng.exponential();
        case Kind::Pareto: return rng.pareto(param);
        case Kind::Weibull: return rng.weibull(param);
    }
    throw std::invalid_argument("FactorLaw: unknown kind");
}

FactorLaw FactorLaw::pareto(double k) {
    FactorLaw law{Kind::Pareto, k};
    law.validate();
    return law;
}

FactorLaw FactorLaw::weibull(double kappa) {
    FactorLaw law{Kind::Weibull, kappa};
    law.validate();
    return law;
}

} // namespace corlmc
