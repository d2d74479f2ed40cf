#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "asced/bit_vector.hpp"

namespace asced {

/// BI-AWGN operating point. Unit-energy BPSK symbols, so the per-dimension
/// noise variance is 1 / (2 * rate * 10^(ebn0/10)).
struct ChannelPoint {
    double ebn0_db = 0.0;
    double rate = 0.5;
    double sigma2 = 1.0;

    static ChannelPoint make(double ebn0_db, double rate);
};

enum class TxMode { AllZero, RandomCodeword };

struct SimConfig {
    std::vector<ChannelPoint> points;
    std::uint64_t min_frame_errors = 200;
    std::uint64_t max_frames = 10000000;
    std::uint64_t seed = 0;
    TxMode tx_mode = TxMode::RandomCodeword;
    int threads = 0;  // 0: library default

    void validate() const;
};

/// splitmix64 step, used to derive independent per-frame RNG streams.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic per-frame engine keyed on (seed, point, frame), so results
/// do not depend on scheduling or worker count.
std::mt19937_64 frame_rng(std::uint64_t seed, std::size_t point_index, std::uint64_t frame);

/// Standard normal draw via Box-Muller on explicit 53-bit uniforms. The
/// standard library's normal_distribution is implementation-defined, which
/// would break run-to-run reproducibility guarantees across toolchains.
double gaussian(std::mt19937_64& rng);

/// BPSK mapping x -> 1 - 2x, AWGN, and bit-wise LLRs 2 y / sigma^2.
std::vector<double> transmit(const BitVector& x, const ChannelPoint& point,
                             std::mt19937_64& rng);

}  // namespace asced
