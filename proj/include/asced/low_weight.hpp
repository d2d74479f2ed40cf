#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "asced/bit_matrix.hpp"

namespace asced {

/// Effort knobs for the randomized low-weight search. The randomized path is
/// seeded internally so identical inputs give identical streams.
struct SearchEffort {
    std::uint32_t restarts = 200;   // information-set re-randomizations
    std::uint32_t combine_depth = 3;  // xor up to this many systematic rows
    std::uint64_t seed = 0x5eedULL;
    std::size_t pool_limit = 200000;  // cap on retained candidates
};

struct WeightedWord {
    BitVector word;
    unsigned weight;
};

/// Streams nonzero codewords of the row space of a generator matrix in
/// non-decreasing Hamming weight.
///
/// For row-space dimension <= 24 the enumeration is exhaustive (all 2^dim - 1
/// words), lexicographic within a weight class. Beyond that a randomized
/// information-set search is used: the stream is then a best-effort sample in
/// deterministic discovery order per weight class, and completeness is not
/// guaranteed.
class MinWeightStream {
public:
    static constexpr std::size_t kExhaustiveDimLimit = 24;

    MinWeightStream(const BitMatrix& gen, const SearchEffort& effort = {});

    std::optional<WeightedWord> next();

    bool exhaustive() const { return exhaustive_; }
    std::size_t dimension() const { return basis_.rows(); }

private:
    void histogram_pass();
    void materialize_class(unsigned weight);
    void randomized_search(const SearchEffort& effort);

    BitMatrix basis_;  // independent generator rows
    std::size_t n_ = 0;
    bool exhaustive_ = false;

    // exhaustive mode
    std::vector<std::uint64_t> class_counts_;
    unsigned current_weight_ = 0;

    // both modes: current weight class, served in order
    std::vector<BitVector> buffer_;
    std::size_t buffer_pos_ = 0;

    // randomized mode: full sorted pool
    std::vector<WeightedWord> pool_;
    std::size_t pool_pos_ = 0;
};

}  // namespace asced
