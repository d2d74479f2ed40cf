#pragma once

#include <optional>
#include <vector>

#include "asced/bit_matrix.hpp"
#include "asced/low_weight.hpp"

namespace asced {

/// Number of 4-cycles: sum over unordered row pairs of C(overlap, 2).
std::size_t count_4cycles(const BitMatrix& h);

/// One 4-cycle elimination step. Requires the (r_set, t_set) block of h to be
/// all-ones with |r_set|, |t_set| >= 2. Appends one zero column (AVN) and one
/// check row with support t_set plus the new column (ACN), then adds the new
/// row onto every row in r_set. The returned matrix is zero on the block, and
/// x is a codeword of h iff (x, parity of x over t_set) is a codeword of the
/// result.
BitMatrix eliminate_4cycles(const BitMatrix& h, const std::vector<std::size_t>& r_set,
                            const std::vector<std::size_t>& t_set);

/// Rows of low-weight dual codewords collected in non-decreasing weight.
struct SearchSpace {
    BitMatrix s;
    std::vector<unsigned> weights;       // per-row Hamming weight
    std::size_t target_rank = 0;         // n - k' of the (sub)code
    bool rank_reached = false;
    bool exhaustive_stream = false;
};

/// Accumulates dual codewords of the code defined by h (the dual is the row
/// space of h) in non-decreasing weight until s_max rows, candidate
/// exhaustion, or the early return: full target rank together with a weight
/// increase. rank_reached is false when the effort budget ran out first; the
/// partial space is still returned.
SearchSpace build_search_space(const BitMatrix& h, std::size_t s_max,
                               const SearchEffort& effort = {});

/// A parity-check row block: rows of the search space sharing the exact
/// common support T, the unit of one 4-cycle elimination.
struct Pcrb {
    std::vector<std::size_t> row_indices;  // into the search space, ascending
    std::vector<std::size_t> t_cols;       // column set T, ascending
    std::size_t s_size = 0;
    std::size_t t_size = 0;
};

/// PCRB seeded by rows (i, j): T is their common support; the block collects
/// further rows containing T whose pairwise common support stays exactly T,
/// so the elimination of the block leaves no internal 4-cycles. Returns
/// nothing when |T| < 2.
std::optional<Pcrb> identify_pcrb(std::size_t i, std::size_t j, const SearchSpace& space);

struct AppliedBlock {
    Pcrb pcrb;
    BitMatrix replacement;  // block rows after elimination, width as applied
    BitVector t_mask;       // T over the original columns
};

struct SspcmResult {
    std::optional<BitMatrix> sspcm_1;  // first stage reaching the target rank
    BitMatrix sspcm_2;                 // extended stage at the weight budget
    std::size_t avn_count = 0;
    std::size_t acn_count = 0;
    std::vector<AppliedBlock> applied_blocks;
    std::vector<BitVector> verbatim_rows;  // appended unmodified, no PCRB found
    std::size_t n_original = 0;
    std::size_t target_rank = 0;
    std::size_t achieved_rank = 0;  // rank of the consumed rows on the original columns

    /// AVN extension of a length-n word: one forced parity bit per applied
    /// block, in application order.
    BitVector lift(const BitVector& x) const;
};

/// Iterated PCRB replacement per the prioritized selection criteria: rank of
/// the stacked matrix, block size, 4-cycle count, variance of original-column
/// weights, then first found. Rows without any PCRB partner are appended
/// verbatim. Stops at w_max total weight or when the space is consumed.
SspcmResult build_sspcm(const SearchSpace& space, std::size_t w_max);

/// Structural summary used by reports.
struct PcmStats {
    std::size_t rows = 0, cols = 0;
    std::size_t rank = 0;
    std::size_t weight = 0;
    std::size_t four_cycles = 0;
    bool girth_ge_6 = false;
};

PcmStats pcm_stats(const BitMatrix& h);

}  // namespace asced
