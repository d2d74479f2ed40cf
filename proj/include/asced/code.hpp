#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <variant>
#include <vector>

#include "asced/bit_matrix.hpp"

namespace asced {

/// Thrown when a bounded randomized search runs out of attempts.
struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Binary linear code given by a parity-check matrix; the generator is the
/// null-space basis. Overcomplete PCMs (redundant rows) are accepted.
struct LinearCode {
    BitMatrix h;  // PCM, rank n - k, possibly overcomplete
    BitMatrix g;  // generator, k x n
    std::size_t n = 0;
    std::size_t k = 0;

    /// Encode a k-bit message as u * G.
    BitVector encode(const BitVector& u) const;
};

/// Subcode PCM obtained by stacking appended rows under the base PCM.
struct SubcodePcm {
    BitMatrix base_h;
    BitMatrix appended;  // M_l, may contain rows dependent on base_h
    BitMatrix stacked;   // [base_h; appended]
    std::size_t delta = 0;  // rank(stacked) - rank(base_h)
};

/// Coset x_a + C(h_s) of a linear subcode; all members share the affine
/// syndrome s_a = h_s * x_a^T. s_a == 0 identifies the subcode itself.
struct AffineSubcode {
    BitMatrix h_s;
    BitVector x_a;
    BitVector s_a;
};

using CoverPart = std::variant<SubcodePcm, AffineSubcode>;

LinearCode from_pcm(const BitMatrix& h);

SubcodePcm append_rows(const LinearCode& code, const BitMatrix& m);

/// Uniformly samples a weight-d_c row outside the row space of code.h.
/// Throws SearchExhausted after 10,000 failed attempts.
BitVector sample_independent_row(const LinearCode& code, std::size_t d_c,
                                 std::mt19937_64& rng);

/// The 2^delta cosets of C(sub.stacked) inside the code, first one being the
/// subcode itself (s_a = 0). Offsets are canonicalized by Gaussian
/// elimination on the syndrome map over the generator rows, so the result is
/// deterministic. Requires delta >= 1.
std::vector<AffineSubcode> enumerate_cosets(const SubcodePcm& sub, const LinearCode& code);

/// Exhaustively checks that every codeword lies in at least one part.
/// Requires k <= 20.
bool verify_cover(const std::vector<CoverPart>& parts, const LinearCode& code);

/// Correlation score (1 - 2x) . llr used by ML decisions everywhere.
double correlation(const BitVector& x, std::span<const double> llr);

/// Exhaustive ML decoder: argmax of the correlation over all 2^k codewords,
/// ties broken by lexicographically smallest codeword. Requires k <= 20.
BitVector brute_force_ml(const LinearCode& code, std::span<const double> llr);

}  // namespace asced
