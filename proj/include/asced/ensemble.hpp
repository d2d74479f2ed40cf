#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "asced/bp.hpp"
#include "asced/code.hpp"
#include "asced/sspcm.hpp"
#include "asced/tanner.hpp"

namespace asced {

/// One decoding path: a Tanner graph shared inside its batch, the fixed
/// affine syndrome (all-zero for the linear path), and the decoder setup.
/// Graph positions beyond n_code are auxiliary VNs and receive zero LLRs.
struct EnsemblePath {
    std::shared_ptr<const TannerGraph> graph;
    BitVector syndrome;
    DecoderConfig cfg;
    std::size_t n_code = 0;
    std::string label;
};

/// All 2^delta cosets of one subcode decoded over a single shared graph; the
/// first path is the linear subcode itself.
struct AscedBatch {
    SubcodePcm subcode;
    std::optional<SspcmResult> optimized;  // set when the ssPCM stands in
    std::shared_ptr<const BitMatrix> decoding_h;
    std::shared_ptr<const TannerGraph> graph;
    std::vector<EnsemblePath> paths;
    bool cover_verified = false;  // exhaustive check ran (k small enough)
};

struct EnsembleSpec {
    std::vector<AscedBatch> batches;
    std::shared_ptr<const BitMatrix> original_h;  // list-validity check
    std::size_t n_code = 0;

    std::size_t total_paths() const {
        std::size_t m = 0;
        for (const auto& b : batches) m += b.paths.size();
        return m;
    }
};

struct SspcmOptions {
    std::size_t s_max = 400;
    std::size_t w_max = 2000;
    SearchEffort effort = {};
};

/// Builds the batch for a subcode: optionally substitutes the subcode PCM by
/// its ssPCM-II, enumerates the cosets, and fixes one path per coset. Coset
/// syndromes on the optimized graph are recomputed on the AVN-extended
/// offsets, whose auxiliary bits replay the applied block parities.
AscedBatch build_batch(const SubcodePcm& sub, const LinearCode& code,
                       const DecoderConfig& cfg, bool optimize,
                       const SspcmOptions& opts = {});

struct EnsembleOutcome {
    BitVector estimate;
    std::vector<BitVector> list;     // candidate list after validity filtering
    std::size_t winner_path = 0;
    std::string winner_label;
    std::vector<DecodeOutcome> path_outcomes;  // per path, batch order
};

/// Runs every path on the shared LLR vector (auxiliary VNs zero-padded),
/// truncates estimates to the code length, filters the candidate list to
/// valid codewords when any exist, and picks the maximum-correlation word;
/// ties go to the lowest path index.
EnsembleOutcome decode_ensemble(const EnsembleSpec& spec, std::span<const double> llr);

/// Total edge count, one graph weight per path (paths sharing a batch graph
/// count it once each).
std::size_t tec(const EnsembleSpec& spec);

/// Shared-hardware variant: each batch graph counted once.
std::size_t tec_shared(const EnsembleSpec& spec);

}  // namespace asced
