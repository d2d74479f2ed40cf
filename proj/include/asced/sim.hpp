#pragma once

#include "asced/channel.hpp"
#include "asced/code.hpp"
#include "asced/ensemble.hpp"

namespace asced {

struct PointResult {
    double snr_db = 0.0;
    std::uint64_t frames = 0;
    std::uint64_t frame_errors = 0;
    std::uint64_t list_errors = 0;
    double fer = 0.0;
    double ler = 0.0;
    double mean_iters = 0.0;  // BP iterations summed over paths, averaged per frame
    double ci95_lo = 0.0;     // Wilson interval on the FER
    double ci95_hi = 0.0;

    friend bool operator==(const PointResult&, const PointResult&) = default;
};

struct SimResult {
    std::vector<PointResult> points;

    friend bool operator==(const SimResult&, const SimResult&) = default;
};

/// Wilson 95% score interval for e successes in n trials.
std::pair<double, double> wilson_interval(std::uint64_t errors, std::uint64_t frames);

/// Monte-Carlo FER/LER of the full ensemble. Frames use per-frame RNG
/// streams derived from (seed, point, frame) and a frame-granular stopping
/// rule (stop exactly at the frame delivering the min_frame_errors-th error),
/// so the result is a pure function of the config — independent of thread
/// count and scheduling. Frames within a chunk run in parallel (OpenMP).
SimResult run_fer(const EnsembleSpec& spec, const LinearCode& code, const SimConfig& sim);

/// Plain sequential reference of run_fer, kept for testing and benchmarking;
/// must produce identical results.
SimResult run_fer_serial(const EnsembleSpec& spec, const LinearCode& code,
                         const SimConfig& sim);

/// All-zero-transmission list-error estimate decoding only the linear
/// subcode path of each batch: a frame counts as a list error iff no linear
/// path returns the all-zero word, and as a frame error iff the
/// maximum-correlation pick over the linear-path outputs is nonzero.
/// Rejects RandomCodeword mode.
SimResult run_ler_allzero(const EnsembleSpec& spec, const LinearCode& code,
                          const SimConfig& sim);

/// Brute-force-ML "single path" reference simulation (k <= 20).
SimResult run_ml_fer(const LinearCode& code, const SimConfig& sim);

}  // namespace asced
