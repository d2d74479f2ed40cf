#include "asced/sim.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace asced {

namespace {

constexpr std::uint64_t kChunk = 256;

struct FrameStats {
    std::uint8_t frame_error = 0;
    std::uint8_t list_error = 0;
    std::uint32_t iters = 0;
};

BitVector random_message(std::size_t k, std::mt19937_64& rng) {
    BitVector u(k);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < k; ++i) {
        if ((i & 63) == 0) word = rng();
        u.set(i, (word >> (i & 63)) & 1u);
    }
    return u;
}

// Chunked frame loop with a frame-granular stop: counters include exactly the
// frames up to and including the one delivering the min_frame_errors-th
// error, so the outcome does not depend on chunking or thread count.
template <class FrameFn>
PointResult run_point(double snr_db, std::size_t point_idx, const SimConfig& sim,
                      bool parallel, FrameFn&& frame_fn) {
    PointResult res;
    res.snr_db = snr_db;
    std::uint64_t iter_sum = 0;

#ifdef _OPENMP
    const int nthreads = sim.threads > 0 ? sim.threads : omp_get_max_threads();
#else
    const int nthreads = 1;
    (void)parallel;
#endif

    std::vector<FrameStats> stats;
    while (res.frames < sim.max_frames && res.frame_errors < sim.min_frame_errors) {
        const std::uint64_t chunk = std::min<std::uint64_t>(kChunk, sim.max_frames - res.frames);
        stats.assign(chunk, FrameStats{});
        const std::uint64_t base = res.frames;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(nthreads) if (parallel)
#endif
        for (long long f = 0; f < static_cast<long long>(chunk); ++f)
            stats[static_cast<std::size_t>(f)] =
                frame_fn(point_idx, base + static_cast<std::uint64_t>(f));

        for (std::uint64_t f = 0; f < chunk; ++f) {
            ++res.frames;
            res.frame_errors += stats[f].frame_error;
            res.list_errors += stats[f].list_error;
            iter_sum += stats[f].iters;
            if (res.frame_errors >= sim.min_frame_errors) break;
        }
    }

    res.fer = res.frames ? static_cast<double>(res.frame_errors) / static_cast<double>(res.frames) : 0.0;
    res.ler = res.frames ? static_cast<double>(res.list_errors) / static_cast<double>(res.frames) : 0.0;
    res.mean_iters = res.frames ? static_cast<double>(iter_sum) / static_cast<double>(res.frames) : 0.0;
    std::tie(res.ci95_lo, res.ci95_hi) = wilson_interval(res.frame_errors, res.frames);
    return res;
}

SimResult run_fer_impl(const EnsembleSpec& spec, const LinearCode& code,
                       const SimConfig& sim, bool parallel) {
    sim.validate();
    SimResult out;
    for (std::size_t p = 0; p < sim.points.size(); ++p) {
        const ChannelPoint& point = sim.points[p];
        auto frame = [&](std::size_t point_idx, std::uint64_t f) {
            std::mt19937_64 rng = frame_rng(sim.seed, point_idx, f);
            BitVector x(code.n);
            if (sim.tx_mode == TxMode::RandomCodeword)
                x = code.encode(random_message(code.k, rng));
            const auto llr = transmit(x, point, rng);
            const auto outcome = decode_ensemble(spec, llr);
            FrameStats st;
            st.frame_error = outcome.estimate != x;
            st.list_error = std::find(outcome.list.begin(), outcome.list.end(), x) ==
                            outcome.list.end();
            for (const auto& po : outcome.path_outcomes) st.iters += po.iterations_used;
            return st;
        };
        out.points.push_back(run_point(point.ebn0_db, p, sim, parallel, frame));
    }
    return out;
}

}  // namespace

std::pair<double, double> wilson_interval(std::uint64_t errors, std::uint64_t frames) {
    if (frames == 0) return {0.0, 0.0};
    constexpr double z = 1.959963984540054;  // 97.5% normal quantile
    const double n = static_cast<double>(frames);
    const double p = static_cast<double>(errors) / n;
    const double z2n = z * z / n;
    const double denom = 1.0 + z2n;
    const double center = p + z2n / 2.0;
    const double rad = z * std::sqrt(p * (1.0 - p) / n + z2n / (4.0 * n));
    return {std::max(0.0, (center - rad) / denom), std::min(1.0, (center + rad) / denom)};
}

SimResult run_fer(const EnsembleSpec& spec, const LinearCode& code, const SimConfig& sim) {
    return run_fer_impl(spec, code, sim, true);
}

SimResult run_fer_serial(const EnsembleSpec& spec, const LinearCode& code,
                         const SimConfig& sim) {
    return run_fer_impl(spec, code, sim, false);
}

SimResult run_ler_allzero(const EnsembleSpec& spec, const LinearCode& code,
                          const SimConfig& sim) {
    sim.validate();
    if (sim.tx_mode != TxMode::AllZero)
        throw std::invalid_argument("run_ler_allzero: requires AllZero transmit mode");

    SimResult out;
    const BitVector zero(code.n);
    for (std::size_t p = 0; p < sim.points.size(); ++p) {
        const ChannelPoint& point = sim.points[p];
        auto frame = [&](std::size_t point_idx, std::uint64_t f) {
            std::mt19937_64 rng = frame_rng(sim.seed, point_idx, f);
            const auto llr = transmit(zero, point, rng);
            FrameStats st;
            std::vector<BitVector> ests;
            std::vector<double> padded;
            for (const auto& batch : spec.batches) {
                const auto& path = batch.paths.front();  // linear subcode path
                padded.assign(batch.graph->n_vn, 0.0);
                std::copy(llr.begin(), llr.end(), padded.begin());
                auto o = decode(*path.graph, padded, path.cfg, path.syndrome);
                st.iters += o.iterations_used;
                ests.push_back(o.estimate.truncated(code.n));
            }
            bool zero_found = false;
            for (const auto& e : ests) zero_found |= (e == zero);
            st.list_error = !zero_found;

            // maximum-correlation pick over the linear-path outputs, valid
            // codewords first, mirroring the ensemble list rule
            bool any_valid = false;
            std::vector<bool> valid;
            for (const auto& e : ests) {
                valid.push_back(spec.original_h->multiply(e).is_zero());
                any_valid = any_valid || valid.back();
            }
            bool have = false;
            double best = 0.0;
            const BitVector* pick = nullptr;
            for (std::size_t i = 0; i < ests.size(); ++i) {
                if (any_valid && !valid[i]) continue;
                const double s = correlation(ests[i], llr);
                if (!have || s > best) {
                    have = true;
                    best = s;
                    pick = &ests[i];
                }
            }
            st.frame_error = !(pick && *pick == zero);
            return st;
        };
        out.points.push_back(run_point(point.ebn0_db, p, sim, true, frame));
    }
    return out;
}

SimResult run_ml_fer(const LinearCode& code, const SimConfig& sim) {
    sim.validate();
    SimResult out;
    for (std::size_t p = 0; p < sim.points.size(); ++p) {
        const ChannelPoint& point = sim.points[p];
        auto frame = [&](std::size_t point_idx, std::uint64_t f) {
            std::mt19937_64 rng = frame_rng(sim.seed, point_idx, f);
            BitVector x(code.n);
            if (sim.tx_mode == TxMode::RandomCodeword)
                x = code.encode(random_message(code.k, rng));
            const auto llr = transmit(x, point, rng);
            const BitVector est = brute_force_ml(code, llr);
            FrameStats st;
            st.frame_error = est != x;
            st.list_error = st.frame_error;
            return st;
        };
        out.points.push_back(run_point(point.ebn0_db, p, sim, true, frame));
    }
    return out;
}

}  // namespace asced
