#include "asced/ensemble.hpp"

#include <stdexcept>

namespace asced {

AscedBatch build_batch(const SubcodePcm& sub, const LinearCode& code,
                       const DecoderConfig& cfg, bool optimize,
                       const SspcmOptions& opts) {
    AscedBatch batch;
    batch.subcode = sub;

    if (optimize) {
        auto space = build_search_space(sub.stacked, opts.s_max, opts.effort);
        auto res = build_sspcm(space, opts.w_max);
        batch.decoding_h = std::make_shared<BitMatrix>(res.sspcm_2);
        batch.optimized = std::move(res);
    } else {
        batch.decoding_h = std::make_shared<BitMatrix>(sub.stacked);
    }
    batch.graph = std::make_shared<TannerGraph>(build_tanner(*batch.decoding_h));

    const auto make_path = [&](const BitVector& offset, std::size_t idx) {
        EnsemblePath p;
        p.graph = batch.graph;
        p.cfg = cfg;
        p.n_code = code.n;
        const BitVector ext =
            batch.optimized ? batch.optimized->lift(offset) : offset;
        if (ext.size() != batch.decoding_h->cols())
            throw std::logic_error("build_batch: offset extension width mismatch");
        p.syndrome = batch.decoding_h->multiply(ext);
        p.label = "coset" + std::to_string(idx);
        return p;
    };

    if (sub.delta == 0) {
        batch.paths.push_back(make_path(BitVector(code.n), 0));
    } else {
        const auto cosets = enumerate_cosets(sub, code);
        for (std::size_t c = 0; c < cosets.size(); ++c)
            batch.paths.push_back(make_path(cosets[c].x_a, c));
        if (code.k <= 16) {
            std::vector<CoverPart> parts(cosets.begin(), cosets.end());
            if (!verify_cover(parts, code))
                throw std::logic_error("build_batch: coset family does not cover the code");
            batch.cover_verified = true;
        }
    }
    return batch;
}

EnsembleOutcome decode_ensemble(const EnsembleSpec& spec, std::span<const double> llr) {
    if (llr.size() != spec.n_code)
        throw std::invalid_argument("decode_ensemble: llr length != code length");

    EnsembleOutcome out;
    std::vector<BitVector> estimates;
    std::vector<bool> valid;
    std::vector<std::string> labels;
    std::vector<double> padded;
    for (const auto& batch : spec.batches) {
        padded.assign(batch.graph->n_vn, 0.0);  // auxiliary VNs stay at zero LLR
        std::copy(llr.begin(), llr.end(), padded.begin());
        for (const auto& path : batch.paths) {
            DecodeOutcome o = decode(*path.graph, padded, path.cfg, path.syndrome);
            BitVector est = o.estimate.truncated(spec.n_code);
            valid.push_back(spec.original_h->multiply(est).is_zero());
            estimates.push_back(std::move(est));
            labels.push_back(path.label);
            out.path_outcomes.push_back(std::move(o));
        }
    }

    bool any_valid = false;
    for (bool v : valid) any_valid |= v;

    bool have = false;
    double best_score = 0.0;
    for (std::size_t p = 0; p < estimates.size(); ++p) {
        if (any_valid && !valid[p]) continue;
        out.list.push_back(estimates[p]);
        const double s = correlation(estimates[p], llr);
        if (!have || s > best_score) {
            have = true;
            best_score = s;
            out.estimate = estimates[p];
            out.winner_path = p;
            out.winner_label = labels[p];
        }
    }
    return out;
}

std::size_t tec(const EnsembleSpec& spec) {
    std::size_t total = 0;
    for (const auto& b : spec.batches) total += b.paths.size() * b.graph->n_edges;
    return total;
}

std::size_t tec_shared(const EnsembleSpec& spec) {
    std::size_t total = 0;
    for (const auto& b : spec.batches) total += b.graph->n_edges;
    return total;
}

}  // namespace asced
