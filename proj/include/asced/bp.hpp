#pragma once

#include <memory>
#include <span>
#include <vector>

#include "asced/bit_matrix.hpp"
#include "asced/tanner.hpp"

namespace asced {

enum class CnVariant { Spa, Nspa, Nmsa };

enum class StopKind {
    OwnSyndrome,   // H_s x^T == syndrome of this decoder
    OriginalCode,  // H x^T == 0 on the original code's PCM
};

struct StopRule {
    StopKind kind = StopKind::OwnSyndrome;
    std::shared_ptr<const BitMatrix> original_h;  // required for OriginalCode

    static StopRule own_syndrome() { return {StopKind::OwnSyndrome, nullptr}; }
    static StopRule original_code(std::shared_ptr<const BitMatrix> h) {
        return {StopKind::OriginalCode, std::move(h)};
    }
};

struct DecoderConfig {
    CnVariant variant = CnVariant::Nmsa;
    double alpha = 1.0;
    unsigned max_iters = 20;
    StopRule stop_rule = StopRule::own_syndrome();
    double llr_clamp = 30.0;

    void validate() const;
};

struct DecodeOutcome {
    BitVector estimate;       // length n_vn; callers truncate to code length
    unsigned iterations_used = 0;
    bool converged = false;
};

/// NSPA check-node rule: out[t] = alpha * 2 atanh(prod_{u != t} tanh(in[u]/2)),
/// with the product clamped away from +-1. SPA is alpha == 1.
void cn_update_nspa(std::span<const double> in, double alpha, std::span<double> out);
std::vector<double> cn_update_nspa(std::span<const double> in, double alpha);

/// NMSA check-node rule: out[t] = alpha * prod_{u != t} sign(in[u]) *
/// min_{u != t} |in[u]|, with sign(0) := +1.
void cn_update_nmsa(std::span<const double> in, double alpha, std::span<double> out);
std::vector<double> cn_update_nmsa(std::span<const double> in, double alpha);

/// Flooding BP with the affine-syndrome CN adaptation: every outgoing CN
/// message of check j is multiplied by (-1)^syndrome[j]. The all-zero
/// syndrome reproduces standard BP exactly. The stop rule is checked on the
/// channel hard decision (iteration 0) and after every full iteration.
DecodeOutcome decode(const TannerGraph& graph, std::span<const double> llr,
                     const DecoderConfig& cfg, const BitVector& syndrome);

/// Sign flip of llr at every support position of offset (involution).
std::vector<double> flip_llr_prefix(std::span<const double> llr, const BitVector& offset);

}  // namespace asced
