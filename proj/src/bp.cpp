#include "asced/bp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace asced {

namespace {

constexpr double kTanhGuard = 1.0 - 1e-12;

double clamp_mag(double x, double c) { return std::clamp(x, -c, c); }

}  // namespace

void DecoderConfig::validate() const {
    if (alpha <= 0.0) throw std::invalid_argument("DecoderConfig: alpha must be > 0");
    if (variant == CnVariant::Spa && alpha != 1.0)
        throw std::invalid_argument("DecoderConfig: SPA requires alpha == 1");
    if (max_iters < 1) throw std::invalid_argument("DecoderConfig: max_iters must be >= 1");
    if (stop_rule.kind == StopKind::OriginalCode && !stop_rule.original_h)
        throw std::invalid_argument("DecoderConfig: OriginalCode stop rule needs the PCM");
}

void cn_update_nspa(std::span<const double> in, double alpha, std::span<double> out) {
    const std::size_t deg = in.size();
    if (deg == 1) {
        // empty extrinsic product; saturate through the atanh guard
        out[0] = alpha * 2.0 * std::atanh(kTanhGuard);
        return;
    }
    double th[64];
    std::vector<double> th_heap;
    double* t = th;
    if (deg > 64) {
        th_heap.resize(deg);
        t = th_heap.data();
    }
    for (std::size_t u = 0; u < deg; ++u) t[u] = std::tanh(0.5 * in[u]);
    for (std::size_t e = 0; e < deg; ++e) {
        double p = 1.0;
        for (std::size_t u = 0; u < deg; ++u)
            if (u != e) p *= t[u];
        p = std::clamp(p, -kTanhGuard, kTanhGuard);
        out[e] = alpha * 2.0 * std::atanh(p);
    }
}

std::vector<double> cn_update_nspa(std::span<const double> in, double alpha) {
    std::vector<double> out(in.size());
    cn_update_nspa(in, alpha, out);
    return out;
}

void cn_update_nmsa(std::span<const double> in, double alpha, std::span<double> out) {
    const std::size_t deg = in.size();
    if (deg == 1) {
        out[0] = alpha * std::numeric_limits<double>::infinity();
        return;
    }
    unsigned negatives = 0;
    double min1 = std::numeric_limits<double>::infinity();
    double min2 = std::numeric_limits<double>::infinity();
    std::size_t argmin = 0;
    for (std::size_t u = 0; u < deg; ++u) {
        if (in[u] < 0.0) ++negatives;  // sign(0) := +1
        const double mag = std::fabs(in[u]);
        if (mag < min1) {
            min2 = min1;
            min1 = mag;
            argmin = u;
        } else if (mag < min2) {
            min2 = mag;
        }
    }
    for (std::size_t e = 0; e < deg; ++e) {
        const unsigned neg = negatives - (in[e] < 0.0 ? 1u : 0u);
        const double mag = (e == argmin) ? min2 : min1;
        out[e] = (neg & 1u) ? -alpha * mag : alpha * mag;
    }
}

std::vector<double> cn_update_nmsa(std::span<const double> in, double alpha) {
    std::vector<double> out(in.size());
    cn_update_nmsa(in, alpha, out);
    return out;
}

std::vector<double> flip_llr_prefix(std::span<const double> llr, const BitVector& offset) {
    if (llr.size() != offset.size()) throw std::invalid_argument("flip_llr_prefix: length mismatch");
    std::vector<double> out(llr.begin(), llr.end());
    for (std::size_t i : offset.support()) out[i] = -out[i];
    return out;
}

namespace {

bool stop_satisfied(const TannerGraph& g, const DecoderConfig& cfg,
                    const BitVector& syndrome, const BitVector& est) {
    if (cfg.stop_rule.kind == StopKind::OwnSyndrome) {
        for (std::size_t j = 0; j < g.n_cn; ++j) {
            bool parity = false;
            for (std::uint32_t e = g.cn_offset[j]; e < g.cn_offset[j + 1]; ++e)
                parity ^= est.get(g.cn_vn[e]);
            if (parity != syndrome.get(j)) return false;
        }
        return true;
    }
    const BitMatrix& h = *cfg.stop_rule.original_h;
    return h.multiply(est.truncated(h.cols())).is_zero();
}

}  // namespace

DecodeOutcome decode(const TannerGraph& graph, std::span<const double> llr,
                     const DecoderConfig& cfg, const BitVector& syndrome) {
    cfg.validate();
    if (llr.size() != graph.n_vn) throw std::invalid_argument("decode: llr length != VN count");
    if (syndrome.size() != graph.n_cn)
        throw std::invalid_argument("decode: syndrome length != CN count");

    const double clamp = cfg.llr_clamp;
    BitVector est(graph.n_vn);
    for (std::size_t i = 0; i < graph.n_vn; ++i) est.set(i, llr[i] < 0.0);
    if (stop_satisfied(graph, cfg, syndrome, est)) return {est, 0, true};

    std::vector<double> v2c(graph.n_edges), c2v(graph.n_edges);
    for (std::size_t j = 0; j < graph.n_cn; ++j)
        for (std::uint32_t e = graph.cn_offset[j]; e < graph.cn_offset[j + 1]; ++e)
            v2c[e] = clamp_mag(llr[graph.cn_vn[e]], clamp);

    std::vector<double> tot(graph.n_vn);
    for (unsigned it = 1; it <= cfg.max_iters; ++it) {
        // CN pass with the affine sign factor (-1)^syndrome[j]
        for (std::size_t j = 0; j < graph.n_cn; ++j) {
            const std::uint32_t lo = graph.cn_offset[j], hi = graph.cn_offset[j + 1];
            const std::size_t deg = hi - lo;
            if (deg == 0) continue;
            const std::span<const double> in(v2c.data() + lo, deg);
            const std::span<double> out(c2v.data() + lo, deg);
            if (cfg.variant == CnVariant::Nmsa)
                cn_update_nmsa(in, cfg.alpha, out);
            else
                cn_update_nspa(in, cfg.alpha, out);
            const bool sign_flip = syndrome.get(j);
            for (std::size_t e = 0; e < deg; ++e) {
                const double m = sign_flip ? -out[e] : out[e];
                out[e] = clamp_mag(m, clamp);
            }
        }

        // VN pass: a posteriori totals and extrinsic replies
        for (std::size_t i = 0; i < graph.n_vn; ++i) {
            double sum = llr[i];
            for (std::uint32_t s = graph.vn_offset[i]; s < graph.vn_offset[i + 1]; ++s)
                sum += c2v[graph.vn_edge[s]];
            tot[i] = sum;
            for (std::uint32_t s = graph.vn_offset[i]; s < graph.vn_offset[i + 1]; ++s) {
                const std::uint32_t e = graph.vn_edge[s];
                v2c[e] = clamp_mag(sum - c2v[e], clamp);
            }
            est.set(i, sum < 0.0);
        }

        if (stop_satisfied(graph, cfg, syndrome, est)) return {est, it, true};
    }
    return {est, cfg.max_iters, false};
}

}  // namespace asced
