#include "asced/sspcm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace asced {

namespace {

std::size_t choose2(std::size_t x) { return x * (x - 1) / 2; }

}  // namespace

std::size_t count_4cycles(const BitMatrix& h) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        for (std::size_t j = i + 1; j < h.rows(); ++j)
            total += choose2(h.row(i).overlap(h.row(j)));
    return total;
}

BitMatrix eliminate_4cycles(const BitMatrix& h, const std::vector<std::size_t>& r_set,
                            const std::vector<std::size_t>& t_set) {
    if (r_set.size() < 2 || t_set.size() < 2)
        throw std::invalid_argument("eliminate_4cycles: |R| and |T| must be >= 2");
    for (std::size_t r : r_set)
        for (std::size_t t : t_set)
            if (!h.get(r, t))
                throw std::invalid_argument("eliminate_4cycles: (R,T) block is not all-ones");

    BitMatrix out = h;
    out.append_zero_column();  // AVN
    BitVector acn(out.cols());
    for (std::size_t t : t_set) acn.set(t, true);
    acn.set(out.cols() - 1, true);
    for (std::size_t r : r_set) out.row(r).xor_with(acn);
    out.append_row(std::move(acn));  // ACN
    return out;
}

SearchSpace build_search_space(const BitMatrix& h, std::size_t s_max,
                               const SearchEffort& effort) {
    if (s_max < 1) throw std::invalid_argument("build_search_space: s_max must be >= 1");
    SearchSpace sp;
    sp.target_rank = rank(h);
    sp.s = BitMatrix(0, h.cols());

    MinWeightStream stream(h, effort);
    sp.exhaustive_stream = stream.exhaustive();
    Gf2Basis basis;
    bool have_prev = false;
    unsigned prev_weight = 0;
    while (sp.s.rows() < s_max) {
        auto next = stream.next();
        if (!next) break;
        sp.s.append_row(next->word);
        sp.weights.push_back(next->weight);
        basis.insert(next->word);
        if (have_prev && next->weight > prev_weight && basis.dim() == sp.target_rank)
            break;  // full rank and the weight class just increased
        prev_weight = next->weight;
        have_prev = true;
    }
    sp.rank_reached = basis.dim() == sp.target_rank;
    return sp;
}

std::optional<Pcrb> identify_pcrb(std::size_t i, std::size_t j, const SearchSpace& space) {
    if (i >= j || j >= space.s.rows()) throw std::invalid_argument("identify_pcrb: bad row pair");
    const BitVector t_mask = space.s.row(i) & space.s.row(j);
    if (t_mask.weight() < 2) return std::nullopt;

    std::vector<std::size_t> rows = {i, j};
    for (std::size_t r = 0; r < space.s.rows(); ++r) {
        if (r == i || r == j) continue;
        const BitVector& cand = space.s.row(r);
        if (!cand.covers(t_mask)) continue;
        bool clean = true;
        for (std::size_t q : rows) {
            if ((cand & space.s.row(q)) != t_mask) {
                clean = false;
                break;
            }
        }
        if (clean) rows.push_back(r);
    }
    std::sort(rows.begin(), rows.end());

    Pcrb p;
    p.row_indices = std::move(rows);
    p.t_cols = t_mask.support();
    p.s_size = p.row_indices.size();
    p.t_size = p.t_cols.size();
    return p;
}

BitVector SspcmResult::lift(const BitVector& x) const {
    if (x.size() != n_original) throw std::invalid_argument("lift: length mismatch");
    BitVector ext = x;
    ext.resize(n_original + avn_count);
    std::size_t avn = n_original;
    for (const auto& blk : applied_blocks) {
        bool parity = false;
        for (std::size_t t : blk.pcrb.t_cols) parity ^= x.get(t);
        ext.set(avn++, parity);
    }
    return ext;
}

namespace {

// candidate scored lazily: phase 1 keeps only (rank_gain, block_size)
struct PairScore {
    bool valid = false;
    std::uint32_t rank_gain = 0;
    std::uint32_t block_size = 0;
};

struct Builder {
    std::size_t n = 0;
    std::vector<BitVector> rows;      // growing ssPCM, width n + avn
    std::vector<BitVector> rows_on_n; // same rows restricted to the original columns
    std::vector<std::size_t> colw;    // original-column weights
    std::size_t cyc_total = 0;
    std::size_t total_weight = 0;
    Gf2Basis constraints;             // consumed/verbatim rows over the original columns

    std::size_t cross_cycles(const std::vector<BitVector>& block_on_n) const {
        std::size_t c = 0;
        for (const auto& hrow : rows_on_n)
            for (const auto& p : block_on_n) c += choose2(hrow.overlap(p));
        return c;
    }

    double column_weight_variance(const std::vector<BitVector>& block_on_n) const {
        std::vector<std::size_t> w = colw;
        for (const auto& p : block_on_n)
            for (std::size_t c : p.support()) ++w[c];
        double mean = 0;
        for (auto v : w) mean += static_cast<double>(v);
        mean /= static_cast<double>(n);
        double var = 0;
        for (auto v : w) {
            const double d = static_cast<double>(v) - mean;
            var += d * d;
        }
        return var / static_cast<double>(n);
    }

    BitMatrix snapshot() const {
        BitMatrix m(0, rows.empty() ? n : rows.front().size());
        for (const auto& r : rows) m.append_row(r);
        return m;
    }
};

}  // namespace

SspcmResult build_sspcm(const SearchSpace& space, std::size_t w_max) {
    if (space.s.rows() == 0) throw std::invalid_argument("build_sspcm: empty search space");
    const std::size_t n = space.s.cols();

    SspcmResult res;
    res.n_original = n;
    res.target_rank = space.target_rank;

    // live copy of the space; rows are removed as they are consumed
    std::vector<BitVector> work;
    std::vector<unsigned> wweight;
    for (std::size_t r = 0; r < space.s.rows(); ++r) {
        work.push_back(space.s.row(r));
        wweight.push_back(space.weights[r]);
    }

    Builder b;
    b.n = n;
    b.colw.assign(n, 0);

    const auto maybe_snapshot_stage1 = [&] {
        if (!res.sspcm_1 && b.constraints.dim() == space.target_rank)
            res.sspcm_1 = b.snapshot();
    };

    while (b.total_weight < w_max && !work.empty()) {
        const std::size_t m = work.size();

        // phase 1: cheap scores for every row pair, in deterministic order
        std::size_t best_pair = m * m;  // sentinel
        PairScore best{};
        if (m >= 2) {
            SearchSpace view;
            view.s = BitMatrix(0, n);
            for (const auto& r : work) view.s.append_row(r);
            const std::size_t n_pairs = m * (m - 1) / 2;
            std::vector<PairScore> scores(n_pairs);
#ifdef _OPENMP
#pragma omp parallel
#endif
            {
                BitVector t_scratch(n);
                std::vector<std::size_t> members;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 32)
#endif
                for (long long pi = 0; pi < static_cast<long long>(n_pairs); ++pi) {
                    // unrank pair index -> (i, j), i < j, lexicographic
                    std::size_t idx = static_cast<std::size_t>(pi);
                    std::size_t i = 0;
                    std::size_t remaining = m - 1;
                    while (idx >= remaining) {
                        idx -= remaining;
                        ++i;
                        --remaining;
                    }
                    const std::size_t j = i + 1 + idx;

                    // lean block finder, mirrors identify_pcrb exactly
                    BitVector::and_into(work[i], work[j], t_scratch);
                    if (t_scratch.weight() < 2) continue;
                    members.assign({i, j});
                    for (std::size_t r = 0; r < m; ++r) {
                        if (r == i || r == j) continue;
                        if (!work[r].covers(t_scratch)) continue;
                        bool clean = true;
                        for (std::size_t q : members) {
                            if (!work[r].and_equals(work[q], t_scratch)) {
                                clean = false;
                                break;
                            }
                        }
                        if (clean) members.push_back(r);
                    }
                    PairScore sc;
                    sc.valid = true;
                    sc.rank_gain =
                        static_cast<std::uint32_t>(b.constraints.rank_gain(work, members));
                    sc.block_size = static_cast<std::uint32_t>(members.size());
                    scores[static_cast<std::size_t>(pi)] = sc;
                }
            }

            // deterministic reduction: max rank gain, then max block size
            for (std::size_t pi = 0; pi < n_pairs; ++pi) {
                const auto& sc = scores[pi];
                if (!sc.valid) continue;
                if (best_pair == m * m || sc.rank_gain > best.rank_gain ||
                    (sc.rank_gain == best.rank_gain && sc.block_size > best.block_size)) {
                    best = sc;
                    best_pair = pi;
                }
            }

            if (best_pair != m * m) {
                // phase 2: break remaining ties by 4-cycle count then column
                // weight variance, scanning shortlisted pairs in order
                std::size_t chosen = n_pairs;
                Pcrb chosen_pcrb;
                std::size_t chosen_cyc = 0;
                double chosen_var = 0;
                std::size_t i = 0, j = 1, remaining = m - 1, base = 0;
                for (std::size_t pi = 0; pi < n_pairs; ++pi) {
                    if (pi - base >= remaining) {
                        base += remaining;
                        --remaining;
                        ++i;
                    }
                    j = i + 1 + (pi - base);
                    const auto& sc = scores[pi];
                    if (!sc.valid || sc.rank_gain != best.rank_gain ||
                        sc.block_size != best.block_size)
                        continue;
                    auto pcrb = identify_pcrb(i, j, view);
                    std::vector<BitVector> block_on_n;
                    const BitVector t_mask = view.s.row(i) & view.s.row(j);
                    for (std::size_t r : pcrb->row_indices) block_on_n.push_back(work[r] ^ t_mask);
                    block_on_n.push_back(t_mask);  // ACN restricted to original columns
                    const std::size_t cyc = b.cyc_total + b.cross_cycles(block_on_n);
                    const double var = b.column_weight_variance(block_on_n);
                    if (chosen == n_pairs || cyc < chosen_cyc ||
                        (cyc == chosen_cyc && var < chosen_var)) {
                        chosen = pi;
                        chosen_pcrb = *pcrb;
                        chosen_cyc = cyc;
                        chosen_var = var;
                    }
                }

                // apply the selected block
                const BitVector t_mask = [&] {
                    BitVector t(n);
                    for (std::size_t c : chosen_pcrb.t_cols) t.set(c, true);
                    return t;
                }();
                const std::size_t width = n + res.avn_count;
                for (auto& r : b.rows) r.resize(width + 1);
                BitMatrix replacement(0, width + 1);
                std::vector<BitVector> block_on_n;
                for (std::size_t r : chosen_pcrb.row_indices) {
                    BitVector mod = work[r] ^ t_mask;
                    block_on_n.push_back(mod);
                    mod.resize(width + 1);
                    mod.set(width, true);
                    replacement.append_row(mod);
                    b.rows.push_back(replacement.row(replacement.rows() - 1));
                }
                BitVector acn = t_mask;
                block_on_n.push_back(acn);
                acn.resize(width + 1);
                acn.set(width, true);
                replacement.append_row(acn);
                b.rows.push_back(acn);

                b.cyc_total += b.cross_cycles(block_on_n);
                for (const auto& p : block_on_n)
                    for (std::size_t c : p.support()) ++b.colw[c];
                for (const auto& p : block_on_n) b.rows_on_n.push_back(p);
                for (std::size_t r : chosen_pcrb.row_indices) {
                    b.constraints.insert(work[r]);
                    b.total_weight += work[r].weight() - chosen_pcrb.t_size + 1;
                }
                b.total_weight += chosen_pcrb.t_size + 1;  // ACN row
                ++res.avn_count;
                ++res.acn_count;
                res.applied_blocks.push_back({chosen_pcrb, replacement, t_mask});

                for (auto it = chosen_pcrb.row_indices.rbegin();
                     it != chosen_pcrb.row_indices.rend(); ++it) {
                    work.erase(work.begin() + static_cast<std::ptrdiff_t>(*it));
                    wweight.erase(wweight.begin() + static_cast<std::ptrdiff_t>(*it));
                }
                maybe_snapshot_stage1();
                continue;
            }
        }

        // no PCRB anywhere: append the first remaining row verbatim
        BitVector row = work.front();
        work.erase(work.begin());
        wweight.erase(wweight.begin());
        b.constraints.insert(row);
        b.total_weight += row.weight();
        b.cyc_total += b.cross_cycles({row});
        for (std::size_t c : row.support()) ++b.colw[c];
        b.rows_on_n.push_back(row);
        res.verbatim_rows.push_back(row);
        row.resize(n + res.avn_count);
        b.rows.push_back(std::move(row));
        maybe_snapshot_stage1();
    }

    res.sspcm_2 = b.snapshot();
    res.achieved_rank = b.constraints.dim();
    return res;
}

PcmStats pcm_stats(const BitMatrix& h) {
    PcmStats st;
    st.rows = h.rows();
    st.cols = h.cols();
    st.rank = rank(h);
    st.weight = h.weight();
    st.four_cycles = count_4cycles(h);
    st.girth_ge_6 = st.four_cycles == 0;
    return st;
}

}  // namespace asced
