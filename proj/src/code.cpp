#include "asced/code.hpp"

#include <stdexcept>

namespace asced {

BitVector LinearCode::encode(const BitVector& u) const {
    if (u.size() != k) throw std::invalid_argument("encode: message length != k");
    BitVector x(n);
    for (std::size_t i = 0; i < k; ++i)
        if (u.get(i)) x.xor_with(g.row(i));
    return x;
}

LinearCode from_pcm(const BitMatrix& h) {
    const std::size_t r = rank(h);
    if (r >= h.cols()) throw std::invalid_argument("from_pcm: full-rank PCM defines the empty code");
    LinearCode code;
    code.h = h;
    code.g = null_space_basis(h);
    code.n = h.cols();
    code.k = h.cols() - r;
    return code;
}

SubcodePcm append_rows(const LinearCode& code, const BitMatrix& m) {
    if (m.rows() > 0 && m.cols() != code.n)
        throw std::invalid_argument("append_rows: column-count mismatch");
    SubcodePcm sub;
    sub.base_h = code.h;
    sub.appended = m;
    sub.stacked = BitMatrix::vstack(code.h, m);
    sub.delta = rank(sub.stacked) - rank(code.h);
    return sub;
}

BitVector sample_independent_row(const LinearCode& code, std::size_t d_c,
                                 std::mt19937_64& rng) {
    constexpr int kMaxAttempts = 10000;
    if (d_c == 0 || d_c > code.n)
        throw std::invalid_argument("sample_independent_row: weight out of range");
    Gf2Basis basis(code.h);
    std::vector<std::size_t> idx(code.n);
    for (std::size_t i = 0; i < code.n; ++i) idx[i] = i;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        // partial Fisher-Yates for d_c distinct positions
        for (std::size_t i = 0; i < d_c; ++i)
            std::swap(idx[i], idx[i + rng() % (code.n - i)]);
        BitVector v(code.n);
        for (std::size_t i = 0; i < d_c; ++i) v.set(idx[i], true);
        if (!basis.contains(v)) return v;
    }
    throw SearchExhausted("sample_independent_row: no independent row of this weight found");
}

std::vector<AffineSubcode> enumerate_cosets(const SubcodePcm& sub, const LinearCode& code) {
    if (sub.delta == 0) throw std::invalid_argument("enumerate_cosets: delta == 0, no proper cosets");
    const std::size_t delta = sub.delta;
    const std::size_t k = code.k;

    // syndrome map on generator rows: B[r][j] = appended_r . g_j
    BitMatrix b(sub.appended.rows(), k);
    for (std::size_t r = 0; r < sub.appended.rows(); ++r)
        for (std::size_t j = 0; j < k; ++j)
            if (sub.appended.row(r).dot(code.g.row(j))) b.set(r, j, true);

    // first linearly independent appended constraints, in row order
    std::vector<std::size_t> indep;
    {
        Gf2Basis basis;
        for (std::size_t r = 0; r < b.rows(); ++r)
            if (basis.insert(b.row(r))) indep.push_back(r);
    }
    if (indep.size() != delta)
        throw std::logic_error("enumerate_cosets: inconsistent rank deficiency");

    // Gaussian elimination on the delta x k submatrix D with tracked row ops:
    // [D | I] -> [rref(D) | E], so u with support on the pivot columns set to
    // E * t solves D u^T = t.
    BitMatrix d(delta, k);
    for (std::size_t r = 0; r < delta; ++r) d.row(r) = b.row(indep[r]);
    BitMatrix e = BitMatrix::identity(delta);
    std::vector<std::size_t> pivot_cols;
    std::size_t top = 0;
    for (std::size_t c = 0; c < k && top < delta; ++c) {
        std::size_t piv = top;
        while (piv < delta && !d.get(piv, c)) ++piv;
        if (piv == delta) continue;
        std::swap(d.row(top), d.row(piv));
        std::swap(e.row(top), e.row(piv));
        for (std::size_t r = 0; r < delta; ++r) {
            if (r != top && d.get(r, c)) {
                d.row(r).xor_with(d.row(top));
                e.row(r).xor_with(e.row(top));
            }
        }
        pivot_cols.push_back(c);
        ++top;
    }

    std::vector<AffineSubcode> cosets;
    cosets.reserve(std::size_t{1} << delta);
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << delta); ++t) {
        BitVector target(delta);
        for (std::size_t r = 0; r < delta; ++r)
            if ((t >> r) & 1u) target.set(r, true);
        BitVector u(k);
        for (std::size_t r = 0; r < delta; ++r)
            if (e.row(r).dot(target)) u.set(pivot_cols[r], true);
        AffineSubcode c;
        c.h_s = sub.stacked;
        c.x_a = code.encode(u);
        c.s_a = sub.stacked.multiply(c.x_a);
        cosets.push_back(std::move(c));
    }
    return cosets;
}

bool verify_cover(const std::vector<CoverPart>& parts, const LinearCode& code) {
    if (code.k > 20) throw std::invalid_argument("verify_cover: k too large for exhaustive check");
    const auto member = [](const CoverPart& part, const BitVector& x) {
        if (const auto* sub = std::get_if<SubcodePcm>(&part))
            return sub->stacked.multiply(x).is_zero();
        const auto& aff = std::get<AffineSubcode>(part);
        return aff.h_s.multiply(x) == aff.s_a;
    };
    BitVector x(code.n);
    const std::uint64_t total = std::uint64_t{1} << code.k;
    for (std::uint64_t i = 0; i < total; ++i) {
        if (i) x.xor_with(code.g.row(static_cast<std::size_t>(std::countr_zero(i))));
        bool covered = false;
        for (const auto& part : parts) {
            if (member(part, x)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

double correlation(const BitVector& x, std::span<const double> llr) {
    double s = 0.0;
    for (std::size_t i = 0; i < llr.size(); ++i) s += x.get(i) ? -llr[i] : llr[i];
    return s;
}

BitVector brute_force_ml(const LinearCode& code, std::span<const double> llr) {
    if (code.k > 20) throw std::invalid_argument("brute_force_ml: k too large");
    if (llr.size() != code.n) throw std::invalid_argument("brute_force_ml: llr length mismatch");
    BitVector x(code.n);
    BitVector best = x;
    double best_score = correlation(x, llr);
    const std::uint64_t total = std::uint64_t{1} << code.k;
    for (std::uint64_t i = 1; i < total; ++i) {
        x.xor_with(code.g.row(static_cast<std::size_t>(std::countr_zero(i))));
        const double s = correlation(x, llr);
        if (s > best_score || (s == best_score && x.lex_less(best))) {
            best_score = s;
            best = x;
        }
    }
    return best;
}

}  // namespace asced
