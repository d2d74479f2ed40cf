#include "asced/bit_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace asced {

BitMatrix BitMatrix::from_strings(std::initializer_list<std::string_view> rows) {
    BitMatrix m;
    for (auto s : rows) m.append_row(BitVector::from_string(s));
    return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void BitMatrix::append_row(BitVector r) {
    if (rows_.empty())
        cols_ = r.size();
    else if (r.size() != cols_)
        throw std::invalid_argument("BitMatrix: row length mismatch");
    rows_.push_back(std::move(r));
}

void BitMatrix::append_zero_column() {
    for (auto& r : rows_) r.resize(cols_ + 1);
    ++cols_;
}

std::size_t BitMatrix::weight() const {
    std::size_t w = 0;
    for (const auto& r : rows_) w += r.weight();
    return w;
}

BitVector BitMatrix::multiply(const BitVector& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BitMatrix: dimension mismatch");
    BitVector s(rows());
    for (std::size_t i = 0; i < rows(); ++i) s.set(i, rows_[i].dot(x));
    return s;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j : rows_[i].support()) t.set(j, i, true);
    return t;
}

BitMatrix BitMatrix::vstack(const BitMatrix& top, const BitMatrix& bottom) {
    if (top.rows() > 0 && bottom.rows() > 0 && top.cols() != bottom.cols())
        throw std::invalid_argument("BitMatrix: vstack column mismatch");
    BitMatrix m = top;
    for (std::size_t i = 0; i < bottom.rows(); ++i) m.append_row(bottom.row(i));
    return m;
}

void Gf2Basis::reduce(BitVector& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (v.get(pivots_[r])) v.xor_with(rows_[r]);
}

bool Gf2Basis::insert(BitVector v) {
    reduce(v);
    const std::size_t p = v.lowest_set_bit();
    if (p == v.size()) return false;
    // back-substitute to keep earlier rows reduced against the new pivot
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (rows_[r].get(p)) rows_[r].xor_with(v);
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

bool Gf2Basis::contains(BitVector v) const {
    reduce(v);
    return v.is_zero();
}

namespace {

template <class Next>
std::size_t rank_gain_impl(const Gf2Basis& basis, std::size_t count, Next&& next) {
    std::vector<BitVector> indep;
    std::vector<std::size_t> ipiv;
    for (std::size_t e = 0; e < count; ++e) {
        BitVector v = next(e);
        basis.reduce_copy(v);
        for (std::size_t r = 0; r < indep.size(); ++r)
            if (v.get(ipiv[r])) v.xor_with(indep[r]);
        const std::size_t p = v.lowest_set_bit();
        if (p == v.size()) continue;
        ipiv.push_back(p);
        indep.push_back(std::move(v));
    }
    return indep.size();
}

}  // namespace

std::size_t Gf2Basis::rank_gain(const std::vector<BitVector>& extra) const {
    return rank_gain_impl(*this, extra.size(), [&](std::size_t e) { return extra[e]; });
}

std::size_t Gf2Basis::rank_gain(const std::vector<BitVector>& rows,
                                const std::vector<std::size_t>& idx) const {
    return rank_gain_impl(*this, idx.size(), [&](std::size_t e) { return rows[idx[e]]; });
}

std::size_t rank(const BitMatrix& m) {
    Gf2Basis b(m);
    return b.dim();
}

bool in_row_space(const BitVector& v, const BitMatrix& m) {
    if (v.size() != m.cols()) throw std::invalid_argument("in_row_space: length mismatch");
    Gf2Basis b(m);
    return b.contains(v);
}

BitMatrix null_space_basis(const BitMatrix& m) {
    const std::size_t n = m.cols();
    // reduced row echelon form, rows kept sorted by pivot column
    std::vector<BitVector> rows;
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        BitVector v = m.row(i);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (v.get(piv[r])) v.xor_with(rows[r]);
        const std::size_t p = v.lowest_set_bit();
        if (p == n) continue;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r].get(p)) rows[r].xor_with(v);
        const auto pos = std::lower_bound(piv.begin(), piv.end(), p) - piv.begin();
        piv.insert(piv.begin() + pos, p);
        rows.insert(rows.begin() + pos, std::move(v));
    }

    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;

    BitMatrix basis_out(0, 0);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        BitVector b(n);
        b.set(f, true);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (rows[r].get(f)) b.set(piv[r], true);
        basis_out.append_row(std::move(b));
    }
    if (basis_out.rows() == 0) basis_out = BitMatrix(0, n);
    return basis_out;
}

}  // namespace asced
