#pragma once

#include <cstddef>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "asced/bit_vector.hpp"

namespace asced {

/// Dense GF(2) matrix stored as bit-packed rows of equal length.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVector(cols)) {}

    static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    const BitVector& row(std::size_t i) const { return rows_[i]; }
    BitVector& row(std::size_t i) { return rows_[i]; }

    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool v) { rows_[i].set(j, v); }

    void append_row(BitVector r);

    /// Widen every row by one trailing zero column.
    void append_zero_column();

    /// Total number of ones.
    std::size_t weight() const;

    /// Syndrome m * x^T as a column vector of length rows().
    BitVector multiply(const BitVector& x) const;

    BitMatrix transposed() const;

    /// Vertical stack [top; bottom].
    static BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Incrementally maintained row-echelon basis of a GF(2) row space.
/// Rows are kept reduced so membership tests are a single sweep.
class Gf2Basis {
public:
    Gf2Basis() = default;
    explicit Gf2Basis(const BitMatrix& m) {
        for (std::size_t i = 0; i < m.rows(); ++i) insert(m.row(i));
    }

    /// Reduce v against the basis; absorb it when independent.
    /// Returns true iff v was independent (dimension grew).
    bool insert(BitVector v);

    /// True iff v lies in the spanned row space.
    bool contains(BitVector v) const;

    std::size_t dim() const { return rows_.size(); }

    /// Number of the given rows independent of the basis and of each other,
    /// without modifying or copying the basis.
    std::size_t rank_gain(const std::vector<BitVector>& extra) const;

    /// Same, over a subset of rows selected by index.
    std::size_t rank_gain(const std::vector<BitVector>& rows,
                          const std::vector<std::size_t>& idx) const;

    /// Dimension after hypothetically inserting the given rows.
    std::size_t dim_with(const std::vector<BitVector>& extra) const {
        return dim() + rank_gain(extra);
    }

    /// Reduce v against the basis in place, for callers that manage their
    /// own elimination on top.
    void reduce_copy(BitVector& v) const { reduce(v); }

private:
    void reduce(BitVector& v) const;

    std::vector<BitVector> rows_;     // echelon rows, ascending pivot
    std::vector<std::size_t> pivots_; // pivot column per row
};

std::size_t rank(const BitMatrix& m);

/// True iff v is a GF(2) linear combination of the rows of m.
bool in_row_space(const BitVector& v, const BitMatrix& m);

/// Basis of {x : m x^T = 0} as a (cols - rank) x cols matrix, rows ordered
/// by ascending free column.
BitMatrix null_space_basis(const BitMatrix& m);

}  // namespace asced
