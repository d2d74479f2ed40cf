#include "asced/low_weight.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <unordered_set>

namespace asced {

MinWeightStream::MinWeightStream(const BitMatrix& gen, const SearchEffort& effort) {
    n_ = gen.cols();
    Gf2Basis b;
    basis_ = BitMatrix(0, n_);
    for (std::size_t i = 0; i < gen.rows(); ++i) {
        if (b.insert(gen.row(i))) basis_.append_row(gen.row(i));
    }
    exhaustive_ = basis_.rows() <= kExhaustiveDimLimit;
    if (exhaustive_) {
        histogram_pass();
        current_weight_ = 0;
    } else {
        randomized_search(effort);
    }
}

// One Gray-code sweep over all 2^dim - 1 nonzero combinations; each step
// flips a single basis row in the accumulator.
void MinWeightStream::histogram_pass() {
    class_counts_.assign(n_ + 1, 0);
    const std::size_t dim = basis_.rows();
    if (dim == 0) return;
    BitVector acc(n_);
    const std::uint64_t total = std::uint64_t{1} << dim;
    for (std::uint64_t i = 1; i < total; ++i) {
        acc.xor_with(basis_.row(static_cast<std::size_t>(std::countr_zero(i))));
        ++class_counts_[acc.weight()];
    }
}

void MinWeightStream::materialize_class(unsigned weight) {
    buffer_.clear();
    buffer_pos_ = 0;
    const std::size_t dim = basis_.rows();
    if (dim == 0) return;
    buffer_.reserve(static_cast<std::size_t>(class_counts_[weight]));
    BitVector acc(n_);
    const std::uint64_t total = std::uint64_t{1} << dim;
    for (std::uint64_t i = 1; i < total; ++i) {
        acc.xor_with(basis_.row(static_cast<std::size_t>(std::countr_zero(i))));
        if (acc.weight() == weight) buffer_.push_back(acc);
    }
    std::sort(buffer_.begin(), buffer_.end(),
              [](const BitVector& a, const BitVector& b) { return a.lex_less(b); });
}

void MinWeightStream::randomized_search(const SearchEffort& effort) {
    const std::size_t dim = basis_.rows();
    std::unordered_set<BitVector, BitVectorHash> seen;
    std::mt19937_64 rng(effort.seed ^ (0x9e3779b97f4a7c15ULL * (dim + 1)));

    std::vector<std::size_t> cols(n_);
    for (std::size_t c = 0; c < n_; ++c) cols[c] = c;

    // Within a weight class the stream keeps discovery order. Sorting a class
    // lexicographically would front-load words supported on the low indices,
    // which collectively span only a fraction of the space and starve
    // downstream rank targets; the search order carries no such bias and is
    // just as deterministic under the fixed seed.
    struct Found {
        BitVector word;
        unsigned weight;
        std::uint64_t order;
    };
    std::vector<Found> found;
    std::uint64_t counter = 0;
    const auto record = [&](const BitVector& w) {
        if (w.is_zero()) return;
        if (seen.insert(w).second)
            found.push_back({w, static_cast<unsigned>(w.weight()), counter++});
    };

    for (std::uint32_t r = 0; r < effort.restarts; ++r) {
        // random information set: eliminate with a shuffled column preference
        for (std::size_t c = n_ - 1; c > 0; --c)
            std::swap(cols[c], cols[rng() % (c + 1)]);

        std::vector<BitVector> work;
        work.reserve(dim);
        for (std::size_t i = 0; i < dim; ++i) work.push_back(basis_.row(i));
        std::size_t top = 0;
        for (std::size_t ci = 0; ci < n_ && top < dim; ++ci) {
            const std::size_t c = cols[ci];
            std::size_t piv = top;
            while (piv < dim && !work[piv].get(c)) ++piv;
            if (piv == dim) continue;
            std::swap(work[top], work[piv]);
            for (std::size_t i = 0; i < dim; ++i)
                if (i != top && work[i].get(c)) work[i].xor_with(work[top]);
            ++top;
        }

        // low-weight candidates from small combinations of systematic rows
        for (std::size_t i = 0; i < dim; ++i) {
            record(work[i]);
            if (effort.combine_depth < 2) continue;
            for (std::size_t j = i + 1; j < dim; ++j) {
                BitVector ij = work[i] ^ work[j];
                record(ij);
                if (effort.combine_depth < 3) continue;
                for (std::size_t k = j + 1; k < dim; ++k) record(ij ^ work[k]);
            }
        }

        if (found.size() > effort.pool_limit) {
            std::nth_element(found.begin(), found.begin() + effort.pool_limit / 2, found.end(),
                             [](const Found& a, const Found& b) {
                                 return a.weight != b.weight ? a.weight < b.weight
                                                             : a.order < b.order;
                             });
            for (std::size_t i = effort.pool_limit / 2; i < found.size(); ++i)
                seen.erase(found[i].word);
            found.resize(effort.pool_limit / 2);
        }
    }

    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) {
        return a.weight != b.weight ? a.weight < b.weight : a.order < b.order;
    });
    pool_.reserve(found.size());
    for (auto& f : found) pool_.push_back({std::move(f.word), f.weight});
    pool_pos_ = 0;
}

std::optional<WeightedWord> MinWeightStream::next() {
    if (!exhaustive_) {
        if (pool_pos_ >= pool_.size()) return std::nullopt;
        return pool_[pool_pos_++];
    }
    while (buffer_pos_ >= buffer_.size()) {
        unsigned w = current_weight_ + 1;
        while (w <= n_ && class_counts_[w] == 0) ++w;
        if (w > n_) return std::nullopt;
        current_weight_ = w;
        materialize_class(w);
    }
    return WeightedWord{buffer_[buffer_pos_++], current_weight_};
}

}  // namespace asced
