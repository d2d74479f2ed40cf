#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace asced {

/// Dense GF(2) vector, bit-packed into 64-bit words. Bit i lives at
/// word i/64, position i%64. Padding bits past len() are kept zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

    static BitVector from_string(std::string_view bits) {
        BitVector v(bits.size());
        for (std::size_t i = 0; i < bits.size(); ++i) {
            if (bits[i] == '1')
                v.set(i, true);
            else if (bits[i] != '0')
                throw std::invalid_argument("BitVector: expected '0'/'1' string");
        }
        return v;
    }

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const {
        std::size_t w = 0;
        for (auto word : words_) w += std::popcount(word);
        return w;
    }

    bool is_zero() const {
        for (auto word : words_) {
            if (word) return false;
        }
        return true;
    }

    void xor_with(const BitVector& o) {
        check_same_length(o);
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    }

    BitVector operator^(const BitVector& o) const {
        BitVector r = *this;
        r.xor_with(o);
        return r;
    }

    BitVector operator&(const BitVector& o) const {
        check_same_length(o);
        BitVector r(len_);
        for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] = words_[w] & o.words_[w];
        return r;
    }

    /// Parity of the AND with o, i.e. the GF(2) inner product.
    bool dot(const BitVector& o) const {
        check_same_length(o);
        std::uint64_t acc = 0;
        for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
        return std::popcount(acc) & 1u;
    }

    std::size_t overlap(const BitVector& o) const {
        check_same_length(o);
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_.size(); ++w)
            c += std::popcount(words_[w] & o.words_[w]);
        return c;
    }

    /// True iff the support of o is contained in the support of this vector.
    bool covers(const BitVector& o) const {
        check_same_length(o);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (o.words_[w] & ~words_[w]) return false;
        }
        return true;
    }

    /// out = a & b without allocating; out must already have the same length.
    static void and_into(const BitVector& a, const BitVector& b, BitVector& out) {
        a.check_same_length(b);
        a.check_same_length(out);
        for (std::size_t w = 0; w < a.words_.size(); ++w)
            out.words_[w] = a.words_[w] & b.words_[w];
    }

    /// True iff (*this & o) == expect, without allocating.
    bool and_equals(const BitVector& o, const BitVector& expect) const {
        check_same_length(o);
        check_same_length(expect);
        for (std::size_t w = 0; w < words_.size(); ++w)
            if ((words_[w] & o.words_[w]) != expect.words_[w]) return false;
        return true;
    }

    /// Index of the lowest set bit, or len() when zero.
    std::size_t lowest_set_bit() const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            if (words_[w]) return (w << 6) + std::countr_zero(words_[w]);
        }
        return len_;
    }

    /// Lexicographic order on the '0'/'1' string representation: the vector
    /// with a 0 at the first differing index is the smaller one.
    bool lex_less(const BitVector& o) const {
        check_same_length(o);
        for (std::size_t w = 0; w < words_.size(); ++w) {
            const std::uint64_t diff = words_[w] ^ o.words_[w];
            if (diff) {
                const int b = std::countr_zero(diff);
                return ((words_[w] >> b) & 1u) == 0;
            }
        }
        return false;
    }

    /// Grow or shrink to new_len; new bits are zero, truncated bits discarded.
    void resize(std::size_t new_len) {
        words_.resize(word_count(new_len), 0);
        len_ = new_len;
        mask_padding();
    }

    BitVector truncated(std::size_t new_len) const {
        BitVector r = *this;
        r.resize(new_len);
        return r;
    }

    std::vector<std::size_t> support() const {
        std::vector<std::size_t> idx;
        idx.reserve(weight());
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                idx.push_back((w << 6) + std::countr_zero(word));
                word &= word - 1;
            }
        }
        return idx;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    static std::size_t word_count(std::size_t len) { return (len + 63) >> 6; }

    void check_same_length(const BitVector& o) const {
        if (len_ != o.len_) throw std::invalid_argument("BitVector: length mismatch");
    }

    void mask_padding() {
        if (len_ & 63) words_.back() &= (std::uint64_t{1} << (len_ & 63)) - 1;
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
    std::size_t operator()(const BitVector& v) const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto w : v.words()) {
            h ^= w;
            h *= 0x100000001b3ull;
        }
        h ^= v.size();
        return static_cast<std::size_t>(h);
    }
};

}  // namespace asced
