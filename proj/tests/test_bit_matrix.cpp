#include <doctest.h>

#include <random>

#include "asced/bit_matrix.hpp"
#include "test_util.hpp"

using namespace asced;

TEST_CASE("bit vector basics") {
    BitVector v = BitVector::from_string("1010011");
    CHECK(v.size() == 7);
    CHECK(v.weight() == 4);
    CHECK(v.get(0));
    CHECK(!v.get(1));
    CHECK(v.support() == std::vector<std::size_t>{0, 2, 5, 6});
    CHECK(v.to_string() == "1010011");

    BitVector w = BitVector::from_string("1100001");
    CHECK((v ^ w).to_string() == "0110010");
    CHECK(v.dot(w) == (v & w).weight() % 2);
    CHECK(v.overlap(w) == 2);

    BitVector big(130);
    big.set(129, true);
    CHECK(big.weight() == 1);
    CHECK(big.lowest_set_bit() == 129);
    big.resize(129);
    CHECK(big.is_zero());
}

TEST_CASE("lexicographic order matches string order") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        const std::size_t n = 1 + rng() % 90;
        BitVector a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a.set(i, rng() & 1u);
            b.set(i, rng() & 1u);
        }
        CHECK(a.lex_less(b) == (a.to_string() < b.to_string()));
    }
}

TEST_CASE("rank of the Hamming(7,4) PCM is 3") {
    CHECK(rank(testutil::hamming74()) == 3);
}

TEST_CASE("rank zero and identity cases") {
    CHECK(rank(BitMatrix(4, 6)) == 0);
    CHECK(rank(BitMatrix::identity(5)) == 5);
    CHECK(rank(BitMatrix(0, 0)) == 0);
}

TEST_CASE("row space membership against explicit span enumeration") {
    const BitMatrix h = testutil::hamming74();
    CHECK(in_row_space(BitVector::from_string("1100110"), h));   // row1 + row2
    CHECK(!in_row_space(BitVector::from_string("1111111"), h));
    CHECK(in_row_space(BitVector(7), h));  // zero vector in every span

    const auto span = testutil::span_of(h);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        BitVector v(7);
        for (int i = 0; i < 7; ++i) v.set(i, rng() & 1u);
        const bool oracle = std::find(span.begin(), span.end(), v) != span.end();
        CHECK(in_row_space(v, h) == oracle);
    }

    CHECK_THROWS_AS(in_row_space(BitVector(6), h), std::invalid_argument);
}

TEST_CASE("null space basis of known matrices") {
    const BitMatrix h = testutil::hamming74();
    const BitMatrix b = null_space_basis(h);
    REQUIRE(b.rows() == 4);
    REQUIRE(b.cols() == 7);
    CHECK(rank(b) == 4);
    for (std::size_t i = 0; i < b.rows(); ++i)
        CHECK(h.multiply(b.row(i)).is_zero());

    CHECK(null_space_basis(BitMatrix::identity(4)).rows() == 0);

    const BitMatrix z(2, 5);
    const BitMatrix zb = null_space_basis(z);
    CHECK(zb.rows() == 5);
    CHECK(rank(zb) == 5);
}

TEST_CASE("rank plus nullity equals column count on random matrices") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 16;
        const BitMatrix m = testutil::random_matrix(rows, cols, rng);
        const BitMatrix b = null_space_basis(m);
        CHECK(rank(m) + b.rows() == cols);
        CHECK(rank(b) == b.rows());
        for (std::size_t i = 0; i < b.rows(); ++i)
            CHECK(m.multiply(b.row(i)).is_zero());
    }
}

TEST_CASE("Gf2Basis rank_gain matches recomputed rank") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 50; ++t) {
        const std::size_t cols = 4 + rng() % 12;
        const BitMatrix base = testutil::random_matrix(1 + rng() % 6, cols, rng);
        const BitMatrix extra = testutil::random_matrix(1 + rng() % 6, cols, rng);
        Gf2Basis basis(base);
        std::vector<BitVector> ex;
        for (std::size_t i = 0; i < extra.rows(); ++i) ex.push_back(extra.row(i));
        CHECK(basis.dim() + basis.rank_gain(ex) == rank(BitMatrix::vstack(base, extra)));
    }
}

TEST_CASE("matrix multiply and transpose") {
    const BitMatrix h = testutil::hamming74();
    const BitVector x = BitVector::from_string("1110000");
    CHECK(h.multiply(x).is_zero());  // codeword
    const BitVector y = BitVector::from_string("1000000");
    CHECK(h.multiply(y).to_string() == "100");
    CHECK(h.transposed().transposed() == h);
}
