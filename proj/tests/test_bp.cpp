#include <doctest.h>

#include <cmath>
#include <random>

#include "asced/bp.hpp"
#include "asced/code.hpp"
#include "reference_bp.hpp"
#include "test_util.hpp"

using namespace asced;

TEST_CASE("build_tanner structure") {
    const BitMatrix h = testutil::hamming74();
    const TannerGraph g = build_tanner(h);
    CHECK(g.n_vn == 7);
    CHECK(g.n_cn == 3);
    CHECK(g.n_edges == h.weight());
    CHECK(g.n_edges == 12);

    const TannerGraph empty = build_tanner(BitMatrix(3, 5));
    CHECK(empty.n_edges == 0);

    const TannerGraph single = build_tanner(BitMatrix::from_strings({"1111"}));
    CHECK(single.n_cn == 1);
    CHECK(single.cn_offset[1] - single.cn_offset[0] == 4);
}

TEST_CASE("NSPA check-node update") {
    // frozen from scalar evaluation of 2*atanh(prod tanh(in/2))
    const std::vector<double> in = {2.0, -3.0, 4.0};
    const auto out = cn_update_nspa(in, 1.0);
    CHECK(out[0] == doctest::Approx(-2.687649778935551).epsilon(1e-12));
    CHECK(out[1] == doctest::Approx(1.875547674094758).epsilon(1e-12));
    CHECK(out[2] == doctest::Approx(-1.693453660970895).epsilon(1e-12));

    // a zero input erases every other edge's output
    const auto ez = cn_update_nspa(std::vector<double>{5.0, 0.0, -1.0}, 1.0);
    CHECK(ez[0] == 0.0);
    CHECK(ez[2] == 0.0);
    CHECK(ez[1] != 0.0);

    // near-certain inputs pass the remaining belief through with its sign
    const auto sat = cn_update_nspa(std::vector<double>{30.0, 30.0, 1.5}, 1.0);
    CHECK(sat[2] > 20.0);
    CHECK(sat[0] == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("NMSA check-node update") {
    const auto out = cn_update_nmsa(std::vector<double>{2.0, -3.0, 4.0}, 0.5);
    CHECK(out[0] == -1.5);  // 0.5 * (-1) * min(3,4), hand-evaluated
    CHECK(out[1] == 1.0);   // 0.5 * (+1) * min(2,4)
    CHECK(out[2] == -1.0);  // 0.5 * (-1) * min(2,3)

    // two-edge symmetry
    const auto two = cn_update_nmsa(std::vector<double>{-2.5, -2.5}, 1.0);
    CHECK(two[0] == -2.5);
    CHECK(two[1] == -2.5);

    // zero input zeroes the other outputs, sign(0) treated as +1
    const auto z = cn_update_nmsa(std::vector<double>{0.0, -7.0, 3.0}, 1.0);
    CHECK(z[1] == 0.0);
    CHECK(z[2] == 0.0);
    CHECK(z[0] == -3.0);

    // homogeneity under positive scaling
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        const auto in = testutil::random_llrs(5, rng);
        const auto a = cn_update_nmsa(in, 0.75);
        auto scaled = in;
        for (auto& v : scaled) v *= 2.0;
        const auto b = cn_update_nmsa(scaled, 0.75);
        for (int i = 0; i < 5; ++i) CHECK(b[i] == doctest::Approx(2.0 * a[i]).epsilon(1e-12));
    }
}

TEST_CASE("flip_llr_prefix") {
    const std::vector<double> llr = {1, 2, 3, 4, 5, 6, 7};
    const BitVector offset = BitVector::from_string("1110000");
    const auto flipped = flip_llr_prefix(llr, offset);
    CHECK(flipped == std::vector<double>{-1, -2, -3, 4, 5, 6, 7});
    CHECK(flip_llr_prefix(flipped, offset) == llr);             // involution
    CHECK(flip_llr_prefix(llr, BitVector(7)) == llr);           // identity
    CHECK_THROWS_AS(flip_llr_prefix(llr, BitVector(6)), std::invalid_argument);
}

TEST_CASE("noiseless all-zero converges at the channel hard decision") {
    const BitMatrix h = testutil::hamming74();
    const TannerGraph g = build_tanner(h);
    DecoderConfig cfg;
    cfg.variant = CnVariant::Spa;
    cfg.alpha = 1.0;
    const std::vector<double> llr(7, 10.0);
    const auto out = decode(g, llr, cfg, BitVector(3));
    CHECK(out.converged);
    CHECK(out.iterations_used == 0);
    CHECK(out.estimate.is_zero());
}

TEST_CASE("zero syndrome reproduces standard BP bit-exactly") {
    std::mt19937_64 rng(31);
    for (const auto& h : {testutil::hamming74(), testutil::bch15()}) {
        const TannerGraph g = build_tanner(h);
        const BitVector zero_syn(h.rows());
        for (const CnVariant variant : {CnVariant::Spa, CnVariant::Nspa, CnVariant::Nmsa}) {
            DecoderConfig cfg;
            cfg.variant = variant;
            cfg.alpha = variant == CnVariant::Spa ? 1.0 : 0.5;
            cfg.max_iters = 12;
            for (int t = 0; t < 300; ++t) {
                const auto llr = testutil::random_llrs(h.cols(), rng, 6.0);
                const auto mine = decode(g, llr, cfg, zero_syn);
                const auto ref = testutil::reference_bp(h, llr, variant, cfg.alpha, cfg.max_iters);
                CHECK(mine.estimate == ref);
            }
        }
    }
}

TEST_CASE("decoder is deterministic") {
    const BitMatrix h = testutil::bch15();
    const TannerGraph g = build_tanner(h);
    DecoderConfig cfg;
    std::mt19937_64 rng(4);
    const auto llr = testutil::random_llrs(15, rng);
    const auto a = decode(g, llr, cfg, BitVector(h.rows()));
    const auto b = decode(g, llr, cfg, BitVector(h.rows()));
    CHECK(a.estimate == b.estimate);
    CHECK(a.iterations_used == b.iterations_used);
    CHECK(a.converged == b.converged);
}

TEST_CASE("converged outcomes satisfy their stopping predicate") {
    std::mt19937_64 rng(6);
    const LinearCode code = from_pcm(testutil::bch15());
    BitMatrix m(0, 15);
    m.append_row(sample_independent_row(code, 4, rng));
    const SubcodePcm sub = append_rows(code, m);
    const auto cosets = enumerate_cosets(sub, code);
    const TannerGraph g = build_tanner(sub.stacked);

    DecoderConfig cfg;
    cfg.variant = CnVariant::Nmsa;
    cfg.alpha = 0.5;
    int converged = 0;
    for (int t = 0; t < 400; ++t) {
        const auto llr = testutil::random_llrs(15, rng, 8.0);
        for (const auto& coset : cosets) {
            const auto out = decode(g, llr, cfg, coset.s_a);
            if (out.converged) {
                ++converged;
                CHECK(sub.stacked.multiply(out.estimate) == coset.s_a);  // independent recheck
            }
        }
    }
    CHECK(converged > 50);
}

TEST_CASE("affine decode equals standard decode shifted by the offset") {
    // the sign-flip bijection, exercised on the parity subcode of Hamming(7,4)
    const LinearCode code = from_pcm(testutil::hamming74());
    BitMatrix m(0, 7);
    m.append_row(BitVector::from_string("1111111"));
    const SubcodePcm sub = append_rows(code, m);
    const auto cosets = enumerate_cosets(sub, code);
    const auto& affine = cosets[1];
    const TannerGraph g = build_tanner(sub.stacked);

    std::mt19937_64 rng(8);
    for (const CnVariant variant : {CnVariant::Spa, CnVariant::Nspa, CnVariant::Nmsa}) {
        DecoderConfig cfg;
        cfg.variant = variant;
        cfg.alpha = variant == CnVariant::Spa ? 1.0 : 0.625;
        cfg.max_iters = 16;
        for (int t = 0; t < 500; ++t) {
            const auto llr = testutil::random_llrs(7, rng, 5.0);
            const auto base = decode(g, llr, cfg, BitVector(sub.stacked.rows()));
            const auto aff = decode(g, flip_llr_prefix(llr, affine.x_a), cfg, affine.s_a);
            CHECK(aff.estimate == (base.estimate ^ affine.x_a));
            CHECK(aff.iterations_used == base.iterations_used);
            CHECK(aff.converged == base.converged);
        }
    }
}

TEST_CASE("NMSA decode decisions are invariant under positive LLR scaling") {
    const BitMatrix h = testutil::bch15();
    const TannerGraph g = build_tanner(h);
    DecoderConfig cfg;
    cfg.variant = CnVariant::Nmsa;
    cfg.alpha = 0.5;
    cfg.max_iters = 3;  // keeps messages below the clamp for these magnitudes
    std::mt19937_64 rng(12);
    for (int t = 0; t < 200; ++t) {
        const auto llr = testutil::random_llrs(15, rng, 0.5);
        auto scaled = llr;
        for (auto& v : scaled) v *= 1.5;
        const auto a = decode(g, llr, cfg, BitVector(h.rows()));
        const auto b = decode(g, scaled, cfg, BitVector(h.rows()));
        CHECK(a.estimate == b.estimate);
    }
}

TEST_CASE("decode validates dimensions and config") {
    const TannerGraph g = build_tanner(testutil::hamming74());
    DecoderConfig cfg;
    const std::vector<double> llr(7, 1.0);
    CHECK_THROWS_AS(decode(g, std::vector<double>(6, 1.0), cfg, BitVector(3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(decode(g, llr, cfg, BitVector(2)), std::invalid_argument);
    DecoderConfig bad = cfg;
    bad.variant = CnVariant::Spa;
    bad.alpha = 0.5;
    CHECK_THROWS_AS(decode(g, llr, bad, BitVector(3)), std::invalid_argument);
}
