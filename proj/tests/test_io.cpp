#include <doctest.h>

#include <random>
#include <sstream>

#include "asced/pcm_io.hpp"
#include "asced/spec_io.hpp"
#include "test_util.hpp"

using namespace asced;

TEST_CASE("alist and dense round trips preserve the matrix") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const BitMatrix m = testutil::random_matrix(1 + rng() % 10, 1 + rng() % 24, rng);
        {
            std::stringstream ss;
            write_alist(ss, m);
            CHECK(read_alist(ss) == m);
        }
        {
            std::stringstream ss;
            write_dense(ss, m);
            if (m.weight() == 0 && m.rows() > 0) {
                CHECK(read_dense(ss) == m);
            } else if (m.rows() > 0) {
                CHECK(read_dense(ss) == m);
            }
        }
    }
}

TEST_CASE("alist reader skips zero padding entries") {
    // MacKay-style padded column lists
    std::stringstream ss(
        "4 2\n2 3\n1 2 1 1\n3 2\n"
        "1 0\n1 2\n2 0\n1 0\n"
        "1 2 4\n2 3 0\n");
    const BitMatrix m = read_alist(ss);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 4);
    CHECK(m.get(0, 0));
    CHECK(m.get(1, 1));
    CHECK(m.get(0, 3));
}

TEST_CASE("malformed files raise FormatError") {
    std::stringstream truncated("7 3\n3 4\n1 1 1");
    CHECK_THROWS_AS(read_alist(truncated), FormatError);
    std::stringstream empty("");
    CHECK_THROWS_AS(read_dense(empty), FormatError);
    std::stringstream junk("0110\n01x0\n");
    CHECK_THROWS_AS(read_dense(junk), FormatError);
    CHECK_THROWS_AS(load_pcm("/nonexistent/path.pcm"), FormatError);
}

TEST_CASE("dense reader accepts the frozen code files") {
    const BitMatrix b15 = testutil::bch15();
    CHECK(b15.rows() == 8);
    CHECK(b15.cols() == 15);
    CHECK(rank(b15) == 8);
    const BitMatrix b63 = testutil::bch63();
    CHECK(b63.rows() == 33);
    CHECK(b63.cols() == 63);
    CHECK(rank(b63) == 33);
    CHECK(b63.weight() == 594);
}

TEST_CASE("ensemble spec JSON round trip") {
    EnsembleSpecFile spec;
    spec.code_pcm = "h.pcm";
    BatchSpec b;
    b.pcm_file = "h.pcm";
    b.appended_rows = {"1111111"};
    b.optimize = true;
    b.w_max = 500;
    b.decoder.variant = CnVariant::Nspa;
    b.decoder.alpha = 0.75;
    b.decoder.max_iters = 32;
    b.decoder.stop_rule = StopRule::original_code(nullptr);
    spec.batches.push_back(b);

    const auto parsed = ensemble_spec_from_json(to_json(spec));
    CHECK(parsed.code_pcm == "h.pcm");
    REQUIRE(parsed.batches.size() == 1);
    CHECK(parsed.batches[0].appended_rows == b.appended_rows);
    CHECK(parsed.batches[0].optimize);
    CHECK(parsed.batches[0].w_max == 500);
    CHECK(parsed.batches[0].decoder.variant == CnVariant::Nspa);
    CHECK(parsed.batches[0].decoder.alpha == 0.75);
    CHECK(parsed.batches[0].decoder.stop_rule.kind == StopKind::OriginalCode);

    CHECK_THROWS_AS(ensemble_spec_from_json("{"), FormatError);
    CHECK_THROWS_AS(ensemble_spec_from_json("{}"), FormatError);
}

TEST_CASE("subcode spec JSON round trip") {
    SubcodeSpecFile s;
    s.pcm_file = "bch.pcm";
    s.appended_rows = {"010", "001"};
    s.delta = 2;
    const auto parsed = subcode_spec_from_json(to_json(s));
    CHECK(parsed.pcm_file == s.pcm_file);
    CHECK(parsed.appended_rows == s.appended_rows);
    CHECK(parsed.delta == 2);
}

TEST_CASE("csv output is stable") {
    SimResult r;
    PointResult p;
    p.snr_db = 2.5;
    p.frames = 1000;
    p.frame_errors = 10;
    p.list_errors = 8;
    p.fer = 0.01;
    p.ler = 0.008;
    p.mean_iters = 3.25;
    std::tie(p.ci95_lo, p.ci95_hi) = wilson_interval(10, 1000);
    r.points.push_back(p);

    std::stringstream a, b;
    write_csv(a, r);
    write_csv(b, r);
    CHECK(a.str() == b.str());
    const std::string header = "snr_db,frames,frame_errors,list_errors,fer,ler,mean_iters,ci95_lo,ci95_hi\n";
    CHECK(a.str().substr(0, header.size()) == header);
    CHECK(a.str().find("2.5,1000,10,8,") != std::string::npos);
}

TEST_CASE("build_ensemble wires stop rules and PCMs") {
    EnsembleSpecFile file;
    file.code_pcm = testutil::data_path("bch_15_7.pcm");
    BatchSpec b;
    b.pcm_file = file.code_pcm;
    b.appended_rows = {"111100000000000"};
    b.optimize = false;
    b.w_max = 100;
    b.decoder.variant = CnVariant::Nmsa;
    b.decoder.alpha = 0.5;
    b.decoder.max_iters = 10;
    b.decoder.stop_rule = StopRule::original_code(nullptr);
    file.batches.push_back(b);

    const LoadedEnsemble loaded = build_ensemble(file, "");
    CHECK(loaded.code.n == 15);
    CHECK(loaded.code.k == 7);
    REQUIRE(loaded.spec.batches.size() == 1);
    const auto& batch = loaded.spec.batches[0];
    const std::size_t delta = batch.subcode.delta;
    CHECK(batch.paths.size() == std::size_t{1} << delta);
    for (const auto& p : batch.paths) {
        CHECK(p.cfg.stop_rule.kind == StopKind::OriginalCode);
        CHECK(p.cfg.stop_rule.original_h == loaded.spec.original_h);
    }
}
