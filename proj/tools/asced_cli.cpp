// Command-line surface for affine subcode ensemble decoding: PCM I/O,
// subcode and ensemble generation, ssPCM construction, Monte-Carlo runs,
// and structural reports.

#include <cmath>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>
#include <json.hpp>

#include "asced/pcm_io.hpp"
#include "asced/sim.hpp"
#include "asced/spec_io.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitExhausted = 3;

std::vector<double> parse_snr_sweep(const std::string& s) {
    const auto c1 = s.find(':');
    if (c1 == std::string::npos) return {std::stod(s)};
    const auto c2 = s.find(':', c1 + 1);
    if (c2 == std::string::npos) throw asced::FormatError("snr sweep must be start:step:stop");
    const double start = std::stod(s.substr(0, c1));
    const double step = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
    const double stop = std::stod(s.substr(c2 + 1));
    if (step <= 0) throw asced::FormatError("snr sweep step must be positive");
    std::vector<double> points;
    for (double v = start; v <= stop + 1e-9; v += step) points.push_back(v);
    return points;
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw asced::FormatError("cannot write file: " + path);
    out << text;
}

json stats_json(const asced::PcmStats& st) {
    return json{{"rows", st.rows},       {"cols", st.cols},
                {"rank", st.rank},       {"weight", st.weight},
                {"four_cycles", st.four_cycles}, {"girth_ge_6", st.girth_ge_6}};
}

struct SubcodeArgs {
    std::string pcm, out;
    std::size_t dc = 6, rows = 1;
    std::uint64_t seed = 0;
};

int run_gen_subcode(const SubcodeArgs& a) {
    std::cerr << "config: gen-subcode pcm=" << a.pcm << " dc=" << a.dc << " rows=" << a.rows
              << " seed=" << a.seed << " out=" << a.out << "\n";
    const asced::BitMatrix h = asced::load_pcm(a.pcm);
    const asced::LinearCode code = asced::from_pcm(h);
    std::mt19937_64 rng(a.seed);

    asced::SubcodeSpecFile spec;
    spec.pcm_file = a.pcm;
    asced::Gf2Basis basis(code.h);
    int stale = 0;
    while (spec.appended_rows.size() < a.rows) {
        // jointly independent rows so the rank deficiency equals the row count
        const asced::BitVector v = asced::sample_independent_row(code, a.dc, rng);
        if (!basis.insert(v)) {
            if (++stale >= 10000)
                throw asced::SearchExhausted(
                    "gen-subcode: cannot find jointly independent rows of this weight");
            continue;
        }
        stale = 0;
        spec.appended_rows.push_back(v.to_string());
    }
    spec.delta = a.rows;
    write_text_file(a.out, asced::to_json(spec));
    std::cerr << "gen-subcode: delta=" << spec.delta << "\n";
    return kExitOk;
}

struct SspcmArgs {
    std::string pcm, out, report;
    std::size_t smax = 400, wmax = 2000;
    std::uint32_t effort = 200;
};

int run_build_sspcm(const SspcmArgs& a) {
    std::cerr << "config: build-sspcm pcm=" << a.pcm << " smax=" << a.smax << " wmax=" << a.wmax
              << " effort=" << a.effort << " out=" << a.out << " report=" << a.report << "\n";
    const asced::BitMatrix h = asced::load_pcm(a.pcm);
    asced::SearchEffort effort;
    effort.restarts = a.effort;
    const asced::SearchSpace space = asced::build_search_space(h, a.smax, effort);
    const asced::SspcmResult res = asced::build_sspcm(space, a.wmax);

    json report;
    report["input"] = stats_json(asced::pcm_stats(h));
    report["search_space"] = json{{"rows", space.s.rows()},
                                  {"target_rank", space.target_rank},
                                  {"rank_reached", space.rank_reached},
                                  {"exhaustive", space.exhaustive_stream}};
    report["sspcm_2"] = stats_json(asced::pcm_stats(res.sspcm_2));
    report["sspcm_1"] =
        res.sspcm_1 ? stats_json(asced::pcm_stats(*res.sspcm_1)) : json(nullptr);
    report["avn_count"] = res.avn_count;
    report["acn_count"] = res.acn_count;
    report["applied_blocks"] = res.applied_blocks.size();
    report["verbatim_rows"] = res.verbatim_rows.size();
    report["target_rank"] = res.target_rank;
    report["achieved_rank"] = res.achieved_rank;

    if (!a.out.empty()) asced::save_pcm(a.out, res.sspcm_2);
    const std::string text = report.dump(2) + "\n";
    if (!a.report.empty())
        write_text_file(a.report, text);
    else
        std::cout << text;

    if (!space.rank_reached) {
        std::cerr << "build-sspcm: search budget exhausted before reaching the target rank\n";
        return kExitExhausted;
    }
    return kExitOk;
}

struct EnsembleArgs {
    std::string code_pcm, out, decoder = "nmsa";
    std::vector<std::string> batches;
    double alpha = 0.5;
    unsigned iters = 20;
    bool optimize = false;
    std::size_t wmax = 2000;
};

int run_build_ensemble(const EnsembleArgs& a) {
    std::cerr << "config: build-ensemble code-pcm=" << a.code_pcm << " batches=" << a.batches.size()
              << " decoder=" << a.decoder << " alpha=" << a.alpha << " iters=" << a.iters
              << " optimize=" << (a.optimize ? "true" : "false") << " wmax=" << a.wmax
              << " out=" << a.out << "\n";
    asced::EnsembleSpecFile file;
    file.code_pcm = a.code_pcm;
    for (const auto& path : a.batches) {
        std::ifstream in(path);
        if (!in) throw asced::FormatError("cannot open subcode spec: " + path);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        const asced::SubcodeSpecFile sub = asced::subcode_spec_from_json(text);
        asced::BatchSpec b;
        b.pcm_file = sub.pcm_file.empty() ? a.code_pcm : sub.pcm_file;
        b.appended_rows = sub.appended_rows;
        b.optimize = a.optimize;
        b.w_max = a.wmax;
        b.decoder.variant = asced::variant_from_name(a.decoder);
        b.decoder.alpha = a.alpha;
        b.decoder.max_iters = a.iters;
        b.decoder.stop_rule = asced::StopRule::original_code(nullptr);
        // the stop-rule PCM binds at build time; validate the rest now
        asced::DecoderConfig probe = b.decoder;
        probe.stop_rule = asced::StopRule::own_syndrome();
        probe.validate();
        file.batches.push_back(std::move(b));
    }
    // fail fast on inconsistent inputs before writing the document
    asced::build_ensemble(file, "");
    write_text_file(a.out, asced::to_json(file));
    return kExitOk;
}

struct SimulateArgs {
    std::string spec, snr, out;
    std::uint64_t min_fe = 200, max_frames = 10000000, seed = 0;
    int threads = 0;
    bool allzero = false;
};

int run_simulate(const SimulateArgs& a) {
    std::cerr << "config: simulate spec=" << a.spec << " snr=" << a.snr << " min-fe=" << a.min_fe
              << " max-frames=" << a.max_frames << " seed=" << a.seed << " threads=" << a.threads
              << " allzero=" << (a.allzero ? "true" : "false") << " out=" << a.out << "\n";
    std::ifstream in(a.spec);
    if (!in) throw asced::FormatError("cannot open spec: " + a.spec);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto file = asced::ensemble_spec_from_json(text);
    const auto loaded = asced::build_ensemble(file, "");

    asced::SimConfig sim;
    const double rate = static_cast<double>(loaded.code.k) / static_cast<double>(loaded.code.n);
    for (double db : parse_snr_sweep(a.snr)) sim.points.push_back(asced::ChannelPoint::make(db, rate));
    sim.min_frame_errors = a.min_fe;
    sim.max_frames = a.max_frames;
    sim.seed = a.seed;
    sim.threads = a.threads;
    sim.tx_mode = a.allzero ? asced::TxMode::AllZero : asced::TxMode::RandomCodeword;

    const asced::SimResult result = a.allzero
                                        ? asced::run_ler_allzero(loaded.spec, loaded.code, sim)
                                        : asced::run_fer(loaded.spec, loaded.code, sim);
    std::ofstream out(a.out);
    if (!out) throw asced::FormatError("cannot write CSV: " + a.out);
    asced::write_csv(out, result);
    std::cerr << "simulate: tec=" << asced::tec(loaded.spec)
              << " tec_shared=" << asced::tec_shared(loaded.spec)
              << " paths=" << loaded.spec.total_paths() << "\n";
    return kExitOk;
}

int run_cycle_stats(const std::string& pcm) {
    std::cerr << "config: cycle-stats pcm=" << pcm << "\n";
    const asced::BitMatrix h = asced::load_pcm(pcm);
    std::cout << stats_json(asced::pcm_stats(h)).dump(2) << "\n";
    return kExitOk;
}

int run_cover_check(const std::string& code_pcm, const std::string& spec_path) {
    std::cerr << "config: cover-check code-pcm=" << code_pcm << " spec=" << spec_path << "\n";
    std::ifstream in(spec_path);
    if (!in) throw asced::FormatError("cannot open spec: " + spec_path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto file = asced::ensemble_spec_from_json(text);
    if (!code_pcm.empty()) file.code_pcm = code_pcm;
    const asced::BitMatrix h = asced::load_pcm(file.code_pcm);
    const asced::LinearCode code = asced::from_pcm(h);

    json out;
    out["batches"] = json::array();
    bool all = true;
    for (const auto& b : file.batches) {
        asced::BitMatrix m(0, code.n);
        for (const auto& r : b.appended_rows) m.append_row(asced::BitVector::from_string(r));
        const asced::SubcodePcm sub = asced::append_rows(code, m);
        bool covered;
        if (sub.delta == 0) {
            covered = true;  // the batch decodes the full code
        } else {
            const auto cosets = asced::enumerate_cosets(sub, code);
            covered = asced::verify_cover({cosets.begin(), cosets.end()}, code);
        }
        all = all && covered;
        out["batches"].push_back(json{{"delta", sub.delta}, {"covered", covered}});
    }
    out["covered"] = all;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

struct MlArgs {
    std::string code_pcm, snr, out;
    std::uint64_t min_fe = 200, max_frames = 10000000, seed = 0;
};

int run_ml_oracle(const MlArgs& a) {
    std::cerr << "config: ml-oracle code-pcm=" << a.code_pcm << " snr=" << a.snr
              << " min-fe=" << a.min_fe << " max-frames=" << a.max_frames << " seed=" << a.seed
              << " out=" << a.out << "\n";
    const asced::BitMatrix h = asced::load_pcm(a.code_pcm);
    const asced::LinearCode code = asced::from_pcm(h);
    asced::SimConfig sim;
    const double rate = static_cast<double>(code.k) / static_cast<double>(code.n);
    for (double db : parse_snr_sweep(a.snr)) sim.points.push_back(asced::ChannelPoint::make(db, rate));
    sim.min_frame_errors = a.min_fe;
    sim.max_frames = a.max_frames;
    sim.seed = a.seed;
    const asced::SimResult result = asced::run_ml_fer(code, sim);
    std::ofstream out(a.out);
    if (!out) throw asced::FormatError("cannot write CSV: " + a.out);
    asced::write_csv(out, result);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine subcode ensemble decoding toolkit"};
    app.require_subcommand(1);

    SubcodeArgs gs;
    auto* gen = app.add_subcommand("gen-subcode", "sample independent rows for a subcode PCM");
    gen->add_option("--pcm", gs.pcm, "code PCM (alist or dense)")->required();
    gen->add_option("--dc", gs.dc, "appended row weight")->required();
    gen->add_option("--rows", gs.rows, "number of appended rows");
    gen->add_option("--seed", gs.seed, "RNG seed")->required();
    gen->add_option("--out", gs.out, "output subcode spec JSON")->required();

    SspcmArgs sa;
    auto* bs = app.add_subcommand("build-sspcm", "construct a structured sparse PCM");
    bs->add_option("--pcm", sa.pcm, "input (sub)code PCM")->required();
    bs->add_option("--smax", sa.smax, "search space row cap");
    bs->add_option("--wmax", sa.wmax, "ssPCM weight budget");
    bs->add_option("--effort", sa.effort, "low-weight search restarts");
    bs->add_option("--out", sa.out, "output PCM file");
    bs->add_option("--report", sa.report, "structural report JSON (stdout if omitted)");

    std::string cyc_pcm;
    auto* cs = app.add_subcommand("cycle-stats", "4-cycle and rank summary of a PCM");
    cs->add_option("--pcm", cyc_pcm, "PCM file")->required();

    EnsembleArgs ea;
    auto* be = app.add_subcommand("build-ensemble", "assemble an ensemble spec document");
    be->add_option("--code-pcm", ea.code_pcm, "original code PCM")->required();
    be->add_option("--batches", ea.batches, "subcode spec JSON files")->required()->expected(-1);
    be->add_option("--decoder", ea.decoder, "spa|nspa|nmsa");
    be->add_option("--alpha", ea.alpha, "CN normalization constant");
    be->add_option("--iters", ea.iters, "max BP iterations");
    be->add_flag("--optimize", ea.optimize, "replace subcode PCMs by their ssPCM-II");
    be->add_option("--wmax", ea.wmax, "ssPCM weight budget when optimizing");
    be->add_option("--out", ea.out, "output ensemble spec JSON")->required();

    SimulateArgs sm;
    auto* sim = app.add_subcommand("simulate", "Monte-Carlo FER/LER over a BI-AWGN sweep");
    sim->add_option("--spec", sm.spec, "ensemble spec JSON")->required();
    sim->add_option("--snr", sm.snr, "Eb/N0 sweep start:step:stop (dB)")->required();
    sim->add_option("--min-fe", sm.min_fe, "frame errors to collect per point");
    sim->add_option("--max-frames", sm.max_frames, "frame cap per point");
    sim->add_option("--seed", sm.seed, "RNG seed")->required();
    sim->add_option("--threads", sm.threads, "worker threads (0 = all)");
    sim->add_flag("--allzero", sm.allzero, "all-zero LER mode, linear paths only");
    sim->add_option("--out", sm.out, "output CSV")->required();

    std::string cc_pcm, cc_spec;
    auto* cov = app.add_subcommand("cover-check", "exhaustive coset covering check");
    cov->add_option("--code-pcm", cc_pcm, "original code PCM");
    cov->add_option("--spec", cc_spec, "ensemble spec JSON")->required();

    MlArgs ml;
    auto* mlc = app.add_subcommand("ml-oracle", "brute-force ML reference curve (k <= 20)");
    mlc->add_option("--code-pcm", ml.code_pcm, "code PCM")->required();
    mlc->add_option("--snr", ml.snr, "Eb/N0 sweep start:step:stop (dB)")->required();
    mlc->add_option("--min-fe", ml.min_fe, "frame errors to collect per point");
    mlc->add_option("--max-frames", ml.max_frames, "frame cap per point");
    mlc->add_option("--seed", ml.seed, "RNG seed")->required();
    mlc->add_option("--out", ml.out, "output CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen_subcode(gs);
        if (bs->parsed()) return run_build_sspcm(sa);
        if (cs->parsed()) return run_cycle_stats(cyc_pcm);
        if (be->parsed()) return run_build_ensemble(ea);
        if (sim->parsed()) return run_simulate(sm);
        if (cov->parsed()) return run_cover_check(cc_pcm, cc_spec);
        if (mlc->parsed()) return run_ml_oracle(ml);
    } catch (const asced::SearchExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitExhausted;
    } catch (const asced::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
