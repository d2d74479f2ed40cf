#include "asced/spec_io.hpp"

#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "asced/pcm_io.hpp"

namespace asced {

using nlohmann::json;

std::string variant_name(CnVariant v) {
    switch (v) {
        case CnVariant::Spa: return "spa";
        case CnVariant::Nspa: return "nspa";
        case CnVariant::Nmsa: return "nmsa";
    }
    return "nmsa";
}

CnVariant variant_from_name(const std::string& name) {
    if (name == "spa") return CnVariant::Spa;
    if (name == "nspa") return CnVariant::Nspa;
    if (name == "nmsa") return CnVariant::Nmsa;
    throw FormatError("unknown decoder variant: " + name);
}

namespace {

json decoder_to_json(const DecoderConfig& d) {
    return json{{"variant", variant_name(d.variant)},
                {"alpha", d.alpha},
                {"max_iters", d.max_iters},
                {"stop_rule", d.stop_rule.kind == StopKind::OwnSyndrome ? "own_syndrome"
                                                                        : "original_code"}};
}

DecoderConfig decoder_from_json(const json& j) {
    DecoderConfig d;
    d.variant = variant_from_name(j.at("variant").get<std::string>());
    d.alpha = j.at("alpha").get<double>();
    d.max_iters = j.at("max_iters").get<unsigned>();
    const auto stop = j.at("stop_rule").get<std::string>();
    if (stop == "own_syndrome")
        d.stop_rule = StopRule::own_syndrome();
    else if (stop == "original_code")
        d.stop_rule = StopRule::original_code(nullptr);  // bound when building
    else
        throw FormatError("unknown stop_rule: " + stop);
    return d;
}

}  // namespace

std::string to_json(const EnsembleSpecFile& spec) {
    json j;
    j["code_pcm"] = spec.code_pcm;
    j["batches"] = json::array();
    for (const auto& b : spec.batches) {
        j["batches"].push_back(json{{"pcm_file", b.pcm_file},
                                    {"appended_rows", b.appended_rows},
                                    {"optimize", b.optimize},
                                    {"w_max", b.w_max},
                                    {"decoder", decoder_to_json(b.decoder)}});
    }
    return j.dump(2) + "\n";
}

EnsembleSpecFile ensemble_spec_from_json(const std::string& text) {
    EnsembleSpecFile spec;
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("spec JSON: ") + e.what());
    }
    try {
        spec.code_pcm = j.at("code_pcm").get<std::string>();
        for (const auto& jb : j.at("batches")) {
            BatchSpec b;
            b.pcm_file = jb.at("pcm_file").get<std::string>();
            for (const auto& r : jb.at("appended_rows")) b.appended_rows.push_back(r.get<std::string>());
            b.optimize = jb.at("optimize").get<bool>();
            b.w_max = jb.at("w_max").get<std::size_t>();
            b.decoder = decoder_from_json(jb.at("decoder"));
            spec.batches.push_back(std::move(b));
        }
    } catch (const json::exception& e) {
        throw FormatError(std::string("spec JSON: ") + e.what());
    }
    return spec;
}

std::string to_json(const SubcodeSpecFile& spec) {
    json j{{"pcm_file", spec.pcm_file},
           {"appended_rows", spec.appended_rows},
           {"delta", spec.delta}};
    return j.dump(2) + "\n";
}

SubcodeSpecFile subcode_spec_from_json(const std::string& text) {
    try {
        const json j = json::parse(text);
        SubcodeSpecFile s;
        s.pcm_file = j.at("pcm_file").get<std::string>();
        for (const auto& r : j.at("appended_rows")) s.appended_rows.push_back(r.get<std::string>());
        s.delta = j.at("delta").get<std::size_t>();
        return s;
    } catch (const json::exception& e) {
        throw FormatError(std::string("subcode JSON: ") + e.what());
    }
}

namespace {

std::string resolve(const std::string& base_dir, const std::string& path) {
    if (path.empty() || path.front() == '/' || base_dir.empty()) return path;
    return base_dir + "/" + path;
}

}  // namespace

LoadedEnsemble build_ensemble(const EnsembleSpecFile& file, const std::string& base_dir,
                              const SspcmOptions& opts) {
    LoadedEnsemble out;
    const BitMatrix code_h = load_pcm(resolve(base_dir, file.code_pcm));
    out.code = from_pcm(code_h);
    out.spec.original_h = std::make_shared<BitMatrix>(code_h);
    out.spec.n_code = out.code.n;

    for (const auto& b : file.batches) {
        const BitMatrix base_h = load_pcm(resolve(base_dir, b.pcm_file));
        if (base_h != code_h)
            throw FormatError("batch PCM must match the code PCM: " + b.pcm_file);
        BitMatrix appended(0, out.code.n);
        for (const auto& r : b.appended_rows) appended.append_row(BitVector::from_string(r));
        const SubcodePcm sub = append_rows(out.code, appended);

        DecoderConfig cfg = b.decoder;
        if (cfg.stop_rule.kind == StopKind::OriginalCode)
            cfg.stop_rule = StopRule::original_code(out.spec.original_h);

        SspcmOptions batch_opts = opts;
        batch_opts.w_max = b.w_max;
        out.spec.batches.push_back(build_batch(sub, out.code, cfg, b.optimize, batch_opts));
    }
    return out;
}

void write_csv(std::ostream& out, const SimResult& result) {
    out << "snr_db,frames,frame_errors,list_errors,fer,ler,mean_iters,ci95_lo,ci95_hi\n";
    char buf[256];
    for (const auto& p : result.points) {
        std::snprintf(buf, sizeof(buf), "%.6g,%llu,%llu,%llu,%.10e,%.10e,%.10e,%.10e,%.10e\n",
                      p.snr_db, static_cast<unsigned long long>(p.frames),
                      static_cast<unsigned long long>(p.frame_errors),
                      static_cast<unsigned long long>(p.list_errors), p.fer, p.ler,
                      p.mean_iters, p.ci95_lo, p.ci95_hi);
        out << buf;
    }
}

}  // namespace asced
