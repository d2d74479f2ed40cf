#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "asced/ensemble.hpp"
#include "asced/sim.hpp"

namespace asced {

/// One batch entry of an ensemble spec document.
struct BatchSpec {
    std::string pcm_file;
    std::vector<std::string> appended_rows;  // bit strings
    bool optimize = false;
    std::size_t w_max = 2000;
    DecoderConfig decoder;
};

struct EnsembleSpecFile {
    std::string code_pcm;
    std::vector<BatchSpec> batches;
};

/// Subcode description emitted by gen-subcode.
struct SubcodeSpecFile {
    std::string pcm_file;
    std::vector<std::string> appended_rows;
    std::size_t delta = 0;
};

std::string to_json(const EnsembleSpecFile& spec);
EnsembleSpecFile ensemble_spec_from_json(const std::string& text);

std::string to_json(const SubcodeSpecFile& spec);
SubcodeSpecFile subcode_spec_from_json(const std::string& text);

/// Instantiates decoders and graphs for a spec document. Paths relative to
/// base_dir resolve PCM files. Stop rules named "original_code" bind to the
/// loaded code PCM.
struct LoadedEnsemble {
    LinearCode code;
    EnsembleSpec spec;
};
LoadedEnsemble build_ensemble(const EnsembleSpecFile& file, const std::string& base_dir,
                              const SspcmOptions& opts = {});

/// CSV contract: header then one row per SNR point. Formatting is fixed so
/// identical results serialize byte-identically.
void write_csv(std::ostream& out, const SimResult& result);

std::string variant_name(CnVariant v);
CnVariant variant_from_name(const std::string& name);

}  // namespace asced
