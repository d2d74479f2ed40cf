#pragma once

#include <iosfwd>
#include <string>

#include "asced/bit_matrix.hpp"

namespace asced {

/// Thrown on malformed PCM / spec files.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// MacKay alist text format: "n m", max degrees, per-column and per-row
/// degree lists, then 1-based per-column and per-row index lists. Zero
/// padding entries (used by some writers for irregular codes) are skipped.
BitMatrix read_alist(std::istream& in);
void write_alist(std::ostream& out, const BitMatrix& h);

/// One '0'/'1' row per line.
BitMatrix read_dense(std::istream& in);
void write_dense(std::ostream& out, const BitMatrix& h);

/// Dispatch on extension: ".alist" is alist, anything else dense text.
BitMatrix load_pcm(const std::string& path);
void save_pcm(const std::string& path, const BitMatrix& h);

}  // namespace asced
