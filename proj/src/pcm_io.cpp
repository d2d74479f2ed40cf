#include "asced/pcm_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace asced {

namespace {

std::vector<long> read_line_ints(std::istream& in, const char* what) {
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<long> vals;
        long v;
        while (ls >> v) vals.push_back(v);
        if (!vals.empty()) return vals;
    }
    throw FormatError(std::string("alist: missing ") + what);
}

// degree lists may wrap across lines in some writers
std::vector<long> read_ints(std::istream& in, std::size_t count, const char* what) {
    std::vector<long> vals;
    while (vals.size() < count) {
        for (long v : read_line_ints(in, what)) vals.push_back(v);
    }
    if (vals.size() != count) throw FormatError(std::string("alist: malformed ") + what);
    return vals;
}

}  // namespace

BitMatrix read_alist(std::istream& in) {
    const auto hdr = read_line_ints(in, "dimensions");
    if (hdr.size() < 2 || hdr[0] <= 0 || hdr[1] <= 0)
        throw FormatError("alist: bad dimension line");
    const long n = hdr[0], m = hdr[1];
    read_line_ints(in, "max degrees");
    const auto col_deg = read_ints(in, static_cast<std::size_t>(n), "column degrees");
    const auto row_deg = read_ints(in, static_cast<std::size_t>(m), "row degrees");

    BitMatrix h(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    // one index line per column; zero entries are padding
    for (long i = 0; i < n; ++i) {
        const auto entries = read_line_ints(in, "column entries");
        long nonzero = 0;
        for (long r : entries) {
            if (r == 0) continue;
            if (r < 1 || r > m) throw FormatError("alist: row index out of range");
            h.set(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(i), true);
            ++nonzero;
        }
        if (nonzero != col_deg[i]) throw FormatError("alist: column degree mismatch");
    }
    // row lists are redundant; validate them against the column lists
    for (long j = 0; j < m; ++j) {
        const auto entries = read_line_ints(in, "row entries");
        long nonzero = 0;
        for (long c : entries) {
            if (c == 0) continue;
            if (c < 1 || c > n) throw FormatError("alist: column index out of range");
            if (!h.get(static_cast<std::size_t>(j), static_cast<std::size_t>(c - 1)))
                throw FormatError("alist: row list disagrees with column list");
            ++nonzero;
        }
        if (nonzero != row_deg[j]) throw FormatError("alist: row degree mismatch");
    }
    return h;
}

void write_alist(std::ostream& out, const BitMatrix& h) {
    const std::size_t m = h.rows(), n = h.cols();
    std::vector<std::vector<std::size_t>> cols(n);
    std::size_t max_col = 0, max_row = 0;
    for (std::size_t j = 0; j < m; ++j) {
        const auto sup = h.row(j).support();
        max_row = std::max(max_row, sup.size());
        for (auto c : sup) cols[c].push_back(j);
    }
    for (const auto& c : cols) max_col = std::max(max_col, c.size());

    out << n << " " << m << "\n" << max_col << " " << max_row << "\n";
    for (std::size_t i = 0; i < n; ++i) out << cols[i].size() << (i + 1 < n ? " " : "\n");
    for (std::size_t j = 0; j < m; ++j)
        out << h.row(j).weight() << (j + 1 < m ? " " : "\n");
    // empty lists write a single padding zero so every list occupies a line
    for (std::size_t i = 0; i < n; ++i) {
        if (cols[i].empty()) {
            out << "0\n";
            continue;
        }
        for (std::size_t d = 0; d < cols[i].size(); ++d)
            out << cols[i][d] + 1 << (d + 1 < cols[i].size() ? " " : "");
        out << "\n";
    }
    for (std::size_t j = 0; j < m; ++j) {
        const auto sup = h.row(j).support();
        if (sup.empty()) {
            out << "0\n";
            continue;
        }
        for (std::size_t d = 0; d < sup.size(); ++d)
            out << sup[d] + 1 << (d + 1 < sup.size() ? " " : "");
        out << "\n";
    }
}

BitMatrix read_dense(std::istream& in) {
    BitMatrix h;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            h.append_row(BitVector::from_string(line));
        } catch (const std::invalid_argument& e) {
            throw FormatError(std::string("dense PCM: ") + e.what());
        }
    }
    if (h.rows() == 0) throw FormatError("dense PCM: no rows");
    return h;
}

void write_dense(std::ostream& out, const BitMatrix& h) {
    for (std::size_t j = 0; j < h.rows(); ++j) out << h.row(j).to_string() << "\n";
}

namespace {

bool has_suffix(const std::string& s, const std::string& suf) {
    return s.size() >= suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0;
}

}  // namespace

BitMatrix load_pcm(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open PCM file: " + path);
    try {
        return has_suffix(path, ".alist") ? read_alist(in) : read_dense(in);
    } catch (const std::invalid_argument& e) {
        throw FormatError(path + ": " + e.what());
    }
}

void save_pcm(const std::string& path, const BitMatrix& h) {
    std::ofstream out(path);
    if (!out) throw FormatError("cannot write PCM file: " + path);
    if (has_suffix(path, ".alist"))
        write_alist(out, h);
    else
        write_dense(out, h);
}

}  // namespace asced
