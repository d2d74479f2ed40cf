#pragma once

#include <cstdint>
#include <vector>

#include "asced/bit_matrix.hpp"

namespace asced {

/// Bipartite decoding graph of a PCM. Edge ids are assigned in CN-major
/// order (check rows ascending, variable columns ascending within a row);
/// both adjacency directions reference the same edge ids.
struct TannerGraph {
    std::size_t n_vn = 0;
    std::size_t n_cn = 0;
    std::size_t n_edges = 0;

    std::vector<std::uint32_t> cn_offset;  // size n_cn + 1
    std::vector<std::uint32_t> cn_vn;      // edge id == index into this array

    std::vector<std::uint32_t> vn_offset;  // size n_vn + 1
    std::vector<std::uint32_t> vn_cn;
    std::vector<std::uint32_t> vn_edge;    // edge id per VN-side slot
};

TannerGraph build_tanner(const BitMatrix& h);

}  // namespace asced
