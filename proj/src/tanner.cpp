#include "asced/tanner.hpp"

namespace asced {

TannerGraph build_tanner(const BitMatrix& h) {
    TannerGraph g;
    g.n_vn = h.cols();
    g.n_cn = h.rows();

    g.cn_offset.assign(g.n_cn + 1, 0);
    std::vector<std::uint32_t> vn_deg(g.n_vn, 0);
    for (std::size_t j = 0; j < g.n_cn; ++j) {
        for (std::size_t i : h.row(j).support()) {
            g.cn_vn.push_back(static_cast<std::uint32_t>(i));
            ++vn_deg[i];
        }
        g.cn_offset[j + 1] = static_cast<std::uint32_t>(g.cn_vn.size());
    }
    g.n_edges = g.cn_vn.size();

    g.vn_offset.assign(g.n_vn + 1, 0);
    for (std::size_t i = 0; i < g.n_vn; ++i) g.vn_offset[i + 1] = g.vn_offset[i] + vn_deg[i];
    g.vn_cn.resize(g.n_edges);
    g.vn_edge.resize(g.n_edges);
    std::vector<std::uint32_t> cursor(g.vn_offset.begin(), g.vn_offset.end() - 1);
    for (std::size_t j = 0; j < g.n_cn; ++j) {
        for (std::uint32_t e = g.cn_offset[j]; e < g.cn_offset[j + 1]; ++e) {
            const std::uint32_t i = g.cn_vn[e];
            g.vn_cn[cursor[i]] = static_cast<std::uint32_t>(j);
            g.vn_edge[cursor[i]] = e;
            ++cursor[i];
        }
    }
    return g;
}

}  // namespace asced
