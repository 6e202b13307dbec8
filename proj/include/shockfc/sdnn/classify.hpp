#ifndef SHOCKFC_SDNN_CLASSIFY_HPP
#define SHOCKFC_SDNN_CLASSIFY_HPP

#include <vector>

#include "shockfc/grid.hpp"
#include "shockfc/sdnn/mlp.hpp"
#include "shockfc/sdnn/preprocess.hpp"

namespace shockfc {

// tau values per step (vi): 1 = discontinuous, 2 = C0\C1, 3 = C1\C2,
// 4 = C2. Degenerate stencils are forced to 4; argmax ties take the
// lowest class index (more viscosity).
namespace detail {
inline std::vector<int> classify_stencils(const std::vector<PreprocessedStencil>& st,
                                          const MlpParams& params);
}

inline std::vector<int> classify_1d(const std::vector<double>& values, const FcAssets& assets,
                                    const MlpParams& params, double delta_fraction = 0.1) {
    return detail::classify_stencils(preprocess_stencils(values, assets, delta_fraction),
                                     params);
}

// Periodic counterpart built on the plain-FFT shifted evaluation.
inline std::vector<int> classify_1d_periodic(const std::vector<double>& values,
                                             const MlpParams& params,
                                             double delta_fraction = 0.1) {
    return detail::classify_stencils(preprocess_stencils_periodic(values, delta_fraction),
                                     params);
}

namespace detail {
inline std::vector<int> classify_stencils(const std::vector<PreprocessedStencil>& st,
                                          const MlpParams& params) {
    const int N = int(st.size());
    std::vector<int> tau(N, 4);
    std::vector<int> keep;
    keep.reserve(N);
    for (int j = 0; j < N; ++j)
        if (!st[j].degenerate) keep.push_back(j);
    if (keep.empty()) return tau;
    Eigen::Matrix<double, 7, Eigen::Dynamic> z(7, keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c)
        for (int r = 0; r < 7; ++r) z(r, c) = st[keep[c]].values[r];
    auto w = mlp_forward_batch(params, z);
    for (std::size_t c = 0; c < keep.size(); ++c) {
        int best = 0;
        for (int i = 1; i < 4; ++i)
            if (w(i, c) > w(best, c)) best = i;
        tau[keep[c]] = best + 1;
    }
    return tau;
}
}  // namespace detail

// 2D classification: minimum of the per-row and per-column 1D operators
// over the active sections of the (possibly non-rectangular) grid.
// Inactive points keep tau = 4.
inline std::vector<int> classify_2d(const std::vector<double>& values, const Grid2D& g,
                                    const FcAssets& assets, const MlpParams& params,
                                    double delta_fraction = 0.1) {
    std::vector<int> tau(std::size_t(g.Nx) * g.Ny, 4);
    std::vector<double> line;
    for (int j = 0; j < g.Ny; ++j) {
        auto [i0, i1] = g.row_span[j];
        int len = i1 - i0 + 1;
        if (len < 7) throw std::invalid_argument("classify_2d: row section shorter than stencil");
        line.assign(len, 0.0);
        for (int i = 0; i < len; ++i) line[i] = values[g.idx(i0 + i, j)];
        auto t = classify_1d(line, assets, params, delta_fraction);
        for (int i = 0; i < len; ++i) tau[g.idx(i0 + i, j)] = t[i];
    }
    for (int i = 0; i < g.Nx; ++i) {
        auto [j0, j1] = g.col_span[i];
        int len = j1 - j0 + 1;
        if (len < 7) throw std::invalid_argument("classify_2d: column section shorter than stencil");
        line.assign(len, 0.0);
        for (int j = 0; j < len; ++j) line[j] = values[g.idx(i, j0 + j)];
        auto t = classify_1d(line, assets, params, delta_fraction);
        for (int j = 0; j < len; ++j) {
            auto& cell = tau[g.idx(i, j0 + j)];
            cell = std::min(cell, t[j]);
        }
    }
    return tau;
}

}  // namespace shockfc

#endif
