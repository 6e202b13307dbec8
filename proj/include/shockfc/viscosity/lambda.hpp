#ifndef SHOCKFC_VISCOSITY_LAMBDA_HPP
#define SHOCKFC_VISCOSITY_LAMBDA_HPP

#include <stdexcept>
#include <vector>

#include "shockfc/grid.hpp"
#include "shockfc/windows.hpp"

namespace shockfc {

// Windowed localization Lambda[b]_i = sum_k Wcheck^k_i b_k with window
// columns W^k_i = q_{c,r}(h*(i-k)) normalized to unit column sum. Since
// the window only depends on the offset, the kernel is precomputed once;
// near non-periodic boundaries the columns are truncated (and their
// normalization reduced accordingly). Periodic mode wraps instead.
inline std::vector<double> lambda_1d(const std::vector<double>& b, double h, int c = 0,
                                     int r = 9, bool periodic = false) {
    const int N = int(b.size());
    const int s = c / 2 + r;
    if (N <= 2 * s) throw std::invalid_argument("lambda_1d: grid too small for window support");
    std::vector<double> kernel(2 * s + 1);
    double full = 0.0;
    for (int t = -s; t <= s; ++t) {
        kernel[t + s] = window_q(t * h, c, r, h);
        full += kernel[t + s];
    }
    std::vector<double> out(N, 0.0);
    if (periodic) {
        for (int k = 0; k < N; ++k) {
            double w = b[k] / full;
            if (w == 0.0) continue;
            for (int t = -s; t <= s; ++t) out[((k + t) % N + N) % N] += w * kernel[t + s];
        }
    } else {
        for (int k = 0; k < N; ++k) {
            if (b[k] == 0.0) continue;
            int lo = std::max(-s, -k), hi = std::min(s, N - 1 - k);
            double colsum = full;
            if (k < s || k + s >= N) {
                colsum = 0.0;
                for (int t = lo; t <= hi; ++t) colsum += kernel[t + s];
            }
            double w = b[k] / colsum;
            for (int t = lo; t <= hi; ++t) out[k + t] += w * kernel[t + s];
        }
    }
    return out;
}

// Separable 2D localization over the active sections of the grid:
// 1D pass along every row section, then along every column section.
inline std::vector<double> lambda_2d(const std::vector<double>& b, const Grid2D& g, int c = 0,
                                     int r = 9) {
    std::vector<double> mid(b.size(), 0.0), out(b.size(), 0.0);
    std::vector<double> line;
    for (int j = 0; j < g.Ny; ++j) {
        auto [i0, i1] = g.row_span[j];
        int len = i1 - i0 + 1;
        line.assign(len, 0.0);
        for (int i = 0; i < len; ++i) line[i] = b[g.idx(i0 + i, j)];
        auto l = lambda_1d(line, g.hx, c, r, false);
        for (int i = 0; i < len; ++i) mid[g.idx(i0 + i, j)] = l[i];
    }
    for (int i = 0; i < g.Nx; ++i) {
        auto [j0, j1] = g.col_span[i];
        int len = j1 - j0 + 1;
        line.assign(len, 0.0);
        for (int j = 0; j < len; ++j) line[j] = mid[g.idx(i, j0 + j)];
        auto l = lambda_1d(line, g.hy, c, r, false);
        for (int j = 0; j < len; ++j) out[g.idx(i, j0 + j)] = l[j];
    }
    return out;
}

}  // namespace shockfc

#endif
