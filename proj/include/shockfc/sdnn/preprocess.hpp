#ifndef SHOCKFC_SDNN_PREPROCESS_HPP
#define SHOCKFC_SDNN_PREPROCESS_HPP

#include <array>
#include <stdexcept>
#include <vector>

#include "shockfc/fc/transform.hpp"

namespace shockfc {

struct PreprocessedStencil {
    std::array<double, 7> values{};
    bool degenerate = false;
};

inline constexpr double kDegenerateEps = 0.01;

namespace detail {
// Steps (iii)-(v) on an already shifted length-n sample vector: modular
// 7-point stencils around the first N points, subtract the line through
// the endpoints, min-max normalize to [-1,1]. The degeneracy test
// M+ - M- <= eps is applied before normalization (the rescaling is
// undefined at M+ = M-); the extremes are pinned so the normalized
// stencil attains +-1 exactly.
inline void form_stencils(const std::vector<double>& shifted, int N, int n,
                          std::vector<PreprocessedStencil>& out) {
    out.assign(N, {});
    for (int j = 0; j < N; ++j) {
        std::array<double, 7> s;
        for (int r = -3; r <= 3; ++r) s[r + 3] = shifted[((j + r) % n + n) % n];
        double l0 = s[0], slope = (s[6] - s[0]) / 6.0;
        for (int r = 0; r < 7; ++r) s[r] -= l0 + slope * r;
        double mx = s[0], mn = s[0];
        for (double v : s) { mx = std::max(mx, v); mn = std::min(mn, v); }
        if (mx - mn <= kDegenerateEps) {
            out[j].degenerate = true;
            continue;
        }
        for (int r = 0; r < 7; ++r) {
            if (s[r] == mx) out[j].values[r] = 1.0;
            else if (s[r] == mn) out[j].values[r] = -1.0;
            else out[j].values[r] = (2.0 * s[r] - mx - mn) / (mx - mn);
        }
    }
}
}  // namespace detail

// Steps (i)-(v): FC-extend, shift by delta_fraction*h, then the common
// stencil pipeline above.
inline std::vector<PreprocessedStencil> preprocess_stencils(const std::vector<double>& values,
                                                            const FcAssets& assets,
                                                            double delta_fraction) {
    const int N = int(values.size());
    if (N < 7) throw std::invalid_argument("preprocess_stencils: need at least 7 points");
    const int n = N + assets.C;
    std::vector<double> shifted = fc_shifted_eval(values, assets, delta_fraction);
    std::vector<PreprocessedStencil> out;
    detail::form_stencils(shifted, N, n, out);
    return out;
}

// Periodic variant: no continuation, the shift acts on the plain N-point
// Fourier series and the stencils wrap modulo N.
inline std::vector<PreprocessedStencil> preprocess_stencils_periodic(
    const std::vector<double>& values, double delta_fraction) {
    const int N = int(values.size());
    if (N < 7)
        throw std::invalid_argument("preprocess_stencils_periodic: need at least 7 points");
    std::vector<double> shifted(values);
    shifted_eval_inplace(shifted.data(), N, delta_fraction);
    std::vector<PreprocessedStencil> out;
    detail::form_stencils(shifted, N, N, out);
    return out;
}

}  // namespace shockfc

#endif
