#ifndef SHOCKFC_FC_SMEAR_HPP
#define SHOCKFC_FC_SMEAR_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "shockfc/fc/transform.hpp"
#include "shockfc/windows.hpp"

namespace shockfc {

// Merged window profile over the grid for a set of discontinuity
// positions: windows whose supports intersect collapse into a single
// window that equals 1 between the outermost centers, keeping only the
// leftmost rise and the rightmost fall.
inline std::vector<double> smear_window_profile(int N, double x0, double h,
                                                std::vector<double> zs, int c, int r) {
    std::vector<double> w(N, 0.0);
    if (zs.empty()) return w;
    std::sort(zs.begin(), zs.end());
    const double radius = (0.5 * c + r) * h;
    std::size_t g = 0;
    while (g < zs.size()) {
        std::size_t e = g;
        while (e + 1 < zs.size() && zs[e + 1] - zs[e] < 2.0 * radius) ++e;
        double zl = zs[g], zr = zs[e];
        for (int i = 0; i < N; ++i) {
            double x = x0 + i * h, v;
            if (x < zl) v = window_q(x - zl, c, r, h);
            else if (x > zr) v = window_q(x - zr, c, r, h);
            else v = 1.0;
            w[i] = std::max(w[i], v);
        }
        g = e + 1;
    }
    return w;
}

// One-time t=0 smearing of initial discontinuities: blend the strongly
// filtered field into the raw field inside compact windows around the
// known jump positions. Outside every window support the input is
// returned unchanged (bit-exactly).
inline std::vector<double> localized_smear(const std::vector<double>& f, const FcAssets& a,
                                           double x0, double h,
                                           const std::vector<double>& discontinuities,
                                           int c = 18, int r = 9, double alpha_f = 10.0,
                                           int p_f = 2) {
    const int N = int(f.size());
    if (N == 0) throw std::invalid_argument("localized_smear: empty input");
    if (discontinuities.empty()) return f;
    std::vector<double> w = smear_window_profile(N, x0, h, discontinuities, c, r);
    std::vector<double> fg = global_filter(f, a, alpha_f, p_f);
    std::vector<double> out(f);
    for (int i = 0; i < N; ++i)
        if (w[i] != 0.0) out[i] = w[i] * fg[i] + (1.0 - w[i]) * f[i];
    return out;
}

}  // namespace shockfc

#endif
