#ifndef SHOCKFC_SDNN_DATASET_HPP
#define SHOCKFC_SDNN_DATASET_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "shockfc/sdnn/preprocess.hpp"

namespace shockfc {

struct LabeledStencil {
    std::array<double, 7> z{};
    int label = 0;  // 0-based class index; tau = label + 1
};

struct Dataset {
    std::vector<LabeledStencil> train, validation;
};

namespace detail {

// One table row: sample f on the 401-point grid over [0, 2pi], preprocess
// at every shift delta = h/10 .. h, keep non-degenerate stencils centered
// inside the restriction domain [dlo, dhi].
inline void harvest(const std::function<double(double)>& f, double dlo, double dhi, int label,
                    const FcAssets& assets, std::vector<LabeledStencil>& out) {
    constexpr int N = 401;
    const double h = 2.0 * std::numbers::pi / (N - 1);
    std::vector<double> v(N);
    for (int i = 0; i < N; ++i) v[i] = f(i * h);
    for (int s = 1; s <= 10; ++s) {
        auto st = preprocess_stencils(v, assets, s / 10.0);
        for (int j = 0; j < N; ++j) {
            double x = j * h;
            if (x < dlo || x > dhi || st[j].degenerate) continue;
            out.push_back({st[j].values, label});
        }
    }
}

}  // namespace detail

// Synthetic training data: every parameter combination of the five
// function families, preprocessed at ten sub-grid shifts, restricted to
// the per-family domains, then split 80/20 at random. The piecewise
// parabola family is written in C1 form (equal value and slope at the
// junction |x-pi| = a3) so its label (3, curvature jump only) is
// actually true; the printed form in the source material is
// discontinuous there.
inline Dataset generate_dataset(std::uint64_t seed, const FcAssets& assets) {
    using std::numbers::pi;
    std::vector<LabeledStencil> all;

    for (int ia = -40; ia < 40; ++ia) {  // a = -20, -19.5, ..., 19.5
        double a = 0.5 * ia;
        detail::harvest([a](double x) { return std::sin(2.0 * a * x); }, 0.0, 2.0 * pi, 3,
                        assets, all);
    }
    for (int a = -10; a <= 10; ++a) {
        detail::harvest([a](double x) { return a * std::abs(x - pi); }, 3.53, 5.89, 3, assets,
                        all);
    }
    for (int a1 = -10; a1 <= 9; ++a1)
        for (int a2 = -10; a2 <= 9; ++a2)
            for (int i3 = 1; i3 <= 10; ++i3) {
                double a3 = 0.25 * i3;
                double dlo = pi + a3 - 0.05, dhi = pi + a3 + 0.05;
                if (a1 != a2) {
                    detail::harvest(
                        [=](double x) { return std::abs(x - pi) <= a3 ? double(a1) : double(a2); },
                        dlo, dhi, 0, assets, all);
                }
                if (a1 > 2 * a2 || a1 < 0.5 * a2) {
                    detail::harvest(
                        [=](double x) {
                            double t = std::abs(x - pi);
                            return t <= a3 ? a1 * t - a1 * a3 : a2 * t - a2 * a3;
                        },
                        dlo, dhi, 1, assets, all);
                }
                if (a1 > 5 * a2 || a1 < 0.2 * a2) {
                    detail::harvest(
                        [=](double x) {
                            double t = std::abs(x - pi);
                            if (t <= a3) return 0.5 * a1 * t * t;
                            return 0.5 * a2 * t * t + (a1 - a2) * a3 * t -
                                   0.5 * (a1 - a2) * a3 * a3;
                        },
                        dlo, dhi, 2, assets, all);
                }
            }

    std::mt19937_64 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    std::size_t ntrain = all.size() * 8 / 10;
    Dataset d;
    d.train.assign(all.begin(), all.begin() + ntrain);
    d.validation.assign(all.begin() + ntrain, all.end());
    return d;
}

}  // namespace shockfc

#endif
