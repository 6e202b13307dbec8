#ifndef SHOCKFC_VISCOSITY_VISC_HPP
#define SHOCKFC_VISCOSITY_VISC_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "shockfc/viscosity/lambda.hpp"

namespace shockfc {

// Viscosity weight per smoothness class; the 2D table is gentler since
// the directional min in tau_xy already biases towards low classes.
inline double weight_1d(int tau) {
    switch (tau) {
        case 1: return 2.0;
        case 2: return 1.0;
        case 3: return 0.0;
        case 4: return 0.0;
    }
    throw std::invalid_argument("weight_1d: class outside 1..4");
}

inline double weight_2d(int tau) {
    switch (tau) {
        case 1: return 1.5;
        case 2: return 1.0;
        case 3: return 0.5;
        case 4: return 0.0;
    }
    throw std::invalid_argument("weight_2d: class outside 1..4");
}

inline std::vector<double> weight_map(const std::vector<int>& tau, int dim) {
    std::vector<double> w(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i)
        w[i] = dim == 1 ? weight_1d(tau[i]) : weight_2d(tau[i]);
    return w;
}

// Max wave speed bounds per equation, on raw component vectors.
inline std::vector<double> mwsb_advection(double a, std::size_t n) {
    return std::vector<double>(n, std::abs(a));
}
inline std::vector<double> mwsb_burgers(const std::vector<double>& u) {
    std::vector<double> s(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) s[i] = std::abs(u[i]);
    return s;
}
inline std::vector<double> mwsb_euler1d(const std::vector<double>& u,
                                        const std::vector<double>& sound) {
    std::vector<double> s(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) s[i] = std::abs(u[i]) + sound[i];
    return s;
}
inline std::vector<double> mwsb_euler2d(const std::vector<double>& u,
                                        const std::vector<double>& v,
                                        const std::vector<double>& sound) {
    std::vector<double> s(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) s[i] = std::abs(u[i]) + std::abs(v[i]) + sound[i];
    return s;
}

namespace detail {
// 7-point localization stencil bounds around i in a section of length N:
// clamped whole at the ends, not merely truncated.
inline std::pair<int, int> stencil_1d(int i, int N) {
    if (i <= 3) return {0, std::min(6, N - 1)};
    if (i >= N - 4) return {std::max(0, N - 7), N - 1};
    return {i - 3, i + 3};
}
}  // namespace detail

// 1D SDNN viscosity: mu_i = Lambda[R(tau)]_i * max_{L^i} S * h.
inline std::vector<double> sdnn_viscosity_1d(const std::vector<int>& tau,
                                             const std::vector<double>& S, double h,
                                             bool periodic = false) {
    const int N = int(tau.size());
    if (int(S.size()) != N) throw std::invalid_argument("sdnn_viscosity_1d: size mismatch");
    auto lam = lambda_1d(weight_map(tau, 1), h, 0, 9, periodic);
    std::vector<double> mu(N);
    for (int i = 0; i < N; ++i) {
        double mx = 0.0;
        if (periodic) {
            for (int t = -3; t <= 3; ++t) mx = std::max(mx, S[((i + t) % N + N) % N]);
        } else {
            auto [lo, hi] = detail::stencil_1d(i, N);
            for (int k = lo; k <= hi; ++k) mx = std::max(mx, S[k]);
        }
        mu[i] = lam[i] * mx * h;
    }
    return mu;
}

// 2D SDNN viscosity with 7x7 product stencils, separable max passes
// over the active sections; h is the (maximum) mesh size.
inline std::vector<double> sdnn_viscosity_2d(const std::vector<int>& tau,
                                             const std::vector<double>& S, const Grid2D& g,
                                             double h) {
    auto lam = lambda_2d(weight_map(tau, 2), g);
    std::vector<double> mid(S.size(), 0.0), mu(S.size(), 0.0);
    for (int j = 0; j < g.Ny; ++j) {
        auto [i0, i1] = g.row_span[j];
        int len = i1 - i0 + 1;
        for (int i = 0; i < len; ++i) {
            auto [lo, hi] = detail::stencil_1d(i, len);
            double mx = 0.0;
            for (int k = lo; k <= hi; ++k) mx = std::max(mx, S[g.idx(i0 + k, j)]);
            mid[g.idx(i0 + i, j)] = mx;
        }
    }
    for (int i = 0; i < g.Nx; ++i) {
        auto [j0, j1] = g.col_span[i];
        int len = j1 - j0 + 1;
        for (int j = 0; j < len; ++j) {
            auto [lo, hi] = detail::stencil_1d(j, len);
            double mx = 0.0;
            for (int k = lo; k <= hi; ++k) mx = std::max(mx, mid[g.idx(i, j0 + k)]);
            mu[g.idx(i, j0 + j)] = lam[g.idx(i, j0 + j)] * mx * h;
        }
    }
    return mu;
}

struct EvParams {
    double c_max = 0.5;
    double c_E = 1.0;
    bool unit_normalization = false;  // Euler: N = 1; otherwise N = |eta - mean(eta)|
};

// Entropy viscosity: mu = min(c_max*h*max|C|, c_E*h^2*|R_EV|/N) with
// R_EV = d_t eta (backward difference, supplied) + div nu (supplied).
// Where the normalization degenerates the cap is used.
inline std::vector<double> ev_viscosity(const std::vector<double>& eta_now,
                                        const std::vector<double>& eta_prev,
                                        const std::vector<double>& div_nu,
                                        const std::vector<double>& C, double dt,
                                        const EvParams& p, double h) {
    const std::size_t n = eta_now.size();
    if (eta_prev.size() != n || div_nu.size() != n || C.size() != n)
        throw std::invalid_argument("ev_viscosity: size mismatch");
    double cmax = 0.0;
    for (double v : C) cmax = std::max(cmax, std::abs(v));
    const double mu_max = p.c_max * h * cmax;
    double mean = 0.0;
    if (!p.unit_normalization) {
        for (double v : eta_now) mean += v;
        mean /= double(n);
    }
    std::vector<double> mu(n);
    for (std::size_t i = 0; i < n; ++i) {
        double rev = (eta_now[i] - eta_prev[i]) / dt + div_nu[i];
        double norm = p.unit_normalization ? 1.0 : std::abs(eta_now[i] - mean);
        double mu_e = norm < 1e-14 ? mu_max : p.c_E * h * h * std::abs(rev) / norm;
        mu[i] = std::min(mu_max, mu_e);
    }
    return mu;
}

}  // namespace shockfc

#endif
