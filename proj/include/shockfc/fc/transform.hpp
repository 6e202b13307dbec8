#ifndef SHOCKFC_FC_TRANSFORM_HPP
#define SHOCKFC_FC_TRANSFORM_HPP

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "shockfc/fc/assets.hpp"

namespace shockfc {

namespace detail {

// Per-size FFTW plan pair with owned, aligned buffers. Plans are created
// once per transform length and reused; all callers copy through the
// owned buffers (cheap next to the transform itself).
struct FftPlans {
    int n = 0;
    double* real = nullptr;
    fftw_complex* cplx = nullptr;
    fftw_plan fwd = nullptr, bwd = nullptr;

    explicit FftPlans(int n_) : n(n_) {
        real = fftw_alloc_real(n);
        cplx = fftw_alloc_complex(n / 2 + 1);
        fwd = fftw_plan_dft_r2c_1d(n, real, cplx, FFTW_ESTIMATE);
        bwd = fftw_plan_dft_c2r_1d(n, cplx, real, FFTW_ESTIMATE);
    }
    ~FftPlans() {
        fftw_destroy_plan(bwd);
        fftw_destroy_plan(fwd);
        fftw_free(cplx);
        fftw_free(real);
    }
    FftPlans(const FftPlans&) = delete;
    FftPlans& operator=(const FftPlans&) = delete;
};

inline FftPlans& fft_plans(int n) {
    static std::map<int, FftPlans> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.try_emplace(n, n).first;
    return it->second;
}

}  // namespace detail

// Discrete FC continuation: physical values followed by the C blended
// continuation values, A_left Q^T f_left + A_right Q^T f_right.
inline void continuation_inplace(const double* f, int N, const FcAssets& a,
                                 double* out) {
    const int d = a.d, C = a.C;
    if (N < 2 * d) throw std::invalid_argument("continuation: N < 2d");
    if (out != f) std::memcpy(out, f, std::size_t(N) * sizeof(double));
    double alpha[64], beta[64];  // Gram coefficients, left / right ends
    for (int k = 0; k < d; ++k) {
        double sl = 0, sr = 0;
        for (int i = 0; i < d; ++i) {
            sl += a.q(i, k) * f[i];
            sr += a.q(i, k) * f[N - d + i];
        }
        alpha[k] = sl;
        beta[k] = sr;
    }
    for (int i = 0; i < C; ++i) {
        double v = 0;
        for (int k = 0; k < d; ++k) v += a.al(i, k) * alpha[k] + a.ar(i, k) * beta[k];
        out[N + i] = v;
    }
}

inline std::vector<double> continuation(const std::vector<double>& f, const FcAssets& a) {
    std::vector<double> out(f.size() + a.C);
    continuation_inplace(f.data(), int(f.size()), a, out.data());
    return out;
}

// In-place spectral derivative of a length-n periodic sample vector with
// period beta. For even n the unmatched Nyquist coefficient is dropped.
inline void periodic_derivative_inplace(double* ext, int n, double beta) {
    auto& p = detail::fft_plans(n);
    std::memcpy(p.real, ext, std::size_t(n) * sizeof(double));
    fftw_execute(p.fwd);
    const double scale = 2.0 * std::numbers::pi / beta / n;  // includes 1/n normalization
    const int nc = n / 2 + 1;
    for (int k = 0; k < nc; ++k) {
        double re = p.cplx[k][0], im = p.cplx[k][1], w = scale * k;
        p.cplx[k][0] = -w * im;
        p.cplx[k][1] = w * re;
    }
    if (n % 2 == 0) p.cplx[n / 2][0] = p.cplx[n / 2][1] = 0.0;
    fftw_execute(p.bwd);
    std::memcpy(ext, p.real, std::size_t(n) * sizeof(double));
}

// Derivative of the FC series at the N physical nodes. interval_length is
// the physical span (N-1)h of the grid.
inline std::vector<double> fc_derivative(const std::vector<double>& f, const FcAssets& a,
                                         double interval_length) {
    const int N = int(f.size()), n = N + a.C;
    const double h = interval_length / (N - 1);
    std::vector<double> ext(n);
    continuation_inplace(f.data(), N, a, ext.data());
    periodic_derivative_inplace(ext.data(), n, n * h);
    ext.resize(N);
    return ext;
}

// Evaluate the FC series at all N+C nodes shifted by delta_fraction*h.
// Phase shift on the coefficient level; the Nyquist term (even n) keeps
// only its real-representable cosine part.
inline void shifted_eval_inplace(double* ext, int n, double delta_fraction) {
    auto& p = detail::fft_plans(n);
    std::memcpy(p.real, ext, std::size_t(n) * sizeof(double));
    fftw_execute(p.fwd);
    const double ninv = 1.0 / n;
    const int klim = (n % 2 == 0) ? n / 2 : n / 2 + 1;
    for (int k = 0; k < klim; ++k) {
        double ang = 2.0 * std::numbers::pi * k * delta_fraction * ninv;
        double c = std::cos(ang), s = std::sin(ang);
        double re = p.cplx[k][0] * ninv, im = p.cplx[k][1] * ninv;
        p.cplx[k][0] = re * c - im * s;
        p.cplx[k][1] = re * s + im * c;
    }
    if (n % 2 == 0) {
        // cosine-only shift of the Nyquist mode (the sine part has no
        // real-valued representative on this grid)
        p.cplx[n / 2][0] *= std::cos(std::numbers::pi * delta_fraction) * ninv;
        p.cplx[n / 2][1] = 0.0;
    }
    fftw_execute(p.bwd);
    std::memcpy(ext, p.real, std::size_t(n) * sizeof(double));
}

inline std::vector<double> fc_shifted_eval(const std::vector<double>& f, const FcAssets& a,
                                           double delta_fraction) {
    const int n = int(f.size()) + a.C;
    std::vector<double> ext(n);
    continuation_inplace(f.data(), int(f.size()), a, ext.data());
    shifted_eval_inplace(ext.data(), n, delta_fraction);
    return ext;
}

// Exponential filter sigma(2k/n) = exp(-alpha_f (2k/n)^p_f) applied to the
// FC coefficients of a length-n extended vector, in place.
inline void filter_inplace(double* ext, int n, double alpha_f, int p_f) {
    auto& p = detail::fft_plans(n);
    std::memcpy(p.real, ext, std::size_t(n) * sizeof(double));
    fftw_execute(p.fwd);
    const double ninv = 1.0 / n;
    const int nc = n / 2 + 1;
    for (int k = 0; k < nc; ++k) {
        double sigma = std::exp(-alpha_f * std::pow(2.0 * k * ninv, p_f)) * ninv;
        p.cplx[k][0] *= sigma;
        p.cplx[k][1] *= sigma;
    }
    fftw_execute(p.bwd);
    std::memcpy(ext, p.real, std::size_t(n) * sizeof(double));
}

// Globally filtered values at the N physical nodes.
inline std::vector<double> global_filter(const std::vector<double>& f, const FcAssets& a,
                                         double alpha_f, int p_f) {
    const int N = int(f.size()), n = N + a.C;
    std::vector<double> ext(n);
    continuation_inplace(f.data(), N, a, ext.data());
    filter_inplace(ext.data(), n, alpha_f, p_f);
    ext.resize(N);
    return ext;
}

// Continuation with a Neumann right endpoint: the last grid value is
// reconstructed from the Gram fit of (f_{N-d}..f_{N-2}, h F') and the
// completed vector is continued as usual (the refit recovers the same
// Gram coefficients exactly, since the fit interpolates).
inline std::vector<double> continuation_neumann(const std::vector<double>& values,
                                                double end_derivative, const FcAssets& a,
                                                double h) {
    const int d = a.d, Nm1 = int(values.size()), N = Nm1 + 1;
    if (a.Q_neumann.empty()) throw std::invalid_argument("continuation_neumann: missing Neumann assets");
    if (Nm1 < 2 * d) throw std::invalid_argument("continuation_neumann: too few values");
    double g[64], alpha[64];
    for (int i = 0; i < d - 1; ++i) g[i] = values[Nm1 - (d - 1) + i];
    g[d - 1] = h * end_derivative;
    for (int k = 0; k < d; ++k) {
        double s = 0;
        for (int i = 0; i < d; ++i) s += a.qn(i, k) * g[i];
        alpha[k] = s;
    }
    double end_value = 0;
    for (int k = 0; k < d; ++k) end_value += a.q(d - 1, k) * alpha[k];
    std::vector<double> full(values);
    full.push_back(end_value);
    std::vector<double> out(N + a.C);
    continuation_inplace(full.data(), N, a, out.data());
    return out;
}

// Endpoint value implied by the d-1 adjacent interior values (ordered
// toward the endpoint) and a prescribed end derivative, via the Neumann
// Gram fit. Used to overwrite Neumann boundary values before each stage.
inline double neumann_end_value(const double* tail, double end_derivative, const FcAssets& a,
                                double h) {
    const int d = a.d;
    if (a.Q_neumann.empty()) throw std::invalid_argument("neumann_end_value: missing Neumann assets");
    double g[64], alpha[64];
    for (int i = 0; i < d - 1; ++i) g[i] = tail[i];
    g[d - 1] = h * end_derivative;
    for (int k = 0; k < d; ++k) {
        double s = 0;
        for (int i = 0; i < d; ++i) s += a.qn(i, k) * g[i];
        alpha[k] = s;
    }
    double v = 0;
    for (int k = 0; k < d; ++k) v += a.q(d - 1, k) * alpha[k];
    return v;
}

// Overwrite the selected line endpoints with the values implied by the
// prescribed end derivatives (left derivative in physical orientation).
inline void enforce_neumann_line(double* f, int N, const FcAssets& a, double h,
                                 bool left, double dleft, bool right, double dright) {
    const int d = a.d;
    if (N < 2 * d) throw std::invalid_argument("enforce_neumann_line: line too short");
    if (right) f[N - 1] = neumann_end_value(&f[N - d], dright, a, h);
    if (left) {
        double tmp[64];
        for (int i = 0; i < d - 1; ++i) tmp[i] = f[d - 1 - i];
        f[0] = neumann_end_value(tmp, -dleft, a, h);
    }
}

// Plain periodic spectral derivative (no continuation): N samples of a
// function with period N*h (x_N identified with x_0).
inline std::vector<double> periodic_derivative(const std::vector<double>& f, double period) {
    std::vector<double> out(f);
    periodic_derivative_inplace(out.data(), int(out.size()), period);
    return out;
}

}  // namespace shockfc

#endif
