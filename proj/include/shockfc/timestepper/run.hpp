#ifndef SHOCKFC_TIMESTEPPER_RUN_HPP
#define SHOCKFC_TIMESTEPPER_RUN_HPP

#include <algorithm>
#include <functional>
#include <vector>

#include "shockfc/equations/entropy.hpp"
#include "shockfc/equations/spatial.hpp"
#include "shockfc/fc/smear.hpp"
#include "shockfc/problems/problem.hpp"
#include "shockfc/sdnn/classify.hpp"
#include "shockfc/timestepper/ssprk.hpp"
#include "shockfc/viscosity/visc.hpp"

namespace shockfc {

struct RunOptions {
    int n = 0, n2 = 0;       // grid sizes; 0 = problem default
    double cfl = -1;         // <= 0 = problem default
    double t_end = -1;
    ViscMethod method = ViscMethod::sdnn;
    bool disable_filter = false;
    double filter_alpha = 10.0;
    int filter_p = 14;
    EvParams ev;
    long max_steps = -1;     // safety valve; < 0 = unlimited
};

struct StepInfo {
    double t = 0;
    long step = 0;
    double dt = 0;
    const FlowState* state = nullptr;
    const std::vector<double>* mu = nullptr;
};
using StepCallback = std::function<void(const StepInfo&)>;

struct RunResult {
    FlowState state;
    std::vector<double> mu;
    double t = 0;
    long steps = 0;
    Grid1D grid1;
    Grid2D grid2;
};

inline std::vector<double> wave_speed_bound(const FlowState& e, const EquationSpec& spec) {
    switch (spec.kind) {
        case Equation::advection: return mwsb_advection(spec.a, e.size());
        case Equation::burgers1d:
        case Equation::burgers2d: return mwsb_burgers(e.comp[0]);
        case Equation::euler1d: {
            auto pr = primitive_quantities(e, spec);
            return mwsb_euler1d(pr.u, pr.sound);
        }
        case Equation::euler2d: {
            auto pr = primitive_quantities(e, spec);
            return mwsb_euler2d(pr.u, pr.v, pr.sound);
        }
    }
    return {};
}

inline std::vector<double> filter_field_1d(const std::vector<double>& f, const FcAssets& a,
                                           bool periodic, double alpha_f, int p_f) {
    if (!periodic) return global_filter(f, a, alpha_f, p_f);
    std::vector<double> out(f);
    filter_inplace(out.data(), int(out.size()), alpha_f, p_f);
    return out;
}

inline void filter_field_2d(std::vector<double>& f, const Grid2D& g, const FcAssets& a,
                            double alpha_f, int p_f) {
    std::vector<double> line;
    for (int j = 0; j < g.Ny; ++j) {
        auto [i0, i1] = g.row_span[j];
        int len = i1 - i0 + 1;
        line.assign(len, 0.0);
        for (int i = 0; i < len; ++i) line[i] = f[g.idx(i0 + i, j)];
        auto lf = global_filter(line, a, alpha_f, p_f);
        for (int i = 0; i < len; ++i) f[g.idx(i0 + i, j)] = lf[i];
    }
    for (int i = 0; i < g.Nx; ++i) {
        auto [j0, j1] = g.col_span[i];
        int len = j1 - j0 + 1;
        line.assign(len, 0.0);
        for (int j = 0; j < len; ++j) line[j] = f[g.idx(i, j0 + j)];
        auto lf = global_filter(line, a, alpha_f, p_f);
        for (int j = 0; j < len; ++j) f[g.idx(i, j0 + j)] = lf[j];
    }
}

// t=0 smearing of a 2D field: row passes with the per-row discontinuity
// x-positions, then column passes with the per-column y-positions.
inline void smear_field_2d(std::vector<double>& f, const Grid2D& g, const FcAssets& a,
                           const std::function<std::vector<double>(double)>& rows,
                           const std::function<std::vector<double>(double)>& cols) {
    std::vector<double> line;
    if (rows) {
        for (int j = 0; j < g.Ny; ++j) {
            auto zs = rows(g.y(j));
            if (zs.empty()) continue;
            auto [i0, i1] = g.row_span[j];
            int len = i1 - i0 + 1;
            line.assign(len, 0.0);
            for (int i = 0; i < len; ++i) line[i] = f[g.idx(i0 + i, j)];
            auto sm = localized_smear(line, a, g.x(i0), g.hx, zs);
            for (int i = 0; i < len; ++i) f[g.idx(i0 + i, j)] = sm[i];
        }
    }
    if (cols) {
        for (int i = 0; i < g.Nx; ++i) {
            auto zs = cols(g.x(i));
            if (zs.empty()) continue;
            auto [j0, j1] = g.col_span[i];
            int len = j1 - j0 + 1;
            line.assign(len, 0.0);
            for (int j = 0; j < len; ++j) line[j] = f[g.idx(i, j0 + j)];
            auto sm = localized_smear(line, a, g.y(j0), g.hy, zs);
            for (int j = 0; j < len; ++j) f[g.idx(i, j0 + j)] = sm[j];
        }
    }
}

namespace detail {
inline EvParams ev_params_for(const RunOptions& opt, const EquationSpec& spec) {
    EvParams p = opt.ev;
    p.unit_normalization = spec.is_euler();
    return p;
}
}  // namespace detail

// Algorithm 1 in 1D: classify -> wave-speed bound -> viscosity ->
// smear (t=0) or filter -> adaptive dt -> SSPRK-4 with per-stage BC
// enforcement; the final step is clipped to land on t_end exactly.
inline RunResult run_1d(const Problem& prob, const RunOptions& opt, const FcAssets& assets,
                        const MlpParams& mlp, const StepCallback& cb = nullptr) {
    const int N = opt.n > 0 ? opt.n : prob.default_n;
    const double cfl = opt.cfl > 0 ? opt.cfl : prob.cfl;
    const double T = opt.t_end > 0 ? opt.t_end : prob.t_end;
    RunResult res;
    // periodic grids identify x1 with x0, so h = L/N rather than L/(N-1)
    res.grid1 = prob.periodic
                    ? Grid1D(prob.x0, prob.x1 - (prob.x1 - prob.x0) / N, N)
                    : Grid1D(prob.x0, prob.x1, N);
    const Grid1D& g = res.grid1;
    const double h = g.h;

    FlowState& e = res.state;
    e.comp.assign(prob.eq.ncomp(), std::vector<double>(N, 0.0));
    prob.init1d(g, e);
    auto enforce = [&](FlowState& s, double tt) {
        if (prob.bc1d) prob.bc1d(s, tt, g);
    };

    std::vector<double> eta_prev;
    double dt_prev = 0;
    res.mu.assign(N, 0.0);
    while (T - res.t > 1e-13 * std::max(1.0, T)) {
        if (opt.max_steps >= 0 && res.steps >= opt.max_steps) break;
        enforce(e, res.t);
        auto S = wave_speed_bound(e, prob.eq);
        if (opt.method == ViscMethod::sdnn) {
            auto phi = proxy_variable(e, prob.eq);
            auto tau = prob.periodic ? classify_1d_periodic(phi, mlp)
                                     : classify_1d(phi, assets, mlp);
            if (prob.tau_hook) prob.tau_hook(tau);
            res.mu = sdnn_viscosity_1d(tau, S, h, prob.periodic);
        } else {
            auto ep = entropy_pair(e, prob.eq);
            EvParams evp = detail::ev_params_for(opt, prob.eq);
            auto div = deriv_1d(ep.nu[0], assets, h, prob.periodic);
            // no previous eta on the first step: keep only the flux part of
            // the residual, which is already localized at the discontinuities
            if (res.steps == 0)
                res.mu = ev_viscosity(ep.eta, ep.eta, div, ep.C, 1.0, evp, h);
            else
                res.mu = ev_viscosity(ep.eta, eta_prev, div, ep.C, dt_prev, evp, h);
            eta_prev = ep.eta;
        }
        if (res.steps == 0) {
            if (!prob.smear1d.empty())
                for (auto& c : e.comp)
                    c = localized_smear(c, assets, g.x0, h, prob.smear1d);
        } else if (!opt.disable_filter) {
            for (auto& c : e.comp)
                c = filter_field_1d(c, assets, prob.periodic, opt.filter_alpha, opt.filter_p);
        }
        double maxS = *std::max_element(S.begin(), S.end());
        double maxmu = *std::max_element(res.mu.begin(), res.mu.end());
        double dt = std::min(adaptive_dt(maxS, maxmu, cfl, h), T - res.t);
        const std::vector<double>& mu = res.mu;
        ssprk4_step(e, res.t, dt, enforce, [&](const FlowState& s) {
            return spatial_operator(s, mu, prob.eq, opt.method, assets, h, prob.periodic);
        });
        res.t += dt;
        dt_prev = dt;
        ++res.steps;
        if (cb) cb({res.t, res.steps, dt, &e, &res.mu});
    }
    enforce(e, res.t);
    return res;
}

// Algorithm 1 in 2D over a possibly masked grid. The viscosity scale uses
// the larger mesh size, the CFL restriction the smaller.
inline RunResult run_2d(const Problem& prob, const RunOptions& opt, const FcAssets& assets,
                        const MlpParams& mlp, const StepCallback& cb = nullptr) {
    const int Nx = opt.n > 0 ? opt.n : prob.default_n;
    const int Ny = opt.n2 > 0 ? opt.n2 : (prob.default_n2 > 0 ? prob.default_n2 : Nx);
    const double cfl = opt.cfl > 0 ? opt.cfl : prob.cfl;
    const double T = opt.t_end > 0 ? opt.t_end : prob.t_end;
    RunResult res;
    res.grid2 = Grid2D(prob.x0, prob.x1, Nx, prob.y0, prob.y1, Ny);
    Grid2D& g = res.grid2;
    if (prob.shape) prob.shape(g);
    const double h_mu = std::max(g.hx, g.hy), h_dt = std::min(g.hx, g.hy);

    FlowState& e = res.state;
    e.comp.assign(prob.eq.ncomp(), std::vector<double>(std::size_t(Nx) * Ny, 0.0));
    prob.init2d(g, e);
    auto enforce = [&](FlowState& s, double tt) {
        if (prob.bc2d) prob.bc2d(s, tt, g, assets);
    };

    std::vector<double> eta_prev;
    double dt_prev = 0;
    res.mu.assign(e.size(), 0.0);
    while (T - res.t > 1e-13 * std::max(1.0, T)) {
        if (opt.max_steps >= 0 && res.steps >= opt.max_steps) break;
        enforce(e, res.t);
        auto S = wave_speed_bound(e, prob.eq);
        if (opt.method == ViscMethod::sdnn) {
            auto phi = proxy_variable(e, prob.eq);
            auto tau = classify_2d(phi, g, assets, mlp);
            res.mu = sdnn_viscosity_2d(tau, S, g, h_mu);
        } else {
            auto ep = entropy_pair(e, prob.eq);
            EvParams evp = detail::ev_params_for(opt, prob.eq);
            auto dx = deriv_x(ep.nu[0], g, assets);
            auto dy = deriv_y(ep.nu[1], g, assets);
            for (std::size_t i = 0; i < dx.size(); ++i) dx[i] += dy[i];
            if (res.steps == 0)
                res.mu = ev_viscosity(ep.eta, ep.eta, dx, ep.C, 1.0, evp, h_mu);
            else
                res.mu = ev_viscosity(ep.eta, eta_prev, dx, ep.C, dt_prev, evp, h_mu);
            eta_prev = ep.eta;
        }
        if (res.steps == 0) {
            if (prob.smear_rows || prob.smear_cols)
                for (auto& c : e.comp)
                    smear_field_2d(c, g, assets, prob.smear_rows, prob.smear_cols);
        } else if (!opt.disable_filter) {
            for (auto& c : e.comp)
                filter_field_2d(c, g, assets, opt.filter_alpha, opt.filter_p);
        }
        double maxS = *std::max_element(S.begin(), S.end());
        double maxmu = *std::max_element(res.mu.begin(), res.mu.end());
        double dt = std::min(adaptive_dt(maxS, maxmu, cfl, h_dt), T - res.t);
        const std::vector<double>& mu = res.mu;
        ssprk4_step(e, res.t, dt, enforce, [&](const FlowState& s) {
            return spatial_operator(s, mu, prob.eq, opt.method, assets, h_mu, false, &g);
        });
        res.t += dt;
        dt_prev = dt;
        ++res.steps;
        if (cb) cb({res.t, res.steps, dt, &e, &res.mu});
    }
    enforce(e, res.t);
    return res;
}

inline RunResult run(const Problem& prob, const RunOptions& opt, const FcAssets& assets,
                     const MlpParams& mlp, const StepCallback& cb = nullptr) {
    return prob.dim == 1 ? run_1d(prob, opt, assets, mlp, cb)
                         : run_2d(prob, opt, assets, mlp, cb);
}

}  // namespace shockfc

#endif
