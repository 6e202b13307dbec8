#ifndef SHOCKFC_PROBLEMS_DOUBLE_MACH_HPP
#define SHOCKFC_PROBLEMS_DOUBLE_MACH_HPP

#include <cmath>
#include <memory>

#include "shockfc/problems/registry.hpp"
#include "shockfc/timestepper/run.hpp"
#include "shockfc/windows.hpp"

namespace shockfc {

// Incident shock line of the double Mach setup: x_s(y,t) for a Mach 10
// shock at 60 degrees to the x-axis, foot at x_r.
inline double dm_shock_x(double y, double t) {
    const double xr = 1.0 / 6.0, us = 10.0;
    const double sin_th = std::sqrt(3.0) / 2.0, tan_th = std::sqrt(3.0);
    return xr + us / sin_th * t + y / tan_th;
}

namespace detail {
// 1D conserved profile of the viscous incident shock in shock-normal
// coordinates, plus where its center sits on that axis.
struct DmIncidentProfile {
    std::vector<double> rho, m, E;
    double x0 = 0, h = 0, xs = 0;
    int n = 0;

    void sample(double xi, double& r, double& mm, double& ee) const {
        double fi = (xi - x0) / h;
        int i0 = std::max(0, std::min(n - 2, int(std::floor(fi))));
        double a = std::max(0.0, std::min(1.0, fi - i0));
        r = (1.0 - a) * rho[i0] + a * rho[i0 + 1];
        mm = (1.0 - a) * m[i0] + a * m[i0 + 1];
        ee = (1.0 - a) * E[i0] + a * E[i0 + 1];
    }
};
}  // namespace detail

// Replace the sharp double-Mach initial condition with a viscous incident
// shock. The incident shock is a plane wave: its viscous profile is
// one-dimensional along the shock normal and the tangential velocity
// vanishes on both sides, so a 1D normal-shock run (Mach 10 into rho = 1.4,
// p = 1; post state rho = 8, u_n = 8.25, p = 116.5, shock speed 10) supplies
// the profile, which is mapped obliquely and blended into the sharp data
// through the q_{c,r} window on a strip around the t = 0 shock line.
//
// The same profile also patches the top boundary row around the moving shock
// crossing for the whole run: the oblique Neumann extrapolation is
// ill-conditioned across the shock (the row derivative there is the shock
// slope, and small misalignment extrapolates nonpositive states), while away
// from the crossing the top row only ever sees the plane incident wave.
inline void apply_incident_shock_init_dm(Problem& p, const FcAssets& assets,
                                         const MlpParams& mlp, int c = 6, int r = 12) {
    auto prof = std::make_shared<detail::DmIncidentProfile>();

    auto sharp_init = p.init2d;
    p.init2d = [sharp_init, &assets, &mlp, c, r, prof](const Grid2D& g, FlowState& e) {
        sharp_init(g, e);

        const double sin_th = std::sqrt(3.0) / 2.0, cos_th = 0.5;
        const double xs_1d = 1.0, T = 0.2, us = 10.0;
        const double hn = g.hx * sin_th;  // normal spacing matching the 2D grid
        const int n1 = int(std::lround(4.0 / hn)) + 1;
        Problem line = detail::euler1d_two_state("dm-incident", 0.0, 4.0, xs_1d,
                                                 {8.0, 8.25, 116.5}, {1.4, 0.0, 1.0}, T, n1);
        RunOptions o1;
        auto pre = run_1d(line, o1, assets, mlp);
        prof->rho = pre.state.comp[0];
        prof->m = pre.state.comp[1];
        prof->E = pre.state.comp[2];
        prof->x0 = pre.grid1.x0;
        prof->h = pre.grid1.h;
        prof->n = pre.grid1.N;
        prof->xs = xs_1d + us * T;

        for (int j = 0; j < g.Ny; ++j) {
            double xs0 = dm_shock_x(g.y(j), 0.0);
            for (int i = 0; i < g.Nx; ++i) {
                double x = g.x(i);
                double w = window_q(xs0 - x, c, r, g.hx);
                if (w == 0.0) continue;
                double rho, m, E;
                prof->sample(prof->xs + (x - xs0) * sin_th, rho, m, E);
                auto k = g.idx(i, j);
                e.comp[0][k] = w * rho + (1.0 - w) * e.comp[0][k];
                e.comp[1][k] = w * m * sin_th + (1.0 - w) * e.comp[1][k];
                e.comp[2][k] = -w * m * cos_th + (1.0 - w) * e.comp[2][k];
                e.comp[3][k] = w * E + (1.0 - w) * e.comp[3][k];
            }
        }
    };

    auto base_bc = p.bc2d;
    p.bc2d = [base_bc, c, r, prof](FlowState& e, double t, const Grid2D& g, const FcAssets& a) {
        base_bc(e, t, g, a);
        if (prof->n == 0) return;
        const double sin_th = std::sqrt(3.0) / 2.0, cos_th = 0.5;
        const int jt = g.Ny - 1;
        double xs_top = dm_shock_x(g.y(jt), t);
        for (int i = 0; i < g.Nx; ++i) {
            double x = g.x(i);
            double w = window_q(xs_top - x, c, r, g.hx);
            if (w == 0.0) continue;
            double rho, m, E;
            prof->sample(prof->xs + (x - xs_top) * sin_th, rho, m, E);
            auto k = g.idx(i, jt);
            e.comp[0][k] = w * rho + (1.0 - w) * e.comp[0][k];
            e.comp[1][k] = w * m * sin_th + (1.0 - w) * e.comp[1][k];
            e.comp[2][k] = -w * m * cos_th + (1.0 - w) * e.comp[2][k];
            e.comp[3][k] = w * E + (1.0 - w) * e.comp[3][k];
        }
    };
}

}  // namespace shockfc

#endif
