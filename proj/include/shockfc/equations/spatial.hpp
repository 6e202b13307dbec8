#ifndef SHOCKFC_EQUATIONS_SPATIAL_HPP
#define SHOCKFC_EQUATIONS_SPATIAL_HPP

#include <vector>

#include "shockfc/equations/state.hpp"
#include "shockfc/fc/transform.hpp"
#include "shockfc/grid.hpp"

namespace shockfc {

enum class ViscMethod { sdnn, ev };

inline std::vector<double> deriv_1d(const std::vector<double>& f, const FcAssets& a, double h,
                                    bool periodic) {
    if (periodic) return periodic_derivative(f, f.size() * h);
    return fc_derivative(f, a, (f.size() - 1) * h);
}

// x-derivative along the active row sections of a (possibly masked) grid.
inline std::vector<double> deriv_x(const std::vector<double>& f, const Grid2D& g,
                                   const FcAssets& a) {
    std::vector<double> out(f.size(), 0.0), line;
    for (int j = 0; j < g.Ny; ++j) {
        auto [i0, i1] = g.row_span[j];
        int len = i1 - i0 + 1;
        line.assign(len, 0.0);
        for (int i = 0; i < len; ++i) line[i] = f[g.idx(i0 + i, j)];
        auto d = fc_derivative(line, a, (len - 1) * g.hx);
        for (int i = 0; i < len; ++i) out[g.idx(i0 + i, j)] = d[i];
    }
    return out;
}

inline std::vector<double> deriv_y(const std::vector<double>& f, const Grid2D& g,
                                   const FcAssets& a) {
    std::vector<double> out(f.size(), 0.0), line;
    for (int i = 0; i < g.Nx; ++i) {
        auto [j0, j1] = g.col_span[i];
        int len = j1 - j0 + 1;
        line.assign(len, 0.0);
        for (int j = 0; j < len; ++j) line[j] = f[g.idx(i, j0 + j)];
        auto d = fc_derivative(line, a, (len - 1) * g.hy);
        for (int j = 0; j < len; ++j) out[g.idx(i, j0 + j)] = d[j];
    }
    return out;
}

// Viscous fluxes f_visc = mu * D[e], flux[dir][comp]. SDNN diffuses every
// conserved component; EV uses the same form for scalar equations and the
// physical stress form for Euler.
inline std::vector<std::vector<std::vector<double>>> viscous_flux(
    const FlowState& e, const std::vector<double>& mu, const EquationSpec& spec,
    ViscMethod method, const FcAssets& a, double h, bool periodic, const Grid2D* g2) {
    const std::size_t n = e.size();
    const int dim = spec.dim(), r = spec.ncomp();
    auto dgrad = [&](const std::vector<double>& f, int dir) {
        if (dim == 1) return deriv_1d(f, a, h, periodic);
        return dir == 0 ? deriv_x(f, *g2, a) : deriv_y(f, *g2, a);
    };
    std::vector<std::vector<std::vector<double>>> fv(
        dim, std::vector<std::vector<double>>(r, std::vector<double>(n, 0.0)));
    bool any_mu = false;
    for (double m : mu)
        if (m != 0.0) { any_mu = true; break; }
    if (!any_mu) return fv;
    if (method == ViscMethod::sdnn || !spec.is_euler()) {
        for (int d = 0; d < dim; ++d)
            for (int c = 0; c < r; ++c) {
                auto grad = dgrad(e.comp[c], d);
                for (std::size_t i = 0; i < n; ++i) fv[d][c][i] = mu[i] * grad[i];
            }
        return fv;
    }
    // EV Euler: (0, mu sym(grad u), mu sym(grad u) u + kappa grad(p/rho)),
    // kappa = P/(gamma-1) * mu with Prandtl-like constant P = 1.
    auto pr = primitive_quantities(e, spec);
    const double kap = 1.0 / (spec.gamma - 1.0);
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = pr.p[i] / e.comp[0][i];
    if (dim == 1) {
        auto ux = dgrad(pr.u, 0);
        auto qx = dgrad(q, 0);
        for (std::size_t i = 0; i < n; ++i) {
            fv[0][1][i] = mu[i] * ux[i];
            fv[0][2][i] = mu[i] * ux[i] * pr.u[i] + kap * mu[i] * qx[i];
        }
    } else {
        auto ux = dgrad(pr.u, 0), uy = dgrad(pr.u, 1);
        auto vx = dgrad(pr.v, 0), vy = dgrad(pr.v, 1);
        auto qx = dgrad(q, 0), qy = dgrad(q, 1);
        for (std::size_t i = 0; i < n; ++i) {
            double sxx = ux[i], syy = vy[i], sxy = 0.5 * (uy[i] + vx[i]);
            fv[0][1][i] = mu[i] * sxx;
            fv[0][2][i] = mu[i] * sxy;
            fv[0][3][i] = mu[i] * (sxx * pr.u[i] + sxy * pr.v[i]) + kap * mu[i] * qx[i];
            fv[1][1][i] = mu[i] * sxy;
            fv[1][2][i] = mu[i] * syy;
            fv[1][3][i] = mu[i] * (sxy * pr.u[i] + syy * pr.v[i]) + kap * mu[i] * qy[i];
        }
    }
    return fv;
}

// L[e] = -div f(e) + div f_visc[e], all divergences by per-line FC
// differentiation (plain FFT in periodic mode).
inline FlowState spatial_operator(const FlowState& e, const std::vector<double>& mu,
                                  const EquationSpec& spec, ViscMethod method,
                                  const FcAssets& a, double h, bool periodic = false,
                                  const Grid2D* g2 = nullptr) {
    const std::size_t n = e.size();
    const int dim = spec.dim(), r = spec.ncomp();
    auto dgrad = [&](const std::vector<double>& f, int dir) {
        if (dim == 1) return deriv_1d(f, a, h, periodic);
        return dir == 0 ? deriv_x(f, *g2, a) : deriv_y(f, *g2, a);
    };
    auto flux = convective_flux(e, spec);
    auto fv = viscous_flux(e, mu, spec, method, a, h, periodic, g2);
    FlowState L;
    L.comp.assign(r, std::vector<double>(n, 0.0));
    for (int d = 0; d < dim; ++d)
        for (int c = 0; c < r; ++c) {
            auto dc = dgrad(flux[d][c], d);
            for (std::size_t i = 0; i < n; ++i) L.comp[c][i] -= dc[i];
            bool any = false;
            for (double v : fv[d][c])
                if (v != 0.0) { any = true; break; }
            if (!any) continue;
            auto dv = dgrad(fv[d][c], d);
            for (std::size_t i = 0; i < n; ++i) L.comp[c][i] += dv[i];
        }
    return L;
}

}  // namespace shockfc

#endif
