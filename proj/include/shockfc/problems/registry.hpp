#ifndef SHOCKFC_PROBLEMS_REGISTRY_HPP
#define SHOCKFC_PROBLEMS_REGISTRY_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "shockfc/fc/transform.hpp"
#include "shockfc/problems/burgers2d_exact.hpp"
#include "shockfc/problems/problem.hpp"
#include "shockfc/problems/riemann.hpp"

namespace shockfc {

// Smooth cut-off bump: 1 for |x| <= q1, 0 for |x| >= q2, C-infinity splice.
inline double bump_omega(double x, double q1, double q2) {
    double ax = std::abs(x);
    if (ax <= q1) return 1.0;
    if (ax >= q2) return 0.0;
    double xi = (ax - q1) / (q2 - q1);
    return std::exp(2.0 * std::exp(-1.0 / xi) / (xi - 1.0));
}

// Left-boundary signal of the non-periodic advection benchmark.
inline double advection_bc_value(double t) {
    if (t > 0.0 && t < 0.2) return 100.0 * t * (t - 0.2);
    if (t >= 0.2 && t < 0.4) return 1.0;
    if (t > 0.8 && t < 0.9) return 10.0 * (t - 0.8);
    if (t >= 0.9 && t < 1.0) return 1.0 - 10.0 * (t - 0.9);
    return 0.0;
}

inline double burgers1d_ic(double x) {
    double th = std::tanh(10.0 * x - 3.0);
    return 1.0 / (std::exp(x - 0.15) * (th + 1.0) - th + 1.0);
}

namespace detail {

// Euler 1D inflow/outflow by value overwrite: pin rho and u at the left
// boundary and p at the right boundary to their t=0 values. A supersonic
// inflow has no outgoing characteristic, so the full state is pinned.
inline void bc_euler1d_inout(FlowState& e, double rho_in, double u_in, double p_in,
                             bool supersonic_in, double p_out, double gamma) {
    e.comp[0][0] = rho_in;
    e.comp[1][0] = rho_in * u_in;
    if (supersonic_in)
        e.comp[2][0] = p_in / (gamma - 1.0) + 0.5 * rho_in * u_in * u_in;
    std::size_t n = e.comp[0].size() - 1;
    double rho = e.comp[0][n], m = e.comp[1][n];
    e.comp[2][n] = p_out / (gamma - 1.0) + 0.5 * m * m / rho;
}

// Zero normal derivative on every boundary of a (rectangular) 2D grid,
// imposed by overwriting the boundary values with the Neumann Gram fit.
inline void bc_neumann_all(FlowState& e, const Grid2D& g, const FcAssets& a) {
    const int d = a.d;
    double tmp[64];
    for (auto& f : e.comp) {
        for (int j = 0; j < g.Ny; ++j) {
            auto [i0, i1] = g.row_span[j];
            for (int i = 0; i < d - 1; ++i) tmp[i] = f[g.idx(i1 - (d - 1) + i, j)];
            f[g.idx(i1, j)] = neumann_end_value(tmp, 0.0, a, g.hx);
            for (int i = 0; i < d - 1; ++i) tmp[i] = f[g.idx(i0 + d - 1 - i, j)];
            f[g.idx(i0, j)] = neumann_end_value(tmp, 0.0, a, g.hx);
        }
        for (int i = 0; i < g.Nx; ++i) {
            auto [j0, j1] = g.col_span[i];
            for (int j = 0; j < d - 1; ++j) tmp[j] = f[g.idx(i, j1 - (d - 1) + j)];
            f[g.idx(i, j1)] = neumann_end_value(tmp, 0.0, a, g.hy);
            for (int j = 0; j < d - 1; ++j) tmp[j] = f[g.idx(i, j0 + d - 1 - j)];
            f[g.idx(i, j0)] = neumann_end_value(tmp, 0.0, a, g.hy);
        }
    }
}

inline Problem euler1d_two_state(const std::string& id, double x0, double x1, double split,
                                 RiemannState left, RiemannState right, double T, int n_def) {
    Problem p;
    p.id = id;
    p.eq = {Equation::euler1d};
    p.dim = 1;
    p.x0 = x0;
    p.x1 = x1;
    p.cfl = 2.0;
    p.t_end = T;
    p.d = 5;
    p.default_n = n_def;
    p.smear1d = {split};
    double gamma = p.eq.gamma;
    p.init1d = [=](const Grid1D& g, FlowState& e) {
        for (int i = 0; i < g.N; ++i) {
            const RiemannState& s = g.x(i) < split ? left : right;
            set_euler1d(e, i, s.rho, s.u, s.p, gamma);
        }
    };
    bool super = std::abs(left.u) > std::sqrt(gamma * left.p / left.rho);
    p.bc1d = [=](FlowState& e, double, const Grid1D&) {
        bc_euler1d_inout(e, left.rho, left.u, left.p, super, right.p, gamma);
    };
    return p;
}

}  // namespace detail

inline std::vector<std::string> problem_ids() {
    return {"advection-bc", "advection-periodic", "burgers1d", "burgers2d",
            "sod",          "lax",                "shu-osher", "blast",
            "riemann2d",    "shock-vortex",       "mach3step", "double-mach"};
}

inline Problem build_problem(const std::string& id) {
    using std::numbers::pi;
    if (id == "advection-bc") {
        Problem p;
        p.id = id;
        p.description = "1D advection on [0,1.4], waves fed through the left boundary";
        p.eq = {Equation::advection, 1.0};
        p.x0 = 0.0;
        p.x1 = 1.4;
        p.cfl = 2.0;
        p.t_end = 2.0;
        p.d = 5;
        p.default_n = 500;
        p.init1d = [](const Grid1D& g, FlowState& e) {
            for (int i = 0; i < g.N; ++i) e.comp[0][i] = 0.0;
        };
        p.bc1d = [](FlowState& e, double t, const Grid1D&) {
            e.comp[0][0] = advection_bc_value(t);
        };
        return p;
    }
    if (id == "advection-periodic") {
        Problem p;
        p.id = id;
        p.description = "periodic 1D advection of a smooth bump over 500 periods";
        p.eq = {Equation::advection, 1.0};
        p.periodic = true;
        p.x0 = 0.0;
        p.x1 = 1.0;
        // CFL 1 reproduces the reported time step at N = 90
        p.cfl = 1.0;
        p.t_end = 500.0;
        p.d = 5;
        p.default_n = 90;
        p.init1d = [](const Grid1D& g, FlowState& e) {
            for (int i = 0; i < g.N; ++i) e.comp[0][i] = bump_omega(g.x(i) - 0.5, 0.0, 0.2);
        };
        return p;
    }
    if (id == "burgers1d") {
        Problem p;
        p.id = id;
        p.description = "1D Burgers on [0,2pi], shock forms and exits the outflow boundary";
        p.eq = {Equation::burgers1d};
        p.x0 = 0.0;
        p.x1 = 2.0 * pi;
        p.cfl = 2.0;
        p.t_end = 2.0 * pi;
        p.d = 2;
        p.default_n = 500;
        p.init1d = [](const Grid1D& g, FlowState& e) {
            for (int i = 0; i < g.N; ++i) e.comp[0][i] = burgers1d_ic(g.x(i));
        };
        const double uin = burgers1d_ic(0.0);
        p.bc1d = [uin](FlowState& e, double, const Grid1D&) { e.comp[0][0] = uin; };
        return p;
    }
    if (id == "burgers2d") {
        Problem p;
        p.id = id;
        p.description = "2D Burgers quadrant Riemann problem with exact reference";
        p.eq = {Equation::burgers2d};
        p.dim = 2;
        p.x0 = p.y0 = 0.0;
        p.x1 = p.y1 = 1.0;
        p.cfl = 2.0;
        p.t_end = 0.25;
        p.d = 5;
        p.default_n = 200;
        p.init2d = [](const Grid2D& g, FlowState& e) {
            for (int j = 0; j < g.Ny; ++j)
                for (int i = 0; i < g.Nx; ++i)
                    e.comp[0][g.idx(i, j)] = burgers2d_ic(g.x(i), g.y(j));
        };
        p.bc2d = [](FlowState& e, double, const Grid2D& g, const FcAssets& a) {
            detail::bc_neumann_all(e, g, a);
        };
        p.smear_rows = [](double) { return std::vector<double>{0.5}; };
        p.smear_cols = [](double) { return std::vector<double>{0.5}; };
        return p;
    }
    if (id == "sod") {
        Problem p = detail::euler1d_two_state("sod", -4.0, 5.0, 0.5, {1.0, 0.0, 1.0},
                                              {0.125, 0.0, 0.1}, 0.2, 500);
        p.description = "Sod shock tube with exact Riemann reference";
        return p;
    }
    if (id == "lax") {
        Problem p = detail::euler1d_two_state("lax", -5.0, 5.0, 0.0, {0.445, 0.698, 3.528},
                                              {0.5, 0.0, 0.571}, 1.3, 500);
        p.description = "Lax shock tube with exact Riemann reference";
        return p;
    }
    if (id == "shu-osher") {
        Problem p = detail::euler1d_two_state("shu-osher", -5.0, 5.0, -4.0,
                                              {3.857143, 2.6929369, 10.33333},
                                              {1.0, 0.0, 1.0}, 1.8, 500);
        p.description = "Shu-Osher shock / sine-entropy-wave interaction";
        double gamma = p.eq.gamma;
        p.init1d = [gamma](const Grid1D& g, FlowState& e) {
            for (int i = 0; i < g.N; ++i) {
                double x = g.x(i);
                if (x < -4.0)
                    set_euler1d(e, i, 3.857143, 2.6929369, 10.33333, gamma);
                else
                    set_euler1d(e, i, 1.0 + 0.2 * std::sin(5.0 * x), 0.0, 1.0, gamma);
            }
        };
        return p;
    }
    if (id == "blast") {
        Problem p = detail::euler1d_two_state("blast", 0.0, 1.0, 0.5, {1.0, 0.0, 1000.0},
                                              {1.0, 0.0, 0.01}, 0.012, 800);
        p.description = "strong blast wave, tau forced discontinuous near the boundaries";
        p.tau_hook = [](std::vector<int>& tau) {
            int N = int(tau.size());
            for (int i = 0; i < 9; ++i) {
                tau[i] = 1;
                tau[N - 1 - i] = 1;
            }
        };
        return p;
    }
    if (id == "riemann2d") {
        Problem p;
        p.id = id;
        p.description = "2D Euler Riemann problem (configuration 4)";
        p.eq = {Equation::euler2d};
        p.dim = 2;
        p.x0 = p.y0 = 0.0;
        p.x1 = p.y1 = 1.2;
        p.cfl = 2.0;
        p.t_end = 0.25;
        p.d = 2;
        p.default_n = 400;
        double gamma = p.eq.gamma;
        p.init2d = [gamma](const Grid2D& g, FlowState& e) {
            for (int j = 0; j < g.Ny; ++j)
                for (int i = 0; i < g.Nx; ++i) {
                    double x = g.x(i), y = g.y(j);
                    auto k = g.idx(i, j);
                    if (x >= 0.6 && y >= 0.6) set_euler2d(e, k, 1.1, 0.0, 0.0, 1.1, gamma);
                    else if (x < 0.6 && y >= 0.6)
                        set_euler2d(e, k, 0.5065, 0.8939, 0.0, 0.35, gamma);
                    else if (x < 0.6 && y < 0.6)
                        set_euler2d(e, k, 1.1, 0.8939, 0.8939, 1.1, gamma);
                    else set_euler2d(e, k, 0.5065, 0.0, 0.8939, 0.35, gamma);
                }
        };
        p.bc2d = [](FlowState& e, double, const Grid2D& g, const FcAssets& a) {
            detail::bc_neumann_all(e, g, a);
        };
        p.smear_rows = [](double) { return std::vector<double>{0.6}; };
        p.smear_cols = [](double) { return std::vector<double>{0.6}; };
        return p;
    }
    if (id == "shock-vortex") {
        Problem p;
        p.id = id;
        p.description = "isentropic vortex advected through a shock";
        p.eq = {Equation::euler2d};
        p.dim = 2;
        p.x0 = p.y0 = 0.0;
        p.x1 = p.y1 = 1.0;
        p.cfl = 2.0;
        p.t_end = 0.35;
        p.d = 2;
        p.default_n = 200;
        double gamma = p.eq.gamma;
        p.init2d = [gamma](const Grid2D& g, FlowState& e) {
            const double xc = 0.25, yc = 0.5, rc = 0.05, zeta = 0.204, eps = 0.3;
            const double pr = 1.3;
            // downstream state from the normal-shock relations at p = 1.3
            const double rho_r = ((gamma + 1.0) * pr + gamma - 1.0) /
                                 ((gamma - 1.0) * pr + gamma + 1.0);
            const double u_r = std::sqrt(gamma) +
                               std::sqrt(2.0) * (1.0 - pr) /
                                   std::sqrt(gamma - 1.0 + pr * (gamma + 1.0));
            for (int j = 0; j < g.Ny; ++j)
                for (int i = 0; i < g.Nx; ++i) {
                    double x = g.x(i), y = g.y(j);
                    auto k = g.idx(i, j);
                    if (x >= 0.5) {
                        set_euler2d(e, k, rho_r, u_r, 0.0, pr, gamma);
                        continue;
                    }
                    double r = std::hypot(x - xc, y - yc);
                    double phi = eps * std::exp(zeta * (1.0 - (r / rc) * (r / rc)));
                    double du = (y - yc) / rc * phi, dv = -(x - xc) / rc * phi;
                    double Tloc = 1.0 - (gamma - 1.0) / (4.0 * zeta * gamma) * phi * phi;
                    double rho = std::pow(Tloc, 1.0 / (gamma - 1.0));
                    double pp = std::pow(Tloc, gamma / (gamma - 1.0));
                    set_euler2d(e, k, rho, std::sqrt(gamma) + du, dv, pp, gamma);
                }
        };
        p.bc2d = [](FlowState& e, double, const Grid2D& g, const FcAssets& a) {
            detail::bc_neumann_all(e, g, a);
        };
        p.smear_rows = [](double) { return std::vector<double>{0.5}; };
        return p;
    }
    if (id == "mach3step") {
        Problem p;
        p.id = id;
        p.description = "Mach 3 flow over a forward facing step";
        p.eq = {Equation::euler2d};
        p.dim = 2;
        p.x0 = 0.0;
        p.x1 = 3.0;
        p.y0 = 0.0;
        p.y1 = 1.0;
        p.cfl = 1.0;
        p.t_end = 4.0;
        p.d = 2;
        p.default_n = 600;
        p.default_n2 = 200;
        double gamma = p.eq.gamma;
        p.shape = [](Grid2D& g) {
            int is = int(std::lround(0.6 / g.hx));
            int js = int(std::lround(0.2 / g.hy));
            for (int j = 0; j < js; ++j) g.row_span[j] = {0, is};
            for (int i = is + 1; i < g.Nx; ++i) g.col_span[i] = {js, g.Ny - 1};
        };
        p.init2d = [gamma](const Grid2D& g, FlowState& e) {
            int is = int(std::lround(0.6 / g.hx));
            int js = int(std::lround(0.2 / g.hy));
            for (int j = 0; j < g.Ny; ++j)
                for (int i = 0; i < g.Nx; ++i) {
                    bool face = (i == is && j < js);  // stagnant on the step face
                    set_euler2d(e, g.idx(i, j), 1.4, face ? 0.0 : 3.0, 0.0, 1.0, gamma);
                }
        };
        p.bc2d = [gamma](FlowState& e, double, const Grid2D& g, const FcAssets&) {
            int is = int(std::lround(0.6 / g.hx));
            int js = int(std::lround(0.2 / g.hy));
            for (int j = 0; j < g.Ny; ++j)
                set_euler2d(e, g.idx(0, j), 1.4, 3.0, 0.0, 1.0, gamma);  // inflow
            // reflecting walls: zero normal momentum; the step corner node
            // (is, js) carries no condition
            for (int i = 0; i < g.Nx; ++i) e.comp[2][g.idx(i, g.Ny - 1)] = 0.0;  // top
            for (int i = 0; i <= is; ++i) e.comp[2][g.idx(i, 0)] = 0.0;          // floor
            for (int i = is + 1; i < g.Nx; ++i) e.comp[2][g.idx(i, js)] = 0.0;   // step top
            for (int j = 0; j < js; ++j) e.comp[1][g.idx(is, j)] = 0.0;          // step face
        };
        p.smear_rows = [](double y) {
            return y < 0.2 ? std::vector<double>{0.6} : std::vector<double>{};
        };
        return p;
    }
    if (id == "double-mach") {
        Problem p;
        p.id = id;
        p.description = "double Mach reflection of a Mach 10 oblique shock";
        p.eq = {Equation::euler2d};
        p.dim = 2;
        p.x0 = 0.0;
        p.x1 = 4.0;
        p.y0 = 0.0;
        p.y1 = 1.0;
        p.cfl = 2.0;
        p.t_end = 0.2;
        p.d = 2;
        p.default_n = 800;
        p.default_n2 = 200;
        const double xr = 1.0 / 6.0, sin_th = std::sqrt(3.0) / 2.0;
        p.init2d = [=](const Grid2D& g, FlowState& e) {
            for (int j = 0; j < g.Ny; ++j)
                for (int i = 0; i < g.Nx; ++i) {
                    auto k = g.idx(i, j);
                    if (g.x(i) <= xr + g.y(j) / sin_th) {
                        e.comp[0][k] = 8.0;
                        e.comp[1][k] = 57.1597;
                        e.comp[2][k] = -33.0012;
                        e.comp[3][k] = 563.544;
                    } else {
                        e.comp[0][k] = 1.4;
                        e.comp[1][k] = 0.0;
                        e.comp[2][k] = 0.0;
                        e.comp[3][k] = 2.5;
                    }
                }
        };
        double gamma = p.eq.gamma;
        p.bc2d = [=](FlowState& e, double, const Grid2D& g, const FcAssets& a) {
            const int d = a.d, Nx = g.Nx, Ny = g.Ny;
            // oblique Neumann: zero derivative along the shock-parallel
            // direction, i.e. d/dy = -(1/sqrt(3)) d/dx, on the whole top
            // boundary and on the bottom boundary left of the ramp foot
            double tmp[64];
            std::vector<double> row(Nx);
            for (auto& f : e.comp) {
                for (int i = 0; i < Nx; ++i) row[i] = f[g.idx(i, Ny - 1)];
                auto dx = fc_derivative(row, a, (Nx - 1) * g.hx);
                for (int i = 1; i < Nx - 1; ++i) {
                    for (int q = 0; q < d - 1; ++q) tmp[q] = f[g.idx(i, Ny - d + q)];
                    f[g.idx(i, Ny - 1)] =
                        neumann_end_value(tmp, -dx[i] / std::sqrt(3.0), a, g.hy);
                }
                for (int i = 0; i < Nx; ++i) row[i] = f[g.idx(i, 0)];
                dx = fc_derivative(row, a, (Nx - 1) * g.hx);
                for (int i = 1; i < Nx - 1; ++i) {
                    if (g.x(i) >= xr) continue;
                    for (int q = 0; q < d - 1; ++q) tmp[q] = f[g.idx(i, d - 1 - q)];
                    f[g.idx(i, 0)] =
                        neumann_end_value(tmp, dx[i] / std::sqrt(3.0), a, g.hy);
                }
            }
            // reflecting wall on the ramp part of the bottom boundary
            for (int i = 0; i < Nx; ++i)
                if (g.x(i) >= xr) e.comp[2][g.idx(i, 0)] = 0.0;
            // supersonic inflow pins the full state on the left; outflow
            // pins p on the right
            for (int j = 0; j < Ny; ++j) {
                auto k = g.idx(0, j);
                e.comp[0][k] = 8.0;
                e.comp[1][k] = 57.1597;
                e.comp[2][k] = -33.0012;
                e.comp[3][k] = 563.544;
                k = g.idx(Nx - 1, j);
                double rho = e.comp[0][k], mx = e.comp[1][k], my = e.comp[2][k];
                e.comp[3][k] = 1.0 / (gamma - 1.0) + 0.5 * (mx * mx + my * my) / rho;
            }
        };
        return p;
    }
    throw std::invalid_argument("build_problem: unknown problem id '" + id + "'");
}

}  // namespace shockfc

#endif
