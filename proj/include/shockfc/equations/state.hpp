#ifndef SHOCKFC_EQUATIONS_STATE_HPP
#define SHOCKFC_EQUATIONS_STATE_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace shockfc {

enum class Equation { advection, burgers1d, burgers2d, euler1d, euler2d };

struct EquationSpec {
    Equation kind = Equation::advection;
    double a = 1.0;        // advection speed
    double gamma = 1.4;    // Euler only

    int dim() const {
        return (kind == Equation::burgers2d || kind == Equation::euler2d) ? 2 : 1;
    }
    int ncomp() const {
        switch (kind) {
            case Equation::euler1d: return 3;
            case Equation::euler2d: return 4;
            default: return 1;
        }
    }
    bool is_euler() const { return kind == Equation::euler1d || kind == Equation::euler2d; }
};

// Conserved variables, one flat grid vector per component.
// Scalar: (u). Euler 1D: (rho, rho u, E). Euler 2D: (rho, rho u, rho v, E).
struct FlowState {
    std::vector<std::vector<double>> comp;

    int rank() const { return int(comp.size()); }
    std::size_t size() const { return comp.empty() ? 0 : comp[0].size(); }
};

struct Primitives {
    std::vector<double> u, v, p, sound, mach;
};

// Pressure from E = p/(gamma-1) + rho |u|^2 / 2; throws on an invalid
// (nonpositive rho or p) state since every downstream quantity breaks.
inline Primitives primitive_quantities(const FlowState& e, const EquationSpec& spec) {
    const std::size_t n = e.size();
    Primitives pr;
    if (!spec.is_euler()) {
        pr.u = e.comp[0];
        return pr;
    }
    const double g = spec.gamma;
    const bool two_d = spec.kind == Equation::euler2d;
    pr.u.resize(n);
    pr.p.resize(n);
    pr.sound.resize(n);
    pr.mach.resize(n);
    if (two_d) pr.v.resize(n);
    const auto& rho = e.comp[0];
    const auto& mx = e.comp[1];
    const auto& E = e.comp[two_d ? 3 : 2];
    for (std::size_t i = 0; i < n; ++i) {
        if (!(rho[i] > 0.0))
            throw std::runtime_error("primitive_quantities: nonpositive density at index " +
                                     std::to_string(i));
        double u = mx[i] / rho[i];
        double v = two_d ? e.comp[2][i] / rho[i] : 0.0;
        double ke = 0.5 * rho[i] * (u * u + v * v);
        double p = (g - 1.0) * (E[i] - ke);
        if (!(p > 0.0))
            throw std::runtime_error("primitive_quantities: nonpositive pressure at index " +
                                     std::to_string(i));
        pr.u[i] = u;
        if (two_d) pr.v[i] = v;
        pr.p[i] = p;
        pr.sound[i] = std::sqrt(g * p / rho[i]);
        pr.mach[i] = std::sqrt(u * u + v * v) / pr.sound[i];
    }
    return pr;
}

// Smoothness proxy: the solution itself for scalar equations, the Mach
// number for Euler.
inline std::vector<double> proxy_variable(const FlowState& e, const EquationSpec& spec) {
    if (!spec.is_euler()) return e.comp[0];
    return primitive_quantities(e, spec).mach;
}

// Convective fluxes, flux[dir][comp]; dir 0 = x, dir 1 = y.
inline std::vector<std::vector<std::vector<double>>> convective_flux(const FlowState& e,
                                                                     const EquationSpec& spec) {
    const std::size_t n = e.size();
    std::vector<std::vector<std::vector<double>>> flux(
        spec.dim(), std::vector<std::vector<double>>(spec.ncomp(), std::vector<double>(n)));
    switch (spec.kind) {
        case Equation::advection:
            for (std::size_t i = 0; i < n; ++i) flux[0][0][i] = spec.a * e.comp[0][i];
            break;
        case Equation::burgers1d:
            for (std::size_t i = 0; i < n; ++i)
                flux[0][0][i] = 0.5 * e.comp[0][i] * e.comp[0][i];
            break;
        case Equation::burgers2d:
            for (std::size_t i = 0; i < n; ++i) {
                double f = 0.5 * e.comp[0][i] * e.comp[0][i];
                flux[0][0][i] = f;
                flux[1][0][i] = f;
            }
            break;
        case Equation::euler1d: {
            auto pr = primitive_quantities(e, spec);
            for (std::size_t i = 0; i < n; ++i) {
                flux[0][0][i] = e.comp[1][i];
                flux[0][1][i] = e.comp[1][i] * pr.u[i] + pr.p[i];
                flux[0][2][i] = pr.u[i] * (e.comp[2][i] + pr.p[i]);
            }
            break;
        }
        case Equation::euler2d: {
            auto pr = primitive_quantities(e, spec);
            for (std::size_t i = 0; i < n; ++i) {
                double p = pr.p[i], u = pr.u[i], v = pr.v[i];
                flux[0][0][i] = e.comp[1][i];
                flux[0][1][i] = e.comp[1][i] * u + p;
                flux[0][2][i] = e.comp[1][i] * v;
                flux[0][3][i] = u * (e.comp[3][i] + p);
                flux[1][0][i] = e.comp[2][i];
                flux[1][1][i] = e.comp[2][i] * u;
                flux[1][2][i] = e.comp[2][i] * v + p;
                flux[1][3][i] = v * (e.comp[3][i] + p);
            }
            break;
        }
    }
    return flux;
}

// Primitive -> conserved helpers for problem ICs.
inline void set_euler1d(FlowState& e, std::size_t i, double rho, double u, double p,
                        double gamma) {
    e.comp[0][i] = rho;
    e.comp[1][i] = rho * u;
    e.comp[2][i] = p / (gamma - 1.0) + 0.5 * rho * u * u;
}
inline void set_euler2d(FlowState& e, std::size_t i, double rho, double u, double v, double p,
                        double gamma) {
    e.comp[0][i] = rho;
    e.comp[1][i] = rho * u;
    e.comp[2][i] = rho * v;
    e.comp[3][i] = p / (gamma - 1.0) + 0.5 * rho * (u * u + v * v);
}

}  // namespace shockfc

#endif
