#ifndef SHOCKFC_PROBLEMS_RIEMANN_HPP
#define SHOCKFC_PROBLEMS_RIEMANN_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace shockfc {

struct RiemannState {
    double rho, u, p;
};

struct RiemannSolution {
    RiemannState left, right;
    double gamma = 1.4;
    double p_star = 0, u_star = 0;
    double rho_star_l = 0, rho_star_r = 0;
    bool left_shock = false, right_shock = false;
    // wave speeds: left head/tail (equal for a shock), contact, right head/tail
    double sl_head = 0, sl_tail = 0, s_contact = 0, sr_head = 0, sr_tail = 0;
};

namespace detail {
// Toro's pressure function for one side and its derivative.
inline void pressure_fun(double p, const RiemannState& s, double g, double& f, double& df) {
    double a = std::sqrt(g * s.p / s.rho);
    if (p > s.p) {  // shock branch
        double A = 2.0 / ((g + 1.0) * s.rho), B = (g - 1.0) / (g + 1.0) * s.p;
        double q = std::sqrt(A / (p + B));
        f = (p - s.p) * q;
        df = q * (1.0 - 0.5 * (p - s.p) / (p + B));
    } else {  // rarefaction branch
        f = 2.0 * a / (g - 1.0) * (std::pow(p / s.p, (g - 1.0) / (2.0 * g)) - 1.0);
        df = std::pow(p / s.p, -(g + 1.0) / (2.0 * g)) / (s.rho * a);
    }
}

inline double pressure_residual(double p, const RiemannState& l, const RiemannState& r,
                                double g) {
    double fl, dl, fr, dr;
    pressure_fun(p, l, g, fl, dl);
    pressure_fun(p, r, g, fr, dr);
    return fl + fr + (r.u - l.u);
}
}  // namespace detail

// Exact solution of the 1D Euler Riemann problem, Newton iteration on
// the pressure function to 1e-12 (two-rarefaction initial guess).
inline RiemannSolution solve_riemann(const RiemannState& l, const RiemannState& r,
                                     double gamma = 1.4) {
    if (!(l.rho > 0 && r.rho > 0 && l.p > 0 && r.p > 0))
        throw std::invalid_argument("solve_riemann: nonpositive input state");
    const double g = gamma;
    double al = std::sqrt(g * l.p / l.rho), ar = std::sqrt(g * r.p / r.rho);
    if (2.0 * (al + ar) / (g - 1.0) <= r.u - l.u)
        throw std::runtime_error("solve_riemann: vacuum generated");
    // two-rarefaction guess
    double z = (g - 1.0) / (2.0 * g);
    double p = std::pow((al + ar - 0.5 * (g - 1.0) * (r.u - l.u)) /
                            (al / std::pow(l.p, z) + ar / std::pow(r.p, z)),
                        1.0 / z);
    p = std::max(p, 1e-12);
    for (int it = 0; it < 100; ++it) {
        double fl, dl, fr, dr;
        detail::pressure_fun(p, l, g, fl, dl);
        detail::pressure_fun(p, r, g, fr, dr);
        double f = fl + fr + (r.u - l.u);
        double step = f / (dl + dr);
        double pn = p - step;
        if (pn <= 0) pn = 0.5 * p;
        if (std::abs(pn - p) <= 1e-12 * std::max(1.0, p)) { p = pn; break; }
        p = pn;
    }
    RiemannSolution sol;
    sol.left = l;
    sol.right = r;
    sol.gamma = g;
    sol.p_star = p;
    double fl, dl, fr, dr;
    detail::pressure_fun(p, l, g, fl, dl);
    detail::pressure_fun(p, r, g, fr, dr);
    sol.u_star = 0.5 * (l.u + r.u) + 0.5 * (fr - fl);
    const double gm = (g - 1.0) / (g + 1.0);
    sol.left_shock = p > l.p;
    sol.right_shock = p > r.p;
    if (sol.left_shock) {
        sol.rho_star_l = l.rho * ((p / l.p + gm) / (gm * p / l.p + 1.0));
        sol.sl_head = sol.sl_tail =
            l.u - al * std::sqrt((g + 1.0) / (2.0 * g) * p / l.p + (g - 1.0) / (2.0 * g));
    } else {
        sol.rho_star_l = l.rho * std::pow(p / l.p, 1.0 / g);
        double a_star = al * std::pow(p / l.p, (g - 1.0) / (2.0 * g));
        sol.sl_head = l.u - al;
        sol.sl_tail = sol.u_star - a_star;
    }
    if (sol.right_shock) {
        sol.rho_star_r = r.rho * ((p / r.p + gm) / (gm * p / r.p + 1.0));
        sol.sr_head = sol.sr_tail =
            r.u + ar * std::sqrt((g + 1.0) / (2.0 * g) * p / r.p + (g - 1.0) / (2.0 * g));
    } else {
        sol.rho_star_r = r.rho * std::pow(p / r.p, 1.0 / g);
        double a_star = ar * std::pow(p / r.p, (g - 1.0) / (2.0 * g));
        sol.sr_head = r.u + ar;
        sol.sr_tail = sol.u_star + a_star;
    }
    sol.s_contact = sol.u_star;
    return sol;
}

// Sample the self-similar solution at speed s = x/t.
inline RiemannState sample_riemann(const RiemannSolution& sol, double s) {
    const double g = sol.gamma;
    if (s < sol.s_contact) {
        const RiemannState& l = sol.left;
        double al = std::sqrt(g * l.p / l.rho);
        if (sol.left_shock)
            return s < sol.sl_head ? l : RiemannState{sol.rho_star_l, sol.u_star, sol.p_star};
        if (s < sol.sl_head) return l;
        if (s > sol.sl_tail) return {sol.rho_star_l, sol.u_star, sol.p_star};
        // inside the left fan
        double u = 2.0 / (g + 1.0) * (al + 0.5 * (g - 1.0) * l.u + s);
        double a = al + 0.5 * (g - 1.0) * (l.u - u);
        double rho = l.rho * std::pow(a / al, 2.0 / (g - 1.0));
        double p = l.p * std::pow(a / al, 2.0 * g / (g - 1.0));
        return {rho, u, p};
    }
    const RiemannState& r = sol.right;
    double ar = std::sqrt(g * r.p / r.rho);
    if (sol.right_shock)
        return s > sol.sr_head ? r : RiemannState{sol.rho_star_r, sol.u_star, sol.p_star};
    if (s > sol.sr_head) return r;
    if (s < sol.sr_tail) return {sol.rho_star_r, sol.u_star, sol.p_star};
    double u = 2.0 / (g + 1.0) * (-ar + 0.5 * (g - 1.0) * r.u + s);
    double a = ar - 0.5 * (g - 1.0) * (r.u - u);
    double rho = r.rho * std::pow(a / ar, 2.0 / (g - 1.0));
    double p = r.p * std::pow(a / ar, 2.0 * g / (g - 1.0));
    return {rho, u, p};
}

// Independent bisection cross-check for the star pressure.
inline double riemann_p_star_bisect(const RiemannState& l, const RiemannState& r,
                                    double gamma = 1.4) {
    double lo = 1e-12, hi = 10.0 * std::max(l.p, r.p);
    while (detail::pressure_residual(hi, l, r, gamma) < 0) hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (detail::pressure_residual(mid, l, r, gamma) > 0) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace shockfc

#endif
