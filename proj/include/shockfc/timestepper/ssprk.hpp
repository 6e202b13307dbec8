#ifndef SHOCKFC_TIMESTEPPER_SSPRK_HPP
#define SHOCKFC_TIMESTEPPER_SSPRK_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "shockfc/equations/state.hpp"

namespace shockfc {

// Five-stage fourth-order SSP Runge-Kutta (the standard SSPRK(5,4)
// coefficients). Effective stage times follow from the convex weights.
namespace ssprk {
inline constexpr double a10 = 0.391752226571890;
inline constexpr double a20 = 0.444370493651235, a21 = 0.555629506348765,
                        b21 = 0.368410593050371;
inline constexpr double a30 = 0.620101851488403, a32 = 0.379898148511597,
                        b32 = 0.251891774271694;
inline constexpr double a40 = 0.178079954393132, a43 = 0.821920045606868,
                        b43 = 0.544974750228521;
inline constexpr double w2 = 0.517231671970585, w3 = 0.096059710526147,
                        bw3 = 0.063692468666290, w4 = 0.386708617503269,
                        bw4 = 0.226007483236906;
inline constexpr double c1 = a10;
inline constexpr double c2 = a21 * c1 + b21;
inline constexpr double c3 = a32 * c2 + b32;
inline constexpr double c4 = a43 * c3 + b43;
}  // namespace ssprk

namespace detail {
inline void check_finite(const FlowState& e, const char* where) {
    for (const auto& c : e.comp)
        for (double v : c)
            if (!std::isfinite(v))
                throw std::runtime_error(std::string("ssprk4_step: non-finite value at ") +
                                         where);
}
}  // namespace detail

// One SSPRK(5,4) step. enforce(state, t_stage) overwrites boundary values
// before every right-hand-side evaluation; rhs(state) returns L[e] with
// the per-step viscosity frozen by the caller.
template <class Enforce, class Rhs>
inline void ssprk4_step(FlowState& e, double t, double dt, Enforce&& enforce, Rhs&& rhs) {
    using namespace ssprk;
    const int r = e.rank();
    const std::size_t n = e.size();

    enforce(e, t);
    FlowState F0 = rhs(e);
    detail::check_finite(F0, "stage 1");
    FlowState u1 = e;
    for (int c = 0; c < r; ++c)
        for (std::size_t i = 0; i < n; ++i) u1.comp[c][i] += a10 * dt * F0.comp[c][i];

    enforce(u1, t + c1 * dt);
    FlowState F1 = rhs(u1);
    detail::check_finite(F1, "stage 2");
    FlowState u2 = e;
    for (int c = 0; c < r; ++c)
        for (std::size_t i = 0; i < n; ++i)
            u2.comp[c][i] = a20 * e.comp[c][i] + a21 * u1.comp[c][i] + b21 * dt * F1.comp[c][i];

    enforce(u2, t + c2 * dt);
    FlowState F2 = rhs(u2);
    detail::check_finite(F2, "stage 3");
    FlowState u3 = e;
    for (int c = 0; c < r; ++c)
        for (std::size_t i = 0; i < n; ++i)
            u3.comp[c][i] = a30 * e.comp[c][i] + a32 * u2.comp[c][i] + b32 * dt * F2.comp[c][i];

    enforce(u3, t + c3 * dt);
    FlowState F3 = rhs(u3);
    detail::check_finite(F3, "stage 4");
    FlowState u4 = e;
    for (int c = 0; c < r; ++c)
        for (std::size_t i = 0; i < n; ++i)
            u4.comp[c][i] = a40 * e.comp[c][i] + a43 * u3.comp[c][i] + b43 * dt * F3.comp[c][i];

    enforce(u4, t + c4 * dt);
    FlowState F4 = rhs(u4);
    detail::check_finite(F4, "stage 5");
    for (int c = 0; c < r; ++c)
        for (std::size_t i = 0; i < n; ++i)
            e.comp[c][i] = w2 * u2.comp[c][i] + w3 * u3.comp[c][i] +
                           bw3 * dt * F3.comp[c][i] + w4 * u4.comp[c][i] +
                           bw4 * dt * F4.comp[c][i];
}

// Adaptive time step dt = CFL / (pi (max S / h + max mu / h^2)).
inline double adaptive_dt(double max_S, double max_mu, double cfl, double h) {
    const double denom = 3.14159265358979323846 * (max_S / h + max_mu / (h * h));
    if (!(denom > 0.0))
        throw std::runtime_error("adaptive_dt: stationary trivial state (max S = max mu = 0)");
    return cfl / denom;
}

}  // namespace shockfc

#endif
