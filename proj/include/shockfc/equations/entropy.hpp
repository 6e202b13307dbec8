#ifndef SHOCKFC_EQUATIONS_ENTROPY_HPP
#define SHOCKFC_EQUATIONS_ENTROPY_HPP

#include <cmath>
#include <vector>

#include "shockfc/equations/state.hpp"

namespace shockfc {

// Entropy pair (eta, nu) and wave-speed field C for the EV residual.
struct EntropyPair {
    std::vector<double> eta;
    std::vector<std::vector<double>> nu;  // per direction
    std::vector<double> C;
};

inline EntropyPair entropy_pair(const FlowState& e, const EquationSpec& spec) {
    const std::size_t n = e.size();
    EntropyPair ep;
    ep.eta.resize(n);
    ep.nu.assign(spec.dim(), std::vector<double>(n));
    ep.C.resize(n);
    switch (spec.kind) {
        case Equation::advection:
            for (std::size_t i = 0; i < n; ++i) {
                double u = e.comp[0][i];
                ep.eta[i] = 0.5 * u * u;
                ep.nu[0][i] = spec.a * ep.eta[i];
                ep.C[i] = std::abs(spec.a);
            }
            break;
        case Equation::burgers1d:
        case Equation::burgers2d:
            for (std::size_t i = 0; i < n; ++i) {
                double u = e.comp[0][i];
                ep.eta[i] = 0.5 * u * u;
                ep.nu[0][i] = u * u * u / 3.0;
                if (spec.dim() == 2) ep.nu[1][i] = ep.nu[0][i];
                ep.C[i] = std::abs(u);
            }
            break;
        case Equation::euler1d:
        case Equation::euler2d: {
            auto pr = primitive_quantities(e, spec);
            for (std::size_t i = 0; i < n; ++i) {
                double rho = e.comp[0][i];
                ep.eta[i] = rho / (spec.gamma - 1.0) *
                            std::log(pr.p[i] / std::pow(rho, spec.gamma));
                ep.nu[0][i] = pr.u[i] * ep.eta[i];
                double speed = std::abs(pr.u[i]);
                if (spec.kind == Equation::euler2d) {
                    ep.nu[1][i] = pr.v[i] * ep.eta[i];
                    speed = std::hypot(pr.u[i], pr.v[i]);
                }
                ep.C[i] = speed + pr.sound[i];
            }
            break;
        }
    }
    return ep;
}

}  // namespace shockfc

#endif
