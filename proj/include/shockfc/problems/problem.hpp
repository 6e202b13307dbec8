#ifndef SHOCKFC_PROBLEMS_PROBLEM_HPP
#define SHOCKFC_PROBLEMS_PROBLEM_HPP

#include <functional>
#include <string>
#include <vector>

#include "shockfc/equations/state.hpp"
#include "shockfc/fc/assets.hpp"
#include "shockfc/grid.hpp"

namespace shockfc {

// Full benchmark description: equation, domain, defaults, IC/BC closures
// and the discontinuity bookkeeping used by the t=0 localized smearing.
struct Problem {
    std::string id;
    std::string description;
    EquationSpec eq;
    int dim = 1;
    bool periodic = false;
    double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
    double cfl = 2.0;
    double t_end = 1.0;
    int d = 5;
    int default_n = 500, default_n2 = 0;  // n2 = Ny (2D only)

    std::function<void(const Grid1D&, FlowState&)> init1d;
    std::function<void(const Grid2D&, FlowState&)> init2d;
    // Mask setup for non-rectangular domains, applied to the fresh grid.
    std::function<void(Grid2D&)> shape;

    // Boundary enforcement by value overwrite, called before every RHS
    // evaluation at the stage time.
    std::function<void(FlowState&, double, const Grid1D&)> bc1d;
    std::function<void(FlowState&, double, const Grid2D&, const FcAssets&)> bc2d;

    // Initial discontinuity positions for the t=0 smearing: fixed list in
    // 1D; per-row x-positions and per-column y-positions in 2D.
    std::vector<double> smear1d;
    std::function<std::vector<double>(double y)> smear_rows;
    std::function<std::vector<double>(double x)> smear_cols;

    // Post-classification adjustment (blast wave forces tau=1 at the ends).
    std::function<void(std::vector<int>&)> tau_hook;
};

}  // namespace shockfc

#endif
