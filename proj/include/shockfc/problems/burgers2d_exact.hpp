#ifndef SHOCKFC_PROBLEMS_BURGERS2D_EXACT_HPP
#define SHOCKFC_PROBLEMS_BURGERS2D_EXACT_HPP

namespace shockfc {

// Quadrant initial data of the 2D Burgers benchmark.
inline double burgers2d_ic(double x, double y) {
    if (y >= 0.5) return x >= 0.5 ? -1.0 : -0.2;
    return x >= 0.5 ? 0.8 : 0.5;
}

// Exact solution of the 2D Burgers Riemann problem (valid for t < 1/2):
// three straight shocks, one curved shock and a rarefaction fan, built
// by characteristics from the quadrant states.
inline double exact_burgers2d(double x, double y, double t) {
    if (t <= 0.0) return burgers2d_ic(x, y);
    if (x <= 0.5 - 0.6 * t)
        return y > 0.5 + 0.15 * t ? -0.2 : 0.5;
    if (x <= 0.5 - 0.25 * t)
        return y > -8.0 * x / 7.0 + 15.0 / 14.0 - 15.0 * t / 28.0 ? -1.0 : 0.5;
    if (x <= 0.5 + 0.5 * t)
        return y > x / 6.0 + 5.0 / 12.0 - 5.0 * t / 24.0 ? -1.0 : 0.5;
    if (x <= 0.5 + 0.8 * t) {
        double par = x - 5.0 / (18.0 * t) * (x + t - 0.5) * (x + t - 0.5);
        return y > par ? -1.0 : (2.0 * x - 1.0) / (2.0 * t);
    }
    return y > 0.5 - 0.1 * t ? -1.0 : 0.8;
}

}  // namespace shockfc

#endif
