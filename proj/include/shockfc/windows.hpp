#ifndef SHOCKFC_WINDOWS_HPP
#define SHOCKFC_WINDOWS_HPP

#include <cmath>
#include <numbers>

namespace shockfc {

// Window function q_{c,r}: flat top of width c*h, cos^2 rise of width r*h,
// compact support of radius (c/2 + r)*h. Continuous and in [0,1], with
// q = 0 exactly at and beyond the support edge.
inline double window_q(double x, int c, int r, double h) {
    double ax = std::abs(x);
    double flat = 0.5 * c * h, edge = flat + r * h;
    if (ax <= flat) return 1.0;
    if (ax >= edge) return 0.0;
    double t = std::cos(std::numbers::pi * (ax - flat) / (2.0 * r * h));
    return t * t;
}

}  // namespace shockfc

#endif
