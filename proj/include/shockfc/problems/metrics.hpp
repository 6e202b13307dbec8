#ifndef SHOCKFC_PROBLEMS_METRICS_HPP
#define SHOCKFC_PROBLEMS_METRICS_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace shockfc {

struct ErrorMetrics {
    double l1 = 0, l2 = 0, linf = 0, tv = 0;
};

// Grid-weighted norms of (numeric - oracle) plus the total variation of
// the numeric field; cell weight = h (trapezoid-free midpoint measure).
inline ErrorMetrics error_metrics(const std::vector<double>& numeric,
                                  const std::vector<double>& oracle, double h) {
    if (numeric.size() != oracle.size())
        throw std::invalid_argument("error_metrics: shape mismatch");
    ErrorMetrics m;
    for (std::size_t i = 0; i < numeric.size(); ++i) {
        double d = std::abs(numeric[i] - oracle[i]);
        m.l1 += d * h;
        m.l2 += d * d * h;
        m.linf = std::max(m.linf, d);
        if (i > 0) m.tv += std::abs(numeric[i] - numeric[i - 1]);
    }
    m.l2 = std::sqrt(m.l2);
    return m;
}

}  // namespace shockfc

#endif
