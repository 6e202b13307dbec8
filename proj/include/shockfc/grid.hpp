#ifndef SHOCKFC_GRID_HPP
#define SHOCKFC_GRID_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace shockfc {

// Uniform 1D grid including both endpoints: x_i = x0 + i*h, i = 0..N-1.
struct Grid1D {
    double x0 = 0.0;
    double h = 1.0;
    int N = 0;

    Grid1D() = default;
    Grid1D(double x0_, double x1, int N_) : x0(x0_), N(N_) {
        if (N_ < 2) throw std::invalid_argument("Grid1D: need at least 2 points");
        h = (x1 - x0_) / (N_ - 1);
    }
    double x(int i) const { return x0 + i * h; }
    double length() const { return (N - 1) * h; }
};

// Uniform 2D grid. Non-rectangular (step) domains are described by
// contiguous active index intervals per row and per column; a full
// rectangle has row_span[j] = [0, Nx-1] for every j.
struct Grid2D {
    double x0 = 0.0, y0 = 0.0;
    double hx = 1.0, hy = 1.0;
    int Nx = 0, Ny = 0;
    // row_span[j] = {imin, imax} of active i-indices in row j (inclusive);
    // col_span[i] = {jmin, jmax} of active j-indices in column i.
    std::vector<std::pair<int, int>> row_span;
    std::vector<std::pair<int, int>> col_span;

    Grid2D() = default;
    Grid2D(double x0_, double x1, int Nx_, double y0_, double y1, int Ny_)
        : x0(x0_), y0(y0_), Nx(Nx_), Ny(Ny_) {
        if (Nx_ < 2 || Ny_ < 2) throw std::invalid_argument("Grid2D: need at least 2x2 points");
        hx = (x1 - x0_) / (Nx_ - 1);
        hy = (y1 - y0_) / (Ny_ - 1);
        row_span.assign(Ny, {0, Nx - 1});
        col_span.assign(Nx, {0, Ny - 1});
    }
    double x(int i) const { return x0 + i * hx; }
    double y(int j) const { return y0 + j * hy; }
    std::size_t idx(int i, int j) const { return std::size_t(j) * Nx + i; }
    bool active(int i, int j) const {
        return i >= row_span[j].first && i <= row_span[j].second &&
               j >= col_span[i].first && j <= col_span[i].second;
    }
    bool rectangular() const {
        for (int j = 0; j < Ny; ++j)
            if (row_span[j] != std::pair<int, int>{0, Nx - 1}) return false;
        return true;
    }
};

}  // namespace shockfc

#endif
