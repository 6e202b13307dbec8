#ifndef SHOCKFC_FC_GRAM_HPP
#define SHOCKFC_FC_GRAM_HPP

#include <stdexcept>
#include <vector>

#include "shockfc/fc/assets.hpp"
#include "shockfc/fc/mp.hpp"

namespace shockfc {

namespace fcgen {

using mp::Mat;
using mp::Real;

inline Real poly_eval(const std::vector<Real>& coef, const Real& xi) {
    Real v(0), p(1);
    for (std::size_t j = 0; j < coef.size(); ++j) { v += coef[j] * p; p *= xi; }
    return v;
}

inline Real poly_deriv_eval(const std::vector<Real>& coef, const Real& xi) {
    Real v(0), p(1);
    for (std::size_t j = 1; j < coef.size(); ++j) { v += Real(long(j)) * coef[j] * p; p *= xi; }
    return v;
}

// Orthonormal Gram polynomial basis on the matching points xi = 0..d-1:
// values[i*d+k] = P_k(xi_i), coefs[k] = monomial coefficients of P_k.
// Modified Gram-Schmidt with reorthogonalization, in high precision.
struct GramBasis {
    int d;
    std::vector<Real> values;               // d x d, row-major
    std::vector<std::vector<Real>> coefs;   // d vectors of length d
};

inline GramBasis gram_basis(int d) {
    GramBasis g;
    g.d = d;
    g.values.assign(std::size_t(d) * d, Real(0));
    g.coefs.assign(d, std::vector<Real>(d, Real(0)));
    std::vector<std::vector<Real>> q(d, std::vector<Real>(d, Real(0)));
    for (int k = 0; k < d; ++k) {
        std::vector<Real> v(d), c(d, Real(0));
        for (int i = 0; i < d; ++i) {
            Real p(1);
            for (int e = 0; e < k; ++e) p *= Real(i);
            v[i] = p;
        }
        c[k] = Real(1);
        for (int pass = 0; pass < 2; ++pass) {
            for (int j = 0; j < k; ++j) {
                Real dot(0);
                for (int i = 0; i < d; ++i) dot += q[j][i] * v[i];
                for (int i = 0; i < d; ++i) v[i] -= dot * q[j][i];
                for (int i = 0; i < d; ++i) c[i] -= dot * g.coefs[j][i];
            }
        }
        Real nrm(0);
        for (int i = 0; i < d; ++i) nrm += v[i] * v[i];
        nrm = sqrt(nrm);
        // sign convention: positive leading monomial coefficient
        Real lead = c[k];
        if (lead < Real(0)) nrm = -nrm;
        for (int i = 0; i < d; ++i) { v[i] /= nrm; c[i] /= nrm; }
        q[k] = v;
        g.coefs[k] = c;
        for (int i = 0; i < d; ++i) g.values[std::size_t(i) * d + k] = v[i];
    }
    return g;
}

// Blend-to-zero of one Gram basis element by a spectrally-weighted,
// ridge-regularized trigonometric least-squares fit: match P_k on
// xi in [0, d-1] and zero on [d+C, 2d+C-1], period 2(d+C). Column
// weights decay like a Gaussian in the mode number so the solution's
// spectrum (hence the sampled continuation) is smooth; the ridge term
// is far below the weights and only fixes the scale of the null space.
// High precision is essential: the weighted system's conditioning is
// far beyond double.
inline std::vector<Real> blend_to_zero(const std::vector<Real>& coef, int d, int C,
                                       int oversample, bool reflect,
                                       double alpha = 150.0) {
    const Real period = Real(2 * (d + C));
    const int mN = d + C;            // integer-grid Nyquist mode
    const int nm = 2 * (d + C);      // modes kept (beyond-Nyquist carried with tiny weight)
    const int ncols = 1 + 2 * nm;
    const int nper = (d - 1) * oversample + 1;
    const int nrows = 2 * nper + ncols;  // constraints plus ridge rows
    const Real alpha_w(alpha);           // weight decay rate over the mode number
    const Real lambda(1e-60);

    std::vector<Real> w(ncols);
    auto weight = [&](int m) {
        Real t = Real(m) / Real(mN);
        return exp(-alpha_w * t * t);
    };
    w[0] = weight(0);
    for (int m = 1; m <= nm; ++m) w[2 * m - 1] = w[2 * m] = weight(m);

    Mat A(nrows, ncols);
    std::vector<Real> rhs(nrows, Real(0));
    const Real two_pi = Real(2) * Real::pi();
    for (int s = 0; s < nper; ++s) {
        Real xi = Real(d - 1) * Real(s) / Real(nper - 1);
        for (int rgn = 0; rgn < 2; ++rgn) {
            int row = rgn * nper + s;
            Real X = xi + Real(rgn * (d + C));
            A(row, 0) = w[0];
            for (int m = 1; m <= nm; ++m) {
                Real ang = two_pi * Real(m) * X / period;
                A(row, 2 * m - 1) = w[2 * m - 1] * cos(ang);
                A(row, 2 * m) = w[2 * m] * sin(ang);
            }
            rhs[row] = rgn ? Real(0)
                           : poly_eval(coef, reflect ? Real(d - 1) - xi : xi);
        }
    }
    for (int j = 0; j < ncols; ++j) A(2 * nper + j, j) = lambda;

    std::vector<Real> y = mp::lstsq(A, rhs);

    // verify the fit on the constraint rows
    Real resid(0);
    for (int row = 0; row < 2 * nper; ++row) {
        Real s(0);
        for (int j = 0; j < ncols; ++j) s += A(row, j) * y[j];
        Real r = abs(s - rhs[row]);
        if (r > resid) resid = r;
    }
    if (resid.to_double() > 1e-10)
        throw std::runtime_error("fc asset generation: blend fit residual too large");

    std::vector<Real> out(C);
    for (int i = 0; i < C; ++i) {
        Real X(d + i), v = w[0] * y[0];
        for (int m = 1; m <= nm; ++m) {
            Real ang = two_pi * Real(m) * X / period;
            v += w[2 * m - 1] * y[2 * m - 1] * cos(ang) + w[2 * m] * y[2 * m] * sin(ang);
        }
        out[i] = v;
    }
    return out;
}

}  // namespace fcgen

// Build the FC-Gram matrices for d matching points and C continuation
// points. Deterministic for fixed inputs. With the steep spectral weight
// the per-doubling derivative error ratio settles at the intrinsic 2^(d-1)
// for smooth data instead of saturating on blend roughness.
inline FcAssets generate_fc_assets(int d, int C, int oversample = 20,
                                   int extension_margin = -1, double alpha = 150.0) {
    if (d < 2) throw std::invalid_argument("generate_fc_assets: d must be >= 2");
    if (C < 2 * d) throw std::invalid_argument("generate_fc_assets: C must be >= 2d");
    if (oversample < 20) throw std::invalid_argument("generate_fc_assets: oversample must be >= 20");
    (void)extension_margin;  // period is fixed at 2(d+C); kept for CLI compat

    using namespace fcgen;
    GramBasis basis = gram_basis(d);

    FcAssets a;
    a.d = d;
    a.C = C;
    a.Q.resize(std::size_t(d) * d);
    a.Q_neumann.resize(std::size_t(d) * d);
    a.A_left.resize(std::size_t(C) * d);
    a.A_right.resize(std::size_t(C) * d);

    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            a.Q[std::size_t(i) * d + k] = basis.values[std::size_t(i) * d + k].to_double();

    // Neumann variant: interpolate d-1 values plus the endpoint derivative
    // (in the unit coordinate, i.e. h * physical derivative); coefficients
    // are V^{-1} * data, so the stored matrix is V^{-T}.
    {
        Mat V(d, d);
        for (int k = 0; k < d; ++k) {
            for (int i = 0; i < d - 1; ++i) V(i, k) = poly_eval(basis.coefs[k], Real(i));
            V(d - 1, k) = poly_deriv_eval(basis.coefs[k], Real(d - 1));
        }
        // invert column by column
        for (int c = 0; c < d; ++c) {
            std::vector<Real> e(d, Real(0));
            e[c] = Real(1);
            std::vector<Real> x = mp::lstsq(V, e);
            // row c of V^{-T} is column c of V^{-1}
            for (int i = 0; i < d; ++i) a.Q_neumann[std::size_t(c) * d + i] = x[i].to_double();
        }
    }

    // All elements use the weighted trigonometric least-squares blend.
    // For the constant element the fit problem is symmetric under
    // reflection of the period, so the left and right blends sum to
    // exactly 1/P_0 up to rounding: the continuation of a constant
    // vector is constant to ~1e-15.
    for (int k = 0; k < d; ++k) {
        std::vector<Real> gr = blend_to_zero(basis.coefs[k], d, C, oversample, false, alpha);
        std::vector<Real> gl = blend_to_zero(basis.coefs[k], d, C, oversample, true, alpha);
        for (int i = 0; i < C; ++i) {
            a.A_right[std::size_t(i) * d + k] = gr[i].to_double();
            a.A_left[std::size_t(i) * d + k] = gl[C - 1 - i].to_double();
        }
    }
    return a;
}

}  // namespace shockfc

#endif
