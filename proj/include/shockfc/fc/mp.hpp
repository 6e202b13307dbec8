#ifndef SHOCKFC_FC_MP_HPP
#define SHOCKFC_FC_MP_HPP

#include <mpfr.h>

#include <stdexcept>
#include <vector>

namespace shockfc::mp {

// Minimal fixed-precision MPFR value type for the offline asset
// generator. 512 bits is far beyond the conditioning of the blend
// least-squares systems (~1e17 squared), which is the whole point:
// the classical FC-Gram construction only works in high precision.
inline constexpr mpfr_prec_t kPrec = 512;

class Real {
    mpfr_t v_;

  public:
    Real() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
    Real(double d) { mpfr_init2(v_, kPrec); mpfr_set_d(v_, d, MPFR_RNDN); }
    Real(long i) { mpfr_init2(v_, kPrec); mpfr_set_si(v_, i, MPFR_RNDN); }
    Real(int i) { mpfr_init2(v_, kPrec); mpfr_set_si(v_, i, MPFR_RNDN); }
    Real(const Real& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real& operator=(const Real& o) {
        if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }
    friend Real operator-(const Real& a) {
        Real r;
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    friend Real sqrt(const Real& a) {
        Real r;
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real abs(const Real& a) {
        Real r;
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real cos(const Real& a) {
        Real r;
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real sin(const Real& a) {
        Real r;
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend Real exp(const Real& a) {
        Real r;
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    static Real pi() {
        Real r;
        mpfr_const_pi(r.raw(), MPFR_RNDN);
        return r;
    }
};

// Dense row-major matrix, just enough for the generator.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Real> a;
    Mat(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c) {}
    Real& operator()(int i, int j) { return a[std::size_t(i) * cols + j]; }
    const Real& operator()(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

// Least-squares solve of an overdetermined system by Householder QR,
// in place. Returns the first `cols` entries of the solution.
inline std::vector<Real> lstsq(Mat A, std::vector<Real> b) {
    const int m = A.rows, n = A.cols;
    if (m < n) throw std::invalid_argument("lstsq: need rows >= cols");
    for (int j = 0; j < n; ++j) {
        Real norm2(0);
        for (int i = j; i < m; ++i) norm2 += A(i, j) * A(i, j);
        Real alpha = sqrt(norm2);
        if (A(j, j) > Real(0)) alpha = -alpha;
        Real v0 = A(j, j) - alpha;
        A(j, j) = alpha;
        Real vnorm2 = v0 * v0;
        for (int i = j + 1; i < m; ++i) vnorm2 += A(i, j) * A(i, j);
        if (vnorm2 == Real(0)) continue;
        // apply reflector I - 2 v v^T / (v^T v); v = (v0, A(j+1..,j))
        for (int c = j + 1; c < n; ++c) {
            Real dot = v0 * A(j, c);
            for (int i = j + 1; i < m; ++i) dot += A(i, j) * A(i, c);
            Real f = Real(2) * dot / vnorm2;
            A(j, c) -= f * v0;
            for (int i = j + 1; i < m; ++i) A(i, c) -= f * A(i, j);
        }
        Real dot = v0 * b[j];
        for (int i = j + 1; i < m; ++i) dot += A(i, j) * b[i];
        Real f = Real(2) * dot / vnorm2;
        b[j] -= f * v0;
        for (int i = j + 1; i < m; ++i) b[i] -= f * A(i, j);
    }
    std::vector<Real> x(n);
    for (int i = n - 1; i >= 0; --i) {
        Real s = b[i];
        for (int j = i + 1; j < n; ++j) s -= A(i, j) * x[j];
        x[i] = s / A(i, i);
    }
    return x;
}

}  // namespace shockfc::mp

#endif
