#ifndef SHOCKFC_FC_ASSETS_HPP
#define SHOCKFC_FC_ASSETS_HPP

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace shockfc {

// Precomputed FC-Gram matrices. Q holds the orthonormal Gram-polynomial
// values on the d matching points (column k = basis element k); Q_neumann
// is the variant whose last data entry is h*F' instead of the endpoint
// value. A_left/A_right (C x d) map Gram coefficients to the blended
// continuation values.
struct FcAssets {
    int d = 0;
    int C = 0;
    std::vector<double> Q;          // d x d, row-major
    std::vector<double> Q_neumann;  // d x d, row-major
    std::vector<double> A_left;     // C x d, row-major
    std::vector<double> A_right;    // C x d, row-major

    double q(int i, int k) const { return Q[std::size_t(i) * d + k]; }
    double qn(int i, int k) const { return Q_neumann[std::size_t(i) * d + k]; }
    double al(int i, int k) const { return A_left[std::size_t(i) * d + k]; }
    double ar(int i, int k) const { return A_right[std::size_t(i) * d + k]; }
};

namespace detail {
inline void write_f64(std::ostream& os, const std::vector<double>& v) {
    os.write(reinterpret_cast<const char*>(v.data()),
             std::streamsize(v.size() * sizeof(double)));
}
inline void read_f64(std::istream& is, std::vector<double>& v, std::size_t n) {
    v.resize(n);
    is.read(reinterpret_cast<char*>(v.data()), std::streamsize(n * sizeof(double)));
}
}  // namespace detail

// File layout: magic "FCGRAM1", u32 d, u32 C, then Q, Q_neumann, A_left,
// A_right as row-major float64 little-endian. (This code assumes a
// little-endian host, which is all we target.)
inline void save_fc_assets(const FcAssets& a, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open asset file for writing: " + path);
    os.write("FCGRAM1", 7);
    std::uint32_t d = std::uint32_t(a.d), C = std::uint32_t(a.C);
    os.write(reinterpret_cast<const char*>(&d), 4);
    os.write(reinterpret_cast<const char*>(&C), 4);
    detail::write_f64(os, a.Q);
    detail::write_f64(os, a.Q_neumann);
    detail::write_f64(os, a.A_left);
    detail::write_f64(os, a.A_right);
    if (!os) throw std::runtime_error("write failure on asset file: " + path);
}

inline FcAssets load_fc_assets(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open asset file: " + path);
    char magic[7];
    is.read(magic, 7);
    if (!is || std::memcmp(magic, "FCGRAM1", 7) != 0)
        throw std::runtime_error("bad magic in asset file: " + path);
    std::uint32_t d = 0, C = 0;
    is.read(reinterpret_cast<char*>(&d), 4);
    is.read(reinterpret_cast<char*>(&C), 4);
    if (!is || d < 2 || C < 2 || d > 64 || C > 4096)
        throw std::runtime_error("bad dimensions in asset file: " + path);
    FcAssets a;
    a.d = int(d);
    a.C = int(C);
    detail::read_f64(is, a.Q, std::size_t(d) * d);
    detail::read_f64(is, a.Q_neumann, std::size_t(d) * d);
    detail::read_f64(is, a.A_left, std::size_t(C) * d);
    detail::read_f64(is, a.A_right, std::size_t(C) * d);
    if (!is) throw std::runtime_error("truncated asset file: " + path);
    return a;
}

}  // namespace shockfc

#endif
