#ifndef SHOCKFC_SDNN_MLP_HPP
#define SHOCKFC_SDNN_MLP_HPP

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>

namespace shockfc {

// 7 -> 16 -> 16 -> 16 -> 4 classifier, ELU(alpha0=1) hidden layers,
// linear output (softmax applied by the callers that need probabilities).
struct MlpParams {
    Eigen::Matrix<double, 16, 7> W1;
    Eigen::Matrix<double, 16, 16> W2;
    Eigen::Matrix<double, 16, 16> W3;
    Eigen::Matrix<double, 4, 16> W4;
    Eigen::Matrix<double, 16, 1> b1, b2, b3;
    Eigen::Matrix<double, 4, 1> b4;

    void set_zero() {
        W1.setZero(); W2.setZero(); W3.setZero(); W4.setZero();
        b1.setZero(); b2.setZero(); b3.setZero(); b4.setZero();
    }
};

inline double elu(double x) { return x > 0 ? x : std::expm1(x); }
inline double elu_deriv_from_output(double y) { return y > 0 ? 1.0 : y + 1.0; }

namespace detail {
template <typename M>
void elu_inplace(M& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) m(i) = elu(m(i));
}
}  // namespace detail

// Batched forward pass: columns are stencils, returns softmax probabilities.
inline Eigen::Matrix<double, 4, Eigen::Dynamic> mlp_forward_batch(
    const MlpParams& p, const Eigen::Matrix<double, 7, Eigen::Dynamic>& z) {
    Eigen::Matrix<double, 16, Eigen::Dynamic> h1 = (p.W1 * z).colwise() + p.b1;
    detail::elu_inplace(h1);
    Eigen::Matrix<double, 16, Eigen::Dynamic> h2 = (p.W2 * h1).colwise() + p.b2;
    detail::elu_inplace(h2);
    Eigen::Matrix<double, 16, Eigen::Dynamic> h3 = (p.W3 * h2).colwise() + p.b3;
    detail::elu_inplace(h3);
    Eigen::Matrix<double, 4, Eigen::Dynamic> out = (p.W4 * h3).colwise() + p.b4;
    for (Eigen::Index c = 0; c < out.cols(); ++c) {
        double mx = out.col(c).maxCoeff();
        out.col(c) = (out.col(c).array() - mx).exp();
        out.col(c) /= out.col(c).sum();
    }
    return out;
}

inline std::array<double, 4> mlp_forward(const MlpParams& p, const std::array<double, 7>& z) {
    Eigen::Matrix<double, 7, Eigen::Dynamic> in(7, 1);
    for (int i = 0; i < 7; ++i) in(i, 0) = z[i];
    auto out = mlp_forward_batch(p, in);
    return {out(0, 0), out(1, 0), out(2, 0), out(3, 0)};
}

inline MlpParams glorot_init(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    MlpParams p;
    p.set_zero();
    auto fill = [&](auto& W) {
        double limit = std::sqrt(6.0 / double(W.rows() + W.cols()));
        std::uniform_real_distribution<double> dist(-limit, limit);
        for (Eigen::Index i = 0; i < W.rows(); ++i)
            for (Eigen::Index j = 0; j < W.cols(); ++j) W(i, j) = dist(rng);
    };
    fill(p.W1); fill(p.W2); fill(p.W3); fill(p.W4);
    return p;
}

// Accumulated gradient of the summed cross-entropy loss over a batch.
// Returns the batch loss sum; labels are class indices 0..3 per column.
struct MlpGrad {
    MlpParams g;  // same shapes as the parameters
    MlpGrad() { g.set_zero(); }
};

inline double mlp_backprop_batch(const MlpParams& p,
                                 const Eigen::Matrix<double, 7, Eigen::Dynamic>& z,
                                 const std::vector<int>& labels, MlpGrad& grad) {
    const Eigen::Index B = z.cols();
    Eigen::Matrix<double, 16, Eigen::Dynamic> h1 = (p.W1 * z).colwise() + p.b1;
    detail::elu_inplace(h1);
    Eigen::Matrix<double, 16, Eigen::Dynamic> h2 = (p.W2 * h1).colwise() + p.b2;
    detail::elu_inplace(h2);
    Eigen::Matrix<double, 16, Eigen::Dynamic> h3 = (p.W3 * h2).colwise() + p.b3;
    detail::elu_inplace(h3);
    Eigen::Matrix<double, 4, Eigen::Dynamic> out = (p.W4 * h3).colwise() + p.b4;

    double loss = 0.0;
    // d4 = softmax - onehot; loss accumulated from the log-sum-exp form
    Eigen::Matrix<double, 4, Eigen::Dynamic> d4(4, B);
    for (Eigen::Index c = 0; c < B; ++c) {
        double mx = out.col(c).maxCoeff();
        Eigen::Matrix<double, 4, 1> e = (out.col(c).array() - mx).exp();
        double s = e.sum();
        loss += std::log(s) - (out(labels[c], c) - mx);
        d4.col(c) = e / s;
        d4(labels[c], c) -= 1.0;
    }

    grad.g.W4 += d4 * h3.transpose();
    grad.g.b4 += d4.rowwise().sum();
    Eigen::Matrix<double, 16, Eigen::Dynamic> d3 = p.W4.transpose() * d4;
    for (Eigen::Index i = 0; i < d3.size(); ++i) d3(i) *= elu_deriv_from_output(h3(i));
    grad.g.W3 += d3 * h2.transpose();
    grad.g.b3 += d3.rowwise().sum();
    Eigen::Matrix<double, 16, Eigen::Dynamic> d2 = p.W3.transpose() * d3;
    for (Eigen::Index i = 0; i < d2.size(); ++i) d2(i) *= elu_deriv_from_output(h2(i));
    grad.g.W2 += d2 * h1.transpose();
    grad.g.b2 += d2.rowwise().sum();
    Eigen::Matrix<double, 16, Eigen::Dynamic> d1 = p.W2.transpose() * d2;
    for (Eigen::Index i = 0; i < d1.size(); ++i) d1(i) *= elu_deriv_from_output(h1(i));
    grad.g.W1 += d1 * z.transpose();
    grad.g.b1 += d1.rowwise().sum();
    return loss;
}

// Weight file: one text header line with the layer sizes, then the raw
// row-major float64 little-endian values of W1,b1,W2,b2,W3,b3,W4,b4.
inline void save_mlp(const MlpParams& p, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("save_mlp: cannot open " + path);
    f << "FCSDNN 7 16 16 16 4\n";
    auto put = [&](const auto& M) {
        for (Eigen::Index i = 0; i < M.rows(); ++i)
            for (Eigen::Index j = 0; j < M.cols(); ++j) {
                double v = M(i, j);
                f.write(reinterpret_cast<const char*>(&v), sizeof v);
            }
    };
    put(p.W1); put(p.b1); put(p.W2); put(p.b2);
    put(p.W3); put(p.b3); put(p.W4); put(p.b4);
    if (!f) throw std::runtime_error("save_mlp: write failed for " + path);
}

inline MlpParams load_mlp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("load_mlp: cannot open " + path);
    std::string header;
    std::getline(f, header);
    if (header != "FCSDNN 7 16 16 16 4")
        throw std::runtime_error("load_mlp: bad header in " + path);
    MlpParams p;
    auto get = [&](auto& M) {
        for (Eigen::Index i = 0; i < M.rows(); ++i)
            for (Eigen::Index j = 0; j < M.cols(); ++j) {
                double v;
                f.read(reinterpret_cast<char*>(&v), sizeof v);
                M(i, j) = v;
            }
    };
    get(p.W1); get(p.b1); get(p.W2); get(p.b2);
    get(p.W3); get(p.b3); get(p.W4); get(p.b4);
    if (!f) throw std::runtime_error("load_mlp: truncated file " + path);
    return p;
}

}  // namespace shockfc

#endif
