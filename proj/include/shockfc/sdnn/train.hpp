#ifndef SHOCKFC_SDNN_TRAIN_HPP
#define SHOCKFC_SDNN_TRAIN_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "shockfc/sdnn/dataset.hpp"
#include "shockfc/sdnn/mlp.hpp"

namespace shockfc {

struct TrainResult {
    MlpParams best;
    double best_val_accuracy = 0.0;
    std::vector<double> train_accuracy, val_accuracy;
};

inline double mlp_accuracy(const MlpParams& p, const std::vector<LabeledStencil>& data) {
    if (data.empty()) return 0.0;
    const std::size_t chunk = 8192;
    std::size_t correct = 0;
    Eigen::Matrix<double, 7, Eigen::Dynamic> z;
    for (std::size_t s = 0; s < data.size(); s += chunk) {
        std::size_t n = std::min(chunk, data.size() - s);
        z.resize(7, n);
        for (std::size_t c = 0; c < n; ++c)
            for (int r = 0; r < 7; ++r) z(r, c) = data[s + c].z[r];
        auto w = mlp_forward_batch(p, z);
        for (std::size_t c = 0; c < n; ++c) {
            int best = 0;
            for (int i = 1; i < 4; ++i)
                if (w(i, c) > w(best, c)) best = i;
            if (best == data[s + c].label) ++correct;
        }
    }
    return double(correct) / double(data.size());
}

// Plain SGD (no momentum) on the summed cross-entropy gradient of each
// mini batch, constant learning rate, Glorot-uniform start, training set
// reshuffled every epoch, best-validation snapshot kept. The default
// rate 1e-6 goes with the summed (not averaged) batch gradient; with a
// mean gradient it is ~100x too slow to ever leave the initialization.
inline TrainResult train(Dataset data, int epochs, std::uint64_t seed, double lr = 1e-6,
                         int batch = 128,
                         const std::function<void(int, double, double, const MlpParams&, bool)>&
                             on_epoch = nullptr,
                         const MlpParams* start = nullptr, int train_acc_every = 1) {
    if (data.train.empty()) throw std::invalid_argument("train: empty training set");
    std::mt19937_64 rng(seed);
    MlpParams p = start ? *start : glorot_init(rng());
    TrainResult res;
    res.best = p;

    Eigen::Matrix<double, 7, Eigen::Dynamic> z;
    std::vector<int> labels;
    for (int e = 0; e < epochs; ++e) {
        std::shuffle(data.train.begin(), data.train.end(), rng);
        for (std::size_t s = 0; s < data.train.size(); s += batch) {
            std::size_t n = std::min<std::size_t>(batch, data.train.size() - s);
            z.resize(7, n);
            labels.assign(n, 0);
            for (std::size_t c = 0; c < n; ++c) {
                for (int r = 0; r < 7; ++r) z(r, c) = data.train[s + c].z[r];
                labels[c] = data.train[s + c].label;
            }
            MlpGrad grad;
            double loss = mlp_backprop_batch(p, z, labels, grad);
            if (!std::isfinite(loss))
                throw std::runtime_error("train: loss diverged (non-finite)");
            double scale = lr;
            p.W1 -= scale * grad.g.W1; p.b1 -= scale * grad.g.b1;
            p.W2 -= scale * grad.g.W2; p.b2 -= scale * grad.g.b2;
            p.W3 -= scale * grad.g.W3; p.b3 -= scale * grad.g.b3;
            p.W4 -= scale * grad.g.W4; p.b4 -= scale * grad.g.b4;
        }
        std::shuffle(data.validation.begin(), data.validation.end(), rng);
        // the full-train-set accuracy sweep costs about as much as an
        // SGD epoch; allow evaluating it sparsely on long runs
        double ta = (train_acc_every <= 1 || e % train_acc_every == 0)
                        ? mlp_accuracy(p, data.train)
                        : (res.train_accuracy.empty() ? 0.0 : res.train_accuracy.back());
        double va = mlp_accuracy(p, data.validation);
        res.train_accuracy.push_back(ta);
        res.val_accuracy.push_back(va);
        bool improved = va > res.best_val_accuracy;
        if (improved) {
            res.best_val_accuracy = va;
            res.best = p;
        }
        if (on_epoch) on_epoch(e, ta, va, p, improved);
    }
    return res;
}

}  // namespace shockfc

#endif
