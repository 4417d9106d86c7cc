#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "riconv/tensor.hpp"

namespace riconv::nn {

enum class Mode { kTrain, kEval };

/// Affine map along the last axis, shared over all leading axes.
/// w is [in, out], b is [out]. backward() accumulates into w.grad()/b.grad()
/// and returns the input gradient.
class DenseLayer {
public:
    DenseLayer() = default;
    DenseLayer(std::size_t in, std::size_t out, std::mt19937_64& rng);

    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gy);
    void collect_params(const std::string& prefix, std::vector<ParamRef>& out);

    std::size_t in_features() const { return w.shape()[0]; }
    std::size_t out_features() const { return w.shape()[1]; }

    Tensor w, b;

private:
    Tensor x_cache_;
};

/// Per-channel batch normalization over the rows of a [M, C] tensor.
/// Training mode normalizes with biased batch statistics and updates the
/// running estimates; inference mode is the affine map given by the running
/// statistics.
class BatchNormLayer {
public:
    BatchNormLayer() = default;
    explicit BatchNormLayer(std::size_t channels);

    Tensor forward(const Tensor& x, Mode mode);
    Tensor backward(const Tensor& gy);
    void collect_params(const std::string& prefix, std::vector<ParamRef>& out);

    std::size_t channels() const { return gamma.shape()[0]; }

    Tensor gamma, beta;
    Tensor running_mean, running_var;
    double eps = 1e-5;
    double momentum = 0.9;

private:
    Mode mode_ = Mode::kEval;
    Tensor x_hat_;
    std::vector<double> inv_std_;
    std::vector<double> centered_mean_;  // batch mean, train mode only
};

/// Elementwise max(x, 0) with a cached mask for backward.
class ReluOp {
public:
    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gy) const;

private:
    std::vector<char> mask_;
    std::vector<std::size_t> shape_;
};

/// Row-wise scatter max: every input row belongs to one group, every group
/// reduces to the channel-wise max of its rows. Empty groups yield zeros.
/// The gradient routes to the argmax row per channel (lowest row index on
/// ties).
class GroupMaxPool {
public:
    // x: [K, C] (or any [rows, C]); row_group[i] in [0, n_groups).
    Tensor forward(const Tensor& x, std::span<const int> row_group, std::size_t n_groups);
    Tensor backward(const Tensor& gy) const;

private:
    std::vector<long> argmax_;  // flat row index per (group, channel); -1 = empty
    std::size_t in_rows_ = 0;
    std::size_t cols_ = 0;
};

/// Full-span 1D convolution over the ordered bins: kernel covers all n_bins
/// positions, stride 1, no padding, so exactly one output position remains.
/// Input [n_bins, C_in] (or batched [R, n_bins, C_in]) maps to [1, C_out]
/// (or [R, C_out]).
class Conv1DLayer {
public:
    Conv1DLayer() = default;
    Conv1DLayer(std::size_t n_bins, std::size_t in_channels, std::size_t out_channels,
                std::mt19937_64& rng);

    Tensor forward(const Tensor& x);
    Tensor backward(const Tensor& gy);
    void collect_params(const std::string& prefix, std::vector<ParamRef>& out);

    std::size_t n_bins() const { return n_bins_; }
    std::size_t in_channels() const { return in_channels_; }
    std::size_t out_channels() const { return dense_.out_features(); }

    DenseLayer& dense() { return dense_; }

private:
    std::size_t n_bins_ = 0;
    std::size_t in_channels_ = 0;
    DenseLayer dense_;  // acts on the flattened [n_bins * C_in] vector
};

/// Mean softmax cross entropy over the rows of [R, C] logits.
class SoftmaxCrossEntropy {
public:
    double forward(const Tensor& logits, std::span<const int> labels);
    Tensor backward() const;  // d(loss)/d(logits)

private:
    Tensor softmax_;
    std::vector<int> labels_;
};

/// Convenience wrapper matching the op-level contract: one pool over a
/// single group assignment.
Tensor maxpool_groups(const Tensor& x, std::span<const int> bin_of, int n_bins);

}  // namespace riconv::nn
