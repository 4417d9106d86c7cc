#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace riconv::nn {

/// Dense row-major N-d array of doubles with an optional gradient buffer of
/// the same shape. The gradient is empty until alloc_grad() and always stays
/// the same length as data afterwards.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape);

    static Tensor zeros(std::vector<std::size_t> shape) { return Tensor(std::move(shape)); }
    static Tensor scalar(double v);
    static Tensor from_rows(std::size_t rows, std::size_t cols, std::vector<double> values);

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t ndim() const { return shape_.size(); }
    std::size_t numel() const { return data_.size(); }
    std::size_t extent(std::size_t axis) const { return shape_[axis]; }

    // Leading-axes-by-last-axis view used by all layers: rows() flattens
    // every axis except the last.
    std::size_t rows() const;
    std::size_t cols() const;

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    double& operator[](std::size_t i) { return data_[i]; }
    double operator[](std::size_t i) const { return data_[i]; }
    double& at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }

    bool has_grad() const { return !grad_.empty(); }
    void alloc_grad();
    void zero_grad();
    std::vector<double>& grad() { return grad_; }
    const std::vector<double>& grad() const { return grad_; }

    void reshape(std::vector<std::size_t> new_shape);
    bool all_finite() const;
    std::string shape_str() const;

private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
    std::vector<double> grad_;
};

/// Named reference to a learnable tensor; the registry currency shared by
/// the optimizer, checkpointing, and gradient checking.
struct ParamRef {
    std::string name;
    Tensor* value = nullptr;
};

}  // namespace riconv::nn
