#include "riconv/tensor.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace riconv::nn {

Tensor::Tensor(std::vector<std::size_t> shape) : shape_(std::move(shape)) {
    std::size_t n = 1;
    for (std::size_t e : shape_) n *= e;
    data_.assign(n, 0.0);
}

Tensor Tensor::scalar(double v) {
    Tensor t({1});
    t.data_[0] = v;
    return t;
}

Tensor Tensor::from_rows(std::size_t rows, std::size_t cols, std::vector<double> values) {
    if (values.size() != rows * cols) {
        throw std::invalid_argument("Tensor::from_rows: value count != rows*cols");
    }
    Tensor t;
    t.shape_ = {rows, cols};
    t.data_ = std::move(values);
    return t;
}

std::size_t Tensor::rows() const {
    if (shape_.empty()) return 0;
    std::size_t r = 1;
    for (std::size_t i = 0; i + 1 < shape_.size(); ++i) r *= shape_[i];
    return shape_.size() == 1 ? 1 : r;
}

std::size_t Tensor::cols() const {
    return shape_.empty() ? 0 : shape_.back();
}

void Tensor::alloc_grad() {
    grad_.assign(data_.size(), 0.0);
}

void Tensor::zero_grad() {
    if (!grad_.empty()) grad_.assign(data_.size(), 0.0);
}

void Tensor::reshape(std::vector<std::size_t> new_shape) {
    std::size_t n = 1;
    for (std::size_t e : new_shape) n *= e;
    if (n != data_.size()) {
        throw std::invalid_argument("Tensor::reshape: element count mismatch");
    }
    shape_ = std::move(new_shape);
}

bool Tensor::all_finite() const {
    for (double v : data_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

std::string Tensor::shape_str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < shape_.size(); ++i) {
        if (i) os << ", ";
        os << shape_[i];
    }
    os << "]";
    return os.str();
}

}  // namespace riconv::nn
