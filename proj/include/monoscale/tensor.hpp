#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "monoscale/common.hpp"

namespace monoscale {

using MatrixRM =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapMat = Eigen::Map<MatrixRM>;
using ConstMapMat = Eigen::Map<const MatrixRM>;
using MapVec = Eigen::Map<Eigen::VectorXd>;
using ConstMapVec = Eigen::Map<const Eigen::VectorXd>;

// Dense row-major double tensor. Shapes follow the (rows, cols, channels)
// convention used throughout: images are (H, W, C), batches (B, H, W, C).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::int64_t> shape) { resize(std::move(shape)); }
  Tensor(std::initializer_list<std::int64_t> shape)
      : Tensor(std::vector<std::int64_t>(shape)) {}

  void resize(std::vector<std::int64_t> shape) {
    shape_ = std::move(shape);
    std::int64_t n = 1;
    for (auto d : shape_) n *= d;
    data_.assign(static_cast<std::size_t>(n), 0.0);
  }

  const std::vector<std::int64_t>& shape() const { return shape_; }
  std::int64_t dim(std::size_t i) const { return shape_.at(i); }
  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator[](std::int64_t i) { return data_[static_cast<std::size_t>(i)]; }
  double operator[](std::int64_t i) const { return data_[static_cast<std::size_t>(i)]; }

  // Flat view as a rows x cols row-major matrix; rows*cols must equal size().
  MapMat as_matrix(std::int64_t rows, std::int64_t cols) {
    return MapMat(data_.data(), rows, cols);
  }
  ConstMapMat as_matrix(std::int64_t rows, std::int64_t cols) const {
    return ConstMapMat(data_.data(), rows, cols);
  }
  MapVec as_vector() { return MapVec(data_.data(), size()); }
  ConstMapVec as_vector() const { return ConstMapVec(data_.data(), size()); }

  void set_zero() { std::fill(data_.begin(), data_.end(), 0.0); }

  bool all_finite() const { return as_vector().allFinite(); }

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }

  static std::string shape_str(const std::vector<std::int64_t>& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(s[i]);
    }
    return out + ")";
  }

 private:
  std::vector<std::int64_t> shape_;
  std::vector<double> data_;
};

}  // namespace monoscale
