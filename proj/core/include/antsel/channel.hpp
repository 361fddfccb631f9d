#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace antsel {

/// Dense row-major matrix of squared channel magnitudes. Rows index BS antennas.
class GainMatrix {
 public:
  GainMatrix() = default;
  GainMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  GainMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("GainMatrix: size mismatch");
  }
  GainMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> values() const { return data_; }

  bool operator==(const GainMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// One fading draw: h is N x M (BS to UE1), g is N x K (BS to UE2).
struct ChannelRealization {
  GainMatrix h;
  GainMatrix g;

  std::size_t n_bs() const { return h.rows(); }
  std::size_t n_ue1() const { return h.cols(); }
  std::size_t n_ue2() const { return g.cols(); }

  /// Throws std::invalid_argument when h and g disagree on N or are empty.
  void check_consistent() const;

  bool operator==(const ChannelRealization&) const = default;
};

}  // namespace antsel
