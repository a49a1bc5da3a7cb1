#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qosc {

/// Square dense matrix, row-major.
///
/// Products skip zero entries of the left operand, which keeps the
/// extended-precision verifiers fast on the band-structured ladder
/// matrices without changing the dense semantics.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, T(0)) {}

  static DenseMatrix identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t dim() const { return dim_; }
  T& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

  DenseMatrix adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = conj((*this)(i, j));
    return out;
  }

  DenseMatrix& operator+=(const DenseMatrix& other) {
    check_same(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
  }
  DenseMatrix& operator-=(const DenseMatrix& other) {
    check_same(other);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
  }
  DenseMatrix& operator*=(const T& scalar) {
    for (auto& x : data_) x *= scalar;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(const T& s, DenseMatrix a) { return a *= s; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    a.check_same(b);
    const std::size_t d = a.dim_;
    DenseMatrix out(d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < d; ++j) {
          const T& bkj = b(k, j);
          if (bkj == T(0)) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  /// Commutator [a, b] = ab - ba.
  friend DenseMatrix commutator(const DenseMatrix& a, const DenseMatrix& b) { return a * b - b * a; }

  /// Largest |entry| over rows and columns in [0, limit).
  template <class Abs>
  auto max_abs(std::size_t limit, Abs abs_fn) const {
    using R = decltype(abs_fn(data_[0]));
    R best = 0;
    if (limit > dim_) limit = dim_;
    for (std::size_t i = 0; i < limit; ++i)
      for (std::size_t j = 0; j < limit; ++j) {
        R v = abs_fn((*this)(i, j));
        if (v > best) best = v;
      }
    return best;
  }

 private:
  void check_same(const DenseMatrix& other) const {
    if (other.dim_ != dim_) throw std::invalid_argument("DenseMatrix: dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<T> data_;
};

}  // namespace qosc
