#pragma once

#include <cstddef>
#include <vector>

namespace aqg {

/// Dense row-major matrix.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const S& fill = S(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<S> row(std::size_t i) const {
    return std::vector<S>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<S> col(std::size_t j) const {
    std::vector<S> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend std::vector<S> operator*(const Matrix& a, const std::vector<S>& v) {
    std::vector<S> out(a.rows_, S(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (!is_zero(v[k])) out[i] += a(i, k) * v[k];
      }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

/// Dense cube t(i, j, k) for structure constants.
template <class S>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(std::size_t n, const S& fill = S(0)) : n_(n), data_(n * n * n, fill) {}

  std::size_t extent() const { return n_; }

  S& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n_ + j) * n_ + k]; }
  const S& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n_ + j) * n_ + k]; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<S> data_;
};

template <class S>
std::vector<S> zeros(std::size_t n) {
  return std::vector<S>(n, S(0));
}

template <class S>
std::vector<S> unit_vector(std::size_t n, std::size_t i) {
  std::vector<S> v(n, S(0));
  v[i] = S(1);
  return v;
}

template <class S>
S dot(const std::vector<S>& a, const std::vector<S>& b) {
  S acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i]) && !is_zero(b[i])) acc += a[i] * b[i];
  }
  return acc;
}

template <class S>
std::vector<S> add(std::vector<S> a, const std::vector<S>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class S>
std::vector<S> scale(std::vector<S> a, const S& c) {
  for (auto& x : a) x = x * c;
  return a;
}

template <class S>
bool all_zero(const std::vector<S>& v) {
  for (const auto& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

}  // namespace aqg
