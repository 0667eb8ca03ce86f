#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "aqg/core/tensor.hpp"
#include "aqg/scalars/scalar.hpp"

namespace aqg {

/// Solves a x = b for square a with fraction-free (Bareiss) forward
/// elimination followed by back substitution. The pivot in each column is
/// the first nonzero entry in row order. Returns nullopt when a is singular.
template <Scalar S>
std::optional<Matrix<S>> solve(const Matrix<S>& a, const Matrix<S>& b) {
  const std::size_t n = a.rows();
  const std::size_t m = b.cols();
  Matrix<S> w(n, n + m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);
    for (std::size_t j = 0; j < m; ++j) w(i, n + j) = b(i, j);
  }
  S prev(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(w(pivot, k))) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != k) {
      for (std::size_t j = 0; j < n + m; ++j) std::swap(w(pivot, j), w(k, j));
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n + m; ++j) {
        w(i, j) = (w(i, j) * w(k, k) - w(i, k) * w(k, j)) / prev;
      }
      w(i, k) = S(0);
    }
    prev = w(k, k);
  }
  Matrix<S> x(n, m);
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t i = n; i-- > 0;) {
      S acc = w(i, n + c);
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!is_zero(w(i, j))) acc -= w(i, j) * x(j, c);
      }
      x(i, c) = acc / w(i, i);
    }
  }
  return x;
}

template <Scalar S>
std::optional<std::vector<S>> solve(const Matrix<S>& a, const std::vector<S>& b) {
  Matrix<S> rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  auto x = solve(a, rhs);
  if (!x) return std::nullopt;
  return x->col(0);
}

template <Scalar S>
std::optional<Matrix<S>> inverse(const Matrix<S>& a) {
  return solve(a, Matrix<S>::identity(a.rows()));
}

/// Reduced row echelon form; returns the pivot columns.
template <Scalar S>
std::vector<std::size_t> row_reduce(Matrix<S>& w, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < w.rows(); ++c) {
    std::size_t p = r;
    while (p < w.rows() && is_zero(w(p, c))) ++p;
    if (p == w.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w(p, j), w(r, j));
    }
    const S inv = S(1) / w(r, c);
    for (std::size_t j = 0; j < w.cols(); ++j) w(r, j) = w(r, j) * inv;
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i == r || is_zero(w(i, c))) continue;
      const S f = w(i, c);
      for (std::size_t j = 0; j < w.cols(); ++j) {
        if (!is_zero(w(r, j))) w(i, j) -= f * w(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Basis of {x : a x = 0}, one vector per free column with that entry set to 1.
template <Scalar S>
std::vector<std::vector<S>> nullspace(Matrix<S> a) {
  const auto pivots = row_reduce(a, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<S>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<S> v(a.cols(), S(0));
    v[free] = S(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <Scalar S>
std::size_t rank(Matrix<S> a) {
  return row_reduce(a, a.cols()).size();
}

template <class S>
struct LinearSolution {
  std::vector<S> solution;
  bool unique = false;
};

/// General (possibly rectangular) system a x = b. Returns nullopt when
/// inconsistent; otherwise the solution with free variables set to zero.
template <Scalar S>
std::optional<LinearSolution<S>> solve_general(const Matrix<S>& a, const std::vector<S>& b) {
  Matrix<S> w(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) w(i, j) = a(i, j);
    w(i, a.cols()) = b[i];
  }
  const auto pivots = row_reduce(w, a.cols());
  for (std::size_t i = pivots.size(); i < w.rows(); ++i) {
    if (!is_zero(w(i, a.cols()))) return std::nullopt;
  }
  LinearSolution<S> out{std::vector<S>(a.cols(), S(0)), pivots.size() == a.cols()};
  for (std::size_t r = 0; r < pivots.size(); ++r) out.solution[pivots[r]] = w(r, a.cols());
  return out;
}

}  // namespace aqg
