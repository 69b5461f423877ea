#ifndef WITT_LINALG_HPP
#define WITT_LINALG_HPP

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "witt/rational.hpp"

namespace witt {

template <typename S>
using MatrixX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using VectorX = Eigen::Matrix<S, Eigen::Dynamic, 1>;
using MatrixQ = MatrixX<Rational>;
using VectorQ = VectorX<Rational>;
using Eigen::Index;

// Eigen's decompositions pick pivots by magnitude and compare against a
// threshold; over an exact field we only need "first nonzero".

template <typename S>
struct Rref {
  MatrixX<S> matrix;
  std::vector<Index> pivots;  // pivot column of each nonzero row
};

template <typename Derived>
Rref<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  MatrixX<S> a = m;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row) a.row(p).swap(a.row(row));
    S inv = S(1) / a(row, col);
    for (Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Index r = 0; r < a.rows(); ++r) {
      if (r == row || is_zero(a(r, col))) continue;
      S f = a(r, col);
      for (Index j = col; j < a.cols(); ++j)
        if (!is_zero(a(row, j))) a(r, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

template <typename Derived>
Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  MatrixX<S> a = m;
  Index rank = 0;
  for (Index col = 0; col < a.cols() && rank < a.rows(); ++col) {
    Index p = rank;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != rank) a.row(p).swap(a.row(rank));
    S inv = S(1) / a(rank, col);
    for (Index r = rank + 1; r < a.rows(); ++r) {
      if (is_zero(a(r, col))) continue;
      S f = a(r, col) * inv;
      for (Index j = col; j < a.cols(); ++j)
        if (!is_zero(a(rank, j))) a(r, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  MatrixX<S> a = m;
  S det(1);
  const Index n = a.rows();
  for (Index col = 0; col < n; ++col) {
    Index p = col;
    while (p < n && is_zero(a(p, col))) ++p;
    if (p == n) return S(0);
    if (p != col) {
      a.row(p).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    S inv = S(1) / a(col, col);
    for (Index r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      S f = a(r, col) * inv;
      for (Index j = col; j < n; ++j)
        if (!is_zero(a(col, j))) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

/// Columns form a basis of {v : m v = 0}.
template <typename Derived>
MatrixX<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  Rref<S> r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatrixX<S> k = MatrixX<S>::Zero(m.cols(), m.cols() - static_cast<Index>(r.pivots.size()));
  Index out = 0;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    k(free, out) = S(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      k(r.pivots[i], out) = -r.matrix(static_cast<Index>(i), free);
    ++out;
  }
  return k;
}

/// Some x with m x = b, if one exists.
template <typename DA, typename DB>
std::optional<VectorX<typename DA::Scalar>> solve_exact(const Eigen::MatrixBase<DA>& m,
                                                        const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  if (m.cols() == 0) {
    for (Index r = 0; r < b.rows(); ++r)
      if (!is_zero(b(r, 0))) return std::nullopt;
    return VectorX<S>(0);
  }
  MatrixX<S> aug(m.rows(), m.cols() + 1);
  aug << m, b;
  Rref<S> r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
  VectorX<S> x = VectorX<S>::Zero(m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    x(r.pivots[i]) = r.matrix(static_cast<Index>(i), m.cols());
  return x;
}

/// True when every column of b lies in the column span of a.
template <typename DA, typename DB>
bool in_column_span(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
  using S = typename DA::Scalar;
  if (b.cols() == 0) return true;
  if (a.cols() == 0) return exact_rank(b) == 0;
  MatrixX<S> both(a.rows(), a.cols() + b.cols());
  both << a, b;
  return exact_rank(both) == exact_rank(a);
}

}  // namespace witt

#endif
