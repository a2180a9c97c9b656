#pragma once

#include <vector>

#include <Eigen/Core>

#include "fmlab/rational.hpp"
#include "fmlab/rot_scalar.hpp"

namespace fmlab {

using Index = Eigen::Index;

template <class T>
using MatrixX = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using VectorX = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using Mat = MatrixX<Rational>;
using Vec = VectorX<Rational>;
using RotMat = MatrixX<RotScalar>;

template <class T>
MatrixX<T> zeros(Index rows, Index cols) {
  return MatrixX<T>::Constant(rows, cols, T(0));
}

template <class T>
MatrixX<T> identity(Index n) {
  MatrixX<T> m = zeros<T>(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = T(1);
  return m;
}

template <class T>
VectorX<T> unit_vector(Index n, Index i) {
  VectorX<T> v = VectorX<T>::Constant(n, T(0));
  v(i) = T(1);
  return v;
}

template <class T>
bool is_zero_matrix(const MatrixX<T>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!exactly_zero(m(i, j))) return false;
  return true;
}

template <class T>
bool same(const MatrixX<T>& a, const MatrixX<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!(a(i, j) == b(i, j))) return false;
  return true;
}

// Product that skips zero entries of the left factor; operators here are
// mostly sparse and an exact multiply is not free.
template <class T>
MatrixX<T> mul(const MatrixX<T>& a, const MatrixX<T>& b) {
  MatrixX<T> c = zeros<T>(a.rows(), b.cols());
  for (Index k = 0; k < a.cols(); ++k) {
    for (Index i = 0; i < a.rows(); ++i) {
      const T& x = a(i, k);
      if (exactly_zero(x)) continue;
      for (Index j = 0; j < b.cols(); ++j) {
        const T& y = b(k, j);
        if (exactly_zero(y)) continue;
        c(i, j) += x * y;
      }
    }
  }
  return c;
}

template <class T>
VectorX<T> mul(const MatrixX<T>& a, const VectorX<T>& v) {
  VectorX<T> r = VectorX<T>::Constant(a.rows(), T(0));
  for (Index k = 0; k < a.cols(); ++k) {
    if (exactly_zero(v(k))) continue;
    for (Index i = 0; i < a.rows(); ++i)
      if (!exactly_zero(a(i, k))) r(i) += a(i, k) * v(k);
  }
  return r;
}

template <class T>
MatrixX<T> kron(const MatrixX<T>& a, const MatrixX<T>& b) {
  MatrixX<T> r = zeros<T>(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (exactly_zero(a(i, j))) continue;
      for (Index k = 0; k < b.rows(); ++k)
        for (Index l = 0; l < b.cols(); ++l)
          if (!exactly_zero(b(k, l))) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

template <class T>
MatrixX<T> block_diag(const std::vector<MatrixX<T>>& blocks) {
  Index r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  MatrixX<T> m = zeros<T>(r, c);
  Index i = 0, j = 0;
  for (const auto& b : blocks) {
    m.block(i, j, b.rows(), b.cols()) = b;
    i += b.rows();
    j += b.cols();
  }
  return m;
}

template <class T>
MatrixX<T> hstack(const std::vector<MatrixX<T>>& parts, Index rows) {
  Index c = 0;
  for (const auto& p : parts) c += p.cols();
  MatrixX<T> m = zeros<T>(rows, c);
  Index j = 0;
  for (const auto& p : parts) {
    m.block(0, j, rows, p.cols()) = p;
    j += p.cols();
  }
  return m;
}

template <class T>
MatrixX<T> vstack(const std::vector<MatrixX<T>>& parts, Index cols) {
  Index r = 0;
  for (const auto& p : parts) r += p.rows();
  MatrixX<T> m = zeros<T>(r, cols);
  Index i = 0;
  for (const auto& p : parts) {
    m.block(i, 0, p.rows(), cols) = p;
    i += p.rows();
  }
  return m;
}

// Row-major flattening: entry (i, j) goes to i * cols + j.
template <class T>
VectorX<T> flatten(const MatrixX<T>& m) {
  VectorX<T> v(m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v(i * m.cols() + j) = m(i, j);
  return v;
}

template <class T>
MatrixX<T> unflatten(const VectorX<T>& v, Index rows, Index cols) {
  MatrixX<T> m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = v(i * cols + j);
  return m;
}

// Linear combination sum_k coef[k] * terms[k], skipping zero coefficients.
template <class T>
MatrixX<T> combine(const VectorX<T>& coef, const std::vector<MatrixX<T>>& terms, Index rows, Index cols) {
  MatrixX<T> r = zeros<T>(rows, cols);
  for (Index k = 0; k < coef.size(); ++k) {
    if (exactly_zero(coef(k))) continue;
    const MatrixX<T>& t = terms[static_cast<size_t>(k)];
    for (Index j = 0; j < cols; ++j)
      for (Index i = 0; i < rows; ++i)
        if (!exactly_zero(t(i, j))) r(i, j) += coef(k) * t(i, j);
  }
  return r;
}

inline RotMat lift(const Mat& m) {
  RotMat r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = RotScalar(m(i, j));
  return r;
}

inline Mat evaluate(const RotMat& m, const Rational& c, const Rational& s) {
  Mat r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eval(c, s);
  return r;
}

}  // namespace fmlab
