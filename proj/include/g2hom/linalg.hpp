#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "g2hom/rational.hpp"

namespace g2hom {

using Vec = std::vector<Rational>;

inline Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec operator*(const Rational& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

/// Dense rational matrix with deterministic exact elimination.
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols) {}
  Mat(int rows, int cols, std::initializer_list<Rational> xs) : Mat(rows, cols) {
    if (int(xs.size()) != rows * cols) throw std::invalid_argument("matrix init size");
    size_t k = 0;
    for (const auto& x : xs) a_[k++] = x;
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  static Mat from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(int(rows.size()), int(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
      if (int(rows[i].size()) != m.cols()) throw std::invalid_argument("ragged rows");
      for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Mat from_cols(const std::vector<Vec>& cols) { return from_rows(cols).transposed(); }

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& operator()(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  bool operator==(const Mat& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

  Vec row(int i) const {
    Vec v(c_);
    for (int j = 0; j < c_; ++j) v[j] = (*this)(i, j);
    return v;
  }
  Vec col(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Mat transposed() const {
    Mat t(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Mat operator*(const Mat& o) const {
    if (c_ != o.r_) throw std::invalid_argument("matrix product shape");
    Mat p(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const Rational& x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < o.c_; ++j) p(i, j) += x * o(k, j);
      }
    return p;
  }

  Vec operator*(const Vec& v) const {
    if (int(v.size()) != c_) throw std::invalid_argument("matrix*vector shape");
    Vec r(r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j)
        if ((*this)(i, j) != 0) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  Mat operator+(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix sum shape");
    Mat s(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] + o.a_[k];
    return s;
  }
  Mat operator-(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix diff shape");
    Mat s(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) s.a_[k] = a_[k] - o.a_[k];
    return s;
  }
  Mat operator*(const Rational& c) const {
    Mat s(r_, c_);
    for (size_t k = 0; k < a_.size(); ++k) s.a_[k] = c * a_[k];
    return s;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  Rational trace() const {
    if (r_ != c_) throw std::invalid_argument("trace of non-square");
    Rational t = 0;
    for (int i = 0; i < r_; ++i) t += (*this)(i, i);
    return t;
  }

 private:
  int r_, c_;
  std::vector<Rational> a_;
};

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

// Row reduction with first-nonzero pivoting (no magnitude heuristics, so the
// result is the same on every platform). Returns pivot columns.
inline std::vector<int> rref_in_place(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    Rational inv = 1 / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(Mat m) { return int(rref_in_place(m).size()); }

// Basis of {x : Ax = 0}; one vector per free column, free coordinate set to 1,
// in increasing column order.
inline std::vector<Vec> nullspace(Mat m) {
  std::vector<int> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), Rational(0));
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(int(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Rational det(Mat m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square");
  Rational d = 1;
  for (int col = 0; col < m.cols(); ++col) {
    int p = -1;
    for (int i = col; i < m.rows(); ++i)
      if (m(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != col) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(col, j));
      d = -d;
    }
    d *= m(col, col);
    Rational inv = 1 / m(col, col);
    for (int i = col + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      Rational f = m(i, col) * inv;
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(col, j);
    }
  }
  return d;
}

inline std::optional<Mat> inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square");
  int n = m.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> piv = rref_in_place(aug);
  if (int(piv.size()) != n) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

// One solution of Ax = b, or nullopt if inconsistent.
inline std::optional<Vec> solve(const Mat& a, const Vec& b) {
  if (int(b.size()) != a.rows()) throw std::invalid_argument("solve shape");
  Mat aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<int> piv = rref_in_place(aug);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), Rational(0));
  for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(int(r), a.cols());
  return x;
}

// Coordinates of v in the span of the given basis vectors, or nullopt.
inline std::optional<Vec> coordinates_in(const std::vector<Vec>& basis, const Vec& v) {
  if (basis.empty()) return is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve(Mat::from_cols(basis), v);
}

inline bool symmetric(const Mat& m) {
  if (m.rows() != m.cols()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

// Sylvester criterion, exact.
inline bool positive_definite(const Mat& m) {
  if (!symmetric(m)) return false;
  for (int k = 1; k <= m.rows(); ++k) {
    Mat lead(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) lead(i, j) = m(i, j);
    if (det(lead) <= 0) return false;
  }
  return true;
}

}  // namespace g2hom
