#pragma once

#include <stdexcept>
#include <vector>

#include "bruhat/rational.hpp"

namespace bruhat {

template <class R>
class Mat {
 public:
  Mat() : n_(0), m_(0) {}
  Mat(int n, int m) : n_(n), m_(m), a_((size_t)n * m, R(Rat(0))) {}
  static Mat identity(int n) {
    Mat I(n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = R(Rat(1));
    return I;
  }

  int rows() const { return n_; }
  int cols() const { return m_; }
  R& at(int i, int j) { return a_[(size_t)i * m_ + j]; }
  const R& at(int i, int j) const { return a_[(size_t)i * m_ + j]; }

  Mat operator*(const Mat& o) const {
    Mat r(n_, o.m_);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < m_; ++k) {
        const R& v = at(i, k);
        if (v == R(Rat(0))) continue;
        for (int j = 0; j < o.m_; ++j) r.at(i, j) = r.at(i, j) + v * o.at(k, j);
      }
    return r;
  }
  Mat operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] + o.a_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i] - o.a_[i];
    return r;
  }
  Mat operator*(const R& c) const {
    Mat r = *this;
    for (auto& v : r.a_) v = v * c;
    return r;
  }
  bool operator==(const Mat& o) const { return n_ == o.n_ && m_ == o.m_ && a_ == o.a_; }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!(v == R(Rat(0)))) return false;
    return true;
  }

  Mat transpose() const {
    Mat r(m_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < m_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // Gauss-Jordan inverse; R must be a field.
  Mat inverse() const {
    if (n_ != m_) throw std::domain_error("Mat: inverse of non-square");
    Mat A = *this, I = identity(n_);
    for (int c = 0; c < n_; ++c) {
      int p = -1;
      for (int r = c; r < n_; ++r)
        if (!(A.at(r, c) == R(Rat(0)))) {
          p = r;
          break;
        }
      if (p < 0) throw std::domain_error("Mat: singular");
      if (p != c) {
        for (int j = 0; j < n_; ++j) {
          std::swap(A.at(p, j), A.at(c, j));
          std::swap(I.at(p, j), I.at(c, j));
        }
      }
      R piv = A.at(c, c);
      for (int j = 0; j < n_; ++j) {
        A.at(c, j) = A.at(c, j) / piv;
        I.at(c, j) = I.at(c, j) / piv;
      }
      for (int r = 0; r < n_; ++r) {
        if (r == c || A.at(r, c) == R(Rat(0))) continue;
        R f = A.at(r, c);
        for (int j = 0; j < n_; ++j) {
          A.at(r, j) = A.at(r, j) - f * A.at(c, j);
          I.at(r, j) = I.at(r, j) - f * I.at(c, j);
        }
      }
    }
    return I;
  }

  // Convert entrywise via R2(R) or explicit functor.
  template <class R2, class F>
  Mat<R2> map(F&& f) const {
    Mat<R2> r(n_, m_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < m_; ++j) r.at(i, j) = f(at(i, j));
    return r;
  }

 private:
  int n_, m_;
  std::vector<R> a_;
};

using MatQ = Mat<Rat>;

// Rank over a field via Gaussian elimination (destructive copy).
template <class R>
int mat_rank(Mat<R> A) {
  int n = A.rows(), m = A.cols(), r = 0;
  for (int c = 0; c < m && r < n; ++c) {
    int p = -1;
    for (int i = r; i < n; ++i)
      if (!(A.at(i, c) == R(Rat(0)))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < m; ++j) std::swap(A.at(p, j), A.at(r, j));
    R piv = A.at(r, c);
    for (int i = r + 1; i < n; ++i) {
      if (A.at(i, c) == R(Rat(0))) continue;
      R f = A.at(i, c) / piv;
      for (int j = c; j < m; ++j) A.at(i, j) = A.at(i, j) - f * A.at(r, j);
    }
    ++r;
  }
  return r;
}

// det of a k x k submatrix (given rows/cols) over any commutative ring,
// by dynamic programming over column subsets (no division).
template <class R>
R submatrix_det(const Mat<R>& M, const std::vector<int>& rows, const std::vector<int>& cols) {
  int k = (int)rows.size();
  if (k == 0) return R(Rat(1));
  if (k > 20) throw std::domain_error("submatrix_det: too large");
  // dp over subsets of columns: dp[S] = det of rows 0..|S|-1 vs columns S
  std::vector<R> dp(1u << k, R(Rat(0)));
  dp[0] = R(Rat(1));
  for (unsigned S = 1; S < (1u << k); ++S) {
    int r = __builtin_popcount(S) - 1;  // expand along last row of the block
    R acc = R(Rat(0));
    int pos = 0;
    for (int j = 0; j < k; ++j) {
      if (!(S >> j & 1)) continue;
      const R& entry = M.at(rows[r], cols[j]);
      if (!(entry == R(Rat(0)))) {
        R sub = dp[S & ~(1u << j)];
        if ((r + pos) % 2 == 0)
          acc = acc + entry * sub;
        else
          acc = acc - entry * sub;
      }
      ++pos;
    }
    dp[S] = acc;
  }
  return dp[(1u << k) - 1];
}

}  // namespace bruhat
