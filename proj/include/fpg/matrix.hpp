#pragma once

#include "fpg/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace fpg {

template <class S>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<S> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, S(0)) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
  S& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const S& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  int size() const { return rows; }
};

using RMat = Mat<Rat>;

template <class S> Mat<S> operator*(const Mat<S>& x, const Mat<S>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch");
  Mat<S> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const S& xik = x(i, k);
      if (is_zero_exact(xik)) continue;
      for (int j = 0; j < y.cols; ++j)
        if (!is_zero_exact(y(k, j))) z(i, j) += xik * y(k, j);
    }
  return z;
}
template <class S> Mat<S> operator+(const Mat<S>& x, const Mat<S>& y) {
  Mat<S> z = x;
  for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] += y.a[k];
  return z;
}
template <class S> Mat<S> operator-(const Mat<S>& x, const Mat<S>& y) {
  Mat<S> z = x;
  for (std::size_t k = 0; k < z.a.size(); ++k) z.a[k] -= y.a[k];
  return z;
}
template <class S> Mat<S> scale(const Mat<S>& x, const S& s) {
  Mat<S> z = x;
  for (auto& e : z.a) e *= s;
  return z;
}

template <class S> bool operator==(const Mat<S>& x, const Mat<S>& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (std::size_t k = 0; k < x.a.size(); ++k)
    if (!(x.a[k] == y.a[k])) return false;
  return true;
}

template <class S> Mat<S> transpose(const Mat<S>& x) {
  Mat<S> z(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) z(j, i) = x(i, j);
  return z;
}

// Gauss-Jordan, pivots chosen by nonzero base value
template <class S> Mat<S> inverse(const Mat<S>& x) {
  int n = x.rows;
  Mat<S> m = x, r = Mat<S>::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (!is_zero(m(i, c))) { p = i; break; }
    if (p < 0) throw std::domain_error("singular matrix");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(r(p, j), r(c, j));
      }
    S ip = inv(m(c, c));
    for (int j = 0; j < n; ++j) {
      m(c, j) *= ip;
      r(c, j) *= ip;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || is_zero_exact(m(i, c))) continue;
      S f = m(i, c);
      for (int j = 0; j < n; ++j) {
        if (!is_zero_exact(m(c, j))) m(i, j) -= f * m(c, j);
        if (!is_zero_exact(r(c, j))) r(i, j) -= f * r(c, j);
      }
    }
  }
  return r;
}

// minor on rows rs x cols cs by Laplace expansion over column subsets;
// division free, so valid for jets even when the base value vanishes
template <class S> S minor_det(const Mat<S>& x, const std::vector<int>& rs, const std::vector<int>& cs) {
  int k = static_cast<int>(rs.size());
  if (k == 0) return S(1);
  int full = 1 << k;
  std::vector<S> dp(full, S(0));
  dp[0] = S(1);
  for (int mask = 0; mask < full; ++mask) {
    if (is_zero_exact(dp[mask])) continue;
    int row = __builtin_popcount(mask);
    if (row >= k) continue;
    int above = 0;
    for (int j = k - 1; j >= 0; --j) {
      if (mask & (1 << j)) { ++above; continue; }
      const S& e = x(rs[row], cs[j]);
      if (is_zero_exact(e)) continue;
      // sign: number of chosen columns to the right of j
      S t = dp[mask] * e;
      if (above & 1) dp[mask | (1 << j)] -= t;
      else dp[mask | (1 << j)] += t;
    }
  }
  return dp[full - 1];
}

template <class S> S det(const Mat<S>& x) {
  std::vector<int> idx(x.rows);
  for (int i = 0; i < x.rows; ++i) idx[i] = i;
  return minor_det(x, idx, idx);
}

template <class S> Mat<S> diag(const std::vector<S>& d) {
  Mat<S> m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

template <class S> Mat<Rat> base_mat(const Mat<S>& x) {
  Mat<Rat> m(x.rows, x.cols);
  for (std::size_t k = 0; k < x.a.size(); ++k) m.a[k] = base(x.a[k]);
  return m;
}
template <class S> Mat<S> lift(const Mat<Rat>& x) {
  Mat<S> m(x.rows, x.cols);
  for (std::size_t k = 0; k < x.a.size(); ++k) m.a[k] = S(x.a[k]);
  return m;
}

template <class S> bool is_upper(const Mat<S>& x) {
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < i; ++j)
      if (!is_zero_exact(x(i, j))) return false;
  return true;
}
template <class S> bool is_lower(const Mat<S>& x) { return is_upper(transpose(x)); }
template <class S> bool is_unipotent_upper(const Mat<S>& x) {
  if (!is_upper(x)) return false;
  for (int i = 0; i < x.rows; ++i)
    if (!(x(i, i) == S(1))) return false;
  return true;
}
template <class S> bool is_unipotent_lower(const Mat<S>& x) { return is_unipotent_upper(transpose(x)); }
template <class S> bool is_diagonal(const Mat<S>& x) { return is_upper(x) && is_lower(x); }

// exact rational linear algebra
int rank(const RMat& x);
std::vector<std::vector<Rat>> nullspace(const RMat& x);  // basis of {v : x v = 0}
bool in_column_span(const RMat& span, const RMat& v);
RMat hcat(const RMat& x, const RMat& y);

}  // namespace fpg
