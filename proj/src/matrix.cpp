#include "fpg/matrix.hpp"

namespace fpg {

namespace {
// reduced row echelon form in place, returns pivot columns
std::vector<int> rref(RMat& m) {
  std::vector<int> piv;
  int row = 0;
  for (int c = 0; c < m.cols && row < m.rows; ++c) {
    int p = -1;
    for (int i = row; i < m.rows; ++i)
      if (sgn(m(i, c)) != 0) { p = i; break; }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(row, j));
    Rat ip = 1 / m(row, c);
    for (int j = c; j < m.cols; ++j) m(row, j) *= ip;
    for (int i = 0; i < m.rows; ++i) {
      if (i == row || sgn(m(i, c)) == 0) continue;
      Rat f = m(i, c);
      for (int j = c; j < m.cols; ++j)
        if (sgn(m(row, j)) != 0) m(i, j) -= f * m(row, j);
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}
}  // namespace

int rank(const RMat& x) {
  RMat m = x;
  return static_cast<int>(rref(m).size());
}

std::vector<std::vector<Rat>> nullspace(const RMat& x) {
  RMat m = x;
  auto piv = rref(m);
  std::vector<bool> is_piv(x.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Rat>> out;
  for (int f = 0; f < x.cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Rat> v(x.cols, Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(static_cast<int>(r), f);
    out.push_back(v);
  }
  return out;
}

RMat hcat(const RMat& x, const RMat& y) {
  if (x.rows != y.rows) throw std::invalid_argument("row mismatch");
  RMat z(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) z(i, j) = x(i, j);
    for (int j = 0; j < y.cols; ++j) z(i, x.cols + j) = y(i, j);
  }
  return z;
}

bool in_column_span(const RMat& span, const RMat& v) { return rank(hcat(span, v)) == rank(span); }

}  // namespace fpg
