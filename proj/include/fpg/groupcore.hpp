#pragma once

#include "fpg/matrix.hpp"
#include "fpg/rootdata.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpg {

struct NotInBigCell : std::domain_error {
  int alpha;  // 0-based index of the first vanishing principal minor
  explicit NotInBigCell(int a)
      : std::domain_error("not in B_-B: principal minor " + std::to_string(a + 1) + " vanishes"), alpha(a) {}
};

struct CellError : std::domain_error {
  using std::domain_error::domain_error;
};

// x_{+alpha_i}(z) or x_{-alpha_i}(z) in SL(r+1)
template <class S> Mat<S> one_param(int rank, bool positive, int i, const S& z) {
  Mat<S> m = Mat<S>::identity(rank + 1);
  if (positive) m(i, i + 1) = z;
  else m(i + 1, i) = z;
  return m;
}

// alpha_i^vee(z) = diag(.., z, 1/z, ..)
template <class S> Mat<S> coroot(int rank, int i, const S& z) {
  Mat<S> m = Mat<S>::identity(rank + 1);
  m(i, i) = z;
  m(i + 1, i + 1) = inv(z);
  return m;
}

template <class S = Rat> Mat<S> sbar(int rank, int i) {
  Mat<S> m = Mat<S>::identity(rank + 1);
  m(i, i) = S(0);
  m(i + 1, i + 1) = S(0);
  m(i, i + 1) = S(-1);
  m(i + 1, i) = S(1);
  return m;
}

RMat wbar_word(int rank, const std::vector<int>& word);
RMat wbar(const WeylElt& w);
RMat sbar_product(int rank, const std::vector<int>& word);  // same as wbar_word, any word

// x_alpha(z) sbar_alpha: a Bott-Samelson factor
template <class S> Mat<S> bs_factor(int rank, int i, const S& z) {
  return one_param<S>(rank, true, i, z) * lift<S>(sbar(rank, i));
}

bool sl2_identity_check(int rank, int i, const Rat& z);

// Delta^{omega_k}: upper-left (k+1)x(k+1) minor, k 0-based
template <class S> S principal_minor(int k, const Mat<S>& g) {
  std::vector<int> idx(k + 1);
  for (int i = 0; i <= k; ++i) idx[i] = i;
  return minor_det(g, idx, idx);
}

RMat generalized_minor_arg(const WeylElt& u, const WeylElt& v, const RMat& g);
Rat generalized_minor(const WeylElt& u, const WeylElt& v, int alpha, const RMat& g);

// torus element by values on fundamental weights tau_k = d_0...d_k
struct TorusElt {
  std::vector<Rat> vals;
  TorusElt() = default;
  explicit TorusElt(std::vector<Rat> v);
  static TorusElt identity(int rank) { return TorusElt(std::vector<Rat>(rank, Rat(1))); }
  static TorusElt from_diag(const RMat& d);
  static TorusElt from_diag_entries(const std::vector<Rat>& d);
  int rank() const { return static_cast<int>(vals.size()); }
  RMat to_diag() const;
  std::vector<Rat> diag_entries() const;
  Rat character(const IVec& lambda) const;  // t^lambda
  TorusElt inverse() const;
  friend bool operator==(const TorusElt& a, const TorusElt& b) { return a.vals == b.vals; }
};

TorusElt operator*(const TorusElt& a, const TorusElt& b);
TorusElt torus_pow(const TorusElt& a, long e);
TorusElt torus_conjugate(const TorusElt& t, const WeylElt& w);  // t^w = wdot^{-1} t wdot
TorusElt coroot_torus(int rank, int i, const Rat& z);

template <class S>
struct Gauss {
  Mat<S> lower, upper;  // unipotent
  std::vector<S> d;     // diagonal entries
};

// g = [g]_- [g]_0 [g]_+ ; pivots decided on base values
template <class S> Gauss<S> gauss_decompose(const Mat<S>& g) {
  int n = g.rows;
  Mat<S> u = g;
  Mat<S> L = Mat<S>::identity(n);
  for (int c = 0; c < n; ++c) {
    if (is_zero(u(c, c))) throw NotInBigCell(c);
    S ip = inv(u(c, c));
    for (int i = c + 1; i < n; ++i) {
      if (is_zero_exact(u(i, c))) continue;
      S f = u(i, c) * ip;
      L(i, c) = f;
      for (int j = c; j < n; ++j)
        if (!is_zero_exact(u(c, j))) u(i, j) -= f * u(c, j);
      u(i, c) = S(0);
    }
  }
  Gauss<S> out;
  out.d.resize(n);
  for (int i = 0; i < n; ++i) out.d[i] = u(i, i);
  Mat<S> U = Mat<S>::identity(n);
  for (int i = 0; i < n; ++i) {
    S ip = inv(u(i, i));
    for (int j = i + 1; j < n; ++j) U(i, j) = u(i, j) * ip;
  }
  out.lower = L;
  out.upper = U;
  return out;
}

template <class S> bool in_big_cell(const Mat<S>& g) {
  for (int k = 0; k + 1 < g.rows; ++k)
    if (is_zero(principal_minor(k, g))) return false;
  return true;
}

// [g]_{>=0} = [g]_0 [g]_+
template <class S> Mat<S> gauss_geq0(const Mat<S>& g) {
  auto G = gauss_decompose(g);
  return diag(G.d) * G.upper;
}
template <class S> Mat<S> gauss_leq0(const Mat<S>& g) {
  auto G = gauss_decompose(g);
  return G.lower * diag(G.d);
}

WeylElt bruhat_cell(const RMat& g);      // g in B u B
WeylElt bruhat_cell_neg(const RMat& g);  // g in B_- v B_-

template <class S> WeylElt bruhat_cell_of(const Mat<S>& g) { return bruhat_cell(base_mat(g)); }

// c in C_{udot} = N udot cap udot N_-, for a representative udot
template <class S>
struct PosFactor {
  Mat<S> c, b;
};
template <class S>
struct NegFactor {
  Mat<S> bm, c;
};

// g = c b with c = udot [udot^{-1} g]_-, for a fixed representative
template <class S> PosFactor<S> factor_pos_rep(const Mat<S>& g, const RMat& udot, const RMat& udot_inv) {
  Mat<S> x = lift<S>(udot_inv) * g;
  auto G = gauss_decompose(x);
  PosFactor<S> f;
  f.c = lift<S>(udot) * G.lower;
  f.b = diag(G.d) * G.upper;
  return f;
}

// g = b_- c with c = [g vdot^{-1}]_+ vdot
template <class S> NegFactor<S> factor_neg_rep(const Mat<S>& g, const RMat& vdot, const RMat& vdot_inv) {
  Mat<S> x = g * lift<S>(vdot_inv);
  auto G = gauss_decompose(x);
  NegFactor<S> f;
  f.bm = G.lower * diag(G.d);
  f.c = G.upper * lift<S>(vdot);
  return f;
}

struct BruhatFactorization {
  WeylElt u;
  RMat c, b;
};
struct NegBruhatFactorization {
  RMat bm;
  WeylElt v;
  RMat c;
};

BruhatFactorization bruhat_factor_pos(const RMat& g);
NegBruhatFactorization bruhat_factor_neg(const RMat& g);

bool in_C(const RMat& c, const RMat& udot);  // c udot^{-1} in N and udot^{-1} c in N_-

// representative offset: m = wbar(w) diag(t)
TorusElt rep_offset(const WeylElt& w, const RMat& m);

void check_group_elt(const RMat& g);  // det = 1, throws otherwise

}  // namespace fpg
