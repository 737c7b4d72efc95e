#pragma once

#include "fpg/groupcore.hpp"

#include <string>
#include <vector>

namespace fpg {

// representative wdot = wbar(w) diag(t) of a Weyl element, with its inverse cached
struct Rep {
  WeylElt w;
  RMat m, minv;
  static Rep bar(const WeylElt& w);
  static Rep with_torus(const WeylElt& w, const TorusElt& t);
  static Rep of_matrix(const WeylElt& w, const RMat& m);
};
std::vector<Rep> bar_reps(const std::vector<WeylElt>& ws);

struct FnPoint {
  std::vector<WeylElt> w;
  std::vector<RMat> c;
  int n() const { return static_cast<int>(c.size()); }
  int rank() const { return c.empty() ? 0 : c[0].rows - 1; }
  friend bool operator==(const FnPoint& a, const FnPoint& b) { return a.w == b.w && a.c == b.c; }
};

struct TFnPoint {
  std::vector<WeylElt> w;
  std::vector<RMat> c;
  RMat b;
  int n() const { return static_cast<int>(c.size()); }
  int rank() const { return c.empty() ? 0 : c[0].rows - 1; }
  std::vector<RMat> rep() const;  // (c_1, ..., c_{n-1}, c_n b)
  FnPoint flags() const { return {w, c}; }
  friend bool operator==(const TFnPoint& a, const TFnPoint& b) { return a.w == b.w && a.c == b.c && a.b == b.b; }
};

struct WrongCell : CellError {
  using CellError::CellError;
};
struct ZeroParameter : std::domain_error {
  using std::domain_error::domain_error;
};
struct OutsideToricChart : std::domain_error {
  std::vector<int> vanishing;
  explicit OutsideToricChart(std::vector<int> v);
};
struct NotInOpenLeaf : std::domain_error {
  using std::domain_error::domain_error;
};
struct NotInZeroChart : std::domain_error {
  int index;
  explicit NotInZeroChart(int i)
      : std::domain_error("prefix product " + std::to_string(i + 1) + " is not in B_-B"), index(i) {}
};

template <class S>
struct Canon {
  std::vector<Mat<S>> c;
  Mat<S> b;
};

// iterated g_1 = c_1 b_1, b_1 g_2 = c_2 b_2, ... with fixed representatives
template <class S> Canon<S> canonicalize_reps(const std::vector<Mat<S>>& gs, const std::vector<Rep>& reps) {
  Canon<S> out;
  int n = gs.empty() ? 0 : gs[0].rows;
  Mat<S> b = Mat<S>::identity(n);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    auto f = factor_pos_rep<S>(b * gs[i], reps[i].m, reps[i].minv);
    out.c.push_back(f.c);
    b = f.b;
  }
  out.b = b;
  return out;
}

std::vector<WeylElt> detect_cells(const std::vector<RMat>& gs);
FnPoint canonicalize_Fn(const std::vector<RMat>& gs);
TFnPoint canonicalize_tFn(const std::vector<RMat>& gs);
TFnPoint canonicalize_tFn_reps(const std::vector<RMat>& gs, const std::vector<Rep>& reps);
bool is_canonical(const FnPoint& p);

// T acts by h.[g_1, ...] = [h g_1, ...]
FnPoint torus_act(const TorusElt& h, const FnPoint& p);

WeylElt tits_distance(const RMat& g1, const RMat& g2);

struct BSChart {
  int rank = 1;
  std::vector<std::vector<int>> blocks;  // reduced word per factor, 0-based letters
  static BSChart lex(const std::vector<WeylElt>& ws);
  std::vector<int> letters() const;
  std::vector<int> block_of() const;  // block index per letter
  int length() const;
  std::vector<WeylElt> cells() const;
  std::string str() const;
};

template <class S> std::vector<Mat<S>> bs_param_S(const BSChart& ch, const std::vector<S>& z) {
  std::vector<Mat<S>> cs;
  std::size_t k = 0;
  for (const auto& blk : ch.blocks) {
    Mat<S> c = Mat<S>::identity(ch.rank + 1);
    for (int a : blk) c = c * bs_factor<S>(ch.rank, a, z.at(k++));
    cs.push_back(c);
  }
  return cs;
}
FnPoint bs_param(const BSChart& ch, const std::vector<Rat>& z);

// peel z_1 = (c wbar^{-1})_{a,a+1}, c <- sbar_a^{-1} x_a(-z_1) c, one letter at a time
template <class S> std::vector<S> bs_coords_S(const BSChart& ch, const std::vector<Mat<S>>& cs) {
  std::vector<S> z;
  int r = ch.rank;
  for (std::size_t i = 0; i < ch.blocks.size(); ++i) {
    Mat<S> c = cs[i];
    RMat W = wbar_word(r, ch.blocks[i]);
    for (int a : ch.blocks[i]) {
      Mat<S> n = c * lift<S>(inverse(W));
      S za = n(a, a + 1);
      z.push_back(za);
      RMat si = inverse(sbar(r, a));
      c = lift<S>(si) * one_param<S>(r, true, a, S(-za)) * c;
      W = si * W;
    }
  }
  return z;
}
std::vector<Rat> bs_coords(const FnPoint& p, const BSChart& ch);

FnPoint lusztig_chart(const BSChart& ch, const std::vector<Rat>& eps);
std::vector<RMat> lusztig_factors(const BSChart& ch, const std::vector<Rat>& eps);

Rat phi(const BSChart& ch, int j, const FnPoint& p);
Rat phi_minor(const BSChart& ch, int j, const FnPoint& p);  // generalized-minor form
std::vector<Rat> phi_all(const BSChart& ch, const FnPoint& p);

// exponent table: case 0 (alpha_i recurs before j), 1 (alpha_i != alpha_j), 2 (alpha_i = alpha_j)
struct RExp {
  long r;
  int kind;
};
RExp r_exponent(const BSChart& ch, int i, int j);
std::vector<Rat> invert_lusztig(const BSChart& ch, const FnPoint& p);
// single-factor formula in terms of generalized minors of g in N_w
std::vector<Rat> invert_lusztig_minors(const BSChart& ch, const FnPoint& p);

bool in_Owe(const FnPoint& p);
bool in_Ow_phi(const BSChart& ch, const FnPoint& p);
RMat product(const std::vector<RMat>& gs);
TorusElt tau(const FnPoint& p);
// tau for representatives wdot: tau_wdot = t_wdot tau_wbar
TorusElt tau_dot(const FnPoint& p, const std::vector<Rep>& reps);

std::vector<RMat> varsigma_factor(const FnPoint& p);
FnPoint varsigma(const std::vector<RMat>& ms);

TorusElt t_dot(const std::vector<Rep>& reps);

}  // namespace fpg
