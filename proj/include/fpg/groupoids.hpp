#pragma once

#include "fpg/cells.hpp"

#include <utility>
#include <vector>

namespace fpg {

struct NotComposable : std::domain_error {
  using std::domain_error::domain_error;
};
struct ConstraintViolated : std::domain_error {
  using std::domain_error::domain_error;
};

// [g]_0 for g in B_-B
TorusElt torus_part(const RMat& g);

// ---- Gamma_k: points of tF_k whose product lies in B_- ----

struct GammaArrow {
  TFnPoint x;
  RMat bm;  // g_1 ... g_k
  int arity() const { return x.n(); }
  int half() const { return x.n() / 2; }
  std::vector<RMat> rep() const { return x.rep(); }
  friend bool operator==(const GammaArrow& a, const GammaArrow& b) { return a.x == b.x; }
};

GammaArrow gamma_from_reps(const std::vector<RMat>& gs);  // ConstraintViolated unless product in B_-
GammaArrow gamma_from_tfn(const TFnPoint& x);

FnPoint source(const GammaArrow& g);
FnPoint target(const GammaArrow& g);
GammaArrow unit(const FnPoint& f);
GammaArrow inverse(const GammaArrow& g);
bool composable(const GammaArrow& a, const GammaArrow& b);
GammaArrow multiply(const GammaArrow& a, const GammaArrow& b);
GammaArrow torus_act(const TorusElt& h, const GammaArrow& g);

// ---- flags and C_{2n} = B^{2n-1} x A^o ----

FnPoint flag_of(const RMat& g);                  // gB as an arity-one point
FnPoint flag_act(const RMat& g, const FnPoint& f);  // g.f
std::vector<FnPoint> flags_of(const FnPoint& p);    // (g_1 B, g_1 g_2 B, ...)
FnPoint from_flags(const std::vector<FnPoint>& fs);

struct C2nArrow {
  std::vector<FnPoint> f;  // 2n-1 flags
  RMat bm;                 // b_- N
  int half() const { return (static_cast<int>(f.size()) + 1) / 2; }
  friend bool operator==(const C2nArrow& a, const C2nArrow& b) { return a.f == b.f && a.bm == b.bm; }
};

C2nArrow to_C2n(const GammaArrow& g);
GammaArrow from_C2n(const C2nArrow& a);
std::vector<FnPoint> c2n_source(const C2nArrow& a);
std::vector<FnPoint> c2n_target(const C2nArrow& a);
C2nArrow c2n_unit(const std::vector<FnPoint>& fs);
C2nArrow c2n_inverse(const C2nArrow& a);
C2nArrow c2n_multiply(const C2nArrow& a, const C2nArrow& b);

// ---- F_{2n}^o x T ----

struct FoTArrow {
  FnPoint p;
  TorusElt t;
  int half() const { return p.n() / 2; }
  friend bool operator==(const FoTArrow& a, const FoTArrow& b) { return a.p == b.p && a.t == b.t; }
};

FoTArrow j_map(const GammaArrow& g);  // any arity
GammaArrow j_inv(const FoTArrow& a);
FnPoint fot_source(const FoTArrow& a);
FnPoint fot_target(const FoTArrow& a);
FoTArrow fot_unit(const FnPoint& f);
FoTArrow fot_inverse(const FoTArrow& a);
FoTArrow fot_multiply(const FoTArrow& a, const FoTArrow& b);
// middle factor without the torus t of the left arrow
FoTArrow fot_multiply_as_printed(const FoTArrow& a, const FoTArrow& b);
FoTArrow torus_act(const TorusElt& h, const FoTArrow& a);

// ---- (c, b, b_-, c') model ----

struct GdbuArrow {
  std::vector<RMat> c, cp;
  RMat b, bm;
  friend bool operator==(const GdbuArrow& x, const GdbuArrow& y) {
    return x.c == y.c && x.cp == y.cp && x.b == y.b && x.bm == y.bm;
  }
};

GdbuArrow gdbu_make(const std::vector<RMat>& c, const RMat& b, const RMat& bm, const std::vector<RMat>& cp,
                    const std::vector<Rep>& reps);
void gdbu_check(const GdbuArrow& a);
FnPoint gdbu_source(const GdbuArrow& a);
FnPoint gdbu_target(const GdbuArrow& a);
GdbuArrow gdbu_unit(const FnPoint& f, const std::vector<Rep>& reps);
GdbuArrow gdbu_inverse(const GdbuArrow& a);
GdbuArrow gdbu_multiply(const GdbuArrow& a, const GdbuArrow& b);

GammaArrow iso_I(const GdbuArrow& a);
GdbuArrow iso_I_inv(const GammaArrow& g, const std::vector<Rep>& reps);

// ---- tF_{-n} and G_{m,n} ----

// [b_- c_1, c_2, ..., c_n] with c_i in C_{vdot_i}
struct TFnegPoint {
  std::vector<WeylElt> v;
  std::vector<RMat> c;
  RMat bm;
  int n() const { return static_cast<int>(c.size()); }
  std::vector<RMat> rep() const;
  friend bool operator==(const TFnegPoint& a, const TFnegPoint& b) { return a.v == b.v && a.c == b.c && a.bm == b.bm; }
};

TFnegPoint canonicalize_tFneg(const std::vector<RMat>& ks);
TFnegPoint canonicalize_tFneg_reps(const std::vector<RMat>& ks, const std::vector<Rep>& reps);

struct GmnPoint {
  TFnPoint x;
  TFnegPoint y;
  int m() const { return x.n(); }
  int n() const { return y.n(); }
  friend bool operator==(const GmnPoint& a, const GmnPoint& b) { return a.x == b.x && a.y == b.y; }
};

GmnPoint gmn_make(const std::vector<RMat>& gs, const std::vector<RMat>& ks);
struct GmnCells {
  std::vector<WeylElt> u, v;
};
GmnCells gmn_classify(const GmnPoint& pt);
GmnPoint torus_act(const TorusElt& h, const GmnPoint& pt);

GmnPoint calJ(const GdbuArrow& a);
GdbuArrow calJ_inv(const GmnPoint& pt, const std::vector<Rep>& reps);
GammaArrow iso_E(const GmnPoint& pt, const std::vector<Rep>& reps);
GmnPoint iso_E_inv(const GammaArrow& g, const std::vector<Rep>& reps);

// groupoid structure on G^{u,u} carried over from the (c, b, b_-, c') model
FnPoint guu_source(const GmnPoint& pt, const std::vector<Rep>& reps);
FnPoint guu_target(const GmnPoint& pt, const std::vector<Rep>& reps);
GmnPoint guu_unit(const FnPoint& f, const std::vector<Rep>& reps);
GmnPoint guu_inverse(const GmnPoint& pt, const std::vector<Rep>& reps);
GmnPoint guu_multiply(const GmnPoint& a, const GmnPoint& b, const std::vector<Rep>& reps);

// ([.., g_m t], [.., k_n t])
GmnPoint r_t(const GmnPoint& pt, const TorusElt& t);

// E_{m, vdot}: (x, [b_- c_1, c_2, ..]) -> [g_1, .., g_m, c_n^{-1}, .., c_1^{-1}]
TFnPoint piecewise_E(const TFnPoint& x, const TFnegPoint& y, const std::vector<Rep>& reps);
// inverse on B(u, v^{-1})B; m is the arity of the first factor
GmnPoint piecewise_E_inv(const TFnPoint& g, int m, const std::vector<Rep>& reps);
FoTArrow K_map(const GmnPoint& pt, const std::vector<Rep>& reps);

// J_{n, vdot}(x) = ([g_1, .., g_n, vdot^{-1}], [g_1 .. g_n vdot^{-1}]_0)
FoTArrow tfn_embed(const TFnPoint& x, const Rep& vdot);
TFnPoint tfn_embed_inv(const FoTArrow& a, const Rep& vdot);

}  // namespace fpg
