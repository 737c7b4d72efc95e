#pragma once

#include "fpg/groupoids.hpp"
#include "fpg/random.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace fpg {

struct CellMismatch : CellError {
  using CellError::CellError;
};

struct NoRationalSqrt : std::domain_error {
  int coord;  // fundamental weight index, 0-based
  Rat value;
  NoRationalSqrt(int c, const Rat& v);
};

std::optional<Rat> rat_sqrt(const Rat& x);  // nonnegative root if x is a square in Q

// subgroup given by the characters vanishing on it
bool in_subgroup(const TorusElt& t, const Lattice& ann);

struct TorusCoset {
  TorusElt rep;
  Lattice ann;
  bool contains(const TorusElt& t) const;
  friend bool operator==(const TorusCoset& a, const TorusCoset& b) {
    return a.ann.basis == b.ann.basis && a.contains(b.rep);
  }
};

Lattice ann_Tw(const WeylElt& w);                      // {a (a^{-1})^w}
Lattice ann_Ttilde(const std::vector<WeylElt>& ws);    // omega_alpha, alpha in supp^o
Lattice ann_Tuv(const WeylElt& u, const WeylElt& v);   // {(a^{-1})^u a^v}, as v^{-1} Fix(u v^{-1})

bool in_Tw(const TorusElt& t, const WeylElt& w);
bool in_Ttilde(const TorusElt& t, const std::vector<WeylElt>& ws);
bool in_Tuv(const TorusElt& t, const WeylElt& u, const WeylElt& v);  // t^{v^{-1}} in T^{u v^{-1}}
bool stab_member(const TorusElt& h, const std::vector<WeylElt>& ws);  // h in Ttilde, h^2 in T^w

TorusElt diag_torus(const RMat& m);  // diagonal of a triangular matrix

// sqrt of t modulo Ttilde^w: roots on supp^o coordinates, 1 elsewhere
TorusElt sqrt_mod_Ttilde(const TorusElt& t, const std::vector<WeylElt>& ws);

struct LevelPair {
  TorusCoset first, second;
  friend bool operator==(const LevelPair& a, const LevelPair& b) { return a.first == b.first && a.second == b.second; }
};

int leaf_dim(const std::vector<WeylElt>& ws);

// ---- F_n^o x T ----
TorusCoset mu(const FnPoint& p, const TorusElt& t, const std::vector<Rep>& reps);
TorusCoset delta(const TorusElt& t, const std::vector<WeylElt>& ws);
LevelPair mu_delta(const FnPoint& p, const TorusElt& t, const std::vector<Rep>& reps);
bool same_leaf(const FnPoint& p, const TorusElt& t, const FnPoint& p2, const TorusElt& t2,
               const std::vector<Rep>& reps);
// (p, t) in Sigma^wdot: t^{-2} tau_wdot in T^w, t in sqrt(t_wdot) Ttilde^w
bool sigma_member(const FnPoint& p, const TorusElt& t, const std::vector<Rep>& reps);
// h.(p, t) = (h.p, h t)
std::pair<FnPoint, TorusElt> torus_act(const TorusElt& h, const FnPoint& p, const TorusElt& t);

// point of Sigma^{wbar} from positive Lusztig parameters, t^2 = tau(p) with random signs off supp^o
std::pair<FnPoint, TorusElt> sample_sigma(Rng& rng, const std::vector<WeylElt>& ws);

// every t with (p, t) in Sigma^wdot and t^{-2} tau_wdot(p) = t'
std::vector<TorusElt> cover_fiber(const FnPoint& p, const TorusElt& tp, const std::vector<Rep>& reps);

// a (a')^2 in t_wdot Ttilde^w
bool xw_image_member(const TorusElt& a, const TorusElt& ap, const std::vector<Rep>& reps);
// a^{-1} (a')^2 in t_wdot Ttilde^w, the same set in the coordinates of beta
bool yw_image_member(const TorusElt& a, const TorusElt& ap, const std::vector<Rep>& reps);
// representatives of all a' Ttilde^w with (a T^w, a' Ttilde^w) in X^wdot
std::vector<TorusElt> xw_fiber(const TorusElt& a, const std::vector<Rep>& reps);

// ---- Gamma^w ----
// ([b]_0 [b_-]_0 T^w, [b_-]_0 Ttilde^w) with gamma = [c_1, .., c_n b], c_i in C_{wdot_i}
LevelPair beta(const GammaArrow& g, const std::vector<Rep>& reps);
// h.Lambda^wdot: [b]_0 [b_-]_0 in h^2 T^w, [b_-]_0 in h sqrt(t_wdot) Ttilde^w
bool lambda_member(const GammaArrow& g, const std::vector<Rep>& reps, const std::optional<TorusElt>& h = {});

// (ubar_1, .., ubar_n, ubar_n^{-1}, .., ubar_1^{-1})
std::vector<Rep> uu_reps(const std::vector<WeylElt>& u);
std::vector<WeylElt> uu_cells(const std::vector<WeylElt>& u);
// [b]_0 [b_-]_0^u = e and [b]_0 in Ttilde^u in (c, b, b_-, c') coordinates
bool lambda_uu_member(const GammaArrow& g, const std::vector<WeylElt>& u);
// same set via the 2n-factor form: [b_-]_0 in Ttilde^u, [b_1]_0 [b_-]_0 = e
bool lambda_uu_member_alt(const GammaArrow& g, const std::vector<WeylElt>& u);

// points of Lambda^{(u,u^{-1})} from positive Lusztig parameters; head fixes the first blocks
GammaArrow sample_lambda_uu(Rng& rng, const std::vector<WeylElt>& u, const std::vector<Rat>& head = {});
std::vector<Rat> sample_square_params(Rng& rng, int k);

// ---- G^{u,v} ----
// vbarbar = (overline{v^{-1}})^{-1}
Rep dbar_rep(const WeylElt& v);
std::vector<Rep> dbar_reps(const std::vector<WeylElt>& vs);
// ([b]_0 [b_-]_0^v T^{u,v}, [b]_0 Ttilde^{u,v}) with ubar and vbarbar representatives
LevelPair chi(const GmnPoint& pt);
bool suv_member(const GmnPoint& pt, const std::optional<TorusElt>& a = {});
int guv_leaf_dim(const std::vector<WeylElt>& u, const std::vector<WeylElt>& v);

// ---- tF_n^{u,v} ----
LevelPair tfn_chi(const TFnPoint& x, const std::vector<WeylElt>& u, const WeylElt& v);
bool tfn_leaf_member(const TFnPoint& x, const std::vector<WeylElt>& u, const WeylElt& v,
                     const std::optional<TorusElt>& a = {});
int tfn_leaf_dim(const std::vector<WeylElt>& u, const WeylElt& v);

// ---- T-leaf labels ----
struct CellLabel {
  std::vector<WeylElt> u, v;
  friend bool operator==(const CellLabel& a, const CellLabel& b) { return a.u == b.u && a.v == b.v; }
};
CellLabel tleaf_of(const GammaArrow& g);
CellLabel tleaf_of(const FoTArrow& a);
CellLabel tleaf_of(const GmnPoint& pt);
CellLabel tleaf_of(const TFnPoint& x);

}  // namespace fpg
