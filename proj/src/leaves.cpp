#include "fpg/leaves.hpp"

#include <string>

namespace fpg {

NoRationalSqrt::NoRationalSqrt(int c, const Rat& v)
    : std::domain_error("no rational square root: coordinate omega_" + std::to_string(c + 1) + " has value " +
                        to_str(v)),
      coord(c),
      value(v) {}

std::optional<Rat> rat_sqrt(const Rat& x) {
  if (sgn(x) < 0) return std::nullopt;
  mpz_class n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

bool in_subgroup(const TorusElt& t, const Lattice& ann) {
  for (const auto& chi : ann.basis)
    if (t.character(chi) != 1) return false;
  return true;
}

bool TorusCoset::contains(const TorusElt& t) const { return in_subgroup(t * rep.inverse(), ann); }

Lattice ann_Tw(const WeylElt& w) { return fixed_character_lattice(w); }

Lattice ann_Ttilde(const std::vector<WeylElt>& ws) {
  int r = ws.at(0).rank();
  Lattice L;
  for (int a : supp_sets(ws).supp0) {
    IVec e(r, 0);
    e[a] = 1;
    L.basis.push_back(e);
  }
  return L;
}

Lattice ann_Tuv(const WeylElt& u, const WeylElt& v) {
  WeylElt vi = v.inverse();
  Lattice fix = fixed_character_lattice(weyl_mul(u, vi));
  Lattice L;
  for (const auto& chi : fix.basis) L.basis.push_back(act_on_weight(vi, chi));
  return L;
}

bool in_Tw(const TorusElt& t, const WeylElt& w) { return in_subgroup(t, ann_Tw(w)); }

bool in_Ttilde(const TorusElt& t, const std::vector<WeylElt>& ws) {
  for (int a : supp_sets(ws).supp0)
    if (t.vals[a] != 1) return false;
  return true;
}

bool in_Tuv(const TorusElt& t, const WeylElt& u, const WeylElt& v) {
  WeylElt vi = v.inverse();
  return in_Tw(torus_conjugate(t, vi), weyl_mul(u, vi));
}

static WeylElt prod_of(const std::vector<WeylElt>& ws) { return weyl_product(ws, ws.at(0).rank()); }

bool stab_member(const TorusElt& h, const std::vector<WeylElt>& ws) {
  return in_Ttilde(h, ws) && in_Tw(h * h, prod_of(ws));
}

TorusElt diag_torus(const RMat& m) {
  std::vector<Rat> d(m.rows);
  for (int i = 0; i < m.rows; ++i) d[i] = m(i, i);
  return TorusElt::from_diag_entries(d);
}

TorusElt sqrt_mod_Ttilde(const TorusElt& t, const std::vector<WeylElt>& ws) {
  auto out = TorusElt::identity(t.rank());
  for (int a : supp_sets(ws).supp0) {
    auto s = rat_sqrt(t.vals[a]);
    if (!s) throw NoRationalSqrt(a, t.vals[a]);
    out.vals[a] = *s;
  }
  return out;
}

int leaf_dim(const std::vector<WeylElt>& ws) {
  int l = 0;
  for (const auto& w : ws) l += w.length();
  return l + dim_image_one_minus(prod_of(ws));
}

static std::vector<WeylElt> cells_of(const std::vector<Rep>& reps) {
  std::vector<WeylElt> ws;
  for (const auto& x : reps) ws.push_back(x.w);
  return ws;
}

TorusCoset mu(const FnPoint& p, const TorusElt& t, const std::vector<Rep>& reps) {
  if (p.w != cells_of(reps)) throw CellMismatch("point is not in the cell of the representatives");
  auto ti = t.inverse();
  return {ti * ti * tau_dot(p, reps), ann_Tw(prod_of(p.w))};
}

TorusCoset delta(const TorusElt& t, const std::vector<WeylElt>& ws) { return {t, ann_Ttilde(ws)}; }

LevelPair mu_delta(const FnPoint& p, const TorusElt& t, const std::vector<Rep>& reps) {
  return {mu(p, t, reps), delta(t, p.w)};
}

bool same_leaf(const FnPoint& p, const TorusElt& t, const FnPoint& p2, const TorusElt& t2,
               const std::vector<Rep>& reps) {
  if (p.w != p2.w) throw CellMismatch("points lie in different cells");
  return mu_delta(p, t, reps) == mu_delta(p2, t2, reps);
}

bool sigma_member(const FnPoint& p, const TorusElt& t, const std::vector<Rep>& reps) {
  auto ws = cells_of(reps);
  if (p.w != ws) throw CellMismatch("point is not in the cell of the representatives");
  auto sq = sqrt_mod_Ttilde(t_dot(reps), ws);
  auto ti = t.inverse();
  return in_Tw(ti * ti * tau_dot(p, reps), prod_of(ws)) && in_Ttilde(t * sq.inverse(), ws);
}

std::pair<FnPoint, TorusElt> torus_act(const TorusElt& h, const FnPoint& p, const TorusElt& t) {
  return {torus_act(h, p), h * t};
}

std::vector<Rat> sample_square_params(Rng& rng, int k) {
  std::vector<Rat> v(k);
  for (auto& x : v) {
    Rat q = rng.positive();
    x = q * q;
  }
  return v;
}

static bool in_list(const std::vector<int>& v, int a) {
  for (int b : v)
    if (a == b) return true;
  return false;
}

std::pair<FnPoint, TorusElt> sample_sigma(Rng& rng, const std::vector<WeylElt>& ws) {
  auto ch = BSChart::lex(ws);
  auto s0 = supp_sets(ws).supp0;
  int r = ws.at(0).rank();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto p = lusztig_chart(ch, sample_square_params(rng, ch.length()));
    auto tt = tau(p);
    auto t = TorusElt::identity(r);
    bool ok = true;
    for (int a = 0; a < r && ok; ++a) {
      auto q = rat_sqrt(tt.vals[a]);
      if (!q) ok = false;
      else t.vals[a] = (!in_list(s0, a) && rng.coin()) ? Rat(-*q) : *q;
    }
    if (ok) return {p, t};
  }
  throw std::runtime_error("no square torus part found");
}

std::vector<TorusElt> cover_fiber(const FnPoint& p, const TorusElt& tp, const std::vector<Rep>& reps) {
  auto ws = cells_of(reps);
  if (p.w != ws) throw CellMismatch("point is not in the cell of the representatives");
  auto sq = sqrt_mod_Ttilde(t_dot(reps), ws);
  auto sqi = sq.inverse();
  // t = sq x with x in Ttilde: x^2 = sq^{-2} tau_wdot t'^{-1}
  auto K = sqi * sqi * tau_dot(p, reps) * tp.inverse();
  auto ss = supp_sets(ws);
  for (int a : ss.supp0)
    if (K.vals[a] != 1) return {};
  std::vector<int> free;
  std::vector<Rat> roots;
  for (int a = 0; a < K.rank(); ++a) {
    if (in_list(ss.supp0, a)) continue;
    auto s = rat_sqrt(K.vals[a]);
    if (!s) throw NoRationalSqrt(a, K.vals[a]);
    free.push_back(a);
    roots.push_back(*s);
  }
  std::vector<TorusElt> out;
  for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
    auto x = TorusElt::identity(K.rank());
    for (std::size_t k = 0; k < free.size(); ++k) x.vals[free[k]] = (mask >> k & 1) ? Rat(-roots[k]) : roots[k];
    out.push_back(sq * x);
  }
  return out;
}

bool xw_image_member(const TorusElt& a, const TorusElt& ap, const std::vector<Rep>& reps) {
  return in_Ttilde(a * ap * ap * t_dot(reps).inverse(), cells_of(reps));
}

bool yw_image_member(const TorusElt& a, const TorusElt& ap, const std::vector<Rep>& reps) {
  return in_Ttilde(a.inverse() * ap * ap * t_dot(reps).inverse(), cells_of(reps));
}

std::vector<TorusElt> xw_fiber(const TorusElt& a, const std::vector<Rep>& reps) {
  auto ws = cells_of(reps);
  auto K = a.inverse() * t_dot(reps);
  auto s0 = supp_sets(ws).supp0;
  std::vector<Rat> roots;
  for (int c : s0) {
    auto s = rat_sqrt(K.vals[c]);
    if (!s) throw NoRationalSqrt(c, K.vals[c]);
    roots.push_back(*s);
  }
  std::vector<TorusElt> out;
  for (unsigned mask = 0; mask < (1u << s0.size()); ++mask) {
    auto x = TorusElt::identity(a.rank());
    for (std::size_t k = 0; k < s0.size(); ++k) x.vals[s0[k]] = (mask >> k & 1) ? Rat(-roots[k]) : roots[k];
    out.push_back(x);
  }
  return out;
}

// ---- Gamma^w ----

struct BB {
  TorusElt b0, bm0;
};

static BB gamma_tori(const GammaArrow& g, const std::vector<Rep>& reps) {
  if (g.x.w != cells_of(reps)) throw CellMismatch("arrow is not in the cell of the representatives");
  auto x = canonicalize_tFn_reps(g.rep(), reps);
  return {diag_torus(x.b), diag_torus(g.bm)};
}

LevelPair beta(const GammaArrow& g, const std::vector<Rep>& reps) {
  auto t = gamma_tori(g, reps);
  auto ws = cells_of(reps);
  return {{t.b0 * t.bm0, ann_Tw(prod_of(ws))}, {t.bm0, ann_Ttilde(ws)}};
}

bool lambda_member(const GammaArrow& g, const std::vector<Rep>& reps, const std::optional<TorusElt>& h) {
  auto ws = cells_of(reps);
  auto t = gamma_tori(g, reps);
  auto hh = h ? *h : TorusElt::identity(ws.at(0).rank());
  auto sq = sqrt_mod_Ttilde(t_dot(reps), ws);
  auto hi = hh.inverse();
  return in_Tw(t.b0 * t.bm0 * hi * hi, prod_of(ws)) && in_Ttilde(t.bm0 * (hh * sq).inverse(), ws);
}

std::vector<WeylElt> uu_cells(const std::vector<WeylElt>& u) {
  std::vector<WeylElt> ws = u;
  for (auto it = u.rbegin(); it != u.rend(); ++it) ws.push_back(it->inverse());
  return ws;
}

std::vector<Rep> uu_reps(const std::vector<WeylElt>& u) {
  std::vector<Rep> reps = bar_reps(u);
  for (auto it = u.rbegin(); it != u.rend(); ++it) reps.push_back(Rep::of_matrix(it->inverse(), inverse(wbar(*it))));
  return reps;
}

static void check_uu(const GammaArrow& g, const std::vector<WeylElt>& u) {
  if (g.x.w != uu_cells(u)) throw CellMismatch("arrow is not in Gamma^{(u,u^{-1})}");
}

bool lambda_uu_member(const GammaArrow& g, const std::vector<WeylElt>& u) {
  check_uu(g, u);
  auto a = iso_I_inv(g, bar_reps(u));
  auto b0 = diag_torus(a.b), bm0 = diag_torus(a.bm);
  return b0 * torus_conjugate(bm0, prod_of(u)) == TorusElt::identity(b0.rank()) && in_Ttilde(b0, u);
}

bool lambda_uu_member_alt(const GammaArrow& g, const std::vector<WeylElt>& u) {
  check_uu(g, u);
  auto x = canonicalize_tFn_reps(g.rep(), uu_reps(u));
  auto b0 = diag_torus(x.b), bm0 = diag_torus(g.bm);
  return in_Ttilde(bm0, u) && b0 * bm0 == TorusElt::identity(b0.rank());
}

GammaArrow sample_lambda_uu(Rng& rng, const std::vector<WeylElt>& u, const std::vector<Rat>& head) {
  auto ws = uu_cells(u);
  auto reps = uu_reps(u);
  auto ch = BSChart::lex(ws);
  int r = u.at(0).rank();
  auto s0 = supp_sets(u).supp0;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto eps = head;
    auto tail = sample_square_params(rng, ch.length() - static_cast<int>(head.size()));
    // tau_wdot differs from tau_wbar by a sign, so signs of the parameters vary too
    for (auto& e : tail)
      if (rng.coin()) e = -e;
    eps.insert(eps.end(), tail.begin(), tail.end());
    auto x = canonicalize_tFn_reps(lusztig_factors(ch, eps), reps);
    auto G = gauss_decompose(product(x.c));
    auto D = TorusElt::from_diag_entries(G.d);
    // s^2 = D^{-1}, then [b_-]_0 = D s = s^{-1}
    auto s = TorusElt::identity(r);
    bool ok = true;
    for (int a = 0; a < r && ok; ++a) {
      auto q = rat_sqrt(inv(D.vals[a]));
      if (!q) {
        ok = false;
        break;
      }
      s.vals[a] = (!in_list(s0, a) && rng.coin()) ? Rat(-*q) : *q;
    }
    if (!ok) continue;
    auto gs = x.c;
    gs.back() = gs.back() * inverse(G.upper) * s.to_diag();
    return gamma_from_reps(gs);
  }
  throw std::runtime_error("no square torus part found");
}

// ---- G^{u,v} ----

Rep dbar_rep(const WeylElt& v) { return Rep::of_matrix(v, inverse(wbar(v.inverse()))); }

std::vector<Rep> dbar_reps(const std::vector<WeylElt>& vs) {
  std::vector<Rep> out;
  for (const auto& v : vs) out.push_back(dbar_rep(v));
  return out;
}

static std::vector<WeylElt> cat_cells(const std::vector<WeylElt>& u, const std::vector<WeylElt>& v) {
  auto ws = u;
  ws.insert(ws.end(), v.begin(), v.end());
  return ws;
}

LevelPair chi(const GmnPoint& pt) {
  auto cl = gmn_classify(pt);
  auto x = canonicalize_tFn_reps(pt.x.rep(), bar_reps(cl.u));
  auto y = canonicalize_tFneg_reps(pt.y.rep(), dbar_reps(cl.v));
  auto b0 = diag_torus(x.b), bm0 = diag_torus(y.bm);
  auto u = prod_of(cl.u), v = prod_of(cl.v);
  return {{b0 * torus_conjugate(bm0, v), ann_Tuv(u, v)}, {b0, ann_Ttilde(cat_cells(cl.u, cl.v))}};
}

bool suv_member(const GmnPoint& pt, const std::optional<TorusElt>& a) {
  auto cl = gmn_classify(pt);
  auto x = canonicalize_tFn_reps(pt.x.rep(), bar_reps(cl.u));
  auto y = canonicalize_tFneg_reps(pt.y.rep(), dbar_reps(cl.v));
  auto b0 = diag_torus(x.b), bm0 = diag_torus(y.bm);
  auto u = prod_of(cl.u), v = prod_of(cl.v);
  auto aa = a ? *a : TorusElt::identity(b0.rank());
  auto au = torus_conjugate(aa, u);
  auto aui = au.inverse();
  return in_Ttilde(b0 * aui, cat_cells(cl.u, cl.v)) && in_Tuv(b0 * torus_conjugate(bm0, v) * aui * aui, u, v);
}

int guv_leaf_dim(const std::vector<WeylElt>& u, const std::vector<WeylElt>& v) {
  int l = 0;
  for (const auto& w : u) l += w.length();
  for (const auto& w : v) l += w.length();
  return l + dim_image_one_minus(weyl_mul(prod_of(u), prod_of(v).inverse()));
}

// ---- tF_n^{u,v} ----

static std::pair<TorusElt, TorusElt> tfn_tori(const TFnPoint& x, const std::vector<WeylElt>& u, const WeylElt& v) {
  if (x.w != u) throw CellMismatch("point is not in B u B");
  RMat P = product(x.rep());
  if (!(bruhat_cell_neg(P) == v)) throw CellMismatch("product is not in B_- v B_-");
  auto c = canonicalize_tFn_reps(x.rep(), bar_reps(u));
  return {diag_torus(c.b), torus_part(P * wbar(v.inverse()))};
}

LevelPair tfn_chi(const TFnPoint& x, const std::vector<WeylElt>& u, const WeylElt& v) {
  auto [b0, m0] = tfn_tori(x, u, v);
  auto up = prod_of(u);
  return {{b0 * torus_conjugate(m0, v), ann_Tuv(up, v)}, {b0, ann_Ttilde(cat_cells(u, {v}))}};
}

bool tfn_leaf_member(const TFnPoint& x, const std::vector<WeylElt>& u, const WeylElt& v,
                     const std::optional<TorusElt>& a) {
  auto [b0, m0] = tfn_tori(x, u, v);
  auto up = prod_of(u);
  auto aa = a ? *a : TorusElt::identity(b0.rank());
  auto aui = torus_conjugate(aa, up).inverse();
  return in_Ttilde(b0 * aui, cat_cells(u, {v})) && in_Tuv(b0 * torus_conjugate(m0, v) * aui * aui, up, v);
}

int tfn_leaf_dim(const std::vector<WeylElt>& u, const WeylElt& v) { return guv_leaf_dim(u, {v}); }

// ---- labels ----

CellLabel tleaf_of(const GammaArrow& g) { return {g.x.w, {}}; }
CellLabel tleaf_of(const FoTArrow& a) { return {a.p.w, {}}; }
CellLabel tleaf_of(const GmnPoint& pt) {
  auto c = gmn_classify(pt);
  return {c.u, c.v};
}
CellLabel tleaf_of(const TFnPoint& x) { return {x.w, {bruhat_cell_neg(product(x.rep()))}}; }

}  // namespace fpg
