#include "fpg/groupoids.hpp"

namespace fpg {

namespace {

std::vector<RMat> rev_inv(const std::vector<RMat>& gs, std::size_t from, std::size_t to) {
  std::vector<RMat> out;
  for (std::size_t i = to; i > from; --i) out.push_back(inverse(gs[i - 1]));
  return out;
}

std::vector<RMat> cat(std::vector<RMat> a, const std::vector<RMat>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Canon<Rat> canon_in_cells(const std::vector<RMat>& gs, const std::vector<Rep>& reps) {
  if (gs.size() != reps.size()) throw std::invalid_argument("representative count does not match arity");
  auto cn = canonicalize_reps<Rat>(gs, reps);
  for (std::size_t i = 0; i < cn.c.size(); ++i)
    if (!in_C(cn.c[i], reps[i].m))
      throw WrongCell("factor " + std::to_string(i + 1) + " is not in the cell of its representative");
  return cn;
}

void require_even(const GammaArrow& g) {
  if (g.arity() % 2) throw std::invalid_argument("groupoid maps need even arity");
}

}  // namespace

TorusElt torus_part(const RMat& g) { return TorusElt::from_diag_entries(gauss_decompose(g).d); }

GammaArrow gamma_from_tfn(const TFnPoint& x) {
  RMat p = product(x.rep());
  if (!is_lower(p)) throw ConstraintViolated("product of the tuple is not in B_-");
  return {x, p};
}

GammaArrow gamma_from_reps(const std::vector<RMat>& gs) { return gamma_from_tfn(canonicalize_tFn(gs)); }

FnPoint source(const GammaArrow& g) {
  require_even(g);
  int n = g.half();
  return {std::vector<WeylElt>(g.x.w.begin(), g.x.w.begin() + n), std::vector<RMat>(g.x.c.begin(), g.x.c.begin() + n)};
}

FnPoint target(const GammaArrow& g) {
  require_even(g);
  auto gs = g.rep();
  return canonicalize_Fn(rev_inv(gs, g.half(), gs.size()));
}

GammaArrow unit(const FnPoint& f) { return gamma_from_reps(cat(f.c, rev_inv(f.c, 0, f.c.size()))); }

GammaArrow inverse(const GammaArrow& g) {
  auto gs = g.rep();
  return gamma_from_reps(rev_inv(gs, 0, gs.size()));
}

bool composable(const GammaArrow& a, const GammaArrow& b) {
  return a.arity() == b.arity() && target(a) == source(b);
}

GammaArrow multiply(const GammaArrow& a, const GammaArrow& b) {
  if (!composable(a, b)) throw NotComposable("target of the left arrow differs from source of the right arrow");
  int n = a.half();
  auto g = a.rep(), h = b.rep();
  std::vector<RMat> out(g.begin(), g.begin() + n);
  RMat mid = RMat::identity(g[0].rows);
  for (int i = n; i < 2 * n; ++i) mid = mid * g[i];
  for (int i = 0; i <= n; ++i) mid = mid * h[i];
  out.push_back(mid);
  for (int i = n + 1; i < 2 * n; ++i) out.push_back(h[i]);
  return gamma_from_reps(out);
}

GammaArrow torus_act(const TorusElt& h, const GammaArrow& g) {
  auto gs = g.rep();
  gs[0] = h.to_diag() * gs[0];
  return gamma_from_reps(gs);
}

FnPoint flag_of(const RMat& g) { return canonicalize_Fn({g}); }

FnPoint flag_act(const RMat& g, const FnPoint& f) { return flag_of(g * f.c.at(0)); }

std::vector<FnPoint> flags_of(const FnPoint& p) {
  std::vector<FnPoint> out;
  RMat P = RMat::identity(p.c.at(0).rows);
  for (const auto& c : p.c) {
    P = P * c;
    out.push_back(flag_of(P));
  }
  return out;
}

FnPoint from_flags(const std::vector<FnPoint>& fs) {
  std::vector<RMat> gs;
  for (std::size_t j = 0; j < fs.size(); ++j)
    gs.push_back(j ? RMat(inverse(fs[j - 1].c[0]) * fs[j].c[0]) : fs[0].c[0]);
  return canonicalize_Fn(gs);
}

C2nArrow to_C2n(const GammaArrow& g) {
  require_even(g);
  auto gs = g.rep();
  C2nArrow a;
  RMat P = RMat::identity(gs[0].rows);
  for (std::size_t j = 0; j + 1 < gs.size(); ++j) {
    P = P * gs[j];
    a.f.push_back(flag_of(P));
  }
  a.bm = g.bm;
  return a;
}

GammaArrow from_C2n(const C2nArrow& a) {
  if (!is_lower(a.bm)) throw ConstraintViolated("decoration is not in B_-");
  std::vector<RMat> gs;
  for (std::size_t j = 0; j < a.f.size(); ++j)
    gs.push_back(j ? RMat(inverse(a.f[j - 1].c[0]) * a.f[j].c[0]) : a.f[0].c[0]);
  gs.push_back(inverse(a.f.back().c[0]) * a.bm);
  return gamma_from_reps(gs);
}

std::vector<FnPoint> c2n_source(const C2nArrow& a) {
  return std::vector<FnPoint>(a.f.begin(), a.f.begin() + a.half());
}

std::vector<FnPoint> c2n_target(const C2nArrow& a) {
  int n = a.half();
  RMat bi = inverse(a.bm);
  std::vector<FnPoint> out;
  for (int j = 2 * n - 2; j >= n - 1; --j) out.push_back(flag_act(bi, a.f[j]));
  return out;
}

C2nArrow c2n_unit(const std::vector<FnPoint>& fs) {
  C2nArrow a;
  a.f = fs;
  for (int j = static_cast<int>(fs.size()) - 2; j >= 0; --j) a.f.push_back(fs[j]);
  a.bm = RMat::identity(fs.at(0).c.at(0).rows);
  return a;
}

C2nArrow c2n_inverse(const C2nArrow& a) {
  C2nArrow out;
  RMat bi = inverse(a.bm);
  for (auto it = a.f.rbegin(); it != a.f.rend(); ++it) out.f.push_back(flag_act(bi, *it));
  out.bm = bi;
  return out;
}

C2nArrow c2n_multiply(const C2nArrow& a, const C2nArrow& b) {
  if (a.f.size() != b.f.size() || c2n_target(a) != c2n_source(b))
    throw NotComposable("target of the left arrow differs from source of the right arrow");
  int n = a.half();
  C2nArrow out;
  out.f.assign(a.f.begin(), a.f.begin() + n);
  for (int j = n; j < 2 * n - 1; ++j) out.f.push_back(flag_act(a.bm, b.f[j]));
  out.bm = a.bm * b.bm;
  return out;
}

FoTArrow j_map(const GammaArrow& g) { return {g.x.flags(), torus_part(g.bm)}; }

GammaArrow j_inv(const FoTArrow& a) {
  auto gs = a.p.c;
  RMat P = product(gs);
  gs.back() = gs.back() * inverse(gauss_geq0(P)) * a.t.to_diag();
  return gamma_from_reps(gs);
}

FnPoint fot_source(const FoTArrow& a) {
  int n = a.half();
  return {std::vector<WeylElt>(a.p.w.begin(), a.p.w.begin() + n), std::vector<RMat>(a.p.c.begin(), a.p.c.begin() + n)};
}

// t^{-1} [g]_{>=0} g_{2n}^{-1}, g_{2n-1}^{-1}, ..., g_{stop+1}^{-1}
static std::vector<RMat> fot_tail(const FoTArrow& a, int stop) {
  const auto& g = a.p.c;
  int k = a.p.n();
  std::vector<RMat> out;
  out.push_back(a.t.inverse().to_diag() * gauss_geq0(product(g)) * inverse(g[k - 1]));
  for (int i = k - 2; i >= stop; --i) out.push_back(inverse(g[i]));
  return out;
}

FnPoint fot_target(const FoTArrow& a) { return canonicalize_Fn(fot_tail(a, a.half())); }

FoTArrow fot_unit(const FnPoint& f) {
  return {canonicalize_Fn(cat(f.c, rev_inv(f.c, 0, f.c.size()))), TorusElt::identity(f.rank())};
}

FoTArrow fot_inverse(const FoTArrow& a) { return {canonicalize_Fn(fot_tail(a, 0)), a.t.inverse()}; }

static FoTArrow fot_mul(const FoTArrow& a, const FoTArrow& b, bool with_t) {
  if (a.p.n() != b.p.n() || fot_target(a) != fot_source(b))
    throw NotComposable("target of the left arrow differs from source of the right arrow");
  int n = a.half();
  const auto& g = a.p.c;
  const auto& h = b.p.c;
  std::vector<RMat> out(g.begin(), g.begin() + n);
  RMat mid = RMat::identity(g[0].rows);
  for (int i = n; i < 2 * n; ++i) mid = mid * g[i];
  mid = mid * inverse(gauss_geq0(product(g)));
  if (with_t) mid = mid * a.t.to_diag();
  for (int i = 0; i <= n; ++i) mid = mid * h[i];
  out.push_back(mid);
  for (int i = n + 1; i < 2 * n; ++i) out.push_back(h[i]);
  return {canonicalize_Fn(out), a.t * b.t};
}

FoTArrow fot_multiply(const FoTArrow& a, const FoTArrow& b) { return fot_mul(a, b, true); }
FoTArrow fot_multiply_as_printed(const FoTArrow& a, const FoTArrow& b) { return fot_mul(a, b, false); }

FoTArrow torus_act(const TorusElt& h, const FoTArrow& a) { return {torus_act(h, a.p), h * a.t}; }

void gdbu_check(const GdbuArrow& a) {
  if (!is_upper(a.b)) throw ConstraintViolated("b is not in B");
  if (!is_lower(a.bm)) throw ConstraintViolated("b_- is not in B_-");
  if (product(a.c) * a.b != a.bm * product(a.cp)) throw ConstraintViolated("c b differs from b_- c'");
}

GdbuArrow gdbu_make(const std::vector<RMat>& c, const RMat& b, const RMat& bm, const std::vector<RMat>& cp,
                    const std::vector<Rep>& reps) {
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (!in_C(c.at(i), reps[i].m) || !in_C(cp.at(i), reps[i].m))
      throw WrongCell("entry " + std::to_string(i + 1) + " is not in the cell of its representative");
  GdbuArrow a{c, cp, b, bm};
  gdbu_check(a);
  return a;
}

FnPoint gdbu_source(const GdbuArrow& a) { return canonicalize_Fn(a.c); }
FnPoint gdbu_target(const GdbuArrow& a) { return canonicalize_Fn(a.cp); }

GdbuArrow gdbu_unit(const FnPoint& f, const std::vector<Rep>& reps) {
  auto c = canon_in_cells(f.c, reps).c;
  RMat e = RMat::identity(f.c.at(0).rows);
  return {c, c, e, e};
}

GdbuArrow gdbu_inverse(const GdbuArrow& a) { return {a.cp, a.c, inverse(a.b), inverse(a.bm)}; }

GdbuArrow gdbu_multiply(const GdbuArrow& a, const GdbuArrow& b) {
  if (a.cp != b.c) throw NotComposable("c' of the left arrow differs from c of the right arrow");
  GdbuArrow out{a.c, b.cp, a.b * b.b, a.bm * b.bm};
  gdbu_check(out);
  return out;
}

GammaArrow iso_I(const GdbuArrow& a) {
  auto gs = a.c;
  gs.back() = gs.back() * a.b;
  return gamma_from_reps(cat(gs, rev_inv(a.cp, 0, a.cp.size())));
}

GdbuArrow iso_I_inv(const GammaArrow& g, const std::vector<Rep>& reps) {
  require_even(g);
  int n = g.half();
  auto gs = g.rep();
  auto head = canon_in_cells(std::vector<RMat>(gs.begin(), gs.begin() + n), reps);
  auto tail = canon_in_cells(rev_inv(gs, n, gs.size()), reps);
  RMat b = head.b * inverse(tail.b);
  RMat bm = product(head.c) * b * inverse(product(tail.c));
  return gdbu_make(head.c, b, bm, tail.c, reps);
}

std::vector<RMat> TFnegPoint::rep() const {
  auto out = c;
  out[0] = bm * out[0];
  return out;
}

TFnegPoint canonicalize_tFneg(const std::vector<RMat>& ks) {
  if (ks.empty()) throw std::invalid_argument("empty tuple");
  int n = static_cast<int>(ks.size());
  TFnegPoint p;
  p.v.resize(n);
  p.c.resize(n);
  RMat b = RMat::identity(ks[0].rows);
  for (int i = n - 1; i >= 0; --i) {
    auto f = bruhat_factor_neg(ks[i] * b);
    p.v[i] = f.v;
    p.c[i] = f.c;
    b = f.bm;
  }
  p.bm = b;
  return p;
}

TFnegPoint canonicalize_tFneg_reps(const std::vector<RMat>& ks, const std::vector<Rep>& reps) {
  if (ks.size() != reps.size()) throw std::invalid_argument("representative count does not match arity");
  int n = static_cast<int>(ks.size());
  TFnegPoint p;
  p.v.resize(n);
  p.c.resize(n);
  RMat b = RMat::identity(ks.at(0).rows);
  for (int i = n - 1; i >= 0; --i) {
    RMat k = ks[i] * b;
    if (!in_big_cell(RMat(k * reps[i].minv)))
      throw WrongCell("factor " + std::to_string(i + 1) + " is not in the cell of its representative");
    auto f = factor_neg_rep<Rat>(k, reps[i].m, reps[i].minv);
    if (!in_C(f.c, reps[i].m))
      throw WrongCell("factor " + std::to_string(i + 1) + " is not in the cell of its representative");
    p.v[i] = reps[i].w;
    p.c[i] = f.c;
    b = f.bm;
  }
  p.bm = b;
  return p;
}

GmnPoint gmn_make(const std::vector<RMat>& gs, const std::vector<RMat>& ks) {
  if (product(gs) != product(ks)) throw ConstraintViolated("the two products differ");
  return {canonicalize_tFn(gs), canonicalize_tFneg(ks)};
}

GmnCells gmn_classify(const GmnPoint& pt) {
  if (product(pt.x.rep()) != product(pt.y.rep())) throw ConstraintViolated("the two products differ");
  return {pt.x.w, pt.y.v};
}

GmnPoint torus_act(const TorusElt& h, const GmnPoint& pt) {
  auto gs = pt.x.rep();
  auto ks = pt.y.rep();
  gs[0] = h.to_diag() * gs[0];
  ks[0] = h.to_diag() * ks[0];
  return {canonicalize_tFn(gs), canonicalize_tFneg(ks)};
}

GmnPoint calJ(const GdbuArrow& a) {
  auto gs = a.c;
  gs.back() = gs.back() * a.b;
  auto ks = a.cp;
  ks[0] = a.bm * ks[0];
  return gmn_make(gs, ks);
}

GdbuArrow calJ_inv(const GmnPoint& pt, const std::vector<Rep>& reps) {
  auto x = canon_in_cells(pt.x.rep(), reps);
  auto y = canonicalize_tFneg_reps(pt.y.rep(), reps);
  return gdbu_make(x.c, x.b, y.bm, y.c, reps);
}

GammaArrow iso_E(const GmnPoint& pt, const std::vector<Rep>& reps) { return iso_I(calJ_inv(pt, reps)); }

GmnPoint iso_E_inv(const GammaArrow& g, const std::vector<Rep>& reps) { return calJ(iso_I_inv(g, reps)); }

FnPoint guu_source(const GmnPoint& pt, const std::vector<Rep>& reps) { return gdbu_source(calJ_inv(pt, reps)); }
FnPoint guu_target(const GmnPoint& pt, const std::vector<Rep>& reps) { return gdbu_target(calJ_inv(pt, reps)); }
GmnPoint guu_unit(const FnPoint& f, const std::vector<Rep>& reps) { return calJ(gdbu_unit(f, reps)); }
GmnPoint guu_inverse(const GmnPoint& pt, const std::vector<Rep>& reps) {
  return calJ(gdbu_inverse(calJ_inv(pt, reps)));
}
GmnPoint guu_multiply(const GmnPoint& a, const GmnPoint& b, const std::vector<Rep>& reps) {
  return calJ(gdbu_multiply(calJ_inv(a, reps), calJ_inv(b, reps)));
}

GmnPoint r_t(const GmnPoint& pt, const TorusElt& t) {
  auto gs = pt.x.rep();
  auto ks = pt.y.rep();
  gs.back() = gs.back() * t.to_diag();
  ks.back() = ks.back() * t.to_diag();
  return {canonicalize_tFn(gs), canonicalize_tFneg(ks)};
}

TFnPoint piecewise_E(const TFnPoint& x, const TFnegPoint& y, const std::vector<Rep>& reps) {
  auto yy = canonicalize_tFneg_reps(y.rep(), reps);
  return canonicalize_tFn(cat(x.rep(), rev_inv(yy.c, 0, yy.c.size())));
}

GmnPoint piecewise_E_inv(const TFnPoint& g, int m, const std::vector<Rep>& reps) {
  auto gs = g.rep();
  if (m < 1 || m >= static_cast<int>(gs.size())) throw std::invalid_argument("bad split of the tuple");
  auto tail = canon_in_cells(rev_inv(gs, m, gs.size()), reps);
  std::vector<RMat> xs(gs.begin(), gs.begin() + m);
  xs.back() = xs.back() * inverse(tail.b);
  RMat bm = product(gs);
  if (!is_lower(bm)) throw ConstraintViolated("product of the tuple is not in B_-");
  auto ks = tail.c;
  ks[0] = bm * ks[0];
  GmnPoint pt{canonicalize_tFn(xs), canonicalize_tFneg(ks)};
  return pt;
}

FoTArrow K_map(const GmnPoint& pt, const std::vector<Rep>& reps) {
  return j_map(gamma_from_tfn(piecewise_E(pt.x, pt.y, reps)));
}

FoTArrow tfn_embed(const TFnPoint& x, const Rep& vdot) {
  auto gs = x.rep();
  RMat P = product(gs);
  if (!(bruhat_cell_neg(P) == vdot.w)) throw WrongCell("product is not in the expected B_- v B_- cell");
  gs.push_back(vdot.minv);
  return {canonicalize_Fn(gs), torus_part(P * vdot.minv)};
}

TFnPoint tfn_embed_inv(const FoTArrow& a, const Rep& vdot) {
  auto g = j_inv(a);
  return piecewise_E_inv(g.x, g.arity() - 1, {vdot}).x;
}

}  // namespace fpg
