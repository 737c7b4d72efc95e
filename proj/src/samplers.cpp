#include "fpg/samplers.hpp"

namespace fpg {

std::vector<Rat> random_rats(Rng& rng, int k) {
  std::vector<Rat> v(k);
  for (auto& x : v) x = rng.rat();
  return v;
}

std::vector<Rat> random_nonzero(Rng& rng, int k) {
  std::vector<Rat> v(k);
  for (auto& x : v) x = rng.nonzero();
  return v;
}

WeylElt random_weyl(Rng& rng, int rank) {
  auto all = all_weyl(rank);
  return all[rng.integer(0, static_cast<long>(all.size()) - 1)];
}

FnPoint sample_cell_point(Rng& rng, const std::vector<WeylElt>& ws) {
  auto ch = BSChart::lex(ws);
  return bs_param(ch, random_rats(rng, ch.length()));
}

FnPoint sample_Fn(Rng& rng, int rank, int n) { return sample_tFn(rng, rank, n).flags(); }

TFnPoint sample_tFn(Rng& rng, int rank, int n) {
  std::vector<RMat> gs;
  for (int i = 0; i < n; ++i) gs.push_back(random_sl(rng, rank));
  return canonicalize_tFn(gs);
}

GammaArrow sample_gamma(Rng& rng, int rank, int arity) {
  std::vector<RMat> gs;
  for (int i = 0; i + 1 < arity; ++i) gs.push_back(random_sl(rng, rank));
  RMat P = gs.empty() ? RMat::identity(rank + 1) : product(gs);
  gs.push_back(inverse(P) * random_lower(rng, rank));
  return gamma_from_reps(gs);
}

GammaArrow sample_gamma_from(Rng& rng, const FnPoint& src) {
  int r = src.rank(), n = src.n();
  std::vector<RMat> gs = src.c;
  for (int i = 0; i + 1 < n; ++i) gs.push_back(random_sl(rng, r));
  gs.push_back(inverse(product(gs)) * random_lower(rng, r));
  return gamma_from_reps(gs);
}

static RMat neg_letters(Rng& rng, const WeylElt& w, bool positive) {
  int r = w.rank();
  RMat m = RMat::identity(r + 1);
  for (int a : w.word()) m = m * one_param<Rat>(r, positive, a, rng.nonzero());
  return m;
}

GmnPoint sample_guv(Rng& rng, const std::vector<WeylElt>& u, const std::vector<WeylElt>& v) {
  int r = u.at(0).rank();
  std::vector<RMat> a, k;
  for (const auto& w : u) a.push_back(neg_letters(rng, w, false));
  for (const auto& w : v) k.push_back(neg_letters(rng, w, true));
  RMat t = random_torus(rng, r).to_diag();
  RMat A = product(a), K = product(k);
  std::vector<RMat> gs = a, ks = k;
  gs.back() = gs.back() * K * t;
  ks.front() = A * ks.front();
  ks.back() = ks.back() * t;
  auto pt = gmn_make(gs, ks);
  return torus_act(random_torus(rng, r), pt);
}

GammaArrow sample_gamma_uu(Rng& rng, const std::vector<WeylElt>& u) {
  return iso_E(sample_guv(rng, u, u), bar_reps(u));
}

OppositeBruhat opposite_bruhat(const RMat& g) {
  int r = g.rows - 1;
  WeylElt w0 = WeylElt::longest(r);
  RMat W0 = wbar(w0);
  auto f = bruhat_factor_pos(inverse(W0) * g);
  RMat ub = wbar(f.u);
  RMat n = f.c * inverse(ub);
  OppositeBruhat out;
  out.w = weyl_mul(w0, f.u);
  out.nm = W0 * n * inverse(W0);
  out.wdot = W0 * ub;
  out.b = f.b;
  return out;
}

GammaArrow sample_gamma_uu_from(Rng& rng, const FnPoint& src, const std::vector<Rep>& reps) {
  int r = src.rank();
  std::vector<WeylElt> u;
  for (const auto& x : reps) u.push_back(x.w);
  auto cn = canonicalize_reps<Rat>(src.c, reps);
  for (std::size_t i = 0; i < cn.c.size(); ++i)
    if (!in_C(cn.c[i], reps[i].m)) throw WrongCell("source is not in the cell of the representatives");
  auto o1 = opposite_bruhat(product(cn.c));
  auto pt = sample_guv(rng, u, {o1.w});
  auto c2 = canonicalize_reps<Rat>(pt.x.rep(), reps).c;
  auto o2 = opposite_bruhat(product(c2));
  // h = t (I + X) in T (N_- cap wdot N wdot^{-1})
  const auto& p = o1.w.perm();
  std::vector<int> pinv(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) pinv[p[k]] = static_cast<int>(k);
  RMat h = RMat::identity(r + 1);
  for (int i = 0; i <= r; ++i)
    for (int j = 0; j < i; ++j)
      if (pinv[i] < pinv[j]) h(i, j) = rng.rat();
  h = random_torus(rng, r).to_diag() * h;
  RMat bm = o1.nm * h * inverse(o2.nm);
  RMat b = inverse(o1.b) * inverse(o1.wdot) * h * o1.wdot * o2.b;
  return iso_I(gdbu_make(cn.c, b, bm, c2, reps));
}

}  // namespace fpg
