#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fpg/leaves.hpp"
#include "fpg/samplers.hpp"
#include "oracle.hpp"

using namespace fpg;

static WeylElt W(int r, std::vector<int> w1) {
  for (auto& i : w1) --i;
  return WeylElt::from_word(r, w1);
}

// a (a^{-1})^w through permutation matrices
static TorusElt tw_generator(const TorusElt& a, const WeylElt& w) {
  RMat P = oracle::perm_matrix(w.perm());
  RMat A = a.to_diag();
  return TorusElt::from_diag(A * transpose(P) * inverse(A) * P);
}

static std::vector<TorusElt> sign_group(int r) {
  std::vector<TorusElt> out;
  for (unsigned m = 0; m < (1u << r); ++m) {
    auto h = TorusElt::identity(r);
    for (int a = 0; a < r; ++a)
      if (m >> a & 1) h.vals[a] = -1;
    out.push_back(h);
  }
  return out;
}

static FnPoint sample_open(Rng& rng, const std::vector<WeylElt>& ws) {
  for (;;) {
    auto p = sample_cell_point(rng, ws);
    if (in_Owe(p)) return p;
  }
}

TEST_CASE("torus subgroup membership") {
  Rng rng(7);
  for (int r : {1, 2, 3})
    for (const auto& w : all_weyl(r)) {
      auto e = TorusElt::identity(r);
      CHECK(in_Tw(e, w));
      CHECK(in_Ttilde(e, {w}));
      for (int k = 0; k < 50; ++k) {
        auto a = random_torus(rng, r);
        CHECK(in_Tw(tw_generator(a, w), w));
      }
    }
  // (A2) w = (s1): supp^o = {alpha_2}
  auto t = TorusElt({Rat(3), Rat(2)});
  CHECK_FALSE(in_Ttilde(t, {W(2, {1})}));
  CHECK(in_Ttilde(TorusElt({Rat(3), Rat(1)}), {W(2, {1})}));
  CHECK_FALSE(in_Tw(t, W(2, {1})));
  // a Coxeter element fixes no weight, so T^w = T
  CHECK(ann_Tw(W(2, {1, 2})).rank() == 0);
  CHECK(in_Tw(t, W(2, {1, 2})));
}

TEST_CASE("T^{u,v} lattice transport agrees with pullback") {
  Rng rng(8);
  for (const auto& u : all_weyl(2))
    for (const auto& v : all_weyl(2)) {
      auto ann = ann_Tuv(u, v);
      for (int k = 0; k < 10; ++k) {
        auto a = random_torus(rng, 2);
        // (a^{-1})^u a^v via matrices
        RMat U = oracle::perm_matrix(u.perm()), V = oracle::perm_matrix(v.perm());
        RMat A = a.to_diag();
        auto g = TorusElt::from_diag(transpose(U) * inverse(A) * U * transpose(V) * A * V);
        CHECK(in_Tuv(g, u, v));
        CHECK(in_subgroup(g, ann));
        auto t = random_torus(rng, 2);
        CHECK(in_Tuv(t, u, v) == in_subgroup(t, ann));
      }
    }
}

TEST_CASE("leaf dimensions") {
  CHECK(leaf_dim({WeylElt(2), WeylElt(2)}) == 0);
  CHECK(leaf_dim({W(1, {1})}) == 2);
  CHECK(leaf_dim({W(2, {1, 2}), W(2, {2, 1})}) == 4);
  CHECK(leaf_dim({W(2, {1, 2}), W(2, {1, 2})}) == 4 + 2);
  // dim Im(1-w) = (r+1) - number of cycles
  for (int r : {1, 2, 3})
    for (const auto& w : all_weyl(r)) {
      std::vector<bool> seen(r + 1, false);
      int cycles = 0;
      for (int k = 0; k <= r; ++k) {
        if (seen[k]) continue;
        ++cycles;
        for (int j = k; !seen[j]; j = w.perm()[j]) seen[j] = true;
      }
      CHECK(leaf_dim({w}) == w.length() + r + 1 - cycles);
    }
}

TEST_CASE("mu and same_leaf on O_e x T") {
  Rng rng(11);
  for (auto ws : std::vector<std::vector<WeylElt>>{{W(1, {1})}, {W(2, {1})}, {W(2, {1, 2})}, {W(2, {1}), W(2, {2})},
                                                    {W(2, {1, 2, 1})}, {W(2, {1}), W(2, {1})}}) {
    auto reps = bar_reps(ws);
    auto prod = weyl_product(ws, ws[0].rank());
    int r = ws[0].rank();
    for (int k = 0; k < 10; ++k) {
      auto p = sample_open(rng, ws);
      auto t = random_torus(rng, r);
      // unit image: t = e
      CHECK(mu(p, TorusElt::identity(r), reps) == TorusCoset{tau(p), ann_Tw(prod)});
      CHECK(same_leaf(p, t, p, t, reps));
      auto h = random_torus(rng, r);
      auto [hp, ht] = torus_act(h, p, t);
      auto m = mu(p, t, reps);
      auto hi = h.inverse();
      CHECK(mu(hp, ht, reps) == TorusCoset{hi * hi * m.rep, m.ann});
      // Stab law, exhaustively on the sign subgroup
      for (const auto& s : sign_group(r)) {
        auto [sp, st] = torus_act(s, p, t);
        CHECK(same_leaf(p, t, sp, st, reps) == stab_member(s, ws));
        // twisting t by the sign subgroup on supp^o separates level sets
        bool on_supp0 = true;
        for (int a = 0; a < r; ++a)
          if (s.vals[a] != 1) {
            bool in0 = false;
            for (int b : supp_sets(ws).supp0) in0 = in0 || a == b;
            on_supp0 = on_supp0 && in0;
          }
        if (on_supp0) CHECK(same_leaf(p, t, p, t * s, reps) == (s == TorusElt::identity(r)));
      }
      // continuous stabilizer directions: h in T^w is in Stab
      auto g = tw_generator(random_torus(rng, r), prod);
      CHECK(stab_member(g, ws));
      auto [gp, gt] = torus_act(g, p, t);
      CHECK(same_leaf(p, t, gp, gt, reps));
      CHECK(same_leaf(p, t, hp, ht, reps) == stab_member(h, ws));
    }
  }
  Rng r2(3);
  auto p = sample_open(r2, {W(2, {1})});
  auto q = sample_open(r2, {W(2, {2})});
  CHECK_THROWS_AS(same_leaf(p, TorusElt::identity(2), q, TorusElt::identity(2), bar_reps({W(2, {1})})), CellMismatch);
}

TEST_CASE("covering fibers") {
  // A1, w = (s): tau = z for c = x(z) sbar
  auto ch = BSChart::lex({W(1, {1})});
  auto p = bs_param(ch, {Rat(9)});
  CHECK(tau(p).vals[0] == 9);
  auto f = cover_fiber(p, TorusElt::identity(1), bar_reps({W(1, {1})}));
  REQUIRE(f.size() == 2);
  CHECK(f[0].vals[0] == 3);
  CHECK(f[1].vals[0] == -3);
  auto p2 = bs_param(ch, {Rat(2)});
  try {
    cover_fiber(p2, TorusElt::identity(1), bar_reps({W(1, {1})}));
    CHECK(false);
  } catch (const NoRationalSqrt& e) {
    CHECK(e.coord == 0);
    CHECK(e.value == 2);
  }
  Rng rng(12);
  for (auto ws : std::vector<std::vector<WeylElt>>{{W(2, {1})}, {W(2, {1, 2})}, {W(2, {1}), W(2, {2})}, {W(2, {2, 1})}}) {
    auto reps = bar_reps(ws);
    auto ss = supp_sets(ws);
    int r = 2;
    for (int k = 0; k < 10; ++k) {
      auto q = sample_open(rng, ws);
      auto y = random_torus(rng, r);
      for (int a : ss.supp0) y.vals[a] = 1;
      auto tp = tau(q) * y.inverse() * y.inverse();
      auto fib = cover_fiber(q, tp, reps);
      CHECK(fib.size() == (1u << ss.supp.size()));
      for (const auto& t : fib) {
        auto ti = t.inverse();
        CHECK(ti * ti * tau(q) == tp);
        CHECK(in_Ttilde(t, ws));
        for (const auto& t2 : fib) {
          auto d = t * t2.inverse();
          for (int a = 0; a < r; ++a) CHECK((d.vals[a] == 1 || d.vals[a] == -1));
          CHECK(in_Ttilde(d, ws));
        }
      }
    }
  }
  // representative whose torus offset is not a square on supp^o
  auto w = W(2, {1});
  auto rep = Rep::with_torus(w, TorusElt({Rat(1), Rat(2)}));
  Rng r3(5);
  auto q = sample_open(r3, {w});
  auto qq = canonicalize_tFn_reps(q.c, {rep}).flags();
  CHECK_THROWS_AS(cover_fiber(qq, TorusElt::identity(2), {rep}), NoRationalSqrt);
}

TEST_CASE("image descriptions of mu x delta and beta") {
  Rng rng(13);
  for (auto ws : std::vector<std::vector<WeylElt>>{{W(2, {1})}, {W(2, {1, 2})}, {W(2, {2}), W(2, {1})}, {W(1, {1})}}) {
    int r = ws[0].rank();
    auto prod = weyl_product(ws, r);
    for (int k = 0; k < 50; ++k) {
      std::vector<Rep> reps;
      for (const auto& w : ws) reps.push_back(k % 2 ? Rep::bar(w) : Rep::with_torus(w, random_torus(rng, r)));
      auto p0 = sample_open(rng, ws);
      auto p = canonicalize_tFn_reps(p0.c, reps).flags();
      auto t = random_torus(rng, r);
      auto md = mu_delta(p, t, reps);
      CHECK(xw_image_member(md.first.rep, md.second.rep, reps));
      CHECK(yw_image_member(md.first.rep.inverse(), md.second.rep, reps));
    }
    auto reps = bar_reps(ws);
    CHECK(xw_image_member(t_dot(reps), TorusElt::identity(r), reps));
    for (int k = 0; k < 10; ++k) {
      auto a = tw_generator(random_torus(rng, r), prod) * random_torus(rng, r);
      // make a^{-1} t_wdot a square on supp^o
      auto s = random_torus(rng, r);
      for (int c : supp_sets(ws).supp0) a.vals[c] = inv(s.vals[c] * s.vals[c]);
      auto fib = xw_fiber(a, reps);
      CHECK(fib.size() == (1u << supp_sets(ws).supp0.size()));
      for (std::size_t i = 0; i < fib.size(); ++i) {
        CHECK(xw_image_member(a, fib[i], reps));
        for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(delta(fib[i], ws) == delta(fib[j], ws));
      }
    }
  }
}

TEST_CASE("beta on Gamma^w") {
  Rng rng(14);
  for (int r : {1, 2})
    for (int n : {1, 2})
      for (int k = 0; k < 10; ++k) {
        auto g = sample_gamma(rng, r, 2 * n);
        auto reps = bar_reps(g.x.w);
        auto f = source(g);
        auto e = unit(f);
        // with (ubar, ubar^{-1}) representatives the unit has [b]_0 = e, b_- = I
        auto ur = uu_reps(f.w);
        auto be = beta(e, ur);
        auto id = TorusElt::identity(r);
        CHECK(diag_torus(canonicalize_tFn_reps(e.rep(), ur).b) == id);
        CHECK(be.first.contains(id));
        CHECK(be.second.contains(id));
        CHECK(lambda_member(e, ur));
        auto J = j_map(g);
        if (!in_Owe(J.p)) continue;
        auto b = beta(g, reps);
        auto md = mu_delta(J.p, J.t, reps);
        CHECK(b.first == TorusCoset{md.first.rep.inverse(), md.first.ann});
        CHECK(b.second == md.second);
        CHECK(yw_image_member(b.first.rep, b.second.rep, reps));
        for (const auto& h : sign_group(r)) {
          auto g2 = torus_act(h, g);
          auto J2 = j_map(g2);
          CHECK((beta(g, reps) == beta(g2, reps)) == same_leaf(J.p, J.t, J2.p, J2.t, reps));
        }
        auto h = random_torus(rng, r);
        auto g2 = torus_act(h, g);
        auto J2 = j_map(g2);
        CHECK((beta(g, reps) == beta(g2, reps)) == same_leaf(J.p, J.t, J2.p, J2.t, reps));
        auto b2 = beta(g2, reps);
        CHECK(b2.first == TorusCoset{h * h * b.first.rep, b.first.ann});
        CHECK(b2.second == TorusCoset{h * b.second.rep, b.second.ann});
      }
}

TEST_CASE("the leaf through the units of Gamma^{(u,u^{-1})}") {
  Rng rng(15);
  for (auto u : std::vector<std::vector<WeylElt>>{{W(2, {1})}, {W(2, {1}), W(2, {2})}, {W(2, {1, 2})}}) {
    auto ws = uu_cells(u);
    auto reps = uu_reps(u);
    int r = 2;
    auto ch = BSChart::lex(u);
    for (int k = 0; k < 100; ++k) {
      auto f = sample_cell_point(rng, u);
      CHECK(lambda_uu_member(unit(f), u));
      CHECK(lambda_uu_member_alt(unit(f), u));
      auto head = sample_square_params(rng, ch.length());
      auto g2 = sample_lambda_uu(rng, u, head);
      auto g3 = sample_lambda_uu(rng, u, head);
      CHECK(source(g2) == source(g3));
      CHECK(lambda_uu_member(g2, u));
      CHECK(lambda_uu_member_alt(g2, u));
      CHECK(lambda_member(g2, reps));
      auto a = inverse(g3);
      CHECK(lambda_uu_member(a, u));
      auto ab = multiply(a, g2);
      CHECK(lambda_uu_member(ab, u));
      CHECK(lambda_uu_member_alt(ab, u));
      auto h = random_torus(rng, r);
      auto hg = torus_act(h, g2);
      bool stab = stab_member(h, ws);
      CHECK(lambda_uu_member(hg, u) == stab);
      CHECK(lambda_uu_member_alt(hg, u) == stab);
      CHECK(lambda_member(hg, reps, h));
      for (const auto& s : sign_group(r)) CHECK(lambda_uu_member(torus_act(s, g2), u) == stab_member(s, ws));
    }
  }
  CHECK_THROWS_AS(lambda_uu_member(sample_gamma(rng, 2, 2), {W(2, {1})}), CellMismatch);
}

static std::vector<WeylElt> uvinv(const std::vector<WeylElt>& u, const std::vector<WeylElt>& v) {
  auto ws = u;
  for (auto it = v.rbegin(); it != v.rend(); ++it) ws.push_back(it->inverse());
  return ws;
}

static std::vector<WeylElt> cat(std::vector<WeylElt> a, const std::vector<WeylElt>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// k in Ttilde^{u,v} with k^2 in T^{u v^{-1}}
static bool twist_rule(const TorusElt& k, const std::vector<WeylElt>& u, const std::vector<WeylElt>& v) {
  int r = k.rank();
  auto w = weyl_mul(weyl_product(u, r), weyl_product(v, r).inverse());
  return in_Ttilde(k, cat(u, v)) && in_Tw(k * k, w);
}

static std::vector<TorusElt> twist_probes(Rng& rng, const std::vector<WeylElt>& u, const std::vector<WeylElt>& v) {
  int r = u[0].rank();
  auto w = weyl_mul(weyl_product(u, r), weyl_product(v, r).inverse());
  auto out = sign_group(r);
  for (int k = 0; k < 3; ++k) {
    out.push_back(tw_generator(random_torus(rng, r), w));
    out.push_back(random_torus(rng, r));
    out.push_back(tw_generator(random_torus(rng, r), w) * out[k % (1u << r)]);
  }
  return out;
}

static std::vector<std::pair<std::vector<WeylElt>, std::vector<WeylElt>>> uv_cases() {
  return {
      {{W(2, {1})}, {W(2, {2})}},
      {{W(2, {1, 2})}, {W(2, {1})}},
      {{W(2, {1}), W(2, {2})}, {W(2, {2})}},
      {{W(2, {1})}, {W(2, {1})}},
      {{W(2, {1, 2})}, {W(2, {2}), W(2, {1})}},
      {{W(1, {1})}, {W(1, {1})}},
  };
}

TEST_CASE("leaves of G^{u,v}") {
  Rng rng(16);
  for (const auto& [u, v] : uv_cases()) {
    int r = u[0].rank();
    auto ws = uvinv(u, v);
    CHECK(guv_leaf_dim(u, v) == leaf_dim(ws));
    auto vreps = dbar_reps(v);
    if (u.size() == 1 && v.size() == 1 && u[0] == v[0]) {
      // (ubar, ubar) has b = I and b_- = ubar overline{u^{-1}}, a sign
      RMat ub = wbar(u[0]);
      auto pt = gmn_make({ub}, {ub});
      RMat s = ub * wbar(u[0].inverse());
      CHECK(is_diagonal(s));
      CHECK(suv_member(pt) == (s == RMat::identity(r + 1)));
      CHECK(suv_member(pt, std::nullopt) == in_Tuv(diag_torus(s), u[0], v[0]));
    }
    for (int k = 0; k < 10; ++k) {
      auto [q, t] = sample_sigma(rng, ws);
      CHECK(sigma_member(q, t, bar_reps(ws)));
      auto pt = piecewise_E_inv(j_inv(FoTArrow{q, t}).x, static_cast<int>(u.size()), vreps);
      CHECK(tleaf_of(pt) == CellLabel{u, v});
      CHECK(suv_member(pt));
      auto K = K_map(pt, vreps);
      CHECK(K == FoTArrow{q, t});
      auto a1 = random_torus(rng, r);
      auto p1 = torus_act(a1, pt);
      CHECK(suv_member(p1, a1));
      auto c0 = chi(pt), c1 = chi(p1);
      auto a1u = torus_conjugate(a1, weyl_product(u, r));
      CHECK(c1.first == TorusCoset{a1u * a1u * c0.first.rep, c0.first.ann});
      CHECK(c1.second == TorusCoset{a1u * c0.second.rep, c0.second.ann});
      auto K1 = K_map(p1, vreps);
      CHECK(suv_member(p1) == sigma_member(K1.p, K1.t, bar_reps(ws)));
      for (const auto& kk : twist_probes(rng, u, v)) {
        auto p2 = torus_act(a1 * kk, pt);
        bool eq = chi(p1) == chi(p2);
        CHECK(eq == twist_rule(kk, u, v));
        auto K2 = K_map(p2, vreps);
        CHECK(eq == same_leaf(K1.p, K1.t, K2.p, K2.t, bar_reps(ws)));
        CHECK(suv_member(p2) == sigma_member(K2.p, K2.t, bar_reps(ws)));
      }
    }
  }
}

static TFnPoint torus_act_tfn(const TorusElt& h, const TFnPoint& x) {
  auto gs = x.rep();
  gs[0] = h.to_diag() * gs[0];
  return canonicalize_tFn(gs);
}

TEST_CASE("leaves of tF_n^{u,v}") {
  Rng rng(17);
  for (const auto& [u, vv] : uv_cases()) {
    if (vv.size() != 1) continue;
    const WeylElt& v = vv[0];
    int r = u[0].rank();
    auto ws = uvinv(u, vv);
    CHECK(tfn_leaf_dim(u, v) == leaf_dim(ws));
    auto vd = dbar_rep(v);
    for (int k = 0; k < 10; ++k) {
      auto [q, t] = sample_sigma(rng, ws);
      auto x = tfn_embed_inv(FoTArrow{q, t}, vd);
      CHECK(tleaf_of(x) == CellLabel{u, {v}});
      CHECK(tfn_leaf_member(x, u, v));
      CHECK(tfn_embed(x, vd) == FoTArrow{q, t});
      auto pt = gmn_make(x.rep(), {product(x.rep())});
      CHECK(tfn_chi(x, u, v) == chi(pt));
      auto a1 = random_torus(rng, r);
      auto x1 = torus_act_tfn(a1, x);
      CHECK(tfn_leaf_member(x1, u, v, a1));
      auto J1 = tfn_embed(x1, vd);
      CHECK(tfn_leaf_member(x1, u, v) == sigma_member(J1.p, J1.t, bar_reps(ws)));
      for (const auto& kk : twist_probes(rng, u, vv)) {
        auto x2 = torus_act_tfn(a1 * kk, x);
        bool eq = tfn_chi(x1, u, v) == tfn_chi(x2, u, v);
        CHECK(eq == twist_rule(kk, u, vv));
        auto J2 = tfn_embed(x2, vd);
        CHECK(eq == same_leaf(J1.p, J1.t, J2.p, J2.t, bar_reps(ws)));
      }
    }
  }
  Rng r2(4);
  auto x = sample_tFn(r2, 2, 1);
  CHECK_THROWS_AS(tfn_leaf_member(x, {W(2, {1})}, WeylElt(2)), CellMismatch);
}

TEST_CASE("T-leaf labels") {
  Rng rng(18);
  for (int k = 0; k < 10; ++k) {
    auto f = sample_Fn(rng, 2, 2);
    auto e = unit(f);
    std::vector<WeylElt> uu = f.w;
    uu.push_back(f.w[1].inverse());
    uu.push_back(f.w[0].inverse());
    CHECK(tleaf_of(e) == CellLabel{uu, {}});
    auto g = sample_gamma(rng, 2, 4);
    CHECK(tleaf_of(j_map(g)) == tleaf_of(g));
  }
  auto id = canonicalize_tFn({RMat::identity(3), RMat::identity(3)});
  CHECK(tleaf_of(id) == CellLabel{{WeylElt(2), WeylElt(2)}, {WeylElt(2)}});
}
