#include "fpg/suites.hpp"

#include "fpg/poissonlab.hpp"
#include "fpg/samplers.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fpg {

void RunReport::check(bool ok, const std::string& what, const std::function<json()>& ctx) {
  if (ok) {
    ++passed;
    return;
  }
  ++failed;
  if (counterexample.is_null()) {
    counterexample = {{"check", what}};
    if (ctx) counterexample["data"] = ctx();
  }
}

void RunReport::merge(const RunReport& o) {
  passed += o.passed;
  failed += o.failed;
  if (counterexample.is_null() && !o.counterexample.is_null()) {
    counterexample = o.counterexample;
    counterexample["suite"] = o.suite;
  }
}

json RunReport::to_json() const {
  return {{"suite", suite},     {"property", property}, {"rank", cfg.rank},     {"n", cfg.n},
          {"seed", cfg.seed},   {"samples", cfg.samples}, {"passed", passed}, {"failed", failed},
          {"ok", ok()},         {"counterexample", counterexample}};
}

namespace {

RunReport start(const char* suite, const char* property, const SuiteConfig& c) {
  RunReport r;
  r.suite = suite;
  r.property = property;
  r.cfg = c;
  return r;
}

// a thrown exception counts as one failed check
template <class F> void guarded(RunReport& rep, const std::string& where, F f) {
  try {
    f();
  } catch (const std::exception& e) {
    rep.check(false, where + ": exception", [&] { return json(e.what()); });
  }
}

// resample while the drawn point falls outside a chart
template <class F> void in_domain(F f) {
  for (int tries = 0;; ++tries) {
    try {
      f();
      return;
    } catch (const NotInChartDomain&) {
      if (tries == 100) throw;
    }
  }
}

WeylElt random_nonidentity(Rng& rng, int r) {
  for (;;) {
    auto w = random_weyl(rng, r);
    if (!w.is_identity()) return w;
  }
}

std::vector<WeylElt> random_cells(Rng& rng, int r, int n) {
  std::vector<WeylElt> u;
  for (int i = 0; i < n; ++i) u.push_back(random_nonidentity(rng, r));
  return u;
}

std::vector<TorusElt> sign_group(int r) {
  std::vector<TorusElt> out;
  for (unsigned m = 0; m < (1u << r); ++m) {
    auto h = TorusElt::identity(r);
    for (int a = 0; a < r; ++a)
      if (m >> a & 1) h.vals[a] = -1;
    out.push_back(h);
  }
  return out;
}

// a (a^{-1})^w, a generator of T^w
TorusElt tw_element(const TorusElt& a, const WeylElt& w) { return a * torus_conjugate(a.inverse(), w); }

FnPoint sample_open(Rng& rng, const std::vector<WeylElt>& ws) {
  for (;;) {
    auto p = sample_cell_point(rng, ws);
    if (in_Owe(p)) return p;
  }
}

// n-tuples of Weyl elements with total length <= maxlen
std::vector<std::vector<WeylElt>> cell_tuples(int r, int n, int maxlen, bool allow_identity) {
  std::vector<std::vector<WeylElt>> out{{}};
  auto all = all_weyl(r);
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<WeylElt>> next;
    for (const auto& t : out) {
      int l = 0;
      for (const auto& w : t) l += w.length();
      for (const auto& w : all) {
        if (w.is_identity() && !allow_identity) continue;
        if (l + w.length() > maxlen) continue;
        auto t2 = t;
        t2.push_back(w);
        next.push_back(t2);
      }
    }
    out = next;
  }
  return out;
}

json cells_json(const std::vector<WeylElt>& ws) { return to_json(ws); }

json mats_ctx(const std::vector<RMat>& gs) { return to_json(gs); }

}  // namespace

RunReport verify_groupoid_axioms(const SuiteConfig& c) {
  auto rep = start("groupoid-axioms", "unit, inverse and associativity laws of the flag groupoid", c);
  Rng rng(c.seed);
  for (int k = 0; k < c.samples; ++k)
    guarded(rep, "sample " + std::to_string(k), [&] {
      auto g = sample_gamma(rng, c.rank, 2 * c.n);
      auto h = sample_gamma_from(rng, target(g));
      auto l = sample_gamma_from(rng, target(h));
      auto ctx = [&] { return json{{"g", to_json(g)}, {"h", to_json(h)}, {"l", to_json(l)}}; };
      auto s = source(g), t = target(g);
      rep.check(is_canonical(s) && is_canonical(t), "source and target are canonical", ctx);
      rep.check(source(unit(s)) == s && target(unit(s)) == s, "unit over its base point", ctx);
      rep.check(multiply(unit(s), g) == g, "left unit", ctx);
      rep.check(multiply(g, unit(t)) == g, "right unit", ctx);
      auto gi = inverse(g);
      rep.check(source(gi) == t && target(gi) == s, "inverse swaps source and target", ctx);
      rep.check(multiply(g, gi) == unit(s), "g g^-1 is the unit at the source", ctx);
      rep.check(multiply(gi, g) == unit(t), "g^-1 g is the unit at the target", ctx);
      rep.check(inverse(gi) == g, "inverse is an involution", ctx);
      auto gh = multiply(g, h);
      rep.check(source(gh) == s && target(gh) == target(h), "source and target of a product", ctx);
      rep.check(multiply(gh, l) == multiply(g, multiply(h, l)), "associativity", ctx);
    });
  return rep;
}

RunReport verify_models(const SuiteConfig& c) {
  auto rep = start("models", "model isomorphisms transport source, target, unit, inverse and multiplication", c);
  Rng rng(c.seed);
  int r = c.rank;
  for (int k = 0; k < c.samples; ++k) {
    guarded(rep, "flag and torus models, sample " + std::to_string(k), [&] {
      auto g = sample_gamma(rng, r, 2 * c.n);
      auto h = sample_gamma_from(rng, target(g));
      auto ctx = [&] { return json{{"g", to_json(g)}, {"h", to_json(h)}}; };
      auto s = source(g);
      // decorated flags
      auto a = to_C2n(g), b = to_C2n(h);
      rep.check(from_C2n(a) == g, "to_C2n round trip", ctx);
      rep.check(c2n_source(a) == flags_of(s), "to_C2n source", ctx);
      rep.check(c2n_target(a) == flags_of(target(g)), "to_C2n target", ctx);
      rep.check(c2n_unit(flags_of(s)) == to_C2n(unit(s)), "to_C2n unit", ctx);
      rep.check(c2n_inverse(a) == to_C2n(inverse(g)), "to_C2n inverse", ctx);
      rep.check(c2n_multiply(a, b) == to_C2n(multiply(g, h)), "to_C2n multiplication", ctx);
      // open part times torus
      auto x = j_map(g), y = j_map(h);
      rep.check(j_inv(x) == g, "j_map round trip", ctx);
      rep.check(fot_source(x) == s, "j_map source", ctx);
      rep.check(fot_target(x) == target(g), "j_map target", ctx);
      rep.check(fot_unit(s) == j_map(unit(s)), "j_map unit", ctx);
      rep.check(fot_inverse(x) == j_map(inverse(g)), "j_map inverse", ctx);
      rep.check(fot_multiply(x, y) == j_map(multiply(g, h)), "j_map multiplication", ctx);
    });
    guarded(rep, "double Bruhat models, sample " + std::to_string(k), [&] {
      auto u = random_cells(rng, r, c.n);
      auto reps = bar_reps(u);
      // (c, b, b_-, c') model
      auto g = sample_gamma_uu(rng, u);
      auto h = sample_gamma_uu_from(rng, target(g), reps);
      auto ctx = [&] { return json{{"u", cells_json(u)}, {"g", to_json(g)}, {"h", to_json(h)}}; };
      auto a = iso_I_inv(g, reps), b = iso_I_inv(h, reps);
      rep.check(iso_I(a) == g, "iso_I round trip", ctx);
      rep.check(gdbu_source(a) == source(g), "iso_I source", ctx);
      rep.check(gdbu_target(a) == target(g), "iso_I target", ctx);
      rep.check(iso_I(gdbu_unit(source(g), reps)) == unit(source(g)), "iso_I unit", ctx);
      rep.check(iso_I(gdbu_inverse(a)) == inverse(g), "iso_I inverse", ctx);
      rep.check(iso_I(gdbu_multiply(a, b)) == multiply(g, h), "iso_I multiplication", ctx);
      // double Bruhat cell G^{u,u}
      auto x = sample_guv(rng, u, u);
      auto ge = iso_E(x, reps);
      auto y = iso_E_inv(sample_gamma_uu_from(rng, target(ge), reps), reps);
      auto ctx2 = [&] { return json{{"u", cells_json(u)}, {"x", to_json(x)}, {"y", to_json(y)}}; };
      rep.check(iso_E_inv(ge, reps) == x, "iso_E round trip", ctx2);
      rep.check(guu_source(x, reps) == source(ge), "iso_E source", ctx2);
      rep.check(guu_target(x, reps) == target(ge), "iso_E target", ctx2);
      rep.check(iso_E(guu_unit(source(ge), reps), reps) == unit(source(ge)), "iso_E unit", ctx2);
      rep.check(iso_E(guu_inverse(x, reps), reps) == inverse(ge), "iso_E inverse", ctx2);
      rep.check(iso_E(guu_multiply(x, y, reps), reps) == multiply(ge, iso_E(y, reps)), "iso_E multiplication", ctx2);
    });
  }
  return rep;
}

// every chart: a sequence of reduced words, one per factor, with total length <= maxlen
static std::vector<BSChart> all_charts(int r, int maxlen) {
  std::vector<std::vector<int>> words;
  for (const auto& w : all_weyl(r))
    if (!w.is_identity())
      for (const auto& word : reduced_words(w)) words.push_back(word);
  std::vector<BSChart> out, frontier;
  BSChart empty;
  empty.rank = r;
  frontier.push_back(empty);
  while (!frontier.empty()) {
    std::vector<BSChart> next;
    for (const auto& ch : frontier)
      for (const auto& w : words) {
        if (ch.length() + static_cast<int>(w.size()) > maxlen) continue;
        auto c2 = ch;
        c2.blocks.push_back(w);
        out.push_back(c2);
        next.push_back(c2);
      }
    frontier = std::move(next);
  }
  return out;
}

RunReport verify_lusztig(const SuiteConfig& c) {
  auto rep = start("lusztig", "Lusztig chart inversion recovers the parameters for every reduced-word chart", c);
  Rng rng(c.seed);
  int maxlen = c.rank <= 2 ? 6 : 4;
  std::set<int> kinds;
  for (const auto& ch : all_charts(c.rank, maxlen)) {
    int L = ch.length();
    for (int j = 0; j < L; ++j)
      for (int i = 0; i < j; ++i) kinds.insert(r_exponent(ch, i, j).kind);
    for (int k = 0; k < c.samples; ++k)
      guarded(rep, "chart " + ch.str(), [&] {
        std::vector<Rat> eps;
        for (int i = 0; i < L; ++i) eps.push_back(rng.nonzero());
        auto ctx = [&] {
          json e = json::array();
          for (const auto& x : eps) e.push_back(to_json(x));
          return json{{"chart", to_json(ch)}, {"eps", e}};
        };
        auto p = lusztig_chart(ch, eps);
        rep.check(p.w == ch.cells(), "chart point lies in its cell", ctx);
        rep.check(in_Ow_phi(ch, p), "chart point has nonvanishing prefix minors", ctx);
        auto back = invert_lusztig(ch, p);
        rep.check(back == eps, "inversion recovers the parameters", ctx);
        rep.check(lusztig_chart(ch, back) == p, "chart after inversion is the identity", ctx);
        rep.check(canonicalize_Fn(lusztig_factors(ch, back)) == p, "recomposed factors give the same point", ctx);
      });
  }
  // the three exponent cases all occur (rank one has no distinct letters)
  std::set<int> need = c.rank == 1 ? std::set<int>{0, 2} : std::set<int>{0, 1, 2};
  rep.check(kinds == need, "all exponent cases are exercised", [&] { return json(std::vector<int>(kinds.begin(), kinds.end())); });
  return rep;
}

RunReport verify_poisson_maps(const SuiteConfig& c) {
  auto rep = start("poisson-maps", "structure maps are Poisson; each corrupted map fails", c);
  Rng rng(c.seed);
  int r = c.rank, n = c.n;
  auto both = [&](const std::string& what, bool faithful, bool control, const std::function<json()>& ctx) {
    rep.check(faithful, what, ctx);
    rep.check(!control, what + " (negative control)", ctx);
  };
  for (int k = 0; k < c.samples; ++k) {
    guarded(rep, "multiplicativity", [&] {
      RMat g = generic_sl(rng, r), h = generic_sl(rng, r);
      both("multiplicativity of the standard structure", multiplicativity_check(g, h),
           multiplicativity_check(g, h, Variant::Control), [&] { return mats_ctx({g, h}); });
    });
    guarded(rep, "J_n", [&] {
      auto gs = sample_gamma_rep(rng, r, n);
      both("J_n is Poisson", check_Jn(gs).ok, check_Jn(gs, Variant::Control).ok, [&] { return mats_ctx(gs); });
    });
    guarded(rep, "prefix maps", [&] {
      std::vector<RMat> gs;
      for (int i = 0; i <= n; ++i) gs.push_back(generic_sl(rng, r));
      auto ctx = [&] { return mats_ctx(gs); };
      for (int m = 1; m <= n; ++m)
        both("splitting map onto a mixed product, m = " + std::to_string(m), check_theta_mn(gs, m).ok,
             check_theta_mn(gs, m, Variant::Control).ok, ctx);
      both("splitting off the last factor onto the standard group", check_theta_tilde(gs).ok,
           check_theta_tilde(gs, Variant::Control).ok, ctx);
      both("prefix products onto B^n", check_opi(gs).ok, check_opi(gs, Variant::Control).ok, ctx);
      std::vector<RMat> two = {gs[0], gs[1]};
      both("decorated flag mixed product", check_hpi_mix(two).ok, check_hpi_mix(two, Variant::Control).ok, ctx);
    });
    guarded(rep, "generalized double Bruhat maps", [&] {
      auto v = random_weyl(rng, r);
      Rep vd = Rep::with_torus(v, random_torus(rng, r));
      std::vector<RMat> gs;
      for (int i = 0; i < n; ++i) gs.push_back(generic_sl(rng, r));
      RMat kk = sample_in_neg_cell(rng, vd);
      auto ctx = [&] { return json{{"g", mats_ctx(gs)}, {"k", to_json(kk)}, {"v", to_json(v)}, {"vdot", to_json(vd.m)}}; };
      rep.check(check_Ev(gs, kk, vd).ok, "E_{m,v} is Poisson", ctx);
      // the mixed term vanishes identically when v = e
      if (!v.is_identity()) rep.check(!check_Ev(gs, kk, vd, Variant::Control).ok, "E_{m,v} is Poisson (negative control)", ctx);
      RMat P = RMat::identity(r + 1);
      for (int i = 0; i + 1 < n; ++i) P = P * gs[i];
      gs.back() = inverse(P) * kk;
      both("J o E_{m,v} is Poisson", check_JEv(gs, vd).ok, check_JEv(gs, vd, Variant::Control).ok, ctx);
      both("J_{n,v} on decorated flags is Poisson", check_tFn1(gs, vd).ok, check_tFn1(gs, vd, Variant::Control).ok, ctx);
    });
  }
  return rep;
}

RunReport verify_coisotropy(const SuiteConfig& c) {
  auto rep = start("coisotropy", "the graph of multiplication is coisotropic in pi x pi x (-pi)", c);
  Rng rng(c.seed);
  for (int k = 0; k < c.samples; ++k)
    guarded(rep, "sample " + std::to_string(k), [&] {
      auto p = sample_composable(rng, c.rank, c.n);
      auto ctx = [&] { return json{{"x", mats_ctx(p.x)}, {"y", mats_ctx(p.y)}, {"z", mats_ctx(p.z)}}; };
      rep.check(coisotropic_multiplication(p.x, p.y, p.z), "graph is coisotropic", ctx);
      rep.check(!coisotropic_multiplication(p.x, p.y, p.z, Variant::Control), "graph is coisotropic (negative control)", ctx);
    });
  return rep;
}

RunReport verify_jacobi(const SuiteConfig& c) {
  auto rep = start("jacobi", "Schouten bracket of each bivector with itself vanishes", c);
  Rng rng(c.seed);
  int r = c.rank, n = c.n;
  auto ch = entries_chart(r);
  auto pc = product_entries_chart(r);
  for (int k = 0; k < c.samples; ++k) {
    guarded(rep, "standard structure", [&] {
      in_domain([&] {
        RMat g = generic_sl(rng, r);
        auto z = ch.coords({g});
        bool ok = jacobi_check(ch, pist_up(r, 0), z), control = jacobi_check(ch, lambda_left_up(r, 0), z);
        auto ctx = [&] { return mats_ctx({g}); };
        rep.check(ok, "standard structure on matrix entries", ctx);
        rep.check(!control, "standard structure (negative control)", ctx);
      });
    });
    guarded(rep, "torus extension", [&] {
      auto u = random_cells(rng, r, n);
      BSChart bs = BSChart::lex(u);
      auto chart = bs_torus_chart(bs);
      in_domain([&] {
        std::vector<Rat> z;
        for (int i = 0; i < bs.length(); ++i) z.push_back(rng.nonzero());
        auto b = pin_bow0_bs(bs, z, random_torus(rng, r));
        bool ok = jacobi_check(chart, pin_bow0_up(r, n), b.point);
        rep.check(ok, "torus extension on Bott-Samelson charts",
                  [&] { return json{{"chart", to_json(bs)}, {"point", to_json(b.point)}}; });
      });
    });
    guarded(rep, "product structure", [&] {
      in_domain([&] {
        RMat g = generic_sl(rng, r), h = generic_sl(rng, r);
        auto zz = pc.coords({g, h});
        bool ok = jacobi_check(pc, tpi_mn_up(r, 1, 1), zz), control = jacobi_check(pc, tpi_mn_up(r, 1, 1, -1), zz);
        auto ctx = [&] { return mats_ctx({g, h}); };
        rep.check(ok, "mixed product structure on G x G", ctx);
        rep.check(!control, "mixed product structure (negative control)", ctx);
      });
    });
  }
  // torus term on the wrong side; fails on a fixed chart where the flag part moves the torus weights
  guarded(rep, "torus extension control", [&] {
    std::vector<WeylElt> ws = {WeylElt::longest(r), WeylElt::simple(r, r - 1)};
    BSChart bs = BSChart::lex(ws);
    auto chart = bs_torus_chart(bs);
    UpBivector wrong = pist_slots(r, 0, 2);
    wrong += torus_term(r, {0, true, 1}, {2, true, 1});
    in_domain([&] {
      std::vector<Rat> z;
      for (int i = 0; i < bs.length(); ++i) z.push_back(rng.nonzero());
      auto b = pin_bow0_bs(bs, z, random_torus(rng, r));
      bool control = jacobi_check(chart, wrong, b.point);
      rep.check(!control, "torus extension (negative control)",
                [&] { return json{{"chart", to_json(bs)}, {"point", to_json(b.point)}}; });
    });
  });
  return rep;
}

RunReport verify_leaves(const SuiteConfig& c) {
  auto rep = start("leaves", "leaf dimensions, stabilizers, covering fibers and the leaf through the units", c);
  Rng rng(c.seed);
  int r = c.rank;
  int points = std::max(1, c.samples / 10);
  for (const auto& ws : cell_tuples(r, c.n, 4, true)) {
    auto reps = bar_reps(ws);
    auto ss = supp_sets(ws);
    auto w = weyl_product(ws, r);
    BSChart bs = BSChart::lex(ws);
    for (int k = 0; k < points; ++k)
      guarded(rep, "cells " + bs.str(), [&] {
        auto ctxw = [&] { return json{{"cells", cells_json(ws)}}; };
        // rank at a totally positive point
        std::vector<Rat> eps;
        for (int i = 0; i < bs.length(); ++i) eps.push_back(rng.positive());
        auto q = lusztig_chart(bs, eps);
        auto t0 = random_torus(rng, r);
        int rk = bivector_rank(pin_bow0_bs(bs, bs_coords(q, bs), t0));
        rep.check(rk == leaf_dim(ws), "bivector rank equals the leaf dimension", ctxw);
        // stabilizer law
        auto p = sample_open(rng, ws);
        auto t = random_torus(rng, r);
        auto ctx = [&] { return json{{"cells", cells_json(ws)}, {"p", to_json(p)}, {"t", to_json(t)}}; };
        for (const auto& s : sign_group(r)) {
          auto [sp, st] = torus_act(s, p, t);
          rep.check(same_leaf(p, t, sp, st, reps) == stab_member(s, ws), "sign twists stay on the leaf iff in Stab", ctx);
        }
        auto g = tw_element(random_torus(rng, r), w);
        auto [gp, gt] = torus_act(g, p, t);
        rep.check(stab_member(g, ws) && same_leaf(p, t, gp, gt, reps), "T^w preserves the leaf", ctx);
        auto h = random_torus(rng, r);
        auto [hp, ht] = torus_act(h, p, t);
        rep.check(same_leaf(p, t, hp, ht, reps) == stab_member(h, ws), "torus action preserves the leaf iff in Stab", ctx);
        // sign twists of t on supp^o separate leaves
        for (const auto& s : sign_group(r)) {
          bool on_supp0 = true;
          for (int a = 0; a < r; ++a)
            if (s.vals[a] != 1) on_supp0 = on_supp0 && std::count(ss.supp0.begin(), ss.supp0.end(), a) > 0;
          if (!on_supp0) continue;
          rep.check(same_leaf(p, t, p, t * s, reps) == (s == TorusElt::identity(r)), "twists on supp^o separate leaves", ctx);
        }
        // covering fiber over a square
        auto y = random_torus(rng, r);
        for (int a : ss.supp0) y.vals[a] = 1;
        auto tp = tau(p) * y.inverse() * y.inverse();
        auto fib = cover_fiber(p, tp, reps);
        rep.check(fib.size() == (std::size_t{1} << ss.supp.size()), "covering fiber has 2^|supp| points", ctx);
        for (const auto& f : fib) {
          auto fi = f.inverse();
          rep.check(fi * fi * tau(p) == tp, "covering fiber points square to the target", ctx);
        }
      });
  }
  // the leaf through the units of Gamma^{(u,u^{-1})}
  std::vector<std::vector<WeylElt>> us;
  if (r == 1) us = {{WeylElt::simple(1, 0)}, {WeylElt::simple(1, 0), WeylElt::simple(1, 0)}};
  else
    us = {{WeylElt::simple(r, 0)},
          {WeylElt::simple(r, 0), WeylElt::simple(r, 1)},
          {weyl_mul(WeylElt::simple(r, 0), WeylElt::simple(r, 1))}};
  for (const auto& u : us) {
    auto ch = BSChart::lex(u);
    for (int k = 0; k < c.samples; ++k)
      guarded(rep, "units leaf " + ch.str(), [&] {
        auto f = sample_cell_point(rng, u);
        auto head = sample_square_params(rng, ch.length());
        auto g2 = sample_lambda_uu(rng, u, head);
        auto g3 = sample_lambda_uu(rng, u, head);
        auto ctx = [&] { return json{{"u", cells_json(u)}, {"g", to_json(g2)}, {"h", to_json(g3)}}; };
        rep.check(lambda_uu_member(unit(f), u), "units lie on the leaf", ctx);
        rep.check(lambda_uu_member(g2, u) && lambda_uu_member(g3, u), "sampled arrows lie on the leaf", ctx);
        auto a = inverse(g3);
        rep.check(lambda_uu_member(a, u), "leaf is closed under inverse", ctx);
        rep.check(lambda_uu_member(multiply(a, g2), u), "leaf is closed under multiplication", ctx);
        rep.check(lambda_uu_member_alt(multiply(a, g2), u), "closure agrees with the second description", ctx);
      });
  }
  return rep;
}

RunReport verify_identities(const SuiteConfig& c) {
  auto rep = start("identities", "SL2 relation, minor invariance, wbar word independence, tau equivariance", c);
  Rng rng(c.seed);
  int r = c.rank;
  for (int k = 0; k < c.samples; ++k)
    guarded(rep, "SL2", [&] {
      int i = static_cast<int>(rng.integer(0, r - 1));
      Rat z = rng.nonzero();
      rep.check(sl2_identity_check(r, i, z), "x_-(z) = x(1/z) sbar z^coroot x(1/z)",
                [&] { return json{{"i", i + 1}, {"z", to_json(z)}}; });
    });
  for (int k = 0; k < c.samples; ++k)
    guarded(rep, "minors", [&] {
      RMat g = random_sl(rng, r);
      for (int a = 0; a < r; ++a)
        for (int a2 = 0; a2 < r; ++a2) {
          if (a == a2) continue;
          Rat z = rng.rat();
          RMat h = g * bs_factor<Rat>(r, a2, z);
          rep.check(principal_minor(a, h) == principal_minor(a, g), "principal minor invariant under x(z) sbar",
                    [&] { return json{{"g", to_json(g)}, {"alpha", a + 1}, {"alpha'", a2 + 1}, {"z", to_json(z)}}; });
        }
    });
  for (const auto& w : all_weyl(r)) {
    RMat m = wbar(w);
    for (const auto& word : reduced_words(w))
      rep.check(wbar_word(r, word) == m, "wbar does not depend on the reduced word", [&] {
        json wd = json::array();
        for (int i : word) wd.push_back(i + 1);
        return wd;
      });
  }
  for (const auto& ws : cell_tuples(r, c.n, 4, false)) {
    auto ch = BSChart::lex(ws);
    auto w = weyl_product(ws, r);
    auto ss = supp_sets(ws);
    for (int k = 0; k < c.samples; ++k)
      guarded(rep, "tau " + ch.str(), [&] {
        auto p = sample_open(rng, ws);
        TorusElt h = random_torus(rng, r);
        TorusElt t = tau(p);
        auto ctx = [&] { return json{{"p", to_json(p)}, {"h", to_json(h)}}; };
        bool ones = true;
        for (int a : ss.supp0) ones = ones && t.vals[a] == 1;
        rep.check(ones, "tau is one on supp^o", ctx);
        rep.check(tau(torus_act(h, p)) == h * torus_conjugate(h.inverse(), w) * t, "tau is torus equivariant", ctx);
      });
  }
  return rep;
}

std::vector<std::string> suite_names() {
  return {"groupoid-axioms", "models", "lusztig", "poisson-maps", "coisotropy", "jacobi", "leaves", "identities"};
}

RunReport run_suite(const std::string& name, const SuiteConfig& c) {
  static const std::map<std::string, RunReport (*)(const SuiteConfig&)> table = {
      {"groupoid-axioms", verify_groupoid_axioms}, {"models", verify_models},   {"lusztig", verify_lusztig},
      {"poisson-maps", verify_poisson_maps},       {"coisotropy", verify_coisotropy}, {"jacobi", verify_jacobi},
      {"leaves", verify_leaves},                   {"identities", verify_identities}};
  if (name == "all") {
    auto rep = start("all", "every suite", c);
    for (const auto& s : suite_names()) rep.merge(table.at(s)(c));
    return rep;
  }
  auto it = table.find(name);
  if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
  return it->second(c);
}

}  // namespace fpg
