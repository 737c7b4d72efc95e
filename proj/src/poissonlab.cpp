#include "fpg/poissonlab.hpp"

namespace fpg {

int UpBivector::index(const Dir& d) {
  for (std::size_t p = 0; p < dirs.size(); ++p)
    if (dirs[p].slot == d.slot && dirs[p].left == d.left && dirs[p].X == d.X) return static_cast<int>(p);
  dirs.push_back(d);
  return static_cast<int>(dirs.size()) - 1;
}

void UpBivector::add(const Dir& a, const Dir& b, const Rat& c) {
  if (sgn(c) == 0) return;
  int p = index(a), q = index(b);
  terms.push_back({p, q, c});
}

UpBivector& UpBivector::operator+=(const UpBivector& o) {
  for (const auto& t : o.terms) add(o.dirs[t.p], o.dirs[t.q], t.c);
  return *this;
}

RMat UpBivector::coefficients() const {
  int M = static_cast<int>(dirs.size());
  RMat C(M, M);
  for (const auto& t : terms) {
    C(t.p, t.q) += t.c;
    C(t.q, t.p) -= t.c;
  }
  return C;
}

UpBivector scaled(const UpBivector& b, const Rat& c) {
  UpBivector out = b;
  for (auto& t : out.terms) t.c *= c;
  return out;
}

RMat unit_matrix(int rank, int i, int j) {
  RMat m(rank + 1, rank + 1);
  m(i, j) = 1;
  return m;
}

std::vector<RMat> h_basis(int rank) {
  std::vector<RMat> hs;
  for (int a = 0; a < rank; ++a) hs.push_back(unit_matrix(rank, a, a) - unit_matrix(rank, a + 1, a + 1));
  return hs;
}

std::vector<RMat> h_dual(int rank) {
  RootSystem R(rank);
  auto hs = h_basis(rank);
  std::vector<RMat> out;
  for (int a = 0; a < rank; ++a) {
    RMat m(rank + 1, rank + 1);
    for (int b = 0; b < rank; ++b) m = m + scale(hs[b], Rat(R.cartan_inverse(a, b)));
    out.push_back(m);
  }
  return out;
}

DualBases dual_bases(int rank) {
  DualBases d;
  d.lower = h_basis(rank);
  d.upper = h_dual(rank);
  for (int i = 0; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) {
      d.lower.push_back(scale(unit_matrix(rank, j, i), Rat(2)));
      d.upper.push_back(unit_matrix(rank, i, j));
    }
  return d;
}

namespace {

UpBivector lambda_st(int rank, int slot, int left_sign, int right_sign) {
  UpBivector b;
  for (int i = 0; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) {
      RMat ep = unit_matrix(rank, i, j), em = unit_matrix(rank, j, i);
      b.add({slot, true, em}, {slot, true, ep}, Rat(left_sign));
      b.add({slot, false, em}, {slot, false, ep}, Rat(right_sign));
    }
  return b;
}

template <class S> Slots<Jet<S>> jet_slots(const Slots<S>& pt, const std::vector<Dir>& dirs) {
  using T = Jet<S>;
  std::size_t M = dirs.size();
  Slots<T> out;
  for (const auto& g : pt) {
    Mat<T> m(g.rows, g.cols);
    for (std::size_t k = 0; k < g.a.size(); ++k) m.a[k] = T(g.a[k], std::vector<S>(M, S(0)));
    out.push_back(std::move(m));
  }
  for (std::size_t p = 0; p < M; ++p) {
    const Dir& d = dirs[p];
    const Mat<S>& g = pt.at(d.slot);
    Mat<S> v = d.left ? g * lift<S>(d.X) : lift<S>(d.X) * g;
    for (std::size_t k = 0; k < v.a.size(); ++k) out[d.slot].a[k].d[p] = v.a[k];
  }
  return out;
}

template <class S> std::vector<std::vector<S>> jet_jacobian(const Slots<S>& pt, const std::vector<Dir>& dirs,
                                                          const CoordMap& coords) {
  std::vector<Jet<S>> vals;
  try {
    vals = coords.template eval<Jet<S>>(jet_slots(pt, dirs));
  } catch (const NotInChartDomain&) {
    throw;
  } catch (const std::domain_error& e) {
    throw NotInChartDomain(coords.name + ": " + e.what());
  }
  std::vector<std::vector<S>> K(vals.size(), std::vector<S>(dirs.size()));
  for (std::size_t a = 0; a < vals.size(); ++a)
    for (std::size_t p = 0; p < dirs.size(); ++p) K[a][p] = vals[a].deriv(p);
  return K;
}

template <class S> std::vector<S> lower_entries(const Mat<S>& L) {
  std::vector<S> out;
  for (int i = 0; i < L.rows; ++i)
    for (int j = 0; j < i; ++j) out.push_back(L(i, j));
  return out;
}

template <class S> void append(std::vector<S>& a, const std::vector<S>& b) { a.insert(a.end(), b.begin(), b.end()); }

template <class S> Slots<S> sub(const Slots<S>& gs, int first, int count) {
  if (first + count > static_cast<int>(gs.size())) throw std::invalid_argument("slot range out of bounds");
  return Slots<S>(gs.begin() + first, gs.begin() + first + count);
}

template <class S> Mat<S> prod(const Slots<S>& gs) {
  Mat<S> p = Mat<S>::identity(gs.at(0).rows);
  for (const auto& g : gs) p = p * g;
  return p;
}

template <class S> std::vector<S> torus_of(const std::vector<S>& d) { return std::vector<S>(d.begin(), d.end() - 1); }

template <class S> Mat<S> diag_of_first(const std::vector<S>& t) {
  std::vector<S> d = t;
  S p(1);
  for (const auto& x : t) p = p * x;
  d.push_back(inv(p));
  return diag(d);
}

// first r entries of [g]_0, squared when asked
template <class S> std::vector<S> torus_part_coords(const Mat<S>& g, bool squared) {
  auto d = torus_of(gauss_decompose(g).d);
  if (squared)
    for (auto& x : d) x = x * x;
  return d;
}

std::vector<Rep> reps_of(const std::vector<RMat>& gs) { return cell_reps(gs); }

int slots_rank(const std::vector<RMat>& gs) { return gs.at(0).rows - 1; }

}  // namespace

UpBivector pist_up(int rank, int slot) { return lambda_st(rank, slot, 1, -1); }
UpBivector lambda_sum_up(int rank, int slot) { return lambda_st(rank, slot, 1, 1); }
UpBivector lambda_left_up(int rank, int slot) { return lambda_st(rank, slot, 1, 0); }

UpBivector pist_slots(int rank, int first, int count) {
  UpBivector b;
  for (int s = first; s < first + count; ++s) b += pist_up(rank, s);
  return b;
}

UpBivector pairing_term(int rank, const Kind& v, const Kind& w, const Rat& c) {
  auto db = dual_bases(rank);
  UpBivector b;
  for (std::size_t i = 0; i < db.lower.size(); ++i)
    b.add({v.slot, v.left, db.upper[i]}, {w.slot, w.left, db.lower[i]}, c * v.sign * w.sign);
  return b;
}

UpBivector torus_term(int rank, const Kind& v, const Kind& w, const Rat& c) {
  auto hs = h_basis(rank), hd = h_dual(rank);
  UpBivector b;
  for (int a = 0; a < rank; ++a) b.add({v.slot, v.left, hd[a]}, {w.slot, w.left, hs[a]}, c * v.sign * w.sign);
  return b;
}

template <class S> Mat<S> pushforward(const Slots<S>& pt, const UpBivector& up, const CoordMap& coords) {
  auto K = jet_jacobian(pt, up.dirs, coords);
  int d = static_cast<int>(K.size());
  Mat<S> P(d, d);
  for (const auto& t : up.terms) {
    S c(t.c);
    for (int a = 0; a < d; ++a) {
      const S& kap = K[a][t.p];
      const S& kaq = K[a][t.q];
      if (is_zero_exact(kap) && is_zero_exact(kaq)) continue;
      for (int b = 0; b < d; ++b) {
        S x = kap * K[b][t.q] - kaq * K[b][t.p];
        if (!is_zero_exact(x)) P(a, b) += c * x;
      }
    }
  }
  return P;
}
template Mat<Rat> pushforward<Rat>(const Slots<Rat>&, const UpBivector&, const CoordMap&);
template Mat<J1> pushforward<J1>(const Slots<J1>&, const UpBivector&, const CoordMap&);

RMat pushforward_rat(const Slots<Rat>& pt, const UpBivector& up, const CoordMap& coords) {
  return pushforward<Rat>(pt, up, coords);
}

RMat jacobian(const Slots<Rat>& pt, const std::vector<Dir>& dirs, const CoordMap& coords) {
  auto K = jet_jacobian(pt, dirs, coords);
  RMat m(static_cast<int>(K.size()), static_cast<int>(dirs.size()));
  for (int a = 0; a < m.rows; ++a)
    for (int p = 0; p < m.cols; ++p) m(a, p) = K[a][p];
  return m;
}

// ---- coordinate maps ----

CoordMap entries_coords(int slot) {
  return CoordMap::make("entries", [=]<class S>(const Slots<S>& gs) {
    const Mat<S>& g = gs.at(slot);
    std::vector<S> out(g.a.begin() + 1, g.a.end());
    return out;
  });
}

CoordMap torus_coords(int slot) {
  return CoordMap::make("torus", [=]<class S>(const Slots<S>& gs) {
    const Mat<S>& t = gs.at(slot);
    std::vector<S> out;
    for (int i = 0; i + 1 < t.rows; ++i) out.push_back(t(i, i));
    return out;
  });
}

CoordMap chain_coords(int first, const std::vector<Rep>& reps, bool with_b) {
  return CoordMap::make(with_b ? "tF-chain" : "F-chain", [=]<class S>(const Slots<S>& gs) {
    auto cn = canonicalize_reps<S>(sub(gs, first, static_cast<int>(reps.size())), reps);
    std::vector<S> out;
    for (std::size_t i = 0; i < reps.size(); ++i) append(out, lower_entries(Mat<S>(lift<S>(reps[i].minv) * cn.c[i])));
    if (with_b) {
      const Mat<S>& b = cn.b;
      for (int i = 0; i + 1 < b.rows; ++i) out.push_back(b(i, i));
      for (int i = 0; i < b.rows; ++i)
        for (int j = i + 1; j < b.cols; ++j) out.push_back(b(i, j));
    }
    return out;
  });
}

CoordMap gamma_coords(int first, const std::vector<Rep>& reps) {
  return CoordMap::make("Gamma", [=]<class S>(const Slots<S>& gs) {
    auto s = sub(gs, first, static_cast<int>(reps.size()));
    auto cn = canonicalize_reps<S>(s, reps);
    std::vector<S> out;
    for (std::size_t i = 0; i < reps.size(); ++i) append(out, lower_entries(Mat<S>(lift<S>(reps[i].minv) * cn.c[i])));
    append(out, torus_part_coords(prod(s), false));
    return out;
  });
}

CoordMap bs_coords_map(int first, const BSChart& ch) {
  auto reps = bar_reps(ch.cells());
  return CoordMap::make("BS " + ch.str(), [=]<class S>(const Slots<S>& gs) {
    auto cn = canonicalize_reps<S>(sub(gs, first, static_cast<int>(reps.size())), reps);
    return bs_coords_S<S>(ch, cn.c);
  });
}

CoordMap flag_coords(int slot, const Rep& rep) {
  return CoordMap::make("flag", [=]<class S>(const Slots<S>& gs) {
    return lower_entries(gauss_decompose(Mat<S>(lift<S>(rep.minv) * gs.at(slot))).lower);
  });
}

CoordMap decorated_coords(int slot, const Rep& rep) {
  return CoordMap::make("decorated flag", [=]<class S>(const Slots<S>& gs) {
    auto G = gauss_decompose(Mat<S>(lift<S>(rep.minv) * gs.at(slot)));
    auto out = lower_entries(G.lower);
    append(out, torus_of(G.d));
    return out;
  });
}

CoordMap concat(const std::vector<CoordMap>& cs) {
  std::string name;
  for (const auto& c : cs) name += (name.empty() ? "" : " x ") + c.name;
  return CoordMap::make(name, [=]<class S>(const Slots<S>& gs) {
    std::vector<S> out;
    for (const auto& c : cs) append(out, c.template eval<S>(gs));
    return out;
  });
}

CoordMap compose(const CoordMap& c, std::string name, std::function<Slots<Rat>(const Slots<Rat>&)> m0,
                 std::function<Slots<J1>(const Slots<J1>&)> m1, std::function<Slots<J2>(const Slots<J2>&)> m2) {
  CoordMap out;
  out.name = std::move(name);
  out.f0 = [c, m0](const Slots<Rat>& s) { return c.f0(m0(s)); };
  out.f1 = [c, m1](const Slots<J1>& s) { return c.f1(m1(s)); };
  out.f2 = [c, m2](const Slots<J2>& s) { return c.f2(m2(s)); };
  return out;
}

std::vector<Rep> cell_reps(const std::vector<RMat>& gs) { return bar_reps(detect_cells(gs)); }

// ---- charts ----

Chart entries_chart(int rank) {
  int n = rank + 1;
  return Chart::make("sl-entries", n * n - 1, entries_coords(0), [=]<class S>(const std::vector<S>& z) {
    if (static_cast<int>(z.size()) != n * n - 1) throw std::invalid_argument("entries chart: wrong dimension");
    Mat<S> g(n, n);
    for (int k = 1; k < n * n; ++k) g.a[k] = z[k - 1];
    std::vector<int> rest;
    for (int i = 1; i < n; ++i) rest.push_back(i);
    S m00 = minor_det(g, rest, rest);
    if (is_zero(m00)) throw NotInChartDomain("entries chart: lower-right minor vanishes");
    S d0 = det(g);
    g(0, 0) = (S(1) - d0) / m00;
    return Slots<S>{g};
  });
}

Chart bs_torus_chart(const BSChart& ch) {
  int len = ch.length(), r = ch.rank, n = static_cast<int>(ch.blocks.size());
  return Chart::make("BS x T " + ch.str(), len + r, concat({bs_coords_map(0, ch), torus_coords(n)}),
                     [=]<class S>(const std::vector<S>& z) {
                       std::vector<S> zz(z.begin(), z.begin() + len), t(z.begin() + len, z.end());
                       auto gs = bs_param_S<S>(ch, zz);
                       gs.push_back(diag_of_first(t));
                       return gs;
                     });
}

Chart product_entries_chart(int rank) {
  int n = rank + 1, d = n * n - 1;
  auto single = entries_chart(rank);
  auto c1 = entries_coords(1);
  return Chart::make("sl-entries x sl-entries", 2 * d, concat({entries_coords(0), c1}),
                     [=]<class S>(const std::vector<S>& z) {
                       std::vector<S> a(z.begin(), z.begin() + d), b(z.begin() + d, z.end());
                       Slots<S> out;
                       if constexpr (std::is_same_v<S, Rat>) {
                         out.push_back(single.p0(a)[0]);
                         out.push_back(single.p0(b)[0]);
                       } else {
                         out.push_back(single.p1(a)[0]);
                         out.push_back(single.p1(b)[0]);
                       }
                       return out;
                     });
}

// ---- named bivectors ----

UpBivector pin_bow0_up(int rank, int n) {
  UpBivector b = pist_slots(rank, 0, n);
  b += torus_term(rank, {0, false, 1}, {n, true, 1});
  return b;
}

UpBivector tpi_mn_up(int rank, int m, int n, int sign) {
  UpBivector b = pist_slots(rank, 0, m + n);
  // -(rho(x^i, 0) ^ lam(x_i, 0) + rho(0, x^i) ^ lam(0, x_i)),
  // rho(x, 0) = -(x g_1), lam(x, 0) = x k_1, rho(0, y) = g_m y, lam(0, y) = k_n y
  b += pairing_term(rank, {0, false, 1}, {m, false, 1}, Rat(sign));
  b += pairing_term(rank, {m - 1, true, 1}, {m + n - 1, true, 1}, Rat(-sign));
  return b;
}

UpBivector opi_up(int rank, int n, int sign) {
  UpBivector b = pist_slots(rank, 0, n);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) b += pairing_term(rank, {j, false, 1}, {k, false, 1}, Rat(sign));
  return b;
}

Bivector pi_st(const RMat& g) {
  auto c = entries_coords(0);
  return {"sl-entries", c({g}), pushforward_rat({g}, pist_up(g.rows - 1, 0), c)};
}

Bivector pi_n_bs(const BSChart& ch, const std::vector<Rat>& z) {
  auto gs = bs_param_S<Rat>(ch, z);
  return {"BS " + ch.str(), z, pushforward_rat(gs, pist_slots(ch.rank, 0, static_cast<int>(gs.size())), bs_coords_map(0, ch))};
}

Bivector pin_bow0_bs(const BSChart& ch, const std::vector<Rat>& z, const TorusElt& t) {
  auto chart = bs_torus_chart(ch);
  std::vector<Rat> p = z;
  auto d = t.diag_entries();
  p.insert(p.end(), d.begin(), d.end() - 1);
  auto gs = chart.p0(p);
  return {chart.name, p, pushforward_rat(gs, pin_bow0_up(ch.rank, static_cast<int>(ch.blocks.size())), chart.coords)};
}

Bivector pi_n_quotient(const std::vector<RMat>& gs, const std::vector<Rep>& reps) {
  auto c = chain_coords(0, reps, false);
  return {"F-chain", c(gs), pushforward_rat(gs, pist_slots(slots_rank(gs), 0, static_cast<int>(gs.size())), c)};
}

Bivector tpi_11(const RMat& g, const RMat& k) {
  auto ch = product_entries_chart(g.rows - 1);
  return {ch.name, ch.coords({g, k}), pushforward_rat({g, k}, tpi_mn_up(g.rows - 1, 1, 1), ch.coords)};
}

int bivector_rank(const RMat& m) { return rank(m); }
int bivector_rank(const Bivector& b) { return rank(b.matrix); }

// ---- verifiers ----

MapCheck is_poisson_map(const Slots<Rat>& p, const UpBivector& src, const CoordMap& psi, const Slots<Rat>& q,
                        const UpBivector& tgt, const CoordMap& tgt_coords) {
  if (!(psi(p) == tgt_coords(q))) throw std::invalid_argument("target point is not the image of the source point");
  MapCheck out;
  out.lhs = pushforward_rat(p, src, psi);
  out.rhs = pushforward_rat(q, tgt, tgt_coords);
  out.ok = out.lhs == out.rhs;
  return out;
}

bool multiplicativity_check(const RMat& g, const RMat& h, Variant v) {
  int r = g.rows - 1;
  auto up = [&](int s) { return v == Variant::Faithful ? pist_up(r, s) : lambda_sum_up(r, s); };
  UpBivector src = up(0);
  src += up(1);
  auto tgt_coords = entries_coords(0);
  auto psi = compose(tgt_coords, "multiply", []<class S>(const Slots<S>& s) { return Slots<S>{s.at(0) * s.at(1)}; });
  return is_poisson_map({g, h}, src, psi, {RMat(g * h)}, up(0), tgt_coords).ok;
}

MapCheck check_Jn(const std::vector<RMat>& gs, Variant v) {
  int r = slots_rank(gs), n = static_cast<int>(gs.size());
  bool sq = v == Variant::Control;
  auto reps = reps_of(gs);
  auto chain = chain_coords(0, reps, false);
  auto psi = CoordMap::make("J_n", [=]<class S>(const Slots<S>& s) {
    auto out = chain.template eval<S>(s);
    append(out, torus_part_coords(prod(sub(s, 0, n)), sq));
    return out;
  });
  auto t = torus_of(gauss_decompose(prod(gs)).d);
  if (sq)
    for (auto& x : t) x *= x;
  Slots<Rat> q = gs;
  q.push_back(diag_of_first(t));
  return is_poisson_map(gs, pist_slots(r, 0, n), psi, q, pin_bow0_up(r, n), concat({chain, torus_coords(n)}));
}

MapCheck check_theta_mn(const std::vector<RMat>& gs, int m, Variant v) {
  int r = slots_rank(gs), N = static_cast<int>(gs.size());
  if (m < 1 || m >= N) throw std::invalid_argument("Theta_{m,n} needs 1 <= m < m + n");
  auto theta = [=]<class S>(const Slots<S>& s) {
    Slots<S> out = sub(s, 0, N);
    out[m] = prod(sub(s, 0, m + 1));
    return out;
  };
  Slots<Rat> q = theta(gs);
  auto tgt_coords = concat({chain_coords(0, reps_of(sub(q, 0, m)), false), chain_coords(m, reps_of(sub(q, m, N - m)), false)});
  UpBivector tgt = pist_slots(r, 0, N);
  if (v == Variant::Faithful) tgt += pairing_term(r, {0, false, 1}, {m, false, 1});
  return is_poisson_map(gs, pist_slots(r, 0, N), compose(tgt_coords, "Theta_mn", theta), q, tgt, tgt_coords);
}

MapCheck check_theta_tilde(const std::vector<RMat>& gs, Variant v) {
  int r = slots_rank(gs), n = static_cast<int>(gs.size());
  if (n < 2) throw std::invalid_argument("tilde Theta_n needs n >= 2");
  auto theta = [=]<class S>(const Slots<S>& s) {
    Slots<S> out = sub(s, 0, n);
    out[n - 1] = prod(sub(s, 0, n));
    return out;
  };
  Slots<Rat> q = theta(gs);
  auto tgt_coords = concat({chain_coords(0, reps_of(sub(q, 0, n - 1)), false), entries_coords(n - 1)});
  UpBivector tgt = pist_slots(r, 0, n);
  if (v == Variant::Faithful) tgt += pairing_term(r, {0, false, 1}, {n - 1, false, 1});
  return is_poisson_map(gs, pist_slots(r, 0, n), compose(tgt_coords, "tilde Theta_n", theta), q, tgt, tgt_coords);
}

MapCheck check_opi(const std::vector<RMat>& gs, Variant v) {
  int r = slots_rank(gs), n = static_cast<int>(gs.size());
  auto theta = [=]<class S>(const Slots<S>& s) {
    Slots<S> out;
    Mat<S> p = Mat<S>::identity(r + 1);
    for (int j = 0; j < n; ++j) out.push_back(p = p * s.at(j));
    return out;
  };
  Slots<Rat> q = theta(gs);
  std::vector<CoordMap> cs;
  for (int j = 0; j < n; ++j) cs.push_back(flag_coords(j, Rep::bar(bruhat_cell(q[j]))));
  auto tgt_coords = concat(cs);
  UpBivector tgt = v == Variant::Faithful ? opi_up(r, n) : pist_slots(r, 0, n);
  return is_poisson_map(gs, pist_slots(r, 0, n), compose(tgt_coords, "Theta_n", theta), q, tgt, tgt_coords);
}

MapCheck check_hpi_mix(const std::vector<RMat>& gs, Variant v) {
  int r = slots_rank(gs);
  if (gs.size() != 2) throw std::invalid_argument("two-fold decomposition is checked for n = 2");
  auto theta = []<class S>(const Slots<S>& s) { return Slots<S>{s.at(0), s.at(0) * s.at(1)}; };
  Slots<Rat> q = theta(gs);
  auto tgt_coords = concat({flag_coords(0, Rep::bar(bruhat_cell(q[0]))), decorated_coords(1, Rep::bar(bruhat_cell(q[1])))});
  UpBivector tgt = pist_slots(r, 0, 2);
  if (v == Variant::Faithful) tgt += pairing_term(r, {0, false, 1}, {1, false, 1});
  return is_poisson_map(gs, pist_slots(r, 0, 2), compose(tgt_coords, "Theta_2,N", theta), q, tgt, tgt_coords);
}

namespace {

template <class S> Mat<S> neg_c(const Mat<S>& k, const Rep& vdot) { return factor_neg_rep<S>(k, vdot.m, vdot.minv).c; }

}  // namespace

MapCheck check_Ev(const std::vector<RMat>& gs, const RMat& k, const Rep& vdot, Variant v) {
  int r = slots_rank(gs), m = static_cast<int>(gs.size());
  auto E = [=]<class S>(const Slots<S>& s) {
    Slots<S> out = sub(s, 0, m);
    out.push_back(inverse(neg_c(s.at(m), vdot)));
    return out;
  };
  Slots<Rat> p = gs;
  p.push_back(k);
  Slots<Rat> q = E(p);
  auto tgt_coords = chain_coords(0, reps_of(q), true);
  int sign = v == Variant::Faithful ? 1 : -1;
  return is_poisson_map(p, tpi_mn_up(r, m, 1, sign), compose(tgt_coords, "E_m,v", E), q, pist_slots(r, 0, m + 1),
                        tgt_coords);
}

MapCheck check_JEv(const std::vector<RMat>& gs, const Rep& vdot, Variant v) {
  int r = slots_rank(gs), m = static_cast<int>(gs.size());
  bool sq = v == Variant::Control;
  Slots<Rat> p = gs;
  p.push_back(product(gs));
  auto flags = [=]<class S>(const Slots<S>& s) {
    Slots<S> out = sub(s, 0, m);
    out.push_back(inverse(neg_c(s.at(m), vdot)));
    return out;
  };
  Slots<Rat> q = flags(p);
  auto chain = chain_coords(0, reps_of(q), false);
  auto psi = CoordMap::make("J E_m,v", [=]<class S>(const Slots<S>& s) {
    auto out = chain.template eval<S>(flags(s));
    auto f = factor_neg_rep<S>(s.at(m), vdot.m, vdot.minv);
    auto t = torus_of(gauss_decompose(f.bm).d);
    if (sq)
      for (auto& x : t) x = x * x;
    append(out, t);
    return out;
  });
  auto t = torus_of(gauss_decompose(factor_neg_rep<Rat>(p[m], vdot.m, vdot.minv).bm).d);
  if (sq)
    for (auto& x : t) x *= x;
  q.push_back(diag_of_first(t));
  return is_poisson_map(p, tpi_mn_up(r, m, 1), psi, q, pin_bow0_up(r, m + 1), concat({chain, torus_coords(m + 1)}));
}

MapCheck check_tFn1(const std::vector<RMat>& gs, const Rep& vdot, Variant v) {
  int r = slots_rank(gs), n = static_cast<int>(gs.size());
  bool sq = v == Variant::Control;
  Slots<Rat> q = gs;
  q.push_back(vdot.minv);
  auto chain = chain_coords(0, reps_of(q), false);
  auto psi = CoordMap::make("J_n,v", [=]<class S>(const Slots<S>& s) {
    Slots<S> f = sub(s, 0, n);
    f.push_back(lift<S>(vdot.minv));
    auto out = chain.template eval<S>(f);
    append(out, torus_part_coords(prod(f), sq));
    return out;
  });
  auto t = torus_of(gauss_decompose(RMat(product(gs) * vdot.minv)).d);
  if (sq)
    for (auto& x : t) x *= x;
  q.push_back(diag_of_first(t));
  return is_poisson_map(gs, pist_slots(r, 0, n), psi, q, pin_bow0_up(r, n + 1), concat({chain, torus_coords(n + 1)}));
}

bool is_coisotropic(const RMat& tangent, const RMat& pi) {
  auto ann = nullspace(transpose(tangent));
  for (const auto& a : ann) {
    RMat av(static_cast<int>(a.size()), 1);
    for (std::size_t i = 0; i < a.size(); ++i) av(static_cast<int>(i), 0) = a[i];
    if (!in_column_span(tangent, pi * av)) return false;
  }
  return true;
}

bool coisotropic_multiplication(const std::vector<RMat>& x, const std::vector<RMat>& y, const std::vector<RMat>& z,
                                Variant v) {
  int n = static_cast<int>(x.size()), r = slots_rank(x);
  if (y.size() != x.size() || z.size() != x.size()) throw std::invalid_argument("composable pair needs equal halves");
  bool twist = v == Variant::Control;
  auto a1 = [=]<class S>(const Slots<S>& s) { return sub(s, 0, 2 * n); };
  auto a2 = [=]<class S>(const Slots<S>& s) {
    Slots<S> out;
    for (int i = 2 * n - 1; i >= n; --i) out.push_back(inverse(s.at(i)));
    append(out, sub(s, 2 * n, n));
    return out;
  };
  auto a3 = [=]<class S>(const Slots<S>& s) {
    Slots<S> out = sub(s, 0, n);
    append(out, sub(s, 2 * n, n));
    if (twist) out.back() = out.back() * diag(gauss_decompose(prod(sub(s, 0, 2 * n))).d);
    return out;
  };
  Slots<Rat> pt = x;
  append(pt, y);
  append(pt, z);
  auto r1 = reps_of(a1(pt)), r2 = reps_of(a2(pt)), r3 = reps_of(a3(pt));
  auto g1 = gamma_coords(0, r1), g2 = gamma_coords(0, r2), g3 = gamma_coords(0, r3);
  auto constraint = CoordMap::make("composable", [=]<class S>(const Slots<S>& s) {
    std::vector<S> out;
    for (const auto& P : {prod(a1(s)), prod(a2(s))})
      for (int i = 0; i < P.rows; ++i)
        for (int j = i + 1; j < P.cols; ++j) out.push_back(P(i, j));
    return out;
  });
  auto graph = concat({compose(g1, "first", a1), compose(g2, "second", a2), compose(g3, "product", a3)});

  std::vector<Dir> dirs;
  for (int s = 0; s < 3 * n; ++s)
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= r; ++j)
        if (i != j) dirs.push_back({s, true, unit_matrix(r, i, j)});
  for (int s = 0; s < 3 * n; ++s)
    for (const auto& h : h_basis(r)) dirs.push_back({s, true, h});

  RMat C = jacobian(pt, dirs, constraint);
  RMat K = jacobian(pt, dirs, graph);
  auto ker = nullspace(C);
  RMat basis(static_cast<int>(dirs.size()), static_cast<int>(ker.size()));
  for (std::size_t k = 0; k < ker.size(); ++k)
    for (std::size_t p = 0; p < dirs.size(); ++p) basis(static_cast<int>(p), static_cast<int>(k)) = ker[k][p];
  RMat T = K * basis;

  auto up = pist_slots(r, 0, 2 * n);
  RMat P1 = pushforward_rat(a1(pt), up, g1), P2 = pushforward_rat(a2(pt), up, g2), P3 = pushforward_rat(a3(pt), up, g3);
  int d1 = P1.rows, d2 = P2.rows, d3 = P3.rows;
  RMat Pi(d1 + d2 + d3, d1 + d2 + d3);
  for (int i = 0; i < d1; ++i)
    for (int j = 0; j < d1; ++j) Pi(i, j) = P1(i, j);
  for (int i = 0; i < d2; ++i)
    for (int j = 0; j < d2; ++j) Pi(d1 + i, d1 + j) = P2(i, j);
  for (int i = 0; i < d3; ++i)
    for (int j = 0; j < d3; ++j) Pi(d1 + d2 + i, d1 + d2 + j) = -P3(i, j);
  return is_coisotropic(T, Pi);
}

bool jacobi_check(const Chart& ch, const UpBivector& up, const std::vector<Rat>& z) {
  if (static_cast<int>(z.size()) != ch.dim) throw std::invalid_argument("chart dimension mismatch");
  if (!(ch.coords(ch.p0(z)) == z)) throw NotInChartDomain(ch.name + ": coordinates do not invert the parametrization");
  std::vector<J1> zj;
  for (int l = 0; l < ch.dim; ++l) zj.push_back(J1::var(z[l], l, ch.dim));
  Mat<J1> P = pushforward<J1>(ch.p1(zj), up, ch.coords);
  int d = ch.dim;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        Rat s = 0;
        for (int l = 0; l < d; ++l)
          s += P(i, l).v * P(j, k).deriv(l) + P(j, l).v * P(k, i).deriv(l) + P(k, l).v * P(i, j).deriv(l);
        if (sgn(s) != 0) return false;
      }
  return true;
}

bool jacobi_constant(const RMat& m) {
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (!(m(i, j) == -m(j, i))) return false;
  return true;
}

// ---- samplers ----

RMat generic_lower(Rng& rng, int rank) {
  RMat m = random_torus(rng, rank).to_diag();
  for (int i = 0; i <= rank; ++i)
    for (int j = 0; j < i; ++j) m(i, j) = rng.nonzero();
  return m;
}

RMat generic_sl(Rng& rng, int rank) {
  RMat u = RMat::identity(rank + 1);
  for (int i = 0; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) u(i, j) = rng.nonzero();
  return generic_lower(rng, rank) * u;
}

std::vector<RMat> sample_gamma_rep(Rng& rng, int rank, int n) {
  std::vector<RMat> gs;
  RMat p = RMat::identity(rank + 1);
  for (int i = 0; i + 1 < n; ++i) {
    gs.push_back(generic_sl(rng, rank));
    p = p * gs.back();
  }
  gs.push_back(inverse(p) * generic_lower(rng, rank));
  return gs;
}

RMat sample_in_neg_cell(Rng& rng, const Rep& vdot) {
  int r = vdot.m.rows - 1;
  RMat n = generic_lower(rng, r);
  for (int i = 0; i <= r; ++i) n(i, i) = 1;
  return generic_lower(rng, r) * vdot.m * n;
}

ComposablePair sample_composable(Rng& rng, int rank, int n) {
  ComposablePair c;
  for (int i = 0; i < n; ++i) c.x.push_back(generic_sl(rng, rank));
  RMat X = product(c.x), Y = RMat::identity(rank + 1);
  for (int i = 0; i + 1 < n; ++i) {
    c.y.push_back(generic_sl(rng, rank));
    Y = Y * c.y.back();
  }
  c.y.push_back(inverse(RMat(X * Y)) * generic_lower(rng, rank));
  Y = product(c.y);
  RMat Z = inverse(Y);
  for (int i = 0; i + 1 < n; ++i) {
    c.z.push_back(generic_sl(rng, rank));
    Z = Z * c.z.back();
  }
  c.z.push_back(inverse(Z) * generic_lower(rng, rank));
  return c;
}

}  // namespace fpg
