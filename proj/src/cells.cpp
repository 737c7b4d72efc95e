#include "fpg/cells.hpp"

#include <sstream>

namespace fpg {

Rep Rep::bar(const WeylElt& w) {
  RMat m = wbar(w);
  return {w, m, inverse(m)};
}

Rep Rep::with_torus(const WeylElt& w, const TorusElt& t) {
  RMat m = wbar(w) * t.to_diag();
  return {w, m, inverse(m)};
}

Rep Rep::of_matrix(const WeylElt& w, const RMat& m) {
  rep_offset(w, m);  // throws unless m = wbar(w) t
  return {w, m, inverse(m)};
}

std::vector<Rep> bar_reps(const std::vector<WeylElt>& ws) {
  std::vector<Rep> out;
  for (const auto& w : ws) out.push_back(Rep::bar(w));
  return out;
}

std::vector<RMat> TFnPoint::rep() const {
  std::vector<RMat> g = c;
  g.back() = g.back() * b;
  return g;
}

OutsideToricChart::OutsideToricChart(std::vector<int> v)
    : std::domain_error([&] {
        std::string s = "outside the toric chart, vanishing phi at";
        for (int i : v) s += " " + std::to_string(i + 1);
        return s;
      }()),
      vanishing(std::move(v)) {}

std::vector<WeylElt> detect_cells(const std::vector<RMat>& gs) {
  std::vector<WeylElt> ws;
  if (gs.empty()) return ws;
  RMat b = RMat::identity(gs[0].rows);
  for (const auto& g : gs) {
    auto f = bruhat_factor_pos(b * g);
    ws.push_back(f.u);
    b = f.b;
  }
  return ws;
}

TFnPoint canonicalize_tFn(const std::vector<RMat>& gs) {
  if (gs.empty()) throw std::invalid_argument("empty tuple");
  TFnPoint p;
  RMat b = RMat::identity(gs[0].rows);
  for (const auto& g : gs) {
    auto f = bruhat_factor_pos(b * g);
    p.w.push_back(f.u);
    p.c.push_back(f.c);
    b = f.b;
  }
  p.b = b;
  return p;
}

TFnPoint canonicalize_tFn_reps(const std::vector<RMat>& gs, const std::vector<Rep>& reps) {
  auto cn = canonicalize_reps<Rat>(gs, reps);
  TFnPoint p;
  for (const auto& r : reps) p.w.push_back(r.w);
  p.c = cn.c;
  p.b = cn.b;
  for (std::size_t i = 0; i < p.c.size(); ++i)
    if (!in_C(p.c[i], reps[i].m)) throw WrongCell("factor " + std::to_string(i + 1) + " not in the expected cell");
  return p;
}

FnPoint canonicalize_Fn(const std::vector<RMat>& gs) { return canonicalize_tFn(gs).flags(); }

bool is_canonical(const FnPoint& p) {
  for (int i = 0; i < p.n(); ++i)
    if (!in_C(p.c[i], wbar(p.w[i]))) return false;
  return true;
}

FnPoint torus_act(const TorusElt& h, const FnPoint& p) {
  std::vector<RMat> g = p.c;
  g[0] = h.to_diag() * g[0];
  return canonicalize_Fn(g);
}

WeylElt tits_distance(const RMat& g1, const RMat& g2) { return bruhat_cell(inverse(g1) * g2); }

BSChart BSChart::lex(const std::vector<WeylElt>& ws) {
  BSChart ch;
  ch.rank = ws.empty() ? 1 : ws[0].rank();
  for (const auto& w : ws) ch.blocks.push_back(w.word());
  return ch;
}

std::vector<int> BSChart::letters() const {
  std::vector<int> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<int> BSChart::block_of() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t k = 0; k < blocks[i].size(); ++k) out.push_back(static_cast<int>(i));
  return out;
}

int BSChart::length() const { return static_cast<int>(letters().size()); }

std::vector<WeylElt> BSChart::cells() const {
  std::vector<WeylElt> ws;
  for (const auto& b : blocks) ws.push_back(WeylElt::from_word(rank, b));
  return ws;
}

std::string BSChart::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < blocks.size(); ++i) os << (i ? "," : "") << word_str(blocks[i]);
  os << ")";
  return os.str();
}

FnPoint bs_param(const BSChart& ch, const std::vector<Rat>& z) {
  if (static_cast<int>(z.size()) != ch.length()) throw std::invalid_argument("wrong number of coordinates");
  return {ch.cells(), bs_param_S<Rat>(ch, z)};
}

std::vector<Rat> bs_coords(const FnPoint& p, const BSChart& ch) {
  if (p.w != ch.cells()) throw WrongCell("point is not in the chart's cell");
  return bs_coords_S<Rat>(ch, p.c);
}

std::vector<RMat> lusztig_factors(const BSChart& ch, const std::vector<Rat>& eps) {
  if (static_cast<int>(eps.size()) != ch.length()) throw std::invalid_argument("wrong number of parameters");
  for (std::size_t k = 0; k < eps.size(); ++k)
    if (sgn(eps[k]) == 0) throw ZeroParameter("parameter " + std::to_string(k + 1) + " is zero");
  std::vector<RMat> ms;
  std::size_t k = 0;
  for (const auto& blk : ch.blocks) {
    RMat m = RMat::identity(ch.rank + 1);
    for (int a : blk) m = m * one_param<Rat>(ch.rank, false, a, eps[k++]);
    ms.push_back(m);
  }
  return ms;
}

FnPoint lusztig_chart(const BSChart& ch, const std::vector<Rat>& eps) {
  auto ms = lusztig_factors(ch, eps);
  auto t = canonicalize_tFn_reps(ms, bar_reps(ch.cells()));
  return t.flags();
}

Rat phi(const BSChart& ch, int j, const FnPoint& p) {
  auto z = bs_coords(p, ch);
  auto L = ch.letters();
  RMat g = RMat::identity(ch.rank + 1);
  for (int k = 0; k <= j; ++k) g = g * bs_factor<Rat>(ch.rank, L[k], z[k]);
  return principal_minor(L[j], g);
}

std::vector<Rat> phi_all(const BSChart& ch, const FnPoint& p) {
  auto z = bs_coords(p, ch);
  auto L = ch.letters();
  std::vector<Rat> out;
  RMat g = RMat::identity(ch.rank + 1);
  for (std::size_t k = 0; k < L.size(); ++k) {
    g = g * bs_factor<Rat>(ch.rank, L[k], z[k]);
    out.push_back(principal_minor(L[k], g));
  }
  return out;
}

// Delta_{omega, s_{l+1}..s_j omega}(c_1 .. c_{i-1} g_i) with g_i = c_i wbar_i^{-1}
Rat phi_minor(const BSChart& ch, int j, const FnPoint& p) {
  if (p.w != ch.cells()) throw WrongCell("point is not in the chart's cell");
  auto bo = ch.block_of();
  auto L = ch.letters();
  int i = bo[j];
  RMat x = RMat::identity(ch.rank + 1);
  for (int k = 0; k < i; ++k) x = x * p.c[k];
  RMat gi = p.c[i] * inverse(wbar(p.w[i]));
  x = x * gi;
  std::vector<int> prefix;
  for (int k = 0; k <= j; ++k)
    if (bo[k] == i) prefix.push_back(L[k]);
  WeylElt v = WeylElt::from_word(ch.rank, prefix);
  return generalized_minor(WeylElt(ch.rank), v, L[j], x);
}

RExp r_exponent(const BSChart& ch, int i, int j) {
  auto L = ch.letters();
  for (int k = i + 1; k < j; ++k)
    if (L[k] == L[i]) return {0, 0};
  if (L[i] == L[j]) return {-1, 2};
  RootSystem R(ch.rank);
  return {-R.cartan[L[i]][L[j]], 1};
}

std::vector<Rat> invert_lusztig(const BSChart& ch, const FnPoint& p) {
  auto ph = phi_all(ch, p);
  std::vector<int> bad;
  for (std::size_t k = 0; k < ph.size(); ++k)
    if (sgn(ph[k]) == 0) bad.push_back(static_cast<int>(k));
  if (!bad.empty()) throw OutsideToricChart(bad);
  std::vector<Rat> eps(ph.size());
  for (std::size_t j = 0; j < ph.size(); ++j) {
    Rat e = inv(ph[j]);
    for (std::size_t i = 0; i < j; ++i) {
      auto r = r_exponent(ch, static_cast<int>(i), static_cast<int>(j));
      if (r.r) e *= rpow(ph[i], r.r);
    }
    eps[j] = e;
  }
  return eps;
}

// one factor: eps_j = prod_{i<j} Delta_i^{r_ij} / Delta_{omega_j, s_1..s_j omega_j}(g), g = c wbar^{-1}
std::vector<Rat> invert_lusztig_minors(const BSChart& ch, const FnPoint& p) {
  if (ch.blocks.size() != 1) throw std::invalid_argument("single-factor charts only");
  if (p.w != ch.cells()) throw WrongCell("point is not in the chart's cell");
  auto L = ch.letters();
  RMat g = p.c[0] * inverse(wbar(p.w[0]));
  WeylElt e(ch.rank);
  std::vector<Rat> D(L.size());
  for (std::size_t j = 0; j < L.size(); ++j) {
    std::vector<int> pre(L.begin(), L.begin() + j + 1);
    D[j] = generalized_minor(e, WeylElt::from_word(ch.rank, pre), L[j], g);
  }
  std::vector<int> bad;
  for (std::size_t k = 0; k < D.size(); ++k)
    if (sgn(D[k]) == 0) bad.push_back(static_cast<int>(k));
  if (!bad.empty()) throw OutsideToricChart(bad);
  std::vector<Rat> eps(D.size());
  for (std::size_t j = 0; j < D.size(); ++j) {
    Rat e1 = inv(D[j]);
    for (std::size_t i = 0; i < j; ++i) {
      auto r = r_exponent(ch, static_cast<int>(i), static_cast<int>(j));
      if (r.r) e1 *= rpow(D[i], r.r);
    }
    eps[j] = e1;
  }
  return eps;
}

RMat product(const std::vector<RMat>& gs) {
  RMat p = RMat::identity(gs.at(0).rows);
  for (const auto& g : gs) p = p * g;
  return p;
}

bool in_Owe(const FnPoint& p) { return in_big_cell(product(p.c)); }

bool in_Ow_phi(const BSChart& ch, const FnPoint& p) {
  for (const auto& x : phi_all(ch, p))
    if (sgn(x) == 0) return false;
  return true;
}

TorusElt tau(const FnPoint& p) {
  RMat g = product(p.c);
  if (!in_big_cell(g)) throw NotInOpenLeaf("product of the cell representatives is not in B_-B");
  std::vector<Rat> v;
  for (int k = 0; k + 1 < g.rows; ++k) v.push_back(principal_minor(k, g));
  return TorusElt(v);
}

TorusElt tau_dot(const FnPoint& p, const std::vector<Rep>& reps) {
  auto t = canonicalize_tFn_reps(p.c, reps);
  return tau(t.flags());
}

std::vector<RMat> varsigma_factor(const FnPoint& p) {
  std::vector<RMat> ms;
  RMat P = RMat::identity(p.c.at(0).rows);
  RMat prevL = P;
  for (int i = 0; i < p.n(); ++i) {
    P = P * p.c[i];
    if (!in_big_cell(P)) throw NotInZeroChart(i);
    RMat Li = gauss_decompose(P).lower;
    ms.push_back(inverse(prevL) * Li);
    prevL = Li;
  }
  return ms;
}

FnPoint varsigma(const std::vector<RMat>& ms) { return canonicalize_Fn(ms); }

TorusElt t_dot(const std::vector<Rep>& reps) {
  int r = reps.at(0).w.rank();
  RMat a = RMat::identity(r + 1), b = RMat::identity(r + 1);
  for (const auto& x : reps) {
    a = a * wbar(x.w);
    b = b * x.m;
  }
  return TorusElt::from_diag(inverse(a) * b);
}

}  // namespace fpg
