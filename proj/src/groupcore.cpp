#include "fpg/groupcore.hpp"

namespace fpg {

RMat wbar_word(int rank, const std::vector<int>& word) {
  RMat m = RMat::identity(rank + 1);
  for (int i : word) m = m * sbar(rank, i);
  return m;
}

RMat sbar_product(int rank, const std::vector<int>& word) { return wbar_word(rank, word); }

RMat wbar(const WeylElt& w) { return wbar_word(w.rank(), w.word()); }

bool sl2_identity_check(int rank, int i, const Rat& z) {
  if (sgn(z) == 0) throw std::domain_error("z must be nonzero");
  Rat zi = inv(z);
  RMat lhs = one_param<Rat>(rank, false, i, z);
  RMat rhs = one_param<Rat>(rank, true, i, zi) * sbar(rank, i) * coroot<Rat>(rank, i, z) *
             one_param<Rat>(rank, true, i, zi);
  return lhs == rhs;
}

RMat generalized_minor_arg(const WeylElt& u, const WeylElt& v, const RMat& g) {
  return inverse(wbar(u)) * g * wbar(v);
}

Rat generalized_minor(const WeylElt& u, const WeylElt& v, int alpha, const RMat& g) {
  return principal_minor(alpha, generalized_minor_arg(u, v, g));
}

TorusElt::TorusElt(std::vector<Rat> v) : vals(std::move(v)) {
  for (const auto& x : vals)
    if (sgn(x) == 0) throw std::domain_error("torus value must be nonzero");
}

TorusElt TorusElt::from_diag_entries(const std::vector<Rat>& d) {
  std::vector<Rat> v(d.size() - 1);
  Rat p = 1;
  for (std::size_t k = 0; k + 1 < d.size(); ++k) {
    p *= d[k];
    v[k] = p;
  }
  if (p * d.back() != 1) throw std::domain_error("diagonal entries do not have product 1");
  return TorusElt(v);
}

TorusElt TorusElt::from_diag(const RMat& d) {
  if (!is_diagonal(d)) throw std::domain_error("not a torus element");
  std::vector<Rat> e(d.rows);
  for (int i = 0; i < d.rows; ++i) e[i] = d(i, i);
  return from_diag_entries(e);
}

std::vector<Rat> TorusElt::diag_entries() const {
  int r = rank();
  std::vector<Rat> d(r + 1);
  Rat prev = 1;
  for (int k = 0; k < r; ++k) {
    d[k] = vals[k] / prev;
    prev = vals[k];
  }
  d[r] = inv(prev);
  return d;
}

RMat TorusElt::to_diag() const { return diag(diag_entries()); }

Rat TorusElt::character(const IVec& lambda) const {
  Rat p = 1;
  for (int k = 0; k < rank(); ++k) p *= rpow(vals[k], lambda[k]);
  return p;
}

TorusElt TorusElt::inverse() const {
  std::vector<Rat> v(vals.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = inv(vals[k]);
  return TorusElt(v);
}

TorusElt operator*(const TorusElt& a, const TorusElt& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<Rat> v(a.vals.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.vals[k] * b.vals[k];
  return TorusElt(v);
}

TorusElt torus_pow(const TorusElt& a, long e) {
  std::vector<Rat> v(a.vals.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = rpow(a.vals[k], e);
  return TorusElt(v);
}

TorusElt torus_conjugate(const TorusElt& t, const WeylElt& w) {
  int r = t.rank();
  std::vector<Rat> v(r);
  for (int a = 0; a < r; ++a) {
    IVec om(r, 0);
    om[a] = 1;
    v[a] = t.character(act_on_weight(w, om));
  }
  return TorusElt(v);
}

TorusElt coroot_torus(int rank, int i, const Rat& z) { return TorusElt::from_diag(coroot<Rat>(rank, i, z)); }

// rank of the block rows >= i, cols <= j, for all i, j
static std::vector<std::vector<int>> lower_left_ranks(const RMat& g) {
  int n = g.rows;
  std::vector<std::vector<int>> r(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RMat s(n - i, j + 1);
      for (int a = i; a < n; ++a)
        for (int b = 0; b <= j; ++b) s(a - i, b) = g(a, b);
      r[i][j + 1] = rank(s);
    }
  return r;
}

WeylElt bruhat_cell(const RMat& g) {
  int n = g.rows;
  auto r = lower_left_ranks(g);  // r[i][j]: rows >= i, first j columns
  std::vector<int> p(n, -1);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      int d = r[i][j + 1] - r[i][j] - (r[i + 1][j + 1] - r[i + 1][j]);
      if (d == 1) p[j] = i;
    }
  return WeylElt::from_perm(p);
}

WeylElt bruhat_cell_neg(const RMat& g) {
  int r = g.rows - 1;
  WeylElt w0 = WeylElt::longest(r);
  RMat W = wbar(w0);
  WeylElt u = bruhat_cell(W * g * inverse(W));
  return weyl_mul(weyl_mul(w0, u), w0);
}

BruhatFactorization bruhat_factor_pos(const RMat& g) {
  WeylElt u = bruhat_cell(g);
  RMat ub = wbar(u);
  auto f = factor_pos_rep<Rat>(g, ub, inverse(ub));
  return {u, f.c, f.b};
}

NegBruhatFactorization bruhat_factor_neg(const RMat& g) {
  WeylElt v = bruhat_cell_neg(g);
  RMat vb = wbar(v);
  auto f = factor_neg_rep<Rat>(g, vb, inverse(vb));
  return {f.bm, v, f.c};
}

bool in_C(const RMat& c, const RMat& udot) {
  RMat ui = inverse(udot);
  return is_unipotent_upper(c * ui) && is_unipotent_lower(ui * c);
}

TorusElt rep_offset(const WeylElt& w, const RMat& m) { return TorusElt::from_diag(inverse(wbar(w)) * m); }

void check_group_elt(const RMat& g) {
  if (g.rows != g.cols) throw std::invalid_argument("matrix must be square");
  if (det(g) != 1) throw std::domain_error("determinant is not 1");
}

Rat rpow(const Rat& x, long e) {
  Rat b = e < 0 ? inv(x) : x;
  unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Rat out = 1;
  while (k) {
    if (k & 1) out *= b;
    b *= b;
    k >>= 1;
  }
  return out;
}

Rat parse_rat(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace fpg
