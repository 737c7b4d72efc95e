#include "fpg/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fpg {

RootSystem::RootSystem(int r) : rank(r), cartan(r, IVec(r, 0)) {
  if (r < 1) throw std::invalid_argument("rank must be positive");
  for (int i = 0; i < r; ++i) {
    cartan[i][i] = 2;
    if (i + 1 < r) cartan[i][i + 1] = cartan[i + 1][i] = -1;
  }
}

IVec RootSystem::simple_root(int i) const {
  IVec v(rank);
  for (int k = 0; k < rank; ++k) v[k] = cartan[k][i];
  return v;
}

mpq_class RootSystem::cartan_inverse(int i, int j) const {
  // 1-based formula min(i,j)(r+1-max(i,j))/(r+1)
  long a = std::min(i, j) + 1, b = std::max(i, j) + 1;
  mpq_class q(a * (rank + 1 - b), rank + 1);
  q.canonicalize();
  return q;
}

WeylElt::WeylElt(int rank) : perm_(rank + 1) {
  std::iota(perm_.begin(), perm_.end(), 0);
}

WeylElt WeylElt::from_perm(std::vector<int> p) {
  std::vector<int> q = p;
  std::sort(q.begin(), q.end());
  for (std::size_t k = 0; k < q.size(); ++k)
    if (q[k] != static_cast<int>(k)) throw std::invalid_argument("not a permutation");
  WeylElt w;
  w.perm_ = std::move(p);
  w.recompute_word();
  return w;
}

WeylElt WeylElt::simple(int rank, int i) {
  if (i < 0 || i >= rank) throw std::out_of_range("simple index out of range");
  WeylElt w(rank);
  std::swap(w.perm_[i], w.perm_[i + 1]);
  w.word_ = {i};
  return w;
}

WeylElt WeylElt::from_word(int rank, const std::vector<int>& word) {
  WeylElt w(rank);
  for (int i : word) w = weyl_mul(w, simple(rank, i));
  return w;
}

WeylElt WeylElt::longest(int rank) {
  std::vector<int> p(rank + 1);
  for (int k = 0; k <= rank; ++k) p[k] = rank - k;
  return from_perm(p);
}

WeylElt WeylElt::inverse() const {
  std::vector<int> q(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) q[perm_[k]] = static_cast<int>(k);
  return from_perm(q);
}

bool WeylElt::has_left_descent(int i) const {
  std::vector<int> q(perm_.size());
  for (std::size_t k = 0; k < perm_.size(); ++k) q[perm_[k]] = static_cast<int>(k);
  return q[i] > q[i + 1];
}

bool WeylElt::has_right_descent(int i) const { return perm_[i] > perm_[i + 1]; }

// lexicographically smallest reduced word: peel the smallest left descent
void WeylElt::recompute_word() {
  word_.clear();
  std::vector<int> p = perm_;
  int n = static_cast<int>(p.size());
  for (;;) {
    std::vector<int> q(n);
    for (int k = 0; k < n; ++k) q[p[k]] = k;
    int i = 0;
    while (i + 1 < n && q[i] < q[i + 1]) ++i;
    if (i + 1 >= n) break;
    word_.push_back(i);
    // p <- s_i p
    for (int k = 0; k < n; ++k) {
      if (p[k] == i) p[k] = i + 1;
      else if (p[k] == i + 1) p[k] = i;
    }
  }
}

WeylElt weyl_mul(const WeylElt& u, const WeylElt& v) {
  if (u.rank() != v.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<int> p(u.perm().size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = u.perm()[v.perm()[k]];
  return WeylElt::from_perm(p);
}

WeylElt weyl_product(const std::vector<WeylElt>& ws, int rank) {
  WeylElt w(rank);
  for (const auto& x : ws) w = weyl_mul(w, x);
  return w;
}

int inversion_count(const std::vector<int>& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

std::vector<WeylElt> all_weyl(int rank) {
  std::vector<int> p(rank + 1);
  std::iota(p.begin(), p.end(), 0);
  std::vector<WeylElt> out;
  do out.push_back(WeylElt::from_perm(p));
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

static void collect_words(const WeylElt& w, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int i = 0; i < w.rank(); ++i)
    if (w.has_left_descent(i)) {
      prefix.push_back(i);
      collect_words(weyl_mul(WeylElt::simple(w.rank(), i), w), prefix, out);
      prefix.pop_back();
    }
}

std::vector<std::vector<int>> reduced_words(const WeylElt& w) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  collect_words(w, prefix, out);
  return out;
}

bool is_reduced(int rank, const std::vector<int>& word) {
  return WeylElt::from_word(rank, word).length() == static_cast<int>(word.size());
}

// omega-coords -> epsilon-coords c_k = sum_{i>=k} lambda_i, permute, back
IVec act_on_weight(const WeylElt& w, const IVec& lambda) {
  int r = w.rank();
  if (static_cast<int>(lambda.size()) != r) throw std::invalid_argument("weight size mismatch");
  IVec c(r + 1, 0);
  for (int k = r - 1; k >= 0; --k) c[k] = c[k + 1] + lambda[k];
  IVec cw(r + 1, 0);
  for (int k = 0; k <= r; ++k) cw[w.perm()[k]] = c[k];
  IVec out(r);
  for (int i = 0; i < r; ++i) out[i] = cw[i] - cw[i + 1];
  return out;
}

IMat weight_matrix(const WeylElt& w) {
  int r = w.rank();
  IMat m(r, IVec(r, 0));
  for (int j = 0; j < r; ++j) {
    IVec e(r, 0);
    e[j] = 1;
    IVec x = act_on_weight(w, e);
    for (int i = 0; i < r; ++i) m[i][j] = x[i];
  }
  return m;
}

SuppSets supp_sets(const std::vector<WeylElt>& ws) {
  if (ws.empty()) throw std::invalid_argument("empty sequence");
  int r = ws.front().rank();
  std::set<int> s;
  for (const auto& w : ws)
    for (int i : w.word()) s.insert(i);
  SuppSets out;
  for (int a = 0; a < r; ++a) {
    IVec om(r, 0);
    om[a] = 1;
    bool fixed = true;
    for (const auto& w : ws)
      if (act_on_weight(w, om) != om) fixed = false;
    if (fixed) out.supp0.push_back(a);
    if (s.count(a)) out.supp.push_back(a);
  }
  return out;
}

// Smith normal form over Z by elementary row/column operations
SmithForm smith_normal_form(const std::vector<std::vector<mpz_class>>& A) {
  int m = static_cast<int>(A.size());
  int n = m ? static_cast<int>(A[0].size()) : 0;
  SmithForm f;
  f.D = A;
  f.U.assign(m, std::vector<mpz_class>(m, 0));
  f.V.assign(n, std::vector<mpz_class>(n, 0));
  for (int i = 0; i < m; ++i) f.U[i][i] = 1;
  for (int i = 0; i < n; ++i) f.V[i][i] = 1;
  auto& D = f.D;
  auto swap_rows = [&](int a, int b) { std::swap(D[a], D[b]); std::swap(f.U[a], f.U[b]); };
  auto swap_cols = [&](int a, int b) {
    for (int i = 0; i < m; ++i) std::swap(D[i][a], D[i][b]);
    for (int i = 0; i < n; ++i) std::swap(f.V[i][a], f.V[i][b]);
  };
  auto add_row = [&](int dst, int src, const mpz_class& q) {  // row dst -= q row src
    for (int j = 0; j < n; ++j) D[dst][j] -= q * D[src][j];
    for (int j = 0; j < m; ++j) f.U[dst][j] -= q * f.U[src][j];
  };
  auto add_col = [&](int dst, int src, const mpz_class& q) {
    for (int i = 0; i < m; ++i) D[i][dst] -= q * D[i][src];
    for (int i = 0; i < n; ++i) f.V[i][dst] -= q * f.V[i][src];
  };
  for (int t = 0; t < std::min(m, n); ++t) {
    // pick smallest nonzero |entry| in the lower-right block
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (D[i][j] != 0 && (pi < 0 || abs(D[i][j]) < abs(D[pi][pj]))) pi = i, pj = j;
      if (pi < 0) return f;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), D[i][t].get_mpz_t(), D[t][t].get_mpz_t());
        if (q != 0) add_row(i, t, q);
        if (D[i][t] != 0) clean = false;
      }
      for (int j = t + 1; j < n; ++j) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), D[t][j].get_mpz_t(), D[t][t].get_mpz_t());
        if (q != 0) add_col(j, t, q);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the rest
      int bad = -1;
      for (int i = t + 1; i < m && bad < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) { bad = i; break; }
      if (bad < 0) break;
      add_row(t, bad, mpz_class(-1));
    }
    if (D[t][t] < 0) {
      for (int j = 0; j < n; ++j) D[t][j] = -D[t][j];
      for (int j = 0; j < m; ++j) f.U[t][j] = -f.U[t][j];
    }
  }
  return f;
}

Lattice integer_kernel(const IMat& A, int ncols) {
  std::vector<std::vector<mpz_class>> M(A.size(), std::vector<mpz_class>(ncols));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (int j = 0; j < ncols; ++j) M[i][j] = A[i][j];
  Lattice L;
  if (A.empty()) {
    for (int j = 0; j < ncols; ++j) {
      IVec e(ncols, 0);
      e[j] = 1;
      L.basis.push_back(e);
    }
    return L;
  }
  SmithForm f = smith_normal_form(M);
  int m = static_cast<int>(A.size());
  for (int j = 0; j < ncols; ++j) {
    bool zero = j >= m || f.D[j][j] == 0;
    if (!zero) continue;
    IVec v(ncols);
    for (int i = 0; i < ncols; ++i) v[i] = f.V[i][j].get_si();
    L.basis.push_back(v);
  }
  return L;
}

int integer_rank(const IMat& A, int ncols) { return ncols - integer_kernel(A, ncols).rank(); }

Lattice fixed_character_lattice(const WeylElt& w) {
  IMat m = weight_matrix(w);
  int r = w.rank();
  for (int i = 0; i < r; ++i) m[i][i] -= 1;
  return integer_kernel(m, r);
}

int dim_image_one_minus(const WeylElt& w) {
  IMat m = weight_matrix(w);
  int r = w.rank();
  for (int i = 0; i < r; ++i) m[i][i] -= 1;
  return integer_rank(m, r);
}

std::string word_str(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

}  // namespace fpg
