#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fpg {

using IVec = std::vector<long>;
using IMat = std::vector<IVec>;

struct RootSystem {
  int rank = 1;
  IMat cartan;  // A[i][j] = <alpha_j, alpha_i^vee>
  explicit RootSystem(int r);
  // columns of the Cartan matrix: simple roots in fundamental-weight coordinates
  IVec simple_root(int i) const;
  // (A^{-1})_{ij}, exact
  mpq_class cartan_inverse(int i, int j) const;
};

// Weyl group element of type A_r.  perm has r+1 entries (0-based);
// wbar e_k = +-e_{perm[k]}, simple s_i swaps i and i+1 (0-based i).
class WeylElt {
 public:
  WeylElt() = default;
  explicit WeylElt(int rank);
  static WeylElt from_perm(std::vector<int> p);
  static WeylElt from_word(int rank, const std::vector<int>& word);
  static WeylElt simple(int rank, int i);
  static WeylElt longest(int rank);

  int rank() const { return static_cast<int>(perm_.size()) - 1; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  WeylElt inverse() const;
  // true if l(s_i w) < l(w)
  bool has_left_descent(int i) const;
  bool has_right_descent(int i) const;

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.perm_ == b.perm_; }
  friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.perm_ < b.perm_; }

 private:
  std::vector<int> perm_;
  std::vector<int> word_;
  void recompute_word();
};

WeylElt weyl_mul(const WeylElt& u, const WeylElt& v);
WeylElt weyl_product(const std::vector<WeylElt>& ws, int rank);
int inversion_count(const std::vector<int>& p);
std::vector<WeylElt> all_weyl(int rank);
// every reduced word of w
std::vector<std::vector<int>> reduced_words(const WeylElt& w);
bool is_reduced(int rank, const std::vector<int>& word);

// action on X^*(T) in fundamental-weight coordinates
IVec act_on_weight(const WeylElt& w, const IVec& lambda);
IMat weight_matrix(const WeylElt& w);  // column j = w(omega_j)

struct SuppSets {
  std::vector<int> supp, supp0;
};
SuppSets supp_sets(const std::vector<WeylElt>& ws);

struct Lattice {
  IMat basis;  // integer vectors in fundamental-weight coordinates
  int rank() const { return static_cast<int>(basis.size()); }
};

struct SmithForm {
  std::vector<std::vector<mpz_class>> D, U, V;  // U A V = D
};
SmithForm smith_normal_form(const std::vector<std::vector<mpz_class>>& A);
// saturated Z-basis of ker A
Lattice integer_kernel(const IMat& A, int ncols);
int integer_rank(const IMat& A, int ncols);

Lattice fixed_character_lattice(const WeylElt& w);
int dim_image_one_minus(const WeylElt& w);

std::string word_str(const std::vector<int>& word);  // 1-based "s1s2"

}  // namespace fpg
