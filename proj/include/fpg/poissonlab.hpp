#pragma once

#include "fpg/groupoids.hpp"
#include "fpg/random.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fpg {

using J1 = Jet<Rat>;
using J2 = Jet<J1>;
template <class S> using Slots = std::vector<Mat<S>>;

struct NotInChartDomain : std::domain_error {
  using std::domain_error::domain_error;
};

// tangent direction on one slot: g -> g(1 + eps X) if left, (1 + eps X) g otherwise.
// torus slots are diagonal matrices and use left directions.
struct Dir {
  int slot;
  bool left;
  RMat X;
};

// sum of c (V_p wedge V_q) over directions on a product of groups
struct UpBivector {
  std::vector<Dir> dirs;
  struct Term {
    int p, q;
    Rat c;
  };
  std::vector<Term> terms;

  int index(const Dir& d);
  void add(const Dir& a, const Dir& b, const Rat& c);
  UpBivector& operator+=(const UpBivector& o);
  RMat coefficients() const;  // antisymmetric, on dirs
};
UpBivector scaled(const UpBivector& b, const Rat& c);

// coordinate functions on slot tuples, evaluable at three scalar levels
struct CoordMap {
  std::string name;
  std::function<std::vector<Rat>(const Slots<Rat>&)> f0;
  std::function<std::vector<J1>(const Slots<J1>&)> f1;
  std::function<std::vector<J2>(const Slots<J2>&)> f2;

  template <class F> static CoordMap make(std::string name, F f) {
    auto g = [name, f]<class S>(const Slots<S>& s) -> std::vector<S> {
      try {
        return f(s);
      } catch (const NotInChartDomain&) {
        throw;
      } catch (const std::domain_error& e) {
        throw NotInChartDomain(name + ": " + e.what());
      }
    };
    return {name, g, g, g};
  }
  std::vector<Rat> operator()(const Slots<Rat>& s) const { return f0(s); }
  template <class S> std::vector<S> eval(const Slots<S>& s) const {
    if constexpr (std::is_same_v<S, Rat>) return f0(s);
    else if constexpr (std::is_same_v<S, J1>) return f1(s);
    else return f2(s);
  }
};

// chart: parameters -> representative slots, and coordinates back
struct Chart {
  std::string name;
  int dim = 0;
  CoordMap coords;
  std::function<Slots<Rat>(const std::vector<Rat>&)> p0;
  std::function<Slots<J1>(const std::vector<J1>&)> p1;
  template <class F> static Chart make(std::string name, int dim, CoordMap c, F param) {
    return {std::move(name), dim, std::move(c), param, param};
  }
};

struct Bivector {
  std::string chart;
  std::vector<Rat> point;
  RMat matrix;
};

// ---- Lie algebra data (trace form) ----
RMat unit_matrix(int rank, int i, int j);
std::vector<RMat> h_basis(int rank);  // coroots H_a
std::vector<RMat> h_dual(int rank);   // H^a = sum_b (A^{-1})_{ab} H_b
struct DualBases {
  std::vector<RMat> lower;  // x_i in b_-: H_a, 2 E_{-alpha}
  std::vector<RMat> upper;  // x^i in b: H^a, E_alpha
};
DualBases dual_bases(int rank);  // dual under <x_- + x_0, y_+ + y_0> = 1/2 <x_-, y_+> + <x_0, y_0>

// ---- upstairs bivectors ----
UpBivector pist_up(int rank, int slot);            // Lambda^L - Lambda^R
UpBivector lambda_sum_up(int rank, int slot);      // Lambda^L + Lambda^R, not multiplicative
UpBivector lambda_left_up(int rank, int slot);     // Lambda^L alone, fails Jacobi
UpBivector pist_slots(int rank, int first, int count);
// c sum_i V(x^i) wedge W(x_i); a direction kind is (slot, left, sign)
struct Kind {
  int slot;
  bool left;
  int sign;
};
UpBivector pairing_term(int rank, const Kind& v_upper, const Kind& w_lower, const Rat& c = 1);
// sum_a V(H^a) wedge W(H_a)
UpBivector torus_term(int rank, const Kind& v, const Kind& w, const Rat& c = 1);

// ---- pushforward ----
template <class S> Mat<S> pushforward(const Slots<S>& pt, const UpBivector& up, const CoordMap& coords);
RMat pushforward_rat(const Slots<Rat>& pt, const UpBivector& up, const CoordMap& coords);
// Jacobian of coords at pt along the directions of up
RMat jacobian(const Slots<Rat>& pt, const std::vector<Dir>& dirs, const CoordMap& coords);

// ---- coordinate maps ----
CoordMap entries_coords(int slot);                   // all entries but (0,0)
CoordMap torus_coords(int slot);                     // first r diagonal entries
CoordMap chain_coords(int first, const std::vector<Rep>& reps, bool with_b);  // F_n / tF_n
CoordMap gamma_coords(int first, const std::vector<Rep>& reps);              // J-coordinates of Gamma_n
CoordMap bs_coords_map(int first, const BSChart& ch);                        // O^w via Bott-Samelson
CoordMap flag_coords(int slot, const Rep& rep);                              // single flag gB
CoordMap decorated_coords(int slot, const Rep& rep);                         // gN
CoordMap concat(const std::vector<CoordMap>& cs);
// coordinates composed with a slot map
CoordMap compose(const CoordMap& c, std::string name,
                 std::function<Slots<Rat>(const Slots<Rat>&)> m0, std::function<Slots<J1>(const Slots<J1>&)> m1,
                 std::function<Slots<J2>(const Slots<J2>&)> m2);
template <class F> CoordMap compose(const CoordMap& c, std::string name, F f) { return compose(c, std::move(name), f, f, f); }

std::vector<Rep> cell_reps(const std::vector<RMat>& gs);  // bar representatives of the detected cells

// ---- charts ----
Chart entries_chart(int rank);             // SL(r+1) by entries, g_00 solved from det = 1
Chart bs_torus_chart(const BSChart& ch);   // O^w x T
Chart product_entries_chart(int rank);     // G x G

// ---- named bivectors ----
Bivector pi_st(const RMat& g);
Bivector pi_n_bs(const BSChart& ch, const std::vector<Rat>& z);
Bivector pin_bow0_bs(const BSChart& ch, const std::vector<Rat>& z, const TorusElt& t);
Bivector pi_n_quotient(const std::vector<RMat>& gs, const std::vector<Rep>& reps);
Bivector tpi_11(const RMat& g, const RMat& k);
UpBivector pin_bow0_up(int rank, int n);            // slots g_1..g_n, t
UpBivector tpi_mn_up(int rank, int m, int n, int sign = 1);  // slots g_1..g_m, k_1..k_n
UpBivector opi_up(int rank, int n, int sign = 1);   // n independent flags, mixed terms scaled by sign

int bivector_rank(const Bivector& b);
int bivector_rank(const RMat& m);

// ---- verifiers ----
struct MapCheck {
  RMat lhs, rhs;
  bool ok;
};
// compare the image of src at p under psi with tgt at q
MapCheck is_poisson_map(const Slots<Rat>& p, const UpBivector& src, const CoordMap& psi, const Slots<Rat>& q,
                        const UpBivector& tgt, const CoordMap& tgt_coords);

enum class Variant { Faithful, Control };

bool multiplicativity_check(const RMat& g, const RMat& h, Variant v = Variant::Faithful);
// J_n on Gamma_n at a representative with product in B_-; control squares the torus part
MapCheck check_Jn(const std::vector<RMat>& gs, Variant v = Variant::Faithful);
// Theta_{m,n}(pi_{m+n}) = pi_m bowtie pi_n; control drops the mixed term
MapCheck check_theta_mn(const std::vector<RMat>& gs, int m, Variant v = Variant::Faithful);
// tilde Theta_n(tpi_n) = pi_{n-1} bowtie pi_st
MapCheck check_theta_tilde(const std::vector<RMat>& gs, Variant v = Variant::Faithful);
// Theta_n(pi_n) on B^n against (pi_1, .., pi_1) + sum mu_jk
MapCheck check_opi(const std::vector<RMat>& gs, Variant v = Variant::Faithful);
// hat pi_2 = opi_1 mixed with hat pi_1 on B x G/N
MapCheck check_hpi_mix(const std::vector<RMat>& gs, Variant v = Variant::Faithful);
// E_{m, vdot} from (tF_m x B_- v B_-, tpi_{m,1}) into (tF_{m+1}, tpi_{m+1}); control flips the mixed term
MapCheck check_Ev(const std::vector<RMat>& gs, const RMat& k, const Rep& vdot, Variant v = Variant::Faithful);
// J_{m+1} o E_{m, vdot} on G_{m,1}; k = g_1 .. g_m; control squares the torus part
MapCheck check_JEv(const std::vector<RMat>& gs, const Rep& vdot, Variant v = Variant::Faithful);
// J_{n, vdot} on tF_n into F_{n+1}^o x T
MapCheck check_tFn1(const std::vector<RMat>& gs, const Rep& vdot, Variant v = Variant::Faithful);

// graph of multiplication in (Gamma_{2n}^3, pi x pi x (-pi)) at the composable pair
// ([x, y], [y^{-1}, z]) with product [x, z]; control twists the product by the torus part of [x, y]
bool coisotropic_multiplication(const std::vector<RMat>& x, const std::vector<RMat>& y, const std::vector<RMat>& z,
                                Variant v = Variant::Faithful);
// pi^#(annihilator of the span of tangent) inside the span
bool is_coisotropic(const RMat& tangent, const RMat& pi);

// Schouten bracket of a chart bivector at z
bool jacobi_check(const Chart& ch, const UpBivector& up, const std::vector<Rat>& z);
bool jacobi_constant(const RMat& m);

// ---- samplers ----
// n_- t n_+ with every unipotent entry nonzero: away from T-fixed flags
RMat generic_sl(Rng& rng, int rank);
RMat generic_lower(Rng& rng, int rank);
std::vector<RMat> sample_gamma_rep(Rng& rng, int rank, int n);  // product in B_-
RMat sample_in_neg_cell(Rng& rng, const Rep& vdot);             // b_- vdot n_-
struct ComposablePair {
  std::vector<RMat> x, y, z;
};
ComposablePair sample_composable(Rng& rng, int rank, int n);

}  // namespace fpg
