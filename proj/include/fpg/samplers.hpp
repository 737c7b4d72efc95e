#pragma once

#include "fpg/groupoids.hpp"
#include "fpg/random.hpp"

namespace fpg {

std::vector<Rat> random_rats(Rng& rng, int k);
std::vector<Rat> random_nonzero(Rng& rng, int k);
WeylElt random_weyl(Rng& rng, int rank);

FnPoint sample_cell_point(Rng& rng, const std::vector<WeylElt>& ws);  // Bott-Samelson with random z
FnPoint sample_Fn(Rng& rng, int rank, int n);
TFnPoint sample_tFn(Rng& rng, int rank, int n);

GammaArrow sample_gamma(Rng& rng, int rank, int arity);
// arrow of Gamma_{2n} with the given source
GammaArrow sample_gamma_from(Rng& rng, const FnPoint& src);

// point of G^{u,v}: ([a_1, .., a_m K t], [A k_1, .., k_n t]) with a_i from negative letters of u_i,
// k_j from positive letters of v_j
GmnPoint sample_guv(Rng& rng, const std::vector<WeylElt>& u, const std::vector<WeylElt>& v);

// arrows of Gamma^{(u,u^{-1})}
GammaArrow sample_gamma_uu(Rng& rng, const std::vector<WeylElt>& u);
GammaArrow sample_gamma_uu_from(Rng& rng, const FnPoint& src, const std::vector<Rep>& reps);

// g = n_- wdot b with wdot = wbar_0 wbar(w_0 w)
struct OppositeBruhat {
  WeylElt w;
  RMat nm, wdot, b;
};
OppositeBruhat opposite_bruhat(const RMat& g);

}  // namespace fpg
