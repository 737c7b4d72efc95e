#include "fpg/random.hpp"

namespace fpg {

RMat random_sl(Rng& rng, int rank, int factors) {
  if (factors <= 0) factors = 3 * rank * (rank + 1);
  RMat g = RMat::identity(rank + 1);
  for (int k = 0; k < factors; ++k) {
    int i = static_cast<int>(rng.integer(0, rank - 1));
    if (rng.integer(0, 4) == 0) g = g * coroot<Rat>(rank, i, rng.nonzero());
    else g = g * one_param<Rat>(rank, rng.coin(), i, rng.rat());
  }
  return g;
}

TorusElt random_torus(Rng& rng, int rank) {
  std::vector<Rat> v(rank);
  for (auto& x : v) x = rng.nonzero();
  return TorusElt(v);
}

RMat random_unipotent_upper(Rng& rng, int rank) {
  RMat m = RMat::identity(rank + 1);
  for (int i = 0; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) m(i, j) = rng.rat();
  return m;
}

RMat random_unipotent_lower(Rng& rng, int rank) { return transpose(random_unipotent_upper(rng, rank)); }

RMat random_upper(Rng& rng, int rank) { return random_torus(rng, rank).to_diag() * random_unipotent_upper(rng, rank); }

RMat random_lower(Rng& rng, int rank) { return random_unipotent_lower(rng, rank) * random_torus(rng, rank).to_diag(); }

}  // namespace fpg
