#pragma once

#include "fpg/groupcore.hpp"

#include <cstdint>
#include <random>

namespace fpg {

// seeded source of small rationals; reduction by modulo keeps streams
// identical across standard libraries
class Rng {
 public:
  explicit Rng(std::uint64_t seed, long bound = 20) : eng_(seed), bound_(bound) {}
  long integer(long lo, long hi) {  // inclusive
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }
  Rat rat() { return make(integer(-bound_, bound_), integer(1, bound_)); }
  Rat nonzero() {
    for (;;) {
      Rat q = rat();
      if (sgn(q) != 0) return q;
    }
  }
  Rat positive() {
    return make(integer(1, bound_), integer(1, bound_));
  }
  bool coin() { return eng_() & 1; }
  std::uint64_t raw() { return eng_(); }
  long bound() const { return bound_; }

 private:
  static Rat make(long p, long q) {
    Rat x(p, q);
    x.canonicalize();
    return x;
  }
  std::mt19937_64 eng_;
  long bound_;
};

RMat random_sl(Rng& rng, int rank, int factors = 0);  // product of one-parameter elements
RMat random_upper(Rng& rng, int rank);                // B
RMat random_lower(Rng& rng, int rank);                // B_-
RMat random_unipotent_upper(Rng& rng, int rank);
RMat random_unipotent_lower(Rng& rng, int rank);
TorusElt random_torus(Rng& rng, int rank);

}  // namespace fpg
