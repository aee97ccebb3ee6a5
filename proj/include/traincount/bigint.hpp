#pragma once

#include <gmpxx.h>

namespace traincount {

// Exact coefficients and counts. Naive symmetrization sums m! terms, so
// values outgrow any fixed-width integer long before the engine caps do.
using BigInt = mpz_class;

inline BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

}  // namespace traincount
