#pragma once

#include "radical/rational.hpp"

namespace radical {

// base^exp mod modulus, result in [0, modulus). Requires modulus >= 1, exp >= 0.
Int mod_pow(const Int& base, const Int& exp, const Int& modulus);

// Least d >= 1 with 2^d ≡ sign (mod s), sign in {+1, -1}.
struct SemiOrder {
  unsigned long p;
  int sign;
};

// Semi-order of 2 modulo s. Requires s odd and s >= 3; always terminates with
// p <= phi(s) since 2^phi(s) ≡ 1 (mod s).
SemiOrder semi_order(const Int& s);

}  // namespace radical
