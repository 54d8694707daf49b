#include "radical/modular.hpp"

#include <stdexcept>

namespace radical {

Int mod_pow(const Int& base, const Int& exp, const Int& modulus) {
  if (modulus < 1) throw std::domain_error("mod_pow: modulus must be >= 1");
  if (exp < 0) throw std::domain_error("mod_pow: negative exponent");
  Int r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

SemiOrder semi_order(const Int& s) {
  if (s < 3 || mpz_even_p(s.get_mpz_t()))
    throw std::domain_error("semi_order: s must be odd and >= 3");
  const Int s_minus_1 = s - 1;
  Int r = 2;
  for (unsigned long d = 1;; ++d) {
    if (r == 1) return {d, +1};
    if (r == s_minus_1) return {d, -1};
    r = (r << 1) % s;
  }
}

}  // namespace radical
