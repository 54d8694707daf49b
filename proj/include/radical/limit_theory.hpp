#pragma once

#include <cstddef>
#include <vector>

#include "radical/rational.hpp"
#include "radical/sign_word.hpp"

namespace radical {

// Running products delta_i = e_1...e_i (delta_0 = 0 by convention) and
// partial sums sigma_j = sum_{i<=j} delta_i/2^i for a repeating block.
// The table spans j = 0..P with P = p when delta_p = +1 and P = 2p when
// delta_p = -1 (the delta sequence only closes after two block passes then);
// the extension uses delta_{p+i} = delta_p * delta_i.
struct SigmaTable {
  std::vector<Sign> block;
  std::vector<int> delta;       // delta_0..delta_P
  std::vector<Rational> sigma;  // sigma_0..sigma_P
  int delta_p;                  // product over one block

  std::size_t period() const { return block.size(); }
  std::size_t span() const { return delta.size() - 1; }  // P

  // 2^P sigma_P / (2^P - 1), the limit of sigma_n; equals
  // 2^p sigma_p / (2^p -+ 1) by the delta_p case split.
  Rational sigma_limit() const;
};

SigmaTable sigma_table(const std::vector<Sign>& block);

// q with lim r_n = 2cos(q*pi): q = (1 - sigma_limit)/4. The all-plus block
// (the trivial constant-2 word) yields the q = 0 sentinel.
Rational limit_value(const std::vector<Sign>& block);

// The P distinct limit points of u_n = 2^n (r_inf - r_n), as exact
// coefficients: the j-th subsequence converges to c_j * pi * sin(q*pi) with
// c_j = 2^(j-1) (sigma_limit - sigma_j).
struct LimitPointSet {
  Rational q;
  std::vector<Rational> coefficients;
};

LimitPointSet limit_points(const std::vector<Sign>& block);

// c_0 = (1 - 4q)/2, the coefficient of the j = 0 subsequence.
Rational first_limit_coefficient(const Rational& q);

}  // namespace radical
