#pragma once

#include "radical/rational.hpp"

namespace radical {

// Exact classification of the angle q*pi by the residue of q modulo 2.
// OnAxisCosZero occurs iff q ≡ 1/2 or 3/2 (mod 2), i.e. cos(q*pi) = 0.
enum class Quadrant { First, Second, Third, Fourth, OnAxisCosZero };

Quadrant quadrant(const Rational& angle);

// Sign of cos(angle*pi): +1 in the first/fourth quadrant, -1 in the
// second/third, 0 exactly on the cos-zero axis. Exact, no floating point.
int cos_sign(const Rational& angle);

}  // namespace radical
