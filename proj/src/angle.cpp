#include "radical/angle.hpp"

namespace radical {

Quadrant quadrant(const Rational& angle) {
  const Rational a = angle.mod2();  // [0, 2)
  const Rational half(1, 2);
  const Rational three_halves(3, 2);
  if (a == half || a == three_halves) return Quadrant::OnAxisCosZero;
  if (a < half) return Quadrant::First;
  if (a < Rational(1)) return Quadrant::Second;
  if (a < three_halves) return Quadrant::Third;
  return Quadrant::Fourth;
}

int cos_sign(const Rational& angle) {
  switch (quadrant(angle)) {
    case Quadrant::First:
    case Quadrant::Fourth:
      return +1;
    case Quadrant::Second:
    case Quadrant::Third:
      return -1;
    case Quadrant::OnAxisCosZero:
      return 0;
  }
  return 0;  // unreachable
}

}  // namespace radical
