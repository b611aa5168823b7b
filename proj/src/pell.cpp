#include "exppell/pell.hpp"

#include <cstdlib>

#include "exppell/error.hpp"

namespace exppell {

PellSolution pell_pair(long n, long index_cap) {
  long a = std::labs(n);
  if (a > index_cap)
    throw Error(ErrorCode::IndexTooLarge,
                "pell index " + std::to_string(n) + " exceeds cap " +
                    std::to_string(index_cap));
  Poly x = Poly::one();
  Poly y = Poly::zero();
  const Poly zvar = Poly::var();
  const Poly disc = pell_discriminant();
  for (long k = 0; k < a; ++k) {
    Poly nx = zvar * x + disc * y;
    Poly ny = x + zvar * y;
    x = std::move(nx);
    y = std::move(ny);
  }
  if (n < 0) y = -y;
  return {x, y, 1, n};
}

bool pell_verify(const Poly& x, const Poly& y) {
  return x * x - pell_discriminant() * (y * y) == Poly::one();
}

std::pair<int, long> pell_recognize(const Poly& x, const Poly& y,
                                    long index_cap) {
  if (!pell_verify(x, y))
    throw Error(ErrorCode::NotAPellSolution,
                "x^2 - (z^2-1) y^2 = 1 fails");
  // Unreachable for genuine solutions by (D3); guarded anyway.
  if (!x.has_integer_coeffs() || !y.has_integer_coeffs())
    throw Error(ErrorCode::NonIntegerCoefficients,
                "solution has non-integer coefficients");
  GRat x1 = x.value_at_one();
  if (!(x1 == GRat(1) || x1 == GRat(-1)))
    throw Error(ErrorCode::NotAPellSolution, "x(1) is not +-1");
  int sign = x1 == GRat(1) ? 1 : -1;
  GRat y1 = y.value_at_one();
  Int n_big = num(y1.re) * sign;
  if (boost::multiprecision::abs(n_big) > index_cap)
    throw Error(ErrorCode::IndexTooLarge, "recognized index exceeds cap");
  long n = n_big.convert_to<long>();
  PellSolution ref = pell_pair(n, index_cap);
  // z = 1 only reads off the candidate classification; confirm it.
  if (x != ref.x.scaled(GRat(sign)) || y != ref.y.scaled(GRat(sign)))
    throw Error(ErrorCode::NotAPellSolution,
                "reconstruction from (sign, index) does not match");
  return {sign, n};
}

PellSolution pell_compose(const PellSolution& a, const PellSolution& b) {
  ExtElem prod = a.to_ext() * b.to_ext();
  PellSolution r;
  r.x = prod.f.poly_part();
  r.y = prod.g.poly_part();
  r.sign = a.sign * b.sign;
  r.index = a.index + b.index;
  return r;
}

}  // namespace exppell
