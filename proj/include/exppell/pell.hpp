#ifndef EXPPELL_PELL_HPP
#define EXPPELL_PELL_HPP

#include <utility>

#include "exppell/exppoly.hpp"
#include "exppell/poly.hpp"

namespace exppell {

/// A solution of x^2 - (z^2-1) y^2 = 1 over Z[z], classified as
/// x + y*w = sign * (z+w)^index.
struct PellSolution {
  Poly x;
  Poly y;
  int sign = 1;   // +1 or -1
  long index = 0;

  ExtElem to_ext() const {
    ExtElem e = ExtElem::from_polys(x, y);
    return e;
  }
};

/// Default cap on |index| (keeps degrees desk-scale); configurable per call.
inline constexpr long kDefaultPellIndexCap = 10000;

/// (x_n, y_n) with x_n + y_n w = (z+w)^n, by the recurrence
/// (x_{k+1}, y_{k+1}) = (z x_k + (z^2-1) y_k, x_k + z y_k), and
/// (x_{-n}, y_{-n}) = (x_n, -y_n). Throws Error(IndexTooLarge) past the cap.
PellSolution pell_pair(long n, long index_cap = kDefaultPellIndexCap);

/// Exact check of x^2 - (z^2-1) y^2 = 1.
bool pell_verify(const Poly& x, const Poly& y);

/// Classify a solution: sign = x(1), index = sign * y(1), then re-verify by
/// reconstruction. Throws NotAPellSolution / NonIntegerCoefficients.
std::pair<int, long> pell_recognize(const Poly& x, const Poly& y,
                                    long index_cap = kDefaultPellIndexCap);

/// Group law: signs multiply, indices add.
PellSolution pell_compose(const PellSolution& a, const PellSolution& b);

}  // namespace exppell

#endif
