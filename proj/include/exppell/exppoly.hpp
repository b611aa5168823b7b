#ifndef EXPPELL_EXPPOLY_HPP
#define EXPPELL_EXPPOLY_HPP

#include <complex>
#include <utility>
#include <vector>

#include "exppell/poly.hpp"

namespace exppell {

/// Canonical finite sum  sum_j p_j * exp(q_j)  with p_j, q_j in Q(i)[z].
/// Invariants: every coefficient p_j is nonzero, the exponents q_j are
/// pairwise distinct with zero constant term, and terms are sorted by
/// exponent. Distinct zero-constant-term exponents give linearly
/// independent exponentials, so this form is faithful: the sum is the zero
/// function iff there are no terms.
class ExpPoly {
 public:
  struct Term {
    Poly coeff;
    Poly exponent;
  };

  ExpPoly() = default;

  /// Canonicalize a raw term list: merge repeated exponents, drop zero
  /// coefficients. Throws Error(NonzeroConstantExponent) if any exponent
  /// has a nonzero constant term.
  static ExpPoly normalize(const std::vector<Term>& raw);

  static ExpPoly from_poly(const Poly& p);
  /// exp(q); q must have zero constant term.
  static ExpPoly exp_of(const Poly& q);
  static ExpPoly zero() { return ExpPoly(); }
  static ExpPoly one() { return from_poly(Poly::one()); }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// The coefficient of exp(0), i.e. the polynomial part.
  Poly poly_part() const;
  /// True iff the value lies in Q(i)[z] (at most an exp(0) term).
  bool is_poly() const;

  friend ExpPoly operator+(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator-(const ExpPoly& a);
  friend ExpPoly operator-(const ExpPoly& a, const ExpPoly& b) {
    return a + (-b);
  }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  ExpPoly& operator+=(const ExpPoly& b) { *this = *this + b; return *this; }
  ExpPoly& operator*=(const ExpPoly& b) { *this = *this * b; return *this; }

  friend bool operator==(const ExpPoly& a, const ExpPoly& b);
  friend bool operator!=(const ExpPoly& a, const ExpPoly& b) {
    return !(a == b);
  }

  std::complex<double> eval(const std::complex<double>& z) const;

 private:
  std::vector<Term> terms_;  // sorted by exponent
};

/// Element f + g*w of the quadratic extension with w^2 = z^2 - 1, at the
/// exponential-polynomial level. The representation f + g*w is unique.
struct ExtElem {
  ExpPoly f;
  ExpPoly g;

  ExtElem() = default;
  ExtElem(ExpPoly f_, ExpPoly g_) : f(std::move(f_)), g(std::move(g_)) {}
  static ExtElem from_polys(const Poly& f_, const Poly& g_) {
    return {ExpPoly::from_poly(f_), ExpPoly::from_poly(g_)};
  }
  static ExtElem one() { return {ExpPoly::one(), ExpPoly::zero()}; }

  friend ExtElem operator+(const ExtElem& a, const ExtElem& b) {
    return {a.f + b.f, a.g + b.g};
  }
  friend ExtElem operator*(const ExtElem& a, const ExtElem& b);
  ExtElem pow(int n) const;  // n >= 0

  friend bool operator==(const ExtElem& a, const ExtElem& b) {
    return a.f == b.f && a.g == b.g;
  }
};

/// The automorphism w -> -w: (f, g) -> (f, -g).
ExtElem ext_conj(const ExtElem& a);

/// Nr(f + g*w) = f^2 - (z^2-1) g^2; multiplicative.
ExpPoly ext_norm(const ExtElem& a);

}  // namespace exppell

#endif
