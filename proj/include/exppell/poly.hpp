#ifndef EXPPELL_POLY_HPP
#define EXPPELL_POLY_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "exppell/number.hpp"

namespace exppell {

/// Exact univariate polynomial over the Gaussian rationals, sparse storage.
/// Invariant: no stored coefficient is zero. The zero polynomial has an
/// empty map and no degree (degree() returns nullopt, never a sentinel).
class Poly {
 public:
  Poly() = default;
  Poly(const GRat& c) {  // NOLINT: implicit constant embedding
    if (!c.is_zero()) coeffs_[0] = c;
  }
  Poly(int c) : Poly(GRat(c)) {}  // NOLINT

  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(GRat(1)); }
  /// c * z^k
  static Poly monomial(const GRat& c, int k);
  /// The variable z.
  static Poly var() { return monomial(GRat(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.rbegin()->first;
  }
  /// Degree of a polynomial known to be nonzero.
  int degree_nonzero() const { return coeffs_.rbegin()->first; }

  GRat coeff(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? GRat() : it->second;
  }
  GRat constant_term() const { return coeff(0); }
  GRat leading_coeff() const {
    return coeffs_.empty() ? GRat() : coeffs_.rbegin()->second;
  }

  const std::map<int, GRat>& terms() const { return coeffs_; }

  void set_coeff(int k, const GRat& c);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { *this = *this + b; return *this; }
  Poly& operator-=(const Poly& b) { *this = *this - b; return *this; }
  Poly& operator*=(const Poly& b) { *this = *this * b; return *this; }

  Poly scaled(const GRat& c) const;
  Poly pow(int n) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  /// Total order for canonical sorting: by degree, then by coefficients
  /// from the highest degree down.
  friend bool operator<(const Poly& a, const Poly& b);

  /// Exact Horner evaluation.
  GRat eval(const GRat& c) const;
  std::complex<double> eval(const std::complex<double>& z) const;

  /// Sum of coefficients == value at z = 1; the theta map's raw material.
  GRat value_at_one() const { return eval(GRat(1)); }

  /// True iff all coefficients are rational integers.
  bool has_integer_coeffs() const;
  /// Max |coefficient| over integer coefficients; requires integer coeffs.
  Int max_abs_int_coeff() const;

  /// Zeroes the constant term.
  Poly without_constant() const;

  /// Complex conjugation of all coefficients.
  Poly conj_coeffs() const;

  /// Quotient and remainder of exact division over Q(i)[z].
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// a / b when the division is exact, else nullopt.
  static std::optional<Poly> div_exact(const Poly& a, const Poly& b);
  /// q with q^k == a, if one exists over Q(i)[z] with rational-real leading
  /// root; for even k the root with "positive" leading coefficient is
  /// returned (its negation is the other one).
  static std::optional<Poly> root_exact(const Poly& a, int k);

 private:
  std::map<int, GRat> coeffs_;  // ascending degree
};

/// z^2 - 1, the Pell discriminant.
Poly pell_discriminant();

}  // namespace exppell

#endif
