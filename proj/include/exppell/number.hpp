#ifndef EXPPELL_NUMBER_HPP
#define EXPPELL_NUMBER_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <compare>
#include <optional>
#include <string>

namespace exppell {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline double to_double(const Rat& r) { return static_cast<double>(r); }

/// Exact square root of a nonnegative integer, if it is a perfect square.
std::optional<Int> int_sqrt_exact(const Int& n);

/// Exact k-th root of an integer (negative allowed for odd k).
std::optional<Int> int_root_exact(const Int& n, int k);

/// A Gaussian rational re + im*i. Rationals are kept in lowest terms with
/// positive denominator by the underlying representation.
struct GRat {
  Rat re;
  Rat im;

  GRat() = default;
  GRat(Rat r) : re(std::move(r)) {}  // NOLINT: implicit by design
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GRat(int r) : re(r) {}  // NOLINT
  GRat(const Int& r) : re(r) {}  // NOLINT

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  /// True iff the value is a rational integer (im = 0, denominator 1).
  bool is_int() const { return im == 0 && is_integer(re); }

  GRat conj() const { return GRat(re, -im); }

  friend GRat operator+(const GRat& a, const GRat& b) {
    return GRat(a.re + b.re, a.im + b.im);
  }
  friend GRat operator-(const GRat& a, const GRat& b) {
    return GRat(a.re - b.re, a.im - b.im);
  }
  friend GRat operator-(const GRat& a) { return GRat(-a.re, -a.im); }
  friend GRat operator*(const GRat& a, const GRat& b) {
    return GRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GRat operator/(const GRat& a, const GRat& b) {
    Rat n = b.re * b.re + b.im * b.im;  // norm, nonzero unless b == 0
    return GRat((a.re * b.re + a.im * b.im) / n,
                (a.im * b.re - a.re * b.im) / n);
  }
  GRat& operator+=(const GRat& b) { *this = *this + b; return *this; }
  GRat& operator-=(const GRat& b) { *this = *this - b; return *this; }
  GRat& operator*=(const GRat& b) { *this = *this * b; return *this; }

  friend bool operator==(const GRat& a, const GRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }

  /// Arbitrary total order (re first, then im); used for canonical sorting.
  friend bool operator<(const GRat& a, const GRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }

  std::complex<double> to_complex() const {
    return {to_double(re), to_double(im)};
  }
};

/// Exact square root over the rationals, if one exists (nonnegative input).
std::optional<Rat> rat_sqrt_exact(const Rat& r);

/// Exact k-th root over the rationals (negative allowed for odd k).
std::optional<Rat> rat_root_exact(const Rat& r, int k);

std::string rat_to_string(const Rat& r);

}  // namespace exppell

#endif
