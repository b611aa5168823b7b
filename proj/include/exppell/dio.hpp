#ifndef EXPPELL_DIO_HPP
#define EXPPELL_DIO_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exppell/number.hpp"

namespace exppell {

/// Multivariate polynomial over Z in the system's integer variables.
/// Monomials are sorted (variable name, exponent) lists.
struct DioPoly {
  using Mono = std::vector<std::pair<std::string, int>>;
  std::map<Mono, Int> terms;  // nonzero coefficients only

  static DioPoly constant(const Int& c);
  static DioPoly variable(const std::string& name);

  friend DioPoly operator+(const DioPoly& a, const DioPoly& b);
  friend DioPoly operator-(const DioPoly& a);
  friend DioPoly operator-(const DioPoly& a, const DioPoly& b) {
    return a + (-b);
  }
  friend DioPoly operator*(const DioPoly& a, const DioPoly& b);
  DioPoly pow(int k) const;

  Int eval(const std::map<std::string, Int>& env) const;
  bool is_zero() const { return terms.empty(); }
};

/// A system of polynomial equations with integer coefficients.
struct DioSystem {
  struct Equation {
    DioPoly lhs;
    DioPoly rhs;
  };
  std::vector<Equation> equations;
  std::vector<std::string> variables;  // order of first occurrence

  bool satisfied_by(const std::map<std::string, Int>& env) const;
};

/// Grammar: equations `P = Q` over integer literals, variables, `+ - * ^`,
/// separated by `;`. Throws Error(SyntaxError) with a position.
DioSystem parse_dio(const std::string& text);

/// Three-address constraints over Z.
struct Constraint {
  enum class Shape { Const, Add, Mul, Copy };
  Shape shape;
  std::string v;       // defined / left variable
  std::string u, u2;   // operands (Add/Mul), or u for Copy's right side
  Int c;               // Const
};

/// Rewrites the system into constraints of the shapes v = c (with c >= 0),
/// v = u + u', v = u * u', and v = v'. Subtraction is eliminated by moving
/// negative monomials across each equality, so constants stay nonnegative.
/// Fresh variables are introduced deterministically (t1, t2, ...).
std::vector<Constraint> normalize_dio(const DioSystem& sys);

/// Propagate a full assignment of the original variables through the
/// constraints; true iff all of them hold (used to cross-check semantics).
bool constraints_satisfied(const std::vector<Constraint>& tac,
                           const DioSystem& sys,
                           const std::map<std::string, Int>& env);

/// Exhaustive integer search with |x_i| <= bound; returns the first
/// solution in lexicographic order (-bound..bound per variable), if any.
std::optional<std::map<std::string, Int>> dio_brute_force(
    const DioSystem& sys, long bound);

}  // namespace exppell

#endif
