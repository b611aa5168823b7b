#ifndef EXPPELL_CHECKER_HPP
#define EXPPELL_CHECKER_HPP

#include <map>
#include <optional>
#include <string>

#include "exppell/formula.hpp"

namespace exppell {

struct Bounds {
  int degree = 4;            // witness polynomials have degree <= degree
  int height = 10;           // and integer coefficients in [-height, height]
  long long budget = 1000000;  // candidate-assignment cap
};

/// A satisfying assignment for every existential variable (and the free
/// variables it was given), with the bounds recorded alongside.
struct Witness {
  std::map<std::string, Poly> values;
  int degree_bound = 0;
  int height_bound = 0;
};

/// Bounded model checking over Z[z]: atoms are evaluated exactly via the
/// algebra module; existentials range over integer-coefficient polynomials
/// with degree <= d and coefficients in [-H, H].
///
/// The search semantics is exhaustive enumeration in a fixed order:
/// coefficients are ordered 0, 1, -1, 2, -2, ...; polynomials are ordered
/// zero first, then by degree, then lexicographically by (c_deg, ..., c_0);
/// assignments are ordered lexicographically by quantifier position. The
/// implementation prunes with facts every in-bounds assignment must
/// satisfy (the values of all atoms at z = 1, exact solving of atoms with
/// one unbound variable, and the classification of the Pell equation's
/// polynomial solutions), so the returned witness is still the first one
/// in that order. A disjunction searches its left branch to exhaustion
/// before its right branch.
///
/// True results are sound for the paper's semantics; false results mean
/// only "no witness within bounds". Throws Error(BudgetExceeded) when more
/// than bounds.budget candidates get tried.
bool eval_formula(const FormulaPtr& f,
                  const std::map<std::string, Poly>& assignment,
                  const Bounds& bounds);

/// First witness of a sentence in the global enumeration order, if any.
std::optional<Witness> witness_search(const FormulaPtr& f,
                                      const Bounds& bounds);

/// Enumeration-order comparator (exposed for tests).
bool enum_less(const Poly& a, const Poly& b);

}  // namespace exppell

#endif
