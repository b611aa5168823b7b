#ifndef EXPPELL_INTERPRET_HPP
#define EXPPELL_INTERPRET_HPP

#include <string>
#include <vector>

#include "exppell/dio.hpp"
#include "exppell/formula.hpp"

namespace exppell {

/// Deterministic source of fresh quantified-variable names (_h1, _g1, ...).
class FreshVars {
 public:
  std::string next(const std::string& stem) {
    return "_" + stem + std::to_string(++counter_);
  }

 private:
  int counter_ = 0;
};

/// phi(T):  exists h exists g ((h^2 - (z^2-1) g^2 = 1) and
///                             (exists u, T - g = (z-1) u)),
/// the membership test for R'_Z. The language has no subtraction, so the
/// Pell atom is emitted as  h*h + g*g = 1 + (z*z)*(g*g)  and the
/// divisibility atom as  g + z*u = T + u.
FormulaPtr build_phi(const TermPtr& T, FreshVars* fresh);

/// Val(f, g): f, g in R'_Z and f(1) = g(1); the conjunction of phi(f),
/// phi(g) and the divisibility atom g + z*h = f + h.
FormulaPtr build_val(const TermPtr& f, const TermPtr& g, FreshVars* fresh);

/// Theorem-2 constant test: exists f, v^2 = f^5 + 1.
FormulaPtr build_const_def(const TermPtr& v, FreshVars* fresh);

/// The divisibility-only part  exists u, A - B = (z-1) u  (positively
/// encoded); exposed for tests.
FormulaPtr build_div_atom(const TermPtr& A, const TermPtr& B,
                          const std::string& u);

/// The Pell atom h^2 - (z^2-1) g^2 = 1, positively encoded.
FormulaPtr build_pell_atom(const TermPtr& h, const TermPtr& g);

/// Compiles a Diophantine system into an L_z sentence via theta(f) = f(1):
/// one existential per (original + fresh) variable, each constrained by
/// phi; constraints map to Val as v=c -> Val(v, numeral), v=u+u' ->
/// Val(u+u', v), v=u*u' -> Val(u*u', v), v=v' -> Val(v, v'). Constants
/// >= 2 are built from 0 and 1 by binary doubling through fresh variables.
FormulaPtr compile_interpretation(const DioSystem& sys);

/// Numeral term for c in {0, 1}.
TermPtr small_numeral(const Int& c);

}  // namespace exppell

#endif
