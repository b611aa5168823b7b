#ifndef EXPPELL_FORMULA_HPP
#define EXPPELL_FORMULA_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "exppell/poly.hpp"

namespace exppell {

/// Terms of L_z = {0, 1, z, +, *, =}. Immutable trees.
struct Term {
  enum class Kind { Zero, One, Z, Var, Add, Mul };

  Kind kind;
  std::string name;                  // Var
  std::shared_ptr<const Term> lhs;   // Add/Mul
  std::shared_ptr<const Term> rhs;
};

using TermPtr = std::shared_ptr<const Term>;

TermPtr t_zero();
TermPtr t_one();
TermPtr t_z();
TermPtr t_var(std::string name);
TermPtr t_add(TermPtr a, TermPtr b);
TermPtr t_mul(TermPtr a, TermPtr b);

/// Exact evaluation in Q(i)[z] under a variable assignment.
Poly term_eval(const TermPtr& t, const std::map<std::string, Poly>& env);
void term_vars(const TermPtr& t, std::vector<std::string>* out);

/// Positive existential formulas: equalities closed under conjunction,
/// disjunction, and existential quantification. No negation and no
/// universal quantifier exist structurally.
struct Formula {
  enum class Kind { Eq, And, Or, Exists };

  Kind kind;
  TermPtr lhs, rhs;                        // Eq
  std::shared_ptr<const Formula> f1, f2;   // And/Or
  std::string var;                         // Exists
  std::shared_ptr<const Formula> body;     // Exists
};

using FormulaPtr = std::shared_ptr<const Formula>;

FormulaPtr f_eq(TermPtr l, TermPtr r);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);
FormulaPtr f_and(const std::vector<FormulaPtr>& fs);  // left fold; fs nonempty
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_exists(std::string var, FormulaPtr body);

/// S-expression serialization, e.g.
/// `(exists h (and (= (+ (* h h) y) x) ...))`; nested conjunctions are
/// flattened into one n-ary `and`.
std::string to_sexpr(const TermPtr& t);
std::string to_sexpr(const FormulaPtr& f);

/// Free variables in order of first occurrence.
std::vector<std::string> free_vars(const FormulaPtr& f);

/// Number of atoms (Eq leaves).
int atom_count(const FormulaPtr& f);

/// Check a formula under a full assignment: existential variables must be
/// present in the assignment (witness-checking mode).
bool check_with_assignment(const FormulaPtr& f,
                           const std::map<std::string, Poly>& env);

}  // namespace exppell

#endif
