#include "exppell/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace exppell {

namespace {
TermPtr make_term(Term t) { return std::make_shared<const Term>(std::move(t)); }
FormulaPtr make_formula(Formula f) {
  return std::make_shared<const Formula>(std::move(f));
}
}  // namespace

TermPtr t_zero() {
  static TermPtr t = make_term({Term::Kind::Zero, "", nullptr, nullptr});
  return t;
}
TermPtr t_one() {
  static TermPtr t = make_term({Term::Kind::One, "", nullptr, nullptr});
  return t;
}
TermPtr t_z() {
  static TermPtr t = make_term({Term::Kind::Z, "", nullptr, nullptr});
  return t;
}
TermPtr t_var(std::string name) {
  return make_term({Term::Kind::Var, std::move(name), nullptr, nullptr});
}
TermPtr t_add(TermPtr a, TermPtr b) {
  return make_term({Term::Kind::Add, "", std::move(a), std::move(b)});
}
TermPtr t_mul(TermPtr a, TermPtr b) {
  return make_term({Term::Kind::Mul, "", std::move(a), std::move(b)});
}

Poly term_eval(const TermPtr& t, const std::map<std::string, Poly>& env) {
  switch (t->kind) {
    case Term::Kind::Zero: return Poly::zero();
    case Term::Kind::One: return Poly::one();
    case Term::Kind::Z: return Poly::var();
    case Term::Kind::Var: {
      auto it = env.find(t->name);
      if (it == env.end())
        throw std::invalid_argument("unassigned variable " + t->name);
      return it->second;
    }
    case Term::Kind::Add: return term_eval(t->lhs, env) + term_eval(t->rhs, env);
    case Term::Kind::Mul: return term_eval(t->lhs, env) * term_eval(t->rhs, env);
  }
  throw std::logic_error("bad term kind");
}

void term_vars(const TermPtr& t, std::vector<std::string>* out) {
  switch (t->kind) {
    case Term::Kind::Var:
      if (std::find(out->begin(), out->end(), t->name) == out->end())
        out->push_back(t->name);
      return;
    case Term::Kind::Add:
    case Term::Kind::Mul:
      term_vars(t->lhs, out);
      term_vars(t->rhs, out);
      return;
    default:
      return;
  }
}

FormulaPtr f_eq(TermPtr l, TermPtr r) {
  return make_formula(
      {Formula::Kind::Eq, std::move(l), std::move(r), nullptr, nullptr, "",
       nullptr});
}
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return make_formula({Formula::Kind::And, nullptr, nullptr, std::move(a),
                       std::move(b), "", nullptr});
}
FormulaPtr f_and(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) throw std::invalid_argument("empty conjunction");
  FormulaPtr acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = f_and(acc, fs[i]);
  return acc;
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return make_formula({Formula::Kind::Or, nullptr, nullptr, std::move(a),
                       std::move(b), "", nullptr});
}
FormulaPtr f_exists(std::string var, FormulaPtr body) {
  return make_formula({Formula::Kind::Exists, nullptr, nullptr, nullptr,
                       nullptr, std::move(var), std::move(body)});
}

namespace {
void sexpr_term(const TermPtr& t, std::ostringstream& os) {
  switch (t->kind) {
    case Term::Kind::Zero: os << '0'; return;
    case Term::Kind::One: os << '1'; return;
    case Term::Kind::Z: os << 'z'; return;
    case Term::Kind::Var: os << t->name; return;
    case Term::Kind::Add:
      os << "(+ ";
      sexpr_term(t->lhs, os);
      os << ' ';
      sexpr_term(t->rhs, os);
      os << ')';
      return;
    case Term::Kind::Mul:
      os << "(* ";
      sexpr_term(t->lhs, os);
      os << ' ';
      sexpr_term(t->rhs, os);
      os << ')';
      return;
  }
}

void collect_and(const FormulaPtr& f, std::vector<FormulaPtr>* out) {
  if (f->kind == Formula::Kind::And) {
    collect_and(f->f1, out);
    collect_and(f->f2, out);
  } else {
    out->push_back(f);
  }
}

void sexpr_formula(const FormulaPtr& f, std::ostringstream& os) {
  switch (f->kind) {
    case Formula::Kind::Eq:
      os << "(= ";
      sexpr_term(f->lhs, os);
      os << ' ';
      sexpr_term(f->rhs, os);
      os << ')';
      return;
    case Formula::Kind::And: {
      std::vector<FormulaPtr> parts;
      collect_and(f, &parts);
      os << "(and";
      for (const auto& p : parts) {
        os << ' ';
        sexpr_formula(p, os);
      }
      os << ')';
      return;
    }
    case Formula::Kind::Or:
      os << "(or ";
      sexpr_formula(f->f1, os);
      os << ' ';
      sexpr_formula(f->f2, os);
      os << ')';
      return;
    case Formula::Kind::Exists:
      os << "(exists " << f->var << ' ';
      sexpr_formula(f->body, os);
      os << ')';
      return;
  }
}

void free_vars_rec(const FormulaPtr& f, std::set<std::string>* bound,
                   std::vector<std::string>* out) {
  switch (f->kind) {
    case Formula::Kind::Eq: {
      std::vector<std::string> vs;
      term_vars(f->lhs, &vs);
      term_vars(f->rhs, &vs);
      for (auto& v : vs)
        if (!bound->count(v) &&
            std::find(out->begin(), out->end(), v) == out->end())
          out->push_back(v);
      return;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
      free_vars_rec(f->f1, bound, out);
      free_vars_rec(f->f2, bound, out);
      return;
    case Formula::Kind::Exists: {
      bool inserted = bound->insert(f->var).second;
      free_vars_rec(f->body, bound, out);
      if (inserted) bound->erase(f->var);
      return;
    }
  }
}
}  // namespace

std::string to_sexpr(const TermPtr& t) {
  std::ostringstream os;
  sexpr_term(t, os);
  return os.str();
}

std::string to_sexpr(const FormulaPtr& f) {
  std::ostringstream os;
  sexpr_formula(f, os);
  return os.str();
}

std::vector<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound;
  std::vector<std::string> out;
  free_vars_rec(f, &bound, &out);
  return out;
}

int atom_count(const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Eq: return 1;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return atom_count(f->f1) + atom_count(f->f2);
    case Formula::Kind::Exists: return atom_count(f->body);
  }
  return 0;
}

bool check_with_assignment(const FormulaPtr& f,
                           const std::map<std::string, Poly>& env) {
  switch (f->kind) {
    case Formula::Kind::Eq:
      return term_eval(f->lhs, env) == term_eval(f->rhs, env);
    case Formula::Kind::And:
      return check_with_assignment(f->f1, env) &&
             check_with_assignment(f->f2, env);
    case Formula::Kind::Or:
      return check_with_assignment(f->f1, env) ||
             check_with_assignment(f->f2, env);
    case Formula::Kind::Exists:
      if (!env.count(f->var))
        throw std::invalid_argument("no witness value for " + f->var);
      return check_with_assignment(f->body, env);
  }
  throw std::logic_error("bad formula kind");
}

}  // namespace exppell
