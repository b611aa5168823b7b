#include "exppell/dio.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "exppell/error.hpp"

namespace exppell {

DioPoly DioPoly::constant(const Int& c) {
  DioPoly p;
  if (c != 0) p.terms[{}] = c;
  return p;
}

DioPoly DioPoly::variable(const std::string& name) {
  DioPoly p;
  p.terms[{{name, 1}}] = 1;
  return p;
}

DioPoly operator+(const DioPoly& a, const DioPoly& b) {
  DioPoly r = a;
  for (const auto& [m, c] : b.terms) {
    auto it = r.terms.find(m);
    if (it == r.terms.end()) {
      r.terms[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) r.terms.erase(it);
    }
  }
  return r;
}

DioPoly operator-(const DioPoly& a) {
  DioPoly r;
  for (const auto& [m, c] : a.terms) r.terms[m] = -c;
  return r;
}

namespace {
DioPoly::Mono mono_mul(const DioPoly::Mono& a, const DioPoly::Mono& b) {
  std::map<std::string, int> acc;
  for (const auto& [v, e] : a) acc[v] += e;
  for (const auto& [v, e] : b) acc[v] += e;
  return {acc.begin(), acc.end()};
}
}  // namespace

DioPoly operator*(const DioPoly& a, const DioPoly& b) {
  DioPoly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      auto m = mono_mul(ma, mb);
      auto it = r.terms.find(m);
      if (it == r.terms.end()) {
        r.terms[m] = ca * cb;
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms.erase(it);
      }
    }
  return r;
}

DioPoly DioPoly::pow(int k) const {
  DioPoly r = DioPoly::constant(1);
  DioPoly base = *this;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

Int DioPoly::eval(const std::map<std::string, Int>& env) const {
  Int acc = 0;
  for (const auto& [m, c] : terms) {
    Int t = c;
    for (const auto& [v, e] : m) {
      auto it = env.find(v);
      if (it == env.end())
        throw std::invalid_argument("unassigned dio variable " + v);
      for (int i = 0; i < e; ++i) t *= it->second;
    }
    acc += t;
  }
  return acc;
}

bool DioSystem::satisfied_by(const std::map<std::string, Int>& env) const {
  for (const auto& eq : equations)
    if (eq.lhs.eval(env) != eq.rhs.eval(env)) return false;
  return true;
}

namespace {

struct DioParser {
  const std::string& s;
  size_t pos = 0;
  std::vector<std::string>* vars;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) {
    std::ostringstream os;
    os << msg << " at position " << pos;
    throw Error(ErrorCode::SyntaxError, os.str());
  }

  DioPoly expr() {
    bool neg = accept('-');
    DioPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  DioPoly term() {
    DioPoly acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  DioPoly factor() {
    DioPoly base = atom();
    if (accept('^')) {
      skip_ws();
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        fail("expected an exponent");
      size_t start = pos;
      while (pos < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      long e = std::stol(s.substr(start, pos - start));
      if (e > 32) fail("exponent too large");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  DioPoly atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      return DioPoly::constant(Int(s.substr(start, pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) ||
              s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (std::find(vars->begin(), vars->end(), name) == vars->end())
        vars->push_back(name);
      return DioPoly::variable(name);
    }
    if (accept('(')) {
      DioPoly e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (accept('-')) return -atom();
    fail("expected a value");
  }
};

}  // namespace

DioSystem parse_dio(const std::string& text) {
  DioSystem sys;
  DioParser p{text, 0, &sys.variables};
  for (;;) {
    DioPoly lhs = p.expr();
    if (!p.accept('=')) p.fail("expected '='");
    DioPoly rhs = p.expr();
    sys.equations.push_back({lhs, rhs});
    if (p.accept(';')) {
      if (p.peek() == '\0') break;  // trailing separator
      continue;
    }
    p.skip_ws();
    if (p.pos >= text.size()) break;
    p.fail("expected ';' or end of input");
  }
  return sys;
}

namespace {

class FreshNamer {
 public:
  explicit FreshNamer(const std::vector<std::string>& used)
      : used_(used.begin(), used.end()) {}

  std::string next() {
    for (;;) {
      std::string name = "t" + std::to_string(++counter_);
      if (!used_.count(name)) {
        used_.insert(name);
        return name;
      }
    }
  }

 private:
  std::set<std::string> used_;
  int counter_ = 0;
};

// Splits p into monomials with positive coefficients going to *pos and the
// absolute values of negative ones going to *neg.
void split_signs(const DioPoly& p, DioPoly* pos, DioPoly* neg) {
  for (const auto& [m, c] : p.terms) {
    if (c > 0)
      pos->terms[m] = c;
    else
      neg->terms[m] = -c;
  }
}

}  // namespace

std::vector<Constraint> normalize_dio(const DioSystem& sys) {
  std::vector<Constraint> out;
  FreshNamer fresh(sys.variables);

  // Emits constraints computing the (nonnegative-coefficient) polynomial
  // and returns the variable holding its value.
  auto emit_poly = [&](const DioPoly& p) -> std::string {
    std::string sum_var;
    if (p.terms.empty()) {
      std::string v = fresh.next();
      out.push_back({Constraint::Shape::Const, v, "", "", Int(0)});
      return v;
    }
    for (const auto& [m, c] : p.terms) {
      // factors: the coefficient (if != 1 or the monomial is empty),
      // then each variable power.
      std::vector<std::string> factors;
      if (c != 1 || m.empty()) {
        std::string cv = fresh.next();
        out.push_back({Constraint::Shape::Const, cv, "", "", c});
        factors.push_back(cv);
      }
      for (const auto& [v, e] : m)
        for (int i = 0; i < e; ++i) factors.push_back(v);
      std::string prod = factors[0];
      for (size_t i = 1; i < factors.size(); ++i) {
        std::string t = fresh.next();
        out.push_back({Constraint::Shape::Mul, t, prod, factors[i], Int(0)});
        prod = t;
      }
      if (sum_var.empty()) {
        sum_var = prod;
      } else {
        std::string t = fresh.next();
        out.push_back({Constraint::Shape::Add, t, sum_var, prod, Int(0)});
        sum_var = t;
      }
    }
    return sum_var;
  };

  for (const auto& eq : sys.equations) {
    DioPoly moved = eq.lhs - eq.rhs;
    DioPoly lhs, rhs;
    split_signs(moved, &lhs, &rhs);
    std::string lv = emit_poly(lhs);
    std::string rv = emit_poly(rhs);
    out.push_back({Constraint::Shape::Copy, lv, rv, "", Int(0)});
  }
  return out;
}

bool constraints_satisfied(const std::vector<Constraint>& tac,
                           const DioSystem& sys,
                           const std::map<std::string, Int>& env) {
  std::map<std::string, Int> vals = env;
  for (const auto& c : tac) {
    auto get = [&](const std::string& v) -> Int {
      auto it = vals.find(v);
      if (it == vals.end())
        throw std::invalid_argument("constraint uses undefined " + v);
      return it->second;
    };
    switch (c.shape) {
      case Constraint::Shape::Const:
        vals[c.v] = c.c;
        break;
      case Constraint::Shape::Add:
        vals[c.v] = get(c.u) + get(c.u2);
        break;
      case Constraint::Shape::Mul:
        vals[c.v] = get(c.u) * get(c.u2);
        break;
      case Constraint::Shape::Copy:
        if (get(c.v) != get(c.u)) return false;
        break;
    }
  }
  return true;
}

std::optional<std::map<std::string, Int>> dio_brute_force(
    const DioSystem& sys, long bound) {
  const auto& vars = sys.variables;
  std::map<std::string, Int> env;
  std::vector<long> vals(vars.size(), -bound);
  if (vars.empty())
    return sys.satisfied_by(env) ? std::optional(env) : std::nullopt;
  for (;;) {
    for (size_t i = 0; i < vars.size(); ++i) env[vars[i]] = vals[i];
    if (sys.satisfied_by(env)) return env;
    size_t i = vars.size();
    while (i > 0) {
      --i;
      if (vals[i] < bound) {
        ++vals[i];
        break;
      }
      vals[i] = -bound;
      if (i == 0) return std::nullopt;
    }
  }
}

}  // namespace exppell
