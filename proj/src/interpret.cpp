#include "exppell/interpret.hpp"

#include <map>
#include <stdexcept>

namespace exppell {

FormulaPtr build_pell_atom(const TermPtr& h, const TermPtr& g) {
  // h^2 - (z^2-1) g^2 = 1  <=>  h*h + g*g = 1 + (z*z)*(g*g)
  TermPtr gg = t_mul(g, g);
  return f_eq(t_add(t_mul(h, h), gg),
              t_add(t_one(), t_mul(t_mul(t_z(), t_z()), gg)));
}

FormulaPtr build_div_atom(const TermPtr& A, const TermPtr& B,
                          const std::string& u) {
  // A - B = (z-1) u  <=>  B + z*u = A + u
  TermPtr uv = t_var(u);
  return f_eq(t_add(B, t_mul(t_z(), uv)), t_add(A, uv));
}

FormulaPtr build_phi(const TermPtr& T, FreshVars* fresh) {
  std::string h = fresh->next("h");
  std::string g = fresh->next("g");
  std::string u = fresh->next("u");
  FormulaPtr pell = build_pell_atom(t_var(h), t_var(g));
  FormulaPtr div = f_exists(u, build_div_atom(T, t_var(g), u));
  return f_exists(h, f_exists(g, f_and(pell, div)));
}

FormulaPtr build_val(const TermPtr& f, const TermPtr& g, FreshVars* fresh) {
  FormulaPtr pf = build_phi(f, fresh);
  FormulaPtr pg = build_phi(g, fresh);
  std::string h = fresh->next("d");
  FormulaPtr div = f_exists(h, build_div_atom(f, g, h));
  return f_and({pf, pg, div});
}

FormulaPtr build_const_def(const TermPtr& v, FreshVars* fresh) {
  std::string f = fresh->next("f");
  TermPtr fv = t_var(f);
  TermPtr f5 = t_mul(t_mul(t_mul(t_mul(fv, fv), fv), fv), fv);
  return f_exists(f, f_eq(t_mul(v, v), t_add(f5, t_one())));
}

TermPtr small_numeral(const Int& c) {
  if (c == 0) return t_zero();
  if (c == 1) return t_one();
  throw std::invalid_argument("small_numeral handles only 0 and 1");
}

FormulaPtr compile_interpretation(const DioSystem& sys) {
  std::vector<Constraint> tac = normalize_dio(sys);
  FreshVars fresh;

  std::vector<std::string> vars;
  std::map<std::string, bool> declared;
  auto declare = [&](const std::string& v) {
    if (!declared[v]) {
      declared[v] = true;
      vars.push_back(v);
    }
  };
  for (const auto& v : sys.variables) declare(v);

  std::vector<FormulaPtr> constraints;
  std::map<Int, std::string> power_vars;  // value 2^j -> variable
  int sum_counter = 0;

  // Variable holding the value 2^j, built by binary doubling from 1.
  std::function<std::string(int)> power_var = [&](int j) -> std::string {
    Int value = Int(1) << j;
    auto it = power_vars.find(value);
    if (it != power_vars.end()) return it->second;
    std::string name = "_p" + value.str();
    if (j == 0) {
      declare(name);
      constraints.push_back(
          build_val(t_var(name), small_numeral(Int(1)), &fresh));
    } else {
      std::string half = power_var(j - 1);
      declare(name);
      constraints.push_back(build_val(
          t_add(t_var(half), t_var(half)), t_var(name), &fresh));
    }
    power_vars[value] = name;
    return name;
  };

  for (const auto& c : tac) {
    switch (c.shape) {
      case Constraint::Shape::Const: {
        if (c.c < 0) throw std::logic_error("negative normalized constant");
        if (c.c <= 1) {
          declare(c.v);
          constraints.push_back(
              build_val(t_var(c.v), small_numeral(c.c), &fresh));
          break;
        }
        // Binary expansion: bit variables first, then a sum chain whose
        // last addition targets v itself.
        std::vector<int> bits;
        for (int j = 0; (Int(1) << j) <= c.c; ++j)
          if (boost::multiprecision::bit_test(c.c, j)) bits.push_back(j);
        if (bits.size() == 1) {
          std::string half = power_var(bits[0] - 1);
          declare(c.v);
          constraints.push_back(build_val(
              t_add(t_var(half), t_var(half)), t_var(c.v), &fresh));
          break;
        }
        std::vector<std::string> parts;
        for (int j : bits) parts.push_back(power_var(j));
        std::string acc = parts[0];
        for (size_t i = 1; i + 1 < parts.size(); ++i) {
          std::string s = "_s" + std::to_string(++sum_counter);
          declare(s);
          constraints.push_back(build_val(
              t_add(t_var(acc), t_var(parts[i])), t_var(s), &fresh));
          acc = s;
        }
        declare(c.v);
        constraints.push_back(build_val(
            t_add(t_var(acc), t_var(parts.back())), t_var(c.v), &fresh));
        break;
      }
      case Constraint::Shape::Add:
        declare(c.v);
        constraints.push_back(build_val(
            t_add(t_var(c.u), t_var(c.u2)), t_var(c.v), &fresh));
        break;
      case Constraint::Shape::Mul:
        declare(c.v);
        constraints.push_back(build_val(
            t_mul(t_var(c.u), t_var(c.u2)), t_var(c.v), &fresh));
        break;
      case Constraint::Shape::Copy:
        constraints.push_back(
            build_val(t_var(c.v), t_var(c.u), &fresh));
        break;
    }
  }

  std::vector<FormulaPtr> body;
  for (const auto& v : vars) body.push_back(build_phi(t_var(v), &fresh));
  body.insert(body.end(), constraints.begin(), constraints.end());

  FormulaPtr f = f_and(body);
  for (auto it = vars.rbegin(); it != vars.rend(); ++it)
    f = f_exists(*it, f);
  return f;
}

}  // namespace exppell
