#include "exppell/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "exppell/config.hpp"
#include "exppell/deps.hpp"
#include "exppell/error.hpp"
#include "exppell/format.hpp"
#include "exppell/interpret.hpp"
#include "exppell/pell.hpp"
#include "exppell/surface.hpp"
#include "exppell/verify.hpp"

namespace exppell {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::DomainError, "cannot open file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json grat_json(const GRat& c) {
  if (c.is_int()) return Json(num(c.re).convert_to<long long>());
  return Json(to_string(c));
}

Json certificate_json(const DepCertificate& cert) {
  Json j;
  j["independent"] = cert.relations.empty();
  j["relations"] = Json::array();
  for (const auto& rel : cert.relations) {
    Json r = Json::array();
    for (const auto& x : rel) r.push_back(rat_to_string(x));
    j["relations"].push_back(r);
  }
  j["basis"] = Json::array();
  for (const auto& p : cert.basis) j["basis"].push_back(to_string(p));
  j["coords"] = Json::array();
  for (const auto& row : cert.coords) {
    Json r = Json::array();
    for (const auto& a : row) r.push_back(a.convert_to<long long>());
    j["coords"].push_back(r);
  }
  j["constants"] = Json::array();
  for (const auto& c : cert.constants) j["constants"].push_back(grat_json(c));
  return j;
}

struct CliOptions {
  Config cfg;
  bool json = false;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact symbolic toolkit for the functional Pell equation "
               "x^2-(z^2-1)y^2=1 over rings of exponential polynomials"};
  app.fallthrough();

  std::string config_path;
  CliOptions opt;
  int flag_degree = 0, flag_height = 0, flag_samples = 0;
  double flag_tol = 0;
  app.add_option("--config", config_path, "key=value config file");
  auto* o_deg = app.add_option("--degree", flag_degree,
                               "bounded-search degree cap");
  auto* o_hei = app.add_option("--height", flag_height,
                               "bounded-search coefficient cap");
  auto* o_sam = app.add_option("--samples", flag_samples, "circle samples");
  auto* o_tol = app.add_option("--tol", flag_tol, "relative tolerance");
  app.add_flag("--json", opt.json, "JSON output where not the default");

  // pell
  auto* pell = app.add_subcommand("pell", "functional Pell solutions");
  pell->fallthrough();
  auto* pell_gen = pell->add_subcommand("gen", "emit (x_n, y_n)");
  long gen_n = 0;
  pell_gen->add_option("n", gen_n, "index")->required();
  auto* pell_rec =
      pell->add_subcommand("recognize", "classify a solution as (sign, n)");
  std::string xfile, yfile;
  pell_rec->add_option("xfile", xfile)->required();
  pell_rec->add_option("yfile", yfile)->required();

  // algebra
  auto* algebra = app.add_subcommand("algebra", "exact ring operations");
  algebra->fallthrough();
  auto* alg_arith = algebra->add_subcommand("arith", "a (op) b");
  std::string alg_op, alg_a, alg_b;
  alg_arith->add_option("op", alg_op, "add|sub|mul")->required();
  alg_arith->add_option("a", alg_a)->required();
  alg_arith->add_option("b", alg_b)->required();
  auto* alg_norm =
      algebra->add_subcommand("norm", "Nr(f + g w) = f^2 - (z^2-1) g^2");
  std::string norm_f, norm_g;
  alg_norm->add_option("f", norm_f)->required();
  alg_norm->add_option("g", norm_g)->required();
  auto* alg_eval = algebra->add_subcommand("eval", "evaluate a polynomial");
  std::string eval_p, eval_c;
  alg_eval->add_option("p", eval_p)->required();
  alg_eval->add_option("c", eval_c)->required();

  // deps
  auto* deps = app.add_subcommand("deps", "Q-dependence modulo constants");
  deps->fallthrough();
  auto* deps_check =
      deps->add_subcommand("check", "certificate for a file of polynomials");
  std::string deps_file;
  deps_check->add_option("file", deps_file, "one polynomial per line")
      ->required();

  // growth
  auto* growth =
      app.add_subcommand("growth", "numeric growth-inequality report");
  growth->fallthrough();
  std::string growth_h = "0";
  double growth_r = 0;
  growth->add_option("--h", growth_h, "polynomial h");
  auto* o_gr = growth->add_option("--r", growth_r, "radius (>= 74)");
  auto* growth_bc = growth->add_subcommand("bc", "Borel-Caratheodory constant");
  int bc_n = 0;
  double bc_r = 0, bc_R = 0;
  growth_bc->add_option("--n", bc_n)->required();
  growth_bc->add_option("--r", bc_r)->required();
  growth_bc->add_option("--R", bc_R)->required();

  // compile / check
  auto* compile = app.add_subcommand(
      "compile", "Diophantine system -> L_z sentence (S-expression)");
  compile->fallthrough();
  std::string compile_dio;
  compile->add_option("system", compile_dio)->required();
  auto* check = app.add_subcommand(
      "check", "bounded witness search for a compiled system");
  check->fallthrough();
  std::string check_dio;
  check->add_option("system", check_dio)->required();

  auto* verify_all =
      app.add_subcommand("verify-all", "run the acceptance suite");
  verify_all->fallthrough();

  app.require_subcommand(1);

  try {
    std::vector<std::string> argv = args;
    std::reverse(argv.begin(), argv.end());
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = load_config_file(config_path, cfg);
    if (o_deg->count()) cfg.degree = flag_degree;
    if (o_hei->count()) cfg.height = flag_height;
    if (o_sam->count()) cfg.samples = flag_samples;
    if (o_tol->count()) cfg.tolerance = flag_tol;
    cfg = apply_env(cfg);
    cfg.validate();
    opt.cfg = cfg;

    Json j;
    if (pell_gen->parsed()) {
      PellSolution s = pell_pair(gen_n, cfg.pell_index_cap);
      j["x"] = to_string(s.x);
      j["y"] = to_string(s.y);
      j["sign"] = s.sign;
      j["index"] = s.index;
    } else if (pell_rec->parsed()) {
      Poly x = parse_poly(read_file(xfile));
      Poly y = parse_poly(read_file(yfile));
      auto [sign, n] = pell_recognize(x, y, cfg.pell_index_cap);
      j["sign"] = sign;
      j["index"] = n;
    } else if (alg_arith->parsed()) {
      ExpPoly a = parse_exppoly(alg_a);
      ExpPoly b = parse_exppoly(alg_b);
      ExpPoly r;
      if (alg_op == "add")
        r = a + b;
      else if (alg_op == "sub")
        r = a - b;
      else if (alg_op == "mul")
        r = a * b;
      else
        throw Error(ErrorCode::DomainError, "op must be add, sub or mul");
      j["result"] = to_string(r);
      j["is_zero"] = r.is_zero();
    } else if (alg_norm->parsed()) {
      ExtElem e{parse_exppoly(norm_f), parse_exppoly(norm_g)};
      j["norm"] = to_string(ext_norm(e));
    } else if (alg_eval->parsed()) {
      Poly p = parse_poly(eval_p);
      Poly c = parse_poly(eval_c);
      if (!c.is_zero() && c.degree_nonzero() > 0)
        throw Error(ErrorCode::DomainError, "evaluation point must be constant");
      j["value"] = to_string(Poly(p.eval(c.constant_term())));
    } else if (deps_check->parsed()) {
      std::istringstream in(read_file(deps_file));
      std::vector<Poly> bs;
      std::string line;
      while (std::getline(in, line)) {
        bool blank = true;
        for (char ch : line)
          if (!std::isspace(static_cast<unsigned char>(ch))) blank = false;
        if (!blank) bs.push_back(parse_poly(line));
      }
      j = certificate_json(int_basis_modconst(bs));
    } else if (growth_bc->parsed()) {
      j["C"] = bc_constant(bc_n, bc_r, bc_R);
    } else if (growth->parsed()) {
      if (!o_gr->count())
        throw Error(ErrorCode::DomainError, "growth needs --r");
      GrowthReport rep =
          check_growth_lemma(parse_poly(growth_h), growth_r, cfg.samples);
      j["left"] = rep.lhs;
      j["right"] = rep.rhs;
      j["holds"] = rep.holds;
    } else if (compile->parsed()) {
      FormulaPtr f = compile_interpretation(parse_dio(compile_dio));
      if (opt.json) {
        j["sexpr"] = to_sexpr(f);
      } else {
        out << to_sexpr(f) << "\n";
        return 0;
      }
    } else if (check->parsed()) {
      DioSystem sys = parse_dio(check_dio);
      FormulaPtr f = compile_interpretation(sys);
      auto w = witness_search(f, opt.cfg.bounds());
      j["satisfiable_within_bounds"] = w.has_value();
      if (w) {
        Json slots, values;
        for (const auto& v : sys.variables) {
          const Poly& p = w->values.at(v);
          slots[v] = to_string(p);
          values[v] = grat_json(p.value_at_one());
        }
        j["witness"] = slots;
        j["solution_at_1"] = values;
      }
    } else if (verify_all->parsed()) {
      auto results = run_acceptance(opt.cfg);
      bool all = true;
      for (const auto& r : results) {
        all = all && r.passed;
        out << (r.passed ? "PASS" : "FAIL") << "  " << std::left
            << std::setw(24) << r.name << std::right << std::fixed
            << std::setprecision(2) << std::setw(8) << r.seconds << "s";
        if (!r.passed) out << "  " << r.detail;
        out << "\n";
      }
      out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
      return all ? 0 : 1;
    }
    out << j.dump() << "\n";
    return 0;
  } catch (const Error& e) {
    Json j;
    j["error"] = error_code_name(e.code());
    j["message"] = e.what();
    out << j.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = "InternalError";
    j["message"] = e.what();
    out << j.dump() << "\n";
    return 1;
  }
}

}  // namespace exppell
