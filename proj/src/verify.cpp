#include "exppell/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "exppell/deps.hpp"
#include "exppell/format.hpp"
#include "exppell/interpret.hpp"
#include "exppell/pell.hpp"
#include "exppell/surface.hpp"

namespace exppell {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& msg) {
    if (ok) {
      ok = false;
      detail = msg;
    }
  }
  void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
};

// --- criterion 1: Pell suite -------------------------------------------

void pell_suite(Check* c) {
  for (long n = -50; n <= 50; ++n) {
    PellSolution s = pell_pair(n);
    c->require(pell_verify(s.x, s.y), "pell identity fails at n=" + std::to_string(n));
    c->require(s.y.value_at_one() == GRat(Int(n)),
               "y_n(1) != n at n=" + std::to_string(n));
    c->require(s.x.value_at_one() == GRat(1),
               "x_n(1) != 1 at n=" + std::to_string(n));
    if (n != 0) {
      c->require(s.x.degree() == std::optional<int>(static_cast<int>(std::labs(n))),
                 "deg x_n != |n| at n=" + std::to_string(n));
      c->require(s.y.degree() == std::optional<int>(static_cast<int>(std::labs(n)) - 1),
                 "deg y_n != |n|-1 at n=" + std::to_string(n));
    }
    auto [sign, idx] = pell_recognize(s.x, s.y);
    c->require(sign == 1 && idx == n,
               "recognize does not invert pell_pair at n=" + std::to_string(n));
  }
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int t = 0; t < 200; ++t) {
    long m = d(rng), n = d(rng);
    PellSolution p = pell_compose(pell_pair(m), pell_pair(n));
    PellSolution q = pell_pair(m + n);
    c->require(p.x == q.x && p.y == q.y,
               "group law fails at (" + std::to_string(m) + "," +
                   std::to_string(n) + ")");
  }
}

// --- criterion 2: norm / kernel suite ----------------------------------

Poly random_zpoly(std::mt19937& rng, int maxdeg, int maxc, bool gaussian) {
  std::uniform_int_distribution<int> dd(0, maxdeg), dc(-maxc, maxc);
  Poly p;
  int deg = dd(rng);
  for (int k = 0; k <= deg; ++k) {
    int re = dc(rng);
    int im = gaussian && dc(rng) > maxc / 2 ? dc(rng) : 0;
    if (re || im) p.set_coeff(k, GRat(Rat(re), Rat(im)));
  }
  return p;
}

ExpPoly random_exppoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> dn(1, 2);
  std::vector<ExpPoly::Term> raw;
  int n = dn(rng);
  for (int j = 0; j < n; ++j) {
    Poly coeff = random_zpoly(rng, 2, 3, true);
    Poly expo = random_zpoly(rng, 2, 2, false).without_constant();
    raw.push_back({coeff, expo});
  }
  return ExpPoly::normalize(raw);
}

void norm_suite(Check* c) {
  ExtElem fund = ExtElem::from_polys(Poly::var(), Poly::one());
  ExtElem inv = ExtElem::from_polys(Poly::var(), Poly(-1));
  for (int n = -20; n <= 20; ++n) {
    ExtElem u = n >= 0 ? fund.pow(n) : inv.pow(-n);
    c->require(ext_norm(u) == ExpPoly::one(),
               "Nr((z+w)^n) != 1 at n=" + std::to_string(n));
  }
  std::mt19937 rng(31337);
  for (int t = 0; t < 100; ++t) {
    ExtElem a{random_exppoly(rng), random_exppoly(rng)};
    ExtElem b{random_exppoly(rng), random_exppoly(rng)};
    c->require(ext_norm(a * b) == ext_norm(a) * ext_norm(b),
               "norm multiplicativity fails (trial " + std::to_string(t) + ")");
    c->require(ext_conj(a * b) == ext_conj(a) * ext_conj(b),
               "conjugation homomorphism fails (trial " + std::to_string(t) + ")");
    c->require(ext_conj(ext_conj(a)) == a, "conjugation is not an involution");
  }
}

// --- criterion 3: growth constants -------------------------------------

void growth_suite(Check* c, int samples) {
  double cval = bc_constant(2, 75, 147);
  c->require(std::abs(cval - 5.0) <= 1e-12,
             "C_2(75,147) != 5 (got " + std::to_string(cval) + ")");

  SurfaceFn wfn = [](const SurfacePoint& p) { return p.w; };
  for (double rho : {1.0, 2.0, 10.0, 74.0}) {
    double m = circle_stats(wfn, 0.0, rho, samples).max_modulus;
    double want = std::sqrt(rho * rho + 1.0);
    c->require(std::abs(m - want) <= 1e-6,
               "max |w| on |z|=" + std::to_string(rho) + " is off");
  }

  const Poly zv = Poly::var();
  const std::vector<Poly> hs = {Poly::zero(), Poly::one(), zv, zv * zv,
                                zv * zv * zv};
  for (const Poly& h : hs)
    for (double r : {74.0, 100.0, 200.0}) {
      GrowthReport rep = check_growth_lemma(h, r, samples);
      if (!rep.holds) {
        std::ostringstream os;
        os << "growth lemma fails for h=" << to_string(h) << ", r=" << r
           << " (lhs " << rep.lhs << " rhs " << rep.rhs << ")";
        c->fail(os.str());
      }
    }
}

// --- criterion 4: dependence oracle ------------------------------------

// Brute force over primitive integer relation vectors in [-10,10]^n (first
// nonzero entry positive), with denominators cleared to int64.
bool oracle_dependent(const std::vector<Poly>& bs) {
  std::vector<Poly> stripped;
  for (const auto& b : bs) stripped.push_back(strip_const(b));
  std::set<int> degset;
  for (const auto& b : stripped)
    for (const auto& [k, coef] : b.terms()) degset.insert(k);
  std::vector<int> degs(degset.begin(), degset.end());
  Int den_lcm = 1;
  for (const auto& b : stripped)
    for (int k : degs) {
      GRat coef = b.coeff(k);
      den_lcm = boost::multiprecision::lcm(den_lcm, den(coef.re));
      den_lcm = boost::multiprecision::lcm(den_lcm, den(coef.im));
    }
  size_t n = bs.size();
  size_t m = 2 * degs.size();
  std::vector<std::vector<long long>> w(n, std::vector<long long>(m, 0));
  for (size_t k = 0; k < n; ++k)
    for (size_t j = 0; j < degs.size(); ++j) {
      GRat coef = stripped[k].coeff(degs[j]);
      w[k][2 * j] = Int(num(coef.re) * den_lcm / den(coef.re))
                        .convert_to<long long>();
      w[k][2 * j + 1] = Int(num(coef.im) * den_lcm / den(coef.im))
                            .convert_to<long long>();
    }
  if (m == 0) return true;  // all inputs constant: any e_k is a relation

  std::vector<int> lam(n, -10);
  for (;;) {
    int first = 0;
    size_t fi = 0;
    for (; fi < n; ++fi)
      if (lam[fi] != 0) {
        first = lam[fi];
        break;
      }
    if (fi < n && first > 0) {
      bool zero = true;
      for (size_t j = 0; j < m && zero; ++j) {
        long long acc = 0;
        for (size_t k = 0; k < n; ++k) acc += lam[k] * w[k][j];
        zero = acc == 0;
      }
      if (zero) return true;
    }
    size_t i = n;
    for (;;) {
      if (i == 0) return false;
      --i;
      if (lam[i] < 10) {
        ++lam[i];
        break;
      }
      lam[i] = -10;
    }
  }
}

void deps_suite(Check* c) {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> dn(2, 5), dsmall(-3, 3);
  for (int t = 0; t < 100 && c->ok; ++t) {
    int n = dn(rng);
    std::vector<Poly> bs;
    for (int k = 0; k < n - 1; ++k) bs.push_back(random_zpoly(rng, 4, 9, true));
    if (t % 2 == 0 && n >= 2) {
      // plant a small dependence: a*b_i + c*b_j + constant
      std::uniform_int_distribution<int> di(0, n - 2);
      int i = di(rng), j = di(rng);
      Poly planted = bs[i].scaled(GRat(dsmall(rng))) +
                     bs[j].scaled(GRat(dsmall(rng))) + Poly(dsmall(rng));
      bs.push_back(planted);
    } else {
      bs.push_back(random_zpoly(rng, 4, 9, true));
    }

    auto rels = qdep_modconst(bs);
    bool oracle = oracle_dependent(bs);
    c->require(!rels.empty() == oracle,
               "oracle disagrees with qdep_modconst (trial " +
                   std::to_string(t) + ")");
    for (const auto& lam : rels) {
      Poly acc;
      for (size_t k = 0; k < bs.size(); ++k)
        acc += bs[k].scaled(GRat(lam[k]));
      c->require(acc.is_zero() || acc.degree_nonzero() == 0,
                 "relation does not yield a constant (trial " +
                     std::to_string(t) + ")");
    }

    DepCertificate cert = int_basis_modconst(bs);
    for (size_t k = 0; k < bs.size(); ++k) {
      Poly rec = Poly(cert.constants[k]);
      for (size_t j = 0; j < cert.basis.size(); ++j)
        rec += cert.basis[j].scaled(GRat(Rat(cert.coords[k][j])));
      c->require(rec == bs[k], "certificate does not reconstruct input " +
                                   std::to_string(k));
    }

    auto chain = descent_trace(bs);
    size_t prev = bs.size();
    c->require(chain.size() <= bs.size(), "descent chain too long");
    for (const auto& step : chain) {
      c->require(step.coords.size() == prev, "descent coords shape");
      c->require(step.basis.size() < prev,
                 "descent does not strictly decrease");
      prev = step.basis.size();
    }
  }
}

// --- criterion 5: reduction round-trip ---------------------------------

const std::vector<SuiteEntry> kSuite = {
    {"X*X = 4", true, true, "X = +-2"},
    {"X+Y = 3; X*Y = 2", true, true, "(1,2) and (2,1)"},
    {"X^2 + Y^2 = 25", true, false,
     "solvable over Z by (3,4); the value-25 slot needs the degree-24 Pell "
     "witness y_25, far past the degree bound"},
    {"2*X = 1", false, false, "parity"},
    {"X^2 = 2", false, false, "2 is not a square"},
    {"X = 0", true, true, ""},
    {"X + 1 = 1", true, true, ""},
    {"X + 2 = 1", true, true, "X = -1 exercises negative Pell indices"},
    {"X + X = 4", true, true, ""},
    {"X*X + X = 2", true, true, "X = 1 or X = -2"},
    {"X*X = X", true, true, "idempotents 0 and 1"},
    {"3*X = X + X + X", true, true, "holds for every X"},
};

void reduction_suite(Check* c, const Bounds& bounds) {
  for (const auto& entry : kSuite) {
    DioSystem sys = parse_dio(entry.dio);

    auto oracle = dio_brute_force(sys, 100);
    c->require(oracle.has_value() == entry.solvable_over_z,
               "integer oracle disagrees with ground truth: " + entry.dio);

    FormulaPtr sentence = compile_interpretation(sys);
    auto witness = witness_search(sentence, bounds);
    c->require(witness.has_value() == entry.witness_within_bounds,
               "bounded search outcome differs from the documented one: " +
                   entry.dio);

    if (witness) {
      // theta(f) = f(1): the slots must give a genuine integer solution.
      std::map<std::string, Int> sol;
      for (const auto& v : sys.variables) {
        auto it = witness->values.find(v);
        c->require(it != witness->values.end(),
                   "witness lacks a slot for " + v + ": " + entry.dio);
        if (it == witness->values.end()) continue;
        GRat at1 = it->second.value_at_one();
        c->require(at1.is_int(), "slot value at 1 is not an integer");
        sol[v] = num(at1.re);
      }
      c->require(sys.satisfied_by(sol),
                 "witness slots do not solve the system at z=1: " + entry.dio);
    }
  }
}

// --- criterion 6: explicit Lemma-9 witnesses ---------------------------

std::vector<std::string> quantified_in_order(const FormulaPtr& f) {
  std::vector<std::string> out;
  std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& g) {
    switch (g->kind) {
      case Formula::Kind::Exists:
        out.push_back(g->var);
        walk(g->body);
        return;
      case Formula::Kind::And:
      case Formula::Kind::Or:
        walk(g->f1);
        walk(g->f2);
        return;
      default:
        return;
    }
  };
  walk(f);
  return out;
}

void phi_witness_suite(Check* c) {
  for (long n : {0L, 1L, -1L, 2L, -2L, 3L}) {
    FreshVars fresh;
    FormulaPtr phi = build_phi(t_var("T"), &fresh);
    auto qv = quantified_in_order(phi);
    c->require(qv.size() == 3, "phi should have 3 existentials");
    c->require(atom_count(phi) == 2, "phi should have 2 atoms");
    PellSolution s = pell_pair(n);
    Poly target = Poly(GRat(Int(n)));
    auto u = Poly::div_exact(target - s.y, Poly::var() - Poly::one());
    c->require(u.has_value(), "T - y_n is not divisible by z-1");
    if (!u) continue;
    std::map<std::string, Poly> env = {{"T", target},
                                       {qv[0], s.x},
                                       {qv[1], s.y},
                                       {qv[2], *u}};
    c->require(check_with_assignment(phi, env),
               "constructed witness fails for n=" + std::to_string(n));
  }
}

CriterionResult timed(const std::string& name, double limit_s,
                      const std::function<void(Check*)>& body) {
  CriterionResult r;
  r.name = name;
  Check c;
  auto t0 = Clock::now();
  try {
    body(&c);
  } catch (const std::exception& e) {
    c.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  if (c.ok && r.seconds > limit_s) {
    c.ok = false;
    c.detail = "runtime limit exceeded";
  }
  r.passed = c.ok;
  r.detail = c.ok ? "" : c.detail;
  return r;
}

}  // namespace

const std::vector<SuiteEntry>& golden_suite() { return kSuite; }

std::vector<CriterionResult> run_acceptance(const Config& cfg) {
  std::vector<CriterionResult> out;
  out.push_back(timed("pell-suite", 5.0, pell_suite));
  out.push_back(timed("norm-kernel-suite", 5.0, norm_suite));
  out.push_back(timed("growth-constants", 30.0, [&](Check* c) {
    growth_suite(c, cfg.samples);
  }));
  out.push_back(timed("dependence-oracle", 10.0, deps_suite));
  out.push_back(timed("reduction-round-trip", 60.0, [&](Check* c) {
    reduction_suite(c, cfg.bounds());
  }));
  out.push_back(timed("phi-explicit-witnesses", 2.0, phi_witness_suite));
  return out;
}

}  // namespace exppell
