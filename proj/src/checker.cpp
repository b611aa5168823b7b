#include "exppell/checker.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "exppell/error.hpp"
#include "exppell/pell.hpp"

namespace exppell {

namespace {

// ---------------------------------------------------------------------
// Multivariate normal form of atoms: polynomials in the quantified
// variables with Z[z] coefficients. An atom L = R is stored as L - R.

using VarMono = std::vector<std::pair<std::string, int>>;  // sorted

struct MPoly {
  std::map<VarMono, Poly> terms;

  void add(const VarMono& m, const Poly& c) {
    if (c.is_zero()) return;
    auto it = terms.find(m);
    if (it == terms.end()) {
      terms[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
};

VarMono mono_mul(const VarMono& a, const VarMono& b) {
  std::map<std::string, int> acc;
  for (const auto& [v, e] : a) acc[v] += e;
  for (const auto& [v, e] : b) acc[v] += e;
  return {acc.begin(), acc.end()};
}

MPoly mpoly_add(const MPoly& a, const MPoly& b) {
  MPoly r = a;
  for (const auto& [m, c] : b.terms) r.add(m, c);
  return r;
}

MPoly mpoly_mul(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) r.add(mono_mul(ma, mb), ca * cb);
  return r;
}

MPoly term_to_mpoly(const TermPtr& t) {
  MPoly r;
  switch (t->kind) {
    case Term::Kind::Zero:
      return r;
    case Term::Kind::One:
      r.add({}, Poly::one());
      return r;
    case Term::Kind::Z:
      r.add({}, Poly::var());
      return r;
    case Term::Kind::Var:
      r.add({{t->name, 1}}, Poly::one());
      return r;
    case Term::Kind::Add:
      return mpoly_add(term_to_mpoly(t->lhs), term_to_mpoly(t->rhs));
    case Term::Kind::Mul:
      return mpoly_mul(term_to_mpoly(t->lhs), term_to_mpoly(t->rhs));
  }
  throw std::logic_error("bad term kind");
}

// Substitute the bound variables by their values.
MPoly reduce(const MPoly& m, const std::map<std::string, Poly>& bound) {
  MPoly r;
  for (const auto& [mono, c] : m.terms) {
    Poly coeff = c;
    VarMono rest;
    for (const auto& [v, e] : mono) {
      auto it = bound.find(v);
      if (it == bound.end())
        rest.emplace_back(v, e);
      else
        coeff *= it->second.pow(e);
    }
    r.add(rest, coeff);
  }
  return r;
}

bool is_ground(const MPoly& m) {
  for (const auto& [mono, c] : m.terms)
    if (!mono.empty()) return false;
  return true;
}

// Satisfied iff the reduced atom is identically zero; only meaningful when
// ground.
bool ground_holds(const MPoly& m) { return m.terms.empty(); }

// ---------------------------------------------------------------------
// The z = 1 shadow of an atom: since theta(f) = f(1) is a ring
// homomorphism, every witness satisfies the atom's image at z = 1, an
// integer relation among the variables' values at 1. Terms whose
// coefficient vanishes at 1 drop out (notably (z-1)-multiples).

struct Shadow {
  std::map<VarMono, Rat> terms;
  std::vector<std::string> unbound;
  bool usable = true;  // false when a coefficient is not real at 1
};

Shadow shadow_of(const MPoly& reduced) {
  Shadow s;
  for (const auto& [mono, c] : reduced.terms) {
    GRat v = c.value_at_one();
    if (!v.is_real()) {
      s.usable = false;  // cannot happen over Z[z]; do not filter
      return s;
    }
    if (v.re == 0) continue;
    s.terms[mono] = v.re;
  }
  std::set<std::string> vars;
  for (const auto& [mono, c] : s.terms)
    for (const auto& [name, e] : mono) vars.insert(name);
  s.unbound.assign(vars.begin(), vars.end());
  return s;
}

Rat shadow_eval(const Shadow& s,
                const std::map<std::string, long long>& res) {
  Rat acc = 0;
  for (const auto& [mono, c] : s.terms) {
    Rat t = c;
    for (const auto& [v, e] : mono) {
      Rat x(res.at(v));
      for (int i = 0; i < e; ++i) t *= x;
    }
    acc += t;
  }
  return acc;
}

// ---------------------------------------------------------------------
// Enumeration order: coefficients ranked 0, 1, -1, 2, -2, ...; polynomials
// zero-first, then degree-major, then lexicographic on (c_deg, ..., c_0).

long long coeff_rank(long long c) {
  return c == 0 ? 0 : (c > 0 ? 2 * c - 1 : -2 * c);
}

long long rank_to_coeff(long long rank) {
  if (rank == 0) return 0;
  return rank % 2 == 1 ? (rank + 1) / 2 : -rank / 2;
}

long long int_coeff(const Poly& p, int k) {
  return num(p.coeff(k).re).convert_to<long long>();
}

}  // namespace

bool enum_less(const Poly& a, const Poly& b) {
  int da = a.is_zero() ? -1 : a.degree_nonzero();
  int db = b.is_zero() ? -1 : b.degree_nonzero();
  if (da != db) return da < db;
  for (int k = da; k >= 0; --k) {
    long long ra = coeff_rank(int_coeff(a, k));
    long long rb = coeff_rank(int_coeff(b, k));
    if (ra != rb) return ra < rb;
  }
  return false;
}

namespace {

bool in_bounds(const Poly& p, const Bounds& b) {
  if (!p.has_integer_coeffs()) return false;
  if (!p.is_zero() && p.degree_nonzero() > b.degree) return false;
  return p.max_abs_int_coeff() <= b.height;
}

// Lazy stream of in-bounds polynomials in enumeration order whose value
// at 1 lies in the residue set (nullopt = unconstrained).
class PolyStream {
 public:
  PolyStream(const Bounds& b,
             const std::optional<std::vector<long long>>& residues)
      : bounds_(b), has_filter_(residues.has_value()) {
    if (residues) residues_ = *residues;
  }

  std::optional<Poly> next() {
    for (;;) {
      if (stage_ == 0) {
        stage_ = 1;
        deg_ = 0;
        prefix_.clear();
        c0_ready_ = false;
        if (allows(0)) return Poly::zero();
        continue;
      }
      if (deg_ > bounds_.degree) return std::nullopt;
      if (!c0_ready_) build_c0_list();
      if (c0_pos_ < c0_list_.size()) return assemble(c0_list_[c0_pos_++]);
      if (!advance_prefix()) {
        ++deg_;
        if (deg_ > bounds_.degree) return std::nullopt;
        prefix_.assign(deg_, 0);
        prefix_[0] = 1;  // leading coefficient +1
      }
      c0_ready_ = false;
    }
  }

 private:
  bool allows(long long r) const {
    return !has_filter_ ||
           std::binary_search(residues_.begin(), residues_.end(), r);
  }

  // prefix_ holds coefficient ranks for degrees deg_ .. 1, most significant
  // first; prefix_[0] >= 1 keeps the leading coefficient nonzero.
  bool advance_prefix() {
    if (deg_ == 0) return false;
    const long long maxrank = 2LL * bounds_.height;
    int i = static_cast<int>(prefix_.size()) - 1;
    while (i >= 0) {
      if (prefix_[i] < maxrank) {
        ++prefix_[i];
        return true;
      }
      prefix_[i] = (i == 0) ? 1 : 0;
      --i;
    }
    return false;
  }

  void build_c0_list() {
    c0_list_.clear();
    c0_pos_ = 0;
    c0_ready_ = true;
    if (deg_ == 0) {
      for (long long rank = 1; rank <= 2LL * bounds_.height; ++rank) {
        long long c = rank_to_coeff(rank);
        if (allows(c)) c0_list_.push_back(c);
      }
      return;
    }
    if (!has_filter_) {
      for (long long rank = 0; rank <= 2LL * bounds_.height; ++rank)
        c0_list_.push_back(rank_to_coeff(rank));
      return;
    }
    long long psum = 0;
    for (long long rank : prefix_) psum += rank_to_coeff(rank);
    std::vector<long long> cs;
    for (long long r : residues_) {
      long long c0 = r - psum;
      if (std::abs(c0) <= bounds_.height) cs.push_back(c0);
    }
    std::sort(cs.begin(), cs.end(), [](long long a, long long b) {
      return coeff_rank(a) < coeff_rank(b);
    });
    c0_list_ = std::move(cs);
  }

  Poly assemble(long long c0) const {
    Poly p;
    for (size_t i = 0; i < prefix_.size(); ++i) {
      long long c = rank_to_coeff(prefix_[i]);
      if (c != 0) p.set_coeff(deg_ - static_cast<int>(i), GRat(Int(c)));
    }
    if (c0 != 0) p.set_coeff(0, GRat(Int(c0)));
    return p;
  }

  Bounds bounds_;
  std::vector<long long> residues_;
  bool has_filter_;
  int stage_ = 0;
  int deg_ = 0;
  std::vector<long long> prefix_;
  std::vector<long long> c0_list_;
  size_t c0_pos_ = 0;
  bool c0_ready_ = false;
};

// ---------------------------------------------------------------------
// Prenex branches: existential prefix + conjunction of atoms. Disjunction
// splits into branches searched left to right.

struct Branch {
  std::vector<std::string> vars;
  std::vector<MPoly> atoms;
};

void prenex(const FormulaPtr& f, std::vector<Branch>* out) {
  switch (f->kind) {
    case Formula::Kind::Eq: {
      MPoly l = term_to_mpoly(f->lhs);
      MPoly r = term_to_mpoly(f->rhs);
      MPoly diff = l;
      for (const auto& [m, c] : r.terms) diff.add(m, -c);
      out->push_back({{}, {diff}});
      return;
    }
    case Formula::Kind::And: {
      std::vector<Branch> a, b;
      prenex(f->f1, &a);
      prenex(f->f2, &b);
      for (const auto& ba : a)
        for (const auto& bb : b) {
          Branch m;
          m.vars = ba.vars;
          m.vars.insert(m.vars.end(), bb.vars.begin(), bb.vars.end());
          m.atoms = ba.atoms;
          m.atoms.insert(m.atoms.end(), bb.atoms.begin(), bb.atoms.end());
          out->push_back(std::move(m));
        }
      return;
    }
    case Formula::Kind::Or:
      prenex(f->f1, out);
      prenex(f->f2, out);
      return;
    case Formula::Kind::Exists: {
      std::vector<Branch> inner;
      prenex(f->body, &inner);
      for (auto& b : inner) {
        b.vars.insert(b.vars.begin(), f->var);
        out->push_back(std::move(b));
      }
      return;
    }
  }
}

// ---------------------------------------------------------------------
// The solver: depth-first search over the existential prefix with sound
// pruning (residue shadows, atom solving, Pell classification). The first
// complete assignment it reaches is the first witness in the global
// enumeration order, because every skipped candidate provably violates
// some atom.

struct PellEntry {
  long n;
  Poly x;
  Poly y;
};

class Solver {
 public:
  Solver(Branch branch, const Bounds& bounds,
         const std::map<std::string, Poly>& free_env, long long* budget)
      : branch_(std::move(branch)), bounds_(bounds), bound_(free_env),
        budget_(budget) {
    std::set<std::string> seen;
    for (const auto& [k, v] : bound_) seen.insert(k);
    for (const auto& v : branch_.vars)
      if (!seen.insert(v).second)
        throw std::invalid_argument("variable bound twice: " + v);
    // deg x_n = |n|, so the in-bounds Pell pairs have |n| <= degree.
    for (long n = 0; n <= bounds_.degree; ++n) {
      PellSolution s = pell_pair(n);
      if (in_bounds(s.x, bounds_) && in_bounds(s.y, bounds_))
        pell_table_.push_back({n, s.x, s.y});
    }
    max_residue_ =
        static_cast<long long>(bounds_.height) * (bounds_.degree + 1);
  }

  std::optional<std::map<std::string, Poly>> solve() {
    if (!ground_atoms_ok() || !propagate()) return std::nullopt;
    if (dfs(0)) return bound_;
    return std::nullopt;
  }

 private:
  using Domain = std::optional<std::vector<long long>>;  // sorted

  std::vector<long long> full_domain() const {
    std::vector<long long> d;
    d.reserve(2 * max_residue_ + 1);
    for (long long r = -max_residue_; r <= max_residue_; ++r)
      d.push_back(r);
    return d;
  }

  static bool intersect(Domain* d, const std::vector<long long>& vals) {
    if (!*d) {
      *d = vals;
      return true;
    }
    std::vector<long long> out;
    std::set_intersection((*d)->begin(), (*d)->end(), vals.begin(),
                          vals.end(), std::back_inserter(out));
    bool changed = out.size() != (*d)->size();
    **d = std::move(out);
    return changed;
  }

  // Recognize A * (h^2 - (z^2-1) g^2 - 1) = 0 on a reduced atom.
  bool pell_pattern(const MPoly& red, std::string* h, std::string* g) const {
    if (red.terms.size() != 3) return false;
    const Poly* c1 = nullptr;
    const Poly* c2 = nullptr;
    const Poly* cc = nullptr;
    std::string v1, v2;
    for (const auto& [m, c] : red.terms) {
      if (m.empty()) {
        cc = &c;
      } else if (m.size() == 1 && m[0].second == 2) {
        if (!c1) {
          c1 = &c;
          v1 = m[0].first;
        } else if (!c2) {
          c2 = &c;
          v2 = m[0].first;
        } else {
          return false;
        }
      } else {
        return false;
      }
    }
    if (!c1 || !c2 || !cc) return false;
    const Poly disc = pell_discriminant();
    auto matches = [&](const Poly& a, const Poly& b, const Poly& c0) {
      auto q = Poly::div_exact(b, a);
      if (!q || *q != -disc) return false;
      auto q2 = Poly::div_exact(c0, a);
      return q2 && *q2 == Poly(-1);
    };
    if (matches(*c1, *c2, *cc)) {
      *h = v1;
      *g = v2;
      return true;
    }
    if (matches(*c2, *c1, *cc)) {
      *h = v2;
      *g = v1;
      return true;
    }
    return false;
  }

  // Residue-domain fixpoint under the current assignment; false on
  // contradiction.
  bool propagate() {
    domains_.clear();
    for (const auto& v : branch_.vars)
      if (!bound_.count(v)) domains_[v] = std::nullopt;

    std::vector<long long> signs = {-1, 1};
    std::vector<long long> indices;
    for (const auto& e : pell_table_) {
      indices.push_back(-e.n);
      indices.push_back(e.n);
    }
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()),
                  indices.end());

    bool changed = true;
    int sweeps = 0;
    while (changed && sweeps++ < 40) {
      changed = false;
      for (const auto& atom : branch_.atoms) {
        MPoly red = reduce(atom, bound_);
        std::string h, g;
        if (pell_pattern(red, &h, &g)) {
          if (intersect(&domains_[h], signs)) changed = true;
          if (intersect(&domains_[g], indices)) changed = true;
          if (domains_[h]->empty() || domains_[g]->empty()) return false;
        }
        Shadow s = shadow_of(red);
        if (!s.usable) continue;
        if (s.unbound.empty()) {
          if (!s.terms.empty()) return false;
          continue;
        }
        if (s.unbound.size() == 1) {
          const std::string& v = s.unbound[0];
          const std::vector<long long> dom =
              domains_[v] ? *domains_[v] : full_domain();
          std::vector<long long> keep;
          for (long long r : dom)
            if (shadow_eval(s, {{v, r}}) == 0) keep.push_back(r);
          if (keep.empty()) return false;
          if (intersect(&domains_[v], keep)) changed = true;
          continue;
        }
        if (s.unbound.size() == 2) {
          const std::string& a = s.unbound[0];
          const std::string& b = s.unbound[1];
          const std::vector<long long> da =
              domains_[a] ? *domains_[a] : full_domain();
          const std::vector<long long> db =
              domains_[b] ? *domains_[b] : full_domain();
          if (static_cast<long long>(da.size()) *
                  static_cast<long long>(db.size()) >
              4096)
            continue;
          std::set<long long> ka, kb;
          for (long long ra : da)
            for (long long rb : db)
              if (shadow_eval(s, {{a, ra}, {b, rb}}) == 0) {
                ka.insert(ra);
                kb.insert(rb);
              }
          if (ka.empty()) return false;
          if (intersect(&domains_[a], {ka.begin(), ka.end()})) changed = true;
          if (intersect(&domains_[b], {kb.begin(), kb.end()})) changed = true;
          continue;
        }
      }
    }
    return true;
  }

  // Exact candidate set when some atom determines the variable: a linear
  // or pure-power atom in v alone is solved by division / root extraction;
  // a Pell-shaped atom enumerates the classified solutions (D3). Returns
  // nullopt when no atom pins v (fall back to enumeration); an empty list
  // means the subtree is unsatisfiable.
  std::optional<std::vector<Poly>> pinned_candidates(const std::string& v) {
    for (const auto& atom : branch_.atoms) {
      MPoly red = reduce(atom, bound_);
      std::set<std::string> vars;
      for (const auto& [m, c] : red.terms)
        for (const auto& [name, e] : m) vars.insert(name);
      if (!vars.count(v)) continue;
      if (vars.size() == 1) {
        const Poly* a = nullptr;
        Poly b;
        int k = 0;
        bool shape_ok = true;
        for (const auto& [m, c] : red.terms) {
          if (m.empty()) {
            b = c;
          } else if (a) {
            shape_ok = false;  // mixed powers of v
            break;
          } else {
            a = &c;
            k = m[0].second;
          }
        }
        if (!shape_ok || !a) continue;
        auto rhs = Poly::div_exact(-b, *a);
        if (!rhs) return std::vector<Poly>{};
        std::vector<Poly> cands;
        if (k == 1) {
          cands.push_back(*rhs);
        } else {
          auto root = Poly::root_exact(*rhs, k);
          if (!root) return std::vector<Poly>{};
          cands.push_back(*root);
          if (k % 2 == 0 && !root->is_zero()) cands.push_back(-*root);
        }
        std::vector<Poly> ok;
        for (auto& c : cands)
          if (in_bounds(c, bounds_)) ok.push_back(c);
        std::sort(ok.begin(), ok.end(), enum_less);
        return ok;
      }
      if (vars.size() == 2) {
        std::string h, g;
        if (!pell_pattern(red, &h, &g)) continue;
        std::vector<Poly> cands;
        for (const auto& e : pell_table_) {
          if (v == h) {
            cands.push_back(e.x);
            cands.push_back(-e.x);
          } else {
            cands.push_back(e.y);
            if (!e.y.is_zero()) cands.push_back(-e.y);
          }
        }
        std::sort(cands.begin(), cands.end(), enum_less);
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
        return cands;
      }
    }
    return std::nullopt;
  }

  bool ground_atoms_ok() {
    for (const auto& atom : branch_.atoms) {
      MPoly red = reduce(atom, bound_);
      if (is_ground(red) && !ground_holds(red)) return false;
    }
    return true;
  }

  bool dfs(size_t depth) {
    if (depth == branch_.vars.size()) return true;
    const std::string& v = branch_.vars[depth];

    auto pinned = pinned_candidates(v);
    Domain dom = domains_.count(v) ? domains_[v] : std::nullopt;

    auto try_value = [&](const Poly& val) -> bool {
      if (*budget_ <= 0)
        throw Error(ErrorCode::BudgetExceeded,
                    "bounded search exceeded its budget");
      --*budget_;
      bound_[v] = val;
      bool ok = ground_atoms_ok() && propagate() && dfs(depth + 1);
      if (!ok) bound_.erase(v);
      return ok;
    };

    if (pinned) {
      for (const auto& val : *pinned) {
        if (dom) {
          GRat r = val.value_at_one();
          if (!r.is_int() ||
              !std::binary_search(dom->begin(), dom->end(),
                                  num(r.re).convert_to<long long>()))
            continue;
        }
        if (try_value(val)) return true;
      }
      return false;
    }

    PolyStream stream(bounds_, dom);
    while (auto val = stream.next())
      if (try_value(*val)) return true;
    return false;
  }

  Branch branch_;
  Bounds bounds_;
  std::map<std::string, Poly> bound_;
  long long* budget_;
  std::vector<PellEntry> pell_table_;
  long long max_residue_ = 0;
  std::map<std::string, Domain> domains_;
};

std::optional<Witness> run_search(const FormulaPtr& f,
                                  const std::map<std::string, Poly>& env,
                                  const Bounds& bounds) {
  for (const auto& [name, val] : env)
    if (!val.has_integer_coeffs())
      throw std::invalid_argument("assignment for " + name +
                                  " has non-integer coefficients");
  std::vector<Branch> branches;
  prenex(f, &branches);
  long long budget = bounds.budget;
  for (auto& b : branches) {
    Solver solver(std::move(b), bounds, env, &budget);
    auto r = solver.solve();
    if (r) {
      Witness w;
      w.values = std::move(*r);
      w.degree_bound = bounds.degree;
      w.height_bound = bounds.height;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

bool eval_formula(const FormulaPtr& f,
                  const std::map<std::string, Poly>& assignment,
                  const Bounds& bounds) {
  for (const auto& v : free_vars(f))
    if (!assignment.count(v))
      throw std::invalid_argument("free variable " + v + " not assigned");
  return run_search(f, assignment, bounds).has_value();
}

std::optional<Witness> witness_search(const FormulaPtr& f,
                                      const Bounds& bounds) {
  if (!free_vars(f).empty())
    throw std::invalid_argument("witness_search needs a sentence");
  return run_search(f, {}, bounds);
}

}  // namespace exppell
