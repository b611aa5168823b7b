#include "exppell/deps.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace exppell {

namespace {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;
using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

// Coefficient slots of strip_const'd inputs: degrees ascending, the real
// part before the imaginary part of each degree.
std::vector<int> coeff_degrees(const std::vector<Poly>& bs) {
  std::set<int> degs;
  for (const auto& b : bs)
    for (const auto& [k, c] : b.terms())
      if (k >= 1) degs.insert(k);
  return {degs.begin(), degs.end()};
}

RatVec slot_vector(const Poly& b, const std::vector<int>& degs) {
  RatVec v;
  v.reserve(2 * degs.size());
  for (int k : degs) {
    GRat c = b.coeff(k);
    v.push_back(c.re);
    v.push_back(c.im);
  }
  return v;
}

// Reduced row echelon form; returns pivot column per row.
std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    size_t sel = r;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[r]);
    Rat inv = m[r][c];
    for (auto& x : m[r]) x /= inv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  return pivots;
}

// Primitive integer form, first nonzero entry positive.
RatVec normalize_relation(const RatVec& v) {
  Int l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, den(x));
  Int g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, Int(num(x) * l / den(x)));
  if (g == 0) g = 1;
  int sign = 0;
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Int e = num(v[i]) * l / den(v[i]) / g;
    if (sign == 0 && e != 0) sign = e > 0 ? 1 : -1;
    r[i] = Rat(e);
  }
  if (sign < 0)
    for (auto& x : r) x = -x;
  return r;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Row-style Hermite normal form of the span of the rows; returns the
// nonzero basis rows and their pivot columns. Deterministic: columns are
// processed left to right and ties go to the lowest row index.
IntMat hnf_rows(IntMat m, std::vector<int>* pivots_out) {
  pivots_out->clear();
  if (m.empty()) return m;
  size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < m.size(); ++c) {
    for (;;) {
      size_t best = m.size();
      for (size_t i = r; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        if (best == m.size() ||
            boost::multiprecision::abs(m[i][c]) <
                boost::multiprecision::abs(m[best][c]))
          best = i;
      }
      if (best == m.size()) break;  // column clear below r
      std::swap(m[best], m[r]);
      bool again = false;
      for (size_t i = r + 1; i < m.size(); ++i) {
        if (m[i][c] == 0) continue;
        Int q = floor_div(m[i][c], m[r][c]);
        for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) again = true;
      }
      if (!again) {
        if (m[r][c] < 0)
          for (auto& x : m[r]) x = -x;
        for (size_t i = 0; i < r; ++i) {
          if (m[i][c] == 0) continue;
          Int q = floor_div(m[i][c], m[r][c]);
          for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        }
        pivots_out->push_back(static_cast<int>(c));
        ++r;
        break;
      }
    }
  }
  m.resize(r);
  return m;
}

Poly poly_from_slots(const RatVec& v, const std::vector<int>& degs) {
  Poly p;
  for (size_t i = 0; i < degs.size(); ++i)
    p.set_coeff(degs[i], GRat(v[2 * i], v[2 * i + 1]));
  return p;
}

}  // namespace

Poly strip_const(const Poly& p) { return p.without_constant(); }

std::vector<std::vector<Rat>> qdep_modconst(const std::vector<Poly>& bs) {
  const size_t n = bs.size();
  if (n == 0) return {};
  auto degs = coeff_degrees(bs);
  // rows = coefficient slots, columns = inputs
  RatMat a(2 * degs.size(), RatVec(n));
  for (size_t k = 0; k < n; ++k) {
    RatVec col = slot_vector(bs[k], degs);
    for (size_t i = 0; i < col.size(); ++i) a[i][k] = col[i];
  }
  if (a.empty()) a.push_back(RatVec(n));  // all inputs constant
  auto pivots = rref(a);
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<RatVec> kernel;
  for (size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(n);
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -a[i][f];
    kernel.push_back(normalize_relation(v));
  }
  return kernel;
}

DepCertificate int_basis_modconst(const std::vector<Poly>& bs) {
  DepCertificate cert;
  cert.relations = qdep_modconst(bs);
  const size_t n = bs.size();
  if (n == 0) return cert;
  auto degs = coeff_degrees(bs);
  const size_t m = 2 * degs.size();

  // Clear denominators globally.
  Int d = 1;
  RatMat slots(n);
  for (size_t k = 0; k < n; ++k) {
    slots[k] = slot_vector(strip_const(bs[k]), degs);
    for (const auto& x : slots[k]) d = boost::multiprecision::lcm(d, den(x));
  }
  IntMat mi(n, IntVec(m));
  for (size_t k = 0; k < n; ++k)
    for (size_t j = 0; j < m; ++j)
      mi[k][j] = num(slots[k][j]) * d / den(slots[k][j]);

  std::vector<int> pivots;
  IntMat basis = hnf_rows(mi, &pivots);

  for (const auto& row : basis) {
    RatVec v(m);
    for (size_t j = 0; j < m; ++j) v[j] = Rat(row[j], d);
    cert.basis.push_back(poly_from_slots(v, degs));
  }

  for (size_t k = 0; k < n; ++k) {
    IntVec v(m);
    for (size_t j = 0; j < m; ++j)
      v[j] = num(slots[k][j]) * d / den(slots[k][j]);
    IntVec alpha(basis.size(), 0);
    for (size_t i = 0; i < basis.size(); ++i) {
      Int p = v[pivots[i]];
      if (p == 0) continue;
      Int q = p / basis[i][pivots[i]];
      if (q * basis[i][pivots[i]] != p)
        throw std::logic_error("input not in HNF lattice");
      alpha[i] = q;
      for (size_t j = 0; j < m; ++j) v[j] -= q * basis[i][j];
    }
    for (const auto& x : v)
      if (x != 0) throw std::logic_error("HNF reduction left a residue");
    cert.coords.push_back(std::move(alpha));
    cert.constants.push_back(bs[k].constant_term());
  }
  return cert;
}

bool axlw_independent(const std::vector<Poly>& bs) {
  return qdep_modconst(bs).empty();
}

std::vector<DepCertificate> descent_trace(std::vector<Poly> bs) {
  std::vector<DepCertificate> chain;
  const size_t max_steps = bs.size();
  for (size_t step = 0; step < max_steps; ++step) {
    auto rels = qdep_modconst(bs);
    if (rels.empty()) break;
    const RatVec& lam = rels[0];
    size_t nn = lam.size();
    size_t last = nn;
    for (size_t k = 0; k < nn; ++k)
      if (lam[k] != 0) last = k;
    assert(last < nn);

    // b_last = c + sum_{k != last} mu_k b_k with mu_k = -lam_k / lam_last.
    std::vector<Rat> mu(nn);
    Int mden = 1;
    for (size_t k = 0; k < nn; ++k) {
      if (k == last) continue;
      mu[k] = -lam[k] / lam[last];
      mden = boost::multiprecision::lcm(mden, den(mu[k]));
    }

    DepCertificate cert;
    cert.relations = rels;
    std::vector<Poly> next;
    std::vector<int> col(nn, -1);  // input -> basis column
    for (size_t k = 0; k < nn; ++k) {
      if (k == last) continue;
      Poly p = strip_const(bs[k]);
      if (p.is_zero()) continue;
      col[k] = static_cast<int>(cert.basis.size());
      cert.basis.push_back(p.scaled(GRat(Rat(1, mden))));
      next.push_back(cert.basis.back());
    }
    for (size_t k = 0; k < nn; ++k) {
      IntVec alpha(cert.basis.size(), 0);
      Poly rec;
      if (k == last) {
        for (size_t j = 0; j < nn; ++j) {
          if (j == last || col[j] < 0 || mu[j] == 0) continue;
          Rat a = mu[j] * mden;
          assert(is_integer(a));
          alpha[col[j]] = num(a);
          rec += cert.basis[col[j]].scaled(GRat(a));
        }
      } else if (col[k] >= 0) {
        alpha[col[k]] = mden;
        rec = cert.basis[col[k]].scaled(GRat(Rat(mden)));
      }
      Poly c = bs[k] - rec;
      if (!c.is_zero() && c.degree_nonzero() > 0)
        throw std::logic_error("descent residual is not constant");
      cert.coords.push_back(std::move(alpha));
      cert.constants.push_back(c.constant_term());
    }
    chain.push_back(std::move(cert));
    bs = std::move(next);
  }
  return chain;
}

}  // namespace exppell
