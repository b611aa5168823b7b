#include "exppell/poly.hpp"

namespace exppell {

Poly Poly::monomial(const GRat& c, int k) {
  Poly p;
  if (!c.is_zero()) p.coeffs_[k] = c;
  return p;
}

void Poly::set_coeff(int k, const GRat& c) {
  if (c.is_zero())
    coeffs_.erase(k);
  else
    coeffs_[k] = c;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  for (const auto& [k, c] : b.coeffs_) {
    auto it = r.coeffs_.find(k);
    if (it == r.coeffs_.end()) {
      r.coeffs_[k] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) r.coeffs_.erase(it);
    }
  }
  return r;
}

Poly operator-(const Poly& a) {
  Poly r;
  for (const auto& [k, c] : a.coeffs_) r.coeffs_[k] = -c;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) {
      int k = ka + kb;
      auto it = r.coeffs_.find(k);
      if (it == r.coeffs_.end()) {
        GRat c = ca * cb;
        if (!c.is_zero()) r.coeffs_[k] = c;
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) r.coeffs_.erase(it);
      }
    }
  return r;
}

Poly Poly::scaled(const GRat& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [k, a] : coeffs_) r.coeffs_[k] = a * c;
  return r;
}

Poly Poly::pow(int n) const {
  Poly r = Poly::one();
  Poly base = *this;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) r *= base;
    if (e > 1) base *= base;
  }
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  auto da = a.degree(), db = b.degree();
  if (da != db) {
    if (!da) return true;   // zero sorts first
    if (!db) return false;
    return *da < *db;
  }
  if (!da) return false;  // both zero
  auto ita = a.coeffs_.rbegin(), itb = b.coeffs_.rbegin();
  while (ita != a.coeffs_.rend() && itb != b.coeffs_.rend()) {
    if (ita->first != itb->first) return ita->first < itb->first;
    if (ita->second != itb->second) return ita->second < itb->second;
    ++ita;
    ++itb;
  }
  if (ita != a.coeffs_.rend()) return false;
  return itb != b.coeffs_.rend();
}

GRat Poly::eval(const GRat& c) const {
  GRat acc;
  int prev = -1;
  // Horner over the sparse terms, descending.
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (prev >= 0)
      for (int i = 0; i < prev - it->first; ++i) acc *= c;
    acc += it->second;
    prev = it->first;
  }
  if (prev > 0)
    for (int i = 0; i < prev; ++i) acc *= c;
  return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& z) const {
  std::complex<double> acc = 0.0;
  int prev = -1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (prev >= 0)
      for (int i = 0; i < prev - it->first; ++i) acc *= z;
    acc += it->second.to_complex();
    prev = it->first;
  }
  if (prev > 0)
    for (int i = 0; i < prev; ++i) acc *= z;
  return acc;
}

bool Poly::has_integer_coeffs() const {
  for (const auto& [k, c] : coeffs_)
    if (!c.is_int()) return false;
  return true;
}

Int Poly::max_abs_int_coeff() const {
  Int m = 0;
  for (const auto& [k, c] : coeffs_) {
    Int a = boost::multiprecision::abs(num(c.re));
    if (a > m) m = a;
  }
  return m;
}

Poly Poly::without_constant() const {
  Poly r = *this;
  r.coeffs_.erase(0);
  return r;
}

Poly Poly::conj_coeffs() const {
  Poly r;
  for (const auto& [k, c] : coeffs_) r.coeffs_[k] = c.conj();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  Poly q, r = a;
  const int db = b.degree_nonzero();
  const GRat lead = b.leading_coeff();
  while (!r.is_zero() && r.degree_nonzero() >= db) {
    int k = r.degree_nonzero() - db;
    GRat c = r.leading_coeff() / lead;
    Poly t = Poly::monomial(c, k);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

std::optional<Poly> Poly::div_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

std::optional<Poly> Poly::root_exact(const Poly& a, int k) {
  if (k <= 0) return std::nullopt;
  if (k == 1) return a;
  if (a.is_zero()) return Poly::zero();
  int da = a.degree_nonzero();
  if (da % k != 0) return std::nullopt;
  int dq = da / k;
  GRat lead = a.leading_coeff();
  if (!lead.is_real()) return std::nullopt;
  auto leadroot = rat_root_exact(lead.re, k);
  if (!leadroot) return std::nullopt;

  Poly q = Poly::monomial(GRat(*leadroot), dq);
  // Peel coefficients downward: the z^{(k-1)dq + j} coefficient of a - q^k
  // is k * leadroot^{k-1} * q_j once q's higher terms are fixed.
  GRat denom = GRat(*leadroot);
  for (int i = 1; i < k - 1; ++i) denom *= GRat(*leadroot);
  denom *= GRat(k);
  for (int j = dq - 1; j >= 0; --j) {
    Poly diff = a - q.pow(k);
    GRat c = diff.coeff((k - 1) * dq + j);
    GRat qj = c / denom;
    if (!qj.is_zero()) q += Poly::monomial(qj, j);
  }
  if (q.pow(k) == a) return q;
  return std::nullopt;
}

Poly pell_discriminant() {
  return Poly::monomial(GRat(1), 2) - Poly::one();
}

}  // namespace exppell
