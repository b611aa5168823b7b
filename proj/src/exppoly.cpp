#include "exppell/exppoly.hpp"

#include <algorithm>
#include <map>

#include "exppell/error.hpp"

namespace exppell {

ExpPoly ExpPoly::normalize(const std::vector<Term>& raw) {
  std::map<Poly, Poly> merged;  // exponent -> coefficient
  for (const auto& t : raw) {
    if (!t.exponent.constant_term().is_zero())
      throw Error(ErrorCode::NonzeroConstantExponent,
                  "exponent has a nonzero constant term");
    auto it = merged.find(t.exponent);
    if (it == merged.end())
      merged.emplace(t.exponent, t.coeff);
    else
      it->second += t.coeff;
  }
  ExpPoly r;
  for (auto& [q, p] : merged)
    if (!p.is_zero()) r.terms_.push_back({p, q});
  return r;
}

ExpPoly ExpPoly::from_poly(const Poly& p) {
  ExpPoly r;
  if (!p.is_zero()) r.terms_.push_back({p, Poly::zero()});
  return r;
}

ExpPoly ExpPoly::exp_of(const Poly& q) {
  return normalize({{Poly::one(), q}});
}

Poly ExpPoly::poly_part() const {
  for (const auto& t : terms_)
    if (t.exponent.is_zero()) return t.coeff;
  return Poly::zero();
}

bool ExpPoly::is_poly() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

ExpPoly operator+(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpPoly::Term> raw = a.terms_;
  raw.insert(raw.end(), b.terms_.begin(), b.terms_.end());
  return ExpPoly::normalize(raw);
}

ExpPoly operator-(const ExpPoly& a) {
  ExpPoly r = a;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  std::vector<ExpPoly::Term> raw;
  raw.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_)
      raw.push_back({ta.coeff * tb.coeff, ta.exponent + tb.exponent});
  return ExpPoly::normalize(raw);
}

bool operator==(const ExpPoly& a, const ExpPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exponent != b.terms_[i].exponent ||
        a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::complex<double> ExpPoly::eval(const std::complex<double>& z) const {
  std::complex<double> acc = 0.0;
  for (const auto& t : terms_)
    acc += t.coeff.eval(z) * std::exp(t.exponent.eval(z));
  return acc;
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
  ExpPoly d = ExpPoly::from_poly(pell_discriminant());
  return {a.f * b.f + d * (a.g * b.g), a.f * b.g + a.g * b.f};
}

ExtElem ExtElem::pow(int n) const {
  ExtElem r = ExtElem::one();
  ExtElem base = *this;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

ExtElem ext_conj(const ExtElem& a) { return {a.f, -a.g}; }

ExpPoly ext_norm(const ExtElem& a) {
  ExpPoly d = ExpPoly::from_poly(pell_discriminant());
  return a.f * a.f - d * (a.g * a.g);
}

}  // namespace exppell
