#include "exppell/number.hpp"

#include <cmath>

namespace exppell {

std::optional<Int> int_sqrt_exact(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = boost::multiprecision::sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

std::optional<Int> int_root_exact(const Int& n, int k) {
  if (k <= 0) return std::nullopt;
  if (k == 1) return n;
  if (n == 0) return Int(0);
  if (n < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = int_root_exact(-n, k);
    if (!r) return std::nullopt;
    return -*r;
  }
  if (k == 2) return int_sqrt_exact(n);
  // Seed from a double estimate, then fix up exactly.
  double est = std::pow(static_cast<double>(n), 1.0 / k);
  Int r(static_cast<long long>(std::llround(est)));
  if (r < 1) r = 1;
  while (boost::multiprecision::pow(r, k) > n) --r;
  while (boost::multiprecision::pow(r + 1, k) <= n) ++r;
  if (boost::multiprecision::pow(r, k) == n) return r;
  return std::nullopt;
}

std::optional<Rat> rat_sqrt_exact(const Rat& r) { return rat_root_exact(r, 2); }

std::optional<Rat> rat_root_exact(const Rat& r, int k) {
  auto n = int_root_exact(num(r), k);
  if (!n) return std::nullopt;
  auto d = int_root_exact(den(r), k);
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

std::string rat_to_string(const Rat& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

}  // namespace exppell
