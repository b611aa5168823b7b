#include <random>

#include "doctest.h"
#include "exppell/error.hpp"
#include "exppell/format.hpp"

using namespace exppell;

namespace {

Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> dd(0, 4), dc(-9, 9), dden(1, 4);
  Poly p;
  int deg = dd(rng);
  for (int k = 0; k <= deg; ++k) {
    Rat re(dc(rng), dden(rng));
    Rat im = rng() % 3 == 0 ? Rat(dc(rng), dden(rng)) : Rat(0);
    if (re != 0 || im != 0) p.set_coeff(k, GRat(re, im));
  }
  return p;
}

ExpPoly random_exppoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> dn(0, 2), dd(1, 2), dc(-3, 3);
  std::vector<ExpPoly::Term> raw;
  int n = dn(rng);
  for (int j = 0; j <= n; ++j) {
    Poly coeff = random_poly(rng);
    Poly expo;
    int deg = dd(rng);
    for (int k = 1; k <= deg; ++k) {
      int c = dc(rng);
      if (c) expo.set_coeff(k, GRat(c));
    }
    raw.push_back({coeff, expo});
  }
  return ExpPoly::normalize(raw);
}

}  // namespace

TEST_CASE("golden polynomial strings") {
  CHECK(to_string(parse_poly("2*z^2 - 1")) == "2*z^2 - 1");
  CHECK(to_string(parse_poly("2*z")) == "2*z");
  CHECK(to_string(parse_poly("(1/2 + 3i)*z")) == "(1/2 + 3i)*z");
  CHECK(to_string(Poly::zero()) == "0");
  CHECK(to_string(parse_poly("-z^3 + z - 5")) == "-z^3 + z - 5");
  CHECK(parse_poly("z^2-1") == parse_poly("(z-1)*(z+1)"));
}

TEST_CASE("golden exponential-polynomial strings") {
  CHECK(to_string(parse_exppoly("exp(z)")) == "exp(z)");
  CHECK(to_string(parse_exppoly("2*exp(z) + z")) == "z + 2*exp(z)");
  CHECK(to_string(parse_exppoly("(z + 1)*exp(-z)")) == "(z + 1)*exp(-z)");
  CHECK(to_string(ExpPoly::zero()) == "0");
  // exp(0) is elidable on input and elided on output
  CHECK(to_string(parse_exppoly("z^2*exp(0)")) == "z^2");
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_AS(parse_poly("2*+z"), Error);
  CHECK_THROWS_AS(parse_poly("z^"), Error);
  CHECK_THROWS_AS(parse_poly("(z"), Error);
  CHECK_THROWS_AS(parse_poly("exp(z)"), Error);   // not a polynomial
  CHECK_THROWS_AS(parse_exppoly("exp(exp(z))"), Error);
  CHECK_THROWS_AS(parse_poly("1/0"), Error);
  try {
    parse_poly("z + + 1");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("exp exponents must have zero constant term") {
  CHECK_THROWS_AS(parse_exppoly("exp(z+1)"), Error);
}

TEST_CASE("parse-print round trip is the identity on canonical forms") {
  std::mt19937 rng(515);
  for (int t = 0; t < 200; ++t) {
    Poly p = random_poly(rng);
    CHECK(parse_poly(to_string(p)) == p);
  }
  for (int t = 0; t < 200; ++t) {
    ExpPoly e = random_exppoly(rng);
    CHECK(parse_exppoly(to_string(e)) == e);
  }
}
