#include <random>

#include "doctest.h"
#include "exppell/error.hpp"
#include "exppell/format.hpp"
#include "exppell/pell.hpp"

using namespace exppell;

namespace {
Poly P(const std::string& s) { return parse_poly(s); }
}

TEST_CASE("pell_pair base cases") {
  PellSolution s0 = pell_pair(0);
  CHECK(s0.x == Poly::one());
  CHECK(s0.y == Poly::zero());

  PellSolution s2 = pell_pair(2);
  CHECK(s2.x == P("2*z^2 - 1"));
  CHECK(s2.y == P("2*z"));

  CHECK(pell_pair(5).y.eval(GRat(1)) == GRat(5));
  CHECK(pell_pair(-7).y.eval(GRat(1)) == GRat(-7));
}

TEST_CASE("pell_pair agrees with ext_arith exponentiation") {
  ExtElem fund = ExtElem::from_polys(P("z"), P("1"));
  ExtElem acc = ExtElem::one();
  for (long n = 0; n <= 12; ++n) {
    PellSolution s = pell_pair(n);
    CHECK(acc.f == ExpPoly::from_poly(s.x));
    CHECK(acc.g == ExpPoly::from_poly(s.y));
    acc = acc * fund;
  }
}

TEST_CASE("pell index cap") {
  CHECK_THROWS_AS(pell_pair(10001), Error);
  CHECK_NOTHROW(pell_pair(64, 64));
  CHECK_THROWS_AS(pell_pair(-65, 64), Error);
}

TEST_CASE("pell_verify") {
  CHECK(pell_verify(P("z"), P("1")));
  CHECK(pell_verify(P("1"), P("0")));
  CHECK_FALSE(pell_verify(P("z"), P("z")));
}

TEST_CASE("pell_recognize classifies and re-verifies") {
  auto r = pell_recognize(P("2*z^2-1"), P("2*z"));
  CHECK(r.first == 1);
  CHECK(r.second == 2);

  auto neg = pell_recognize(P("-z"), P("1"));
  CHECK(neg.first == -1);
  CHECK(neg.second == -1);

  CHECK_THROWS_AS(pell_recognize(P("z"), P("2")), Error);
  try {
    pell_recognize(P("z"), P("2"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAPellSolution);
  }
}

TEST_CASE("degree law over a symmetric range") {
  for (long n = -50; n <= 50; ++n) {
    PellSolution s = pell_pair(n);
    if (n == 0) {
      CHECK(s.y.is_zero());
      continue;
    }
    CHECK(s.x.degree_nonzero() == std::labs(n));
    CHECK(s.y.degree_nonzero() == std::labs(n) - 1);
  }
}

TEST_CASE("group law: compose matches index addition") {
  std::mt19937 rng(929);
  std::uniform_int_distribution<long> d(-30, 30);
  for (int t = 0; t < 200; ++t) {
    long m = d(rng), n = d(rng);
    PellSolution c = pell_compose(pell_pair(m), pell_pair(n));
    PellSolution e = pell_pair(m + n);
    CHECK(c.x == e.x);
    CHECK(c.y == e.y);
    CHECK(c.sign == 1);
    CHECK(c.index == m + n);
  }
}

TEST_CASE("identity and inverses in the solution group") {
  PellSolution a = pell_pair(9);
  PellSolution e = pell_compose(a, pell_pair(0));
  CHECK(e.x == a.x);
  CHECK(e.y == a.y);

  PellSolution neg9{a.x.scaled(GRat(-1)), a.y.scaled(GRat(-1)), -1, 9};
  // (-1, n) composed with (-1, -n) is the identity (+1, 0)
  PellSolution negm9{pell_pair(-9).x.scaled(GRat(-1)),
                     pell_pair(-9).y.scaled(GRat(-1)), -1, -9};
  PellSolution unit = pell_compose(neg9, negm9);
  CHECK(unit.sign == 1);
  CHECK(unit.index == 0);
  // components: (-x_9 + -y_9... ) * ... = +(z+w)^0; check via the stored polys
  CHECK(unit.y.is_zero());
}

TEST_CASE("conjugation law: w -> -w sends index n to -n") {
  for (long n = -8; n <= 8; ++n) {
    PellSolution s = pell_pair(n);
    ExtElem conj = ext_conj(ExtElem::from_polys(s.x, s.y));
    PellSolution m = pell_pair(-n);
    CHECK(conj.f == ExpPoly::from_poly(m.x));
    CHECK(conj.g == ExpPoly::from_poly(m.y));
  }
}

TEST_CASE("recognize inverts pell_pair across the range") {
  for (long n = -50; n <= 50; ++n) {
    PellSolution s = pell_pair(n);
    auto [sign, idx] = pell_recognize(s.x, s.y);
    CHECK(sign == 1);
    CHECK(idx == n);
    auto [msign, midx] =
        pell_recognize(s.x.scaled(GRat(-1)), s.y.scaled(GRat(-1)));
    CHECK(msign == -1);
    CHECK(midx == n);
  }
}
