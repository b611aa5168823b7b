#include <complex>
#include <random>

#include "doctest.h"
#include "exppell/error.hpp"
#include "exppell/exppoly.hpp"
#include "exppell/format.hpp"

using namespace exppell;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }
ExpPoly E(const std::string& s) { return parse_exppoly(s); }

Poly random_poly(std::mt19937& rng, int maxdeg, int maxc, bool gaussian) {
  std::uniform_int_distribution<int> dd(0, maxdeg), dc(-maxc, maxc);
  Poly p;
  int deg = dd(rng);
  for (int k = 0; k <= deg; ++k) {
    int re = dc(rng);
    int im = gaussian ? dc(rng) : 0;
    if (re || im) p.set_coeff(k, GRat(Rat(re), Rat(im)));
  }
  return p;
}

ExpPoly random_exppoly(std::mt19937& rng) {
  std::uniform_int_distribution<int> dn(0, 2);
  std::vector<ExpPoly::Term> raw;
  int n = dn(rng);
  for (int j = 0; j <= n; ++j)
    raw.push_back({random_poly(rng, 2, 3, true),
                   random_poly(rng, 2, 2, false).without_constant()});
  return ExpPoly::normalize(raw);
}

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
  GRat i(Rat(0), Rat(1));
  CHECK(i * i == GRat(-1));
  GRat c(Rat(1, 2), Rat(3));
  CHECK(c + c.conj() == GRat(Rat(1)));
  CHECK((c / c) == GRat(1));
  CHECK(GRat(Rat(2, 4)).re == Rat(1, 2));  // lowest terms by representation
}

TEST_CASE("poly arithmetic matches hand expansion") {
  CHECK(P("z+1") * P("z-1") == P("z^2-1"));
  CHECK(P("z^2") + Poly::zero() == P("z^2"));
  CHECK(P("2*z^2-1") - P("2*z^2-1") == Poly::zero());
  CHECK((P("z+1") * P("z-1")).degree() == 2);
  CHECK_FALSE(Poly::zero().degree().has_value());
}

TEST_CASE("poly degree law under multiplication") {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    Poly a = random_poly(rng, 4, 5, true);
    Poly b = random_poly(rng, 4, 5, true);
    if (a.is_zero() || b.is_zero()) {
      CHECK((a * b).is_zero());
    } else {
      CHECK((a * b).degree_nonzero() == a.degree_nonzero() + b.degree_nonzero());
    }
  }
}

TEST_CASE("poly_eval is exact Horner evaluation") {
  CHECK(P("2*z").eval(GRat(1)) == GRat(2));
  CHECK(Poly::zero().eval(GRat(Rat(17, 3), Rat(-2))) == GRat(0));
  CHECK(P("z^2-1").eval(GRat(1)) == GRat(0));
  // Gaussian point
  CHECK(P("z^2").eval(GRat(Rat(0), Rat(1))) == GRat(-1));
}

TEST_CASE("exp_normalize merges, cancels, and rejects constant exponents") {
  Poly zv = Poly::var();
  ExpPoly merged = ExpPoly::normalize({{Poly::one(), zv}, {Poly::one(), zv}});
  CHECK(merged == ExpPoly::normalize({{Poly(2), zv}}));

  ExpPoly cancelled =
      ExpPoly::normalize({{zv, zv * zv}, {-zv, zv * zv}});
  CHECK(cancelled.is_zero());

  CHECK_THROWS_WITH_AS(ExpPoly::normalize({{Poly::one(), zv + Poly::one()}}),
                       doctest::Contains("constant term"), Error);
}

TEST_CASE("exp_arith examples") {
  CHECK(E("exp(z)") * E("exp(z^2)") == E("exp(z + z^2)"));
  // (exp(z)+exp(-z)) (exp(z)-exp(-z)) = exp(2z) - exp(-2z): two of the four
  // cross terms cancel.
  CHECK(E("exp(z) + exp(-z)") * E("exp(z) - exp(-z)") ==
        E("exp(2*z) - exp(-2*z)"));
  // polynomial subring: exp(0) coefficients add
  CHECK(E("z^2+1") + E("z-3") == E("z^2 + z - 2"));
}

TEST_CASE("exp_is_zero is the canonical-form check") {
  CHECK((E("exp(z)") - E("exp(z)")).is_zero());
  CHECK_FALSE((E("exp(z)") - E("exp(z^2)")).is_zero());
  CHECK(ExpPoly::normalize({{P("z") - P("z"), P("z^5")}}).is_zero());
}

TEST_CASE("ext arithmetic with w^2 = z^2 - 1") {
  ExtElem fund = ExtElem::from_polys(P("z"), P("1"));
  ExtElem sq = fund * fund;
  CHECK(sq.f == ExpPoly::from_poly(P("2*z^2-1")));
  CHECK(sq.g == ExpPoly::from_poly(P("2*z")));

  ExtElem any{E("z^3 + exp(z)"), E("2*exp(-z)")};
  CHECK(any * ExtElem::one() == any);

  ExtElem conj = ExtElem::from_polys(P("z"), P("-1"));
  CHECK(fund * conj == ExtElem::one());
}

TEST_CASE("ext_conj is an involution fixing the base ring") {
  ExtElem a{E("z + exp(z)"), E("exp(z^2)")};
  CHECK(ext_conj(a).f == a.f);
  CHECK(ext_conj(a).g == -a.g);
  CHECK(ext_conj(ext_conj(a)) == a);
  ExtElem base{E("z^4 - 2"), ExpPoly::zero()};
  CHECK(ext_conj(base) == base);
}

TEST_CASE("ext_norm examples") {
  CHECK(ext_norm(ExtElem::from_polys(P("z"), P("1"))) == ExpPoly::one());
  CHECK(ext_norm(ExtElem::from_polys(P("2*z^2-1"), P("2*z"))) ==
        ExpPoly::one());
  CHECK(ext_norm(ExtElem::from_polys(P("0"), P("1"))) == E("1 - z^2"));
}

TEST_CASE("ring axioms hold on randomized triples") {
  std::mt19937 rng(101);
  for (int t = 0; t < 60; ++t) {
    ExpPoly a = random_exppoly(rng);
    ExpPoly b = random_exppoly(rng);
    ExpPoly c = random_exppoly(rng);
    CHECK(((a * b) * c - a * (b * c)).is_zero());
    CHECK((a * (b + c) - (a * b + a * c)).is_zero());
    CHECK(((a + b) - (b + a)).is_zero());
  }
}

TEST_CASE("norm is multiplicative and conj is a homomorphism") {
  std::mt19937 rng(202);
  for (int t = 0; t < 60; ++t) {
    ExtElem a{random_exppoly(rng), random_exppoly(rng)};
    ExtElem b{random_exppoly(rng), random_exppoly(rng)};
    CHECK(ext_norm(a * b) == ext_norm(a) * ext_norm(b));
    CHECK(ext_conj(a * b) == ext_conj(a) * ext_conj(b));
  }
}

TEST_CASE("canonical form is idempotent") {
  std::mt19937 rng(303);
  for (int t = 0; t < 40; ++t) {
    ExpPoly a = random_exppoly(rng);
    CHECK(ExpPoly::normalize(a.terms()) == a);
  }
}

TEST_CASE("canonical form is faithful at sample points") {
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> du(-1.0, 1.0);
  for (int t = 0; t < 25; ++t) {
    ExpPoly a = random_exppoly(rng);
    bool below = true;
    for (int j = 0; j < 20; ++j) {
      std::complex<double> zpt(du(rng), du(rng));
      if (std::abs(a.eval(zpt)) >= 1e-9) below = false;
    }
    CHECK(below == a.is_zero());
  }
}
