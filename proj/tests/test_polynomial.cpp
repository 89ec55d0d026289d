#include <catch2/catch_amalgamated.hpp>

#include "cmtype/numfield/polynomial.hpp"
#include "cmtype/numfield/sturm.hpp"

using namespace cmtype;

static Poly pp(const std::string& s) { return parse_poly(s); }

TEST_CASE("poly parsing") {
  REQUIRE(pp("1,-1,0,0,1") == pp("x^4 - x + 1"));
  REQUIRE(pp("x^4-x+1").str() == "x^4 - x + 1");
  REQUIRE(pp("2*x^3 + 5") == Poly{{5, 0, 0, 2}});
  REQUIRE(pp("-x") == Poly{{0, -1}});
  REQUIRE(pp("y^2 + y + 1") == Poly{{1, 1, 1}});
  REQUIRE(pp("x - x") == Poly::zero());
  REQUIRE(pp("3") == Poly::constant(3));
  REQUIRE(pp(" -7 , 1 ") == Poly{{-7, 1}});
  // repeated terms accumulate
  REQUIRE(pp("x + x + 1") == Poly{{1, 2}});

  REQUIRE_THROWS(pp(""));
  REQUIRE_THROWS(pp("x^"));
  REQUIRE_THROWS(pp("x^999"));
  REQUIRE_THROWS(pp("1,,2"));
  REQUIRE_THROWS(pp("&"));
}

TEST_CASE("poly arithmetic basics") {
  Poly f = pp("x^2 + 1"), g = pp("x - 3");
  REQUIRE(f + g == pp("x^2 + x - 2"));
  REQUIRE(f - f == Poly::zero());
  REQUIRE(f * g == pp("x^3 - 3x^2 + x - 3"));
  REQUIRE((f * Int(3))[0] == 3);
  REQUIRE(f.eval(Int(2)) == 5);
  REQUIRE(f.eval(Rat(1, 2)) == Rat(5, 4));
  REQUIRE(f.derivative() == pp("2x"));
  REQUIRE(Poly::zero().degree() == -1);
  REQUIRE(Poly::monomial(3, 2) == pp("2x^3"));

  // f(x + k) and f(k x)
  REQUIRE(pp("x^2").shift(1) == pp("x^2 + 2x + 1"));
  REQUIRE(pp("x^3 - x").shift(-2) == pp("x^3 - 6x^2 + 11x - 6"));
  REQUIRE(pp("x^2 + x").scale_arg(3) == pp("9x^2 + 3x"));
  REQUIRE(pp("2x^3 + 4x - 6").content() == 2);
  REQUIRE(pp("-2x^3 + 4x").primitive_part() == pp("x^3 - 2x"));
}

TEST_CASE("division helpers") {
  Poly f = pp("x^2 - 1") * pp("x^2 + x + 1");
  REQUIRE(divide_exact_monic(f, pp("x^2 - 1")) == pp("x^2 + x + 1"));
  REQUIRE_THROWS(divide_exact_monic(pp("x^2 + 1"), pp("x - 1")));
  REQUIRE_THROWS(divide_exact_monic(f, pp("2x - 2")));

  REQUIRE(try_divide(pp("2x^2 - 2"), pp("x - 1")).value() == pp("2x + 2"));
  REQUIRE(!try_divide(pp("x^2 + 1"), pp("x + 1")).has_value());
  REQUIRE(!try_divide(pp("x^2 + 1"), pp("2x - 1")).has_value());
  REQUIRE(try_divide(pp("6x^2"), pp("2x")).value() == pp("3x"));
}

TEST_CASE("resultants") {
  // linear factors: Res(x - a, x - b) = b - a
  REQUIRE(resultant(pp("x - 2"), pp("x - 5")) == -3);
  REQUIRE(resultant(pp("x - 5"), pp("x - 2")) == 3);
  // shared root
  REQUIRE(resultant(pp("x^2 - 1"), pp("x - 1")) == 0);
  // Res(f, g) = lc(f)^deg g prod g(alpha_i)
  REQUIRE(resultant(pp("x^2 - 2"), pp("x^2 - 3")) == 1);
  REQUIRE(resultant(pp("2x - 1"), pp("x^2 + 1")) == 5);  // 4 * g(1/2)
  // swap symmetry: sign (-1)^(deg a * deg b)
  Poly a = pp("x^3 + x - 4"), b = pp("x^2 - 3x + 1");
  REQUIRE(resultant(a, b) == resultant(b, a));
  REQUIRE(resultant(a, pp("x - 7")) == -resultant(pp("x - 7"), a));
  // multiplicativity
  REQUIRE(resultant(a * b, pp("x - 7")) ==
          resultant(a, pp("x - 7")) * resultant(b, pp("x - 7")));
}

TEST_CASE("discriminants of reference polynomials") {
  REQUIRE(discriminant(pp("x^2 + 1")) == -4);
  REQUIRE(discriminant(pp("x^2 - 5")) == 20);
  REQUIRE(discriminant(pp("x^3 - x - 1")) == -23);
  REQUIRE(discriminant(pp("x^3 - x^2 - 4x + 1")) == 321);
  REQUIRE(discriminant(pp("x^4 - x + 1")) == 229);
  REQUIRE(discriminant(pp("x^6+x^5+x^4+x^3+x^2+x+1")) == -16807);
  // (x-1)(x-2)(x-3): squared root differences
  REQUIRE(discriminant(pp("x-1") * pp("x-2") * pp("x-3")) == 4);
  // quadratic formula check on a non-monic
  REQUIRE(discriminant(pp("3x^2 + 5x + 1")) == 13);
  REQUIRE(discriminant(pp("x^2") + Poly::constant(0)) == 0);
}

TEST_CASE("integer gcd and squarefree part") {
  Poly f = pp("x^2 - 1") * pp("x + 3") * Poly::constant(3);
  Poly g = pp("x - 1") * pp("x + 3") * Poly::constant(2);
  REQUIRE(gcd_z(f, g) == pp("x - 1") * pp("x + 3"));
  REQUIRE(gcd_z(Poly::constant(6), Poly::constant(4)) == Poly::constant(2));
  REQUIRE(gcd_z(Poly::zero(), pp("-2x")) == pp("x"));
  REQUIRE(gcd_z(pp("x^2 + 1"), pp("x^2 + x + 1")).degree() == 0);

  REQUIRE(is_squarefree(pp("x^2 + 1")));
  REQUIRE(!is_squarefree(pp("x^2 + 2x + 1")));
  REQUIRE(squarefree_part(pp("x-1") * pp("x-1") * pp("x+2")) ==
          pp("x-1") * pp("x+2"));
}

TEST_CASE("sturm signatures") {
  auto sig = [](const std::string& s) { return poly_signature(pp(s)); };
  REQUIRE(sig("x^2 + 1") == std::make_pair(0, 1));
  REQUIRE(sig("x^2 - 5") == std::make_pair(2, 0));
  REQUIRE(sig("x^3 - x - 1") == std::make_pair(1, 1));
  REQUIRE(sig("x^3 - x^2 - 4x + 1") == std::make_pair(3, 0));
  REQUIRE(sig("x^4 - x + 1") == std::make_pair(0, 2));
  REQUIRE(sig("x^6+x^5+x^4+x^3+x^2+x+1") == std::make_pair(0, 3));
  REQUIRE(sig("x^6 - 1") == std::make_pair(2, 2));
  REQUIRE(sig("x - 4") == std::make_pair(1, 0));

  REQUIRE_THROWS(poly_signature(Poly::constant(2)));
  REQUIRE_THROWS(SturmChain(pp("x^2 + 2x + 1")));
  REQUIRE_THROWS(SturmChain(Poly::zero()));
}

TEST_CASE("sturm root counting in intervals") {
  Poly f = pp("x-1") * pp("x-2") * pp("x-3");
  SturmChain sc(f);
  REQUIRE(sc.count_real_roots() == 3);
  REQUIRE(sc.count_roots_in(Rat(1, 2), Rat(5, 2)) == 2);
  REQUIRE(sc.count_roots_in(Rat(5, 2), Rat(100)) == 1);
  REQUIRE(sc.count_roots_in(Rat(-10), Rat(0)) == 0);
  // half-open: (a, b] includes b
  REQUIRE(sc.count_roots_in(Rat(0), Rat(2)) == 2);
}

TEST_CASE("cauchy bound dominates every real root") {
  REQUIRE(cauchy_root_bound(pp("x^3 - x - 1")) == 3);
  Poly f = pp("x^4 - 10x^2 + 9");  // roots +-1, +-3
  Int b = cauchy_root_bound(f);
  SturmChain sc(f);
  REQUIRE(sc.count_roots_in(Rat(-b), Rat(b)) == 4);
  REQUIRE(b >= 4);
}
