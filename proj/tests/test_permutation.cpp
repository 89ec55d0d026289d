#include <catch2/catch_amalgamated.hpp>

#include "cmtype/permutation.hpp"

using cmtype::CycleType;
using cmtype::Permutation;

TEST_CASE("identity and images") {
  Permutation e(6);
  REQUIRE(e.is_identity());
  REQUIRE(e.degree() == 6);
  for (int i = 0; i < 6; ++i) REQUIRE(e(i) == i);

  Permutation p(4, {1, 0, 3, 2});
  REQUIRE(p(0) == 1);
  REQUIRE(p(3) == 2);
  REQUIRE_FALSE(p.is_identity());
}

TEST_CASE("constructor rejects non-bijections") {
  REQUIRE_THROWS(Permutation(3, {0, 0, 1}));
  REQUIRE_THROWS(Permutation(3, {0, 1, 3}));
  REQUIRE_THROWS(Permutation(3, {0, 1}));
  REQUIRE_THROWS(Permutation(9));
}

TEST_CASE("cycle construction and printing round-trip") {
  auto p = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}});
  REQUIRE(p(0) == 1);
  REQUIRE(p(2) == 0);
  REQUIRE(p(3) == 4);
  REQUIRE(p(5) == 5);
  REQUIRE(p.str() == "(0 1 2)(3 4)");
  REQUIRE(Permutation::parse_cycles(6, p.str()) == p);
  REQUIRE(Permutation::parse_cycles(6, "(0,1,2)(3,4)") == p);
  REQUIRE(Permutation::parse_cycles(5, "()").is_identity());
  REQUIRE_THROWS(Permutation::from_cycles(4, {{0, 1}, {1, 2}}));
}

TEST_CASE("composition convention (a*b)(x) = a(b(x))") {
  auto a = Permutation::parse_cycles(3, "(0 1)");
  auto b = Permutation::parse_cycles(3, "(1 2)");
  // b first: 1->2, then a: 2 stays; so 1 -> 2
  REQUIRE((a * b)(1) == 2);
  REQUIRE((a * b)(2) == 0);
  REQUIRE((b * a)(1) == 0);
  REQUIRE(a * a.inverse() == Permutation(3));
}

TEST_CASE("inverse") {
  auto p = Permutation::parse_cycles(6, "(0 1 2 3 4 5)");
  REQUIRE(p.inverse()(0) == 5);
  REQUIRE((p * p.inverse()).is_identity());
  REQUIRE((p.inverse() * p).is_identity());
}

TEST_CASE("cycle types") {
  auto c222 = Permutation::parse_cycles(6, "(0 1)(2 3)(4 5)");
  auto t = c222.cycle_type();
  REQUIRE(t.parts == std::vector<int>{2, 2, 2});
  REQUIRE(t.odd);  // three transpositions
  REQUIRE(t.str() == "2,2,2");

  auto e = Permutation(6).cycle_type();
  REQUIRE(e.parts == std::vector<int>{1, 1, 1, 1, 1, 1});
  REQUIRE_FALSE(e.odd);

  auto six = Permutation::parse_cycles(6, "(0 1 2 3 4 5)").cycle_type();
  REQUIRE(six.parts == std::vector<int>{6});
  REQUIRE(six.odd);  // n-cycle has parity (-1)^(n-1)

  auto mixed = Permutation::parse_cycles(6, "(0 1 2 3)(4 5)").cycle_type();
  REQUIRE(mixed.parts == std::vector<int>{4, 2});
  REQUIRE_FALSE(mixed.odd);
  REQUIRE(mixed.degree() == 6);
}

TEST_CASE("parity matches inversion-count oracle on all of S4") {
  // brute-force parity by counting inversions
  std::vector<int> im{0, 1, 2, 3};
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (im[i] > im[j]) ++inv;
    Permutation p(4, im);
    REQUIRE(p.cycle_type().odd == (inv % 2 == 1));
  } while (std::next_permutation(im.begin(), im.end()));
}

TEST_CASE("order") {
  REQUIRE(Permutation::parse_cycles(6, "(0 1 2 3 4 5)").order() == 6);
  REQUIRE(Permutation::parse_cycles(6, "(0 1 2)(3 4)").order() == 6);
  REQUIRE(Permutation::parse_cycles(6, "(0 1)(2 3)(4 5)").order() == 2);
  REQUIRE(Permutation(5).order() == 1);
}

TEST_CASE("conjugation preserves cycle type") {
  auto p = Permutation::parse_cycles(6, "(0 1 2)(3 4)");
  auto g = Permutation::parse_cycles(6, "(0 3 5)(1 4)");
  auto q = p.conjugated_by(g);
  REQUIRE(q.cycle_type() == p.cycle_type());
  // conjugation relabels points by g
  REQUIRE(q(g(0)) == g(p(0)));
}
