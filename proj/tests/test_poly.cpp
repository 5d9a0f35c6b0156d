#include <catch2/catch_amalgamated.hpp>

#include "chow/poly.hpp"
#include "chow/polyops.hpp"

using namespace chow;

TEST_CASE("parse and print round trip") {
  const int rank = 4;
  const char* texts[] = {
      "0",
      "1",
      "-3/2",
      "w[1]",
      "w[1]^2 - 2*w[1]*w[2] + w[2]^2",
      "2*w[3]*w[4] - w[4]^2 + 1/3*w[1]",
  };
  for (const char* t : texts) {
    Polynomial p = Polynomial::parse(t, rank);
    CHECK(Polynomial::parse(p.to_string(rank), rank) == p);
  }
  // Canonical form merges repeated monomials.
  CHECK(Polynomial::parse("w[1] + w[1]", 4) == Polynomial::parse("2*w[1]", 4));
  CHECK(Polynomial::parse("w[2]*w[1]", 4) == Polynomial::parse("w[1]*w[2]", 4));
  CHECK(Polynomial::parse("w[1] - w[1]", 4).is_zero());
}

TEST_CASE("grevlex ordering") {
  // Degree dominates.
  auto key = [](const char* t) { return Polynomial::parse(t, 4).leading().first; };
  CHECK(grevlex_less(key("w[1]"), key("w[4]^2")));
  // Same degree: smaller exponent on the last differing variable wins.
  CHECK(grevlex_less(key("w[2]"), key("w[1]")));
  CHECK(grevlex_less(key("w[1]*w[4]"), key("w[2]*w[3]")));
  CHECK(grevlex_less(key("w[3]^2"), key("w[2]*w[3]")));
  // Leading term of a sum is the grevlex-largest monomial.
  Polynomial p = Polynomial::parse("w[4]^3 + w[1]*w[2] + w[1]", 4);
  CHECK(p.leading().first == key("w[4]^3"));
}

TEST_CASE("arithmetic, degree, evaluation") {
  Polynomial a = Polynomial::parse("w[1] + w[2]", 2);
  Polynomial b = Polynomial::parse("w[1] - w[2]", 2);
  CHECK(a * b == Polynomial::parse("w[1]^2 - w[2]^2", 2));
  Polynomial sq = a * a;
  CHECK(sq == Polynomial::parse("w[1]^2 + 2*w[1]*w[2] + w[2]^2", 2));
  CHECK(sq.degree() == 2);
  CHECK(sq.is_homogeneous());
  CHECK_FALSE((sq + b).is_homogeneous());
  std::vector<Rational> pt{Rational(2), Rational(-3)};
  CHECK(sq.evaluate(pt) == Rational(1));
  CHECK(a.derivative(0) == Polynomial::constant(Rational(1)));
  CHECK(sq.derivative(1) == Polynomial::parse("2*w[1] + 2*w[2]", 2));
}

TEST_CASE("exact division") {
  Polynomial a = Polynomial::parse("w[1]^2 - w[2]^2", 2);
  Polynomial d = Polynomial::parse("w[1] - w[2]", 2);
  CHECK(PolyOps::exact_divide(a, d) == Polynomial::parse("w[1] + w[2]", 2));
  CHECK_THROWS(PolyOps::exact_divide(Polynomial::parse("w[1]^2 + w[2]^2", 2), d));
}

TEST_CASE("simple reflections act by the documented substitution") {
  RootSystem rs(DynkinSpec::parse("F4"));
  PolyOps ops(rs);
  const int n = 4;
  // The four substitution images w_i - a_i.
  const char* images[] = {
      "-w[1] + w[2]",
      "w[1] - w[2] + w[3]",
      "2*w[2] - w[3] + w[4]",
      "w[3] - w[4]",
  };
  for (int i = 0; i < n; ++i) {
    CHECK(ops.simple_reflect(Polynomial::variable(i), i) == Polynomial::parse(images[i], n));
    for (int j = 0; j < n; ++j)
      if (j != i)
        CHECK(ops.simple_reflect(Polynomial::variable(j), i) == Polynomial::variable(j));
    // Involution on a bigger polynomial.
    Polynomial p = Polynomial::parse("w[1]^2*w[3] - 5*w[2]*w[4] + w[4]^3", n);
    CHECK(ops.simple_reflect(ops.simple_reflect(p, i), i) == p);
  }
  // Worked substitution: s_2(w2*w3) = (w1 - w2 + w3)*w3.
  CHECK(ops.simple_reflect(Polynomial::parse("w[2]*w[3]", n), 1) ==
        Polynomial::parse("w[1]*w[3] - w[2]*w[3] + w[3]^2", n));
  // s_3(w3^2) = (2w2 - w3 + w4)^2.
  CHECK(ops.simple_reflect(Polynomial::parse("w[3]^2", n), 2) ==
        Polynomial::parse(
            "4*w[2]^2 + w[3]^2 + w[4]^2 - 4*w[2]*w[3] + 4*w[2]*w[4] - 2*w[3]*w[4]", n));
}

TEST_CASE("Weyl action through an arbitrary element matches composed reflections") {
  RootSystem rs(DynkinSpec::parse("B3"));
  WeylGroup wg(rs);
  PolyOps ops(rs);
  Polynomial p = Polynomial::parse("w[1]*w[2]^2 - w[3]^3 + 2*w[1]*w[2]*w[3]", 3);
  std::vector<int> word{0, 2, 1, 2, 0};
  WeylElement w = wg.from_word(word);
  Polynomial via_gens = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    via_gens = ops.simple_reflect(via_gens, *it);
  CHECK(ops.weyl_apply(w, p) == via_gens);
}

TEST_CASE("divided differences: basics, nilpotency, braid relations") {
  RootSystem rs(DynkinSpec::parse("F4"));
  PolyOps ops(rs);
  const int n = 4;
  for (int i = 0; i < n; ++i) {
    CHECK(ops.divided_difference(Polynomial::variable(i), i) ==
          Polynomial::constant(Rational(1)));
    for (int j = 0; j < n; ++j)
      if (j != i) CHECK(ops.divided_difference(Polynomial::variable(j), i).is_zero());
    // Nilpotency D_i^2 = 0.
    Polynomial p = Polynomial::parse("w[1]^3 - w[2]*w[3]*w[4] + w[3]^2*w[4]", n);
    CHECK(ops.divided_difference(ops.divided_difference(p, i), i).is_zero());
    // D_i lowers degree by exactly one.
    Polynomial d = ops.divided_difference(p, i);
    if (!d.is_zero()) CHECK(d.degree() == p.degree() - 1);
  }
  // Braid relation for the double bond 2-3: D2 D3 D2 D3 = D3 D2 D3 D2.
  Polynomial q = Polynomial::parse("w[2]^2*w[3]^2 + w[1]*w[2]*w[3]*w[4] - w[4]^4", n);
  auto chain = [&](std::vector<int> word, Polynomial v) {
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      v = ops.divided_difference(v, *it);
    return v;
  };
  CHECK(chain({1, 2, 1, 2}, q) == chain({2, 1, 2, 1}, q));
  // Simple bond 1-2: D1 D2 D1 = D2 D1 D2.
  CHECK(chain({0, 1, 0}, q) == chain({1, 0, 1}, q));
  // Commuting pair 1-3 (not adjacent): D1 D3 = D3 D1.
  CHECK(chain({0, 2}, q) == chain({2, 0}, q));
}

TEST_CASE("delta_word applies the rightmost letter first") {
  RootSystem rs(DynkinSpec::parse("A2"));
  PolyOps ops(rs);
  Polynomial p = Polynomial::parse("w[1]^2*w[2]", 2);
  Polynomial manual = ops.divided_difference(ops.divided_difference(p, 1), 0);
  CHECK(ops.delta_word(p, {0, 1}) == manual);
}

TEST_CASE("divided differences are invariant under reduced-word choice") {
  RootSystem rs(DynkinSpec::parse("B3"));
  WeylGroup wg(rs);
  PolyOps ops(rs);
  Polynomial p = Polynomial::parse("w[1]^2*w[2]^2*w[3] + w[3]^5 - 3*w[1]*w[2]^4", 3);
  // Two different reduced words for the same element.
  WeylElement w = wg.from_word({0, 1, 0});
  REQUIRE(wg.from_word({1, 0, 1}) == w);
  CHECK(ops.delta_word(p, {0, 1, 0}) == ops.delta_word(p, {1, 0, 1}));
}
