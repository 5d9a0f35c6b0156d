#include <catch2/catch_amalgamated.hpp>

#include "chow/multtable.hpp"

using namespace chow;

namespace {
ChowClass unit(int id) {
  ChowClass x;
  x.add(id, Rational(1));
  return x;
}
}  // namespace

TEST_CASE("gap structure of F4/P1") {
  ChowRing R(DynkinSpec::parse("F4"), 0);
  MultTable T(R);
  // The rank bookkeeping must be exact in every codimension.
  for (const auto& g : T.gap_report()) {
    CHECK(g.pieri_rank <= g.span_rank);
    CHECK(g.span_rank <= g.betti);
    CHECK(g.new_generators == g.betti - g.span_rank);
  }
  // Hyperplane powers alone already fail in codimension 8, but the square
  // of the codimension-4 generator fills the deficiency: the only true gap
  // is at 4.
  CHECK(T.gap_codims() == std::vector<int>{4});
  // Expressions reconstruct every class.
  for (int id = 0; id < R.num_classes(); ++id) {
    if (R.cls(id).codim == 0) continue;
    const auto& e = T.expression(id);
    ChowClass rebuilt;
    for (const auto& term : e.product_part) {
      const ChowClass& p =
          term.gen == R.hyperplane_id() ? R.pieri(term.cls) : T.product(term.gen, term.cls);
      for (const auto& [t, m] : p.coeff) rebuilt.add(t, term.coeff * m);
    }
    for (const auto& [x, l] : e.generator_part) rebuilt.add(x, l);
    ChowClass expect;
    expect.add(id, Rational(1));
    CHECK(rebuilt == expect);
  }
}

TEST_CASE("ring axioms on F4/P1") {
  ChowRing R(DynkinSpec::parse("F4"), 0);
  MultTable T(R);
  // Unit.
  for (int id = 0; id < R.num_classes(); ++id) {
    ChowClass expect;
    expect.add(id, Rational(1));
    CHECK(T.product(R.unit_id(), id) == expect);
  }
  // Complementary products realize the duality pairing.
  for (int c = 0; c <= R.dim(); ++c)
    for (int a : R.classes_at(c))
      for (int b : R.classes_at(R.dim() - c)) {
        ChowClass expect;
        expect.add(R.point_id(), R.poincare_pair(a, b));
        CHECK(T.product(a, b) == expect);
      }
  // Associativity on a spread of triples.
  for (int a : {1, 2, 3, 5, 7}) {
    for (int b : {1, 3, 4, 6}) {
      for (int c : {2, 4, 8}) {
        if (R.cls(a).codim + R.cls(b).codim + R.cls(c).codim > R.dim() + 2) continue;
        ChowClass ab_c = T.multiply(T.product(a, b), unit(c));
        ChowClass a_bc = T.multiply(unit(a), T.product(b, c));
        CHECK(ab_c == a_bc);
      }
    }
  }
}

TEST_CASE("products agree with the direct polynomial route on F4/P1") {
  ChowRing R(DynkinSpec::parse("F4"), 0);
  MultTable T(R);
  PreimageSolver solver(R);
  // Independent oracle: multiply preimage polynomials and apply c.
  for (auto [i, j] : std::vector<std::pair<int, int>>{
           {2, 2}, {2, 3}, {3, 4}, {4, 4}, {3, 7}, {5, 6}, {2, 9}}) {
    int ia = i, ja = j;
    if (R.cls(ia).codim + R.cls(ja).codim > R.dim()) continue;
    ChowClass xi = unit(ia), xj = unit(ja);
    Polynomial pi = solver.preimage(xi, R.cls(ia).codim).polynomial;
    Polynomial pj = solver.preimage(xj, R.cls(ja).codim).polynomial;
    CHECK(T.product(ia, ja) == T.c_shared(pi * pj));
  }
}

TEST_CASE("integral structure constants on F4/P1") {
  ChowRing R(DynkinSpec::parse("F4"), 0);
  MultTable T(R);
  for (int i = 0; i < R.num_classes(); ++i)
    for (int j = i; j < R.num_classes(); ++j) {
      if (R.cls(i).codim + R.cls(j).codim > R.dim()) continue;
      for (const auto& [t, c] : T.product(i, j).coeff) {
        CHECK(is_integer(c));
        CHECK(c > 0);
      }
    }
}

TEST_CASE("gap structure and table consistency of E6/P1") {
  ChowRing R(DynkinSpec::parse("E6"), 0);
  MultTable T(R);
  CHECK(T.gap_codims() == std::vector<int>{4});
  CHECK(T.generators().size() == 1);
  // Associativity samples crossing the generator codimension.
  int x4 = T.generators()[0];
  CHECK(R.cls(x4).codim == 4);
  int h = R.hyperplane_id();
  int x8 = R.classes_at(8)[1];
  CHECK(T.multiply(T.product(x4, x4), unit(h)) == T.multiply(unit(x4), T.product(x4, h)));
  CHECK(T.multiply(T.product(x4, x8), unit(h)) == T.multiply(unit(x4), T.product(x8, h)));
  ChowClass x4x4 = T.product(x4, x4);
  CHECK(T.multiply(x4x4, x4x4) == T.multiply(T.multiply(x4x4, unit(x4)), unit(x4)));
  // All structure constants are non-negative integers.
  for (int i = 0; i < R.num_classes(); ++i)
    for (int j = i; j < R.num_classes(); ++j) {
      if (R.cls(i).codim + R.cls(j).codim > R.dim()) continue;
      for (const auto& [t, c] : T.product(i, j).coeff) {
        CHECK(is_integer(c));
        CHECK(c > 0);
      }
    }
}
