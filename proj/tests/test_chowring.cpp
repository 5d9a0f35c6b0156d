#include <catch2/catch_amalgamated.hpp>

#include "chow/chowring.hpp"

using namespace chow;

namespace {

// h^dim as a multiple of the point class (the degree of the variety).
Rational variety_degree(const ChowRing& R) {
  ChowClass x;
  x.add(R.unit_id(), Rational(1));
  for (int i = 0; i < R.dim(); ++i) x = R.pieri_apply(x);
  REQUIRE(x.coeff.size() == 1);
  REQUIRE(x.coeff.begin()->first == R.point_id());
  return x.coeff.begin()->second;
}

}  // namespace

TEST_CASE("projective plane: A2/P1") {
  ChowRing R(DynkinSpec::parse("A2"), 0);
  CHECK(R.dim() == 2);
  CHECK(R.num_classes() == 3);
  for (int c = 0; c <= 2; ++c) CHECK(R.betti(c) == 1);
  // CH(P^2) = Z[h]/h^3.
  CHECK(variety_degree(R) == 1);
  CHECK(R.pieri(R.point_id()).is_zero());
  CHECK(R.dual_id(R.unit_id()) == R.point_id());
  CHECK(R.dual_id(R.hyperplane_id()) == R.class_id(1, 1));
}

TEST_CASE("odd quadrics: B2/P1 and G2/P1") {
  // Both are smooth quadric hypersurfaces, so their degree is 2.
  for (const char* name : {"B2", "G2"}) {
    ChowRing R(DynkinSpec::parse(name), 0);
    INFO(name);
    CHECK(R.dim() == (name[0] == 'B' ? 3 : 5));
    for (int c = 0; c <= R.dim(); ++c) CHECK(R.betti(c) == 1);
    CHECK(variety_degree(R) == 2);
  }
}

TEST_CASE("degrees of the exceptional Severi and Freudenthal varieties") {
  ChowRing E6(DynkinSpec::parse("E6"), 0);
  CHECK(E6.dim() == 16);
  CHECK(E6.num_classes() == 27);
  CHECK(variety_degree(E6) == 78);

  ChowRing E7(DynkinSpec::parse("E7"), 6);
  CHECK(E7.dim() == 27);
  CHECK(E7.num_classes() == 56);
  CHECK(variety_degree(E7) == 13110);
}

TEST_CASE("duality pairing is a permutation and respects codimension") {
  ChowRing R(DynkinSpec::parse("F4"), 0);
  CHECK(R.dim() == 15);
  std::vector<int> seen(static_cast<size_t>(R.num_classes()), 0);
  for (int id = 0; id < R.num_classes(); ++id) {
    int d = R.dual_id(id);
    CHECK(R.cls(d).codim == R.dim() - R.cls(id).codim);
    CHECK(R.dual_id(d) == id);
    ++seen[static_cast<size_t>(d)];
  }
  for (int s : seen) CHECK(s == 1);
  // Pairing against a non-dual class of complementary codimension is zero.
  for (int c = 0; c <= R.dim(); ++c)
    for (int a : R.classes_at(c))
      for (int b : R.classes_at(R.dim() - c))
        CHECK(R.poincare_pair(a, b) == (b == R.dual_id(a) ? 1 : 0));
}

TEST_CASE("Pieri multiplication is self-adjoint under the duality pairing") {
  // <h*a, b> = <a, h*b> whenever codim a + codim b = dim - 1.
  for (const char* name : {"F4", "B3"}) {
    ChowRing R(DynkinSpec::parse(name), name[0] == 'B' ? 1 : 0);
    INFO(name);
    for (int c = 0; c + 1 <= R.dim(); ++c) {
      for (int a : R.classes_at(c)) {
        const ChowClass& ha = R.pieri(a);
        for (int b : R.classes_at(R.dim() - c - 1)) {
          const ChowClass& hb = R.pieri(b);
          Rational lhs = 0, rhs = 0;
          auto it = ha.coeff.find(R.dual_id(b));
          if (it != ha.coeff.end()) lhs = it->second;
          auto jt = hb.coeff.find(R.dual_id(a));
          if (jt != hb.coeff.end()) rhs = jt->second;
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("characteristic map matches the Pieri rule on powers of w_p") {
  for (const char* name : {"F4", "B3", "E6"}) {
    int p = (name[0] == 'B') ? 1 : 0;
    ChowRing R(DynkinSpec::parse(name), p);
    INFO(name);
    Polynomial wp = Polynomial::variable(p);
    // c(w_p) is the hyperplane class.
    ChowClass h;
    h.add(R.hyperplane_id(), Rational(1));
    CHECK(R.c_restricted(wp) == h);
    // c is a ring homomorphism, so c(w_p^k) = h^k.
    ChowClass hk = h;
    Polynomial wpk = wp;
    for (int k = 2; k <= 4; ++k) {
      hk = R.pieri_apply(hk);
      wpk *= wp;
      CHECK(R.c_restricted(wpk) == hk);
    }
  }
}

TEST_CASE("Hasse and Pieri graphs") {
  ChowRing R(DynkinSpec::parse("B3"), 2);
  // Hasse edges connect adjacent codimensions, descending by one.
  for (const auto& e : R.hasse_edges()) {
    CHECK(R.cls(e.to).codim == R.cls(e.from).codim - 1);
    CHECK(e.label >= 0);
    CHECK(e.label < 3);
  }
  // Pieri edges ascend by one codimension with positive multiplicity.
  int reached = 0;
  for (const auto& e : R.pieri_edges()) {
    CHECK(R.cls(e.to).codim == R.cls(e.from).codim + 1);
    CHECK(e.mult > 0);
    ++reached;
  }
  CHECK(reached > 0);
}
