#include <catch2/catch_amalgamated.hpp>

#include "chow/rootdata.hpp"
#include "chow/weyl.hpp"

using namespace chow;

TEST_CASE("positive root counts match the classical values") {
  struct Row {
    const char* name;
    int positives;
  };
  const Row rows[] = {
      {"A2", 3},  {"A3", 6},  {"B2", 4},  {"B3", 9},  {"C3", 9},  {"D4", 12},
      {"G2", 6},  {"F4", 24}, {"E6", 36}, {"E7", 63}, {"E8", 120},
  };
  for (const Row& r : rows) {
    RootSystem rs(DynkinSpec::parse(r.name));
    INFO(r.name);
    CHECK(rs.num_positive() == r.positives);
    CHECK(rs.num_roots() == 2 * r.positives);
  }
}

TEST_CASE("Cartan matrix entries for the chosen F4 orientation") {
  RootSystem rs(DynkinSpec::parse("F4"));
  // Short roots first: the double bond points from node 3 to node 2.
  CHECK(rs.cartan(1, 2) == -2);
  CHECK(rs.cartan(2, 1) == -1);
  CHECK(rs.cartan(0, 1) == -1);
  CHECK(rs.cartan(2, 3) == -1);
  CHECK(rs.cartan(3, 2) == -1);
  // These force w3 - a3 = 2w2 - w3 + w4 and w4 - a4 = w3 - w4.
  CHECK(rs.simple_root_weight_coords(2) == Coords{0, -2, 2, -1, 0, 0, 0, 0});
  CHECK(rs.simple_root_weight_coords(3) == Coords{0, 0, -1, 2, 0, 0, 0, 0});
}

TEST_CASE("degrees, Weyl group orders, and Poincare polynomials") {
  struct Row {
    const char* name;
    std::vector<int> degrees;
    long long order;
  };
  const Row rows[] = {
      {"A2", {2, 3}, 6},
      {"B2", {2, 4}, 8},
      {"G2", {2, 6}, 12},
      {"D4", {2, 4, 4, 6}, 192},
      {"F4", {2, 6, 8, 12}, 1152},
      {"E6", {2, 5, 6, 8, 9, 12}, 51840},
      {"E7", {2, 6, 8, 10, 12, 14, 18}, 2903040},
      {"E8", {2, 8, 12, 14, 18, 20, 24, 30}, 696729600},
  };
  for (const Row& r : rows) {
    RootSystem rs(DynkinSpec::parse(r.name));
    INFO(r.name);
    CHECK(rs.degrees() == r.degrees);
    CHECK(rs.weyl_order() == r.order);
    // Poincare polynomial evaluated at 1 recovers the group order.
    auto pp = rs.poincare_polynomial();
    long long total = 0;
    for (long long c : pp) total += c;
    CHECK(total == r.order);
    CHECK(static_cast<int>(pp.size()) == rs.num_positive() + 1);
  }
}

TEST_CASE("coroot coordinates give the weight-basis pairing") {
  for (const char* name : {"B3", "G2", "F4", "E6"}) {
    RootSystem rs(DynkinSpec::parse(name));
    INFO(name);
    for (int b = 0; b < rs.num_roots(); ++b) {
      const Root& beta = rs.root(b);
      // <beta^vee, omega_k> is the k-th coroot coordinate, so reflecting
      // omega_k must subtract that multiple of beta.
      for (int k = 0; k < rs.rank(); ++k) {
        std::vector<Rational> omega(static_cast<size_t>(rs.rank()), Rational(0));
        omega[static_cast<size_t>(k)] = 1;
        CHECK(rs.coroot_pairing(b, omega) == Rational(beta.coroot[static_cast<size_t>(k)]));
        std::vector<Rational> img = rs.reflect_weight(b, omega);
        for (int j = 0; j < rs.rank(); ++j) {
          Rational expect = Rational(j == k ? 1 : 0) -
                            Rational(beta.coroot[static_cast<size_t>(k)]) *
                                Rational(beta.weight[static_cast<size_t>(j)]);
          CHECK(img[static_cast<size_t>(j)] == expect);
        }
      }
    }
  }
}

TEST_CASE("root heights are consistent with the exponent oracle") {
  for (const char* name : {"A3", "B3", "F4", "E6", "E7", "E8"}) {
    RootSystem rs(DynkinSpec::parse(name));
    INFO(name);
    std::vector<int> exps = rs.exponents();
    // Number of exponents >= h equals the number of positive roots of height h.
    for (int h = 1; h <= exps.back(); ++h) {
      int count_ge = 0;
      for (int e : exps) count_ge += (e >= h);
      int roots_h = 0;
      for (int i = 0; i < rs.num_positive(); ++i)
        roots_h += (rs.root(i).height == h);
      CHECK(count_ge == roots_h);
    }
  }
}

TEST_CASE("parabolic subdiagram degrees") {
  {
    RootSystem rs(DynkinSpec::parse("E8"));
    ParabolicSubset theta = ParabolicSubset::maximal(8, 7);  // omit node 8 -> E7
    CHECK(rs.sub_degrees(theta.theta) == std::vector<int>{2, 6, 8, 10, 12, 14, 18});
    CHECK(rs.sub_weyl_order(theta.theta) == 2903040);
  }
  {
    RootSystem rs(DynkinSpec::parse("E7"));
    ParabolicSubset theta = ParabolicSubset::maximal(7, 6);  // omit node 7 -> E6
    CHECK(rs.sub_weyl_order(theta.theta) == 51840);
  }
  {
    RootSystem rs(DynkinSpec::parse("E6"));
    ParabolicSubset theta = ParabolicSubset::maximal(6, 0);  // omit node 1 -> D5
    CHECK(rs.sub_weyl_order(theta.theta) == 1920);
    CHECK(rs.sub_degrees(theta.theta) == std::vector<int>{2, 4, 5, 6, 8});
  }
  {
    RootSystem rs(DynkinSpec::parse("F4"));
    ParabolicSubset theta = ParabolicSubset::maximal(4, 0);  // omit node 1 -> C3
    CHECK(rs.sub_weyl_order(theta.theta) == 48);
  }
}
