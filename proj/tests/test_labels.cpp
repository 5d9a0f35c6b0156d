#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "chow/chowring.hpp"
#include "chow/labels_e7p7.hpp"

using namespace chow;

TEST_CASE("the E7/P7 label fixture is a complete set of minimal representatives") {
  DynkinSpec spec = DynkinSpec::parse("E7");
  const auto* words = standard_label_words(spec, 6);
  REQUIRE(words != nullptr);
  REQUIRE(words->size() == 56);

  ChowRing R(spec, 6);
  const WeylGroup& W = R.weyl();
  std::set<std::vector<int>> seen;
  for (const auto& w : *words) {
    WeylElement e = W.from_word(w);
    // Each fixture word is reduced and represents a minimal coset element.
    CHECK(W.length(e) == static_cast<int>(w.size()));
    CHECK(W.is_minimal_coset_rep(e, R.theta()));
    CHECK(seen.insert(W.reduced_word(e)).second);
  }
}

TEST_CASE("the E7/P7 label fixture fixes the basis order") {
  DynkinSpec spec = DynkinSpec::parse("E7");
  const auto* words = standard_label_words(spec, 6);
  ChowRing R(spec, 6, words);
  const WeylGroup& W = R.weyl();
  REQUIRE(R.num_classes() == 56);
  // Fixture entries appear in order of decreasing length (codim 0 first),
  // and the (codim, index) labels follow the fixture appearance order.
  std::vector<int> next_index(R.dim() + 1, 1);
  for (const auto& w : *words) {
    int codim = R.dim() - static_cast<int>(w.size());
    int id = R.class_id(codim, next_index[static_cast<size_t>(codim)]++);
    const SchubertClass& s = R.cls(id);
    CHECK(s.codim == codim);
    CHECK(W.reduced_word(s.min_rep) == W.reduced_word(W.from_word(w)));
  }
  for (int c = 0; c <= R.dim(); ++c) CHECK(next_index[static_cast<size_t>(c)] - 1 == R.betti(c));
}

TEST_CASE("no fixture is registered for other types") {
  CHECK(standard_label_words(DynkinSpec::parse("E7"), 0) == nullptr);
  CHECK(standard_label_words(DynkinSpec::parse("E6"), 0) == nullptr);
  CHECK(standard_label_words(DynkinSpec::parse("F4"), 0) == nullptr);
}
