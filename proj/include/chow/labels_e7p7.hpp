#pragma once

// Pinned (codim, index) labelling for the basis of CH(E7/P7).
//
// Each entry is a reduced word (0-based simple-reflection letters) for the
// minimal coset representative of one Schubert class.  Entries are listed by
// increasing codimension; within a codimension the order of appearance fixes
// the 1-based index, matching the classical g_{i,j} tables for this variety.
// A word of length L labels the class of codimension 27 - L.

#include <vector>

#include "chow/rootdata.hpp"

namespace chow {

inline const std::vector<std::vector<int>>& e7p7_label_words() {
  static const std::vector<std::vector<int>> words = [] {
    // 1-based letters, as commonly tabulated (rightmost letter applied
    // first); shifted to 0-based and reversed below so each entry reads as
    // a left-to-right product of simple reflections.
    const std::vector<std::vector<int>> raw = {
        // codim 0
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1, 3, 2, 4, 5, 6, 7},
        // codim 1
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1, 3, 2, 4, 5, 6},
        // codim 2
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1, 3, 2, 4, 5},
        // codim 3
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1, 3, 2, 4},
        // codim 4
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1, 3, 2},
        // codim 5
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1, 3},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2, 1},
        // codim 6
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 2},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3, 4, 1},
        // codim 7
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3, 4},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3, 1},
        // codim 8
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5, 3},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 3, 1},
        // codim 9
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 5},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4, 3},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 2, 4, 3, 1},
        // codim 10
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2, 4},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 2, 4, 3},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3, 1},
        // codim 11
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6, 2},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 2, 4},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5, 2, 4, 3},
        // codim 12
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 6},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5, 2},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5, 2, 4},
        // codim 13
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 5},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4, 2},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5, 2},
        // codim 14
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 2},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4, 5},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3, 4},
        // codim 15
        {7, 6, 5, 4, 3, 2, 4, 5, 1, 3, 4, 2},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3, 4},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1, 3},
        // codim 16
        {7, 6, 5, 4, 3, 2, 4, 5, 1, 3, 4},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 1, 3},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7, 1},
        // codim 17
        {7, 6, 5, 4, 3, 2, 4, 5, 1, 3},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 1},
        {7, 6, 5, 4, 3, 2, 4, 5, 6, 7},
        // codim 18
        {7, 6, 5, 4, 3, 2, 4, 1, 3},
        {7, 6, 5, 4, 3, 2, 4, 5, 1},
        {7, 6, 5, 4, 3, 2, 4, 5, 6},
        // codim 19
        {7, 6, 5, 4, 3, 2, 4, 1},
        {7, 6, 5, 4, 3, 2, 4, 5},
        // codim 20
        {7, 6, 5, 4, 3, 2, 1},
        {7, 6, 5, 4, 3, 2, 4},
        // codim 21
        {7, 6, 5, 4, 3, 1},
        {7, 6, 5, 4, 3, 2},
        // codim 22
        {7, 6, 5, 4, 2},
        {7, 6, 5, 4, 3},
        // codim 23
        {7, 6, 5, 4},
        // codim 24
        {7, 6, 5},
        // codim 25
        {7, 6},
        // codim 26
        {7},
        // codim 27
        {},
    };
    std::vector<std::vector<int>> shifted;
    shifted.reserve(raw.size());
    for (const auto& w : raw) {
      std::vector<int> v;
      v.reserve(w.size());
      for (auto it = w.rbegin(); it != w.rend(); ++it) v.push_back(*it - 1);
      shifted.push_back(std::move(v));
    }
    return shifted;
  }();
  return words;
}

/// Pinned label table for a given variety, if one exists (currently E7/P7);
/// otherwise nullptr, and the deterministic lex-min word order applies.
inline const std::vector<std::vector<int>>* standard_label_words(const DynkinSpec& spec,
                                                                 int omitted) {
  if (spec.family == 'E' && spec.rank == 7 && omitted == 6) return &e7p7_label_words();
  return nullptr;
}

}  // namespace chow
