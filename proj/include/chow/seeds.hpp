#pragma once

// Precomputed pin values for the large tables.
//
// The table builder settles almost every product by linear algebra; the few
// generator monomials that carry genuinely new intersection numbers (see
// multtable.hpp) need one direct polynomial evaluation each.  For E8/P8
// those evaluations are expensive, so their results are recorded here after
// a one-time from-scratch run.  The values are not trusted blindly: each one
// only adds equations to a linear system that is already consistent, and
// any incorrect value makes the overdetermined system unsolvable, which the
// builder reports as an error.  Rebuilding the seed from scratch just means
// constructing a MultTable without a seed and reading pinned_values().

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "chow/chowring.hpp"
#include "chow/multtable.hpp"

namespace chow {

inline MultTable::PinSeed standard_pin_seed(const ChowRing& R) {
  MultTable::PinSeed seed;
  const DynkinSpec& spec = R.roots().spec();
  if (spec.family != 'E' || spec.rank != 8 || R.omitted() != 7) return seed;
  struct Entry {
    std::vector<std::pair<int, int>> mono;         // generator factors (codim, index)
    std::vector<std::pair<int, long long>> value;  // (index, coeff) at the total codim
  };
  static const std::vector<Entry> entries = {
      {{{6, 1}, {6, 1}, {6, 1}},
       {{1, 84}, {2, 56}, {3, 141}, {4, 201}, {5, 261}, {6, 15}}},
      {{{6, 1}, {6, 1}, {10, 1}},
       {{1, 210}, {2, 26}, {3, 514}, {4, 73}, {5, 151}, {6, 374}, {7, 323}}},
      {{{6, 1}, {6, 1}, {6, 1}, {6, 1}},
       {{1, 9204}, {2, 6560}, {3, 17970}, {4, 5406}, {5, 7308}, {6, 12639}, {7, 1422}}},
      {{{6, 1}, {6, 1}, {6, 1}, {10, 1}},
       {{1, 2139},
        {2, 9397},
        {3, 15720},
        {4, 41115},
        {5, 24912},
        {6, 8058},
        {7, 1383},
        {8, 99}}},
  };
  for (const Entry& e : entries) {
    std::vector<int> key;
    int total = 0;
    for (const auto& [gc, gi] : e.mono) {
      key.push_back(R.class_id(gc, gi));
      total += gc;
    }
    std::sort(key.begin(), key.end());
    ChowClass v;
    for (const auto& [idx, coeff] : e.value)
      v.add(R.class_id(total, idx), Rational(mpz_class(static_cast<long>(coeff))));
    seed[std::move(key)] = std::move(v);
  }
  return seed;
}

}  // namespace chow
