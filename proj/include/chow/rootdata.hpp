#pragma once

// Root systems and weight lattices for the simple Dynkin types, with all
// arithmetic over exact integers/rationals.
//
// Conventions (fixed once, used everywhere):
//   * Simple roots are numbered 1..rank externally, 0..rank-1 internally.
//     The numbering follows Bourbaki for types A,B,C,D,E,G.  For F4 the
//     orientation is reversed relative to Bourbaki Plate VIII: alpha_1,
//     alpha_2 are the short simple roots and alpha_3, alpha_4 the long ones,
//     so that alpha_3 = -2w2 + 2w3 - w4 and alpha_4 = -w3 + 2w4 in the
//     fundamental-weight basis.
//   * cartan(i,j) = <alpha_i^vee, alpha_j>.  Consequently the coordinates of
//     alpha_j in the fundamental-weight basis are column j of the Cartan
//     matrix: alpha_j = sum_i cartan(i,j) * w_i.
//   * Every root is stored in three coordinate systems: simple-root basis,
//     simple-coroot basis (coordinates of beta^vee) and fundamental-weight
//     basis.  <beta^vee, w_k> is then just the k-th coroot coordinate.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "chow/rational.hpp"

namespace chow {

constexpr int kMaxRank = 8;

/// Integer coordinate vector of length <= kMaxRank (trailing entries zero).
using Coords = std::array<int, kMaxRank>;

inline uint64_t pack_coords(const Coords& c) {
  // Entries of root/coroot coordinate vectors are tiny; bias into a byte.
  uint64_t k = 0;
  for (int i = kMaxRank - 1; i >= 0; --i) {
    if (c[i] < -100 || c[i] > 100) throw std::runtime_error("pack_coords overflow");
    k = (k << 8) | static_cast<uint8_t>(c[i] + 120);
  }
  return k;
}

struct DynkinSpec {
  char family = 'A';
  int rank = 1;

  void validate() const {
    switch (family) {
      case 'A':
        if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("A rank out of range");
        return;
      case 'B':
        if (rank < 2 || rank > kMaxRank) throw std::invalid_argument("B rank out of range");
        return;
      case 'C':
        if (rank < 2 || rank > kMaxRank) throw std::invalid_argument("C rank out of range");
        return;
      case 'D':
        if (rank < 3 || rank > kMaxRank) throw std::invalid_argument("D rank out of range");
        return;
      case 'E':
        if (rank < 6 || rank > 8) throw std::invalid_argument("E rank must be 6, 7 or 8");
        return;
      case 'F':
        if (rank != 4) throw std::invalid_argument("F rank must be 4");
        return;
      case 'G':
        if (rank != 2) throw std::invalid_argument("G rank must be 2");
        return;
      default:
        throw std::invalid_argument(std::string("unknown family '") + family + "'");
    }
  }

  std::string name() const { return std::string(1, family) + std::to_string(rank); }

  static DynkinSpec parse(const std::string& s) {
    if (s.size() < 2) throw std::invalid_argument("bad Dynkin type: " + s);
    DynkinSpec d;
    d.family = static_cast<char>(std::toupper(s[0]));
    d.rank = std::stoi(s.substr(1));
    d.validate();
    return d;
  }
};

struct Root {
  Coords simple{};   // coordinates in the simple-root basis
  Coords coroot{};   // coordinates of beta^vee in the simple-coroot basis
  Coords weight{};   // coordinates in the fundamental-weight basis
  bool positive = false;
  int height = 0;    // sum of simple coordinates (negative for negative roots)
};

class RootSystem {
 public:
  explicit RootSystem(DynkinSpec spec) : spec_(spec) {
    spec_.validate();
    rank_ = spec_.rank;
    build_cartan();
    generate_roots();
    compute_exponents();
  }

  const DynkinSpec& spec() const { return spec_; }
  int rank() const { return rank_; }

  /// <alpha_i^vee, alpha_j>, 0-based.
  int cartan(int i, int j) const { return cartan_[i][j]; }

  /// Weight-basis coordinates of alpha_j (column j of the Cartan matrix).
  Coords simple_root_weight_coords(int j) const {
    Coords c{};
    for (int i = 0; i < rank_; ++i) c[i] = cartan_[i][j];
    return c;
  }

  int num_positive() const { return num_positive_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const Root& root(int k) const { return roots_[static_cast<size_t>(k)]; }

  /// Index of the root with the given weight coordinates, or -1.
  int root_index(const Coords& weight_coords) const {
    auto it = index_.find(pack_coords(weight_coords));
    return it == index_.end() ? -1 : it->second;
  }

  int negate_root(int k) const {
    Coords w = roots_[static_cast<size_t>(k)].weight;
    for (int i = 0; i < rank_; ++i) w[i] = -w[i];
    return root_index(w);
  }

  /// Index of the simple root alpha_i among the stored roots.
  int simple_root_index(int i) const { return simple_index_[static_cast<size_t>(i)]; }

  /// <beta^vee, lambda> for lambda given in fundamental-weight coordinates.
  template <typename Vec>
  Rational coroot_pairing(int root_idx, const Vec& lambda) const {
    const Root& r = roots_[static_cast<size_t>(root_idx)];
    Rational acc = 0;
    for (int i = 0; i < rank_; ++i) acc += Rational(r.coroot[i]) * lambda[static_cast<size_t>(i)];
    return acc;
  }

  int coroot_pairing_int(int root_idx, const Coords& lambda) const {
    const Root& r = roots_[static_cast<size_t>(root_idx)];
    int acc = 0;
    for (int i = 0; i < rank_; ++i) acc += r.coroot[i] * lambda[i];
    return acc;
  }

  /// s_beta(lambda) = lambda - <beta^vee, lambda> beta, rational weight coords.
  std::vector<Rational> reflect_weight(int root_idx, const std::vector<Rational>& lambda) const {
    if (static_cast<int>(lambda.size()) != rank_)
      throw std::invalid_argument("reflect_weight: dimension mismatch");
    Rational pairing = coroot_pairing(root_idx, lambda);
    const Root& r = roots_[static_cast<size_t>(root_idx)];
    std::vector<Rational> out(lambda);
    for (int i = 0; i < rank_; ++i) out[static_cast<size_t>(i)] -= pairing * Rational(r.weight[i]);
    return out;
  }

  /// Exponents of the Weyl group, ascending, one per simple-root index
  /// (union over irreducible components).  Derived from the height
  /// distribution of the positive roots.
  const std::vector<int>& exponents() const { return exponents_; }

  /// Degrees of the fundamental invariants: exponents + 1.
  const std::vector<int>& degrees() const { return degrees_; }

  /// |W| = product of the degrees.
  long long weyl_order() const { return weyl_order_; }

  /// Poincare polynomial of W, coefficients of q^0..q^{|Phi^+|},
  /// from prod (1 - q^d_i) / (1 - q).
  std::vector<long long> poincare_polynomial() const {
    return poincare_from_degrees(degrees_);
  }

  static std::vector<long long> poincare_from_degrees(const std::vector<int>& degrees) {
    std::vector<long long> p{1};
    for (int d : degrees) {
      // multiply by 1 + q + ... + q^{d-1}
      std::vector<long long> next(p.size() + static_cast<size_t>(d) - 1, 0);
      for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < d; ++j) next[i + static_cast<size_t>(j)] += p[i];
      p = std::move(next);
    }
    return p;
  }

  /// Connected components of the sub-Dynkin-diagram on the given simple
  /// indices (0-based); each component is sorted.
  std::vector<std::vector<int>> components(const std::vector<int>& nodes) const {
    std::vector<std::vector<int>> comps;
    std::vector<int> pending(nodes);
    std::sort(pending.begin(), pending.end());
    std::vector<bool> used(static_cast<size_t>(rank_), false);
    for (int start : pending) {
      if (used[static_cast<size_t>(start)]) continue;
      std::vector<int> comp;
      std::deque<int> queue{start};
      used[static_cast<size_t>(start)] = true;
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        comp.push_back(u);
        for (int v : pending)
          if (!used[static_cast<size_t>(v)] && cartan_[u][v] != 0) {
            used[static_cast<size_t>(v)] = true;
            queue.push_back(v);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    return comps;
  }

  /// Exponents of the parabolic subsystem spanned by the given simple
  /// indices (union over its irreducible components).
  std::vector<int> sub_exponents(const std::vector<int>& theta) const {
    std::vector<int> expo;
    for (const auto& comp : components(theta)) {
      // Heights of the positive roots supported on this component.
      std::vector<int> heights;
      for (int k = 0; k < num_positive_; ++k) {
        const Root& r = roots_[static_cast<size_t>(k)];
        bool inside = true;
        int h = 0;
        for (int i = 0; i < rank_; ++i) {
          if (r.simple[i] == 0) continue;
          if (std::find(comp.begin(), comp.end(), i) == comp.end()) {
            inside = false;
            break;
          }
          h += r.simple[i];
        }
        if (inside) heights.push_back(h);
      }
      auto e = exponents_from_heights(heights);
      expo.insert(expo.end(), e.begin(), e.end());
    }
    std::sort(expo.begin(), expo.end());
    return expo;
  }

  std::vector<int> sub_degrees(const std::vector<int>& theta) const {
    auto e = sub_exponents(theta);
    for (int& x : e) ++x;
    return e;
  }

  long long sub_weyl_order(const std::vector<int>& theta) const {
    long long n = 1;
    for (int d : sub_degrees(theta)) n *= d;
    return n;
  }

 private:
  void build_cartan() {
    for (auto& row : cartan_) row.fill(0);
    const int n = rank_;
    auto bond = [&](int i, int j, int cij, int cji) {
      cartan_[i][j] = cij;
      cartan_[j][i] = cji;
    };
    for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
    switch (spec_.family) {
      case 'A':
        for (int i = 0; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
        break;
      case 'B':  // alpha_n short
        for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
        bond(n - 2, n - 1, -1, -2);
        break;
      case 'C':  // alpha_n long
        for (int i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
        bond(n - 2, n - 1, -2, -1);
        break;
      case 'D':
        for (int i = 0; i + 3 < n; ++i) bond(i, i + 1, -1, -1);
        bond(n - 3, n - 2, -1, -1);
        bond(n - 3, n - 1, -1, -1);
        break;
      case 'E':
        // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4.
        bond(0, 2, -1, -1);
        bond(1, 3, -1, -1);
        for (int i = 2; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
        break;
      case 'F':
        // alpha_1, alpha_2 short; alpha_3, alpha_4 long.
        bond(0, 1, -1, -1);
        bond(1, 2, -2, -1);
        bond(2, 3, -1, -1);
        break;
      case 'G':
        // alpha_1 short, alpha_2 long.
        bond(0, 1, -3, -1);
        break;
      default:
        throw std::invalid_argument("bad family");
    }
  }

  void generate_roots() {
    // Reflection closure from the simple roots, tracking root and coroot
    // coordinates simultaneously.  Deterministic order: BFS, positives by
    // (height, simple coords) after generation.
    struct Raw {
      Coords simple, coroot;
    };
    std::vector<Raw> found;
    std::unordered_map<uint64_t, int> seen;
    std::deque<int> queue;
    for (int i = 0; i < rank_; ++i) {
      Raw r;
      r.simple.fill(0);
      r.coroot.fill(0);
      r.simple[i] = 1;
      r.coroot[i] = 1;
      seen.emplace(pack_coords(r.simple), static_cast<int>(found.size()));
      queue.push_back(static_cast<int>(found.size()));
      found.push_back(r);
    }
    while (!queue.empty()) {
      int idx = queue.front();
      queue.pop_front();
      for (int i = 0; i < rank_; ++i) {
        Raw cur = found[static_cast<size_t>(idx)];
        // s_i(beta): subtract <alpha_i^vee, beta> alpha_i.
        int pair_root = 0;
        for (int j = 0; j < rank_; ++j) pair_root += cartan_[i][j] * cur.simple[j];
        // s_i(beta^vee): subtract <beta^vee, alpha_i> alpha_i^vee.
        int pair_coroot = 0;
        for (int j = 0; j < rank_; ++j) pair_coroot += cur.coroot[j] * cartan_[j][i];
        Raw img = cur;
        img.simple[i] -= pair_root;
        img.coroot[i] -= pair_coroot;
        uint64_t key = pack_coords(img.simple);
        if (seen.emplace(key, static_cast<int>(found.size())).second) {
          queue.push_back(static_cast<int>(found.size()));
          found.push_back(img);
        }
      }
    }
    // Split by sign and order deterministically.
    std::vector<Root> pos, neg;
    for (const Raw& raw : found) {
      bool any_pos = false, any_neg = false;
      for (int i = 0; i < rank_; ++i) {
        if (raw.simple[i] > 0) any_pos = true;
        if (raw.simple[i] < 0) any_neg = true;
      }
      if (any_pos && any_neg) throw std::logic_error("mixed-sign root coordinates");
      Root r;
      r.simple = raw.simple;
      r.coroot = raw.coroot;
      r.positive = any_pos;
      for (int i = 0; i < rank_; ++i) {
        r.height += raw.simple[i];
        int acc = 0;
        for (int j = 0; j < rank_; ++j) acc += cartan_[i][j] * raw.simple[j];
        r.weight[i] = acc;
      }
      (r.positive ? pos : neg).push_back(r);
    }
    auto by_height = [](const Root& a, const Root& b) {
      if (a.height != b.height) return a.height < b.height;
      return a.simple < b.simple;
    };
    std::sort(pos.begin(), pos.end(), by_height);
    std::sort(neg.begin(), neg.end(), by_height);
    num_positive_ = static_cast<int>(pos.size());
    roots_ = std::move(pos);
    roots_.insert(roots_.end(), neg.begin(), neg.end());
    index_.clear();
    for (size_t k = 0; k < roots_.size(); ++k)
      index_.emplace(pack_coords(roots_[k].weight), static_cast<int>(k));
    simple_index_.assign(static_cast<size_t>(rank_), -1);
    for (int i = 0; i < rank_; ++i) {
      Coords w = simple_root_weight_coords(i);
      simple_index_[static_cast<size_t>(i)] = root_index(w);
      if (simple_index_[static_cast<size_t>(i)] < 0) throw std::logic_error("simple root missing");
    }
  }

  static std::vector<int> exponents_from_heights(const std::vector<int>& heights) {
    // The partition of Phi^+ by height is conjugate to the partition formed
    // by the exponents.
    if (heights.empty()) return {};
    int maxh = *std::max_element(heights.begin(), heights.end());
    std::vector<int> count(static_cast<size_t>(maxh) + 1, 0);
    for (int h : heights) ++count[static_cast<size_t>(h)];
    std::vector<int> expo;
    // conjugate partition: exponent m occurs once for each i with count[i] >= k...
    // Concretely: the number of exponents >= h equals count[h].
    for (int h = maxh; h >= 1; --h) {
      int here = count[static_cast<size_t>(h)];
      int above = (h == maxh) ? 0 : count[static_cast<size_t>(h) + 1];
      for (int t = 0; t < here - above; ++t) expo.push_back(h);
    }
    std::sort(expo.begin(), expo.end());
    return expo;
  }

  void compute_exponents() {
    std::vector<int> all(static_cast<size_t>(rank_));
    std::iota(all.begin(), all.end(), 0);
    exponents_ = sub_exponents(all);
    degrees_ = exponents_;
    for (int& d : degrees_) ++d;
    weyl_order_ = 1;
    for (int d : degrees_) weyl_order_ *= d;
  }

  DynkinSpec spec_;
  int rank_ = 0;
  std::array<std::array<int, kMaxRank>, kMaxRank> cartan_{};
  std::vector<Root> roots_;
  int num_positive_ = 0;
  std::unordered_map<uint64_t, int> index_;
  std::vector<int> simple_index_;
  std::vector<int> exponents_, degrees_;
  long long weyl_order_ = 1;
};

}  // namespace chow
