#pragma once

// Weyl group elements and coset combinatorics.
//
// An element is stored by its action on the weight lattice in
// fundamental-weight coordinates (the canonical form: column j of the matrix
// is w(w_j)), together with the matrix of the inverse action.  Words are
// certificates recomputed on demand, never the identity of an element.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "chow/rootdata.hpp"

namespace chow {

struct WeylElement {
  int rank = 0;
  // Row-major rank x rank integer matrices acting on weight coordinates.
  std::array<int, kMaxRank * kMaxRank> mat{};
  std::array<int, kMaxRank * kMaxRank> inv{};

  int at(int i, int j) const { return mat[static_cast<size_t>(i * kMaxRank + j)]; }
  int inv_at(int i, int j) const { return inv[static_cast<size_t>(i * kMaxRank + j)]; }

  bool operator==(const WeylElement& o) const { return rank == o.rank && mat == o.mat; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool operator<(const WeylElement& o) const { return mat < o.mat; }

  bool is_identity() const {
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }
};

struct WeylElementHash {
  size_t operator()(const WeylElement& w) const {
    uint64_t h = 1469598103934665603ull;
    for (int i = 0; i < w.rank; ++i)
      for (int j = 0; j < w.rank; ++j) {
        h ^= static_cast<uint64_t>(w.at(i, j) + 512);
        h *= 1099511628211ull;
      }
    return static_cast<size_t>(h);
  }
};

/// Subset of simple-root indices (0-based, sorted).
struct ParabolicSubset {
  std::vector<int> theta;

  explicit ParabolicSubset(std::vector<int> t = {}) : theta(std::move(t)) {
    std::sort(theta.begin(), theta.end());
    theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
  }

  void validate(int rank) const {
    for (int i : theta)
      if (i < 0 || i >= rank) throw std::invalid_argument("parabolic index out of range");
  }

  bool contains(int i) const { return std::binary_search(theta.begin(), theta.end(), i); }

  /// Complement within 0..rank-1 (the omitted nodes).
  std::vector<int> omitted(int rank) const {
    std::vector<int> out;
    for (int i = 0; i < rank; ++i)
      if (!contains(i)) out.push_back(i);
    return out;
  }

  /// P_i convention: omit exactly alpha_i (0-based i).
  static ParabolicSubset maximal(int rank, int omitted_index) {
    std::vector<int> t;
    for (int i = 0; i < rank; ++i)
      if (i != omitted_index) t.push_back(i);
    return ParabolicSubset(std::move(t));
  }
};

class WeylGroup {
 public:
  explicit WeylGroup(const RootSystem& rs) : rs_(rs), rank_(rs.rank()) {
    // Generator matrices and per-root reflection matrices.
    for (int i = 0; i < rank_; ++i) gens_.push_back(reflection(rs_.simple_root_index(i)));
  }

  const RootSystem& root_system() const { return rs_; }
  int rank() const { return rank_; }

  WeylElement identity() const {
    WeylElement w;
    w.rank = rank_;
    for (int i = 0; i < rank_; ++i) {
      w.mat[static_cast<size_t>(i * kMaxRank + i)] = 1;
      w.inv[static_cast<size_t>(i * kMaxRank + i)] = 1;
    }
    return w;
  }

  const WeylElement& simple_reflection(int i) const { return gens_[static_cast<size_t>(i)]; }

  /// Reflection s_beta for any root index; an involution acting like
  /// reflect_weight(beta, .).
  WeylElement reflection(int root_idx) const {
    const Root& r = rs_.root(root_idx);
    WeylElement w;
    w.rank = rank_;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) {
        int v = (i == j ? 1 : 0) - r.weight[i] * r.coroot[j];
        w.mat[static_cast<size_t>(i * kMaxRank + j)] = v;
        w.inv[static_cast<size_t>(i * kMaxRank + j)] = v;
      }
    return w;
  }

  /// (u o v): first apply v, then u.
  WeylElement compose(const WeylElement& u, const WeylElement& v) const {
    if (u.rank != v.rank) throw std::invalid_argument("compose: system mismatch");
    WeylElement w;
    w.rank = rank_;
    for (int i = 0; i < rank_; ++i)
      for (int j = 0; j < rank_; ++j) {
        int a = 0, b = 0;
        for (int k = 0; k < rank_; ++k) {
          a += u.at(i, k) * v.at(k, j);
          b += v.inv_at(i, k) * u.inv_at(k, j);
        }
        w.mat[static_cast<size_t>(i * kMaxRank + j)] = a;
        w.inv[static_cast<size_t>(i * kMaxRank + j)] = b;
      }
    return w;
  }

  WeylElement inverse(const WeylElement& u) const {
    WeylElement w = u;
    std::swap(w.mat, w.inv);
    return w;
  }

  /// Image root index under w of the root with index k.
  int image_root(const WeylElement& w, int k) const {
    const Root& r = rs_.root(k);
    Coords img{};
    for (int i = 0; i < rank_; ++i) {
      int acc = 0;
      for (int j = 0; j < rank_; ++j) acc += w.at(i, j) * r.weight[j];
      img[i] = acc;
    }
    int idx = rs_.root_index(img);
    if (idx < 0) throw std::logic_error("image of a root is not a root");
    return idx;
  }

  /// w(alpha_i) > 0 ?
  bool sends_simple_positive(const WeylElement& w, int i) const {
    return rs_.root(image_root(w, rs_.simple_root_index(i))).positive;
  }

  bool inverse_sends_simple_positive(const WeylElement& w, int i) const {
    WeylElement wi = inverse(w);
    return rs_.root(image_root(wi, rs_.simple_root_index(i))).positive;
  }

  /// l(w) = #{beta > 0 : w(beta) < 0}.
  int length(const WeylElement& w) const {
    int n = 0;
    for (int k = 0; k < rs_.num_positive(); ++k)
      if (!rs_.root(image_root(w, k)).positive) ++n;
    return n;
  }

  /// Reduced word via right-descent peeling; deterministic (smallest index).
  std::vector<int> reduced_word(const WeylElement& w) const {
    std::vector<int> suffix;
    WeylElement cur = w;
    while (!cur.is_identity()) {
      int i = 0;
      for (; i < rank_; ++i)
        if (!sends_simple_positive(cur, i)) break;
      if (i == rank_) throw std::logic_error("no descent on non-identity element");
      suffix.push_back(i);
      cur = compose(cur, gens_[static_cast<size_t>(i)]);
    }
    std::reverse(suffix.begin(), suffix.end());
    return suffix;
  }

  /// Lexicographically least reduced word (greedy smallest left descent).
  std::vector<int> lex_min_word(const WeylElement& w) const {
    std::vector<int> word;
    WeylElement cur = w;
    while (!cur.is_identity()) {
      int i = 0;
      for (; i < rank_; ++i)
        if (!inverse_sends_simple_positive(cur, i)) break;
      if (i == rank_) throw std::logic_error("no descent on non-identity element");
      word.push_back(i);
      cur = compose(gens_[static_cast<size_t>(i)], cur);
    }
    return word;
  }

  /// Product s_{word[0]} s_{word[1]} ... applied left-to-right.
  WeylElement from_word(const std::vector<int>& word) const {
    WeylElement w = identity();
    for (int i : word) w = compose(w, gens_[static_cast<size_t>(i)]);
    return w;
  }

  /// Longest element of the parabolic subgroup W_Theta (greedy ascent).
  WeylElement longest_element(const ParabolicSubset& p) const {
    p.validate(rank_);
    WeylElement w = identity();
    bool progress = true;
    while (progress) {
      progress = false;
      for (int i : p.theta) {
        // l(s_i w) = l(w) + 1 iff w^{-1}(alpha_i) > 0.
        if (inverse_sends_simple_positive(w, i)) {
          w = compose(gens_[static_cast<size_t>(i)], w);
          progress = true;
          break;
        }
      }
    }
    return w;
  }

  WeylElement longest_element() const {
    std::vector<int> all(static_cast<size_t>(rank_));
    std::iota(all.begin(), all.end(), 0);
    return longest_element(ParabolicSubset(all));
  }

  bool is_minimal_coset_rep(const WeylElement& w, const ParabolicSubset& p) const {
    for (int t : p.theta)
      if (!sends_simple_positive(w, t)) return false;
    return true;
  }

  /// W^Theta: minimal-length representatives of W/W_Theta, graded by length.
  /// BFS closure from the identity under left multiplication by simple
  /// reflections, keeping only representatives.
  std::vector<WeylElement> minimal_coset_reps(const ParabolicSubset& p) const {
    p.validate(rank_);
    std::vector<WeylElement> out{identity()};
    std::unordered_map<WeylElement, int, WeylElementHash> seen;
    seen.emplace(out[0], 0);
    size_t level_begin = 0, level_end = 1;
    while (level_begin < level_end) {
      std::vector<WeylElement> next;
      for (size_t k = level_begin; k < level_end; ++k) {
        const WeylElement w = out[k];
        for (int i = 0; i < rank_; ++i) {
          if (!inverse_sends_simple_positive(w, i)) continue;  // not an ascent
          WeylElement cand = compose(gens_[static_cast<size_t>(i)], w);
          if (seen.count(cand)) continue;
          if (!is_minimal_coset_rep(cand, p)) continue;
          seen.emplace(cand, 1);
          next.push_back(cand);
        }
      }
      std::sort(next.begin(), next.end());
      level_begin = level_end;
      out.insert(out.end(), next.begin(), next.end());
      level_end = out.size();
    }
    return out;
  }

  /// ^Theta W: maximal-length representatives, image of W^Theta under right
  /// multiplication by the longest element of W_Theta.
  std::vector<WeylElement> maximal_coset_reps(const ParabolicSubset& p) const {
    WeylElement wt = longest_element(p);
    std::vector<WeylElement> out = minimal_coset_reps(p);
    for (WeylElement& w : out) w = compose(w, wt);
    return out;
  }

  /// All elements of the given length (full group BFS up to k, cached).
  const std::vector<WeylElement>& elements_of_length(int k) const {
    if (k < 0 || k > rs_.num_positive()) throw std::invalid_argument("length out of range");
    while (static_cast<int>(levels_.size()) <= k) {
      if (levels_.empty()) {
        levels_.push_back({identity()});
        level_seen_.emplace(identity(), 0);
        continue;
      }
      std::vector<WeylElement> next;
      for (const WeylElement& w : levels_.back()) {
        for (int i = 0; i < rank_; ++i) {
          if (!inverse_sends_simple_positive(w, i)) continue;
          WeylElement cand = compose(gens_[static_cast<size_t>(i)], w);
          if (level_seen_.emplace(cand, 0).second) next.push_back(cand);
        }
      }
      std::sort(next.begin(), next.end());
      levels_.push_back(std::move(next));
    }
    return levels_[static_cast<size_t>(k)];
  }

  /// The element acting as s_beta for a positive root beta; involution.
  WeylElement reflection_of_root(int root_idx) const {
    if (root_idx < 0 || root_idx >= rs_.num_roots() || !rs_.root(root_idx).positive)
      throw std::invalid_argument("reflection_of_root: not a positive root");
    return reflection(root_idx);
  }

 private:
  const RootSystem& rs_;
  int rank_;
  std::vector<WeylElement> gens_;
  mutable std::vector<std::vector<WeylElement>> levels_;
  mutable std::unordered_map<WeylElement, int, WeylElementHash> level_seen_;
};

}  // namespace chow
