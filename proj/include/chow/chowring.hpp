#pragma once

// Additive and (partially) multiplicative structure of CH(G/P) for a
// maximal parabolic P of a split simple group G.
//
// Basis classes are indexed by the maximal-length coset representatives
// m in ThetaW; the class with representative m sits in codimension
// l(w0) - l(m).  Within a codimension, classes are ordered by the
// lexicographically least reduced word of the corresponding minimal-length
// representative (or by an explicitly supplied label table).
//
// Implemented here:
//   * Hasse and Pieri graphs;
//   * multiplication by the codimension-1 generator (Pieri rule);
//   * Poincare duality pairing;
//   * the characteristic map c restricted to the subring basis, via
//     divided-difference chains.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "chow/poly.hpp"
#include "chow/polyops.hpp"
#include "chow/rootdata.hpp"
#include "chow/weyl.hpp"

namespace chow {

struct SchubertClass {
  int id = 0;        // global index, grouped by codimension
  int codim = 0;
  int index = 0;     // 1-based position within its codimension
  WeylElement min_rep;  // minimal-length representative of the coset
  WeylElement max_rep;  // min_rep * w_theta
  std::vector<int> word;  // lexicographically least reduced word of min_rep
};

/// Sparse rational linear combination of basis classes (by global id).
struct ChowClass {
  std::map<int, Rational> coeff;

  bool is_zero() const { return coeff.empty(); }

  void add(int id, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = coeff.emplace(id, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) coeff.erase(it);
    }
  }

  ChowClass& operator+=(const ChowClass& o) {
    for (const auto& [id, c] : o.coeff) add(id, c);
    return *this;
  }

  ChowClass& operator*=(const Rational& c) {
    if (c == 0) {
      coeff.clear();
      return *this;
    }
    for (auto& [id, v] : coeff) v *= c;
    return *this;
  }

  ChowClass scaled(const Rational& c) const {
    ChowClass out(*this);
    out *= c;
    return out;
  }

  bool operator==(const ChowClass& o) const { return coeff == o.coeff; }
};

class ChowRing {
 public:
  /// G/P for the maximal parabolic omitting the given simple node (0-based).
  /// label_words, if supplied, fixes the (codim, index) labelling: entry k
  /// is a reduced word of the minimal representative of some class, and
  /// classes are numbered within each codimension by order of appearance.
  ChowRing(DynkinSpec spec, int omitted,
           const std::vector<std::vector<int>>* label_words = nullptr)
      : rs_(spec),
        wg_(rs_),
        ops_(rs_),
        omitted_(omitted),
        theta_(ParabolicSubset::maximal(rs_.rank(), omitted)) {
    w0_ = wg_.longest_element();
    wtheta_ = wg_.longest_element(theta_);
    dim_ = wg_.length(w0_) - wg_.length(wtheta_);
    build_basis(label_words);
  }

  const RootSystem& roots() const { return rs_; }
  const WeylGroup& weyl() const { return wg_; }
  PolyOps& polyops() { return ops_; }
  const ParabolicSubset& theta() const { return theta_; }
  int omitted() const { return omitted_; }
  int dim() const { return dim_; }
  const WeylElement& w0() const { return w0_; }
  const WeylElement& wtheta() const { return wtheta_; }

  int num_classes() const { return static_cast<int>(classes_.size()); }
  const SchubertClass& cls(int id) const { return classes_[static_cast<size_t>(id)]; }
  const std::vector<int>& classes_at(int codim) const {
    return by_codim_[static_cast<size_t>(codim)];
  }

  /// Betti number of the given codimension.
  int betti(int codim) const {
    if (codim < 0 || codim > dim_) return 0;
    return static_cast<int>(by_codim_[static_cast<size_t>(codim)].size());
  }

  int class_id(int codim, int index) const {
    return by_codim_[static_cast<size_t>(codim)][static_cast<size_t>(index - 1)];
  }

  /// Global id of the class with the given maximal representative, or -1.
  int id_of_max_rep(const WeylElement& m) const {
    auto it = max_index_.find(m);
    return it == max_index_.end() ? -1 : it->second;
  }

  int id_of_min_rep(const WeylElement& v) const {
    auto it = min_index_.find(v);
    return it == min_index_.end() ? -1 : it->second;
  }

  int unit_id() const { return class_id(0, 1); }
  int hyperplane_id() const { return class_id(1, 1); }
  int point_id() const { return class_id(dim_, 1); }

  std::string label(int id) const {
    const SchubertClass& s = cls(id);
    return "g" + std::to_string(s.codim) + "," + std::to_string(s.index);
  }

  /// Pieri rule: product of the codimension-1 generator with a basis class.
  const ChowClass& pieri(int id) const {
    auto it = pieri_cache_.find(id);
    if (it != pieri_cache_.end()) return it->second;
    const SchubertClass& s = cls(id);
    ChowClass out;
    if (s.codim < dim_) {
      int lm = wg_.length(s.max_rep);
      for (int b = 0; b < rs_.num_positive(); ++b) {
        int mult = rs_.root(b).coroot[static_cast<size_t>(omitted_)];
        if (mult == 0) continue;
        WeylElement img = wg_.compose(s.max_rep, wg_.reflection_of_root(b));
        if (wg_.length(img) != lm - 1) continue;
        int tid = id_of_max_rep(img);
        // All Pieri coefficients are non-negative, so no term can cancel:
        // every contribution must stay inside the subring basis.
        if (tid < 0) throw std::logic_error("Pieri term escapes the subring basis");
        out.add(tid, Rational(mult));
      }
    }
    return pieri_cache_.emplace(id, std::move(out)).first->second;
  }

  ChowClass pieri_apply(const ChowClass& x) const {
    ChowClass out;
    for (const auto& [id, c] : x.coeff) {
      for (const auto& [tid, m] : pieri(id).coeff) out.add(tid, c * m);
    }
    return out;
  }

  /// Poincare duality: the dual basis class, [X]*[dual] = [pt].
  int dual_id(int id) const {
    // [X_w] [X_w'] = delta_{w, w0 w' wtheta} [pt] on maximal representatives.
    WeylElement d = wg_.compose(w0_, wg_.compose(cls(id).max_rep, wtheta_));
    int did = id_of_max_rep(d);
    if (did < 0) throw std::logic_error("dual class missing from basis");
    return did;
  }

  /// Coefficient of [pt] in the product of two basis classes of
  /// complementary codimension.
  Rational poincare_pair(int a, int b) const {
    if (cls(a).codim + cls(b).codim != dim_)
      throw std::invalid_argument("poincare_pair needs complementary codimensions");
    return dual_id(a) == b ? Rational(1) : Rational(0);
  }

  /// Characteristic map restricted to the subring: the image of a
  /// homogeneous W_P-invariant polynomial, expanded in the basis of its
  /// degree.  Coefficient of the class with maximal representative m is
  /// Delta_{w0 m}(u).
  ChowClass c_restricted(const Polynomial& u) const {
    ChowClass out;
    if (u.is_zero()) return out;
    if (!u.is_homogeneous()) throw std::invalid_argument("c_restricted needs homogeneous input");
    int k = u.degree();
    if (k > dim_) return out;
    for (int id : classes_at(k)) {
      Rational c = delta_coefficient(u, id);
      if (c != 0) out.add(id, c);
    }
    return out;
  }

  /// Delta_{w0 m}(u) evaluated as a rational number (the chain has length
  /// deg u, so the result is a constant).
  Rational delta_coefficient(const Polynomial& u, int id) const {
    const std::vector<int>& word = delta_word_of(id);
    if (static_cast<int>(word.size()) != u.degree())
      throw std::invalid_argument("degree does not match the class codimension");
    Polynomial q = ops_.delta_word(u, word);
    return q.is_zero() ? Rational(0) : q.constant_value();
  }

  /// Reduced word of w0 * max_rep(id) (the divided-difference chain of the
  /// class), cached.
  const std::vector<int>& delta_word_of(int id) const {
    auto it = delta_word_cache_.find(id);
    if (it != delta_word_cache_.end()) return it->second;
    WeylElement w = wg_.compose(w0_, cls(id).max_rep);
    return delta_word_cache_.emplace(id, wg_.reduced_word(w)).first->second;
  }

  /// Hasse diagram edges on minimal representatives: (from, to, label) with
  /// to = s_label * from and l(to) = l(from) + 1 (labels 0-based).
  struct HasseEdge {
    int from, to, label;
  };
  std::vector<HasseEdge> hasse_edges() const {
    std::vector<HasseEdge> edges;
    for (const SchubertClass& s : classes_) {
      for (int i = 0; i < rs_.rank(); ++i) {
        WeylElement img = wg_.compose(wg_.simple_reflection(i), s.min_rep);
        int tid = id_of_min_rep(img);
        if (tid < 0) continue;
        if (wg_.length(img) == wg_.length(s.min_rep) + 1)
          edges.push_back({s.id, tid, i});
      }
    }
    return edges;
  }

  /// Pieri graph edges: (from, to, multiplicity) whenever the class `to`
  /// appears in h * [from].
  struct PieriEdge {
    int from, to;
    Rational mult;
  };
  std::vector<PieriEdge> pieri_edges() const {
    std::vector<PieriEdge> edges;
    for (const SchubertClass& s : classes_) {
      for (const auto& [tid, m] : pieri(s.id).coeff) edges.push_back({s.id, tid, m});
    }
    return edges;
  }

 private:
  void build_basis(const std::vector<std::vector<int>>* label_words) {
    std::vector<WeylElement> mins = wg_.minimal_coset_reps(theta_);
    struct Entry {
      WeylElement min_rep;
      std::vector<int> word;
      int codim;
      int order;  // position used for intra-codim ordering
    };
    std::vector<Entry> entries;
    entries.reserve(mins.size());
    std::unordered_map<WeylElement, int, WeylElementHash> order_override;
    if (label_words != nullptr) {
      for (size_t k = 0; k < label_words->size(); ++k) {
        WeylElement w = wg_.from_word((*label_words)[k]);
        if (!wg_.is_minimal_coset_rep(w, theta_))
          throw std::invalid_argument("label word is not a minimal coset representative");
        if (!order_override.emplace(w, static_cast<int>(k)).second)
          throw std::invalid_argument("duplicate label word");
      }
      if (order_override.size() != mins.size())
        throw std::invalid_argument("label table does not cover the basis");
    }
    for (WeylElement& v : mins) {
      Entry e;
      e.codim = dim_ - wg_.length(v);
      e.word = wg_.lex_min_word(v);
      if (label_words != nullptr) e.order = order_override.at(v);
      e.min_rep = std::move(v);
      entries.push_back(std::move(e));
    }
    std::sort(entries.begin(), entries.end(), [&](const Entry& a, const Entry& b) {
      if (a.codim != b.codim) return a.codim < b.codim;
      if (label_words != nullptr) return a.order < b.order;
      return a.word < b.word;
    });
    by_codim_.assign(static_cast<size_t>(dim_) + 1, {});
    classes_.clear();
    classes_.reserve(entries.size());
    for (Entry& e : entries) {
      SchubertClass s;
      s.id = static_cast<int>(classes_.size());
      s.codim = e.codim;
      s.index = static_cast<int>(by_codim_[static_cast<size_t>(e.codim)].size()) + 1;
      s.word = std::move(e.word);
      s.max_rep = wg_.compose(e.min_rep, wtheta_);
      s.min_rep = std::move(e.min_rep);
      by_codim_[static_cast<size_t>(e.codim)].push_back(s.id);
      min_index_.emplace(s.min_rep, s.id);
      max_index_.emplace(s.max_rep, s.id);
      classes_.push_back(std::move(s));
    }
  }

  RootSystem rs_;
  WeylGroup wg_;
  mutable PolyOps ops_;
  int omitted_;
  ParabolicSubset theta_;
  WeylElement w0_, wtheta_;
  int dim_ = 0;
  std::vector<SchubertClass> classes_;
  std::vector<std::vector<int>> by_codim_;
  std::unordered_map<WeylElement, int, WeylElementHash> min_index_, max_index_;
  mutable std::unordered_map<int, ChowClass> pieri_cache_;
  mutable std::unordered_map<int, std::vector<int>> delta_word_cache_;
};

}  // namespace chow
