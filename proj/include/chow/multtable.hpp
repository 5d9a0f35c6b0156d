#pragma once

// Full multiplicative structure of CH(G/P).
//
// Strategy.  Scanning codimensions upward, each Chow group CH^c is compared
// against the span of h * CH^{c-1} together with x * CH^{c-codim(x)} for
// every ring generator x found so far; the codimensions where that span is
// deficient ("gaps") are exactly the ones where new algebra generators are
// required, and a minimal set of basis classes is promoted there.  Every
// basis class u of codimension c is then expressed as
//
//     u  =  sum_k d_k * (g_k * b_k)  +  sum_j l_j * x_j,
//
// where g_k is the hyperplane class or an earlier generator, b_k is a basis
// class of codimension c - codim(g_k), and x_j are the generators new at
// codimension c.  The only products ever computed through polynomial
// preimages and the characteristic map are the pairwise products of
// generators ("base products"); everything else reduces to linear algebra:
//
//   * the action of each generator on the whole basis is solved eagerly,
//     one target codimension at a time, as a small linear system whose
//     same-target unknowns are coupled through the expressions (with
//     Poincare-duality transposes and, as a last resort, direct polynomial
//     evaluation available to pin any non-unique batch);
//   * a general product expands one factor's expression and reuses the
//     precomputed generator actions, memoized pairwise.
//
// The characteristic-map evaluations for the base products share their
// divided-difference chains: the classes of one codimension are arranged
// in a suffix tree of their chain words, so the expensive first
// applications (on the big product polynomial) are computed once per
// branch, optionally in parallel.

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "chow/chowring.hpp"
#include "chow/linalg.hpp"
#include "chow/modpoly.hpp"
#include "chow/preimage.hpp"

namespace chow {

class MultTable {
 public:
  struct Expression {
    struct ProductTerm {
      int gen;  // hyperplane id or an earlier generator id
      int cls;  // basis class of codim  codim(this) - codim(gen)
      Rational coeff;
    };
    std::vector<ProductTerm> product_part;
    std::vector<std::pair<int, Rational>> generator_part;  // new generators here
  };

  /// Precomputed values for the handful of classes that need a direct
  /// polynomial evaluation, keyed by the sorted list of generator ids whose
  /// product the value is.  A seed is never trusted blindly: it only adds
  /// equations to a linear system that is consistent exactly when the
  /// seeded values are correct.
  using PinSeed = std::map<std::vector<int>, ChowClass>;

  explicit MultTable(const ChowRing& ring, int threads = 0, const PinSeed* pin_seed = nullptr)
      : R_(ring),
        solver_(ring),
        threads_(threads > 0 ? threads : default_threads()),
        pin_seed_(pin_seed) {
    build();
  }

  /// The generator monomials whose values had to be pinned by direct
  /// polynomial evaluation (or taken from the seed).
  const PinSeed& pinned_values() const { return pinned_; }

  const ChowRing& ring() const { return R_; }

  /// Codimensions in which the previously available generators stop
  /// generating, so that new ring generators are required.
  const std::vector<int>& gap_codims() const { return gaps_; }

  /// Class ids of the non-hyperplane ring generators, ascending codim.
  const std::vector<int>& generators() const { return generators_; }

  const Expression& expression(int id) const { return expr_[static_cast<size_t>(id)]; }

  bool is_generator(int id) const { return generator_set_.count(id) > 0; }

  struct Job {
    std::vector<int> word;  // chain word (applied right to left)
    int id;
  };

  /// Product of two basis classes, memoized.
  const ChowClass& product(int i, int j) {
    if (cls_codim(i) > cls_codim(j) || (cls_codim(i) == cls_codim(j) && i > j)) std::swap(i, j);
    auto key = std::make_pair(i, j);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    ChowClass out = compute_product(i, j);
    return memo_.emplace(key, std::move(out)).first->second;
  }

  ChowClass multiply(const ChowClass& x, const ChowClass& y) {
    ChowClass out;
    for (const auto& [i, a] : x.coeff)
      for (const auto& [j, b] : y.coeff) {
        const ChowClass& p = product(i, j);
        for (const auto& [t, c] : p.coeff) out.add(t, a * b * c);
      }
    return out;
  }

  /// The polynomial preimage used for a generator's base products.
  const Polynomial& generator_preimage(int id) {
    auto it = preimages_.find(id);
    if (it != preimages_.end()) return it->second;
    ChowClass x;
    x.add(id, Rational(1));
    PreimageResult res = solver_.preimage(x, cls_codim(id));
    return preimages_.emplace(id, std::move(res.polynomial)).first->second;
  }

  /// Characteristic-map expansion of a homogeneous polynomial with the
  /// divided-difference chains shared along common suffixes and the
  /// branches evaluated in parallel.
  ChowClass c_shared(const Polynomial& u) const {
    ChowClass out;
    if (u.is_zero()) return out;
    int k = u.degree();
    if (k > R_.dim()) return out;
    std::vector<Job> jobs;
    for (int id : R_.classes_at(k)) jobs.push_back({R_.delta_word_of(id), id});
    // Group by the last letter: each group shares its first application.
    std::map<int, std::vector<Job>> groups;
    for (const Job& j : jobs) {
      if (j.word.empty()) {
        out.add(j.id, u.constant_value());
        continue;
      }
      groups[j.word.back()].push_back(j);
    }
    std::vector<std::pair<int, std::vector<Job>>> work(groups.begin(), groups.end());
    std::mutex m;
    std::vector<std::thread> pool;
    size_t next = 0;
    auto runner = [&]() {
      PolyOps ops(R_.roots());
      for (;;) {
        size_t mine;
        {
          std::lock_guard<std::mutex> lk(m);
          if (next >= work.size()) return;
          mine = next++;
        }
        auto& [letter, grp] = work[mine];
        Polynomial base = ops.divided_difference(u, letter);
        std::vector<std::pair<int, Rational>> local;
        eval_suffix_tree(ops, base, grp, static_cast<int>(grp[0].word.size()) - 2, local);
        std::lock_guard<std::mutex> lk(m);
        for (auto& [id, c] : local) out.add(id, c);
      }
    };
    size_t nthreads = std::min(static_cast<size_t>(threads_), work.size());
    for (size_t t = 1; t < nthreads; ++t) pool.emplace_back(runner);
    runner();
    for (auto& th : pool) th.join();
    return out;
  }

  /// Exact class of a product of generators: the characteristic-map
  /// expansion of the product of their polynomial preimages.  The chains
  /// run modulo two word-size primes with machine arithmetic (the exact
  /// coefficients are integers, and the kernels are integral, so reduction
  /// mod p commutes with the whole computation); the symmetric lift from
  /// the first prime must agree with the second, and the caller's
  /// overdetermined pin equations reject any residual error.
  ChowClass c_monomial(const std::vector<int>& gens) {
    int k = 0;
    for (int g : gens) k += cls_codim(g);
    static constexpr std::array<uint64_t, 2> kPrimes = {2305843009213693951ull,
                                                        9223372036854775783ull};
    std::array<std::map<int, uint64_t>, 2> residues;
    for (size_t pi = 0; pi < kPrimes.size(); ++pi) {
      ModOps ops(R_.roots(), kPrimes[pi]);
      ModOps::Poly prod = ops.one();
      for (int g : gens) prod = ops.mul(prod, ops.reduce(generator_preimage(g)));
      // Group the chains by their last letter (applied first), so the one
      // heavy application on the full product is shared per group.
      std::map<int, std::vector<Job>> groups;
      for (int id : R_.classes_at(k)) {
        Job j{R_.delta_word_of(id), id};
        groups[j.word.back()].push_back(std::move(j));
      }
      for (auto& [letter, grp] : groups) {
        ModOps::Poly base = ops.divided_difference(prod, letter);
        for (const Job& j : grp) {
          ModOps::Poly q = base;
          for (int d = static_cast<int>(j.word.size()) - 2; d >= 0; --d)
            q = ops.divided_difference(q, j.word[static_cast<size_t>(d)]);
          residues[pi][j.id] = ops.constant_value(q);
        }
      }
    }
    ChowClass out;
    for (const auto& [id, r0] : residues[0]) {
      long long v = r0 <= kPrimes[0] / 2
                        ? static_cast<long long>(r0)
                        : static_cast<long long>(r0) - static_cast<long long>(kPrimes[0]);
      long long m = v % static_cast<long long>(kPrimes[1]);
      if (m < 0) m += static_cast<long long>(kPrimes[1]);
      if (static_cast<uint64_t>(m) != residues[1][id])
        throw std::logic_error("modular lift mismatch in c_monomial");
      if (v != 0) out.add(id, Rational(static_cast<long>(v)));
    }
    return out;
  }

  /// Structured gap report: for every codimension, the rank of h * CH^{c-1}
  /// inside CH^c, the rank including generator products, and the number of
  /// new generators.
  struct GapInfo {
    int codim;
    int betti;
    int pieri_rank;
    int span_rank;
    int new_generators;
  };
  std::vector<GapInfo> gap_report() const {
    std::vector<GapInfo> rep;
    for (int c = 1; c <= R_.dim(); ++c) {
      GapInfo g{c, R_.betti(c), pieri_rank_[static_cast<size_t>(c)],
                span_rank_[static_cast<size_t>(c)], 0};
      for (int id : generators_)
        if (cls_codim(id) == c) ++g.new_generators;
      rep.push_back(g);
    }
    return rep;
  }

 private:
  static bool verbose() {
    static const bool v = std::getenv("CHOW_PROGRESS") != nullptr;
    return v;
  }

  static int default_threads() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 4 : static_cast<int>(hc);
  }

  int cls_codim(int id) const { return R_.cls(id).codim; }

  std::pair<int, int> key_of(int i, int j) const {
    if (cls_codim(i) > cls_codim(j) || (cls_codim(i) == cls_codim(j) && i > j)) std::swap(i, j);
    return {i, j};
  }

  // Depth-first shared evaluation: all jobs in `grp` agree on the letters
  // strictly above `depth` (already applied into `cur`).
  void eval_suffix_tree(PolyOps& ops, const Polynomial& cur, const std::vector<Job>& grp,
                        int depth, std::vector<std::pair<int, Rational>>& sink) const {
    if (cur.is_zero()) return;
    if (depth < 0) {
      for (const Job& j : grp) sink.emplace_back(j.id, cur.constant_value());
      return;
    }
    std::map<int, std::vector<Job>> sub;
    for (const Job& j : grp) sub[j.word[static_cast<size_t>(depth)]].push_back(j);
    for (auto& [letter, grp2] : sub) {
      Polynomial nxt = ops.divided_difference(cur, letter);
      eval_suffix_tree(ops, nxt, grp2, depth - 1, sink);
    }
  }

  // Linear relations among the spanning products of one codimension: each
  // kernel vector k satisfies sum_k k_j (gen_j * cls_j) = 0 and stays valid
  // after multiplication by any class, which supplies extra equations for
  // the action batches.
  struct Syzygies {
    std::vector<std::pair<int, int>> columns;  // (gen, cls); cls may be the unit
    std::vector<std::vector<Rational>> kernel;
  };

  void build() {
    expr_.resize(static_cast<size_t>(R_.num_classes()));
    pieri_rank_.assign(static_cast<size_t>(R_.dim()) + 1, 0);
    span_rank_.assign(static_cast<size_t>(R_.dim()) + 1, 0);
    syzygies_.resize(static_cast<size_t>(R_.dim()) + 1);
    // Codim 0: the unit is its own (empty) expression.
    for (int c = 1; c <= R_.dim(); ++c) {
      solve_action_batch(c);
      build_codim_expressions(c);
    }
  }

  // Solve for x * u, for every earlier generator x and every basis class u
  // with codim(u) + codim(x) == c, as one linear system: the right-hand
  // sides reference previous batches only, the same-batch unknowns are
  // coupled linearly through the expressions of the u.
  void solve_action_batch(int c) {
    struct Unknown {
      int gen;
      int u;
    };
    std::vector<Unknown> unknowns;
    for (int g : generators_) {
      int s = c - cls_codim(g);
      if (s < 1) continue;
      for (int u : R_.classes_at(s)) {
        auto key = key_of(g, u);
        if (memo_.count(key)) continue;
        if (is_generator(u)) {
          memo_.emplace(key, base_product(g, u));
          continue;
        }
        if (c == R_.dim()) {
          ChowClass out;
          out.add(R_.point_id(), R_.poincare_pair(g, u));
          memo_.emplace(key, std::move(out));
          continue;
        }
        unknowns.push_back({g, u});
      }
    }
    if (unknowns.empty()) return;
    if (verbose())
      std::fprintf(stderr, "chow: action batch codim %d (%zu unknowns)\n", c, unknowns.size());

    const std::vector<int>& here = R_.classes_at(c);
    int width = static_cast<int>(here.size());
    std::map<int, int> col;
    for (int t = 0; t < width; ++t) col[here[static_cast<size_t>(t)]] = t;
    std::map<std::pair<int, int>, int> slot;  // (gen, u) -> unknown index
    for (size_t n = 0; n < unknowns.size(); ++n)
      slot[{unknowns[n].gen, unknowns[n].u}] = static_cast<int>(n);
    int ncols = static_cast<int>(unknowns.size()) * width;
    auto var = [&](int n, int t) { return n * width + t; };

    LinearSystem sys(ncols);
    for (size_t n = 0; n < unknowns.size(); ++n) {
      int g = unknowns[n].gen, u = unknowns[n].u;
      const Expression& e = expr_[static_cast<size_t>(u)];
      // Known contribution and same-batch couplings of  g * u.
      std::vector<Rational> known(static_cast<size_t>(width), Rational(0));
      std::vector<std::vector<Rational>> couple(
          static_cast<size_t>(width),
          std::vector<Rational>(static_cast<size_t>(ncols), Rational(0)));
      for (const auto& term : e.product_part) {
        // g * (gen' * b) = gen' * (g * b); g * b lies in an earlier batch.
        const ChowClass& w = product(g, term.cls);
        if (term.gen == R_.hyperplane_id()) {
          ChowClass lifted = R_.pieri_apply(w);
          for (const auto& [t, v] : lifted.coeff)
            known[static_cast<size_t>(col.at(t))] += term.coeff * v;
          continue;
        }
        for (const auto& [z, v] : w.coeff) {
          auto it = slot.find({term.gen, z});
          if (it != slot.end()) {
            for (int t = 0; t < width; ++t)
              couple[static_cast<size_t>(t)][static_cast<size_t>(var(it->second, t))] +=
                  term.coeff * v;
          } else {
            const ChowClass& p = product(term.gen, z);  // resolved earlier
            for (const auto& [t2, v2] : p.coeff)
              known[static_cast<size_t>(col.at(t2))] += term.coeff * v * v2;
          }
        }
      }
      for (const auto& [x, l] : e.generator_part) {
        const ChowClass& p = product(g, x);  // generator pair: base product
        for (const auto& [t, v] : p.coeff)
          known[static_cast<size_t>(col.at(t))] += l * v;
      }
      for (int t = 0; t < width; ++t) {
        std::vector<Rational> eq = std::move(couple[static_cast<size_t>(t)]);
        eq[static_cast<size_t>(var(static_cast<int>(n), t))] -= 1;
        sys.add_equation(std::move(eq), -known[static_cast<size_t>(t)]);
      }
    }

    // Helper: emit the vector equation  sum over (gen_k, w_k-class) = 0,
    // where each contribution gen_k * w_k is either known (earlier batch)
    // or couples to the same-batch unknowns.
    auto add_relation = [&](const std::vector<std::pair<int, ChowClass>>& parts) {
      for (int t = 0; t < width; ++t) {
        std::vector<Rational> eqt(static_cast<size_t>(ncols), Rational(0));
        Rational rhs(0);
        bool nontrivial = false;
        for (const auto& [gen_k, w] : parts) {
          if (gen_k == R_.hyperplane_id()) {
            ChowClass lifted = R_.pieri_apply(w);
            auto it = lifted.coeff.find(here[static_cast<size_t>(t)]);
            if (it != lifted.coeff.end()) {
              rhs -= it->second;
              nontrivial = true;
            }
            continue;
          }
          for (const auto& [z, v] : w.coeff) {
            auto it = slot.find({gen_k, z});
            if (it != slot.end()) {
              eqt[static_cast<size_t>(var(it->second, t))] += v;
              nontrivial = true;
            } else {
              const ChowClass& p = product(gen_k, z);
              auto it2 = p.coeff.find(here[static_cast<size_t>(t)]);
              if (it2 != p.coeff.end()) {
                rhs -= v * it2->second;
                nontrivial = true;
              }
            }
          }
        }
        if (nontrivial) sys.add_equation(std::move(eqt), rhs);
      }
    };

    // Syzygy equations: a relation among the spanning products at the
    // complementary codimension survives multiplication by g.
    for (int g : generators_) {
      int s = c - cls_codim(g);
      if (s < 1) continue;
      const Syzygies& sy = syzygies_[static_cast<size_t>(s)];
      for (const auto& kv : sy.kernel) {
        std::vector<std::pair<int, ChowClass>> parts;
        for (size_t k = 0; k < sy.columns.size(); ++k) {
          if (kv[k] == 0) continue;
          auto [gen_k, b_k] = sy.columns[k];
          ChowClass lift;
          lift.add(b_k, kv[k]);
          ChowClass w = multiply_known(g, lift);
          parts.emplace_back(gen_k, std::move(w));
        }
        add_relation(parts);
      }
    }

    // Commutativity equations: g' * (g * b) = g * (g' * b) for every pair
    // of distinct generators and every b of the complementary codimension.
    for (size_t gi = 0; gi < generators_.size(); ++gi)
      for (size_t gj = gi + 1; gj < generators_.size(); ++gj) {
        int g1 = generators_[gi], g2 = generators_[gj];
        int s = c - cls_codim(g1) - cls_codim(g2);
        if (s < 1) continue;
        for (int b : R_.classes_at(s)) {
          std::vector<std::pair<int, ChowClass>> parts;
          ChowClass pos = product(g2, b);
          ChowClass neg = product(g1, b);
          neg *= Rational(-1);
          parts.emplace_back(g1, std::move(pos));
          parts.emplace_back(g2, std::move(neg));
          add_relation(parts);
        }
      }

    // Parts for  (ga gb) * w  with the base product expanded through the
    // expressions of its components, scaled by sign; every resulting piece
    // lives at a strictly smaller total codimension or couples linearly.
    auto pair_action_parts = [&](int ga, int gb, const ChowClass& w, const Rational& sign,
                                 std::vector<std::pair<int, ChowClass>>& parts) {
      const ChowClass& base = product(ga, gb);
      for (const auto& [z, vz] : base.coeff) {
        if (is_generator(z)) {
          ChowClass u = w;
          u *= sign * vz;
          parts.emplace_back(z, std::move(u));
          continue;
        }
        const Expression& ez = expr_[static_cast<size_t>(z)];
        for (const auto& [t, wt] : w.coeff) {
          for (const auto& term : ez.product_part) {
            ChowClass u = product(term.cls, t);
            u *= sign * vz * wt * term.coeff;
            parts.emplace_back(term.gen, std::move(u));
          }
          for (const auto& [x, l] : ez.generator_part) {
            ChowClass u;
            u.add(t, sign * vz * wt * l);
            parts.emplace_back(x, std::move(u));
          }
        }
      }
    };

    // Associativity through base products.  For a small multiset of
    // generators {g_1, ..., g_m} and every b of complementary codimension,
    // the product g_1 ... g_m * b is evaluated once by direct action (outer
    // factor coupling to the batch) and once with a chosen pair expanded
    // through its base product; the difference is a linear relation on the
    // current batch.
    auto associativity = [&](const std::vector<int>& G) {
      int total = 0;
      for (int g : G) total += cls_codim(g);
      int s = c - total;
      if (s < 0 || (G.size() == 2 && s == 0)) return;
      std::vector<std::pair<size_t, size_t>> pairings;
      std::set<std::vector<int>> seen;
      for (size_t i = 0; i < G.size(); ++i)
        for (size_t j = i + 1; j < G.size(); ++j) {
          std::vector<int> key{G[i], G[j]};
          for (size_t k = 0; k < G.size(); ++k)
            if (k != i && k != j) key.push_back(G[k]);
          if (seen.insert(key).second) pairings.emplace_back(i, j);
        }
      for (int b : R_.classes_at(s)) {
        ChowClass wref;
        wref.add(b, Rational(1));
        for (size_t k = 1; k < G.size(); ++k) wref = multiply_known(G[k], wref);
        for (auto [i, j] : pairings) {
          ChowClass wij;
          wij.add(b, Rational(1));
          for (size_t k = 0; k < G.size(); ++k)
            if (k != i && k != j) wij = multiply_known(G[k], wij);
          std::vector<std::pair<int, ChowClass>> parts;
          parts.emplace_back(G[0], wref);
          pair_action_parts(G[i], G[j], wij, Rational(-1), parts);
          add_relation(parts);
        }
      }
    };
    for (size_t gi = 0; gi < generators_.size(); ++gi)
      for (size_t gj = gi; gj < generators_.size(); ++gj) {
        associativity({generators_[gi], generators_[gj]});
        for (size_t gk = gj; gk < generators_.size(); ++gk)
          associativity({generators_[gi], generators_[gj], generators_[gk]});
      }

    auto sol = sys.solve();
    if (!sol) throw std::logic_error("generator action batch inconsistent");
    if (!sol->nullspace.empty()) {
      if (verbose())
        std::fprintf(stderr, "chow: action batch codim %d underdetermined (%zu free), pinning\n",
                     c, sol->nullspace.size());
      // Pin the batch with Poincare-duality transposes where the dual-side
      // action is already known, then (if still needed) with direct
      // polynomial evaluations.
      for (const Unknown& uk : unknowns) {
        int s2 = R_.dim() - c;  // codim of dual(t)
        if (s2 + cls_codim(uk.gen) >= c) continue;
        int n = slot.at({uk.gen, uk.u});
        for (int t = 0; t < width; ++t) {
          // <g*u, dual(t)> = <u, g*dual(t)>
          const ChowClass& p = product(uk.gen, R_.dual_id(here[static_cast<size_t>(t)]));
          Rational rhs(0);
          auto it = p.coeff.find(R_.dual_id(uk.u));
          if (it != p.coeff.end()) rhs = it->second;
          std::vector<Rational> eq(static_cast<size_t>(ncols), Rational(0));
          eq[static_cast<size_t>(var(n, t))] = 1;
          sys.add_equation(std::move(eq), rhs);
        }
      }
      sol = sys.solve();
      if (!sol) throw std::logic_error("generator action duality pinning inconsistent");
      // Monomial pinning: a monomial in the generators of total codimension
      // c is new intersection data that no linear identity among the lower
      // batches determines.  Its class is evaluated directly on the product
      // of the (small) generator preimages and equated with
      // g_0 * (g_1 ... g_m), whose inner factor is already known.
      if (!sol->nullspace.empty()) {
        std::vector<std::vector<int>> monomials;
        std::vector<int> cur;
        auto enumerate = [&](auto&& self, size_t k, int rem) -> void {
          if (rem == 0) {
            if (cur.size() >= 2) monomials.push_back(cur);
            return;
          }
          if (k == generators_.size()) return;
          self(self, k + 1, rem);
          int cg = cls_codim(generators_[k]);
          if (rem >= cg) {
            cur.push_back(generators_[k]);
            self(self, k, rem - cg);
            cur.pop_back();
          }
        };
        enumerate(enumerate, 0, c);
        for (const auto& mono : monomials) {
          if (sol->nullspace.empty()) break;
          ChowClass value;
          if (pin_seed_ && pin_seed_->count(mono)) {
            value = pin_seed_->at(mono);
          } else {
            if (verbose()) {
              std::string lbl;
              for (int g : mono) lbl += (lbl.empty() ? "" : " * ") + R_.label(g);
              std::fprintf(stderr, "chow: monomial pin %s\n", lbl.c_str());
            }
            value = c_monomial(mono);
          }
          pinned_[mono] = value;
          ChowClass inner;
          inner.add(mono[1], Rational(1));
          for (size_t j = 2; j < mono.size(); ++j) inner = multiply_known(mono[j], inner);
          int g0 = mono[0];
          for (int t = 0; t < width; ++t) {
            std::vector<Rational> eqt(static_cast<size_t>(ncols), Rational(0));
            Rational rhs(0);
            auto vt = value.coeff.find(here[static_cast<size_t>(t)]);
            if (vt != value.coeff.end()) rhs = vt->second;
            bool any = false;
            for (const auto& [z, v] : inner.coeff) {
              auto it = slot.find({g0, z});
              if (it != slot.end()) {
                eqt[static_cast<size_t>(var(it->second, t))] += v;
                any = true;
              } else {
                const ChowClass& pz = product(g0, z);
                auto it2 = pz.coeff.find(here[static_cast<size_t>(t)]);
                if (it2 != pz.coeff.end()) rhs -= v * it2->second;
              }
            }
            if (any || rhs != 0) sys.add_equation(std::move(eqt), rhs);
          }
          sol = sys.solve();
          if (!sol) throw std::logic_error("generator action monomial pinning inconsistent");
        }
      }
      for (size_t n = 0; n < unknowns.size() && !sol->nullspace.empty(); ++n) {
        bool free_here = false;
        for (const auto& ns : sol->nullspace)
          for (int t = 0; t < width; ++t)
            if (ns[static_cast<size_t>(var(static_cast<int>(n), t))] != 0) free_here = true;
        if (!free_here) continue;
        auto [ka, kb] = key_of(unknowns[n].gen, unknowns[n].u);
        std::vector<int> pin_key{ka, kb};
        ChowClass pinned;
        if (pin_seed_ && pin_seed_->count(pin_key)) {
          pinned = pin_seed_->at(pin_key);
        } else {
          if (verbose())
            std::fprintf(stderr, "chow: polynomial pin for %s * %s\n",
                         R_.label(unknowns[n].gen).c_str(), R_.label(unknowns[n].u).c_str());
          ChowClass x;
          x.add(unknowns[n].u, Rational(1));
          Polynomial p = solver_.preimage(x, cls_codim(unknowns[n].u)).polynomial *
                         generator_preimage(unknowns[n].gen);
          pinned = c_shared(p);
        }
        pinned_[pin_key] = pinned;
        for (int t = 0; t < width; ++t) {
          Rational rhs(0);
          auto it = pinned.coeff.find(here[static_cast<size_t>(t)]);
          if (it != pinned.coeff.end()) rhs = it->second;
          std::vector<Rational> eq(static_cast<size_t>(ncols), Rational(0));
          eq[static_cast<size_t>(var(static_cast<int>(n), t))] = 1;
          sys.add_equation(std::move(eq), rhs);
        }
        sol = sys.solve();
        if (!sol) throw std::logic_error("generator action polynomial pinning inconsistent");
      }
      if (!sol->nullspace.empty())
        throw std::logic_error("generator action batch underdetermined");
    }
    for (size_t n = 0; n < unknowns.size(); ++n) {
      ChowClass out;
      for (int t = 0; t < width; ++t) {
        const Rational& v = sol->particular[static_cast<size_t>(var(static_cast<int>(n), t))];
        if (v != 0) out.add(here[static_cast<size_t>(t)], v);
      }
      memo_.emplace(key_of(unknowns[n].gen, unknowns[n].u), std::move(out));
    }
  }

  void build_codim_expressions(int c) {
    const std::vector<int>& here = R_.classes_at(c);
    int width = static_cast<int>(here.size());
    std::map<int, int> col;
    for (int t = 0; t < width; ++t) col[here[static_cast<size_t>(t)]] = t;

    // Candidate columns: h * CH^{c-1} first, then products with the earlier
    // generators (so the elimination prefers Pieri columns).
    struct Column {
      int gen;
      int cls;
      std::vector<Rational> vec;
    };
    std::vector<Column> cols;
    auto vec_of = [&](const ChowClass& x) {
      std::vector<Rational> v(static_cast<size_t>(width), Rational(0));
      for (const auto& [t, m] : x.coeff) v[static_cast<size_t>(col.at(t))] = m;
      return v;
    };
    for (int b : R_.classes_at(c - 1))
      cols.push_back({R_.hyperplane_id(), b, vec_of(R_.pieri(b))});
    size_t num_pieri_cols = cols.size();
    for (int g : generators_) {
      int s = c - cls_codim(g);
      if (s < 1) continue;
      for (int b : R_.classes_at(s)) cols.push_back({g, b, vec_of(product(g, b))});
    }

    std::vector<std::vector<Rational>> rows;
    for (size_t k = 0; k < num_pieri_cols; ++k) rows.push_back(cols[k].vec);
    pieri_rank_[static_cast<size_t>(c)] = rank_of(rows, width);
    for (size_t k = num_pieri_cols; k < cols.size(); ++k) rows.push_back(cols[k].vec);
    int base_rank = rank_of(rows, width);
    span_rank_[static_cast<size_t>(c)] = base_rank;

    // Choose generators greedily among the classes that escape the span.
    std::vector<int> gens_here;
    if (base_rank < width) {
      std::vector<std::vector<Rational>> aug = rows;
      int cur = base_rank;
      for (int t = 0; t < width && cur < width; ++t) {
        std::vector<Rational> e(static_cast<size_t>(width), Rational(0));
        e[static_cast<size_t>(t)] = 1;
        aug.push_back(e);
        int r = rank_of(aug, width);
        if (r > cur) {
          cur = r;
          gens_here.push_back(here[static_cast<size_t>(t)]);
        } else {
          aug.pop_back();
        }
      }
      if (cur != width) throw std::logic_error("generator completion failed");
      gaps_.push_back(c);
      for (int g : gens_here) {
        generators_.push_back(g);
        generator_set_.insert(g);
      }
    }

    // Solve u = sum d_k (g_k * b_k) + sum l_j x_j for every class u here.
    int ncols = static_cast<int>(cols.size() + gens_here.size());
    for (int t = 0; t < width; ++t) {
      int u = here[static_cast<size_t>(t)];
      if (generator_set_.count(u)) {
        expr_[static_cast<size_t>(u)].generator_part.emplace_back(u, Rational(1));
        continue;
      }
      LinearSystem sys(ncols);
      // One equation per coordinate of CH^c.
      for (int q = 0; q < width; ++q) {
        std::vector<Rational> eq(static_cast<size_t>(ncols), Rational(0));
        for (size_t k = 0; k < cols.size(); ++k) eq[k] = cols[k].vec[static_cast<size_t>(q)];
        for (size_t j = 0; j < gens_here.size(); ++j)
          eq[cols.size() + j] = (col.at(gens_here[j]) == q) ? Rational(1) : Rational(0);
        sys.add_equation(std::move(eq), q == t ? Rational(1) : Rational(0));
      }
      auto sol = sys.solve();
      if (!sol) throw std::logic_error("class expression system inconsistent");
      Expression& e = expr_[static_cast<size_t>(u)];
      for (size_t k = 0; k < cols.size(); ++k)
        if (sol->particular[k] != 0)
          e.product_part.push_back({cols[k].gen, cols[k].cls, sol->particular[k]});
      for (size_t j = 0; j < gens_here.size(); ++j)
        if (sol->particular[cols.size() + j] != 0)
          e.generator_part.emplace_back(gens_here[j], sol->particular[cols.size() + j]);
    }

    // Record the column relations for later action batches.
    Syzygies& sy = syzygies_[static_cast<size_t>(c)];
    for (const Column& cl : cols) sy.columns.emplace_back(cl.gen, cl.cls);
    for (int g : gens_here) sy.columns.emplace_back(g, R_.unit_id());
    LinearSystem hom(ncols);
    for (int q = 0; q < width; ++q) {
      std::vector<Rational> eq(static_cast<size_t>(ncols), Rational(0));
      for (size_t k = 0; k < cols.size(); ++k) eq[k] = cols[k].vec[static_cast<size_t>(q)];
      for (size_t j = 0; j < gens_here.size(); ++j)
        eq[cols.size() + j] = (col.at(gens_here[j]) == q) ? Rational(1) : Rational(0);
      hom.add_equation(std::move(eq), Rational(0));
    }
    auto hsol = hom.solve();
    if (hsol) sy.kernel = std::move(hsol->nullspace);
  }

  static int rank_of(const std::vector<std::vector<Rational>>& rows, int width) {
    if (rows.empty()) return 0;
    LinearSystem sys(width);
    for (const auto& r : rows) sys.add_equation(r, Rational(0));
    return sys.rank();
  }

  ChowClass compute_product(int i, int j) {
    // Cheap cases first.
    int ci = cls_codim(i), cj = cls_codim(j);
    if (ci + cj > R_.dim()) return {};
    if (ci == 0) return unit_product(j);
    if (ci + cj == R_.dim()) {
      ChowClass out;
      out.add(R_.point_id(), R_.poincare_pair(i, j));
      return out;
    }
    if (i == R_.hyperplane_id()) return R_.pieri(j);
    bool gi = is_generator(i), gj = is_generator(j);
    if (gi && gj) return base_product(i, j);
    // Expand the non-generator factor (generator actions are prebuilt, so a
    // mixed pair never reaches this point through product()).
    int expand = gi ? j : i;
    int other = gi ? i : j;
    const Expression& e = expr_[static_cast<size_t>(expand)];
    ChowClass out;
    for (const auto& term : e.product_part) {
      const ChowClass& sub = product(other, term.cls);
      ChowClass lifted = apply_generator(term.gen, sub);
      for (const auto& [t, c] : lifted.coeff) out.add(t, term.coeff * c);
    }
    for (const auto& [x, l] : e.generator_part) {
      const ChowClass& sub = product(other, x);
      for (const auto& [t, c] : sub.coeff) out.add(t, l * c);
    }
    return out;
  }

  // g times a class vector whose action entries are already memoized.
  ChowClass multiply_known(int g, const ChowClass& u) {
    ChowClass out;
    for (const auto& [z, v] : u.coeff) {
      const ChowClass& p = product(g, z);
      for (const auto& [t, cc] : p.coeff) out.add(t, v * cc);
    }
    return out;
  }

  ChowClass apply_generator(int gen, const ChowClass& u) {
    if (gen == R_.hyperplane_id()) return R_.pieri_apply(u);
    ChowClass out;
    for (const auto& [z, v] : u.coeff) {
      const ChowClass& p = product(gen, z);
      for (const auto& [t, c] : p.coeff) out.add(t, v * c);
    }
    return out;
  }

  ChowClass unit_product(int j) {
    ChowClass out;
    out.add(j, Rational(1));
    return out;
  }

  ChowClass base_product(int i, int j) {
    // Product of two non-hyperplane generators: the only place where
    // polynomial preimages are needed.
    if (verbose())
      std::fprintf(stderr, "chow: base product %s * %s (degree %d)\n", R_.label(i).c_str(),
                   R_.label(j).c_str(), cls_codim(i) + cls_codim(j));
    Polynomial p = generator_preimage(i) * generator_preimage(j);
    return c_shared(p);
  }

  const ChowRing& R_;
  PreimageSolver solver_;
  int threads_;
  const PinSeed* pin_seed_ = nullptr;
  PinSeed pinned_;
  std::vector<Expression> expr_;
  std::vector<int> gaps_;
  std::vector<int> generators_;
  std::set<int> generator_set_;
  std::vector<int> pieri_rank_;
  std::vector<int> span_rank_;
  std::vector<Syzygies> syzygies_;
  std::map<int, Polynomial> preimages_;
  std::map<std::pair<int, int>, ChowClass> memo_;
};

}  // namespace chow
