#pragma once

// Fundamental Weyl-group invariants and Groebner reduction modulo the
// ideal they generate.
//
// For each invariant degree d of W (counted with multiplicity) a
// W-invariant polynomial of degree d is produced as a power sum over a
// W-orbit of a fundamental weight; orbits are tried smallest first (orbit
// sizes are |W| / |W_stab|, computed from the parabolic stabilizer, so no
// large orbit is ever enumerated by accident).  Algebraic independence of
// the chosen invariants is certified by an exact Jacobian rank evaluation
// at deterministic rational points.
//
// The ideal is handled with a degree-truncated Buchberger loop (grevlex):
// for a homogeneous ideal, processing all S-pairs of degree <= cap yields
// a basis whose normal forms are correct in degrees <= cap.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "chow/linalg.hpp"
#include "chow/poly.hpp"
#include "chow/polyops.hpp"
#include "chow/rootdata.hpp"

namespace chow {

class InvariantSet {
 public:
  /// Invariants and Groebner data valid up to (and including) degree_cap.
  InvariantSet(const RootSystem& rs, int degree_cap) : rs_(rs), cap_(degree_cap) {
    build_invariants();
    build_groebner();
  }

  const RootSystem& roots() const { return rs_; }
  int degree_cap() const { return cap_; }

  /// The chosen fundamental invariants of degree <= cap, ascending degree.
  const std::vector<Polynomial>& invariants() const { return invariants_; }

  const std::vector<Polynomial>& groebner_basis() const { return basis_; }

  /// Normal form modulo the ideal generated by the positive-degree
  /// W-invariants.  Valid for inputs of degree <= cap.
  Polynomial reduce(const Polynomial& p) const {
    if (p.degree() > cap_)
      throw std::invalid_argument("reduce: degree exceeds the Groebner cap");
    Polynomial rem;
    Polynomial cur = p;
    while (!cur.is_zero()) {
      const auto& lt = cur.leading();
      bool hit = false;
      for (const Polynomial& g : basis_) {
        const auto& lg = g.leading();
        if (!exp_divides(lg.first, lt.first)) continue;
        Polynomial m = Polynomial::from_terms(
            {{exp_div(lt.first, lg.first), lt.second / lg.second}});
        cur = cur.add_scaled(m * g, Rational(-1));
        hit = true;
        break;
      }
      if (!hit) {
        rem += Polynomial::from_terms({{lt.first, lt.second}});
        cur = cur.add_scaled(Polynomial::from_terms({{lt.first, lt.second}}), Rational(-1));
      }
    }
    return rem;
  }

  /// Monomials of degree k not divisible by any leading monomial of the
  /// basis (the standard monomials of the quotient in that degree).
  long long standard_monomial_count(int k) const {
    if (k > cap_) throw std::invalid_argument("degree exceeds the Groebner cap");
    long long n = 0;
    for (uint64_t m : all_monomials(rs_.rank(), k)) {
      bool divisible = false;
      for (const Polynomial& g : basis_)
        if (exp_divides(g.leading().first, m)) {
          divisible = true;
          break;
        }
      if (!divisible) ++n;
    }
    return n;
  }

 private:
  static std::vector<uint64_t> all_monomials(int rank, int k) {
    std::vector<uint64_t> out;
    ExpVec e{};
    auto rec = [&](auto&& self, int var, int left) -> void {
      if (var == rank - 1) {
        e[static_cast<size_t>(var)] = static_cast<uint8_t>(left);
        out.push_back(pack_exp(e));
        e[static_cast<size_t>(var)] = 0;
        return;
      }
      for (int t = 0; t <= left; ++t) {
        e[static_cast<size_t>(var)] = static_cast<uint8_t>(t);
        self(self, var + 1, left - t);
      }
      e[static_cast<size_t>(var)] = 0;
    };
    rec(rec, 0, k);
    return out;
  }

  /// Orbit of the j-th fundamental weight under the full Weyl group.
  std::vector<Coords> weight_orbit(int j) const {
    Coords start{};
    start[static_cast<size_t>(j)] = 1;
    std::vector<Coords> orbit{start};
    std::set<Coords> seen{start};
    for (size_t q = 0; q < orbit.size(); ++q) {
      Coords cur = orbit[q];
      for (int i = 0; i < rs_.rank(); ++i) {
        // s_i(lambda) = lambda - lambda_i * alpha_i.
        Coords img = cur;
        int pairing = cur[static_cast<size_t>(i)];
        if (pairing == 0) continue;
        for (int r = 0; r < rs_.rank(); ++r)
          img[static_cast<size_t>(r)] -= pairing * rs_.cartan(r, i);
        if (seen.insert(img).second) orbit.push_back(img);
      }
    }
    return orbit;
  }

  Polynomial power_sum(const std::vector<Coords>& orbit, int d) const {
    Polynomial total;
    for (const Coords& mu : orbit) {
      Polynomial form = Polynomial::linear_form(mu, rs_.rank());
      Polynomial pw = Polynomial::constant(Rational(1));
      for (int t = 0; t < d; ++t) pw *= form;
      total += pw;
    }
    return total;
  }

  /// Jacobian rows of the chosen invariants evaluated at a rational point.
  static std::vector<Rational> jacobian_row(const Polynomial& f, int rank,
                                            const std::vector<Rational>& pt) {
    std::vector<Rational> row;
    for (int j = 0; j < rank; ++j) row.push_back(f.derivative(j).evaluate(pt));
    return row;
  }

  static int matrix_rank(const std::vector<std::vector<Rational>>& rows, int width) {
    LinearSystem sys(width);
    for (const auto& r : rows) sys.add_equation(r, Rational(0));
    return sys.rank();
  }

  void build_invariants() {
    int rank = rs_.rank();
    // Degrees to realize (with multiplicity), capped.
    std::vector<int> wanted;
    for (int d : rs_.degrees())
      if (d <= cap_) wanted.push_back(d);
    if (wanted.empty()) return;

    // Fundamental weights ordered by orbit size |W| / |W_{Pi \ j}|.
    std::vector<std::pair<long long, int>> order;
    for (int j = 0; j < rank; ++j) {
      std::vector<int> rest;
      for (int i = 0; i < rank; ++i)
        if (i != j) rest.push_back(i);
      order.emplace_back(rs_.weyl_order() / rs_.sub_weyl_order(rest), j);
    }
    std::sort(order.begin(), order.end());

    // Deterministic evaluation points for the Jacobian certificate.  All
    // rows of one rank computation use the same point.
    const long long primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
    std::vector<std::vector<Rational>> points;
    for (int shift = 0; shift < 4; ++shift) {
      std::vector<Rational> pt;
      for (int j = 0; j < rank; ++j)
        pt.push_back(Rational(static_cast<long>(primes[(j + 2 * shift) % 8]),
                              static_cast<long>(shift + 2)));
      points.push_back(std::move(pt));
    }
    auto independent = [&](const std::vector<Polynomial>& fs) {
      for (const auto& pt : points) {
        std::vector<std::vector<Rational>> rows;
        for (const Polynomial& f : fs) rows.push_back(jacobian_row(f, rank, pt));
        if (matrix_rank(rows, rank) == static_cast<int>(rows.size())) return true;
      }
      return false;
    };

    size_t next_orbit = 0;
    std::vector<Coords> orbit;
    std::deque<int> pending(wanted.begin(), wanted.end());
    while (!pending.empty()) {
      if (orbit.empty()) {
        if (next_orbit >= order.size())
          throw std::runtime_error("could not realize all invariant degrees");
        orbit = weight_orbit(order[next_orbit++].second);
      }
      bool progressed = false;
      for (size_t qi = 0; qi < pending.size();) {
        int d = pending[qi];
        Polynomial cand = power_sum(orbit, d);
        bool accepted = false;
        if (!cand.is_zero()) {
          std::vector<Polynomial> trial = invariants_;
          trial.push_back(cand);
          accepted = independent(trial);
        }
        if (accepted) {
          invariants_.push_back(std::move(cand));
          pending.erase(pending.begin() + static_cast<long>(qi));
          progressed = true;
        } else {
          ++qi;
        }
      }
      if (!progressed) orbit.clear();  // exhaust this orbit, move to the next
    }
    std::sort(invariants_.begin(), invariants_.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.degree() < b.degree(); });
  }

  Polynomial spoly(const Polynomial& f, const Polynomial& g) const {
    const auto& lf = f.leading();
    const auto& lg = g.leading();
    uint64_t l = exp_lcm(lf.first, lg.first);
    Polynomial a = Polynomial::from_terms({{exp_div(l, lf.first), Rational(1) / lf.second}});
    Polynomial b = Polynomial::from_terms({{exp_div(l, lg.first), Rational(1) / lg.second}});
    return (a * f) - (b * g);
  }

  Polynomial normal_form(Polynomial p) const {
    Polynomial rem;
    while (!p.is_zero()) {
      const auto& lt = p.leading();
      bool hit = false;
      for (const Polynomial& g : basis_) {
        const auto& lg = g.leading();
        if (!exp_divides(lg.first, lt.first)) continue;
        Polynomial m =
            Polynomial::from_terms({{exp_div(lt.first, lg.first), lt.second / lg.second}});
        p = p.add_scaled(m * g, Rational(-1));
        hit = true;
        break;
      }
      if (!hit) break;  // as a generator candidate, the tail never reduces further
    }
    return p;
  }

  void build_groebner() {
    // Degree-truncated Buchberger with the coprimality criterion.
    struct Pair {
      int degree;
      size_t i, j;
      bool operator<(const Pair& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (i != o.i) return i < o.i;
        return j < o.j;
      }
    };
    std::set<Pair> queue;
    auto push_pairs = [&](size_t k) {
      for (size_t i = 0; i < k; ++i) {
        uint64_t a = basis_[i].leading().first, b = basis_[k].leading().first;
        uint64_t l = exp_lcm(a, b);
        if (l == exp_mul(a, b)) continue;  // coprime leading monomials
        int deg = exp_degree(l);
        if (deg > cap_) continue;
        queue.insert({deg, i, k});
      }
    };
    for (const Polynomial& f : invariants_) {
      Polynomial nf = normal_form(f);
      if (nf.is_zero()) continue;
      nf *= Rational(1) / nf.leading().second;
      basis_.push_back(std::move(nf));
      push_pairs(basis_.size() - 1);
    }
    while (!queue.empty()) {
      Pair pr = *queue.begin();
      queue.erase(queue.begin());
      Polynomial s = normal_form(spoly(basis_[pr.i], basis_[pr.j]));
      if (s.is_zero()) continue;
      s *= Rational(1) / s.leading().second;
      basis_.push_back(std::move(s));
      push_pairs(basis_.size() - 1);
    }
    // Inter-reduce: minimal basis (drop redundant leading monomials), then
    // reduce tails for canonical output.
    std::vector<Polynomial> minimal;
    for (size_t k = 0; k < basis_.size(); ++k) {
      bool redundant = false;
      for (size_t j = 0; j < basis_.size(); ++j) {
        if (j == k) continue;
        if (!exp_divides(basis_[j].leading().first, basis_[k].leading().first)) continue;
        if (basis_[j].leading().first == basis_[k].leading().first && j > k) continue;
        redundant = true;
        break;
      }
      if (!redundant) minimal.push_back(basis_[k]);
    }
    basis_ = std::move(minimal);
    std::sort(basis_.begin(), basis_.end(), [](const Polynomial& a, const Polynomial& b) {
      return grevlex_less(b.leading().first, a.leading().first);
    });
    for (size_t k = 0; k < basis_.size(); ++k) {
      // Tail-reduce entry k against the rest.
      Polynomial lead = Polynomial::from_terms({basis_[k].leading()});
      Polynomial tail = basis_[k].add_scaled(lead, Rational(-1));
      std::vector<Polynomial> rest;
      for (size_t j = 0; j < basis_.size(); ++j)
        if (j != k) rest.push_back(basis_[j]);
      std::swap(rest, basis_);
      Polynomial tr = reduce_full(tail);
      std::swap(rest, basis_);
      basis_[k] = lead + tr;
    }
  }

  Polynomial reduce_full(const Polynomial& p) const {
    Polynomial rem;
    Polynomial cur = p;
    while (!cur.is_zero()) {
      const auto& lt = cur.leading();
      bool hit = false;
      for (const Polynomial& g : basis_) {
        const auto& lg = g.leading();
        if (!exp_divides(lg.first, lt.first)) continue;
        Polynomial m =
            Polynomial::from_terms({{exp_div(lt.first, lg.first), lt.second / lg.second}});
        cur = cur.add_scaled(m * g, Rational(-1));
        hit = true;
        break;
      }
      if (!hit) {
        rem += Polynomial::from_terms({{lt.first, lt.second}});
        cur = cur.add_scaled(Polynomial::from_terms({{lt.first, lt.second}}), Rational(-1));
      }
    }
    return rem;
  }

  const RootSystem& rs_;
  int cap_;
  std::vector<Polynomial> invariants_;
  std::vector<Polynomial> basis_;
};

}  // namespace chow
