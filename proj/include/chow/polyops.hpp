#pragma once

// Weyl-group action on polynomials and divided-difference operators.
//
// The simple reflection s_i fixes every variable w_j with j != i and sends
// w_i to w_i - a_i, where a_i is the i-th simple root written in the
// fundamental-weight basis (column i of the Cartan matrix).  The divided
// difference is D_i(p) = (p - s_i(p)) / a_i; the quotient is always exact.

#include <cassert>
#include <stdexcept>
#include <vector>

#include "chow/poly.hpp"
#include "chow/rootdata.hpp"
#include "chow/weyl.hpp"

namespace chow {

class PolyOps {
 public:
  explicit PolyOps(const RootSystem& rs) : rs_(rs), rank_(rs.rank()) {
    alpha_.resize(static_cast<size_t>(rank_));
    si_image_pows_.resize(static_cast<size_t>(rank_));
    for (int i = 0; i < rank_; ++i) {
      Coords ac{};
      for (int j = 0; j < rank_; ++j) ac[static_cast<size_t>(j)] = rs.cartan(j, i);
      alpha_[static_cast<size_t>(i)] = Polynomial::linear_form(ac, rank_);
      // s_i(w_i) = w_i - a_i
      Polynomial im = Polynomial::variable(i) - alpha_[static_cast<size_t>(i)];
      si_image_pows_[static_cast<size_t>(i)].push_back(Polynomial::constant(Rational(1)));
      si_image_pows_[static_cast<size_t>(i)].push_back(std::move(im));
    }
  }

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rank_; }

  /// Simple root a_{i+1} as a polynomial (weight-basis linear form).
  const Polynomial& alpha(int i) const { return alpha_[static_cast<size_t>(i)]; }

  /// Action of the simple reflection s_{i+1}.
  Polynomial simple_reflect(const Polynomial& p, int i) {
    std::unordered_map<uint64_t, Rational> acc;
    for (const Polynomial::Term& t : p.terms()) {
      ExpVec e = unpack_exp(t.first);
      int pw = e[static_cast<size_t>(i)];
      if (pw == 0) {
        acc[t.first] += t.second;
        continue;
      }
      e[static_cast<size_t>(i)] = 0;
      uint64_t rest = pack_exp(e);
      for (const Polynomial::Term& u : si_image_pow(i, pw).terms())
        acc[exp_mul(rest, u.first)] += t.second * u.second;
    }
    return Polynomial::from_map(acc);
  }

  /// Action of an arbitrary Weyl element: each variable w_j maps to the
  /// linear form w(omega_j), read off the element's action matrix.
  Polynomial weyl_apply(const WeylElement& w, const Polynomial& p) {
    std::vector<std::vector<Polynomial>> pows(static_cast<size_t>(rank_));
    for (int j = 0; j < rank_; ++j) {
      Coords col{};
      for (int r = 0; r < rank_; ++r) col[static_cast<size_t>(r)] = w.at(r, j);
      pows[static_cast<size_t>(j)].push_back(Polynomial::constant(Rational(1)));
      pows[static_cast<size_t>(j)].push_back(Polynomial::linear_form(col, rank_));
    }
    std::unordered_map<uint64_t, Rational> acc;
    for (const Polynomial::Term& t : p.terms()) {
      ExpVec e = unpack_exp(t.first);
      Polynomial prod = Polynomial::constant(t.second);
      for (int j = 0; j < rank_; ++j) {
        int pw = e[static_cast<size_t>(j)];
        if (pw == 0) continue;
        auto& pj = pows[static_cast<size_t>(j)];
        while (static_cast<int>(pj.size()) <= pw) pj.push_back(pj.back() * pj[1]);
        prod *= pj[static_cast<size_t>(pw)];
      }
      for (const Polynomial::Term& u : prod.terms()) acc[u.first] += u.second;
    }
    return Polynomial::from_map(acc);
  }

  /// Exact division p / d; throws if the division is not exact.
  static Polynomial exact_divide(Polynomial p, const Polynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Polynomial::Term> quot;
    const Polynomial::Term& ld = d.leading();
    while (!p.is_zero()) {
      const Polynomial::Term& lp = p.leading();
      if (!exp_divides(ld.first, lp.first))
        throw std::logic_error("polynomial division is not exact");
      uint64_t m = exp_div(lp.first, ld.first);
      Rational c = lp.second / ld.second;
      quot.emplace_back(m, c);
      Polynomial sub;
      {
        std::vector<Polynomial::Term> st;
        st.emplace_back(m, c);
        sub = Polynomial::from_terms(std::move(st));
      }
      p = p.add_scaled(sub * d, Rational(-1));
    }
    return Polynomial::from_terms(std::move(quot));
  }

  /// Divided difference D_{i+1}(p) = (p - s_{i+1} p) / a_{i+1}.
  ///
  /// Writing p = sum_k A_k w_i^k with A_k free of w_i, the quotient is
  /// sum_k A_k S_k where S_k = (w_i^k - (w_i - a_i)^k) / a_i telescopes to
  /// sum_{m<k} w_i^m (w_i - a_i)^{k-1-m}.  Caching S_k per variable makes
  /// this a single accumulation pass instead of a long division.
  Polynomial divided_difference(const Polynomial& p, int i) {
    std::unordered_map<uint64_t, Rational> acc;
    for (const Polynomial::Term& t : p.terms()) {
      ExpVec e = unpack_exp(t.first);
      int pw = e[static_cast<size_t>(i)];
      if (pw == 0) continue;
      e[static_cast<size_t>(i)] = 0;
      uint64_t rest = pack_exp(e);
      for (const Polynomial::Term& u : diff_kernel(i, pw).terms())
        acc[exp_mul(rest, u.first)] += t.second * u.second;
    }
    return Polynomial::from_map(acc);
  }

  /// D_w for w given by a reduced word s_{a_1}...s_{a_k} (0-based letters):
  /// the rightmost factor acts first, D_w = D_{a_1} o ... o D_{a_k}.
  Polynomial delta_word(const Polynomial& p, const std::vector<int>& word) {
    Polynomial q = p;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (q.is_zero()) return q;
      q = divided_difference(q, *it);
    }
    return q;
  }

 private:
  // S_{i,k} from the divided-difference expansion; S_0 = 0 and
  // S_k = w_i^{k-1} + S_{k-1} (w_i - a_i).
  const Polynomial& diff_kernel(int i, int pw) {
    if (diff_kernels_.empty()) diff_kernels_.resize(static_cast<size_t>(rank_));
    auto& v = diff_kernels_[static_cast<size_t>(i)];
    if (v.empty()) v.push_back(Polynomial());
    while (static_cast<int>(v.size()) <= pw) {
      int k = static_cast<int>(v.size());
      ExpVec e{};
      e[static_cast<size_t>(i)] = static_cast<uint8_t>(k - 1);
      std::vector<Polynomial::Term> wt;
      wt.emplace_back(pack_exp(e), Rational(1));
      v.push_back(Polynomial::from_terms(std::move(wt)) +
                  v.back() * si_image_pow(i, 1));
    }
    return v[static_cast<size_t>(pw)];
  }

  const Polynomial& si_image_pow(int i, int pw) {
    auto& v = si_image_pows_[static_cast<size_t>(i)];
    while (static_cast<int>(v.size()) <= pw) v.push_back(v.back() * v[1]);
    return v[static_cast<size_t>(pw)];
  }

  const RootSystem& rs_;
  int rank_;
  std::vector<Polynomial> alpha_;
  std::vector<std::vector<Polynomial>> si_image_pows_;
  std::vector<std::vector<Polynomial>> diff_kernels_;
};

}  // namespace chow
