#pragma once

// Sparse multivariate polynomials over exact rationals in the
// fundamental-weight variables w[1]..w[l].
//
// Exponent vectors are packed into a 64-bit key (one byte per variable,
// variable order w_1 < w_2 < ... < w_l).  Terms are kept sorted in
// descending graded reverse-lexicographic order; the first term is the
// leading term.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chow/rational.hpp"
#include "chow/rootdata.hpp"

namespace chow {

using ExpVec = std::array<uint8_t, kMaxRank>;

inline uint64_t pack_exp(const ExpVec& e) {
  uint64_t k = 0;
  for (int i = kMaxRank - 1; i >= 0; --i) k = (k << 8) | e[static_cast<size_t>(i)];
  return k;
}

inline ExpVec unpack_exp(uint64_t k) {
  ExpVec e{};
  for (int i = 0; i < kMaxRank; ++i) {
    e[static_cast<size_t>(i)] = static_cast<uint8_t>(k & 0xff);
    k >>= 8;
  }
  return e;
}

inline int exp_degree(uint64_t k) {
  int d = 0;
  while (k) {
    d += static_cast<int>(k & 0xff);
    k >>= 8;
  }
  return d;
}

inline uint64_t exp_mul(uint64_t a, uint64_t b) {
  // Per-byte addition; exponents stay < 128 in all supported computations.
  return a + b;
}

inline bool exp_divides(uint64_t a, uint64_t b) {
  // does a divide b (componentwise a <= b)?
  ExpVec ea = unpack_exp(a), eb = unpack_exp(b);
  for (int i = 0; i < kMaxRank; ++i)
    if (ea[static_cast<size_t>(i)] > eb[static_cast<size_t>(i)]) return false;
  return true;
}

inline uint64_t exp_div(uint64_t b, uint64_t a) { return b - a; }

inline uint64_t exp_lcm(uint64_t a, uint64_t b) {
  ExpVec ea = unpack_exp(a), eb = unpack_exp(b), e{};
  for (int i = 0; i < kMaxRank; ++i)
    e[static_cast<size_t>(i)] = std::max(ea[static_cast<size_t>(i)], eb[static_cast<size_t>(i)]);
  return pack_exp(e);
}

/// Graded reverse-lexicographic "less" with variable order w_1 < ... < w_l.
inline bool grevlex_less(uint64_t a, uint64_t b) {
  if (a == b) return false;
  int da = exp_degree(a), db = exp_degree(b);
  if (da != db) return da < db;
  ExpVec ea = unpack_exp(a), eb = unpack_exp(b);
  for (int i = kMaxRank - 1; i >= 0; --i) {
    int d = static_cast<int>(ea[static_cast<size_t>(i)]) - static_cast<int>(eb[static_cast<size_t>(i)]);
    if (d != 0) return d > 0;  // larger exponent on the last differing variable loses
  }
  return false;
}

class Polynomial {
 public:
  using Term = std::pair<uint64_t, Rational>;

  Polynomial() = default;

  static Polynomial constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace_back(0, c);
    return p;
  }

  static Polynomial variable(int i, int power = 1) {
    ExpVec e{};
    e[static_cast<size_t>(i)] = static_cast<uint8_t>(power);
    Polynomial p;
    p.terms_.emplace_back(pack_exp(e), Rational(1));
    return p;
  }

  /// Linear form sum coeffs[i] * w_{i+1}.
  template <typename Vec>
  static Polynomial linear_form(const Vec& coeffs, int rank) {
    Polynomial p;
    std::vector<Term> ts;
    for (int i = 0; i < rank; ++i) {
      Rational c(coeffs[static_cast<size_t>(i)]);
      if (c == 0) continue;
      ExpVec e{};
      e[static_cast<size_t>(i)] = 1;
      ts.emplace_back(pack_exp(e), c);
    }
    p.set_terms(std::move(ts));
    return p;
  }

  static Polynomial from_terms(std::vector<Term> ts) {
    Polynomial p;
    p.set_terms(std::move(ts));
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  const Term& leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }

  int degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, exp_degree(t.first));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = exp_degree(terms_.front().first);
    for (const Term& t : terms_)
      if (exp_degree(t.first) != d) return false;
    return true;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
  }

  Rational constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::logic_error("polynomial is not constant");
    return terms_[0].second;
  }

  Rational coefficient(uint64_t key) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, uint64_t k) { return grevlex_less(k, t.first); });
    if (it != terms_.end() && it->first == key) return it->second;
    return Rational(0);
  }

  Polynomial& operator+=(const Polynomial& o) {
    *this = add_scaled(o, Rational(1));
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    *this = add_scaled(o, Rational(-1));
    return *this;
  }
  Polynomial operator+(const Polynomial& o) const { return add_scaled(o, Rational(1)); }
  Polynomial operator-(const Polynomial& o) const { return add_scaled(o, Rational(-1)); }

  Polynomial operator-() const {
    Polynomial p(*this);
    for (Term& t : p.terms_) t.second = -t.second;
    return p;
  }

  Polynomial operator*(const Rational& c) const {
    if (c == 0) return Polynomial();
    Polynomial p(*this);
    for (Term& t : p.terms_) t.second *= c;
    return p;
  }

  Polynomial& operator*=(const Rational& c) {
    *this = *this * c;
    return *this;
  }

  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::unordered_map<uint64_t, Rational> acc;
    acc.reserve(terms_.size() * 2);
    const Polynomial *small = this, *big = &o;
    if (small->size() > big->size()) std::swap(small, big);
    for (const Term& a : small->terms_)
      for (const Term& b : big->terms_) {
        acc[exp_mul(a.first, b.first)] += a.second * b.second;
      }
    return from_map(acc);
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  /// this scaled-added with c * o, merge of two sorted term lists.
  Polynomial add_scaled(const Polynomial& o, const Rational& c) const {
    Polynomial out;
    out.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      bool take_left;
      if (i == terms_.size())
        take_left = false;
      else if (j == o.terms_.size())
        take_left = true;
      else if (terms_[i].first == o.terms_[j].first) {
        Rational v = terms_[i].second + c * o.terms_[j].second;
        if (v != 0) out.terms_.emplace_back(terms_[i].first, std::move(v));
        ++i;
        ++j;
        continue;
      } else {
        take_left = grevlex_less(o.terms_[j].first, terms_[i].first);
      }
      if (take_left) {
        out.terms_.push_back(terms_[i++]);
      } else {
        Rational v = c * o.terms_[j].second;
        if (v != 0) out.terms_.emplace_back(o.terms_[j].first, std::move(v));
        ++j;
      }
    }
    return out;
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Evaluate at a rational point (variables 0..rank-1).
  Rational evaluate(const std::vector<Rational>& x) const {
    Rational acc = 0;
    for (const Term& t : terms_) {
      Rational v = t.second;
      ExpVec e = unpack_exp(t.first);
      for (size_t i = 0; i < x.size(); ++i) {
        for (int k = 0; k < e[i]; ++k) v *= x[i];
      }
      acc += v;
    }
    return acc;
  }

  Polynomial derivative(int var) const {
    std::vector<Term> ts;
    for (const Term& t : terms_) {
      ExpVec e = unpack_exp(t.first);
      int p = e[static_cast<size_t>(var)];
      if (p == 0) continue;
      e[static_cast<size_t>(var)] = static_cast<uint8_t>(p - 1);
      ts.emplace_back(pack_exp(e), t.second * p);
    }
    return from_terms(std::move(ts));
  }

  static Polynomial from_map(std::unordered_map<uint64_t, Rational>& acc) {
    Polynomial p;
    p.terms_.reserve(acc.size());
    for (auto& kv : acc)
      if (kv.second != 0) p.terms_.emplace_back(kv.first, std::move(kv.second));
    p.sort_terms();
    return p;
  }

  /// Text form in the w[i] notation, deterministic: descending term order.
  std::string to_string(int rank) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
      Rational c = t.second;
      if (first) {
        if (c < 0) {
          os << "-";
          c = -c;
        }
      } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      first = false;
      ExpVec e = unpack_exp(t.first);
      bool any_var = false;
      for (int i = 0; i < rank; ++i) any_var = any_var || e[static_cast<size_t>(i)] > 0;
      if (c != 1 || !any_var) {
        os << c.get_str();
        if (any_var) os << "*";
      }
      bool firstv = true;
      for (int i = 0; i < rank; ++i) {
        int p = e[static_cast<size_t>(i)];
        if (p == 0) continue;
        if (!firstv) os << "*";
        firstv = false;
        os << "w[" << (i + 1) << "]";
        if (p > 1) os << "^" << p;
      }
    }
    return os.str();
  }

  /// Parse the w[i] notation: terms joined by +/-, factors joined by '*',
  /// each factor a rational or w[i]^k.
  static Polynomial parse(const std::string& text, int rank) {
    std::string s;
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    std::unordered_map<uint64_t, Rational> acc;
    size_t pos = 0;
    while (pos < s.size()) {
      Rational sign(1);
      while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -sign;
        ++pos;
      }
      size_t end = pos;
      while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
      std::string term = s.substr(pos, end - pos);
      if (term.empty()) throw std::invalid_argument("dangling sign in polynomial text");
      Rational coeff = sign;
      ExpVec e{};
      size_t tp = 0;
      while (tp < term.size()) {
        size_t fe = term.find('*', tp);
        if (fe == std::string::npos) fe = term.size();
        std::string factor = term.substr(tp, fe - tp);
        if (factor.empty()) throw std::invalid_argument("empty factor");
        if (factor[0] == 'w') {
          if (factor.size() < 4 || factor[1] != '[')
            throw std::invalid_argument("bad variable factor: " + factor);
          size_t close = factor.find(']');
          int var = std::stoi(factor.substr(2, close - 2));
          if (var < 1 || var > rank) throw std::invalid_argument("variable index out of range");
          int power = 1;
          if (close + 1 < factor.size()) {
            if (factor[close + 1] != '^') throw std::invalid_argument("bad exponent: " + factor);
            power = std::stoi(factor.substr(close + 2));
          }
          e[static_cast<size_t>(var - 1)] =
              static_cast<uint8_t>(e[static_cast<size_t>(var - 1)] + power);
        } else {
          coeff *= rational_from_string(factor);
        }
        tp = fe + 1;
      }
      acc[pack_exp(e)] += coeff;
      pos = end;
    }
    return from_map(acc);
  }

 private:
  void set_terms(std::vector<Term> ts) {
    terms_ = std::move(ts);
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return t.second == 0; }),
                 terms_.end());
    sort_terms();
  }

  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grevlex_less(b.first, a.first); });
  }

  std::vector<Term> terms_;  // sorted descending, no zero coefficients
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

}  // namespace chow
