#pragma once

// Divided-difference chains with coefficients reduced modulo a word-size
// prime.  The characteristic-map coefficients of a product of Schubert-class
// preimages are integers, so the chains can run entirely in Z/p with machine
// arithmetic and the results lifted back at the end.  Callers cross-check
// two independent primes, and every lifted value is additionally fed into an
// overdetermined linear system that rejects any incorrect lift, so this is
// an exact computation, not an approximation.

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "chow/poly.hpp"
#include "chow/rootdata.hpp"

namespace chow {

class ModOps {
 public:
  /// Sparse polynomial over Z/p: packed exponent vector -> coefficient.
  using Poly = std::unordered_map<uint64_t, uint64_t>;

  ModOps(const RootSystem& rs, uint64_t prime) : rank_(rs.rank()), p_(prime) {
    alpha_.resize(static_cast<size_t>(rank_));
    kernels_.resize(static_cast<size_t>(rank_));
    for (int i = 0; i < rank_; ++i) {
      // Simple root a_i in the weight basis: column i of the Cartan matrix.
      Poly a;
      for (int j = 0; j < rank_; ++j) {
        int cij = rs.cartan(j, i);
        if (cij == 0) continue;
        ExpVec e{};
        e[static_cast<size_t>(j)] = 1;
        a[pack_exp(e)] = reduce_signed(cij);
      }
      alpha_[static_cast<size_t>(i)] = std::move(a);
      kernels_[static_cast<size_t>(i)].push_back(Poly{});  // S_0 = 0
    }
  }

  uint64_t prime() const { return p_; }

  Poly one() const { return Poly{{0, 1 % p_}}; }

  /// Reduction of an exact rational polynomial; every denominator must be
  /// coprime to p, which holds trivially for the word-size primes in use.
  Poly reduce(const Polynomial& q) const {
    Poly out;
    for (const auto& t : q.terms()) {
      uint64_t num = mod_of(t.second.get_num());
      uint64_t den = mod_of(t.second.get_den());
      uint64_t c = mulmod(num, inverse(den));
      if (c) out[t.first] = c;
    }
    return out;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    const Poly& big = a.size() >= b.size() ? a : b;
    const Poly& small = a.size() >= b.size() ? b : a;
    Poly out;
    out.reserve(big.size());
    for (const auto& [es, cs] : small) {
      if (!cs) continue;
      for (const auto& [eb, cb] : big) {
        if (!cb) continue;
        uint64_t& slot = out[exp_mul(eb, es)];
        slot = addmod(slot, mulmod(cb, cs));
      }
    }
    return out;
  }

  /// D_{i+1} via the telescoped kernels S_k = w_i^{k-1} + S_{k-1}(w_i - a_i):
  /// no division ever happens, so Z/p is a safe home for the whole chain.
  Poly divided_difference(const Poly& q, int i) {
    Poly out;
    out.reserve(q.size());
    uint64_t mask = static_cast<uint64_t>(0xff) << (8 * i);
    for (const auto& [eq, cq] : q) {
      if (!cq) continue;
      int pw = static_cast<int>((eq & mask) >> (8 * i));
      if (pw == 0) continue;
      uint64_t rest = eq & ~mask;
      for (const auto& [es, cs] : kernel(i, pw)) {
        if (!cs) continue;
        uint64_t& slot = out[exp_mul(rest, es)];
        slot = addmod(slot, mulmod(cq, cs));
      }
    }
    return out;
  }

  uint64_t constant_value(const Poly& q) const {
    auto it = q.find(0);
    return it == q.end() ? 0 : it->second;
  }

 private:
  const Poly& kernel(int i, int k) {
    auto& ks = kernels_[static_cast<size_t>(i)];
    while (static_cast<int>(ks.size()) <= k) {
      int m = static_cast<int>(ks.size());
      // w_i - a_i
      Poly im;
      ExpVec e{};
      e[static_cast<size_t>(i)] = 1;
      im[pack_exp(e)] = 1 % p_;
      for (const auto& [ea, ca] : alpha_[static_cast<size_t>(i)]) {
        uint64_t& s = im[ea];
        s = addmod(s, p_ - ca);
      }
      Poly next = mul(ks.back(), im);
      ExpVec f{};
      f[static_cast<size_t>(i)] = static_cast<uint8_t>(m - 1);
      uint64_t& s = next[pack_exp(f)];
      s = addmod(s, 1 % p_);
      ks.push_back(std::move(next));
    }
    return ks[static_cast<size_t>(k)];
  }

  uint64_t addmod(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;  // p < 2^63, so no overflow
    return s >= p_ ? s - p_ : s;
  }

  uint64_t mulmod(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }

  uint64_t powmod(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % p_;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  }

  uint64_t inverse(uint64_t a) const {
    if (a == 0) throw std::logic_error("modular inverse of zero");
    return powmod(a, p_ - 2);
  }

  uint64_t reduce_signed(long long v) const {
    return v >= 0 ? static_cast<uint64_t>(v) % p_
                  : p_ - static_cast<uint64_t>(-v) % p_;
  }

  uint64_t mod_of(const mpz_class& z) const {
    uint64_t r = mpz_fdiv_ui(z.get_mpz_t(), static_cast<unsigned long>(p_));
    return r;
  }

  int rank_;
  uint64_t p_;
  std::vector<Poly> alpha_;
  std::vector<std::vector<Poly>> kernels_;  // kernels_[i][k] = S_k for D_i
};

}  // namespace chow
