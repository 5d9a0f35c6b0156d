#pragma once

// Preimages of Chow classes under the characteristic map c.
//
// A preimage of x in CH^k(G/P) is a homogeneous degree-k polynomial p in
// the fundamental weights such that p is W_P-invariant and c(p) = x.  Two
// routes are provided:
//
//   * generic undetermined coefficients: p = sum over all degree-k
//     monomials with unknown coefficients; the invariance condition is
//     imposed either as Delta_w(p) = 0 for every length-k element w that
//     is not a minimal coset representative ("delta" variant) or as
//     s_i(p) = p for every i in Theta ("invariance" variant), plus the
//     normalization rows c(p) = x.  Practical for small rank.
//
//   * invariant ansatz: p is sought inside the W_P-invariant subalgebra
//     directly, written in a basis of products of the fixed fundamental
//     weight and power sums over small W_P-orbits.  The candidate set is
//     certified against the expected dimension of the degree-k invariant
//     slice (from the invariant degrees of W_P), and only the tiny system
//     c(p) = x remains to be solved.  This is what makes the large ranks
//     tractable.

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "chow/chowring.hpp"
#include "chow/linalg.hpp"
#include "chow/poly.hpp"
#include "chow/polyops.hpp"

namespace chow {

enum class PreimageVariant { kDelta, kInvariance, kAnsatz, kAuto };

inline std::string to_string(PreimageVariant v) {
  switch (v) {
    case PreimageVariant::kDelta: return "delta";
    case PreimageVariant::kInvariance: return "invariance";
    case PreimageVariant::kAnsatz: return "ansatz";
    case PreimageVariant::kAuto: return "auto";
  }
  return "?";
}

inline PreimageVariant parse_variant(const std::string& s) {
  if (s == "delta") return PreimageVariant::kDelta;
  if (s == "invariance") return PreimageVariant::kInvariance;
  if (s == "ansatz") return PreimageVariant::kAnsatz;
  if (s == "auto") return PreimageVariant::kAuto;
  throw std::invalid_argument("unknown preimage variant: " + s);
}

/// All exponent keys of total degree k in the first `rank` variables,
/// grevlex-descending (deterministic).
inline std::vector<uint64_t> monomials_of_degree(int rank, int k) {
  std::vector<uint64_t> out;
  ExpVec e{};
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == rank - 1) {
      e[static_cast<size_t>(var)] = static_cast<uint8_t>(left);
      out.push_back(pack_exp(e));
      e[static_cast<size_t>(var)] = 0;
      return;
    }
    for (int t = left; t >= 0; --t) {
      e[static_cast<size_t>(var)] = static_cast<uint8_t>(t);
      self(self, var + 1, left - t);
    }
    e[static_cast<size_t>(var)] = 0;
  };
  if (rank == 0) throw std::invalid_argument("rank must be positive");
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(), [](uint64_t a, uint64_t b) { return grevlex_less(b, a); });
  return out;
}

/// Name of an unknown coefficient in the a[e1,...,el] notation.
inline std::string monomial_unknown_name(uint64_t key, int rank) {
  ExpVec e = unpack_exp(key);
  std::string s = "a[";
  for (int i = 0; i < rank; ++i) {
    if (i) s += ",";
    s += std::to_string(static_cast<int>(e[static_cast<size_t>(i)]));
  }
  return s + "]";
}

struct GenericSystem {
  std::vector<uint64_t> monomials;  // the unknowns, one per degree-k monomial
  std::vector<std::vector<Rational>> rows;  // constraint + normalization rows
  std::vector<Rational> rhs;
  int num_constraint_rows = 0;  // leading rows; the rest are c(p) = x rows

  LinearSystem to_linear_system() const {
    LinearSystem sys(static_cast<int>(monomials.size()));
    for (size_t r = 0; r < rows.size(); ++r) sys.add_equation(rows[r], rhs[r]);
    return sys;
  }

  /// Distinct nonzero constraint rows, each scaled so that its first
  /// nonzero entry is 1 (normalization rows are passed through unscaled).
  std::vector<std::pair<std::vector<Rational>, Rational>> unique_rows() const {
    std::set<std::pair<std::vector<Rational>, Rational>> seen;
    for (size_t r = 0; r < rows.size(); ++r) {
      std::vector<Rational> row = rows[r];
      Rational b = rhs[r];
      if (static_cast<int>(r) < num_constraint_rows) {
        Rational lead = 0;
        for (const Rational& v : row)
          if (v != 0) {
            lead = v;
            break;
          }
        if (lead == 0) continue;
        for (Rational& v : row) v /= lead;
        b /= lead;
      }
      seen.emplace(std::move(row), std::move(b));
    }
    return {seen.begin(), seen.end()};
  }

  /// Human-readable equations in the a[...] unknowns.
  std::vector<std::string> render(int rank) const {
    std::vector<std::string> out;
    for (const auto& [row, b] : unique_rows()) {
      std::ostringstream os;
      bool first = true;
      for (size_t j = 0; j < row.size(); ++j) {
        if (row[j] == 0) continue;
        Rational c = row[j];
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
        if (c != 1) os << c.get_str() << "*";
        os << monomial_unknown_name(monomials[j], rank);
      }
      if (first) os << "0";
      os << " = " << b.get_str();
      out.push_back(os.str());
    }
    return out;
  }
};

struct PreimageResult {
  Polynomial polynomial;   // particular solution (free parameters set to 0)
  SolutionSpace space;     // full affine solution set in the unknowns
  std::vector<uint64_t> monomials;  // unknown order (generic routes only)
  PreimageVariant variant = PreimageVariant::kAuto;

  Polynomial family_member(const std::vector<Rational>& params) const {
    std::vector<Rational> a = space.at(params);
    std::vector<Polynomial::Term> ts;
    for (size_t j = 0; j < monomials.size(); ++j)
      if (a[j] != 0) ts.emplace_back(monomials[j], a[j]);
    return Polynomial::from_terms(std::move(ts));
  }
};

class PreimageSolver {
 public:
  explicit PreimageSolver(const ChowRing& ring) : R_(ring), ops_(ring.roots()) {}

  /// Build the undetermined-coefficient system for c(p) = x in codim k.
  GenericSystem build_generic_system(const ChowClass& x, int k, PreimageVariant variant) {
    const RootSystem& rs = R_.roots();
    const WeylGroup& wg = R_.weyl();
    GenericSystem sys;
    sys.monomials = monomials_of_degree(rs.rank(), k);
    size_t n = sys.monomials.size();
    std::vector<Polynomial> mono(n);
    for (size_t j = 0; j < n; ++j)
      mono[j] = Polynomial::from_terms({{sys.monomials[j], Rational(1)}});

    if (variant == PreimageVariant::kDelta) {
      // Delta_w(p) = 0 for every length-k w that is not a minimal coset
      // representative (those index basis classes of the subring).
      for (const WeylElement& w : wg.elements_of_length(k)) {
        if (wg.is_minimal_coset_rep(w, R_.theta())) continue;
        std::vector<int> word = wg.reduced_word(w);
        std::vector<Rational> row(n, Rational(0));
        bool nonzero = false;
        for (size_t j = 0; j < n; ++j) {
          Polynomial d = ops_.delta_word(mono[j], word);
          if (!d.is_zero()) {
            row[j] = d.constant_value();
            nonzero = true;
          }
        }
        if (nonzero) {
          sys.rows.push_back(std::move(row));
          sys.rhs.push_back(Rational(0));
        }
      }
    } else if (variant == PreimageVariant::kInvariance) {
      // s_i(p) - p = 0 coefficientwise, for every i in Theta.
      for (int i : R_.theta().theta) {
        std::map<uint64_t, std::vector<Rational>> by_monomial;
        for (size_t j = 0; j < n; ++j) {
          Polynomial diff = ops_.simple_reflect(mono[j], i) - mono[j];
          for (const auto& [key, c] : diff.terms()) {
            auto& row = by_monomial[key];
            row.resize(n, Rational(0));
            row[j] = c;
          }
        }
        for (auto& [key, row] : by_monomial) {
          row.resize(n, Rational(0));
          sys.rows.push_back(std::move(row));
          sys.rhs.push_back(Rational(0));
        }
      }
    } else {
      throw std::invalid_argument("build_generic_system needs delta or invariance");
    }
    sys.num_constraint_rows = static_cast<int>(sys.rows.size());

    // Normalization rows: coefficient of each basis class of codim k.
    for (int id : R_.classes_at(k)) {
      std::vector<Rational> row(n, Rational(0));
      for (size_t j = 0; j < n; ++j) row[j] = R_.delta_coefficient(mono[j], id);
      sys.rows.push_back(std::move(row));
      auto it = x.coeff.find(id);
      sys.rhs.push_back(it == x.coeff.end() ? Rational(0) : it->second);
    }
    return sys;
  }

  PreimageResult solve_generic(const ChowClass& x, int k, PreimageVariant variant) {
    GenericSystem sys = build_generic_system(x, k, variant);
    auto sol = sys.to_linear_system().solve();
    if (!sol) throw std::runtime_error("preimage system is inconsistent");
    PreimageResult res;
    res.space = std::move(*sol);
    res.monomials = sys.monomials;
    res.variant = variant;
    std::vector<Polynomial::Term> ts;
    for (size_t j = 0; j < res.monomials.size(); ++j)
      if (res.space.particular[j] != 0) ts.emplace_back(res.monomials[j], res.space.particular[j]);
    res.polynomial = Polynomial::from_terms(std::move(ts));
    return res;
  }

  /// Candidate basis for the degree-k slice of the W_P-invariant
  /// subalgebra: products of the fixed fundamental weight w_p and power
  /// sums over W_P-orbits of fundamental weights.  Certified to span the
  /// whole slice by comparing with the dimension predicted by the
  /// invariant degrees of W_P.
  std::vector<Polynomial> invariant_slice_basis(int k) {
    auto it = slice_cache_.find(k);
    if (it != slice_cache_.end()) return it->second;
    const RootSystem& rs = R_.roots();
    std::vector<int> sub_deg = rs.sub_degrees(R_.theta().theta);
    // Generator degrees of the full invariant subalgebra: 1 (the fixed
    // weight) plus the invariant degrees of the semisimple part of W_P.
    std::vector<int> gen_degrees{1};
    for (int d : sub_deg)
      if (d <= k) gen_degrees.push_back(d);
    long long expected = slice_dimension(gen_degrees, k);

    // Generator polynomials, tried orbit by orbit until the candidate
    // products span a subspace of the expected dimension.
    std::vector<std::pair<int, Polynomial>> gens;  // (degree, polynomial)
    gens.emplace_back(1, Polynomial::variable(R_.omitted()));
    std::vector<int> orbit_sources = orbit_order();
    std::vector<Polynomial> cands;
    for (size_t oi = 0; oi <= orbit_sources.size(); ++oi) {
      if (oi > 0) {
        std::vector<std::vector<Rational>> orb =
            weight_orbit(orbit_sources[oi - 1]);
        for (int d : sub_deg) {
          if (d > k) continue;
          Polynomial ps = power_sum(orb, d);
          if (!ps.is_zero()) gens.emplace_back(d, std::move(ps));
        }
      }
      cands = degree_products(gens, k);
      if (span_rank(cands, k) == expected) {
        slice_cache_.emplace(k, cands);
        return cands;
      }
    }
    throw std::runtime_error("invariant slice basis is rank-deficient");
  }

  /// Ansatz route: solve c(p) = x inside the invariant slice.
  PreimageResult solve_ansatz(const ChowClass& x, int k) {
    std::vector<Polynomial> basis = invariant_slice_basis(k);
    LinearSystem sys(static_cast<int>(basis.size()));
    for (int id : R_.classes_at(k)) {
      std::vector<Rational> row(basis.size(), Rational(0));
      for (size_t b = 0; b < basis.size(); ++b)
        row[b] = R_.delta_coefficient(basis[b], id);
      auto it = x.coeff.find(id);
      sys.add_equation(std::move(row), it == x.coeff.end() ? Rational(0) : it->second);
    }
    auto sol = sys.solve();
    if (!sol) throw std::runtime_error("ansatz preimage system is inconsistent");
    PreimageResult res;
    res.space = std::move(*sol);
    res.variant = PreimageVariant::kAnsatz;
    Polynomial p;
    for (size_t b = 0; b < basis.size(); ++b)
      if (res.space.particular[b] != 0) p += basis[b] * res.space.particular[b];
    res.polynomial = std::move(p);
    return res;
  }

  /// Route selection: generic delta system for small rank, invariant
  /// ansatz for the large ones.
  PreimageResult preimage(const ChowClass& x, int k,
                          PreimageVariant variant = PreimageVariant::kAuto) {
    if (variant == PreimageVariant::kAuto)
      variant = R_.roots().rank() <= 4 ? PreimageVariant::kDelta : PreimageVariant::kAnsatz;
    PreimageResult res = variant == PreimageVariant::kAnsatz ? solve_ansatz(x, k)
                                                             : solve_generic(x, k, variant);
    // Round-trip verification: the particular solution must map back to x.
    ChowClass back = R_.c_restricted(res.polynomial);
    ChowClass want = x;
    if (!(back == want)) throw std::logic_error("preimage round-trip failed");
    return res;
  }

  /// Orbit of the j-th fundamental weight under W_P, as rational weight
  /// coordinate vectors.
  std::vector<std::vector<Rational>> weight_orbit(int j) const {
    const RootSystem& rs = R_.roots();
    std::vector<Rational> start(static_cast<size_t>(rs.rank()), Rational(0));
    start[static_cast<size_t>(j)] = 1;
    std::vector<std::vector<Rational>> orbit{start};
    std::set<std::vector<Rational>> seen{start};
    for (size_t q = 0; q < orbit.size(); ++q) {
      std::vector<Rational> cur = orbit[q];
      for (int t : R_.theta().theta) {
        std::vector<Rational> img =
            rs.reflect_weight(rs.simple_root_index(t), cur);
        if (seen.insert(img).second) orbit.push_back(std::move(img));
      }
    }
    return orbit;
  }

  /// Power sum sum_{mu in orbit} (linear form of mu)^d.
  Polynomial power_sum(const std::vector<std::vector<Rational>>& orbit, int d) const {
    int rank = R_.roots().rank();
    Polynomial total;
    for (const auto& mu : orbit) {
      Polynomial form = Polynomial::linear_form(mu, rank);
      Polynomial pw = Polynomial::constant(Rational(1));
      for (int t = 0; t < d; ++t) pw *= form;
      total += pw;
    }
    return total;
  }

  /// Dimension of the degree-k slice of a free graded algebra with the
  /// given generator degrees (coefficient of q^k in prod 1/(1-q^d)).
  static long long slice_dimension(const std::vector<int>& gen_degrees, int k) {
    std::vector<long long> dp(static_cast<size_t>(k) + 1, 0);
    dp[0] = 1;
    for (int d : gen_degrees)
      for (int t = d; t <= k; ++t) dp[static_cast<size_t>(t)] += dp[static_cast<size_t>(t) - d];
    return dp[static_cast<size_t>(k)];
  }

 private:
  /// Fundamental weights of Theta nodes ordered by orbit size (ascending).
  std::vector<int> orbit_order() const {
    std::vector<std::pair<size_t, int>> sized;
    for (int t : R_.theta().theta) sized.emplace_back(weight_orbit(t).size(), t);
    std::sort(sized.begin(), sized.end());
    std::vector<int> out;
    for (auto& [s, t] : sized) out.push_back(t);
    return out;
  }

  /// All products of the generators with total degree exactly k.
  static std::vector<Polynomial> degree_products(
      const std::vector<std::pair<int, Polynomial>>& gens, int k) {
    std::vector<Polynomial> out;
    Polynomial acc = Polynomial::constant(Rational(1));
    auto rec = [&](auto&& self, size_t g, int left, const Polynomial& prod) -> void {
      if (left == 0) {
        out.push_back(prod);
        return;
      }
      if (g == gens.size()) return;
      self(self, g + 1, left, prod);
      if (gens[g].first <= left) self(self, g, left - gens[g].first, prod * gens[g].second);
    };
    rec(rec, 0, k, acc);
    return out;
  }

  /// Rank of the span of the candidate polynomials within degree k.
  static long long span_rank(const std::vector<Polynomial>& cands, int k) {
    // Index monomials on the fly.
    std::map<uint64_t, int> col;
    std::vector<std::vector<std::pair<int, Rational>>> sparse_rows;
    for (const Polynomial& p : cands) {
      std::vector<std::pair<int, Rational>> row;
      for (const auto& [key, c] : p.terms()) {
        auto [it, fresh] = col.emplace(key, static_cast<int>(col.size()));
        row.emplace_back(it->second, c);
      }
      sparse_rows.push_back(std::move(row));
    }
    // Eliminate candidate by candidate (few rows, wide columns).
    std::vector<std::map<int, Rational>> reduced;
    long long rank = 0;
    for (auto& row : sparse_rows) {
      std::map<int, Rational> r(row.begin(), row.end());
      bool changed = true;
      while (changed && !r.empty()) {
        changed = false;
        for (const auto& pivot : reduced) {
          if (r.empty()) break;
          auto lead = pivot.begin();
          auto it = r.find(lead->first);
          if (it == r.end()) continue;
          Rational f = it->second / lead->second;
          for (const auto& [c, v] : pivot) {
            auto jt = r.find(c);
            if (jt == r.end())
              r.emplace(c, -f * v);
            else {
              jt->second -= f * v;
              if (jt->second == 0) r.erase(jt);
            }
          }
          changed = true;
        }
      }
      if (!r.empty()) {
        reduced.push_back(std::move(r));
        ++rank;
      }
    }
    return rank;
  }

  const ChowRing& R_;
  PolyOps ops_;
  std::map<int, std::vector<Polynomial>> slice_cache_;
};

}  // namespace chow
