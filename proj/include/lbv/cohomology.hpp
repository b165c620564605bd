#pragma once

// Brute-force cohomology of truncated quantum observables by exact rank
// computations over Q.
//
// The truncation keeps monomials in the legal generators of an interval with
// total polynomial degree <= maxdeg. d preserves polynomial degree and Delta
// lowers it by two, so this is a subcomplex. An optional lower bound mindeg
// passes to the quotient by lower-degree monomials.

#include <lbv/cochain.hpp>
#include <lbv/complex.hpp>
#include <lbv/interval.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lbv {

struct TruncationSpec {
  Interval interval;
  int maxdeg = 0;
  Rational hval = 1;
  Rational aval = 1;
  int mindeg = 0;
};

inline constexpr std::size_t kMaxTruncationBasis = 20000;

/// Incremental row echelon form over Q for sparse vectors.
class SparseEchelon {
 public:
  using Entry = std::pair<std::size_t, Rational>;
  using Row = std::vector<Entry>;  // sorted by column, no zeros

  /// Adds v to the span; returns true iff it was independent.
  bool insert(Row v) {
    std::size_t idx = 0;
    while (idx < v.size()) {
      auto pivot = pivots_.find(v[idx].first);
      if (pivot == pivots_.end()) {
        ++idx;
        continue;
      }
      Rational factor = v[idx].second;
      Row merged;
      merged.reserve(v.size() + pivot->second.size());
      merged.insert(merged.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(idx));
      auto a = v.begin() + static_cast<std::ptrdiff_t>(idx);
      auto b = pivot->second.begin();
      while (a != v.end() || b != pivot->second.end()) {
        if (b == pivot->second.end() || (a != v.end() && a->first < b->first)) {
          merged.push_back(std::move(*a++));
        } else if (a == v.end() || b->first < a->first) {
          merged.push_back({b->first, -factor * b->second});
          ++b;
        } else {
          Rational c = a->second - factor * b->second;
          if (c != 0) merged.push_back({a->first, std::move(c)});
          ++a;
          ++b;
        }
      }
      v = std::move(merged);
    }
    if (v.empty()) return false;
    Rational lead = v.front().second;
    for (auto& e : v) e.second /= lead;
    pivots_.emplace(v.front().first, std::move(v));
    return true;
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, Row> pivots_;
};

/// Monomial basis of a truncation, graded by cohomological degree.
class TruncatedBasis {
 public:
  explicit TruncatedBasis(const TruncationSpec& t) : spec_(t) {
    if (t.maxdeg < 0) throw std::invalid_argument("maxdeg must be non-negative");
    if (t.aval == 0) throw std::domain_error("alpha must be specialized to a nonzero rational");
    auto fields = t.interval.fieldSites();
    auto antifields = t.interval.antifieldSites();
    std::size_t total = 0;
    int maxOdd = std::min<int>(t.maxdeg, static_cast<int>(antifields.size()));
    for (int k = 0; k <= maxOdd; ++k) {
      auto& bucket = byDegree_[-k];
      std::vector<Site> chosen;
      forEachSubset(antifields, k, 0, chosen, [&](const std::vector<Site>& odd) {
        int lo = std::max(0, t.mindeg - k), hi = t.maxdeg - k;
        std::vector<Monomial::FieldPower> powers;
        forEachEven(fields, 0, lo, hi, powers, [&](const std::vector<Monomial::FieldPower>& even) {
          auto [sign, m] = Monomial::canonical(even, odd);
          bucket.push_back(std::move(m));
          if (++total > kMaxTruncationBasis)
            throw std::length_error("truncation basis exceeds " + std::to_string(kMaxTruncationBasis) + " monomials");
        });
      });
      for (std::size_t i = 0; i < bucket.size(); ++i) index_[-k][bucket[i]] = i;
    }
  }

  const TruncationSpec& spec() const { return spec_; }
  int lowestDegree() const { return byDegree_.empty() ? 0 : byDegree_.begin()->first; }
  const std::vector<Monomial>& inDegree(int k) const {
    static const std::vector<Monomial> empty;
    auto it = byDegree_.find(k);
    return it == byDegree_.end() ? empty : it->second;
  }
  std::optional<std::size_t> indexOf(const Monomial& m) const {
    auto bucket = index_.find(m.cohomologicalDegree());
    if (bucket == index_.end()) return std::nullopt;
    auto it = bucket->second.find(m);
    if (it == bucket->second.end()) return std::nullopt;
    return it->second;
  }

  /// Column vector of d_hbar(m) in degree k+1, with the truncation applied.
  SparseEchelon::Row image(const Monomial& m, const ModelParams& params) const {
    Cochain dm = dQuantum(Cochain(m), params);
    SparseEchelon::Row row;
    for (const auto& [n, v] : dm.terms()) {
      if (n.polynomialDegree() < spec_.mindeg) continue;
      auto idx = indexOf(n);
      if (!idx) throw std::logic_error("d_hbar left the truncation at " + n.str());
      auto value = v.constantValue();
      if (!value) throw std::logic_error("non-constant matrix entry " + v.str());
      row.push_back({*idx, *value});
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return row;
  }

 private:
  template <class F>
  static void forEachSubset(const std::vector<Site>& sites, int k, std::size_t from, std::vector<Site>& chosen, F&& f) {
    if (static_cast<int>(chosen.size()) == k) {
      f(chosen);
      return;
    }
    for (std::size_t i = from; i < sites.size(); ++i) {
      chosen.push_back(sites[i]);
      forEachSubset(sites, k, i + 1, chosen, f);
      chosen.pop_back();
    }
  }

  template <class F>
  static void forEachEven(const std::vector<Site>& sites, std::size_t from, int lo, int budget,
                          std::vector<Monomial::FieldPower>& powers, F&& f) {
    int used = 0;
    for (const auto& fp : powers) used += fp.second;
    if (from == sites.size()) {
      if (used >= lo) f(powers);
      return;
    }
    for (int e = 0; used + e <= budget; ++e) {
      if (e > 0) powers.push_back({sites[from], e});
      forEachEven(sites, from + 1, lo, budget, powers, f);
      if (e > 0) powers.pop_back();
    }
  }

  TruncationSpec spec_;
  std::map<int, std::vector<Monomial>> byDegree_;
  std::map<int, std::map<Monomial, std::size_t>> index_;
};

namespace detail {
inline std::size_t rankOfDifferential(const TruncatedBasis& basis, int degree, const ModelParams& params) {
  SparseEchelon echelon;
  for (const auto& m : basis.inDegree(degree)) echelon.insert(basis.image(m, params));
  return echelon.rank();
}
}  // namespace detail

/// dim H^k of the truncated complex for every degree k present.
inline std::map<int, std::size_t> cohomologyOracle(const TruncationSpec& t) {
  TruncatedBasis basis(t);
  ModelParams params = ModelParams::specialized(t.hval, t.aval);
  std::map<int, std::size_t> ranks;  // rank of d: C^k -> C^(k+1)
  for (int k = basis.lowestDegree(); k < 0; ++k) ranks[k] = detail::rankOfDifferential(basis, k, params);
  std::map<int, std::size_t> dims;
  for (int k = basis.lowestDegree(); k <= 0; ++k) {
    std::size_t outgoing = ranks.count(k) ? ranks[k] : 0;
    std::size_t incoming = ranks.count(k - 1) ? ranks[k - 1] : 0;
    dims[k] = basis.inDegree(k).size() - outgoing - incoming;
  }
  return dims;
}

struct InclusionReport {
  std::size_t sourceDimension = 0;
  std::size_t targetDimension = 0;
  std::size_t rank = 0;
  bool isIsomorphism() const { return sourceDimension == targetDimension && rank == sourceDimension; }
};

/// The map H^0(I) -> H^0(J) induced by inclusion, on degree <= maxdeg truncations.
inline InclusionReport inclusionOnH0(const Interval& I, const Interval& J, int maxdeg, const Rational& hval,
                                     const Rational& aval) {
  if (!J.contains(I)) throw std::invalid_argument(I.str() + " is not contained in " + J.str());
  TruncatedBasis source(TruncationSpec{I, maxdeg, hval, aval});
  TruncatedBasis target(TruncationSpec{J, maxdeg, hval, aval});
  ModelParams params = ModelParams::specialized(hval, aval);

  InclusionReport report;
  report.sourceDimension = source.inDegree(0).size() - detail::rankOfDifferential(source, -1, params);

  SparseEchelon boundaries;
  for (const auto& m : target.inDegree(-1)) boundaries.insert(target.image(m, params));
  std::size_t boundaryRank = boundaries.rank();
  report.targetDimension = target.inDegree(0).size() - boundaryRank;
  for (const auto& m : source.inDegree(0)) {
    auto idx = target.indexOf(m);
    if (!idx) throw std::logic_error("inclusion does not preserve " + m.str());
    boundaries.insert({{*idx, Rational(1)}});
  }
  report.rank = boundaries.rank() - boundaryRank;
  return report;
}

}  // namespace lbv
