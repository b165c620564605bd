#pragma once

// The colored operad of not-too-little intervals (R = 1), its morphism to the
// associative operad, the structure maps of the observables, and the lattice
// symmetries (integer translations and time reversal).

#include <lbv/cochain.hpp>
#include <lbv/cohomology.hpp>
#include <lbv/interval.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lbv {

/// Permutation of {0..n-1}; perm[i] is the image of i.
using Permutation = std::vector<int>;

inline Permutation identityPermutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

/// (outer ∘ inner)(i) = outer(inner(i)).
inline Permutation composePermutations(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("permutation sizes differ");
  Permutation r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[static_cast<std::size_t>(inner[i])];
  return r;
}

/// The order-reversing permutation k -> n-1-k.
inline Permutation reversalPermutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = n - 1 - k;
  return p;
}

/// Operadic composition in the associative operad: the block permutation
/// placing block i at position outer(i) and permuting its inside by inner[i].
inline Permutation composeAs(const Permutation& outer, const std::vector<Permutation>& inner) {
  if (outer.size() != inner.size()) throw std::invalid_argument("arity mismatch in operadic composition");
  std::size_t n = outer.size();
  std::vector<int> sizeAtPosition(n);
  for (std::size_t i = 0; i < n; ++i) sizeAtPosition[static_cast<std::size_t>(outer[i])] = static_cast<int>(inner[i].size());
  std::vector<int> offset(n, 0);
  for (std::size_t k = 1; k < n; ++k) offset[k] = offset[k - 1] + sizeAtPosition[k - 1];
  Permutation r;
  for (std::size_t i = 0; i < n; ++i)
    for (int j : inner[i]) r.push_back(offset[static_cast<std::size_t>(outer[i])] + j);
  return r;
}

struct IntervalOperation {
  std::vector<Interval> inputs;
  Interval output;

  /// Inputs pairwise disjoint and each contained in the output.
  bool isValid() const {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (!output.contains(inputs[i])) return false;
      for (std::size_t j = i + 1; j < inputs.size(); ++j)
        if (!inputs[i].disjointFrom(inputs[j])) return false;
    }
    return true;
  }
  void validate() const {
    if (!isValid()) throw std::invalid_argument("invalid interval operation into " + output.str());
  }

  IntervalOperation translated(const Rational& shift) const {
    IntervalOperation r{{}, output.translated(shift)};
    for (const auto& I : inputs) r.inputs.push_back(I.translated(shift));
    return r;
  }
  IntervalOperation reversed() const {
    IntervalOperation r{{}, output.reversed()};
    for (const auto& I : inputs) r.inputs.push_back(I.reversed());
    return r;
  }
};

/// The permutation sigma with I_{sigma^-1(0)} < I_{sigma^-1(1)} < ...,
/// i.e. sigma(i) is the left-to-right rank of input i.
inline Permutation gammaPermutation(const IntervalOperation& op) {
  op.validate();
  std::vector<int> order(op.inputs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return op.inputs[static_cast<std::size_t>(i)].lower() < op.inputs[static_cast<std::size_t>(j)].lower();
  });
  Permutation sigma(op.inputs.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) sigma[static_cast<std::size_t>(order[rank])] = static_cast<int>(rank);
  return sigma;
}

/// Substitutes inner[i] into input i of outer. Inner outputs must equal the
/// corresponding outer inputs.
inline IntervalOperation composeOperations(const IntervalOperation& outer, const std::vector<IntervalOperation>& inner) {
  if (outer.inputs.size() != inner.size()) throw std::invalid_argument("arity mismatch in operadic composition");
  IntervalOperation r{{}, outer.output};
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (!(inner[i].output == outer.inputs[i])) throw std::invalid_argument("colors do not match in composition");
    r.inputs.insert(r.inputs.end(), inner[i].inputs.begin(), inner[i].inputs.end());
  }
  return r;
}

/// Structure map of the observables: include each argument into J and multiply
/// in argument order.
inline Cochain factorizationProduct(const std::vector<std::pair<Cochain, Interval>>& args, const Interval& J) {
  IntervalOperation op{{}, J};
  for (const auto& [c, I] : args) {
    if (!supportWithin(c, I)) throw std::invalid_argument("argument " + c.str() + " is not supported in " + I.str());
    op.inputs.push_back(I);
  }
  op.validate();
  Cochain product(1);
  for (const auto& [c, I] : args) product = multiply(product, c);
  return product;
}

/// Structure map of the two-term complexes: the pointwise sum.
inline LatticeFunction sumOperationV(const std::vector<std::pair<LatticeFunction, Interval>>& args,
                                     const Interval& J) {
  IntervalOperation op{{}, J};
  for (const auto& [f, I] : args) {
    if (!supportWithin(f, I)) throw std::invalid_argument("argument " + f.str() + " is not supported in " + I.str());
    op.inputs.push_back(I);
  }
  op.validate();
  LatticeFunction sum;
  for (const auto& [f, I] : args) sum += f;
  return sum;
}

/// Element x -> (reverse ? -x : x) + shift of Z ⋊ C2.
struct LatticeSymmetry {
  int shift = 0;
  bool reverse = false;

  static LatticeSymmetry translation(int n) { return {n, false}; }
  static LatticeSymmetry timeReversal() { return {0, true}; }

  Site operator()(Site x) const { return (reverse ? -x : x) + shift; }

  /// (*this ∘ other)(x) = (*this)(other(x)).
  LatticeSymmetry after(const LatticeSymmetry& other) const {
    return {(reverse ? -other.shift : other.shift) + shift, reverse != other.reverse};
  }
  LatticeSymmetry inverse() const { return {reverse ? shift : -shift, reverse}; }

  Interval operator()(const Interval& I) const { return (reverse ? I.reversed() : I).translated(shift); }
  IntervalOperation operator()(const IntervalOperation& op) const {
    return (reverse ? op.reversed() : op).translated(shift);
  }

  Cochain operator()(const Cochain& c) const {
    Cochain r;
    for (const auto& [m, v] : c.terms()) {
      std::vector<Monomial::FieldPower> fields;
      for (const auto& [s, e] : m.fields()) fields.push_back({(*this)(s), e});
      std::vector<Site> odd;
      for (Site s : m.antifields()) odd.push_back((*this)(s));
      auto [sign, n] = Monomial::canonical(std::move(fields), std::move(odd));
      r.addTerm(std::move(n), sign > 0 ? v : -v);
    }
    return r;
  }
  LatticeFunction operator()(const LatticeFunction& f) const {
    LatticeFunction r;
    for (const auto& [x, v] : f.values()) r.add((*this)(x), v);
    return r;
  }

  friend bool operator==(const LatticeSymmetry&, const LatticeSymmetry&) = default;
};

/// Every site shifted by n: delta[x] -> delta[x+n], bdelta[x] -> bdelta[x+n].
inline Cochain translate(const Cochain& c, int n) { return LatticeSymmetry::translation(n)(c); }
inline LatticeFunction translate(const LatticeFunction& f, int n) { return LatticeSymmetry::translation(n)(f); }

/// Every site negated, antifields re-sorted with their Koszul sign.
inline Cochain timeReversal(const Cochain& c) { return LatticeSymmetry::timeReversal()(c); }
inline LatticeFunction timeReversal(const LatticeFunction& f) { return LatticeSymmetry::timeReversal()(f); }

/// Whether I ⊂ J induces an isomorphism on truncated degree-0 cohomology.
inline bool localConstancyCheck(const Interval& I, const Interval& J, int maxdeg, const Rational& hval,
                                const Rational& aval) {
  if (!J.contains(I)) throw std::invalid_argument(I.str() + " is not contained in " + J.str());
  return inclusionOnH0(I, J, maxdeg, hval, aval).isIsomorphism();
}

}  // namespace lbv
