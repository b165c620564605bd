#pragma once

// Seeded generators of random scalars, cochains and lattice functions for
// property checks.

#include <lbv/cochain.hpp>
#include <lbv/scalar.hpp>

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace lbv {

struct GeneratorOptions {
  Site siteLo = -6;
  Site siteHi = 6;
  int maxPolynomialDegree = 4;
  int maxTerms = 4;
  bool symbolicCoefficients = true;
};

class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}
  /// Independent stream per label, so adding a check does not shift others.
  RandomSource(std::uint64_t seed, std::string_view label) : rng_(seed ^ fnv1a(label)) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Rational rational() {
    int num = uniform(-9, 9);
    int den = uniform(1, 4);
    return makeRational(num, den);
  }
  Rational nonzeroRational() {
    Rational r;
    while ((r = rational()) == 0) {
    }
    return r;
  }

  Scalar scalar(bool symbolic = true) {
    Scalar s;
    int terms = uniform(1, 3);
    for (int i = 0; i < terms; ++i)
      s += symbolic ? Scalar::monomial(nonzeroRational(), uniform(0, 2), uniform(-2, 2)) : Scalar(nonzeroRational());
    return s;
  }
  Scalar nonzeroScalar(bool symbolic = true) {
    Scalar s;
    while ((s = scalar(symbolic)).isZero()) {
    }
    return s;
  }

  /// A monomial of polynomial degree exactly `degree` with at most `odd` antifields.
  Monomial monomial(const GeneratorOptions& o, int degree, int maxOdd) {
    std::vector<Site> odd;
    int wantOdd = uniform(0, std::min(maxOdd, degree));
    for (int i = 0; i < wantOdd; ++i) odd.push_back(uniform(o.siteLo, o.siteHi));
    std::vector<Monomial::FieldPower> fields;
    for (int i = wantOdd; i < degree; ++i) fields.push_back({uniform(o.siteLo, o.siteHi), 1});
    auto [sign, m] = Monomial::canonical(fields, odd);
    if (sign == 0) return monomial(o, degree, maxOdd);
    return m;
  }

  Cochain cochain(const GeneratorOptions& o = {}) {
    Cochain c;
    int terms = uniform(1, o.maxTerms);
    for (int i = 0; i < terms; ++i)
      c.addTerm(monomial(o, uniform(0, o.maxPolynomialDegree), o.maxPolynomialDegree),
                nonzeroScalar(o.symbolicCoefficients));
    return c;
  }

  /// Purely even cochain (degree 0).
  Cochain evenCochain(const GeneratorOptions& o = {}) {
    Cochain c;
    int terms = uniform(1, o.maxTerms);
    for (int i = 0; i < terms; ++i)
      c.addTerm(monomial(o, uniform(0, o.maxPolynomialDegree), 0), nonzeroScalar(o.symbolicCoefficients));
    return c;
  }

  /// Homogeneous cochain of cohomological degree -k.
  Cochain homogeneousCochain(int k, const GeneratorOptions& o = {}) {
    Cochain c;
    int terms = uniform(1, o.maxTerms);
    for (int i = 0; i < terms; ++i) {
      std::vector<Site> odd;
      for (int j = 0; j < k; ++j) odd.push_back(uniform(o.siteLo, o.siteHi));
      std::vector<Monomial::FieldPower> fields;
      int evenDegree = uniform(0, std::max(0, o.maxPolynomialDegree - k));
      for (int j = 0; j < evenDegree; ++j) fields.push_back({uniform(o.siteLo, o.siteHi), 1});
      auto [sign, m] = Monomial::canonical(fields, odd);
      if (sign != 0) c.addTerm(m, nonzeroScalar(o.symbolicCoefficients));
    }
    return c;
  }

  LatticeFunction function(Site lo, Site hi, bool symbolic = true, int maxPoints = 4) {
    LatticeFunction f;
    int points = uniform(1, maxPoints);
    for (int i = 0; i < points; ++i) f.add(uniform(lo, hi), scalar(symbolic));
    return f;
  }
  LatticeFunction nonzeroFunction(Site lo, Site hi, bool symbolic = true, int maxPoints = 4) {
    LatticeFunction f;
    while ((f = function(lo, hi, symbolic, maxPoints)).isZero()) {
    }
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    return h;
  }

  std::mt19937_64 rng_;
};

}  // namespace lbv
