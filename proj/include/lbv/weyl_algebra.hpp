#pragma once

// The Weyl algebra K<q,p>/(pq - qp = hbar) over Q[hbar][alpha^+-1], stored in
// normal order: every basis element is q^a p^b.

#include <lbv/scalar.hpp>

#include <map>
#include <string>
#include <utility>

namespace lbv {

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

inline Rational factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(r);
}

class WeylElement {
 public:
  using Exponents = std::pair<int, int>;  // (q power, p power)
  using TermMap = std::map<Exponents, Scalar>;

  WeylElement() = default;
  WeylElement(const Scalar& s) {  // NOLINT(google-explicit-constructor)
    if (!s.isZero()) terms_.emplace(Exponents{0, 0}, s);
  }
  WeylElement(int c) : WeylElement(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static WeylElement basis(int qPower, int pPower, const Scalar& coeff = Scalar(1)) {
    if (qPower < 0 || pPower < 0) throw std::invalid_argument("negative Weyl exponent");
    WeylElement w;
    if (!coeff.isZero()) w.terms_.emplace(Exponents{qPower, pPower}, coeff);
    return w;
  }
  static WeylElement q() { return basis(1, 0); }
  static WeylElement p() { return basis(0, 1); }

  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }

  Scalar coefficient(int qPower, int pPower) const {
    auto it = terms_.find({qPower, pPower});
    return it == terms_.end() ? Scalar() : it->second;
  }

  int degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }

  bool dependsOnAlpha() const {
    for (const auto& [e, c] : terms_)
      if (c.dependsOnAlpha()) return true;
    return false;
  }

  void addTerm(int qPower, int pPower, const Scalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(Exponents{qPower, pPower}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  WeylElement& operator+=(const WeylElement& o) {
    for (const auto& [e, c] : o.terms_) addTerm(e.first, e.second, c);
    return *this;
  }
  WeylElement& operator-=(const WeylElement& o) {
    for (const auto& [e, c] : o.terms_) addTerm(e.first, e.second, -c);
    return *this;
  }
  WeylElement operator-() const {
    WeylElement r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const Scalar& s, const WeylElement& w) {
    WeylElement r;
    for (const auto& [e, c] : w.terms_) r.addTerm(e.first, e.second, s * c);
    return r;
  }
  friend bool operator==(const WeylElement&, const WeylElement&) = default;

  /// Applies the coefficient map f to every coefficient.
  template <class F>
  WeylElement mapCoefficients(F&& f) const {
    WeylElement r;
    for (const auto& [e, c] : terms_) r.addTerm(e.first, e.second, f(c));
    return r;
  }

  /// Renders as a sum of `coeff*q^a*p^b` in normal order.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      auto append = [&mono](const std::string& s) {
        if (!mono.empty()) mono += "*";
        mono += s;
      };
      if (e.first > 0) append(e.first == 1 ? "q" : "q^" + std::to_string(e.first));
      if (e.second > 0) append(e.second == 1 ? "p" : "p^" + std::to_string(e.second));
      bool negative = false;
      std::string coeff;
      if (c.size() == 1) {
        negative = c.terms().front().coeff < 0;
        coeff = (negative ? -c : c).str();
      } else {
        coeff = "(" + c.str() + ")";
      }
      out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
      first = false;
      if (mono.empty())
        out += coeff;
      else if (coeff == "1")
        out += mono;
      else
        out += coeff + "*" + mono;
    }
    return out;
  }

 private:
  TermMap terms_;
};

/// Normal-ordered product using
///   p^b q^c = sum_k C(b,k) C(c,k) k! hbar^k q^(c-k) p^(b-k).
inline WeylElement weylMul(const WeylElement& x, const WeylElement& y, const Scalar& hbar = Scalar::hbar()) {
  WeylElement r;
  for (const auto& [ex, cx] : x.terms()) {
    for (const auto& [ey, cy] : y.terms()) {
      auto [a, b] = ex;
      auto [c, d] = ey;
      Scalar base = cx * cy;
      for (int k = 0; k <= std::min(b, c); ++k) {
        Rational combinatorial = binomial(b, k) * binomial(c, k) * factorial(k);
        r.addTerm(a + c - k, b + d - k, base * Scalar(combinatorial) * hbar.pow(k));
      }
    }
  }
  return r;
}

inline WeylElement weylPow(const WeylElement& x, int n, const Scalar& hbar = Scalar::hbar()) {
  WeylElement r(1);
  for (int i = 0; i < n; ++i) r = weylMul(r, x, hbar);
  return r;
}

}  // namespace lbv
