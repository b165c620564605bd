#pragma once

// Exact coefficient ring Q[hbar][alpha, alpha^-1].
//
// A Scalar is a finite sum of terms c * hbar^h * alpha^a with c a nonzero
// rational, h >= 0 and a any integer. Terms are kept sorted by (h, a) with
// no zero coefficients, so structural equality is ring equality.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lbv {

using Rational = mpq_class;

/// Parses `p`, `p/q`, or a finite decimal such as `-2.5`.
inline Rational parseRational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto digitsOnly = [](std::string_view v, bool allowSign) {
    if (v.empty()) return false;
    std::size_t i = 0;
    if (allowSign && (v[0] == '-' || v[0] == '+')) ++i;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return false;
    return true;
  };
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool negative = !whole.empty() && whole[0] == '-';
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (!digitsOnly(whole, false) || (!frac.empty() && !digitsOnly(frac, false)))
      throw std::invalid_argument("malformed rational literal '" + s + "'");
    Rational value(mpz_class(whole + frac, 10), mpz_class("1" + std::string(frac.size(), '0'), 10));
    value.canonicalize();
    return negative ? Rational(-value) : value;
  }
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digitsOnly(s, true)) throw std::invalid_argument("malformed rational literal '" + s + "'");
    if (s[0] == '+') s.erase(0, 1);
    return Rational(mpz_class(s, 10));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!digitsOnly(num, true) || !digitsOnly(den, false))
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den, 10);
  if (d == 0) throw std::domain_error("zero denominator in '" + s + "'");
  Rational value(mpz_class(num, 10), d);
  value.canonicalize();
  return value;
}

inline std::string toString(const Rational& r) { return r.get_str(); }

/// n/d in lowest terms.
inline Rational makeRational(long n, long d) {
  if (d == 0) throw std::domain_error("zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline Rational rationalPow(Rational base, int exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    base = 1 / base;
    exponent = -exponent;
  }
  Rational result = 1;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

class Scalar {
 public:
  struct Term {
    int hbar = 0;   // >= 0
    int alpha = 0;  // any integer
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
  };

  Scalar() = default;
  Scalar(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (c != 0) terms_.push_back({0, 0, canonical(c)});
  }
  Scalar(int c) : Scalar(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Scalar monomial(const Rational& c, int hbarPower, int alphaPower) {
    if (hbarPower < 0) throw std::domain_error("negative hbar power is not in Q[hbar]");
    Scalar s;
    if (c != 0) s.terms_.push_back({hbarPower, alphaPower, canonical(c)});
    return s;
  }
  static Scalar hbar(int power = 1) { return monomial(1, power, 0); }
  static Scalar alpha(int power = 1) { return monomial(1, 0, power); }

  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool isConstant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].hbar == 0 && terms_[0].alpha == 0);
  }
  std::optional<Rational> constantValue() const {
    if (terms_.empty()) return Rational(0);
    if (isConstant()) return terms_[0].coeff;
    return std::nullopt;
  }
  bool dependsOnAlpha() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.alpha != 0; });
  }
  bool dependsOnHbar() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.hbar != 0; });
  }
  int maxHbarPower() const {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.hbar);
    return m;
  }

  /// Units of Q[hbar][alpha^+-1] are exactly c * alpha^k with c != 0.
  bool isUnit() const { return terms_.size() == 1 && terms_[0].hbar == 0; }

  Scalar inverse() const {
    if (!isUnit()) throw std::domain_error("scalar " + str() + " is not invertible");
    return monomial(1 / terms_[0].coeff, 0, -terms_[0].alpha);
  }

  Scalar pow(int exponent) const {
    Scalar base = exponent < 0 ? inverse() : *this;
    unsigned e = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
    Scalar result(1);
    while (e > 0) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e > 0) base *= base;
    }
    return result;
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
      if (b == o.terms_.end() || (a != terms_.end() && key(*a) < key(*b))) {
        merged.push_back(std::move(*a++));
      } else if (a == terms_.end() || key(*b) < key(*a)) {
        merged.push_back(*b++);
      } else {
        Rational c = a->coeff + b->coeff;
        if (c != 0) merged.push_back({a->hbar, a->alpha, std::move(c)});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(merged);
    return *this;
  }
  Scalar& operator-=(const Scalar& o) { return *this += -o; }

  Scalar& operator*=(const Scalar& o) {
    *this = *this * o;
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    Scalar r;
    if (x.terms_.empty() || y.terms_.empty()) return r;
    if (y.terms_.size() == 1) return x.scaledByTerm(y.terms_[0]);
    if (x.terms_.size() == 1) return y.scaledByTerm(x.terms_[0]);
    std::vector<Term> prod;
    prod.reserve(x.terms_.size() * y.terms_.size());
    for (const auto& s : x.terms_)
      for (const auto& t : y.terms_) prod.push_back({s.hbar + t.hbar, s.alpha + t.alpha, s.coeff * t.coeff});
    std::sort(prod.begin(), prod.end(), [](const Term& a, const Term& b) { return key(a) < key(b); });
    for (auto& t : prod) {
      if (!r.terms_.empty() && key(r.terms_.back()) == key(t)) {
        r.terms_.back().coeff += t.coeff;
        if (r.terms_.back().coeff == 0) r.terms_.pop_back();
      } else {
        r.terms_.push_back(std::move(t));
      }
    }
    return r;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  /// Total order used only to key containers; not an ordering of the ring.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
    auto n = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = a.terms_[i];
      const auto& t = b.terms_[i];
      if (auto c = key(s) <=> key(t); c != 0) return c;
      int cmpv = cmp(s.coeff, t.coeff);
      if (cmpv != 0) return cmpv < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return a.terms_.size() <=> b.terms_.size();
  }

  /// Renders e.g. `alpha + alpha^-1 - 2 + 3/2*hbar`.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
      if (a->hbar != b->hbar) return a->hbar < b->hbar;
      return a->alpha > b->alpha;
    });
    std::string out;
    bool first = true;
    for (const Term* t : order) {
      Rational c = t->coeff;
      bool negative = c < 0;
      if (negative) c = -c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string body;
      auto append = [&body](const std::string& f) {
        if (!body.empty()) body += "*";
        body += f;
      };
      if (t->hbar > 0) append(t->hbar == 1 ? "hbar" : "hbar^" + std::to_string(t->hbar));
      if (t->alpha != 0) append(t->alpha == 1 ? "alpha" : "alpha^" + std::to_string(t->alpha));
      if (body.empty()) {
        out += toString(c);
      } else if (c == 1) {
        out += body;
      } else {
        out += toString(c) + "*" + body;
      }
    }
    return out;
  }

 private:
  static Rational canonical(Rational c) {
    c.canonicalize();
    return c;
  }
  static std::pair<int, int> key(const Term& t) { return {t.hbar, t.alpha}; }

  Scalar scaledByTerm(const Term& u) const {
    Scalar r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.hbar + u.hbar, t.alpha + u.alpha, t.coeff * u.coeff});
    return r;
  }

  std::vector<Term> terms_;
};

/// Evaluation homomorphism hbar -> hval, alpha -> aval.
inline Rational specialize(const Scalar& x, const Rational& hval, const Rational& aval) {
  if (aval == 0) throw std::domain_error("alpha must be specialized to a nonzero rational");
  Rational sum = 0;
  for (const auto& t : x.terms()) sum += t.coeff * rationalPow(hval, t.hbar) * rationalPow(aval, t.alpha);
  return sum;
}

/// Substitutes hbar and alpha by Scalars (alpha must be a unit). Used to pass
/// from the symbolic ring to a partially specialized one.
inline Scalar substitute(const Scalar& x, const Scalar& hval, const Scalar& aval) {
  Scalar sum;
  for (const auto& t : x.terms()) sum += Scalar(t.coeff) * hval.pow(t.hbar) * aval.pow(t.alpha);
  return sum;
}

/// m^2 = alpha + alpha^-1 - 2 for an invertible alpha (symbolic or specialized).
inline Scalar massSquared(const Scalar& alpha) {
  if (!alpha.isUnit()) throw std::domain_error("massSquared needs an invertible alpha, got " + alpha.str());
  return alpha + alpha.inverse() - Scalar(2);
}

}  // namespace lbv
