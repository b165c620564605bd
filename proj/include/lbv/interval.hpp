#pragma once

// Colors of the not-too-little intervals operad with R = 1: open intervals
// (a, b) with rational endpoints and length b - a > 2.

#include <lbv/scalar.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbv {

using Site = int;

class Interval {
 public:
  Interval(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
    if (!(a_ < b_)) throw std::invalid_argument("interval needs a < b, got " + str());
    if (!(b_ - a_ > 2)) throw std::invalid_argument("interval " + str() + " is shorter than 2");
  }
  Interval(int a, int b) : Interval(Rational(a), Rational(b)) {}

  /// Parses `a,b` (endpoints as `p/q` or decimals).
  static Interval parse(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("interval must be written a,b");
    std::string inner = text;
    if (!inner.empty() && inner.front() == '(' && inner.back() == ')') inner = inner.substr(1, inner.size() - 2);
    comma = inner.find(',');
    return Interval(parseRational(inner.substr(0, comma)), parseRational(inner.substr(comma + 1)));
  }

  const Rational& lower() const { return a_; }
  const Rational& upper() const { return b_; }
  Rational length() const { return b_ - a_; }

  /// Z ∩ (a, b): sites carrying field generators.
  bool isFieldSite(Site x) const { return a_ < x && x < b_; }
  /// Z ∩ (a+1, b-1): sites carrying antifield generators.
  bool isAntifieldSite(Site x) const { return a_ + 1 < x && x < b_ - 1; }

  std::vector<Site> fieldSites() const { return sitesBetween(a_, b_); }
  std::vector<Site> antifieldSites() const { return sitesBetween(a_ + 1, b_ - 1); }

  bool contains(const Interval& inner) const { return a_ <= inner.a_ && inner.b_ <= b_; }
  bool disjointFrom(const Interval& o) const { return b_ <= o.a_ || o.b_ <= a_; }
  /// Strictly to the left (as open intervals, touching endpoints allowed).
  bool leftOf(const Interval& o) const { return b_ <= o.a_; }

  Interval translated(const Rational& shift) const { return Interval(a_ + shift, b_ + shift); }
  Interval reversed() const { return Interval(-b_, -a_); }

  std::string str() const { return "(" + toString(a_) + "," + toString(b_) + ")"; }

  friend bool operator==(const Interval& x, const Interval& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  static std::vector<Site> sitesBetween(const Rational& lo, const Rational& hi) {
    std::vector<Site> out;
    mpz_class first;
    mpz_fdiv_q(first.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    first += 1;
    for (mpz_class x = first; Rational(x) < hi; ++x) out.push_back(static_cast<Site>(x.get_si()));
    return out;
  }

  Rational a_, b_;
};

}  // namespace lbv
