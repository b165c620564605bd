#pragma once

// Graded-commutative observables: polynomials in even field generators
// delta[x] (degree 0) and odd antifield generators bdelta[x] (degree -1).
//
// A Monomial stores its antifield sites in strictly ascending order. Every
// operation that produces a monomial from an unordered antifield list also
// produces the Koszul sign of the sorting permutation.

#include <lbv/interval.hpp>
#include <lbv/scalar.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace lbv {

class Monomial {
 public:
  using FieldPower = std::pair<Site, int>;  // (site, exponent > 0)

  Monomial() = default;

  static Monomial field(Site x, int exponent = 1) {
    Monomial m;
    if (exponent < 0) throw std::invalid_argument("negative field exponent");
    if (exponent > 0) m.fields_.push_back({x, exponent});
    return m;
  }
  static Monomial antifield(Site x) {
    Monomial m;
    m.antifields_.push_back(x);
    return m;
  }

  /// Builds a canonical monomial from unordered parts. Returns the sign of the
  /// sorting permutation of the antifield list, or 0 if a site repeats.
  static std::pair<int, Monomial> canonical(std::vector<FieldPower> fields, std::vector<Site> antifields) {
    Monomial m;
    std::sort(fields.begin(), fields.end());
    for (const auto& [site, e] : fields) {
      if (e < 0) throw std::invalid_argument("negative field exponent");
      if (e == 0) continue;
      if (!m.fields_.empty() && m.fields_.back().first == site)
        m.fields_.back().second += e;
      else
        m.fields_.push_back({site, e});
    }
    int sign = permutationSign(antifields);
    if (sign == 0) return {0, Monomial()};
    std::sort(antifields.begin(), antifields.end());
    m.antifields_ = std::move(antifields);
    return {sign, std::move(m)};
  }

  const std::vector<FieldPower>& fields() const { return fields_; }
  const std::vector<Site>& antifields() const { return antifields_; }

  int cohomologicalDegree() const { return -static_cast<int>(antifields_.size()); }
  bool isOdd() const { return antifields_.size() % 2 == 1; }
  bool isPurelyEven() const { return antifields_.empty(); }
  bool isOne() const { return fields_.empty() && antifields_.empty(); }

  int fieldDegree() const {
    int d = 0;
    for (const auto& fp : fields_) d += fp.second;
    return d;
  }
  /// Total polynomial degree, counting field and antifield generators.
  int polynomialDegree() const { return fieldDegree() + static_cast<int>(antifields_.size()); }

  int fieldExponent(Site x) const {
    auto it = std::lower_bound(fields_.begin(), fields_.end(), FieldPower{x, 0});
    return (it != fields_.end() && it->first == x) ? it->second : 0;
  }
  /// Zero-based position of x in the antifield list, or -1.
  int antifieldPosition(Site x) const {
    auto it = std::lower_bound(antifields_.begin(), antifields_.end(), x);
    return (it != antifields_.end() && *it == x) ? static_cast<int>(it - antifields_.begin()) : -1;
  }

  /// Same monomial with the exponent at x changed by delta (result must be >= 0).
  Monomial withFieldExponentShift(Site x, int delta) const {
    Monomial m = *this;
    auto it = std::lower_bound(m.fields_.begin(), m.fields_.end(), FieldPower{x, 0});
    if (it != m.fields_.end() && it->first == x) {
      it->second += delta;
      if (it->second < 0) throw std::logic_error("field exponent became negative");
      if (it->second == 0) m.fields_.erase(it);
    } else {
      if (delta < 0) throw std::logic_error("field exponent became negative");
      if (delta > 0) m.fields_.insert(it, {x, delta});
    }
    return m;
  }

  Monomial withoutAntifieldAt(std::size_t position) const {
    Monomial m = *this;
    m.antifields_.erase(m.antifields_.begin() + static_cast<std::ptrdiff_t>(position));
    return m;
  }

  /// Even part only (antifields dropped).
  Monomial fieldPart() const {
    Monomial m;
    m.fields_ = fields_;
    return m;
  }

  std::string str() const {
    if (isOne()) return "1";
    std::string out;
    auto append = [&out](const std::string& s) {
      if (!out.empty()) out += "*";
      out += s;
    };
    for (Site s : antifields_) append("bdelta[" + std::to_string(s) + "]");
    for (const auto& [s, e] : fields_)
      append("delta[" + std::to_string(s) + "]" + (e == 1 ? "" : "^" + std::to_string(e)));
    return out;
  }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Graded-commutative product x*y with its Koszul sign (0 if an antifield repeats).
  friend std::pair<int, Monomial> multiply(const Monomial& x, const Monomial& y) {
    Monomial m;
    // Fields: merge.
    m.fields_.reserve(x.fields_.size() + y.fields_.size());
    auto a = x.fields_.begin(), b = y.fields_.begin();
    while (a != x.fields_.end() || b != y.fields_.end()) {
      if (b == y.fields_.end() || (a != x.fields_.end() && a->first < b->first)) {
        m.fields_.push_back(*a++);
      } else if (a == x.fields_.end() || b->first < a->first) {
        m.fields_.push_back(*b++);
      } else {
        m.fields_.push_back({a->first, a->second + b->second});
        ++a;
        ++b;
      }
    }
    // Antifields: merge, counting pairs (s in x, t in y) with s > t.
    if (y.antifields_.empty()) {
      m.antifields_ = x.antifields_;
      return {1, std::move(m)};
    }
    if (x.antifields_.empty()) {
      m.antifields_ = y.antifields_;
      return {1, std::move(m)};
    }
    m.antifields_.reserve(x.antifields_.size() + y.antifields_.size());
    std::size_t inversions = 0;
    std::size_t i = 0, j = 0;
    const auto& A = x.antifields_;
    const auto& B = y.antifields_;
    while (i < A.size() || j < B.size()) {
      if (j == B.size() || (i < A.size() && A[i] < B[j])) {
        m.antifields_.push_back(A[i++]);
      } else if (i == A.size() || B[j] < A[i]) {
        inversions += A.size() - i;
        m.antifields_.push_back(B[j++]);
      } else {
        return {0, Monomial()};
      }
    }
    return {inversions % 2 == 0 ? 1 : -1, std::move(m)};
  }

  /// Sign of the permutation sorting `sites`, or 0 if a value repeats.
  static int permutationSign(const std::vector<Site>& sites) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < sites.size(); ++i)
      for (std::size_t j = i + 1; j < sites.size(); ++j) {
        if (sites[i] == sites[j]) return 0;
        if (sites[i] > sites[j]) ++inversions;
      }
    return inversions % 2 == 0 ? 1 : -1;
  }

 private:
  std::vector<FieldPower> fields_;
  std::vector<Site> antifields_;
};

class Cochain {
 public:
  using TermMap = std::map<Monomial, Scalar>;

  Cochain() = default;
  Cochain(const Scalar& s) {  // NOLINT(google-explicit-constructor)
    if (!s.isZero()) terms_.emplace(Monomial(), s);
  }
  Cochain(int c) : Cochain(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Cochain(const Monomial& m, const Scalar& coeff = Scalar(1)) {
    if (!coeff.isZero()) terms_.emplace(m, coeff);
  }

  static Cochain delta(Site x, int exponent = 1) { return Cochain(Monomial::field(x, exponent)); }
  static Cochain bdelta(Site x) { return Cochain(Monomial::antifield(x)); }

  const TermMap& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
  }

  void addTerm(const Monomial& m, const Scalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }
  void addTerm(Monomial&& m, const Scalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second.isZero()) terms_.erase(it);
    }
  }

  Cochain& operator+=(const Cochain& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
  }
  Cochain operator-() const {
    Cochain r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  Cochain& operator*=(const Scalar& s) {
    if (s.isZero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Scalar& s, Cochain c) { return c *= s; }
  friend Cochain operator*(Cochain c, const Scalar& s) { return c *= s; }
  friend Cochain operator*(int s, Cochain c) { return c *= Scalar(s); }
  friend Cochain operator*(Cochain c, int s) { return c *= Scalar(s); }
  friend Cochain operator*(const Cochain& x, const Cochain& y) { return multiply(x, y); }

  /// Graded-commutative product; bilinear over Scalar.
  friend Cochain multiply(const Cochain& x, const Cochain& y) {
    Cochain r;
    for (const auto& [m, c] : x.terms_)
      for (const auto& [n, d] : y.terms_) {
        auto [sign, mn] = multiply(m, n);
        if (sign == 0) continue;
        Scalar coeff = c * d;
        r.addTerm(std::move(mn), sign > 0 ? coeff : -coeff);
      }
    return r;
  }

  friend bool operator==(const Cochain&, const Cochain&) = default;

  /// Component of cohomological degree k.
  Cochain homogeneous(int degree) const {
    Cochain r;
    for (const auto& [m, c] : terms_)
      if (m.cohomologicalDegree() == degree) r.terms_.emplace(m, c);
    return r;
  }

  bool isPurelyEven() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.isPurelyEven(); });
  }
  bool isHomogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.cohomologicalDegree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.cohomologicalDegree() == d; });
  }
  /// Degree of a homogeneous cochain (0 for the zero cochain).
  int degree() const {
    if (!isHomogeneous()) throw std::invalid_argument("cochain is not homogeneous");
    return terms_.empty() ? 0 : terms_.begin()->first.cohomologicalDegree();
  }
  int maxPolynomialDegree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.polynomialDegree());
    return d;
  }

  std::set<Site> fieldSupport() const {
    std::set<Site> s;
    for (const auto& [m, c] : terms_)
      for (const auto& fp : m.fields()) s.insert(fp.first);
    return s;
  }
  std::set<Site> antifieldSupport() const {
    std::set<Site> s;
    for (const auto& [m, c] : terms_) s.insert(m.antifields().begin(), m.antifields().end());
    return s;
  }
  std::set<Site> support() const {
    auto s = fieldSupport();
    auto t = antifieldSupport();
    s.insert(t.begin(), t.end());
    return s;
  }

  bool dependsOnAlpha() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.dependsOnAlpha(); });
  }

  /// Renders with the cochain grammar, e.g. `3*delta[0]*delta[1] - 2*hbar*bdelta[2]`.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // Highest polynomial degree first reads more naturally.
    std::vector<const TermMap::value_type*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
      return a->first.polynomialDegree() > b->first.polynomialDegree();
    });
    for (const auto* t : order) {
      const Monomial& m = t->first;
      const Scalar& c = t->second;
      std::string coeff;
      bool negative = false;
      if (c.size() == 1) {
        const auto& term = c.terms().front();
        negative = term.coeff < 0;
        coeff = (negative ? -c : c).str();
      } else {
        coeff = "(" + c.str() + ")";
      }
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      first = false;
      if (m.isOne())
        out += coeff;
      else if (coeff == "1")
        out += m.str();
      else
        out += coeff + "*" + m.str();
    }
    return out;
  }

 private:
  TermMap terms_;
};

/// d/d(delta[x]): even derivation.
inline Cochain partialField(Site x, const Cochain& c) {
  Cochain r;
  for (const auto& [m, coeff] : c.terms()) {
    int e = m.fieldExponent(x);
    if (e == 0) continue;
    r.addTerm(m.withFieldExponentShift(x, -1), coeff * Scalar(e));
  }
  return r;
}

/// d/d(bdelta[x]) acting from the left: the factor at zero-based position i
/// contributes sign (-1)^i.
inline Cochain partialAntifield(Site x, const Cochain& c) {
  Cochain r;
  for (const auto& [m, coeff] : c.terms()) {
    int pos = m.antifieldPosition(x);
    if (pos < 0) continue;
    r.addTerm(m.withoutAntifieldAt(static_cast<std::size_t>(pos)), pos % 2 == 0 ? coeff : -coeff);
  }
  return r;
}

/// Finitely supported function Z -> Scalar.
class LatticeFunction {
 public:
  using ValueMap = std::map<Site, Scalar>;

  LatticeFunction() = default;
  LatticeFunction(std::initializer_list<std::pair<const Site, Scalar>> init) {
    for (const auto& [x, v] : init) add(x, v);
  }

  static LatticeFunction indicator(Site x) { return LatticeFunction{{x, Scalar(1)}}; }

  const ValueMap& values() const { return values_; }
  bool isZero() const { return values_.empty(); }

  Scalar operator()(Site x) const {
    auto it = values_.find(x);
    return it == values_.end() ? Scalar() : it->second;
  }

  void add(Site x, const Scalar& v) {
    if (v.isZero()) return;
    auto [it, inserted] = values_.try_emplace(x, v);
    if (!inserted) {
      it->second += v;
      if (it->second.isZero()) values_.erase(it);
    }
  }

  LatticeFunction& operator+=(const LatticeFunction& o) {
    for (const auto& [x, v] : o.values_) add(x, v);
    return *this;
  }
  LatticeFunction& operator-=(const LatticeFunction& o) {
    for (const auto& [x, v] : o.values_) add(x, -v);
    return *this;
  }
  friend LatticeFunction operator+(LatticeFunction a, const LatticeFunction& b) { return a += b; }
  friend LatticeFunction operator-(LatticeFunction a, const LatticeFunction& b) { return a -= b; }
  friend LatticeFunction operator*(const Scalar& s, const LatticeFunction& f) {
    LatticeFunction r;
    for (const auto& [x, v] : f.values_) r.add(x, s * v);
    return r;
  }
  friend bool operator==(const LatticeFunction&, const LatticeFunction&) = default;

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [x, v] : values_) {
      if (!first) out += ", ";
      first = false;
      out += std::to_string(x) + ": " + v.str();
    }
    return out + "}";
  }

 private:
  ValueMap values_;
};

/// <<f, g>> = sum_x f(x) g(x).
inline Scalar pairing(const LatticeFunction& f, const LatticeFunction& g) {
  Scalar sum;
  const auto& small = f.values().size() <= g.values().size() ? f : g;
  const auto& large = &small == &f ? g : f;
  for (const auto& [x, v] : small.values()) {
    auto w = large(x);
    if (!w.isZero()) sum += v * w;
  }
  return sum;
}

/// sum_x f(x) bdelta[x], a degree -1 cochain.
inline Cochain toAntifieldCochain(const LatticeFunction& f) {
  Cochain c;
  for (const auto& [x, v] : f.values()) c.addTerm(Monomial::antifield(x), v);
  return c;
}

/// sum_x g(x) delta[x], a degree 0 cochain.
inline Cochain toFieldCochain(const LatticeFunction& g) {
  Cochain c;
  for (const auto& [x, v] : g.values()) c.addTerm(Monomial::field(x), v);
  return c;
}

/// Coefficients of the linear field monomials delta[x] of c.
inline LatticeFunction linearFieldPart(const Cochain& c) {
  LatticeFunction f;
  for (const auto& [m, v] : c.terms())
    if (m.antifields().empty() && m.fields().size() == 1 && m.fields()[0].second == 1) f.add(m.fields()[0].first, v);
  return f;
}

/// Coefficients of the linear antifield monomials bdelta[x] of c.
inline LatticeFunction linearAntifieldPart(const Cochain& c) {
  LatticeFunction f;
  for (const auto& [m, v] : c.terms())
    if (m.fields().empty() && m.antifields().size() == 1) f.add(m.antifields()[0], v);
  return f;
}

/// Field sites in Z ∩ (a,b) and antifield sites in Z ∩ (a+1,b-1).
inline bool supportWithin(const Cochain& c, const Interval& I) {
  for (const auto& [m, v] : c.terms()) {
    for (const auto& fp : m.fields())
      if (!I.isFieldSite(fp.first)) return false;
    for (Site s : m.antifields())
      if (!I.isAntifieldSite(s)) return false;
  }
  return true;
}

inline bool supportWithin(const LatticeFunction& f, const Interval& I) {
  return std::all_of(f.values().begin(), f.values().end(), [&](const auto& kv) { return I.isFieldSite(kv.first); });
}

}  // namespace lbv
