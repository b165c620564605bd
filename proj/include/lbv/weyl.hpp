#pragma once

// The associative algebra extracted from the quantum observables: degree-0
// classes on an ambient interval with the star product obtained by moving
// representatives into two disjoint ordered sub-intervals and multiplying.
// Also the identification with the Weyl algebra, the time evolution and
// time reversal it induces, and the Fock module of coinvariants.

#include <lbv/cochain.hpp>
#include <lbv/complex.hpp>
#include <lbv/interval.hpp>
#include <lbv/operad.hpp>
#include <lbv/reduction.hpp>
#include <lbv/weyl_algebra.hpp>

#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lbv {

/// A class in H^0 of the observables on an ambient interval, with its
/// canonical representative on the window {0,1} and the certificate for it.
class H0Class {
 public:
  H0Class(Cochain representative, Interval ambient, const ModelParams& p)
      : representative_(std::move(representative)),
        ambient_(std::move(ambient)),
        reduction_(normalForm(representative_, ambient_, kCanonicalWindow, p)) {}

  static H0Class one(const Interval& ambient, const ModelParams& p) { return H0Class(Cochain(1), ambient, p); }

  const Cochain& representative() const { return representative_; }
  const Interval& ambient() const { return ambient_; }
  const Cochain& canonical() const { return reduction_.normalForm; }
  const HomotopyCertificate& reduction() const { return reduction_; }

  friend bool operator==(const H0Class& a, const H0Class& b) {
    return a.ambient_ == b.ambient_ && a.canonical() == b.canonical();
  }

  friend H0Class operator+(const H0Class& a, const H0Class& b) { return combine(a, b, Scalar(1)); }
  friend H0Class operator-(const H0Class& a, const H0Class& b) { return combine(a, b, Scalar(-1)); }
  friend H0Class operator*(const Scalar& s, const H0Class& a) {
    H0Class r = a;
    r.representative_ *= s;
    r.reduction_.input *= s;
    r.reduction_.normalForm *= s;
    r.reduction_.homotopy *= s;
    return r;
  }

 private:
  // Certificates are linear, so sums need no new reduction.
  static H0Class combine(const H0Class& a, const H0Class& b, const Scalar& sb) {
    if (!(a.ambient_ == b.ambient_)) throw std::invalid_argument("classes live on different intervals");
    H0Class r = a;
    r.representative_ += sb * b.representative_;
    r.reduction_.input += sb * b.reduction_.input;
    r.reduction_.normalForm += sb * b.reduction_.normalForm;
    r.reduction_.homotopy += sb * b.reduction_.homotopy;
    return r;
  }

  Cochain representative_;
  Interval ambient_;
  HomotopyCertificate reduction_;
};

/// Ambient interval J with sub-intervals left < right, both of length > 2.
struct StarGeometry {
  Interval ambient;
  Interval left;
  Interval right;

  /// J = (-4,4), I1 = (-4,-3/2), I2 = (-3/2,4).
  static StarGeometry standard() {
    return {Interval(-4, 4), Interval(Rational(-4), Rational(-3, 2)), Interval(Rational(-3, 2), Rational(4))};
  }
  /// J = (-3,3), I1 = (-2,1/2), I2 = (1/2,3).
  static StarGeometry massless35() {
    return {Interval(-3, 3), Interval(Rational(-2), Rational(1, 2)), Interval(Rational(1, 2), Rational(3))};
  }
  static StarGeometry byName(const std::string& name) {
    if (name == "default" || name == "standard") return standard();
    if (name == "massless35") return massless35();
    throw std::invalid_argument("unknown star geometry '" + name + "'");
  }

  void validate() const {
    IntervalOperation op{{left, right}, ambient};
    if (!op.isValid()) throw std::invalid_argument("star geometry intervals do not form an operation");
    if (gammaPermutation(op) != identityPermutation(2))
      throw std::invalid_argument("star geometry needs the left interval before the right one");
  }

  /// The window of I closest to the canonical window {0,1}.
  static Window closestWindow(const Interval& I) {
    auto sites = I.fieldSites();
    std::optional<Window> best;
    for (std::size_t i = 0; i + 1 < sites.size(); ++i) {
      Window w{sites[i]};
      if (!best || std::abs(w.base) < std::abs(best->base) ||
          (std::abs(w.base) == std::abs(best->base) && w.base > best->base))
        best = w;
    }
    if (!best) throw std::invalid_argument("interval " + I.str() + " has no two-site window");
    return *best;
  }
  Window leftWindow() const { return closestWindow(left); }
  Window rightWindow() const { return closestWindow(right); }
};

/// The intermediate data of one star product.
struct StarTrace {
  HomotopyCertificate leftRelocation;
  HomotopyCertificate rightRelocation;
  Cochain product;
};

/// x ⋆ y: x moved into the left sub-interval, y into the right one,
/// multiplied there and reduced back to the canonical window.
inline H0Class starProduct(const H0Class& x, const H0Class& y, const StarGeometry& g, const ModelParams& p,
                           StarTrace* trace = nullptr) {
  g.validate();
  const Interval& J = g.ambient;
  if (!J.contains(x.ambient()) || !J.contains(y.ambient()))
    throw std::invalid_argument("star product factors must live inside " + J.str());
  HomotopyCertificate xl = relocate(x.representative(), J, g.leftWindow(), p);
  HomotopyCertificate yr = relocate(y.representative(), J, g.rightWindow(), p);
  Cochain product = factorizationProduct({{xl.normalForm, g.left}, {yr.normalForm, g.right}}, J);
  if (trace) *trace = {xl, yr, product};
  return H0Class(std::move(product), J, p);
}

/// Class map induced by translating representatives by n sites.
inline H0Class translateClass(const H0Class& x, int n, const ModelParams& p) {
  return H0Class(translate(x.canonical(), n), x.ambient(), p);
}

/// Class map induced by x -> -x (lands on the reversed ambient interval).
inline H0Class reverseClass(const H0Class& x, const ModelParams& p) {
  return H0Class(timeReversal(x.canonical()), x.ambient().reversed(), p);
}

/// The isomorphism from the Weyl algebra to (H^0, ⋆):
///   Psi(q^a p^b) = q^{⋆a} ⋆ p^{⋆b},  q = [delta[0]],  p = 1/2 [delta[1] - delta[-1]],
/// tabulated up to a total degree, together with its inverse.
class WeylIdentification {
 public:
  WeylIdentification(ModelParams p, int maxDegree, StarGeometry g = StarGeometry::standard())
      : params_(std::move(p)),
        geometry_(std::move(g)),
        maxDegree_(maxDegree),
        q_(Cochain::delta(0), geometry_.ambient, params_),
        p_(Scalar(Rational(1, 2)) * (Cochain::delta(1) - Cochain::delta(-1)), geometry_.ambient, params_) {
    if (maxDegree < 0) throw std::invalid_argument("negative degree bound");
    std::vector<H0Class> qPow{H0Class::one(geometry_.ambient, params_)};
    std::vector<H0Class> pPow{H0Class::one(geometry_.ambient, params_)};
    for (int k = 1; k <= maxDegree; ++k) {
      qPow.push_back(k == 1 ? q_ : starProduct(qPow.back(), q_, geometry_, params_));
      pPow.push_back(k == 1 ? p_ : starProduct(pPow.back(), p_, geometry_, params_));
    }
    for (int d = 0; d <= maxDegree; ++d)
      for (int b = 0; b <= d; ++b) {
        int a = d - b;
        if (a == 0)
          psi_.emplace(std::pair{a, b}, pPow[static_cast<std::size_t>(b)]);
        else if (b == 0)
          psi_.emplace(std::pair{a, b}, qPow[static_cast<std::size_t>(a)]);
        else
          psi_.emplace(std::pair{a, b},
                       starProduct(qPow[static_cast<std::size_t>(a)], pPow[static_cast<std::size_t>(b)], geometry_, params_));
      }
  }

  const ModelParams& params() const { return params_; }
  const StarGeometry& geometry() const { return geometry_; }
  int maxDegree() const { return maxDegree_; }
  const H0Class& qClass() const { return q_; }
  const H0Class& pClass() const { return p_; }

  const H0Class& psi(int a, int b) const {
    auto it = psi_.find({a, b});
    if (it == psi_.end())
      throw std::out_of_range("q^" + std::to_string(a) + "p^" + std::to_string(b) + " exceeds the degree bound " +
                              std::to_string(maxDegree_));
    return it->second;
  }

  H0Class weylToClass(const WeylElement& w) const {
    H0Class r(Cochain(), geometry_.ambient, params_);
    for (const auto& [e, c] : w.terms()) r = r + params_.apply(c) * psi(e.first, e.second);
    return r;
  }

  /// Inverse of weylToClass, by peeling off leading terms in the basis
  /// [delta[0]^i delta[1]^j] ordered by (i + j, j).
  WeylElement classToWeyl(const H0Class& x) const {
    if (!(x.ambient() == geometry_.ambient)) return classToWeyl(H0Class(x.canonical(), geometry_.ambient, params_));
    Cochain rest = x.canonical();
    WeylElement out;
    while (!rest.isZero()) {
      auto [i, j, coeff] = leadingTerm(rest);
      if (i + j > maxDegree_)
        throw std::out_of_range("class of degree " + std::to_string(i + j) + " exceeds the degree bound " +
                                std::to_string(maxDegree_));
      out.addTerm(i, j, coeff);
      rest -= coeff * psi(i, j).canonical();
    }
    return out;
  }

  /// Whether each Psi(q^a p^b) has leading term exactly delta[0]^a delta[1]^b.
  bool basisChangeIsUnitriangular() const {
    for (const auto& [e, cls] : psi_) {
      if (cls.canonical().isZero()) return false;
      auto [i, j, coeff] = leadingTerm(cls.canonical());
      if (i != e.first || j != e.second || !(coeff == Scalar(1))) return false;
    }
    return true;
  }

 private:
  struct Leading {
    int i;
    int j;
    Scalar coeff;
  };
  static Leading leadingTerm(const Cochain& c) {
    std::optional<Leading> best;
    for (const auto& [m, v] : c.terms()) {
      int i = m.fieldExponent(0), j = m.fieldExponent(1);
      if (i + j != m.fieldDegree() || !m.isPurelyEven())
        throw std::invalid_argument("representative " + c.str() + " is not on the canonical window");
      if (!best || std::pair{i + j, j} > std::pair{best->i + best->j, best->j}) best = Leading{i, j, v};
    }
    return *best;
  }

  ModelParams params_;
  StarGeometry geometry_;
  int maxDegree_;
  H0Class q_, p_;
  std::map<std::pair<int, int>, H0Class> psi_;
};

/// Automorphism induced by translation by one site:
///   q -> ((alpha + alpha^-1)/2) q + p,
///   p -> ((alpha - alpha^-1)/2)^2 q + ((alpha + alpha^-1)/2) p.
inline WeylElement timeEvolution(const WeylElement& w, const ModelParams& p) {
  Scalar half(Rational(1, 2));
  Scalar c = half * p.diagonal();
  Scalar s = half * (p.alpha() - p.alphaInverse());
  WeylElement tq = WeylElement::basis(1, 0, c) + WeylElement::basis(0, 1);
  WeylElement tp = WeylElement::basis(1, 0, s * s) + WeylElement::basis(0, 1, c);
  WeylElement r;
  for (const auto& [e, coeff] : w.terms())
    r += p.apply(coeff) * weylMul(weylPow(tq, e.first, p.hbar()), weylPow(tp, e.second, p.hbar()), p.hbar());
  return r;
}

/// Anti-involution q -> q, p -> -p: tau(q^a p^b) = (-p)^b q^a.
inline WeylElement timeReversalWeyl(const WeylElement& w, const Scalar& hbar = Scalar::hbar()) {
  WeylElement r;
  for (const auto& [e, coeff] : w.terms()) {
    Scalar sign = e.second % 2 == 0 ? Scalar(1) : Scalar(-1);
    r += (sign * coeff) * weylMul(WeylElement::basis(0, e.second), WeylElement::basis(e.first, 0), hbar);
  }
  return r;
}

/// Element of K[q], the coinvariant module Weyl / Weyl·p.
class FockVector {
 public:
  FockVector() = default;
  static FockVector monomial(int n, const Scalar& c = Scalar(1)) {
    FockVector v;
    v.add(n, c);
    return v;
  }

  const std::map<int, Scalar>& coeffs() const { return coeffs_; }
  bool isZero() const { return coeffs_.empty(); }
  Scalar operator[](int n) const {
    auto it = coeffs_.find(n);
    return it == coeffs_.end() ? Scalar() : it->second;
  }

  void add(int n, const Scalar& c) {
    if (c.isZero()) return;
    auto [it, inserted] = coeffs_.try_emplace(n, c);
    if (!inserted) {
      it->second += c;
      if (it->second.isZero()) coeffs_.erase(it);
    }
  }
  FockVector& operator+=(const FockVector& o) {
    for (const auto& [n, c] : o.coeffs_) add(n, c);
    return *this;
  }
  FockVector& operator-=(const FockVector& o) {
    for (const auto& [n, c] : o.coeffs_) add(n, -c);
    return *this;
  }
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& s, const FockVector& v) {
    FockVector r;
    for (const auto& [n, c] : v.coeffs_) r.add(n, s * c);
    return r;
  }
  friend bool operator==(const FockVector&, const FockVector&) = default;

  WeylElement lift() const {
    WeylElement w;
    for (const auto& [n, c] : coeffs_) w.addTerm(n, 0, c);
    return w;
  }

  std::string str() const { return lift().str(); }

 private:
  std::map<int, Scalar> coeffs_;
};

/// Projection Weyl -> Weyl / Weyl·p: normal-ordered terms with a p factor die.
inline FockVector coinvariantProjection(const WeylElement& w) {
  FockVector v;
  for (const auto& [e, c] : w.terms())
    if (e.second == 0) v.add(e.first, c);
  return v;
}

/// g - tau(g) for the generators g = q, p; the left ideal they generate is Weyl·p.
inline std::vector<WeylElement> coinvariantIdealGenerators(const Scalar& hbar = Scalar::hbar()) {
  std::vector<WeylElement> out;
  for (const auto& g : {WeylElement::q(), WeylElement::p()}) out.push_back(g - timeReversalWeyl(g, hbar));
  return out;
}

/// Left action on the coinvariant module: w · v = [w · lift(v)].
inline FockVector fockAction(const WeylElement& w, const FockVector& v, const Scalar& hbar = Scalar::hbar()) {
  return coinvariantProjection(weylMul(w, v.lift(), hbar));
}

}  // namespace lbv
