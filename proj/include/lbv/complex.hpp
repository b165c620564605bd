#pragma once

// Differentials and structure maps on the observables: the discrete
// Laplacian Q_alpha, the classical differential d, the odd Laplacian Delta,
// the quantum differential d + hbar*Delta, the shifted bracket, the kernel
// functions u, v, A, B of Q_alpha and the cohomology map phi.

#include <lbv/cochain.hpp>
#include <lbv/scalar.hpp>
#include <lbv/weyl_algebra.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace lbv {

/// Values of alpha and hbar: symbols, rationals, or any unit / any Scalar.
class ModelParams {
 public:
  ModelParams(Scalar alpha, Scalar hbar) : alpha_(std::move(alpha)), hbar_(std::move(hbar)) {
    if (!alpha_.isUnit()) throw std::domain_error("alpha must be invertible, got " + alpha_.str());
    alphaInverse_ = alpha_.inverse();
    diagonal_ = alpha_ + alphaInverse_;
  }

  static ModelParams symbolic() { return ModelParams(Scalar::alpha(), Scalar::hbar()); }
  /// alpha := 1 with a symbolic hbar.
  static ModelParams massless() { return ModelParams(Scalar(1), Scalar::hbar()); }
  static ModelParams specialized(const Rational& hval, const Rational& aval) {
    return ModelParams(Scalar(aval), Scalar(hval));
  }

  const Scalar& alpha() const { return alpha_; }
  const Scalar& alphaInverse() const { return alphaInverse_; }
  const Scalar& hbar() const { return hbar_; }
  /// alpha + alpha^-1, the (negated) diagonal entry of Q_alpha.
  const Scalar& diagonal() const { return diagonal_; }

  bool alphaIsSymbolic() const { return alpha_ == Scalar::alpha(); }
  bool hbarIsSymbolic() const { return hbar_ == Scalar::hbar(); }

  /// Pushes a symbolic Scalar into this parameter ring (alpha, hbar substituted).
  Scalar apply(const Scalar& s) const {
    if (alphaIsSymbolic() && hbarIsSymbolic()) return s;
    return substitute(s, hbar_, alpha_);
  }
  Cochain apply(const Cochain& c) const {
    if (alphaIsSymbolic() && hbarIsSymbolic()) return c;
    Cochain r;
    for (const auto& [m, v] : c.terms()) r.addTerm(m, apply(v));
    return r;
  }

  std::string str() const { return "alpha=" + alpha_.str() + ", hbar=" + hbar_.str(); }

 private:
  Scalar alpha_, hbar_;
  Scalar alphaInverse_, diagonal_;
};

/// (Q_alpha f)(x) = f(x-1) - (alpha + alpha^-1) f(x) + f(x+1).
inline LatticeFunction laplace(const LatticeFunction& f, const ModelParams& p) {
  LatticeFunction r;
  for (const auto& [x, v] : f.values()) {
    r.add(x - 1, v);
    r.add(x, -(p.diagonal() * v));
    r.add(x + 1, v);
  }
  return r;
}

/// d(bdelta[y]) = delta[y-1] - (alpha + alpha^-1) delta[y] + delta[y+1].
inline Cochain laplaceOfGenerator(Site y, const ModelParams& p) {
  return toFieldCochain(laplace(LatticeFunction::indicator(y), p));
}

/// Classical differential: the odd derivation sum_y d(bdelta[y]) * d/d(bdelta[y]).
inline Cochain differential(const Cochain& c, const ModelParams& p) {
  Cochain r;
  for (Site y : c.antifieldSupport()) r += multiply(laplaceOfGenerator(y, p), partialAntifield(y, c));
  return r;
}

/// Delta = sum_x d^2 / d(bdelta[x]) d(delta[x]).
inline Cochain oddLaplacian(const Cochain& c) {
  Cochain r;
  auto fields = c.fieldSupport();
  for (Site x : c.antifieldSupport())
    if (fields.count(x)) r += partialAntifield(x, partialField(x, c));
  return r;
}

/// d_hbar = d + hbar * Delta.
inline Cochain dQuantum(const Cochain& c, const ModelParams& p) {
  return differential(c, p) + p.hbar() * oddLaplacian(c);
}

/// {x,y} := Delta(xy) - Delta(x) y - (-1)^|x| x Delta(y), extended
/// bilinearly over the homogeneous components of x.
inline Cochain poissonBracket(const Cochain& x, const Cochain& y) {
  Cochain even, odd;
  for (const auto& [m, c] : x.terms()) (m.isOdd() ? odd : even).addTerm(m, c);
  Cochain Dy = oddLaplacian(y);
  auto defect = [&](const Cochain& part, int sign) {
    Cochain r = oddLaplacian(multiply(part, y)) - multiply(oddLaplacian(part), y);
    Cochain tail = multiply(part, Dy);
    return sign > 0 ? r - tail : r + tail;
  };
  return defect(even, +1) + defect(odd, -1);
}

enum class KernelFunctionKind { U, V, A, B };

inline std::string toString(KernelFunctionKind k) {
  switch (k) {
    case KernelFunctionKind::U: return "u";
    case KernelFunctionKind::V: return "v";
    case KernelFunctionKind::A: return "A";
    case KernelFunctionKind::B: return "B";
  }
  return "?";
}

/// u(x) = alpha^x, v(x) = alpha^-x, A = (u+v)/2, and B = (u-v)/(alpha - alpha^-1)
/// through its division-free closed form sign(x) * sum_j alpha^(|x|-1-2j).
inline Scalar kernelFunction(KernelFunctionKind kind, Site x, const ModelParams& p) {
  switch (kind) {
    case KernelFunctionKind::U: return p.alpha().pow(x);
    case KernelFunctionKind::V: return p.alpha().pow(-x);
    case KernelFunctionKind::A: return Scalar(Rational(1, 2)) * (p.alpha().pow(x) + p.alpha().pow(-x));
    case KernelFunctionKind::B: {
      int n = x < 0 ? -x : x;
      Scalar sum;
      for (int j = 0; j < n; ++j) sum += p.alpha().pow(n - 1 - 2 * j);
      return x < 0 ? -sum : sum;
    }
  }
  throw std::logic_error("unknown kernel function");
}

/// phi(f) = (sum_x f(x) A(x)) q + (sum_x f(x) B(x)) p.
inline WeylElement phi(const LatticeFunction& f, const ModelParams& p) {
  Scalar qc, pc;
  for (const auto& [x, v] : f.values()) {
    qc += v * kernelFunction(KernelFunctionKind::A, x, p);
    pc += v * kernelFunction(KernelFunctionKind::B, x, p);
  }
  return WeylElement::basis(1, 0, qc) + WeylElement::basis(0, 1, pc);
}

/// Massless representatives: q <- delta[0], p <- delta[y+1] - delta[y].
inline std::pair<LatticeFunction, LatticeFunction> phiSection(Site y) {
  LatticeFunction qRep = LatticeFunction::indicator(0);
  LatticeFunction pRep{{y + 1, Scalar(1)}, {y, Scalar(-1)}};
  return {qRep, pRep};
}

}  // namespace lbv
