#pragma once

// Rewriting of degree-0 even cochains to a two-site window {w, w+1}.
//
// A field generator delta[s] outside the window is traded, modulo the image
// of d_hbar, for generators one step closer to it:
//
//   delta[s] * M = (alpha + alpha^-1) delta[y] M - delta[2y-s] M
//                  - hbar * dM/d(delta[y]) + d_hbar(bdelta[y] * M)
//
// with y = s - 1 right of the window and y = s + 1 left of it. Every
// reduction records the accumulated homotopy so that
//   input = normalForm + d_hbar(homotopy)
// holds exactly and can be rechecked independently.

#include <lbv/cochain.hpp>
#include <lbv/complex.hpp>
#include <lbv/interval.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lbv {

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The site pair {base, base + 1}.
struct Window {
  Site base = 0;

  Site lo() const { return base; }
  Site hi() const { return base + 1; }
  bool contains(Site s) const { return s == base || s == base + 1; }
  int distance(Site s) const {
    if (s > hi()) return s - hi();
    if (s < lo()) return lo() - s;
    return 0;
  }
  friend bool operator==(const Window&, const Window&) = default;
};

inline const Interval& defaultAmbientInterval() {
  static const Interval J(-4, 4);
  return J;
}
inline constexpr Window kCanonicalWindow{0};

struct HomotopyCertificate {
  Cochain input;
  Cochain normalForm;
  Cochain homotopy;
};

/// input - normalForm - d_hbar(homotopy) == 0, exactly.
inline bool verifyCertificate(const HomotopyCertificate& cert, const ModelParams& p) {
  return (cert.input - cert.normalForm - dQuantum(cert.homotopy, p)).isZero();
}

enum class Strategy {
  RightmostOutermost,  // ties between equally distant sites go to the right
  LeftmostOutermost,
};

struct RewriteResult {
  Cochain replacement;
  Cochain homotopy;
};

/// One rewrite of the even monomial m at its field site s (outside w).
inline RewriteResult rewriteStep(const Monomial& m, Site s, const Interval& J, Window w, const ModelParams& p) {
  if (!m.isPurelyEven()) throw std::invalid_argument("rewriteStep needs a purely even monomial");
  if (m.fieldExponent(s) == 0) throw std::invalid_argument("site " + std::to_string(s) + " does not occur in " + m.str());
  if (w.contains(s)) throw std::invalid_argument("site " + std::to_string(s) + " already lies in the window");
  Site y = s > w.hi() ? s - 1 : s + 1;
  if (!J.isAntifieldSite(y))
    throw ReductionError("irreducible site " + std::to_string(s) + ": no antifield site " + std::to_string(y) +
                         " in " + J.str());
  Monomial rest = m.withFieldExponentShift(s, -1);
  Site far = 2 * y - s;

  RewriteResult r;
  r.replacement.addTerm(rest.withFieldExponentShift(y, 1), p.diagonal());
  r.replacement.addTerm(rest.withFieldExponentShift(far, 1), Scalar(-1));
  if (int e = rest.fieldExponent(y); e > 0)
    r.replacement.addTerm(rest.withFieldExponentShift(y, -1), -(p.hbar() * Scalar(e)));
  auto [sign, h] = multiply(Monomial::antifield(y), rest);
  r.homotopy.addTerm(h, Scalar(sign));
  return r;
}

/// The site a strategy rewrites next in m, or nullopt if m lies in the window.
inline std::optional<Site> selectSite(const Monomial& m, Window w, Strategy strategy) {
  std::optional<Site> best;
  int bestDistance = 0;
  for (const auto& [s, e] : m.fields()) {
    int dist = w.distance(s);
    if (dist == 0) continue;
    bool better = !best || dist > bestDistance ||
                  (dist == bestDistance && (strategy == Strategy::RightmostOutermost ? s > *best : s < *best));
    if (better) {
      best = s;
      bestDistance = dist;
    }
  }
  return best;
}

/// The single-step overload picking the site by the default strategy.
inline RewriteResult rewriteStep(const Monomial& m, const Interval& J, Window w, const ModelParams& p) {
  auto s = selectSite(m, w, Strategy::RightmostOutermost);
  if (!s) throw std::invalid_argument("monomial " + m.str() + " already lies in the window");
  return rewriteStep(m, *s, J, w, p);
}

namespace detail {

/// Multiset of window distances of the field factors, sorted descending.
/// Compared lexicographically this is the multiset extension of < on N.
inline std::vector<int> terminationMeasure(const Monomial& m, Window w) {
  std::vector<int> out;
  for (const auto& [s, e] : m.fields())
    for (int i = 0; i < e; ++i) out.push_back(w.distance(s));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

struct PendingKey {
  int negDistance;
  int sideRank;
  Monomial mono;
  friend auto operator<=>(const PendingKey&, const PendingKey&) = default;
};

inline PendingKey pendingKey(const Monomial& m, Window w, Strategy strategy) {
  auto s = selectSite(m, w, strategy);
  if (!s) return {0, 0, m};
  int side = strategy == Strategy::RightmostOutermost ? -*s : *s;
  return {-w.distance(*s), side, m};
}

inline void checkReductionInput(const Cochain& c, const Interval& J, Window w) {
  if (!c.isPurelyEven()) throw std::invalid_argument("reduction needs a purely even degree-0 cochain");
  if (!J.isFieldSite(w.lo()) || !J.isFieldSite(w.hi()))
    throw ReductionError("window {" + std::to_string(w.lo()) + "," + std::to_string(w.hi()) + "} is not inside " +
                         J.str());
  if (!supportWithin(c, J)) throw ReductionError("cochain " + c.str() + " is not supported in " + J.str());
}

}  // namespace detail

/// Deterministic closure of rewriteStep. The normal form only involves field
/// sites w and w+1.
inline HomotopyCertificate normalForm(const Cochain& c, const Interval& J, Window w, const ModelParams& p,
                                      Strategy strategy = Strategy::RightmostOutermost) {
  detail::checkReductionInput(c, J, w);
  HomotopyCertificate cert;
  cert.input = c;

  std::map<detail::PendingKey, Scalar> pending;
  auto push = [&](const Monomial& m, const Scalar& coeff) {
    if (coeff.isZero()) return;
    auto [it, inserted] = pending.try_emplace(detail::pendingKey(m, w, strategy), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.isZero()) pending.erase(it);
    }
  };
  for (const auto& [m, v] : c.terms()) push(m, v);

  while (!pending.empty()) {
    auto it = pending.begin();
    if (it->first.negDistance == 0) break;
    Monomial m = it->first.mono;
    Scalar coeff = std::move(it->second);
    pending.erase(it);

    Site s = *selectSite(m, w, strategy);
    RewriteResult step = rewriteStep(m, s, J, w, p);
    auto before = detail::terminationMeasure(m, w);
    for (const auto& [n, v] : step.replacement.terms()) {
      if (!(detail::terminationMeasure(n, w) < before))
        throw std::logic_error("rewrite measure did not decrease on " + m.str());
      push(n, coeff * v);
    }
    for (const auto& [n, v] : step.homotopy.terms()) cert.homotopy.addTerm(n, coeff * v);
  }
  for (auto& [key, v] : pending) cert.normalForm.addTerm(key.mono, v);
  return cert;
}

/// Moves the class of c onto the target window by the same rewriting.
inline HomotopyCertificate relocate(const Cochain& c, const Interval& J, Window target, const ModelParams& p,
                                    Strategy strategy = Strategy::RightmostOutermost) {
  if (!J.isFieldSite(target.lo()) || !J.isFieldSite(target.hi()))
    throw ReductionError("unreachable target {" + std::to_string(target.lo()) + "," + std::to_string(target.hi()) +
                         "} in " + J.str());
  return normalForm(c, J, target, p, strategy);
}

/// True iff every component of the certificate is supported in J.
inline bool certificateWithin(const HomotopyCertificate& cert, const Interval& J) {
  return supportWithin(cert.input, J) && supportWithin(cert.normalForm, J) && supportWithin(cert.homotopy, J);
}

inline std::string toString(const HomotopyCertificate& cert) {
  return "input: " + cert.input.str() + "\nnormal form: " + cert.normalForm.str() +
         "\nhomotopy: " + cert.homotopy.str();
}

}  // namespace lbv
