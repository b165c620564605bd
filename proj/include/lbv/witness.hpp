#pragma once

// A second evaluation of d_hbar, written against generator words instead of
// partial derivatives, used to recheck certificates.
//
// A monomial is expanded into the word bdelta[s1]...bdelta[sk] delta[x]...
// (fields repeated by exponent). d acts letter by letter with the Koszul sign
// of the odd letters it passes; Delta contracts every (bdelta[x], delta[x])
// letter pair after moving it to the front.

#include <lbv/cochain.hpp>
#include <lbv/complex.hpp>
#include <lbv/reduction.hpp>

#include <string>
#include <vector>

namespace lbv::witness {

struct Letter {
  Site site;
  bool odd;
};

inline std::vector<Letter> spell(const Monomial& m) {
  std::vector<Letter> word;
  for (Site s : m.antifields()) word.push_back({s, true});
  for (const auto& [s, e] : m.fields())
    for (int i = 0; i < e; ++i) word.push_back({s, false});
  return word;
}

/// The monomial of a word with letters at `skip` removed and `extraFields` added, with its sign.
inline std::pair<int, Monomial> assemble(const std::vector<Letter>& word, const std::vector<std::size_t>& skip,
                                         const std::vector<Site>& extraFields) {
  std::vector<Site> odd;
  std::vector<Monomial::FieldPower> fields;
  for (std::size_t i = 0; i < word.size(); ++i) {
    bool skipped = false;
    for (std::size_t k : skip) skipped = skipped || k == i;
    if (skipped) continue;
    if (word[i].odd)
      odd.push_back(word[i].site);
    else
      fields.push_back({word[i].site, 1});
  }
  for (Site s : extraFields) fields.push_back({s, 1});
  return Monomial::canonical(std::move(fields), std::move(odd));
}

inline Cochain dQuantumByWords(const Cochain& c, const ModelParams& p) {
  Cochain out;
  for (const auto& [m, coeff] : c.terms()) {
    auto word = spell(m);
    int oddBefore = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (!word[i].odd) continue;
      Scalar sign = oddBefore % 2 == 0 ? Scalar(1) : Scalar(-1);
      Site y = word[i].site;
      const std::pair<Site, Scalar> stencil[] = {{y - 1, Scalar(1)}, {y, -p.diagonal()}, {y + 1, Scalar(1)}};
      for (const auto& [x, w] : stencil) {
        auto [s, n] = assemble(word, {i}, {x});
        if (s != 0) out.addTerm(n, Scalar(s) * sign * w * coeff);
      }
      ++oddBefore;
    }
    oddBefore = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (!word[i].odd) continue;
      Scalar sign = oddBefore % 2 == 0 ? Scalar(1) : Scalar(-1);
      for (std::size_t j = 0; j < word.size(); ++j) {
        if (word[j].odd || word[j].site != word[i].site) continue;
        auto [s, n] = assemble(word, {i, j}, {});
        if (s != 0) out.addTerm(n, Scalar(s) * sign * p.hbar() * coeff);
      }
      ++oddBefore;
    }
  }
  return out;
}

/// input - normalForm - d_hbar(homotopy), evaluated by words; zero iff the certificate holds.
inline Cochain certificateResidual(const HomotopyCertificate& cert, const ModelParams& p) {
  return cert.input - cert.normalForm - dQuantumByWords(cert.homotopy, p);
}

inline bool recheck(const HomotopyCertificate& cert, const ModelParams& p) {
  return certificateResidual(cert, p).isZero();
}

}  // namespace lbv::witness
