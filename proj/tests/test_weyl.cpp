#include "support.hpp"

#include <algorithm>
#include <map>

namespace lbv {
namespace {

using test::C;
using test::cAlpha;
using test::hbar;
using test::massless;
using test::symbolic;

// Normal ordering by single swaps pq -> qp + hbar on words.
WeylElement normalOrderBySwaps(std::map<std::string, Scalar> words, const Scalar& h) {
  WeylElement out;
  while (!words.empty()) {
    auto node = words.extract(words.begin());
    const std::string& w = node.key();
    Scalar c = node.mapped();
    auto pos = w.find("pq");
    if (pos == std::string::npos) {
      int a = static_cast<int>(std::count(w.begin(), w.end(), 'q'));
      out.addTerm(a, static_cast<int>(w.size()) - a, c);
      continue;
    }
    std::string swapped = w.substr(0, pos) + "qp" + w.substr(pos + 2);
    std::string contracted = w.substr(0, pos) + w.substr(pos + 2);
    words[swapped] += c;
    words[contracted] += h * c;
  }
  return out;
}

std::map<std::string, Scalar> asWords(const WeylElement& x) {
  std::map<std::string, Scalar> out;
  for (const auto& [e, c] : x.terms()) out[std::string(e.first, 'q') + std::string(e.second, 'p')] += c;
  return out;
}

WeylElement productBySwaps(const WeylElement& x, const WeylElement& y, const Scalar& h) {
  std::map<std::string, Scalar> words;
  for (const auto& [wx, cx] : asWords(x))
    for (const auto& [wy, cy] : asWords(y)) words[wx + wy] += cx * cy;
  return normalOrderBySwaps(words, h);
}

WeylElement randomWeyl(RandomSource& rng, int maxDegree) {
  WeylElement w;
  int terms = rng.uniform(1, 3);
  for (int i = 0; i < terms; ++i) {
    int d = rng.uniform(0, maxDegree);
    int b = rng.uniform(0, d);
    w.addTerm(d - b, b, rng.nonzeroScalar());
  }
  return w;
}

const WeylElement q = WeylElement::q(), p = WeylElement::p();

TEST(WeylMul, Examples) {
  EXPECT_EQ(weylMul(p, q), WeylElement::basis(1, 1) + WeylElement(hbar()));
  EXPECT_EQ(weylMul(q, p), WeylElement::basis(1, 1));
  EXPECT_EQ(weylMul(p, weylPow(q, 2)), WeylElement::basis(2, 1) + WeylElement::basis(1, 0, Scalar(2) * hbar()));
}

TEST(WeylMul, AgreesWithSingleSwaps) {
  RandomSource rng(71);
  for (int i = 0; i < 300; ++i) {
    WeylElement x = randomWeyl(rng, 4), y = randomWeyl(rng, 4);
    ASSERT_EQ(weylMul(x, y), productBySwaps(x, y, hbar())) << x.str() << " * " << y.str();
  }
}

TEST(WeylMul, Associative) {
  RandomSource rng(72);
  for (int i = 0; i < 200; ++i) {
    WeylElement x = randomWeyl(rng, 3), y = randomWeyl(rng, 3), z = randomWeyl(rng, 3);
    ASSERT_EQ(weylMul(weylMul(x, y), z), weylMul(x, weylMul(y, z)));
  }
}

TEST(StarProduct, MasslessCommutator) {
  ModelParams m = massless();
  StarGeometry g = StarGeometry::massless35();
  H0Class x(C("delta[2] - delta[1]"), g.ambient, m), y(Cochain::delta(0), g.ambient, m);
  StarTrace tx, ty;
  H0Class xy = starProduct(x, y, g, m, &tx), yx = starProduct(y, x, g, m, &ty);
  EXPECT_EQ((xy - yx).canonical(), Cochain(hbar()));
  EXPECT_TRUE(verifyCertificate((xy - yx).reduction(), m));
  EXPECT_TRUE(verifyCertificate(tx.leftRelocation, m));
  EXPECT_TRUE(verifyCertificate(ty.rightRelocation, m));
}

TEST(StarProduct, SquareOfQ) {
  ModelParams m = massless();
  StarGeometry g = StarGeometry::standard();
  H0Class x(Cochain::delta(0), g.ambient, m);
  H0Class xx = starProduct(x, x, g, m);
  EXPECT_EQ(xx.canonical(), Cochain::delta(0, 2));
  EXPECT_TRUE(witness::recheck(xx.reduction(), m));
  EXPECT_EQ(normalForm(xx.representative(), g.ambient, kCanonicalWindow, m, Strategy::LeftmostOutermost).normalForm,
            Cochain::delta(0, 2));
}

TEST(StarProduct, MassiveCommutator) {
  ModelParams s = symbolic();
  StarGeometry g = StarGeometry::standard();
  H0Class x(C("delta[1] - delta[-1]"), g.ambient, s), y(Cochain::delta(0), g.ambient, s);
  H0Class comm = starProduct(x, y, g, s) - starProduct(y, x, g, s);
  EXPECT_EQ(comm.canonical(), Cochain(Scalar(2) * hbar()));
  WeylIdentification W(s, 2);
  EXPECT_EQ(W.classToWeyl(starProduct(W.pClass(), W.qClass(), g, s) - starProduct(W.qClass(), W.pClass(), g, s)),
            WeylElement(hbar()));
}

TEST(StarProduct, ChainLevelForOrderedSupports) {
  ModelParams s = symbolic();
  StarGeometry g = StarGeometry::standard();
  // Representatives already in the two windows multiply on the nose.
  H0Class x(C("delta[-3]*delta[-2]^2"), g.ambient, s), y(C("delta[1] + 2*delta[0]^3"), g.ambient, s);
  StarTrace t;
  starProduct(x, y, g, s, &t);
  EXPECT_EQ(t.product, x.representative() * y.representative());
}

TEST(StarProduct, IndependentOfGeometry) {
  RandomSource rng(73);
  ModelParams m = massless();
  StarGeometry a = StarGeometry::standard(), b = StarGeometry::massless35();
  GeneratorOptions o;
  o.siteLo = -1;
  o.siteHi = 2;
  o.maxPolynomialDegree = 3;
  o.maxTerms = 2;
  for (int i = 0; i < 30; ++i) {
    Cochain x = rng.evenCochain(o), y = rng.evenCochain(o);
    H0Class inA = starProduct(H0Class(x, a.ambient, m), H0Class(y, a.ambient, m), a, m);
    H0Class inB = starProduct(H0Class(x, b.ambient, m), H0Class(y, b.ambient, m), b, m);
    ASSERT_EQ(inA.canonical(), inB.canonical()) << x.str() << " * " << y.str();
  }
}

TEST(StarProduct, AssociativeAndUnital) {
  ModelParams m = ModelParams::specialized(1, 2);
  StarGeometry g = StarGeometry::standard();
  std::vector<H0Class> basis;
  for (int d = 0; d <= 2; ++d)
    for (int b = 0; b <= d; ++b) basis.emplace_back(Cochain::delta(0, d - b) * Cochain::delta(1, b), g.ambient, m);
  H0Class one = H0Class::one(g.ambient, m);
  for (const auto& x : basis) {
    EXPECT_EQ(starProduct(one, x, g, m), x);
    EXPECT_EQ(starProduct(x, one, g, m), x);
    for (const auto& y : basis)
      for (const auto& z : basis)
        ASSERT_EQ(starProduct(starProduct(x, y, g, m), z, g, m), starProduct(x, starProduct(y, z, g, m), g, m));
  }
}

TEST(StarGeometry, Validation) {
  EXPECT_NO_THROW(StarGeometry::standard().validate());
  EXPECT_NO_THROW(StarGeometry::massless35().validate());
  EXPECT_EQ(StarGeometry::byName("default").ambient, Interval(-4, 4));
  EXPECT_THROW(StarGeometry::byName("tiny"), std::invalid_argument);
  StarGeometry bad{Interval(-4, 4), Interval(0, 3), Interval(-3, 1)};
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(WeylIdentification, Generators) {
  ModelParams s = symbolic();
  WeylIdentification W(s, 3);
  Interval J = W.geometry().ambient;
  EXPECT_EQ(W.classToWeyl(H0Class(Cochain::delta(0), J, s)), q);
  EXPECT_EQ(W.classToWeyl(H0Class(Scalar(Rational(1, 2)) * C("delta[1] - delta[-1]"), J, s)), p);
  EXPECT_EQ(W.classToWeyl(H0Class::one(J, s)), WeylElement(1));
  EXPECT_EQ(W.weylToClass(q), H0Class(Cochain::delta(0), J, s));
  EXPECT_EQ(W.weylToClass(WeylElement::basis(1, 1)), starProduct(W.qClass(), W.pClass(), W.geometry(), s));
  EXPECT_EQ(W.weylToClass(WeylElement(1)), H0Class::one(J, s));
}

TEST(WeylIdentification, MasslessMomentumRepresentatives) {
  ModelParams m = massless();
  WeylIdentification W(m, 1);
  Interval J = W.geometry().ambient;
  // [delta[x+1] - delta[x]] does not depend on x when alpha = 1.
  for (Site x = -3; x <= 2; ++x) EXPECT_EQ(W.classToWeyl(H0Class(Cochain::delta(x + 1) - Cochain::delta(x), J, m)), p);
  EXPECT_EQ(H0Class(C("delta[2] - delta[1]"), J, m), H0Class(C("delta[1] - delta[0]"), J, m));
  EXPECT_EQ(H0Class(C("delta[0] - delta[-1]"), J, m), H0Class(C("delta[1] - delta[0]"), J, m));
}

TEST(WeylIdentification, RoundTripAndTriangularity) {
  WeylIdentification W(ModelParams::specialized(1, 3), 5);
  EXPECT_TRUE(W.basisChangeIsUnitriangular());
  for (int d = 0; d <= 5; ++d)
    for (int b = 0; b <= d; ++b) {
      WeylElement w = WeylElement::basis(d - b, b);
      EXPECT_EQ(W.classToWeyl(W.weylToClass(w)), w);
    }
  EXPECT_THROW(W.psi(6, 0), std::out_of_range);
  EXPECT_THROW(W.classToWeyl(H0Class(Cochain::delta(0, 6), W.geometry().ambient, W.params())), std::out_of_range);
}

TEST(TimeEvolution, Generators) {
  ModelParams s = symbolic();
  Scalar half(Rational(1, 2));
  Scalar sinh = half * (Scalar::alpha() - Scalar::alpha(-1));
  EXPECT_EQ(timeEvolution(q, massless()), q + p);
  EXPECT_EQ(timeEvolution(p, massless()), p);
  EXPECT_EQ(timeEvolution(q, s), WeylElement::basis(1, 0, half * cAlpha()) + p);
  EXPECT_EQ(timeEvolution(p, s), WeylElement::basis(1, 0, sinh * sinh) + WeylElement::basis(0, 1, half * cAlpha()));
  WeylElement tq = timeEvolution(q, s), tp = timeEvolution(p, s);
  EXPECT_EQ(weylMul(tp, tq) - weylMul(tq, tp), WeylElement(hbar()));
}

TEST(TimeEvolution, MatchesTranslationOfClasses) {
  ModelParams s = symbolic();
  WeylIdentification W(s, 3);
  for (int d = 0; d <= 3; ++d)
    for (int b = 0; b <= d; ++b) {
      WeylElement w = WeylElement::basis(d - b, b);
      H0Class moved = translateClass(W.weylToClass(w), 1, s);
      EXPECT_EQ(W.classToWeyl(moved), timeEvolution(w, s)) << w.str();
    }
}

TEST(TimeEvolution, IsAnAlgebraMap) {
  RandomSource rng(74);
  ModelParams s = symbolic();
  for (int i = 0; i < 50; ++i) {
    WeylElement x = randomWeyl(rng, 2), y = randomWeyl(rng, 2);
    ASSERT_EQ(timeEvolution(weylMul(x, y), s), weylMul(timeEvolution(x, s), timeEvolution(y, s)));
  }
}

TEST(TimeReversal, Examples) {
  EXPECT_EQ(timeReversalWeyl(WeylElement::basis(1, 1)), -(WeylElement::basis(1, 1) + WeylElement(hbar())));
  EXPECT_EQ(timeReversalWeyl(WeylElement::basis(2, 0)), WeylElement::basis(2, 0));
  EXPECT_EQ(timeReversalWeyl(p), -p);
}

TEST(TimeReversal, AntiInvolution) {
  RandomSource rng(75);
  for (int i = 0; i < 200; ++i) {
    WeylElement x = randomWeyl(rng, 3), y = randomWeyl(rng, 3);
    ASSERT_EQ(timeReversalWeyl(timeReversalWeyl(x)), x);
    ASSERT_EQ(timeReversalWeyl(weylMul(x, y)), weylMul(timeReversalWeyl(y), timeReversalWeyl(x)));
  }
}

TEST(TimeReversal, MatchesReflectionOfClasses) {
  ModelParams s = symbolic();
  WeylIdentification W(s, 3);
  EXPECT_EQ(W.classToWeyl(reverseClass(W.qClass(), s)), q);
  EXPECT_EQ(W.classToWeyl(reverseClass(W.pClass(), s)), -p);
  for (int d = 0; d <= 3; ++d)
    for (int b = 0; b <= d; ++b) {
      WeylElement w = WeylElement::basis(d - b, b);
      EXPECT_EQ(W.classToWeyl(reverseClass(W.weylToClass(w), s)), timeReversalWeyl(w)) << w.str();
    }
}

TEST(Fock, Examples) {
  EXPECT_EQ(fockAction(q, FockVector::monomial(3)), FockVector::monomial(4));
  EXPECT_EQ(fockAction(p, FockVector::monomial(3)), FockVector::monomial(2, Scalar(3) * hbar()));
  EXPECT_TRUE(fockAction(p, FockVector::monomial(0)).isZero());
  for (int n = 1; n <= 10; ++n)
    EXPECT_EQ(fockAction(p, FockVector::monomial(n), Scalar(1)), FockVector::monomial(n - 1, Scalar(n)));
}

TEST(Fock, ModuleAxioms) {
  RandomSource rng(76);
  for (int i = 0; i < 200; ++i) {
    WeylElement x = randomWeyl(rng, 3), y = randomWeyl(rng, 3);
    FockVector v;
    for (int k = 0; k < 3; ++k) v.add(rng.uniform(0, 4), rng.scalar());
    ASSERT_EQ(fockAction(weylMul(x, y), v), fockAction(x, fockAction(y, v)));
    ASSERT_EQ(fockAction(p, fockAction(q, v)) - fockAction(q, fockAction(p, v)), hbar() * v);
    ASSERT_TRUE(fockAction(weylMul(x, p), FockVector::monomial(0)).isZero());
  }
}

TEST(Fock, CoinvariantIdeal) {
  auto gens = coinvariantIdealGenerators();
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_TRUE(gens[0].isZero());
  EXPECT_EQ(gens[1], WeylElement::basis(0, 1, Scalar(2)));
  // Using a - tau(a) for every a, not just the generators, would also put
  // qp - tau(qp) = 2qp + hbar in the ideal. Its image hbar is nonzero, so that
  // quotient is smaller than K[q].
  WeylElement qp = WeylElement::basis(1, 1);
  WeylElement diff = qp - timeReversalWeyl(qp);
  EXPECT_EQ(diff, WeylElement::basis(1, 1, Scalar(2)) + WeylElement(hbar()));
  EXPECT_EQ(coinvariantProjection(diff), FockVector::monomial(0, hbar()));
}

}  // namespace
}  // namespace lbv
