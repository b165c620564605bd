#include "support.hpp"

namespace lbv {
namespace {

using test::C;
using test::cAlpha;
using test::hbar;
using test::massless;
using test::symbolic;

TEST(Laplace, Examples) {
  EXPECT_EQ(laplace(LatticeFunction::indicator(0), massless()),
            (LatticeFunction{{-1, Scalar(1)}, {0, Scalar(-2)}, {1, Scalar(1)}}));
  EXPECT_EQ(laplace(LatticeFunction::indicator(0), symbolic()),
            (LatticeFunction{{-1, Scalar(1)}, {0, -cAlpha()}, {1, Scalar(1)}}));
  EXPECT_TRUE(laplace(LatticeFunction(), symbolic()).isZero());
}

TEST(Laplace, MassiveIsMasslessPlusMass) {
  RandomSource rng(31);
  ModelParams p = symbolic();
  for (int i = 0; i < 100; ++i) {
    LatticeFunction f = rng.function(-5, 5);
    LatticeFunction shifted = laplace(f, massless()) - massSquared(Scalar::alpha()) * f;
    ASSERT_EQ(laplace(f, p), shifted);
  }
}

TEST(Differential, Examples) {
  EXPECT_EQ(differential(Cochain::bdelta(1), massless()), C("delta[0] - 2*delta[1] + delta[2]"));
  EXPECT_TRUE(differential(Cochain::delta(0, 3), symbolic()).isZero());
  ModelParams p = symbolic();
  Cochain d0 = differential(Cochain::bdelta(0), p), d1 = differential(Cochain::bdelta(1), p);
  Cochain got = differential(Cochain::bdelta(0) * Cochain::bdelta(1), p);
  EXPECT_EQ(got, d0 * Cochain::bdelta(1) - Cochain::bdelta(0) * d1);
  EXPECT_TRUE(differential(got, p).isZero());
}

TEST(OddLaplacian, Examples) {
  EXPECT_EQ(oddLaplacian(C("bdelta[0]*delta[0]")), Cochain(1));
  EXPECT_TRUE(oddLaplacian(Cochain::delta(0)).isZero());
  EXPECT_TRUE(oddLaplacian(Cochain::bdelta(0)).isZero());
  EXPECT_TRUE(oddLaplacian(C("bdelta[1]*delta[0]")).isZero());
  EXPECT_EQ(oddLaplacian(C("bdelta[0]*delta[0]^3")), 3 * Cochain::delta(0, 2));
  EXPECT_EQ(oddLaplacian(C("bdelta[0]*bdelta[1]*delta[1]")), -Cochain::bdelta(0));
}

TEST(DQuantum, Examples) {
  EXPECT_EQ(dQuantum(C("bdelta[0]*delta[0]"), massless()),
            C("delta[-1]*delta[0] - 2*delta[0]^2 + delta[1]*delta[0] + hbar"));
  EXPECT_EQ(dQuantum(C("bdelta[1]*delta[-1]"), massless()),
            C("delta[0]*delta[-1] - 2*delta[1]*delta[-1] + delta[2]*delta[-1]"));
}

TEST(DQuantum, AgreesWithWordEvaluation) {
  RandomSource rng(32);
  ModelParams p = symbolic();
  for (int i = 0; i < 500; ++i) {
    Cochain c = rng.cochain();
    ASSERT_EQ(dQuantum(c, p), witness::dQuantumByWords(c, p)) << c.str();
  }
}

TEST(PoissonBracket, Examples) {
  EXPECT_EQ(poissonBracket(Cochain::bdelta(0), Cochain::delta(0)), Cochain(1));
  EXPECT_EQ(pairing(LatticeFunction::indicator(0), LatticeFunction::indicator(0)), Scalar(1));
  EXPECT_TRUE(poissonBracket(Cochain::delta(0), Cochain::delta(1)).isZero());
  EXPECT_TRUE(poissonBracket(Cochain::bdelta(2), Cochain::delta(0)).isZero());
}

TEST(KernelFunction, Examples) {
  ModelParams p = symbolic();
  EXPECT_EQ(kernelFunction(KernelFunctionKind::U, 3, p), Scalar::alpha(3));
  EXPECT_EQ(kernelFunction(KernelFunctionKind::V, 3, p), Scalar::alpha(-3));
  EXPECT_EQ(kernelFunction(KernelFunctionKind::B, 2, p), cAlpha());
  EXPECT_TRUE(kernelFunction(KernelFunctionKind::B, 0, p).isZero());
  for (Site x = -6; x <= 6; ++x) EXPECT_EQ(kernelFunction(KernelFunctionKind::B, x, massless()), Scalar(x));
  // (alpha - alpha^-1) B = u - v, the division-free form of the definition.
  Scalar s = Scalar::alpha() - Scalar::alpha(-1);
  for (Site x = -6; x <= 6; ++x)
    EXPECT_EQ(s * kernelFunction(KernelFunctionKind::B, x, p),
              kernelFunction(KernelFunctionKind::U, x, p) - kernelFunction(KernelFunctionKind::V, x, p));
}

TEST(KernelFunction, AnnihilatedByLaplacian) {
  for (const ModelParams& p : {symbolic(), massless(), ModelParams::specialized(1, 3)})
    for (auto kind : {KernelFunctionKind::U, KernelFunctionKind::V, KernelFunctionKind::A, KernelFunctionKind::B})
      for (Site x = -8; x <= 8; ++x)
        EXPECT_TRUE((kernelFunction(kind, x - 1, p) - p.diagonal() * kernelFunction(kind, x, p) +
                     kernelFunction(kind, x + 1, p))
                        .isZero());
}

TEST(Phi, Examples) {
  ModelParams p = symbolic();
  Scalar half(Rational(1, 2));
  Scalar s = Scalar::alpha() - Scalar::alpha(-1);
  EXPECT_EQ(phi(LatticeFunction::indicator(0), p), WeylElement::q());
  EXPECT_EQ(phi(LatticeFunction::indicator(1), p), WeylElement::basis(1, 0, half * cAlpha()) + WeylElement::p());
  EXPECT_EQ(phi(LatticeFunction{{2, Scalar(1)}, {0, Scalar(-1)}}, p),
            WeylElement::basis(1, 0, half * s * s) + WeylElement::basis(0, 1, cAlpha()));
}

TEST(Phi, MasslessSumsAndMoments) {
  RandomSource rng(33);
  for (int i = 0; i < 200; ++i) {
    LatticeFunction f = rng.function(-6, 6);
    Scalar sum, moment;
    for (const auto& [x, v] : f.values()) {
      sum += v;
      moment += Scalar(x) * v;
    }
    ASSERT_EQ(phi(f, massless()), WeylElement::basis(1, 0, sum) + WeylElement::basis(0, 1, moment));
  }
}

TEST(Phi, Section) {
  for (Site y : {0, 1, -3}) {
    auto [qRep, pRep] = phiSection(y);
    EXPECT_EQ(qRep, LatticeFunction::indicator(0));
    EXPECT_EQ(pRep, (LatticeFunction{{y + 1, Scalar(1)}, {y, Scalar(-1)}}));
    EXPECT_EQ(phi(qRep, massless()), WeylElement::q());
    EXPECT_EQ(phi(pRep, massless()), WeylElement::p());
  }
}

TEST(ComplexProperty, DifferentialsSquareToZero) {
  RandomSource rng(34);
  ModelParams p = symbolic();
  for (int i = 0; i < 1000; ++i) {
    Cochain c = rng.cochain();
    Cochain dc = differential(c, p), Dc = oddLaplacian(c);
    ASSERT_TRUE(differential(dc, p).isZero()) << c.str();
    ASSERT_TRUE(oddLaplacian(Dc).isZero()) << c.str();
    ASSERT_TRUE((differential(Dc, p) + oddLaplacian(dc)).isZero()) << c.str();
    ASSERT_TRUE(dQuantum(dQuantum(c, p), p).isZero()) << c.str();
  }
}

TEST(ComplexProperty, BvIdentityAndLeibniz) {
  RandomSource rng(35);
  ModelParams p = symbolic();
  for (int i = 0; i < 500; ++i) {
    int dx = rng.uniform(0, 2);
    Cochain x = rng.homogeneousCochain(dx), y = rng.homogeneousCochain(rng.uniform(0, 2));
    // Independent form of the bracket as a sum over contracted generator pairs.
    Cochain want;
    for (Site z = -6; z <= 6; ++z) {
      want += multiply(partialAntifield(z, x), partialField(z, y));
      for (const auto& [m, c] : x.terms()) {
        Cochain t = multiply(partialField(z, Cochain(m, c)), partialAntifield(z, y));
        want += m.isOdd() ? -t : t;
      }
    }
    ASSERT_EQ(poissonBracket(x, y), want) << x.str() << " | " << y.str();
    Cochain tail = multiply(x, differential(y, p));
    ASSERT_EQ(differential(multiply(x, y), p), multiply(differential(x, p), y) + (dx % 2 == 0 ? tail : -tail));
  }
}

TEST(ComplexProperty, DeltaIsNotADerivation) {
  Cochain x = Cochain::bdelta(0), y = Cochain::delta(0);
  EXPECT_FALSE(oddLaplacian(x * y) == oddLaplacian(x) * y - x * oddLaplacian(y));
}

TEST(ComplexProperty, PairingAdjointness) {
  RandomSource rng(36);
  ModelParams p = symbolic();
  for (int i = 0; i < 500; ++i) {
    LatticeFunction f = rng.function(-6, 6), g = rng.function(-6, 6);
    ASSERT_EQ(pairing(laplace(f, p), g), pairing(f, laplace(g, p)));
  }
}

Cochain bar(const LatticeFunction& f) {
  Cochain c;
  for (const auto& [x, v] : f.values()) c += v * Cochain::bdelta(x);
  return c;
}
Cochain plain(const LatticeFunction& f) {
  Cochain c;
  for (const auto& [x, v] : f.values()) c += v * Cochain::delta(x);
  return c;
}

TEST(ComplexProperty, GeneralFact) {
  RandomSource rng(37);
  ModelParams p = symbolic();
  for (int i = 0; i < 300; ++i) {
    LatticeFunction f = rng.function(-5, 5), g = rng.function(-5, 5);
    Cochain lhs = dQuantum(bar(f) * plain(g), p);
    Cochain rhs = dQuantum(bar(f), p) * plain(g) + Cochain(hbar() * pairing(f, g));
    ASSERT_EQ(lhs, rhs);
    ASSERT_EQ(dQuantum(bar(f), p), plain(laplace(f, p)));
  }
}

TEST(ComplexProperty, LaplacianInjectiveOnFiniteSupport) {
  RandomSource rng(38);
  ModelParams p = symbolic();
  for (int i = 0; i < 500; ++i) {
    LatticeFunction f = rng.nonzeroFunction(-8, 8);
    LatticeFunction Qf = laplace(f, p);
    ASSERT_FALSE(Qf.isZero());
    Site top = f.values().rbegin()->first, bottom = f.values().begin()->first;
    ASSERT_EQ(Qf(top + 1), f(top));
    ASSERT_EQ(Qf(bottom - 1), f(bottom));
  }
}

TEST(ComplexProperty, PhiVanishesOnImage) {
  RandomSource rng(39);
  ModelParams p = symbolic();
  for (int i = 0; i < 300; ++i) {
    LatticeFunction g = rng.function(-6, 6);
    ASSERT_TRUE(phi(laplace(g, p), p).isZero()) << g.str();
  }
}

TEST(ComplexProperty, SpecializationCommutesWithDifferential) {
  RandomSource rng(40);
  ModelParams p = symbolic(), q = ModelParams::specialized(Rational(1, 3), 2);
  for (int i = 0; i < 200; ++i) {
    Cochain c = rng.cochain();
    ASSERT_EQ(q.apply(dQuantum(c, p)), dQuantum(q.apply(c), q));
  }
}

TEST(ModelParams, Validation) {
  EXPECT_THROW(ModelParams(Scalar(0), hbar()), std::domain_error);
  EXPECT_THROW(ModelParams(Scalar::alpha() + Scalar(1), hbar()), std::domain_error);
  EXPECT_TRUE(symbolic().alphaIsSymbolic());
  EXPECT_EQ(massless().diagonal(), Scalar(2));
}

}  // namespace
}  // namespace lbv
