#include "support.hpp"

#include <lbv/checks.hpp>

namespace lbv {
namespace {

using test::C;
using test::symbolic;

Interval half(int a2, int b2) { return Interval(makeRational(a2, 2), makeRational(b2, 2)); }

TEST(Interval, Colors) {
  EXPECT_THROW(Interval(0, 2), std::invalid_argument);
  EXPECT_THROW(Interval(3, 1), std::invalid_argument);
  EXPECT_NO_THROW(half(0, 5));
  Interval I(0, 5);
  EXPECT_EQ(I.fieldSites(), (std::vector<Site>{1, 2, 3, 4}));
  EXPECT_EQ(I.antifieldSites(), (std::vector<Site>{2, 3}));
  EXPECT_EQ(half(-4, 1).fieldSites(), (std::vector<Site>{-1, 0}));
  EXPECT_EQ(Interval::parse("-4,4"), Interval(-4, 4));
  EXPECT_EQ(Interval::parse("(-1/2, 3)"), half(-1, 6));
  EXPECT_EQ(Interval(Rational(4, 2), Rational(10, 2)), Interval(2, 5));
}

TEST(Gamma, Examples) {
  EXPECT_EQ(gammaPermutation({{Interval(0, 3)}, Interval(0, 8)}), identityPermutation(1));
  EXPECT_EQ(gammaPermutation({{Interval(0, 3), Interval(4, 7)}, Interval(0, 8)}), identityPermutation(2));
  EXPECT_EQ(gammaPermutation({{Interval(4, 7), Interval(0, 3)}, Interval(0, 8)}), (Permutation{1, 0}));
}

TEST(Gamma, RejectsInvalidOperations) {
  EXPECT_THROW(gammaPermutation({{Interval(0, 4), Interval(3, 7)}, Interval(0, 8)}), std::invalid_argument);
  EXPECT_THROW(gammaPermutation({{Interval(0, 4)}, Interval(1, 8)}), std::invalid_argument);
}

TEST(FactorizationProduct, Examples) {
  Interval J(-3, 3), I1 = half(-4, 1), I2 = half(1, 6);
  EXPECT_EQ(factorizationProduct({{Cochain::delta(0), I1}, {C("delta[2] - delta[1]"), I2}}, J),
            C("delta[0]*delta[2] - delta[0]*delta[1]"));
  EXPECT_EQ(factorizationProduct({{C("delta[1]^2"), Interval(0, 3)}}, J), C("delta[1]^2"));
  EXPECT_EQ(factorizationProduct({{Cochain(1), I1}, {Cochain(1), I2}}, J), Cochain(1));
  EXPECT_THROW(factorizationProduct({{Cochain::delta(2), I1}, {Cochain(1), I2}}, J), std::invalid_argument);
  EXPECT_THROW(factorizationProduct({{Cochain(1), I1}, {Cochain(1), I1}}, J), std::invalid_argument);
}

TEST(SumOperation, Examples) {
  LatticeFunction f = LatticeFunction::indicator(0), g{{3, Scalar(2)}};
  EXPECT_EQ(sumOperationV({{f, Interval(-2, 1)}, {g, Interval(2, 5)}}, Interval(-3, 6)),
            (LatticeFunction{{0, Scalar(1)}, {3, Scalar(2)}}));
  EXPECT_EQ(sumOperationV({{f, Interval(-2, 1)}}, Interval(-3, 6)), f);
  EXPECT_EQ(sumOperationV({{f, Interval(-2, 1)}, {LatticeFunction(), Interval(2, 5)}}, Interval(-3, 6)), f);
  EXPECT_THROW(sumOperationV({{g, Interval(-2, 1)}}, Interval(-3, 6)), std::invalid_argument);
}

TEST(Symmetry, Translate) {
  EXPECT_EQ(translate(Cochain::delta(0), 1), Cochain::delta(1));
  EXPECT_EQ(translate(C("bdelta[2]*delta[0]"), -2), C("bdelta[0]*delta[-2]"));
  Cochain c = C("3*bdelta[1]*bdelta[4]*delta[2]^2 + hbar");
  EXPECT_EQ(translate(c, 0), c);
}

TEST(Symmetry, TimeReversal) {
  EXPECT_EQ(timeReversal(C("delta[2] - delta[1]")), C("delta[-2] - delta[-1]"));
  // Negating (1, 2) gives (-1, -2); sorting costs one transposition.
  EXPECT_EQ(timeReversal(C("bdelta[1]*bdelta[2]")), -C("bdelta[-2]*bdelta[-1]"));
  Cochain c = C("bdelta[-1]*bdelta[0]*bdelta[3]*delta[1] - alpha*delta[2]^3");
  EXPECT_EQ(timeReversal(timeReversal(c)), c);
}

TEST(Symmetry, GroupLaws) {
  LatticeSymmetry t = LatticeSymmetry::translation(3), r = LatticeSymmetry::timeReversal();
  EXPECT_EQ(r.after(r), LatticeSymmetry{});
  EXPECT_EQ(t.after(t.inverse()), LatticeSymmetry{});
  EXPECT_EQ(r.after(t).after(r), LatticeSymmetry::translation(-3));
  EXPECT_EQ(r(Interval(1, 4)), Interval(-4, -1));
}

TEST(LocalConstancy, Examples) {
  EXPECT_TRUE(localConstancyCheck(Interval(0, 3), Interval(-1, 4), 2, 1, 1));
  InclusionReport r = inclusionOnH0(Interval(0, 3), Interval(-1, 4), 2, 1, 1);
  EXPECT_EQ(r.sourceDimension, 6u);
  EXPECT_EQ(r.targetDimension, 6u);
  EXPECT_TRUE(localConstancyCheck(Interval(-2, 2), Interval(-2, 2), 3, 1, 2));
  EXPECT_TRUE(localConstancyCheck(half(0, 5), Interval(0, 25), 1, 1, 1));
  EXPECT_THROW(localConstancyCheck(Interval(0, 3), Interval(1, 5), 1, 1, 1), std::invalid_argument);
}

TEST(OperadProperty, GammaRespectsComposition) {
  RandomSource rng(61);
  for (int i = 0; i < 300; ++i) {
    auto [outer, inner] = detail::randomNestedOperation(rng);
    std::vector<Permutation> innerPerms;
    for (const auto& op : inner) innerPerms.push_back(gammaPermutation(op));
    IntervalOperation composite = composeOperations(outer, inner);
    ASSERT_TRUE(composite.isValid());
    ASSERT_EQ(gammaPermutation(composite), composeAs(gammaPermutation(outer), innerPerms));
  }
}

TEST(OperadProperty, GammaEquivariance) {
  RandomSource rng(62);
  for (int i = 0; i < 300; ++i) {
    IntervalOperation op = detail::randomOperation(rng, rng.uniform(1, 5));
    int n = static_cast<int>(op.inputs.size());
    ASSERT_EQ(gammaPermutation(LatticeSymmetry::translation(rng.uniform(-10, 10))(op)), gammaPermutation(op));
    Permutation rev = reversalPermutation(n);
    ASSERT_EQ(gammaPermutation(LatticeSymmetry::timeReversal()(op)), composePermutations(rev, gammaPermutation(op)));
  }
}

TEST(OperadProperty, SymmetriesCommuteWithDifferential) {
  RandomSource rng(63);
  ModelParams p = symbolic();
  for (int i = 0; i < 300; ++i) {
    Cochain c = rng.cochain();
    int n = rng.uniform(-7, 7);
    ASSERT_EQ(dQuantum(translate(c, n), p), translate(dQuantum(c, p), n));
    ASSERT_EQ(dQuantum(timeReversal(c), p), timeReversal(dQuantum(c, p)));
    ASSERT_EQ(translate(multiply(c, c), n), multiply(translate(c, n), translate(c, n)));
  }
}

TEST(OperadProperty, DifferentialPreservesSupport) {
  RandomSource rng(64);
  ModelParams p = symbolic();
  for (int i = 0; i < 300; ++i) {
    Interval I(rng.uniform(-6, -1), rng.uniform(3, 7));
    GeneratorOptions o;
    o.siteLo = static_cast<Site>(I.lower().get_num().get_si()) + 2;
    o.siteHi = static_cast<Site>(I.upper().get_num().get_si()) - 2;
    Cochain c = rng.cochain(o);
    ASSERT_TRUE(supportWithin(c, I)) << c.str();
    ASSERT_TRUE(supportWithin(dQuantum(c, p), I)) << c.str();
  }
}

TEST(OperadProperty, ProductCompatibleWithComposition) {
  RandomSource rng(65);
  for (int i = 0; i < 200; ++i) {
    auto [outer, inner] = detail::randomNestedOperation(rng);
    // One even cochain per innermost interval.
    std::vector<std::vector<std::pair<Cochain, Interval>>> groups;
    std::vector<std::pair<Cochain, Interval>> flat;
    for (const auto& op : inner) {
      auto& g = groups.emplace_back();
      for (const Interval& I : op.inputs) {
        auto sites = I.fieldSites();
        Cochain c = rng.nonzeroScalar() * Cochain::delta(sites[rng.uniform(0, static_cast<int>(sites.size()) - 1)]);
        g.emplace_back(c, I);
        flat.emplace_back(c, I);
      }
    }
    std::vector<std::pair<Cochain, Interval>> twoStep;
    for (std::size_t k = 0; k < inner.size(); ++k)
      twoStep.emplace_back(factorizationProduct(groups[k], inner[k].output), inner[k].output);
    ASSERT_EQ(factorizationProduct(twoStep, outer.output), factorizationProduct(flat, outer.output));
  }
}

}  // namespace
}  // namespace lbv
