#include "dsphere/algebra.hpp"

#include <gtest/gtest.h>

using namespace dsphere;

namespace {
const AlgElement a = AlgElement::a(), as = AlgElement::aStar(), b = AlgElement::b(), bs = AlgElement::bStar(),
                 t = AlgElement::t(), one = AlgElement::one();
const CoeffPoly lam = CoeffPoly::lam(), lamc = CoeffPoly::lamc();
}  // namespace

TEST(Algebra, CommutationRules) {
    EXPECT_EQ(b * a, lamc * (a * b));
    EXPECT_EQ(a * b, lam * (b * a));
    EXPECT_EQ(as * bs, lam * (bs * as));
    EXPECT_EQ(a * bs, lamc * (bs * a));
    EXPECT_EQ(a * as, as * a);
    EXPECT_EQ(b * bs, bs * b);
    EXPECT_EQ(t * a - a * t, AlgElement());
}

TEST(Algebra, SphereRelation) {
    EXPECT_EQ(a * as, one - t * t - b * bs);
    EXPECT_EQ(a * as + b * bs + t * t, one);
}

TEST(Algebra, NormalFormIsReduced) {
    AlgElement x = as * b * a * bs * as;
    for (const auto& [m, c] : x.terms()) EXPECT_TRUE(m.isReduced()) << m.str();
}

TEST(Algebra, Star) {
    EXPECT_EQ(star(a), as);
    EXPECT_EQ(star(lam * b), lamc * bs);
    EXPECT_EQ(star(star(a * b)), a * b);
    EXPECT_EQ(star(a * b), star(b) * star(a));
}

TEST(Algebra, Associativity) {
    AlgElement x = a + lam * bs, y = t * b - as, z = bs * a + CoeffPoly::phi(0) * one;
    EXPECT_EQ((x * y) * z, x * (y * z));
}

TEST(Algebra, SpecializeKeepsLam) {
    AlgElement x = CoeffPoly::phi(1) * a + lam * b;
    EXPECT_EQ(specialize(x, PhiSpec::Constant(2)), lam * b);
}

TEST(Algebra, ClassicalImage) {
    ClassicalPoly x = etaAlg(lamc * (a * b));
    ClassicalPoly y = etaAlg(b * a);
    EXPECT_EQ(x, y);
    EXPECT_TRUE(etaAlg(AlgElement()).terms().empty());
    EXPECT_EQ(etaAlg(one - t * t - b * bs), etaAlg(a * as).onSphere());
}
