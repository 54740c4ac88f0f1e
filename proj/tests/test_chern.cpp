#include "dsphere/chern.hpp"

#include <gtest/gtest.h>

using namespace dsphere;

TEST(Chern, PairingIsMinusOne) {
    for (const PhiSpec& phi : {PhiSpec::Formal(), PhiSpec::Constant(Rational(1, 3)), PhiSpec::Polynomial({0, 0, 1}),
                               PhiSpec::Polynomial({0, -1, 0, 1})})
        EXPECT_EQ(pairingCh2(phi), ExactValue(Gauss(-1))) << phi.str();
}

TEST(Chern, UnitaryOnThreeSphere) {
    EXPECT_TRUE(unitaryCheck());
    auto u = unitaryU();
    EXPECT_EQ(u[2], -(CoeffPoly::lam() * AlgElement::bStar()));
}

TEST(Chern, OddChainMatchesPairFormula) {
    MatsumotoResult m = matsumotoCh();
    EXPECT_TRUE(m.unitary);
    EXPECT_EQ(m.chain, m.chainFromU);
    EXPECT_EQ(m.chain, oddChernChain());
    EXPECT_EQ(m.image, m.expectedImage);
    EXPECT_TRUE(m.primitiveChecks);
}

TEST(Chern, DiskCalculus) {
    DiskFunction r = DiskFunction::r();
    DiskForm dr = diskD(r);
    DiskFunction b = DiskFunction::fromAlg(AlgElement::b()), bs = DiskFunction::fromAlg(AlgElement::bStar());
    EXPECT_EQ(dr.db, bs);
    EXPECT_EQ(dr.dbStar, b);
    EXPECT_EQ(b * bs, r);
    EXPECT_ANY_THROW(DiskFunction::fromAlg(AlgElement::a()));
}

// With lam = exp(2 pi i f): lam d lamc - lamc d lam = -4 pi i f' dr, so
// -1/(2 pi i) r (lam d lamc - lamc d lam) = +2 r f'(r) dr; the printed -2 r f' has the opposite sign.
TEST(Chern, ReducedImageSign) {
    MatsumotoResult m = matsumotoCh();
    RadialPoly expected;
    RadialKey k;
    k.r = 1;
    k.jet[1] = 1;
    expected.addTerm(k, Gauss(2));
    EXPECT_EQ(m.normalized, expected);
    EXPECT_EQ(radialDerivative(m.primitive), m.normalized);
}

TEST(Chern, LinearExample) {
    MatsumotoResult m = matsumotoCh(PhiSpec::Polynomial({0, 1}));
    RadialPoly twoR, rSq;
    RadialKey k1, k2;
    k1.r = 1;
    k2.r = 2;
    twoR.addTerm(k1, Gauss(2));
    rSq.addTerm(k2, Gauss(1));
    EXPECT_EQ(m.normalized, twoR);
    EXPECT_EQ(m.primitive, rSq);
    EXPECT_TRUE(m.primitiveChecks);
}

TEST(Chern, RadialPrimitive) {
    RadialPoly h;
    RadialKey k;
    k.r = 3;
    k.jet[2] = 1;  // r^3 f''
    h.addTerm(k, Gauss(5));
    RadialPoly p = radialPrimitive(h);
    EXPECT_EQ(radialDerivative(p), h) << p.str();
    std::vector<Rational> f{0, 0, 1};  // f = r^2: 5 r^3 * 2 = 10 r^3
    RadialPoly expect;
    RadialKey r3;
    r3.r = 3;
    expect.addTerm(r3, Gauss(10));
    EXPECT_EQ(substituteF(h, f), expect);
}
