#include "dsphere/coeff_poly.hpp"
#include "dsphere/exact_value.hpp"

#include <gtest/gtest.h>

using namespace dsphere;

TEST(Gauss, FieldArithmetic) {
    Gauss x(Rational(1, 2), Rational(-3));
    EXPECT_EQ(x * x.conj(), Gauss(Rational(37, 4)));
    EXPECT_EQ(x / x, Gauss(1));
    EXPECT_EQ(Gauss::I() * Gauss::I(), Gauss(-1));
    EXPECT_EQ(ipow(3), -Gauss::I());
    EXPECT_EQ(ipow(-1), -Gauss::I());
}

TEST(Gauss, RatioIsReduced) {
    Rational r = ratio(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_EQ(rationalStr(ratio(2, 2)), "1");
}

TEST(Gauss, ParseRational) {
    EXPECT_EQ(parseRational("3/6"), Rational(1, 2));
    EXPECT_EQ(parseRational("0.25"), Rational(1, 4));
    EXPECT_ANY_THROW(parseRational("1/0"));
}

TEST(CoeffPoly, LamTimesLamcIsOne) {
    EXPECT_EQ(CoeffPoly::lam() * CoeffPoly::lamc(), CoeffPoly(1));
}

TEST(CoeffPoly, PolynomialProduct) {
    CoeffPoly t = CoeffPoly::t();
    EXPECT_EQ((t + CoeffPoly(1)) * (t - CoeffPoly(1)), t * t - CoeffPoly(1));
}

TEST(CoeffPoly, LamSquaredStays) {
    CoeffPoly l2 = CoeffPoly::lam() * CoeffPoly::lam();
    EXPECT_EQ(l2, CoeffPoly(Gauss(1), CoeffMono::lamPow(2)));
    EXPECT_EQ(l2.str(), "lam^2");
}

TEST(CoeffPoly, Derivatives) {
    CoeffPoly t = CoeffPoly::t();
    EXPECT_EQ(ddt(t * t), CoeffPoly(2) * t);
    EXPECT_EQ(ddt(CoeffPoly::lam()), CoeffPoly(-Gauss::I()) * CoeffPoly::phi(1) * CoeffPoly::lam());
    EXPECT_EQ(ddt(CoeffPoly::lamc()), CoeffPoly(Gauss::I()) * CoeffPoly::phi(1) * CoeffPoly::lamc());
    EXPECT_TRUE(ddt(CoeffPoly::lam() * CoeffPoly::lamc()).isZero());
    EXPECT_EQ(ddt(CoeffPoly::phi(1)), CoeffPoly::phi(2));
}

TEST(CoeffPoly, ProductRuleOnMixedTerm) {
    CoeffPoly t = CoeffPoly::t();
    CoeffPoly x = t * CoeffPoly::lam() + CoeffPoly::phi(0) * CoeffPoly::lamc();
    CoeffPoly y = t * t - CoeffPoly::phi(1);
    EXPECT_EQ(ddt(x * y), ddt(x) * y + x * ddt(y));
}

TEST(CoeffPoly, Conjugation) {
    CoeffPoly x = CoeffPoly(Gauss(1, 2)) * CoeffPoly::lam() * CoeffPoly::t();
    EXPECT_EQ(x.conj(), CoeffPoly(Gauss(1, -2)) * CoeffPoly::lamc() * CoeffPoly::t());
    EXPECT_EQ(CoeffPoly::lamDot().conj(), ddt(CoeffPoly::lamc()));
}

TEST(PhiSpec, Specialize) {
    CoeffPoly t = CoeffPoly::t();
    EXPECT_TRUE(specialize(CoeffPoly::phi(1) * t, PhiSpec::Constant(Rational(1, 3))).isZero());
    EXPECT_EQ(specialize(CoeffPoly::phi(2), PhiSpec::Polynomial({0, 0, 1})), CoeffPoly(2));
    EXPECT_EQ(specialize(CoeffPoly::lam(), PhiSpec::Constant(Rational(1, 3))), CoeffPoly::lam());
    EXPECT_EQ(specialize(CoeffPoly::phi(0), PhiSpec::Polynomial({1, 2})), CoeffPoly(1) + CoeffPoly(2) * t);
}

TEST(PhiSpec, Parse) {
    EXPECT_TRUE(PhiSpec::parse("formal").formal);
    PhiSpec c = PhiSpec::parse("const:1/3");
    EXPECT_TRUE(c.isConstant());
    EXPECT_EQ(c.poly.at(0), Rational(1, 3));
    PhiSpec p = PhiSpec::parse("poly:0,-1,0,1");
    ASSERT_EQ(p.poly.size(), 4u);
    EXPECT_EQ(p.derivative(1), CoeffPoly(-1) + CoeffPoly(3) * CoeffPoly::t() * CoeffPoly::t());
    EXPECT_ANY_THROW(PhiSpec::parse("sin"));
    EXPECT_ANY_THROW(PhiSpec::parse("poly:"));
}

TEST(ExactValue, PiPowers) {
    ExactValue vol(Gauss(Rational(8, 3)), 2);
    EXPECT_EQ(vol.str(), "(8/3)*pi^2");
    EXPECT_EQ((ExactValue(Gauss(Rational(-1, 8)), -2) * ExactValue(Gauss(8), 2)).str(), "-1");
    EXPECT_ANY_THROW(vol + ExactValue(Gauss(1)));
    EXPECT_EQ(ExactValue(Gauss(0), 3).piPower, 0);
    EXPECT_EQ(ExactValue(Gauss(Rational(8, 15)), 2).strRelative(vol, "(8/3)*pi^2"), "(1/5)*(8/3)*pi^2");
}
