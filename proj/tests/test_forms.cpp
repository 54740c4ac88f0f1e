#include "dsphere/forms.hpp"
#include "dsphere/ideal.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace dsphere;
using testing_support::F;

TEST(Forms, ADbRule) {
    EXPECT_EQ(F("a*db"), F("lam*db*a + (1/2)*lam'*lamc*dt*a*b"));
    EXPECT_EQ(F("a*db").strLamDot(), "lam db a + (1/2) lam' lamc dt a b");
}

TEST(Forms, SameLetterCommutes) {
    EXPECT_EQ(F("a*da"), F("da*a"));
    EXPECT_EQ(F("b* * db*"), F("db* * b*"));
    EXPECT_EQ(F("t*da"), F("da*t"));
}

TEST(Forms, TwoFormRules) {
    EXPECT_TRUE(F("dt*dt").isZero());
    EXPECT_TRUE(F("da*da").isZero());
    EXPECT_TRUE((F("da*da*") + F("da* * da")).isZero());
    // dx^i dx^j = -A dx^j dx^i + (1/2) B A dt dx^j x^i - (1/2) B dt dx^i x^j with A = lamc, B = -lam' lamc
    EXPECT_EQ(F("db*da"), F("-lamc*da*db - (1/2)*lam'*lamc^2*dt*da*b + (1/2)*lam'*lamc*dt*db*a"));
}

TEST(Forms, ExteriorDerivative) {
    EXPECT_EQ(d(F("t")), F("dt"));
    EXPECT_EQ(d(F("lam*b")), F("lam'*dt*b + lam*db"));
    EXPECT_TRUE(d(F("da")).isZero());
    EXPECT_TRUE(d(d(F("a*b*lam + t*b*"))).isZero());
}

TEST(Forms, DifferentiatedRelation) {
    // d of a a* + b b* + t^2 = 1 by Leibniz; nonzero in the free calculus, closed under d
    Form r = F("da*a* + a*da* + db*b* + b*db* + 2*t*dt");
    EXPECT_EQ(r, relationR());
    EXPECT_TRUE(d(relationR()).isZero());
}

TEST(Forms, GradedLeibniz) {
    Form x = F("lam*a*db + t*db*"), y = F("b* * da + phi*a");
    EXPECT_EQ(d(x * y), d(x) * y - x * d(y));
}

TEST(Forms, StarReversesAndSigns) {
    Form x = F("da");
    EXPECT_EQ(star(x), F("da*"));
    Form y = F("lam*a*db");
    EXPECT_EQ(star(star(y)), y);
}

TEST(Forms, Parenthesizations) {
    Form x = F("a*db"), y = F("lam*b* + dt"), z = F("da* * b");
    EXPECT_EQ((x * y) * z, x * (y * z));
    RawForm raw = RawForm::product({RawForm::of(x), RawForm::sum({RawForm::of(y), RawForm::of(z)})});
    EXPECT_EQ(normalizeForm(raw), x * y + x * z);
}

TEST(Forms, VolumeForm) {
    Form w = volumeForm();
    EXPECT_EQ(w.degree(), 4);
    EXPECT_EQ(w, F("(1/4)*(t*da*da* * db*db* - 2*a*dt*da* * db*db* + 2*dt*da*da* * db*b*)"));
}

TEST(Forms, SpecializeConstantKillsDtCorrections) {
    Form x = specialize(F("a*db"), PhiSpec::Constant(Rational(1, 3)));
    EXPECT_EQ(x, F("lam*db*a"));
}
