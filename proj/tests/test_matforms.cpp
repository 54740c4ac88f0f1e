#include "dsphere/ideal.hpp"
#include "dsphere/matforms.hpp"
#include "dsphere/sphereint.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace dsphere;
using testing_support::F;

TEST(MatForms, ProjectorEntries) {
    MatForm e = projectorE();
    ASSERT_EQ(e.size(), 4);
    EXPECT_EQ(e(0, 2), F("(1/2)*a"));
    EXPECT_EQ(e(1, 2), F("-(1/2)*lam*b*"));
    EXPECT_TRUE(e(0, 1).isZero());
    EXPECT_EQ(e(2, 2), F("(1/2)*(1 - t)"));
}

TEST(MatForms, ProjectorIsSelfAdjointIdempotent) {
    MatForm e = projectorE();
    EXPECT_EQ(e * e, e);
    EXPECT_EQ(matStar(e), e);
}

TEST(MatForms, DifferentiatedIdempotency) {
    MatForm e = projectorE(), de = matD(e);
    MatForm lhs = de * e + e * de;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) EXPECT_TRUE(equalMod(lhs(i, j), de(i, j))) << i << "," << j;
}

TEST(MatForms, TraceAndIdentity) {
    EXPECT_EQ(matTrace(MatForm::identity(4)), F("4"));
    EXPECT_ANY_THROW(MatForm::identity(2) * MatForm::identity(4));
}

TEST(MatForms, BlockIdentities) {
    MatForm q = blockQ(), dq = matD(q), dqs = matD(matStar(q));
    MatForm x = dq * dqs, y = dqs * dq;
    EXPECT_TRUE(equalMod((x * x)(0, 0), F("6*da*da* * db*db*")));
    EXPECT_TRUE(equalMod(matTrace(y * y), F("-12*da*da* * db*db*")));
}

TEST(MatForms, TopChernFormIsThreeOmega) {
    Form top = chernTopForm();
    EXPECT_TRUE(equalMod(top, F("3") * volumeForm()));
    EXPECT_TRUE(equalMod(top, chernTopFormFromBlocks()));
}

TEST(MatForms, FirstChernFormVanishesForConstantPhi) {
    EXPECT_TRUE(specialize(ch1Form(), PhiSpec::Constant(Rational(1, 3))).isZero());
}

TEST(MatForms, FirstChernFormIsExact) {
    EXPECT_TRUE(equalMod(d(ch1Primitive()), ch1Form()));
}

// The printed closed form 2 lam' lamc dt (b db* + b* db) lacks the t-dependence of the trace;
// the trace itself is (t/4) lam' lamc dt (b db* + b* db), exact with primitive -(t/4) ... b b*.
TEST(MatForms, FirstChernFormCarriesFactorT) {
    Form displayed = F("2*lam'*lamc*dt*(b*db* + b* * db)");
    EXPECT_FALSE(equalMod(ch1Form(), displayed));
    EXPECT_TRUE(equalMod(ch1Form(), F("(1/8)*t") * displayed));
}
