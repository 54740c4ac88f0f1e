#include "dsphere/ideal.hpp"
#include "dsphere/sphereint.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace dsphere;
using testing_support::F;

TEST(Ideal, RelationIsMember) {
    auto r = idealMember(relationR());
    ASSERT_TRUE(r.member);
    ASSERT_TRUE(r.certificate);
    EXPECT_TRUE(r.certificate->verify());
}

TEST(Ideal, TopDegreeWordVanishes) {
    auto r = idealMember(F("dt*da*da* * db*db*"));
    ASSERT_TRUE(r.member);
    EXPECT_TRUE(r.certificate->verify());
    EXPECT_EQ(r.certificate->expand(), F("dt*da*da* * db*db*"));
}

TEST(Ideal, OneFormGeneratorSurvives) {
    for (int cap : {4, 6, 8}) {
        IdealOptions o;
        o.truncation = cap;
        EXPECT_FALSE(idealMember(F("da"), o).member) << cap;
    }
}

TEST(Ideal, ThreeFormIdentity) {
    EXPECT_TRUE(equalMod(F("da*da* * db*db*"), F("db*da*da* * db*")));
}

TEST(Ideal, VolumeIdentities) {
    Form w = volumeForm();
    EXPECT_TRUE(equalMod(F("t") * w, F("(1/4)*da*da* * db*db*")));
    EXPECT_TRUE(equalMod(F("a") * w, F("(1/2)*dt*da*db*db*")));
    EXPECT_TRUE(equalMod(F("a*") * w, F("-(1/2)*dt*da* * db*db*")));
    EXPECT_TRUE(equalMod(w * F("b"), F("(1/2)*dt*da*da* * db")));
    EXPECT_TRUE(equalMod(w * F("b*"), F("-(1/2)*dt*da*da* * db*")));
    EXPECT_FALSE(equalMod(F("da"), F("db")));
}

TEST(Ideal, OmegaCentral) {
    Form w = volumeForm();
    for (const char* x : {"a", "a*", "b", "b*", "t"}) EXPECT_TRUE(equalMod(F(x) * w, w * F(x))) << x;
}

TEST(Ideal, SpecializedCertificate) {
    IdealOptions o;
    o.phi = PhiSpec::Polynomial({0, 0, 1});
    auto r = idealMember(specialize(F("t*dt*da*da* * db*db*"), o.phi), o);
    ASSERT_TRUE(r.member);
    EXPECT_TRUE(r.certificate->verify());
}
