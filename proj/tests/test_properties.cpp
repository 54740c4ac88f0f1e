#include "dsphere/generators.hpp"
#include "dsphere/ideal.hpp"
#include "dsphere/sphereint.hpp"

#include <gtest/gtest.h>

using namespace dsphere;

namespace {

int sign(int p) { return p % 2 ? -1 : 1; }

class Seeded : public ::testing::TestWithParam<std::uint64_t> {};

}  // namespace

TEST_P(Seeded, ProductsAssociate) {
    Gen g(GetParam());
    for (int k = 0; k < 60; ++k) {
        Form x = g.piece(), y = g.piece(), z = g.piece();
        ASSERT_EQ((x * y) * z, x * (y * z)) << x.str() << " | " << y.str() << " | " << z.str();
    }
}

TEST_P(Seeded, DSquaredVanishes) {
    Gen g(GetParam() + 1);
    for (int k = 0; k < 40; ++k) {
        Form x = g.form(g.uniform(0, 2));
        ASSERT_TRUE(d(d(x)).isZero()) << x.str();
    }
}

TEST_P(Seeded, GradedLeibniz) {
    Gen g(GetParam() + 2);
    for (int k = 0; k < 40; ++k) {
        int p = g.uniform(0, 2);
        Form x = g.form(p, 1, 2), y = g.form(g.uniform(0, 2), 1, 2);
        // monomials are sphere-reduced, so equality holds modulo the relation ideal
        Form gap = d(x * y) - d(x) * y - CoeffPoly(sign(p)) * (x * d(y));
        ASSERT_TRUE(gap.isZero() || idealMember(gap).member) << x.str() << " | " << y.str();
    }
}

TEST_P(Seeded, StarIsGradedAntiHomomorphism) {
    Gen g(GetParam() + 3);
    for (int k = 0; k < 40; ++k) {
        int p = g.uniform(0, 2), q = g.uniform(0, 2);
        Form x = g.form(p), y = g.form(q);
        ASSERT_EQ(star(star(x)), x);
        ASSERT_EQ(star(x * y), CoeffPoly(sign(p * q)) * (star(y) * star(x))) << x.str() << " | " << y.str();
    }
}

TEST_P(Seeded, StokesAndTraciality) {
    Gen g(GetParam() + 4);
    for (int k = 0; k < 15; ++k) {
        Form rho = g.form(3);
        ASSERT_TRUE(integralOfForm(d(rho)).isZero()) << rho.str();
        Form x = Form(g.alg()), top = g.form(4);
        ASSERT_TRUE(integralOfForm(x * top - top * x).isZero()) << x.str() << " | " << top.str();
    }
}

TEST_P(Seeded, GradedCyclicity) {
    Gen g(GetParam() + 5);
    for (int k = 0; k < 15; ++k) {
        int p = g.uniform(1, 3);
        Form x = g.form(p), y = g.form(4 - p);
        ASSERT_TRUE(integralOfForm(x * y - CoeffPoly(sign(p * (4 - p))) * (y * x)).isZero())
            << x.str() << " | " << y.str();
    }
}

TEST_P(Seeded, IdealIsAnnihilated) {
    Gen g(GetParam() + 6);
    for (int k = 0; k < 15; ++k) {
        Form left = g.form(g.uniform(0, 3)), right;
        int rest = 3 - left.degree();
        right = g.form(rest);
        ASSERT_TRUE(integralOfForm(left * relationR() * right).isZero()) << left.str() << " | " << right.str();
    }
}

TEST_P(Seeded, PsiIsCyclicCocycleOnForms) {
    Gen g(GetParam() + 7);
    for (int k = 0; k < 8; ++k) {
        AlgElement x[6];
        for (auto& v : x) v = g.alg(1, 2);
        Form shifted = psiForm(x[4], x[0], x[1], x[2], x[3]) - psiForm(x[0], x[1], x[2], x[3], x[4]);
        ASSERT_TRUE(integralOfForm(shifted).isZero());
        // (b psi)(x0..x5) = sum_i (-1)^i psi(.., x_i x_{i+1}, ..) - psi(x5 x0, x1, .., x4)
        Form bpsi = psiForm(x[0] * x[1], x[2], x[3], x[4], x[5]) - psiForm(x[0], x[1] * x[2], x[3], x[4], x[5]) +
                    psiForm(x[0], x[1], x[2] * x[3], x[4], x[5]) - psiForm(x[0], x[1], x[2], x[3] * x[4], x[5]) +
                    psiForm(x[0], x[1], x[2], x[3], x[4] * x[5]) - psiForm(x[5] * x[0], x[1], x[2], x[3], x[4]);
        ASSERT_TRUE(integralOfForm(bpsi).isZero());
    }
}

INSTANTIATE_TEST_SUITE_P(Seeds, Seeded, ::testing::Values(1u, 7u, 2024u));
