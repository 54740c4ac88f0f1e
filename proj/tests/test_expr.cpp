#include "dsphere/errors.hpp"
#include "dsphere/expr.hpp"

#include <gtest/gtest.h>

using namespace dsphere;

namespace {
std::string eval(const std::string& s, const PhiSpec& phi = PhiSpec::Formal()) { return formatValue(evalExpr(s, phi)); }
}  // namespace

TEST(Expr, DocumentedExamples) {
    EXPECT_EQ(eval("a*db"), "lam db a + (1/2) lam' lamc dt a b");
    EXPECT_EQ(eval("integrate(t^2 * omega)"), "(1/5)*(8/3)*pi^2");
    EXPECT_EQ(eval("d(d(a*b))"), "0");
}

TEST(Expr, StarSuffixAndProducts) {
    EXPECT_EQ(eval("a*"), "a*");
    EXPECT_EQ(eval("a* * a - a*a*"), "0");
    EXPECT_EQ(eval("da**db"), eval("da* * db"));
}

TEST(Expr, Values) {
    EXPECT_EQ(eval("integrate(omega)"), "(8/3)*pi^2");
    EXPECT_EQ(eval("-1/8 * integrate(tr(e*d(e)^4))"), "(-3/8)*(8/3)*pi^2");
    EXPECT_EQ(eval("integrate(3*omega)"), "8*pi^2");
    EXPECT_EQ(eval("integrate(d(phi*a*da* * db*db*))", PhiSpec::Polynomial({0, 1})), "0");
}

TEST(Expr, Errors) {
    EXPECT_THROW(evalExpr("a +", PhiSpec::Formal()), ParseError);
    EXPECT_THROW(evalExpr("foo", PhiSpec::Formal()), ParseError);
    EXPECT_THROW(evalExpr("tr(a)", PhiSpec::Formal()), ParseError);
    EXPECT_THROW(evalExpr("integrate(da)", PhiSpec::Formal()), DegreeError);
    try {
        evalExpr("a + ?", PhiSpec::Formal());
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position, 4u);
    }
}
