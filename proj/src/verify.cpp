#include "dsphere/verify.hpp"

#include "dsphere/chern.hpp"
#include "dsphere/errors.hpp"
#include "dsphere/expr.hpp"
#include "dsphere/generators.hpp"
#include "dsphere/ideal.hpp"
#include "dsphere/sphereint.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <tuple>

namespace dsphere {

const char* statusName(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        default: return "error";
    }
}

const std::vector<std::string>& suiteNames() {
    static const std::vector<std::string> names{"algebra", "calculus", "volume",   "trace",
                                                "chern",   "hochschild", "matsumoto", "properties"};
    return names;
}

void validate(const SuiteConfig& cfg) {
    for (const auto& s : cfg.suites)
        if (s != "all" && std::find(suiteNames().begin(), suiteNames().end(), s) == suiteNames().end())
            throw ConfigError("unknown suite '" + s + "'");
    if (cfg.truncation && *cfg.truncation < 4) throw ConfigError("truncation must be at least 4");
}

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    const SuiteConfig& cfg;
    IdealOptions ideal;
    Report& report;
    std::string suite;
    bool stopped = false;

    // fn returns pass/fail; exceptions become errors, except a phi residual which is a failure
    void check(const std::string& id, const std::string& anchor, const std::function<bool(CheckResult&)>& fn) {
        if (stopped) return;
        CheckResult r{suite, id, anchor, Status::Pass, {}, {}, 0};
        auto start = Clock::now();
        try {
            r.status = fn(r) ? Status::Pass : Status::Fail;
        } catch (const LambdaResidualError& e) {
            r.status = Status::Fail;
            r.detail = std::string("lambda-dependent residual: ") + e.what();
        } catch (const std::exception& e) {
            r.status = Status::Error;
            r.detail = e.what();
        }
        r.elapsedMs = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        if (r.status != Status::Pass && cfg.failFast) stopped = true;
        report.checks.push_back(std::move(r));
    }

    bool equalModIdeal(const Form& x, const Form& y) const { return equalMod(x, y, ideal); }
};

void value(CheckResult& r, const std::string& name, const std::string& text) { r.values.push_back({name, text, {}}); }
void value(CheckResult& r, const std::string& name, const ExactValue& v) {
    r.values.push_back({name, formatValue(v), v});
}

Form F(const AlgElement& x) { return Form(x); }
Form V() { return Form::diff(kDa) * Form::diff(kDaStar) * Form::diff(kDb) * Form::diff(kDbStar); }
Form expr(const std::string& s) { return std::get<Form>(evalExpr(s)); }

std::vector<std::pair<std::string, AlgElement>> generatorsNamed() {
    return {{"a", AlgElement::a()},
            {"a*", AlgElement::aStar()},
            {"b", AlgElement::b()},
            {"b*", AlgElement::bStar()},
            {"t", AlgElement::t()}};
}

// counts passes over n trials; the first failure is kept as a sample
template <class Fn>
bool trials(CheckResult& r, int n, Fn&& fn) {
    int passed = 0;
    for (int k = 0; k < n; ++k) {
        std::string sample;
        if (fn(sample)) ++passed;
        else if (r.detail.empty()) r.detail = "first failure: " + sample;
    }
    value(r, "passed", std::to_string(passed) + "/" + std::to_string(n));
    return passed == n;
}

// ---------------- algebra ----------------

void algebraSuite(Runner& run) {
    run.check("commutation", "[a,a*] = [b,b*] = 0, t central, x y = lam^omega(x,y) y x", [](CheckResult& r) {
        AlgElement a = AlgElement::a(), as = AlgElement::aStar(), b = AlgElement::b(), bs = AlgElement::bStar();
        AlgElement t = AlgElement::t();
        CoeffPoly lam = CoeffPoly::lam(), lamc = CoeffPoly::lamc();
        std::vector<std::pair<std::string, bool>> rel{
            {"a a* = a* a", a * as == as * a},
            {"b b* = b* b", b * bs == bs * b},
            {"a b = lam b a", a * b == lam * (b * a)},
            {"a b* = lamc b* a", a * bs == lamc * (bs * a)},
            {"a* b = lamc b a*", as * b == lamc * (b * as)},
            {"a* b* = lam b* a*", as * bs == lam * (bs * as)},
        };
        for (const auto& [n, x] : generatorsNamed()) rel.push_back({"[" + n + ", t] = 0", x * t == t * x});
        bool ok = true;
        for (const auto& [name, holds] : rel) {
            ok = ok && holds;
            if (!holds) r.detail += name + " fails; ";
        }
        value(r, "relations", std::to_string(rel.size()));
        return ok;
    });
    run.check("lam-unitary", "lam lamc = 1, lam = exp(-i phi)", [](CheckResult& r) {
        value(r, "d/dt lam", CoeffPoly::lamDot().str());
        return CoeffPoly::lam() * CoeffPoly::lamc() == CoeffPoly(1) &&
               ddt(CoeffPoly::lam()) == CoeffPoly(-Gauss::I()) * CoeffPoly::phi(1) * CoeffPoly::lam();
    });
    run.check("sphere", "a a* + b b* + t^2 = 1", [](CheckResult& r) {
        AlgElement s = AlgElement::a() * AlgElement::aStar() + AlgElement::b() * AlgElement::bStar() +
                       AlgElement::t() * AlgElement::t();
        value(r, "a a* + b b* + t^2", s.str());
        return s == AlgElement::one();
    });
    run.check("associativity", "(x y) z = x (y z) on random elements", [&run](CheckResult& r) {
        Gen g(run.cfg.seed * 7919 + 1);
        return trials(r, 100, [&g](std::string& s) {
            AlgElement x = g.alg(), y = g.alg(), z = g.alg();
            s = x.str() + " | " + y.str() + " | " + z.str();
            return (x * y) * z == x * (y * z);
        });
    });
    run.check("star", "star is an antilinear involutive antihomomorphism", [&run](CheckResult& r) {
        Gen g(run.cfg.seed * 7919 + 2);
        return trials(r, 100, [&g](std::string& s) {
            AlgElement x = g.alg(), y = g.alg();
            s = x.str() + " | " + y.str();
            return star(star(x)) == x && star(x * y) == star(y) * star(x);
        });
    });
    run.check("projector-idempotent", "e^2 = e", [](CheckResult&) {
        MatForm e = projectorE();
        return e * e == e;
    });
    run.check("projector-selfadjoint", "e* = e", [](CheckResult&) { return matStar(projectorE()) == projectorE(); });
}

// ---------------- calculus ----------------

void calculusSuite(Runner& run) {
    // b* da and b* da* are compared with their dt terms ordered as b* a, b* a*, like the rules for b da, b da*.
    static const std::vector<std::pair<std::string, std::string>> rules{
        {"a*db", "lam*db*a + (1/2)*lam'*lamc*dt*a*b"},
        {"a*db*", "lamc*db* * a - (1/2)*lam'*lamc*dt*a*b*"},
        {"b*da", "lamc*da*b - (1/2)*lam'*lamc*dt*b*a"},
        {"b*da*", "lam*da* * b + (1/2)*lam'*lamc*dt*b*a*"},
        {"a* *db", "lamc*db*a* - (1/2)*lam'*lamc*dt*a* * b"},
        {"b* *da", "lam*da*b* + (1/2)*lam'*lamc*dt*b* * a"},
        {"a* *db*", "lam*db* * a* + (1/2)*lam'*lamc*dt*a* * b*"},
        {"b* *da*", "lamc*da* * b* - (1/2)*lam'*lamc*dt*b* * a*"},
    };
    run.check("bimodule-rules", "x dy = lam^omega dy x + (1/2) B dt x y for the eight mixed pairs", [](CheckResult& r) {
        bool ok = true;
        for (const auto& [lhs, rhs] : rules) {
            Form x = expr(lhs), y = expr(rhs);
            value(r, lhs, x.strLamDot());
            if (x != y) {
                ok = false;
                r.detail += lhs + " differs from " + rhs + "; ";
            }
        }
        return ok;
    });
    run.check("same-letter-rules", "x dx = dx x and x dx* = dx* x", [](CheckResult&) {
        return expr("a*da") == expr("da*a") && expr("b*db") == expr("db*b") && expr("a*da*") == expr("da* * a") &&
               expr("b*db*") == expr("db* * b");
    });
    run.check("d-squared", "d d x = 0 on random forms", [&run](CheckResult& r) {
        Gen g(run.cfg.seed * 7919 + 3);
        return trials(r, 100, [&g](std::string& s) {
            Form x = g.form(g.uniform(0, 3));
            s = x.str();
            return d(d(x)).isZero();
        });
    });
    run.check("relation-one-form", "R = a da* + a* da + b db* + b* db + 2 t dt is central and closed",
              [](CheckResult& r) {
                  Form R = relationR();
                  value(r, "R", R.strLamDot());
                  bool central = true;
                  for (const auto& [n, x] : generatorsNamed()) central = central && F(x) * R == R * F(x);
                  for (int l = 0; l < 5; ++l) central = central && Form::diff(l) * R == -(R * Form::diff(l));
                  // the sphere relation itself reduces to 1, so expand d(a a* + b b* + t^2) by hand
                  Form expanded = expr("da*a* + a*da* + db*b* + b*db* + 2*t*dt");
                  return central && d(R).isZero() && expanded == R;
              });
    run.check("dimension-lemma", "dt da da* db db* lies in the ideal generated by R", [&run](CheckResult& r) {
        Form top = Form::term(CoeffPoly(1), kTopWord, {});
        MembershipResult m = idealMember(top, run.ideal);
        value(r, "window", std::to_string(m.window));
        if (!m.member || !m.certificate) return false;
        value(r, "certificate size", std::to_string(m.certificate->combination.size()));
        std::string cert;
        for (const auto& [c, gen] : m.certificate->combination)
            cert += (cert.empty() ? "" : " + ") + ("(" + c.str() + ") " + gen.str());
        value(r, "certificate", cert);
        return m.certificate->verify();
    });
    run.check("dimension-exhaustive", "every degree-5 form c t^k W m is in the ideal (k <= 1, deg m <= 2)",
              [&run](CheckResult& r) {
                  int n = 0, members = 0;
                  for (int k = 0; k <= 1; ++k)
                      for (int al = 0; al <= 2; ++al)
                          for (int be = 0; be <= 2; ++be)
                              for (int ga = 0; ga <= 2; ++ga)
                                  for (int de = 0; de <= 2; ++de) {
                                      if (al + be + ga + de > 2 || (al && be)) continue;
                                      Form x = Form::term(CoeffPoly(Gauss(1), CoeffMono::tPow(k)), kTopWord,
                                                          {al, be, ga, de});
                                      ++n;
                                      auto m = idealMember(x, run.ideal);
                                      if (m.member && m.certificate->verify()) ++members;
                                      else if (r.detail.empty()) r.detail = "not a member: " + x.str();
                                  }
                  value(r, "members", std::to_string(members) + "/" + std::to_string(n));
                  return members == n;
              });
    run.check("leibniz", "d(x y) = dx y + (-1)^|x| x dy", [&run](CheckResult& r) {
        Gen g(run.cfg.seed * 7919 + 4);
        int viaIdeal = 0;
        bool ok = trials(r, 50, [&](std::string& s) {
            int p = g.uniform(0, 2), q = g.uniform(0, 2);
            Form x = g.form(p, 1, 2), y = g.form(q, 1, 2);
            s = x.str() + " | " + y.str();
            Form lhs = d(x * y), rhs = d(x) * y + (p % 2 ? -(x * d(y)) : x * d(y));
            if (lhs == rhs) return true;
            ++viaIdeal;
            return run.equalModIdeal(lhs, rhs);
        });
        value(r, "needing the ideal", std::to_string(viaIdeal));
        return ok;
    });
}

// ---------------- volume ----------------

void volumeSuite(Runner& run) {
    run.check("integral-omega", "int omega = 8/3 pi^2", [](CheckResult& r) {
        ExactValue v = integralOfForm(volumeForm());
        value(r, "int omega", v);
        return v == sphereVolume();
    });
    Form om = volumeForm();
    struct Ident {
        std::string id, anchor;
        Form lhs, rhs;
    };
    std::vector<Ident> ids{
        {"t-omega", "t omega = 1/4 da da* db db*", F(AlgElement::t()) * om, CoeffPoly(Rational(1, 4)) * V()},
        {"a-omega", "a omega = 1/2 dt da db db*", F(AlgElement::a()) * om,
         CoeffPoly(Rational(1, 2)) * expr("dt*da*db*db*")},
        {"astar-omega", "a* omega = -1/2 dt da* db db*", F(AlgElement::aStar()) * om,
         CoeffPoly(Rational(-1, 2)) * expr("dt*da**db*db*")},
        {"omega-b", "omega b = 1/2 dt da da* db", om * F(AlgElement::b()),
         CoeffPoly(Rational(1, 2)) * expr("dt*da*da**db")},
        {"omega-bstar", "omega b* = -1/2 dt da da* db*", om * F(AlgElement::bStar()),
         CoeffPoly(Rational(-1, 2)) * expr("dt*da*da**db*")},
    };
    for (const auto& [n, x] : generatorsNamed())
        ids.push_back({"central-" + (n.back() == '*' ? n.substr(0, 1) + "star" : n), "[" + n + ", omega] = 0",
                       F(x) * om - om * F(x), Form()});
    for (const auto& id : ids)
        run.check(id.id, id.anchor + " modulo the ideal", [&run, id](CheckResult& r) {
            value(r, "difference", (id.lhs - id.rhs).strLamDot());
            return run.equalModIdeal(id.lhs, id.rhs);
        });
    run.check("moments", "int t omega = 0, int t^2 omega = (1/5) int omega, int a a* b b* omega = (4/35) int omega",
              [](CheckResult& r) {
                  ExactValue vol = sphereVolume();
                  ExactValue m1 = integralOfForm(F(AlgElement::t()) * volumeForm());
                  ExactValue m2 = integralOfForm(F(AlgElement::t() * AlgElement::t()) * volumeForm());
                  ExactValue m3 = integralOfForm(
                      F(AlgElement::a() * AlgElement::aStar() * AlgElement::b() * AlgElement::bStar()) * volumeForm());
                  value(r, "int t omega", m1);
                  value(r, "int t^2 omega", m2);
                  value(r, "int a a* b b* omega", m3);
                  return m1.isZero() && m2 == ExactValue(Gauss(Rational(1, 5))) * vol &&
                         m3 == ExactValue(Gauss(MomentTable::shared().sphereMoment(0, 1, 1))) * vol &&
                         MomentTable::shared().sphereMoment(0, 1, 1) == Rational(4, 35);
              });
}

// ---------------- trace ----------------

void traceSuite(Runner& run) {
    MatForm q = blockQ(), qs = matStar(q);
    MatForm dq = matD(q), dqs = matD(qs);
    run.check("block-11", "{(dq dq*)^2}_11 = 6 da da* db db*", [&](CheckResult& r) {
        Form x = (dq * dqs * dq * dqs)(0, 0);
        value(r, "{(dq dq*)^2}_11", x.strLamDot());
        return run.equalModIdeal(x, CoeffPoly(6) * V());
    });
    run.check("block-22", "{(dq dq*)^2}_22 = 6 da da* db db*", [&](CheckResult& r) {
        Form x = (dq * dqs * dq * dqs)(1, 1);
        value(r, "{(dq dq*)^2}_22", x.strLamDot());
        return run.equalModIdeal(x, CoeffPoly(6) * V());
    });
    run.check("block-trace", "Tr (dq* dq)^2 = -12 da da* db db*", [&](CheckResult& r) {
        Form x = matTrace(dqs * dq * dqs * dq);
        value(r, "Tr (dq* dq)^2", x.strLamDot());
        return run.equalModIdeal(x, CoeffPoly(-12) * V());
    });
    run.check("block-dt-terms",
              "-4 Tr(q dt dq* dq dq*) + 4 Tr(q* dt dq dq* dq) = 24 dt(-a da* db db* - da da* db* b + da da* db b* + "
              "a* da db db*)",
              [&](CheckResult&) {
                  MatForm dt = MatForm::identity(2);
                  dt(0, 0) = Form::dt();
                  dt(1, 1) = Form::dt();
                  Form x = CoeffPoly(-4) * matTrace(q * dt * dqs * dq * dqs) +
                           CoeffPoly(4) * matTrace(qs * dt * dq * dqs * dq);
                  Form y = CoeffPoly(24) * expr("-dt*a*da**db*db* - dt*da*da**db* * b + dt*da*da**db*b* + "
                                                "dt*a* * da*db*db*");
                  return run.equalModIdeal(x, y);
              });
    run.check("chern-blocks", "Tr(e de de de de) from the 2x2 block formula equals the 4x4 trace",
              [](CheckResult&) { return chernTopFormFromBlocks() == chernTopForm(); });
    run.check("chern-top-omega", "Tr(e de de de de) = 3 omega", [&run](CheckResult& r) {
        value(r, "Tr(e de de de de)", chernTopForm().strLamDot());
        return run.equalModIdeal(chernTopForm(), CoeffPoly(3) * volumeForm());
    });
    run.check("psi-value", "psi(t, a, a*, b, b*) = int t da da* db db*", [](CheckResult& r) {
        ExactValue p = psi(AlgElement::t(), AlgElement::a(), AlgElement::aStar(), AlgElement::b(), AlgElement::bStar());
        value(r, "psi", p);
        return p == integralOfForm(F(AlgElement::t()) * V()) && p == ExactValue(Gauss(Rational(32, 15)), 2);
    });
}

// ---------------- chern ----------------

void chernSuite(Runner& run) {
    run.check("pairing", "ch(e) = -1/(8 pi^2) int Tr(e de de de de) = -1", [&run](CheckResult& r) {
        ExactValue p = pairingCh2(run.cfg.phi);
        value(r, "phi", run.cfg.phi.str());
        value(r, "pairing", p);
        return p == ExactValue(Gauss(-1));
    });
    run.check("pairing-specializations", "ch(e) = -1 for phi formal, constant, t^2, t^3 - t", [](CheckResult& r) {
        bool ok = true;
        for (const char* spec : {"formal", "const:1/3", "poly:0,0,1", "poly:0,-1,0,1"}) {
            ExactValue p = pairingCh2(PhiSpec::parse(spec));
            value(r, spec, p);
            ok = ok && p == ExactValue(Gauss(-1));
        }
        return ok;
    });
    run.check("ch1-form", "Tr(e de de) = 2 lam' lamc dt (b db* + b* db)", [&run](CheckResult& r) {
        const PhiSpec& phi = run.cfg.phi;
        Form ch1 = specialize(ch1Form(), phi);
        Form paper = specialize(CoeffPoly(2) * expr("lam'*lamc*dt*(b*db* + b* * db)"), phi);
        value(r, "Tr(e de de)", ch1.strLamDot());
        value(r, "displayed", paper.strLamDot());
        value(r, "difference", (ch1 - paper).strLamDot());
        return run.equalModIdeal(ch1, paper);
    });
    run.check("ch1-displayed-primitive", "-1/(2 pi i) Tr(e de de) = (1/pi) d(phi (b db* + b* db))", [&run](CheckResult& r) {
        // both sides carry 1/pi; compare (i/2) Tr(e de de) with d(phi (b db* + b* db))
        Form lhs = specialize(CoeffPoly(Gauss(0, Rational(1, 2))) * ch1Form(), run.cfg.phi);
        Form rhs = specialize(d(expr("phi*(b*db* + b* * db)")), run.cfg.phi);
        value(r, "pi ch1(e)", lhs.strLamDot());
        value(r, "d(phi (b db* + b* db))", rhs.strLamDot());
        return lhs == rhs;
    });
    run.check("ch1-exact", "Tr(e de de) = dP with P = -(t/4) lam' lamc dt b b*", [](CheckResult& r) {
        Form p = ch1Primitive();
        value(r, "P", p.strLamDot());
        return d(p) == ch1Form();
    });
    run.check("ch1-constant-phi", "Tr(e de de) = 0 for constant phi", [](CheckResult&) {
        return specialize(ch1Form(), PhiSpec::Constant(Rational(1, 3))).isZero() &&
               specialize(ch1Form(), PhiSpec::Constant(Rational(0))).isZero();
    });
}

// ---------------- hochschild ----------------

void hochschildSuite(Runner& run) {
    run.check("b-ch1", "b ch1(e) = 0", [](CheckResult& r) {
        Chain bc = hochschildB(ch1Chain());
        value(r, "b ch1(e)", bc.isZero() ? "0" : bc.str());
        return bc.isZero();
    });
    run.check("B-ch1", "B ch1(e) = 1 (x) ch1(e)", [](CheckResult& r) {
        Chain c = ch1Chain(), Bc = connesB(c), one = prependUnit(c);
        value(r, "ch1(e)", c.str());
        value(r, "B ch1(e) - 1 (x) ch1(e)", (Bc - one).str());
        if (Bc == Gauss(3) * one) r.detail = "B ch1(e) = 3 (1 (x) ch1(e)): ch1(e) is invariant under cyclic rotation";
        return Bc == one;
    });
    run.check("examples", "b(a (x) a*) = 0, b(1 (x) a) = 0, B(x) = 1 (x) x in degree 0, B(1 (x) a) = 0",
              [](CheckResult&) {
                  AlgElement a = AlgElement::a(), one = AlgElement::one();
                  Chain x0 = Chain::tensor({AlgElement::b()});
                  return hochschildB(Chain::tensor({a, AlgElement::aStar()})).isZero() &&
                         hochschildB(Chain::tensor({one, a})).isZero() && connesB(x0) == prependUnit(x0) &&
                         connesB(Chain::tensor({one, a})).isZero();
              });
    run.check("operator-identities", "b b = 0, B B = 0, b B + B b = 0 on random chains of degree <= 3",
              [&run](CheckResult& r) {
                  Gen g(run.cfg.seed * 7919 + 5);
                  return trials(r, 200, [&g](std::string& s) {
                      Chain x = g.chain(g.uniform(0, 3)).normalized();
                      s = x.str();
                      return hochschildB(hochschildB(x)).normalized().isZero() && connesB(connesB(x)).isZero() &&
                             (hochschildB(connesB(x)) + connesB(hochschildB(x))).normalized().isZero();
                  });
              });
}

// ---------------- matsumoto ----------------

void matsumotoSuite(Runner& run) {
    MatsumotoResult m = matsumotoCh();
    run.check("unitary", "U U* = U* U = 1 given a a* + b b* = 1", [&m](CheckResult&) { return m.unitary; });
    run.check("chain", "ch_{1/2}(U) = b (x) b* - b* (x) b + lam b* (x) lamc b - lamc b (x) lam b*", [&m](CheckResult& r) {
        value(r, "ch_{1/2}(U)", m.chain.str());
        value(r, "Tr(U (x) U*) - Tr(U* (x) U)", m.chainFromU.str());
        return m.chain == m.chainFromU;
    });
    run.check("de-rham-image", "sum a0 da1 = b b* (lam d lamc - lamc d lam)", [&m](CheckResult& r) {
        value(r, "image", m.image.str());
        return m.image == m.expectedImage;
    });
    run.check("reduced-image", "-1/(2 pi i) b b* (lam d lamc - lamc d lam) = -2 r f'(r) dr for lam = exp(2 pi i f)",
              [&m](CheckResult& r) {
                  RadialPoly expected;
                  expected.addTerm({0, 1, {{1, 1}}}, Gauss(-2));
                  value(r, "coefficient of dr", m.normalized.str());
                  value(r, "displayed", expected.str());
                  return m.normalized == expected;
              });
    run.check("primitive", "the reduced image is dg for an explicit g", [&m](CheckResult& r) {
        value(r, "g", m.primitive.str());
        return m.primitiveChecks;
    });
    run.check("example-linear", "f(r) = r: image -2 r dr, primitive -r^2", [](CheckResult& r) {
        MatsumotoResult lin = matsumotoCh(PhiSpec::Polynomial({Rational(0), Rational(1)}));
        value(r, "coefficient of dr", lin.normalized.str());
        value(r, "primitive", lin.primitive.str());
        RadialPoly img, prim;
        img.addTerm({0, 1, {}}, Gauss(-2));
        prim.addTerm({0, 2, {}}, Gauss(-1));
        return lin.primitiveChecks && lin.normalized == img && lin.primitive == prim;
    });
}

// ---------------- properties ----------------

void propertiesSuite(Runner& run) {
    const std::uint64_t seed = run.cfg.seed;
    const PhiSpec& phi = run.cfg.phi;
    run.check("confluence", "differently parenthesized products of pieces normalize to the same form",
              [seed](CheckResult& r) {
                  Gen g(seed * 7919 + 11);
                  return trials(r, 500, [&g](std::string& s) {
                      std::vector<Form> p;
                      int ones = 0;
                      while (p.size() < 3) {
                          Form x = g.piece();
                          int deg = x.degree();
                          if (ones + deg > 2) continue;
                          ones += deg;
                          p.push_back(x);
                      }
                      s = p[0].str() + " | " + p[1].str() + " | " + p[2].str();
                      auto leaf = [&p](int k) { return RawForm::of(p[static_cast<size_t>(k)]); };
                      Form left = normalizeForm(RawForm::product({RawForm::product({leaf(0), leaf(1)}), leaf(2)}));
                      Form right = normalizeForm(RawForm::product({leaf(0), RawForm::product({leaf(1), leaf(2)})}));
                      Form flat = normalizeForm(RawForm::product({leaf(0), leaf(1), leaf(2)}));
                      return left == right && left == flat;
                  });
              });
    run.check("star-forms", "star(star x) = x, star(x y) = (-1)^{|x||y|} star(y) star(x)", [seed](CheckResult& r) {
        Gen g(seed * 7919 + 12);
        return trials(r, 100, [&g](std::string& s) {
            int p = g.uniform(0, 2), q = g.uniform(0, 2);
            Form x = g.form(p, 1, 2), y = g.form(q, 1, 2);
            s = x.str() + " | " + y.str();
            Form rhs = star(y) * star(x);
            return star(star(x)) == x && star(x * y) == ((p * q) % 2 ? -rhs : rhs);
        });
    });
    run.check("stokes", "int d rho = 0 for 3-forms rho", [seed, &phi](CheckResult& r) {
        Gen g(seed * 7919 + 13);
        return trials(r, 100, [&](std::string& s) {
            Form rho = g.form(3, 2, 3);
            s = rho.str();
            return integralOfForm(d(rho), phi).isZero();
        });
    });
    run.check("traciality", "int (x rho - rho x) = 0", [seed, &phi](CheckResult& r) {
        Gen g(seed * 7919 + 14);
        return trials(r, 100, [&](std::string& s) {
            Form x(g.alg(2, 2)), rho = g.form(4, 2, 2);
            s = x.str() + " | " + rho.str();
            return integralOfForm(x * rho - rho * x, phi).isZero();
        });
    });
    run.check("graded-cyclicity", "int (x dy beta + beta x dy) = 0 for 3-forms beta", [seed, &phi](CheckResult& r) {
        Gen g(seed * 7919 + 15);
        return trials(r, 100, [&](std::string& s) {
            Form x(g.alg(1, 2)), y(g.alg(1, 2)), beta = g.form(3, 1, 2);
            Form xdy = x * d(y);
            s = xdy.str() + " | " + beta.str();
            return integralOfForm(xdy * beta + beta * xdy, phi).isZero();
        });
    });
    run.check("psi-cyclic", "psi(a1, a2, a3, a4, a0) = psi(a0, a1, a2, a3, a4)", [seed](CheckResult& r) {
        Gen g(seed * 7919 + 16);
        return trials(r, 100, [&g](std::string& s) {
            std::vector<AlgElement> a;
            for (int k = 0; k < 5; ++k) a.push_back(g.alg(1, 2));
            s = a[0].str() + " | " + a[1].str() + " | ...";
            return integralOfForm(psiForm(a[1], a[2], a[3], a[4], a[0]) - psiForm(a[0], a[1], a[2], a[3], a[4]))
                .isZero();
        });
    });
    run.check("psi-cocycle", "b psi = 0 on random 6-tuples", [seed](CheckResult& r) {
        Gen g(seed * 7919 + 17);
        return trials(r, 100, [&g](std::string& s) {
            std::vector<AlgElement> a;
            for (int k = 0; k < 6; ++k) a.push_back(g.alg(1, 2));
            s = a[0].str() + " | " + a[1].str() + " | ...";
            Form sum;
            for (int j = 0; j < 5; ++j) {
                std::vector<AlgElement> x;
                for (int k = 0; k < 6; ++k) {
                    if (k == j) {
                        x.push_back(a[static_cast<size_t>(k)] * a[static_cast<size_t>(k + 1)]);
                        ++k;
                    } else {
                        x.push_back(a[static_cast<size_t>(k)]);
                    }
                }
                Form f = psiForm(x[0], x[1], x[2], x[3], x[4]);
                sum += j % 2 ? -f : f;
            }
            sum -= psiForm(a[5] * a[0], a[1], a[2], a[3], a[4]);
            return integralOfForm(sum).isZero();
        });
    });
    run.check("ideal-annihilation", "int c w R w' m = 0 for spanning elements of the ideal", [seed](CheckResult& r) {
        Gen g(seed * 7919 + 18);
        return trials(r, 100, [&g](std::string& s) {
            int left = g.uniform(0, 3);
            DiffWord wl = g.word(left), wr = g.word(3 - left);
            Form x = Form::term(g.coeff(), wl, {}) * relationR() * Form::term(CoeffPoly(1), wr, {}) *
                     Form(AlgElement::monomial(g.monomial(2)));
            s = x.str();
            return integralOfForm(x).isZero();
        });
    });
    run.check("moments-monte-carlo", "moment table within 3 standard errors of 10^5 uniform samples, m + p + q <= 4",
              [seed](CheckResult& r) {
                  std::mt19937_64 rng(seed * 7919 + 19);
                  std::normal_distribution<double> normal;
                  const int n = 100000;
                  std::vector<std::array<double, 3>> pts(n);
                  for (auto& p : pts) {
                      double x[5], norm = 0;
                      for (double& v : x) {
                          v = normal(rng);
                          norm += v * v;
                      }
                      norm = std::sqrt(norm);
                      p = {x[0] / norm, (x[1] * x[1] + x[2] * x[2]) / (norm * norm),
                           (x[3] * x[3] + x[4] * x[4]) / (norm * norm)};
                  }
                  int total = 0, within = 0;
                  double worst = 0;
                  for (int m = 0; m <= 4; ++m)
                      for (int p = 0; m + p <= 4; ++p)
                          for (int q = 0; m + p + q <= 4; ++q) {
                              double sum = 0, sum2 = 0;
                              for (const auto& pt : pts) {
                                  double v = std::pow(pt[0], m) * std::pow(pt[1], p) * std::pow(pt[2], q);
                                  sum += v;
                                  sum2 += v * v;
                              }
                              double mean = sum / n, var = sum2 / n - mean * mean;
                              double se = std::sqrt(std::max(var, 0.0) / n);
                              double exact = MomentTable::shared().sphereMoment(m, p, q).get_d();
                              double z = se > 0 ? std::abs(mean - exact) / se : (mean == exact ? 0 : 1e9);
                              worst = std::max(worst, z);
                              ++total;
                              if (z <= 3) ++within;
                              else if (r.detail.empty())
                                  r.detail = "(m,p,q) = (" + std::to_string(m) + "," + std::to_string(p) + "," +
                                             std::to_string(q) + ") off by " + std::to_string(z) + " standard errors";
                          }
                  std::ostringstream w;
                  w.precision(3);
                  w << worst;
                  value(r, "within", std::to_string(within) + "/" + std::to_string(total));
                  value(r, "largest z", w.str());
                  return within == total;
              });
}

using SuiteFn = void (*)(Runner&);

SuiteFn suiteFn(const std::string& name) {
    if (name == "algebra") return algebraSuite;
    if (name == "calculus") return calculusSuite;
    if (name == "volume") return volumeSuite;
    if (name == "trace") return traceSuite;
    if (name == "chern") return chernSuite;
    if (name == "hochschild") return hochschildSuite;
    if (name == "matsumoto") return matsumotoSuite;
    return propertiesSuite;
}

}  // namespace

Report runSuites(const SuiteConfig& cfg) {
    validate(cfg);
    Report report;
    report.config = cfg;
    std::vector<std::string> chosen;
    bool all = cfg.suites.empty() || std::find(cfg.suites.begin(), cfg.suites.end(), "all") != cfg.suites.end();
    for (const auto& s : suiteNames())
        if (all || std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end()) chosen.push_back(s);
    std::sort(chosen.begin(), chosen.end());

    IdealOptions ideal;
    ideal.truncation = cfg.truncation;
    if (!ideal.truncation) {
        int env = defaultTruncationFromEnv(-1);
        if (env >= 0 && env < 4) throw ConfigError("DSPHERE_TRUNCATION must be at least 4");
        if (env >= 0) ideal.truncation = env;
    }
    Runner run{cfg, ideal, report, {}, false};
    for (const auto& s : chosen) {
        run.suite = s;
        suiteFn(s)(run);
        if (run.stopped) break;
    }
    std::stable_sort(report.checks.begin(), report.checks.end(), [](const CheckResult& x, const CheckResult& y) {
        return std::tie(x.suite, x.id) < std::tie(y.suite, y.id);
    });
    return report;
}

bool Report::allPassed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::Pass; });
}

std::string Report::text(bool timing) const {
    std::ostringstream out;
    int passed = 0;
    for (const auto& c : checks) {
        if (c.status == Status::Pass) ++passed;
        std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "ERROR";
        out << "[" << tag << "] " << c.suite << "/" << c.id << "  " << c.anchor;
        if (timing) out << "  (" << static_cast<long>(c.elapsedMs) << " ms)";
        out << "\n";
        for (const auto& v : c.values) out << "    " << v.name << ": " << v.text << "\n";
        if (!c.detail.empty()) out << "    note: " << c.detail << "\n";
    }
    out << passed << "/" << checks.size() << " checks passed\n";
    return out.str();
}

std::string Report::json(bool timing) const {
    using nlohmann::ordered_json;
    ordered_json cfgJson;
    cfgJson["suites"] = config.suites;
    cfgJson["phi"] = config.phi.str();
    cfgJson["truncation"] = config.truncation ? ordered_json(*config.truncation) : ordered_json(nullptr);
    cfgJson["seed"] = config.seed;
    cfgJson["fail_fast"] = config.failFast;

    int passed = 0, failed = 0, errors = 0;
    ordered_json list = ordered_json::array();
    for (const auto& c : checks) {
        (c.status == Status::Pass ? passed : c.status == Status::Fail ? failed : errors)++;
        ordered_json j;
        j["suite"] = c.suite;
        j["id"] = c.id;
        j["anchor"] = c.anchor;
        j["status"] = statusName(c.status);
        ordered_json vals = ordered_json::array();
        for (const auto& v : c.values) {
            ordered_json jv;
            jv["name"] = v.name;
            jv["text"] = v.text;
            if (v.exact) {
                jv["exact"] = {{"re", rationalStr(v.exact->coeff.re)},
                               {"im", rationalStr(v.exact->coeff.im)},
                               {"pi_power", v.exact->piPower}};
            }
            vals.push_back(jv);
        }
        j["values"] = vals;
        j["detail"] = c.detail;
        if (timing) j["elapsed_ms"] = c.elapsedMs;
        list.push_back(j);
    }
    ordered_json root;
    root["schema"] = "dsphere-report/1";
    root["config"] = cfgJson;
    root["summary"] = {{"total", checks.size()},
                       {"passed", passed},
                       {"failed", failed},
                       {"errors", errors},
                       {"status", allPassed() ? "pass" : "fail"}};
    root["checks"] = list;
    return root.dump(2) + "\n";
}

}  // namespace dsphere
