// One line per acceptance criterion; exit status 1 if any criterion fails.
#include "dsphere/chern.hpp"
#include "dsphere/ideal.hpp"
#include "dsphere/matforms.hpp"
#include "dsphere/sphereint.hpp"
#include "dsphere/verify.hpp"

#include "support.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace dsphere;
using testing_support::F;

namespace {

std::map<std::string, const CheckResult*> byId;

struct Outcome {
    bool pass = true;
    std::string note;
};

void needChecks(Outcome& o, std::initializer_list<const char*> ids) {
    for (const char* id : ids) {
        auto it = byId.find(id);
        if (it == byId.end()) {
            o.pass = false;
            o.note += std::string(" missing:") + id;
        } else if (it->second->status != Status::Pass) {
            o.pass = false;
            o.note += std::string(" ") + statusName(it->second->status) + ":" + id;
        }
    }
}

int failures = 0;

void criterion(int n, const std::string& what, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string(" error: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << n << "  " << what << o.note << std::endl;
}

}  // namespace

int main() {
    SuiteConfig cfg;
    cfg.seed = 1;
    Report report = runSuites(cfg);
    for (const auto& c : report.checks) byId[c.suite + "/" + c.id] = &c;

    criterion(1, "pairing <ch(e), [S^4]> = -1 exactly for formal, const:1/3, poly:0,0,1, poly:0,-1,0,1", [] {
        Outcome o;
        for (const char* s : {"formal", "const:1/3", "poly:0,0,1", "poly:0,-1,0,1"}) {
            ExactValue v = pairingCh2(PhiSpec::parse(s));
            if (v != ExactValue(Gauss(-1))) {
                o.pass = false;
                o.note += std::string(" ") + s + "->" + v.str();
            }
        }
        return o;
    });

    criterion(2, "integral of omega = (8/3)*pi^2 exactly", [] {
        ExactValue v = integralOfForm(volumeForm());
        return Outcome{v == ExactValue(Gauss(Rational(8, 3)), 2), " value " + v.str()};
    });

    criterion(3, "{(dq dq*)^2}_11 = 6 da da* db db*, Tr (dq* dq)^2 = -12 da da* db db* mod ideal", [] {
        MatForm q = blockQ(), dq = matD(q), dqs = matD(matStar(q));
        MatForm x = dq * dqs, y = dqs * dq;
        bool ok = equalMod((x * x)(0, 0), F("6*da*da* * db*db*")) && equalMod(matTrace(y * y), F("-12*da*da* * db*db*"));
        return Outcome{ok, ""};
    });

    criterion(4, "e^2 = e and e* = e entrywise", [] {
        MatForm e = projectorE();
        return Outcome{e * e == e && matStar(e) == e, ""};
    });

    criterion(5, "dt da da* db db* in the ideal with a verified certificate; exhaustive degree-5 check", [] {
        Outcome o;
        auto r = idealMember(F("dt*da*da* * db*db*"));
        if (!r.member || !r.certificate || !r.certificate->verify()) {
            o.pass = false;
            o.note = " no certificate";
        }
        needChecks(o, {"calculus/dimension-lemma", "calculus/dimension-exhaustive"});
        return o;
    });

    criterion(6, "t, a, a*, b, b* times omega identities and centrality of omega mod ideal", [] {
        Outcome o;
        needChecks(o, {"volume/t-omega", "volume/a-omega", "volume/astar-omega", "volume/omega-b", "volume/omega-bstar",
                       "volume/central-a", "volume/central-astar", "volume/central-b", "volume/central-bstar",
                       "volume/central-t"});
        return o;
    });

    criterion(7, "Tr(e de de) = 2 lam' lamc dt (b db* + b* db); normalized = (1/pi) d(phi (...)); 0 for constant phi",
              [] {
                  Outcome o;
                  needChecks(o, {"chern/ch1-form", "chern/ch1-displayed-primitive", "chern/ch1-constant-phi"});
                  return o;
              });

    criterion(8, "b ch1 = 0, B ch1 = 1 (x) ch1, b^2 = B^2 = bB + Bb = 0 on 200 chains", [] {
        Outcome o;
        needChecks(o, {"hochschild/b-ch1", "hochschild/B-ch1", "hochschild/operator-identities"});
        return o;
    });

    criterion(9, "Stokes, traciality, graded cyclicity, psi cyclic and cocycle, ideal annihilation (100 each); "
                 "moments within 3 standard errors of 10^5 samples",
              [] {
                  Outcome o;
                  needChecks(o, {"properties/stokes", "properties/traciality", "properties/graded-cyclicity",
                                 "properties/psi-cyclic", "properties/psi-cocycle", "properties/ideal-annihilation",
                                 "properties/moments-monte-carlo"});
                  auto& table = MomentTable::shared();
                  for (int m = 0; m <= 4; ++m)
                      for (int p = 0; m + p <= 4; ++p)
                          for (int q = 0; m + p + q <= 4; ++q) {
                              auto est = testing_support::sampleSphereMoment(m, p, q, 100000, 77 + 25 * m + 5 * p + q);
                              double exact = table.sphereMoment(m, p, q).get_d();
                              if (std::abs(est.mean - exact) > 3 * est.stderr_ + 1e-12) {
                                  o.pass = false;
                                  std::ostringstream s;
                                  s << " oracle(" << m << "," << p << "," << q << ")=" << est.mean << " vs " << exact;
                                  o.note += s.str();
                              }
                          }
                  return o;
              });

    criterion(10, "odd Chern chain, image -2 b b* f'(b b*) d(b b*), explicit primitive", [] {
        Outcome o;
        needChecks(o, {"matsumoto/unitary", "matsumoto/chain", "matsumoto/de-rham-image", "matsumoto/reduced-image",
                       "matsumoto/primitive", "matsumoto/example-linear"});
        return o;
    });

    criterion(11, "500 parenthesization confluence checks on forms of degree <= 2", [] {
        Outcome o;
        needChecks(o, {"properties/confluence"});
        return o;
    });

    std::cout << (11 - failures) << "/11 criteria passed" << std::endl;
    return failures ? 1 : 0;
}
