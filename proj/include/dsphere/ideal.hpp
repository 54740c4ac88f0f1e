#pragma once

#include "dsphere/forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dsphere {

// The one-form constraint R = da* a + da a* + db* b + db b* + 2 t dt, i.e. d of the sphere relation.
// It is central and dR = 0, so the differential ideal is spanned by left * R * right.
Form relationR();

// coeff * left * R * right * mono
struct IdealGenerator {
    CoeffMono coeff;
    DiffWord left = 0;
    DiffWord right = 0;
    AlgMonomial mono;
    std::string str() const;
};

struct IdealCertificate {
    Form target;
    PhiSpec phi;
    std::vector<std::pair<Gauss, IdealGenerator>> combination;

    // the combination recomputed from scratch
    Form expand() const;
    bool verify() const { return expand() == target; }
};

struct IdealOptions {
    // Cap on (t-degree + monomial degree) of the spanning multipliers. Default: algDegree(x) + 6.
    std::optional<int> truncation;
    PhiSpec phi;  // generators are specialized the same way as the target
};

struct MembershipResult {
    bool member = false;
    std::optional<IdealCertificate> certificate;
    int window = 0;          // last multiplier degree bound tried
    size_t generators = 0;   // spanning elements in the last attempt
};

// Truncated linear-algebra test over Q(i). A positive answer carries a certificate that
// verify() re-checks; a negative answer only says no combination exists below the cap.
MembershipResult idealMember(const Form& x, const IdealOptions& opts = {});
bool equalMod(const Form& x, const Form& y, const IdealOptions& opts = {});

int defaultTruncationFromEnv(int fallback);

}  // namespace dsphere
