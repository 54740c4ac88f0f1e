#pragma once

#include "dsphere/expr.hpp"
#include "dsphere/forms.hpp"

#include <random>
#include <string>

namespace testing_support {

dsphere::Form F(const std::string& text, const dsphere::PhiSpec& phi = dsphere::PhiSpec::Formal());

// Mean of t^m |a|^2p |b|^2q over uniform points of S^4 in R^5, with its standard error.
struct Estimate {
    double mean;
    double stderr_;
};
Estimate sampleSphereMoment(int m, int p, int q, long samples, std::uint64_t seed);

}  // namespace testing_support
