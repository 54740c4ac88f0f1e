#pragma once

#include "dsphere/gauss.hpp"

#include <string>

namespace dsphere {

// coeff * pi^piPower, exact. Zero is normalized to piPower 0.
struct ExactValue {
    Gauss coeff;
    int piPower = 0;

    ExactValue() = default;
    ExactValue(Gauss c, int p = 0) : coeff(std::move(c)), piPower(p) {
        if (coeff.isZero()) piPower = 0;
    }

    bool isZero() const { return coeff.isZero(); }

    ExactValue& operator+=(const ExactValue& o);  // throws on mixed pi powers
    friend ExactValue operator+(ExactValue a, const ExactValue& b) { return a += b; }
    friend ExactValue operator-(ExactValue a, const ExactValue& b) { return a += ExactValue(-b.coeff, b.piPower); }
    friend ExactValue operator*(const ExactValue& a, const ExactValue& b) {
        return ExactValue(a.coeff * b.coeff, a.piPower + b.piPower);
    }
    friend ExactValue operator/(const ExactValue& a, const ExactValue& b) {
        return ExactValue(a.coeff / b.coeff, a.piPower - b.piPower);
    }
    friend bool operator==(const ExactValue& a, const ExactValue& b) {
        return a.coeff == b.coeff && a.piPower == b.piPower;
    }
    friend bool operator!=(const ExactValue& a, const ExactValue& b) { return !(a == b); }

    double toDouble() const;  // real part
    // "-1", "(8/3)*pi^2"; strRelative prints "(1/5)*(8/3)*pi^2" against a unit with the same pi power
    std::string str() const;
    std::string strRelative(const ExactValue& unit, const std::string& unitText) const;
};

}  // namespace dsphere
