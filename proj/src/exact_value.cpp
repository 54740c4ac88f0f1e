#include "dsphere/exact_value.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dsphere {

ExactValue& ExactValue::operator+=(const ExactValue& o) {
    if (o.isZero()) return *this;
    if (isZero()) return *this = o;
    if (piPower != o.piPower) throw std::domain_error("adding exact values with different powers of pi");
    coeff += o.coeff;
    if (coeff.isZero()) piPower = 0;
    return *this;
}

double ExactValue::toDouble() const {
    return coeff.re.get_d() * std::pow(std::numbers::pi, piPower);
}

namespace {

std::string piText(int p) {
    if (p == 0) return "";
    if (p == 1) return "pi";
    return "pi^" + std::to_string(p);
}

std::string factorText(const Gauss& c) {
    if (c.isReal() && c.re.get_den() == 1) return rationalStr(c.re);
    if (c.isReal()) return "(" + rationalStr(c.re) + ")";
    return c.str();
}

}  // namespace

std::string ExactValue::str() const {
    if (isZero()) return "0";
    if (piPower == 0) return coeff.str();
    if (coeff.isOne()) return piText(piPower);
    return factorText(coeff) + "*" + piText(piPower);
}

std::string ExactValue::strRelative(const ExactValue& unit, const std::string& unitText) const {
    if (isZero()) return "0";
    if (unit.isZero() || unit.piPower != piPower) return str();
    Gauss ratio = coeff / unit.coeff;
    if (ratio.isOne()) return unitText;
    return factorText(ratio) + "*" + unitText;
}

}  // namespace dsphere
