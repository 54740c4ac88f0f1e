#include "dsphere/gauss.hpp"

#include <stdexcept>

namespace dsphere {

Gauss& Gauss::operator/=(const Gauss& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
    Rational r = (re * o.re + im * o.im) / n;
    im = (im * o.re - re * o.im) / n;
    re = std::move(r);
    return *this;
}

Gauss ipow(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return Gauss(1);
        case 1: return Gauss(0, 1);
        case 2: return Gauss(-1);
        default: return Gauss(0, -1);
    }
}

std::string rationalStr(const Rational& r) {
    return r.get_str();
}

Rational parseRational(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body[0] == '+') body = body.substr(1);
    auto dot = body.find('.');
    if (dot != std::string::npos) {
        std::string ip = body.substr(0, dot), fp = body.substr(dot + 1);
        bool neg = !ip.empty() && ip[0] == '-';
        if (neg) ip = ip.substr(1);
        if (ip.empty()) ip = "0";
        mpz_class den = 1;
        for (size_t i = 0; i < fp.size(); ++i) den *= 10;
        Rational q(mpz_class(ip + fp, 10), den);
        q.canonicalize();
        return neg ? Rational(-q) : q;
    }
    Rational q;
    if (q.set_str(body, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string Gauss::str() const {
    if (sgn(im) == 0) return rationalStr(re);
    std::string imPart;
    if (im == 1) imPart = "i";
    else if (im == -1) imPart = "-i";
    else imPart = rationalStr(im) + " i";
    if (sgn(re) == 0) return imPart;
    std::string out = "(" + rationalStr(re);
    if (sgn(im) > 0) out += " + " + imPart;
    else out += " - " + (im == -1 ? std::string("i") : rationalStr(-im) + " i");
    return out + ")";
}

}  // namespace dsphere
