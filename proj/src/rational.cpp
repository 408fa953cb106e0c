#include "cotwist/rational.hpp"

#include <sstream>

namespace cotwist {

namespace {

std::string ratToString(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) os << "/" << boost::multiprecision::denominator(r);
    return os.str();
}

}  // namespace

std::string toString(const GaussianRational& q) {
    if (q.isZero()) return "0";
    if (q.im == 0) return ratToString(q.re);
    std::string imPart;
    if (q.im == 1)
        imPart = "i";
    else if (q.im == -1)
        imPart = "-i";
    else
        imPart = ratToString(q.im) + "*i";
    if (q.re == 0) return imPart;
    if (imPart[0] == '-') return ratToString(q.re) + imPart;
    return ratToString(q.re) + "+" + imPart;
}

bool needsParens(const GaussianRational& q) {
    // As a factor in front of a monomial: plain integers and +-i read fine,
    // everything else (fractions, mixed values) gets wrapped.
    if (q.im == 0) return boost::multiprecision::denominator(q.re) != 1;
    if (q.re == 0) return !(q.im == 1 || q.im == -1);
    return true;
}

}  // namespace cotwist
