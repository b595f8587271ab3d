#include "hyperlab/zeta2.hpp"

#include <sstream>

#include "hyperlab/pfq.hpp"

namespace hyperlab {

Zeta2Number Zeta2Number::operator/(const Rational& c) const {
    if (c == 0) throw PoleError("division of zeta2-ring element by zero");
    return {r / c, z / c};
}

std::string render(const Zeta2Number& v) {
    if (v.z == 0) return to_string(v.r);
    std::ostringstream out;
    bool z_negative = v.z < 0;
    Rational zabs = z_negative ? Rational(-v.z) : v.z;
    if (v.r != 0) {
        out << to_string(v.r) << (z_negative ? " - " : " + ");
    } else if (z_negative) {
        out << "-";
    }
    if (zabs != 1) out << to_string(zabs) << "*";
    out << "zeta2";
    return out.str();
}

int sign(const Zeta2Number& v) {
    if (v.z == 0) return v.r == 0 ? 0 : (v.r > 0 ? 1 : -1);
    // r + z*zeta2 > 0  <=>  zeta2 > -r/z (z > 0)  or  zeta2 < -r/z (z < 0).
    Rational threshold = -v.r / v.z;
    for (unsigned precision = 64; precision <= 16384; precision *= 2) {
        auto enclosure = zeta2_approx(precision);
        Rational lo = enclosure.estimate - enclosure.error_bound;
        Rational hi = enclosure.estimate + enclosure.error_bound;
        if (threshold < lo) return v.z > 0 ? 1 : -1;
        if (threshold > hi) return v.z > 0 ? -1 : 1;
    }
    throw Error("sign(): zeta(2) enclosure did not separate from " + to_string(threshold));
}

}  // namespace hyperlab
