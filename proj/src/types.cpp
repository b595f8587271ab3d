#include "hyperlab/types.hpp"

#include <algorithm>
#include <sstream>

namespace hyperlab {

std::array<long, 5> IntegralParams::pair_sum_multiset() const {
    std::array<long, 5> sums = {h + i, i + j, j + k, k + l, l + h};
    std::sort(sums.begin(), sums.end());
    return sums;
}

std::string to_string(const IntegralParams& p) {
    std::ostringstream out;
    out << "(" << p.h << "," << p.i << "," << p.j << "," << p.k << "," << p.l << ")";
    return out.str();
}

F32Params F32Params::canonical() const {
    F32Params c = *this;
    std::sort(c.upper.begin(), c.upper.end());
    std::sort(c.lower.begin(), c.lower.end());
    return c;
}

Rational F32Params::excess() const {
    return lower[0] + lower[1] - upper[0] - upper[1] - upper[2];
}

std::string to_string(const F32Params& f) {
    std::ostringstream out;
    out << "[" << to_string(f.upper[0]) << "," << to_string(f.upper[1]) << ","
        << to_string(f.upper[2]) << ";" << to_string(f.lower[0]) << "," << to_string(f.lower[1])
        << "]";
    return out.str();
}

std::string to_string(const XParams& xp) {
    std::ostringstream out;
    out << "(" << to_string(xp.x[0]);
    for (int i = 1; i < 5; ++i) out << "," << to_string(xp.x[i]);
    out << ")";
    return out.str();
}

}  // namespace hyperlab
