#pragma once

#include <string>

#include "hyperlab/rational.hpp"

namespace hyperlab {

// An exact element r + z*zeta(2) of the rational zeta(2)-ring. For values
// coming from the convergent integral family, z != 0 iff the number is
// irrational.
struct Zeta2Number {
    Rational r;  // rational part
    Rational z;  // coefficient of zeta(2)

    Zeta2Number() = default;
    Zeta2Number(Rational rational_part, Rational zeta_part)
        : r(std::move(rational_part)), z(std::move(zeta_part)) {}

    bool operator==(const Zeta2Number& other) const = default;

    Zeta2Number operator+(const Zeta2Number& o) const { return {r + o.r, z + o.z}; }
    Zeta2Number operator-(const Zeta2Number& o) const { return {r - o.r, z - o.z}; }
    Zeta2Number operator-() const { return {-r, -z}; }
    Zeta2Number operator*(const Rational& c) const { return {r * c, z * c}; }
    Zeta2Number operator/(const Rational& c) const;

    bool is_rational() const { return z == 0; }
};

inline Zeta2Number operator*(const Rational& c, const Zeta2Number& v) { return v * c; }

// Rendering grammar `R + Z*zeta2` with reduced fractions, omitting zero
// components: "5 - 3*zeta2", "1/36", "zeta2", "0".
std::string render(const Zeta2Number& v);

// Exact sign of r + z*zeta(2); decided by refining an enclosure of zeta(2)
// (terminates because zeta(2) is irrational, so z != 0 never yields 0).
int sign(const Zeta2Number& v);

}  // namespace hyperlab
