#pragma once

#include <array>
#include <compare>
#include <string>

#include "hyperlab/rational.hpp"

namespace hyperlab {

// Parameters (h, i, j, k, l) of the double integral over the unit square
// with kernel (1 - xy). All entries non-negative (convergence).
struct IntegralParams {
    long h = 0, i = 0, j = 0, k = 0, l = 0;

    bool operator==(const IntegralParams&) const = default;
    auto operator<=>(const IntegralParams&) const = default;

    std::array<long, 5> as_array() const { return {h, i, j, k, l}; }
    static IntegralParams from_array(const std::array<long, 5>& a) {
        return {a[0], a[1], a[2], a[3], a[4]};
    }

    // The five derived combinations whose non-negativity characterises
    // irrationality of the integral.
    std::array<long, 5> derived_combos() const {
        return {j + k - h, k + l - i, l + h - j, h + i - k, i + j - l};
    }

    // Pair sums {h+i, i+j, j+k, k+l, l+h}, sorted. The order-120 symmetry
    // group acts as S5 on this multiset.
    std::array<long, 5> pair_sum_multiset() const;
};

std::string to_string(const IntegralParams& p);

// A 3F2-series at unit argument: upper (a, b, c), lower (d, e).
struct F32Params {
    std::array<Rational, 3> upper;
    std::array<Rational, 2> lower;

    bool operator==(const F32Params&) const = default;
    auto operator<=>(const F32Params&) const = default;

    // Sorts uppers and lowers ascending (trivial symmetries leave the
    // series value unchanged).
    F32Params canonical() const;

    // Parameter excess: d + e - a - b - c. The series converges at 1 iff
    // this is positive.
    Rational excess() const;
};

// Listing form "[u1,u2,u3;l1,l2]" (golden-test contract).
std::string to_string(const F32Params& f);

// The five-coordinate parametrisation in which the series value, divided
// by Gamma(s)Gamma(2x4)Gamma(2x5), is a symmetric function of x1..x5.
struct XParams {
    std::array<Rational, 5> x;

    bool operator==(const XParams&) const = default;

    // s = x1 + x2 + x3 - x4 - x5, always recomputed.
    Rational s() const { return x[0] + x[1] + x[2] - x[3] - x[4]; }
};

std::string to_string(const XParams& xp);

}  // namespace hyperlab
