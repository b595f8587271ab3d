#pragma once

#include <map>
#include <optional>

#include "hyperlab/types.hpp"
#include "hyperlab/zeta2.hpp"

namespace hyperlab {

// Partial-fraction decomposition of the integral's summand: pole location
// m >= 1 maps to (A_m, B_m), meaning A_m/(n+m) + B_m/(n+m)^2. Simple poles
// carry B_m = 0. Convergence of the summed series forces sum A_m = 0.
struct PFDecomp {
    std::map<long, std::pair<Rational, Rational>> terms;
};

// Term of the series form of the integral:
//   i!j!/(i+j-l)! * (n+1)_{i+j-l} / ((n+h+1)_{i+1} (n+k+1)_{j+1}).
// DomainError when i + j - l < 0 (the integrand is then a polynomial; use
// eval_integral_exact for the general case).
Rational summand(const IntegralParams& p, long n);

// Exact residue decomposition of the summand. DomainError when i+j-l < 0.
PFDecomp partial_fractions(const IntegralParams& p);

// Sums the decomposed series:
//   (-sum A_m H_{m-1} - sum B_m H2_{m-1}) + (sum B_m) * zeta2.
// ConvergenceError when sum A_m != 0.
Zeta2Number pf_to_value(const PFDecomp& d);

// Exact value of the double integral as an element of Q + Q*zeta(2).
Zeta2Number eval_integral_exact(const IntegralParams& p);

// Closed-form coefficient of zeta(2): a signed sum of binomial products.
// An independent route to eval_integral_exact(p).z.
Rational zeta2_coefficient(const IntegralParams& p);

// True iff j+k-h, k+l-i, l+h-j, h+i-k, i+j-l are all non-negative;
// equivalently, the integral is irrational.
bool is_irrational(const IntegralParams& p);

// Integral value divided by h! i! j! k! l!; a symmetric function of the
// pair sums {h+i, i+j, j+k, k+l, l+h}.
Zeta2Number b_value(const IntegralParams& p);

// Dictionary between series and integral coordinates: the 3F2-series
// [h+1, k+1, i+j-l+1; h+i+2, k+j+2] equals
// (h+i+1)!(k+j+1)!/(h!i!j!k!) * I(h,i,j,k,l).
F32Params f32_of_integral(const IntegralParams& p);

// Tries the 12 upper/lower pairings of a positive-integer series in
// lexicographic order; returns the integral parameters of the first
// admissible one, or nullopt.
std::optional<IntegralParams> try_map_to_integral(const F32Params& f);

// Exact value of an integral-parameter 3F2-series at unit argument.
// UnmappableError when no trivial-symmetry assignment is admissible.
Zeta2Number eval_3f2_exact(const F32Params& f);

// 2F1[a,b;c] at 1, padded into an exactly evaluable 3F2.
Zeta2Number eval_2f1_exact(const Rational& a, const Rational& b, const Rational& c);

}  // namespace hyperlab
