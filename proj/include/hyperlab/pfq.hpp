#pragma once

#include <vector>

#include "hyperlab/zeta2.hpp"

namespace hyperlab {

// An enclosure: the true value lies in [estimate - error_bound,
// estimate + error_bound]. Both components are exact rationals; decimal
// rendering happens only at output time.
struct NumericValue {
    Rational estimate;
    Rational error_bound;
};

std::string render(const NumericValue& v, int significant_digits = 40);

// A pFq-series at argument |z| <= 1: upper has one more entry than lower.
struct PfqSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational argument = Rational(1);

    // Parameter excess sum(lower) - sum(upper); at argument 1 the series
    // converges iff this is positive.
    Rational excess() const;
};

struct PfqResult {
    NumericValue value;
    unsigned long terms_used = 0;
    bool budget_exhausted = false;
};

// Evaluates the series by exact rational partial sums up to an adaptively
// chosen truncation index. The error bound is a proven tail bound: the
// term-ratio domination inequality is established for all k beyond a
// computed index by a polynomial-positivity argument, then propagated.
// Stops once the bound reaches 2^-precision or the term budget runs out
// (budget exhaustion is reported, with the honest larger bound).
//
// Errors: DivergentSeries when the excess is <= 0 at argument 1;
// RestrictionError when it is below the supported 1/8 margin;
// DomainError for malformed specs (non-positive-integer lower parameter,
// |argument| > 1, mismatched lengths).
PfqResult eval_pfq(const PfqSpec& spec, unsigned precision_bits,
                   unsigned long max_terms = 4000);

// Enclosure of zeta(2) via the geometrically convergent central-binomial
// series 3 * sum_{k>=1} 1/(k^2 binom(2k,k)).
NumericValue zeta2_approx(unsigned precision_bits);

// Bridges the exact and numeric worlds: r + z*zeta(2) as an enclosure.
NumericValue zeta2_to_numeric(const Zeta2Number& v, unsigned precision_bits);

}  // namespace hyperlab
