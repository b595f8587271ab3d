#include "hyperlab/pfq.hpp"

#include <algorithm>
#include <optional>

namespace hyperlab {

namespace {

Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Dense polynomial over Q, coefficient index = degree.
using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Poly poly_pow(Poly base, unsigned long e) {
    Poly result = {Rational(1)};
    while (e > 0) {
        if (e & 1) result = poly_mul(result, base);
        e >>= 1;
        if (e) base = poly_mul(base, base);
    }
    return result;
}

// In-place Taylor shift: coefficients of P(x + c).
void poly_shift(Poly& p, const Rational& c) {
    if (p.size() < 2) return;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        for (std::size_t j = p.size() - 1; j-- > i;) p[j] += c * p[j + 1];
}

bool all_coeffs_nonnegative(const Poly& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c >= 0; });
}

// Smallest k such that every linear factor (param + k) is positive.
long sign_stable_index(const PfqSpec& spec) {
    long k0 = 0;
    auto update = [&](const Rational& v) {
        if (v > 0) return;
        // need k > -v
        Integer floor_neg = num(-v) / den(-v);
        long candidate = static_cast<long>(floor_neg) + 1;
        k0 = std::max(k0, candidate);
    };
    for (const auto& v : spec.upper) update(v);
    for (const auto& v : spec.lower) update(v);
    return k0;
}

// Finds N >= start such that dominator(k) >= 0 for all k >= N, where the
// polynomial inequality is certified by shifting to k = N + x and checking
// all coefficients non-negative (x >= 0 then keeps it non-negative).
long prove_from_index(const Poly& dominator, long start) {
    long n = std::max(start, 1L);
    while (n <= (1L << 22)) {
        Poly shifted = dominator;
        poly_shift(shifted, Rational(n));
        if (all_coeffs_nonnegative(shifted)) return n;
        n = 2 * n + 8;
    }
    throw Error("tail domination proof did not stabilise");
}

struct TailPlan {
    long proven_from = 0;  // domination valid for all k >= proven_from
    // tail after summing through M (>= proven_from): |t_M| * factor_num(M)/factor_den
    // z = 1 route: factor = M * v / u  (sigma' = u/v)
    // |z| < 1 route: factor = rho/(1-rho)
    bool unit_argument = true;
    Integer sp_num, sp_den;  // sigma' = sp_num/sp_den
    Rational geometric_factor;
};

TailPlan build_tail_plan(const PfqSpec& spec) {
    TailPlan plan;
    const long k0 = sign_stable_index(spec);
    Rational zabs = abs_rational(spec.argument);
    if (zabs == 1) {
        plan.unit_argument = true;
        Rational sigma = spec.excess();
        Rational sigma_prime = sigma / 2 > 2 ? Rational(2) : sigma / 2;
        plan.sp_num = num(sigma_prime);
        plan.sp_den = den(sigma_prime);
        unsigned long u = static_cast<unsigned long>(plan.sp_num);
        unsigned long v = static_cast<unsigned long>(plan.sp_den);
        // prod(beta+k)^v * k^(v+u) - prod(alpha+k)^v * (k+1)^u >= 0 certifies
        // |t_{k+1}/t_k| <= (k/(k+1))^(1+sigma') for k beyond the proof index.
        Poly lhs = {Rational(0), Rational(1)};  // k
        lhs = poly_pow(lhs, v + u);
        for (const auto& b : spec.lower) lhs = poly_mul(lhs, poly_pow({b, Rational(1)}, v));
        Poly rhs = poly_pow({Rational(1), Rational(1)}, u);  // (k+1)^u
        for (const auto& a : spec.upper) rhs = poly_mul(rhs, poly_pow({a, Rational(1)}, v));
        Poly dominator(std::max(lhs.size(), rhs.size()), Rational(0));
        for (std::size_t i = 0; i < lhs.size(); ++i) dominator[i] += lhs[i];
        for (std::size_t i = 0; i < rhs.size(); ++i) dominator[i] -= rhs[i];
        plan.proven_from = prove_from_index(dominator, k0);
    } else {
        plan.unit_argument = false;
        Rational rho = (zabs + 1) / 2;
        plan.geometric_factor = rho / (1 - rho);
        // rho * prod(beta+k) * (k+1) - |z| * prod(alpha+k) >= 0 certifies
        // |t_{k+1}/t_k| <= rho.
        Poly lhs = {rho, rho};  // rho*(k+1)
        for (const auto& b : spec.lower) lhs = poly_mul(lhs, {b, Rational(1)});
        Poly rhs = {zabs};
        for (const auto& a : spec.upper) rhs = poly_mul(rhs, {a, Rational(1)});
        Poly dominator(std::max(lhs.size(), rhs.size()), Rational(0));
        for (std::size_t i = 0; i < lhs.size(); ++i) dominator[i] += lhs[i];
        for (std::size_t i = 0; i < rhs.size(); ++i) dominator[i] -= rhs[i];
        plan.proven_from = prove_from_index(dominator, k0);
    }
    return plan;
}

// Tail bound after summing terms 0..m, given |t_m| = tnum/tden exactly.
Rational tail_bound(const TailPlan& plan, long m, const Integer& tnum, const Integer& tden) {
    Rational tm(tnum, tden);
    if (plan.unit_argument) return tm * Rational(Integer(m) * plan.sp_den, plan.sp_num);
    return tm * plan.geometric_factor;
}

// tail_bound(...) <= 2^-precision, decided by integer cross-multiplication
// so the hot loop never reduces the big accumulator fractions.
bool tail_bound_within(const TailPlan& plan, long m, const Integer& tnum, const Integer& tden,
                       unsigned precision_bits) {
    if (plan.unit_argument)
        return (tnum * m * plan.sp_den) << precision_bits <= plan.sp_num * tden;
    const Integer gf_num = num(plan.geometric_factor), gf_den = den(plan.geometric_factor);
    return (tnum * gf_num) << precision_bits <= gf_den * tden;
}

std::optional<long> termination_index(const PfqSpec& spec) {
    std::optional<long> index;
    for (const auto& a : spec.upper) {
        if (is_integer(a) && a <= 0) {
            long last = to_long(-a);
            if (!index || last < *index) index = last;
        }
    }
    return index;
}

void validate(const PfqSpec& spec) {
    if (spec.upper.size() != spec.lower.size() + 1)
        throw DomainError("pFq spec needs one more upper than lower parameter");
    for (const auto& b : spec.lower)
        if (is_integer(b) && b <= 0)
            throw DomainError("non-positive integer lower parameter: " + to_string(b));
    if (abs_rational(spec.argument) > 1)
        throw DomainError("argument outside |z| <= 1: " + to_string(spec.argument));
}

}  // namespace

Rational PfqSpec::excess() const {
    Rational sum(0);
    for (const auto& b : lower) sum += b;
    for (const auto& a : upper) sum -= a;
    return sum;
}

std::string render(const NumericValue& v, int significant_digits) {
    return decimal_string(v.estimate, significant_digits) + " +- " +
           decimal_string(v.error_bound, 3, /*round_up=*/true);
}

PfqResult eval_pfq(const PfqSpec& spec, unsigned precision_bits, unsigned long max_terms) {
    validate(spec);
    if (spec.argument == 0) return {{Rational(1), Rational(0)}, 1, false};

    const auto terminate_at = termination_index(spec);
    if (!terminate_at && abs_rational(spec.argument) == 1) {
        Rational sigma = spec.excess();
        if (sigma <= 0)
            throw DivergentSeries("parameter excess " + to_string(sigma) +
                                  " <= 0 at unit argument");
        if (sigma < Rational(1, 8))
            throw RestrictionError("parameter excess " + to_string(sigma) +
                                   " below the supported 1/8 margin");
    }

    // Common-denominator accumulation: t_k = T/D, partial sum = S/D.
    Integer T(1), D(1), S(1);

    if (terminate_at) {
        for (long k = 0; k < *terminate_at; ++k) {
            Rational ratio = spec.argument;
            for (const auto& a : spec.upper) ratio *= a + k;
            for (const auto& b : spec.lower) ratio /= b + k;
            ratio /= k + 1;
            T *= num(ratio);
            D *= den(ratio);
            S = S * den(ratio) + T;
        }
        return {{Rational(S, D), Rational(0)},
                static_cast<unsigned long>(*terminate_at) + 1, false};
    }

    const TailPlan plan = build_tail_plan(spec);
    const unsigned long budget =
        std::max<unsigned long>(max_terms, static_cast<unsigned long>(plan.proven_from) + 2);

    long m = 0;
    bool satisfied = false;
    while (static_cast<unsigned long>(m) < budget) {
        Rational ratio = spec.argument;
        for (const auto& a : spec.upper) ratio *= a + m;
        for (const auto& b : spec.lower) ratio /= b + m;
        ratio /= m + 1;
        T *= num(ratio);
        D *= den(ratio);
        S = S * den(ratio) + T;
        ++m;
        if (m >= plan.proven_from && m % 8 == 0 &&
            tail_bound_within(plan, m, boost::multiprecision::abs(T), D, precision_bits)) {
            satisfied = true;
            break;
        }
    }
    Rational bound = tail_bound(plan, m, boost::multiprecision::abs(T), D);
    return {{Rational(S, D), bound}, static_cast<unsigned long>(m) + 1, !satisfied};
}

NumericValue zeta2_approx(unsigned precision_bits) {
    // 3 * sum_{k>=1} 1/(k^2 binom(2k,k)); the term ratio is
    // k^2/((2k+1)(2k+2)) < 1/4, so the tail after the k-th term is below a
    // third of that term. t_1 = 3/2, tracked as T/D with partial sum S/D.
    const Rational target = pow_rational(Rational(1, 2), static_cast<long>(precision_bits) + 1);
    Integer T(3), D(2), S(3);
    long k = 1;
    Rational bound = Rational(T, D) / 3;
    while (bound > target) {
        Integer rn = Integer(k) * k;
        Integer rd = Integer(2 * k + 1) * (2 * k + 2);
        Integer g = boost::multiprecision::gcd(rn, rd);
        rn /= g;
        rd /= g;
        T *= rn;
        D *= rd;
        S = S * rd + T;
        ++k;
        bound = Rational(T, D) / 3;
    }
    return {Rational(S, D), bound};
}

NumericValue zeta2_to_numeric(const Zeta2Number& v, unsigned precision_bits) {
    if (v.z == 0) return {v.r, Rational(0)};
    NumericValue zeta = zeta2_approx(precision_bits + 2);
    return {v.r + v.z * zeta.estimate, abs_rational(v.z) * zeta.error_bound};
}

}  // namespace hyperlab
