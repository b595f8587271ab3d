#include "hyperlab/integral.hpp"

#include <algorithm>

namespace hyperlab {

namespace {

void check_non_negative(const IntegralParams& p) {
    if (p.h < 0 || p.i < 0 || p.j < 0 || p.k < 0 || p.l < 0)
        throw DomainError("integral parameters must be non-negative: " + to_string(p));
}

// Exponent of the linear factor (n+t) in the summand, numerator positive.
// Numerator contributes {1..i+j-l}, each denominator block one range.
std::map<long, int> factor_exponents(const IntegralParams& p) {
    std::map<long, int> exps;
    for (long t = 1; t <= p.i + p.j - p.l; ++t) exps[t] += 1;
    for (long t = p.h + 1; t <= p.h + p.i + 1; ++t) exps[t] -= 1;
    for (long t = p.k + 1; t <= p.k + p.j + 1; ++t) exps[t] -= 1;
    std::erase_if(exps, [](const auto& e) { return e.second == 0; });
    return exps;
}

Rational summand_prefactor(const IntegralParams& p) {
    return Rational(factorial(p.i) * factorial(p.j), factorial(p.i + p.j - p.l));
}

}  // namespace

Rational summand(const IntegralParams& p, long n) {
    check_non_negative(p);
    if (p.i + p.j - p.l < 0)
        throw DomainError("summand undefined for i+j-l < 0: " + to_string(p));
    Rational t = summand_prefactor(p);
    t *= pochhammer(Rational(n + 1), p.i + p.j - p.l);
    t /= pochhammer(Rational(n + p.h + 1), p.i + 1);
    t /= pochhammer(Rational(n + p.k + 1), p.j + 1);
    return t;
}

PFDecomp partial_fractions(const IntegralParams& p) {
    check_non_negative(p);
    if (p.i + p.j - p.l < 0)
        throw DomainError("partial fractions undefined for i+j-l < 0: " + to_string(p));
    const auto exps = factor_exponents(p);
    const Rational prefactor = summand_prefactor(p);

    PFDecomp decomp;
    for (const auto& [m, e] : exps) {
        if (e >= 0) continue;  // numerator factor, not a pole
        // Clear (n+m)^{-e} and evaluate the rest at n = -m. The cleared
        // function is prefactor * prod (t-m)^{e_t}; its log-derivative is
        // sum e_t/(n+t).
        Rational value = prefactor;
        Rational log_derivative(0);
        for (const auto& [t, et] : exps) {
            if (t == m) continue;
            value *= pow_rational(Rational(t - m), et);
            log_derivative += Rational(et) / Rational(t - m);
        }
        if (e == -2) {
            decomp.terms[m] = {value * log_derivative, value};
        } else {
            decomp.terms[m] = {value, Rational(0)};
        }
    }
    return decomp;
}

Zeta2Number pf_to_value(const PFDecomp& d) {
    Rational a_sum(0);
    for (const auto& [m, ab] : d.terms) a_sum += ab.first;
    if (a_sum != 0)
        throw ConvergenceError("simple-pole residues do not cancel (sum = " + to_string(a_sum) +
                               ")");
    Rational rational_part(0);
    Rational zeta_part(0);
    for (const auto& [m, ab] : d.terms) {
        const auto& [a, b] = ab;
        rational_part -= a * harmonic(m - 1, 1);
        rational_part -= b * harmonic(m - 1, 2);
        zeta_part += b;
    }
    return {rational_part, zeta_part};
}

Zeta2Number eval_integral_exact(const IntegralParams& p) {
    check_non_negative(p);
    if (p.i + p.j - p.l >= 0) return pf_to_value(partial_fractions(p));
    // The integrand is a polynomial: expand (1-xy)^E by the binomial
    // theorem and integrate term by term with beta integrals.
    const long E = p.l - p.i - p.j - 1;
    Rational sum(0);
    for (long n = 0; n <= E; ++n) {
        Rational term(binomial(E, n));
        if (n % 2 == 1) term = -term;
        term *= Rational(factorial(p.h + n) * factorial(p.i), factorial(p.h + n + p.i + 1));
        term *= Rational(factorial(p.k + n) * factorial(p.j), factorial(p.k + n + p.j + 1));
        sum += term;
    }
    return {sum, Rational(0)};
}

Rational zeta2_coefficient(const IntegralParams& p) {
    check_non_negative(p);
    const long lo = std::max({p.h, p.k, p.i + p.j - p.l});
    const long hi = std::min(p.h + p.i, p.k + p.j);
    Integer sum(0);
    for (long s = lo; s <= hi; ++s)
        sum += binomial(p.i, s - p.h) * binomial(p.j, s - p.k) * binomial(s, p.i + p.j - p.l);
    if ((p.h + p.i + p.j + p.k + p.l) % 2 == 1) sum = -sum;
    return Rational(sum);
}

bool is_irrational(const IntegralParams& p) {
    check_non_negative(p);
    for (long combo : p.derived_combos())
        if (combo < 0) return false;
    return true;
}

Zeta2Number b_value(const IntegralParams& p) {
    Rational divisor(factorial(p.h) * factorial(p.i) * factorial(p.j) * factorial(p.k) *
                     factorial(p.l));
    return eval_integral_exact(p) / divisor;
}

F32Params f32_of_integral(const IntegralParams& p) {
    return {{Rational(p.h + 1), Rational(p.k + 1), Rational(p.i + p.j - p.l + 1)},
            {Rational(p.h + p.i + 2), Rational(p.k + p.j + 2)}};
}

std::optional<IntegralParams> try_map_to_integral(const F32Params& f) {
    for (const auto& v : f.upper)
        if (!is_positive_integer(v)) return std::nullopt;
    for (const auto& v : f.lower)
        if (!is_positive_integer(v)) return std::nullopt;

    static constexpr int kUpperPerms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                              {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    static constexpr int kLowerPerms[2][2] = {{0, 1}, {1, 0}};
    for (const auto& up : kUpperPerms) {
        for (const auto& lp : kLowerPerms) {
            long a = to_long(f.upper[up[0]]);
            long b = to_long(f.upper[up[1]]);
            long c = to_long(f.upper[up[2]]);
            long d = to_long(f.lower[lp[0]]);
            long e = to_long(f.lower[lp[1]]);
            if (d < a + 1 || e < b + 1 || d + e < a + b + c + 1) continue;
            return IntegralParams{a - 1, d - a - 1, e - b - 1, b - 1, d + e - a - b - c - 1};
        }
    }
    return std::nullopt;
}

Zeta2Number eval_3f2_exact(const F32Params& f) {
    auto p = try_map_to_integral(f);
    if (!p)
        throw UnmappableError("series not of the exactly evaluable integral type: " +
                              to_string(f));
    Rational factor(factorial(p->h + p->i + 1) * factorial(p->k + p->j + 1),
                    factorial(p->h) * factorial(p->i) * factorial(p->j) * factorial(p->k));
    return factor * eval_integral_exact(*p);
}

Zeta2Number eval_2f1_exact(const Rational& a, const Rational& b, const Rational& c) {
    if (!is_positive_integer(a) || !is_positive_integer(b))
        throw UnmappableError("2F1 exact evaluation needs positive integer upper parameters");
    Rational pad = b + 1;
    return eval_3f2_exact({{a, b, pad}, {c, pad}});
}

}  // namespace hyperlab
