#include "hyperlab/identities.hpp"

#include <sstream>

#include "hyperlab/thomae.hpp"

namespace hyperlab {

namespace {

const Expr kAlpha = Expr::sym("alpha");
const Expr kBeta = Expr::sym("beta");
const Expr kGamma = Expr::sym("gamma");
const Expr kDelta = Expr::sym("delta");
const Expr kA = Expr::sym("a");
const Expr kB = Expr::sym("b");
const Expr kC = Expr::sym("c");
const Expr kD = Expr::sym("d");
const Expr kE = Expr::sym("e");

std::vector<IdentityEntry> build_catalogue() {
    std::vector<IdentityEntry> entries;
    const Rational half(1, 2);

    {  // Two-term relation with shifted uppers and fixed lowers.
        IdentityEntry entry;
        entry.id = "exotique2";
        entry.free_params = {"alpha", "beta", "gamma"};
        Expr d = 2 * kAlpha + kBeta + 1, e = 2 * kBeta + kAlpha + 1;
        entry.lhs = {{kAlpha + 1, kBeta + 1, kGamma}, {d, e}};
        entry.rhs.push_back(
            {2 * (kAlpha + kBeta) / (2 * (kAlpha + kBeta) - kGamma), std::nullopt,
             {{kAlpha, kBeta, kGamma}, {d, e}}});
        entries.push_back(std::move(entry));
    }
    {  // The gamma = alpha + beta specialisation, prefactor 2.
        IdentityEntry entry;
        entry.id = "exotique";
        entry.free_params = {"alpha", "beta"};
        Expr d = 2 * kAlpha + kBeta + 1, e = 2 * kBeta + kAlpha + 1;
        entry.lhs = {{kAlpha + 1, kBeta + 1, kAlpha + kBeta}, {d, e}};
        entry.rhs.push_back({Expr(2), std::nullopt, {{kAlpha, kBeta, kAlpha + kBeta}, {d, e}}});
        entries.push_back(std::move(entry));
    }
    {  // Coupling of the two orbit sides used by the first family.
        IdentityEntry entry;
        entry.id = "couplage";
        entry.free_params = {"alpha"};
        entry.lhs = {{2 * kAlpha, 2 * kAlpha, 2 * kAlpha}, {4 * kAlpha, 3 * kAlpha + 1}};
        entry.rhs.push_back(
            {kAlpha * (2 * kAlpha + 1) / ((3 * kAlpha + 1) * (4 * kAlpha + 1)), std::nullopt,
             {{2 * kAlpha + 2, 2 * kAlpha + 1, 2 * kAlpha + 1},
              {4 * kAlpha + 2, 3 * kAlpha + 2}}});
        entries.push_back(std::move(entry));
    }
    {  // Balanced-type relation behind the remaining counter-example.
        IdentityEntry entry;
        entry.id = "b12";
        entry.free_params = {"alpha", "beta", "gamma"};
        Expr shift = kAlpha * (kAlpha - kGamma + 1) / (kBeta - 1);
        Expr num = (kAlpha + 1) * (2 * kAlpha + kAlpha * kAlpha - kAlpha * kBeta - kGamma -
                                   kAlpha * kGamma + kBeta * kGamma);
        Expr den = (kAlpha - kBeta + 2) *
                   (kAlpha + kAlpha * kAlpha - kGamma - kAlpha * kGamma + kBeta * kGamma);
        entry.lhs = {{kAlpha + 1, kBeta - 1, kGamma}, {kAlpha + 2, kGamma + shift}};
        entry.rhs.push_back({num / den, std::nullopt,
                             {{kAlpha, kBeta, kGamma}, {kAlpha + 1, kGamma + shift + 1}}});
        entries.push_back(std::move(entry));
    }
    {  // b12 at (alpha^2, alpha+1, alpha^2).
        IdentityEntry entry;
        entry.id = "b3";
        entry.free_params = {"alpha"};
        Expr a2 = kAlpha * kAlpha;
        entry.lhs = {{a2, a2, kAlpha + 1}, {a2 + 1, a2 + kAlpha + 1}};
        entry.rhs.push_back({(a2 * kAlpha + 1) / (a2 + 1), std::nullopt,
                             {{a2 + 1, a2, kAlpha}, {a2 + 2, a2 + kAlpha}}});
        entries.push_back(std::move(entry));
    }
    {  // Contiguous two-term relation with closed-form rest.
        IdentityEntry entry;
        entry.id = "b11";
        entry.free_params = {"a", "b", "c", "d"};
        entry.integer_params = {"b"};
        entry.lhs = {{kA, kB, kC}, {kA + 1, kD}};
        entry.rhs.push_back(
            {(kA - kB + 1) * (kA - kB + 2) * (kA - kC + 1) * (kD - 1) /
                 ((kA + 1) * (kB - 1) * (kA - kD + 2) * (kA - kD + 1)),
             std::nullopt,
             {{kA + 1, kB - 1, kC}, {kA + 2, kD - 1}}});
        entry.remainder = Remainder{
            (Expr(1) - kA - kA * kA - kB + kC + kA * kC - kB * kC - kD + kB * kD) /
                ((kB - 1) * (kA - kD + 2) * (kA - kD + 1)),
            GammaTerm{{kD, kD - kB - kC + 1}, {kD - kB, kD - kC}}};
        entries.push_back(std::move(entry));
    }
    {
        IdentityEntry entry;
        entry.id = "b5";
        entry.free_params = {"a", "b", "c", "d"};
        entry.integer_params = {"b"};
        entry.lhs = {{kA, kB, kC}, {kA + 1, kD}};
        entry.rhs.push_back({kB * kC * (kA - kD - 1) * (kA - kD) /
                                 ((kA - kB) * (kA - kC) * kD * (kD + 1)),
                             std::nullopt,
                             {{kA, kB + 1, kC + 1}, {kA + 1, kD + 2}}});
        entry.remainder =
            Remainder{kA * (kB * kC + kA * kD - kB * kD - kC * kD) / ((kA - kB) * (kA - kC)),
                      GammaTerm{{kD, kD - kB - kC + 1}, {kD - kB + 1, kD - kC + 1}}};
        entries.push_back(std::move(entry));
    }
    {
        IdentityEntry entry;
        entry.id = "b6";
        entry.free_params = {"beta", "gamma", "delta"};
        Expr top = kBeta + kGamma - kDelta;
        Expr low = kBeta * kGamma / kDelta;
        entry.lhs = {{top, kBeta, kGamma}, {top + 1, low}};
        entry.rhs.push_back(
            {(kBeta * kGamma + kDelta - kBeta * kDelta - kGamma * kDelta + kDelta * kDelta) /
                 (kBeta * kGamma + kDelta),
             std::nullopt,
             {{top, kBeta + 1, kGamma + 1}, {top + 1, low + 2}}});
        entries.push_back(std::move(entry));
    }
    {
        IdentityEntry entry;
        entry.id = "b13";
        entry.free_params = {"a", "b", "c", "d"};
        entry.integer_params = {"b"};
        entry.lhs = {{kA, kB, kC}, {kA + 1, kD}};
        entry.rhs.push_back({(kA - kB + 1) * (kA - kC + 1) / ((kA + 1) * (kA - kD + 1)),
                             std::nullopt,
                             {{kA + 1, kB, kC}, {kA + 2, kD}}});
        entry.remainder = Remainder{-(Expr(1) / (kA - kD + 1)),
                                    GammaTerm{{kD, kD - kB - kC + 1}, {kD - kB, kD - kC}}};
        entries.push_back(std::move(entry));
    }
    {  // Two applications of the previous relation.
        IdentityEntry entry;
        entry.id = "b9";
        entry.free_params = {"a", "b", "c", "d"};
        entry.integer_params = {"b"};
        entry.lhs = {{kA, kB, kC}, {kA + 1, kD}};
        entry.rhs.push_back(
            {(kA - kB + 1) * (kA - kB + 2) * (kA - kC + 1) * (kA - kC + 2) /
                 ((kA + 1) * (kA + 2) * (kA - kD + 2) * (kA - kD + 1)),
             std::nullopt,
             {{kA + 2, kB, kC}, {kA + 3, kD}}});
        entry.remainder = Remainder{
            -((Expr(3) + 5 * kA + 2 * kA * kA - kB - kA * kB - kC - kA * kC + kB * kC - kD -
               kA * kD) /
              ((kA + 1) * (kA - kD + 2) * (kA - kD + 1))),
            GammaTerm{{kD, kD - kB - kC + 1}, {kD - kB, kD - kC}}};
        entries.push_back(std::move(entry));
    }
    {
        IdentityEntry entry;
        entry.id = "b10";
        entry.free_params = {"alpha", "beta", "gamma"};
        Expr low = 2 * kAlpha - kBeta - kGamma + kBeta * kGamma / (kAlpha + 1) + 3;
        entry.lhs = {{kAlpha, kBeta, kGamma}, {kAlpha + 1, low}};
        entry.rhs.push_back(
            {(kAlpha + 1) * (kAlpha - kBeta + 2) * (kAlpha - kGamma + 2) /
                 ((kAlpha + 2) * (3 * kAlpha + kAlpha * kAlpha - kBeta - kAlpha * kBeta -
                                  kGamma - kAlpha * kGamma + kBeta * kGamma + 2)),
             std::nullopt,
             {{kAlpha + 2, kBeta, kGamma}, {kAlpha + 3, low}}});
        entries.push_back(std::move(entry));
    }

    const Expr a1 = Expr::sym("a1"), a2 = Expr::sym("a2");
    const Expr b1 = Expr::sym("b1"), b2 = Expr::sym("b2");
    const Expr c1 = Expr::sym("c1"), c2 = Expr::sym("c2");
    {  // Integer-friendly reparametrisation of b12.
        IdentityEntry entry;
        entry.id = "b14";
        entry.free_params = {"a1", "a2", "c1", "c2"};
        Expr aa = a1 * a2, cc = c1 * c2;
        entry.lhs = {{aa, a1 * c1 + 1, aa - cc + 1}, {aa + 1, aa + a2 * c2 - cc + 2}};
        entry.rhs.push_back({(aa - a1 * c1 + 1) * (aa + a2 * c2 - cc + 1) /
                                 ((aa + 1) * (a2 * c2 - cc + 1)),
                             std::nullopt,
                             {{aa + 1, a1 * c1, aa - cc + 1}, {aa + 2, aa + a2 * c2 - cc + 1}}});
        entries.push_back(std::move(entry));
    }
    {  // Integer-friendly reparametrisation of b6.
        IdentityEntry entry;
        entry.id = "b15";
        entry.free_params = {"b1", "b2", "c1", "c2"};
        Expr bb = b1 * b2, cc = c1 * c2, dd = b1 * c1;
        entry.lhs = {{bb + cc - dd, bb, cc}, {bb + cc - dd + 1, b2 * c2}};
        entry.rhs.push_back(
            {(bb * cc + dd - bb * dd - cc * dd + dd * dd) / (bb * cc + dd), std::nullopt,
             {{bb + cc - dd, bb + 1, cc + 1}, {bb + cc - dd + 1, b2 * c2 + 2}}});
        entries.push_back(std::move(entry));
    }
    {  // Integer-friendly reparametrisation of b10.
        IdentityEntry entry;
        entry.id = "b16";
        entry.free_params = {"b1", "b2", "c1", "c2"};
        Expr bb = b1 * b2, cc = c1 * c2, aa = b1 * c1 - 1;
        Expr low = 2 * (aa + 1) - bb + b2 * c2 - cc + 1;
        entry.lhs = {{aa, bb, cc}, {aa + 1, low}};
        entry.rhs.push_back({(aa - bb + 2) * (aa - cc + 2) / ((aa + 2) * (aa - bb + b2 * c2 - cc + 2)),
                             std::nullopt,
                             {{aa + 2, bb, cc}, {aa + 3, low}}});
        entries.push_back(std::move(entry));
    }
    {
        IdentityEntry entry;
        entry.id = "id1";
        entry.free_params = {"alpha"};
        Expr a2x = kAlpha * kAlpha;
        entry.lhs = {{a2x, kAlpha + 1, a2x}, {a2x + 1, a2x + kAlpha + 1}};
        entry.rhs.push_back({(a2x * kAlpha + 1) / (a2x + 1), std::nullopt,
                             {{a2x + 1, kAlpha, a2x}, {a2x + 2, a2x + kAlpha}}});
        entries.push_back(std::move(entry));
    }
    {
        IdentityEntry entry;
        entry.id = "id2";
        entry.free_params = {"alpha"};
        Expr m = kAlpha * kAlpha - kAlpha;  // alpha(alpha-1)
        entry.lhs = {{m + 1, kAlpha, m}, {m + 2, kAlpha * kAlpha}};
        entry.rhs.push_back({kAlpha / (kAlpha * kAlpha + 1), std::nullopt,
                             {{m + 1, kAlpha + 1, m + 1}, {m + 2, kAlpha * kAlpha + 2}}});
        entries.push_back(std::move(entry));
    }
    {
        IdentityEntry entry;
        entry.id = "id3";
        entry.free_params = {"alpha"};
        entry.lhs = {{6 * kAlpha + 1, 4 * kAlpha + 2, 3 * kAlpha + 1},
                     {6 * kAlpha + 2, 7 * kAlpha + 3}};
        entry.rhs.push_back({(3 * kAlpha + 2) / (3 * kAlpha + 3), std::nullopt,
                             {{6 * kAlpha + 3, 4 * kAlpha + 2, 3 * kAlpha + 1},
                              {6 * kAlpha + 4, 7 * kAlpha + 3}}});
        entries.push_back(std::move(entry));
    }
    {  // The fundamental two-term transformation itself.
        IdentityEntry entry;
        entry.id = "thomae1";
        entry.free_params = {"a", "b", "c", "d", "e"};
        entry.integer_params = {"a"};
        entry.lhs = {{kA, kB, kC}, {kD, kE}};
        RhsTerm term;
        term.coef = Expr(1);
        term.gamma_coef =
            GammaTerm{{kE, kD + kE - kA - kB - kC}, {kE - kA, kD + kE - kB - kC}};
        term.series = {{kA, kD - kB, kD - kC}, {kD, kD + kE - kB - kC}};
        entry.rhs.push_back(std::move(term));
        entries.push_back(std::move(entry));
    }
    {  // Transformation to a very-well-poised 7F6.
        IdentityEntry entry;
        entry.id = "T3240";
        entry.free_params = {"a", "b", "c", "d"};
        entry.integer_params = {"b"};
        entry.lhs = {{kB, kC, kD}, {kA, kA - kB + kC}};
        RhsTerm term;
        term.coef = Expr(1);
        term.gamma_coef = GammaTerm{
            {2 * kA, 2 * kA - 2 * kB - kD, kA - kB + kC, kA - kD + kC},
            {2 * kA - 2 * kB, 2 * kA - kD, kA + kC, kA - kB - kD + kC}};
        term.series = {{kA - half, kA * half + Rational(3, 4), kB, kD * half, kD * half + half,
                        (kA - kC) * half, (kA - kC) * half + half},
                       {kA * half - Rational(1, 4), kA - kB + half, kA - kD * half + half,
                        kA - kD * half, (kA + kC) * half + half, (kA + kC) * half}};
        entry.rhs.push_back(std::move(term));
        entries.push_back(std::move(entry));
    }
    {  // Closed-form summation of a 2F1 at 1.
        IdentityEntry entry;
        entry.id = "gauss";
        entry.free_params = {"a", "b", "c"};
        entry.integer_params = {"a"};
        entry.lhs = {{kA, kB}, {kC}};
        entry.remainder =
            Remainder{Expr(1), GammaTerm{{kC, kC - kA - kB}, {kC - kA, kC - kB}}};
        entries.push_back(std::move(entry));
    }

    const Expr A1 = Expr::sym("A1"), A2 = Expr::sym("A2"), A3 = Expr::sym("A3");
    const Expr B1 = Expr::sym("B1"), B2 = Expr::sym("B2");
    const Expr z = Expr::sym("z");
    {  // Three-term contiguous relations.
        IdentityEntry entry;
        entry.id = "C55";
        entry.free_params = {"A1", "A2", "A3", "B1", "B2", "z"};
        entry.lhs = {{A1, A2, A3}, {B1, B2}, z};
        entry.rhs.push_back({(1 - A1 + A2) * (B1 - 1) / ((A1 - 1) * (1 + A2 - B1)), std::nullopt,
                             {{A1 - 1, A2, A3}, {B1 - 1, B2}, z}});
        entry.rhs.push_back({A2 * (B1 - A1) / ((A1 - 1) * (B1 - A2 - 1)), std::nullopt,
                             {{A1 - 1, A2 + 1, A3}, {B1, B2}, z}});
        entries.push_back(std::move(entry));
    }
    {
        IdentityEntry entry;
        entry.id = "C15";
        entry.free_params = {"A1", "A2", "A3", "B1", "B2", "z"};
        entry.lhs = {{A1, A2, A3}, {B1, B2}, z};
        entry.rhs.push_back({Expr(1), std::nullopt, {{A1 + 1, A2, A3}, {B1, B2}, z}});
        entry.rhs.push_back({-(z * A2 * A3 / (B1 * B2)), std::nullopt,
                             {{A1 + 1, A2 + 1, A3 + 1}, {B1 + 1, B2 + 1}, z}});
        entries.push_back(std::move(entry));
    }
    {
        IdentityEntry entry;
        entry.id = "C27";
        entry.free_params = {"A1", "A2", "A3", "B1", "B2", "z"};
        entry.lhs = {{A1, A2, A3}, {B1, B2}, z};
        entry.rhs.push_back(
            {(A1 - A2 - 1) / (A1 - 1), std::nullopt, {{A1 - 1, A2, A3}, {B1, B2}, z}});
        entry.rhs.push_back({A2 / (A1 - 1), std::nullopt, {{A1 - 1, A2 + 1, A3}, {B1, B2}, z}});
        entries.push_back(std::move(entry));
    }
    {
        IdentityEntry entry;
        entry.id = "C54";
        entry.free_params = {"A1", "A2", "A3", "B1", "B2", "z"};
        entry.lhs = {{A1, A2, A3}, {B1, B2}, z};
        entry.rhs.push_back({A2 * (B1 - A1) / ((A2 - A1) * B1), std::nullopt,
                             {{A1, A2 + 1, A3}, {B1 + 1, B2}, z}});
        entry.rhs.push_back({A1 * (B1 - A2) / ((A1 - A2) * B1), std::nullopt,
                             {{A1 + 1, A2, A3}, {B1 + 1, B2}, z}});
        entries.push_back(std::move(entry));
    }
    return entries;
}

struct InstantiatedSeries {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational argument;
};

InstantiatedSeries instantiate(const SeriesTpl& tpl, const Assignment& env) {
    InstantiatedSeries s;
    for (const auto& e : tpl.upper) s.upper.push_back(e.eval(env));
    for (const auto& e : tpl.lower) s.lower.push_back(e.eval(env));
    s.argument = tpl.argument.eval(env);
    return s;
}

Zeta2Number eval_series_exact(const InstantiatedSeries& s) {
    if (s.argument != 1)
        throw InadmissibleInstance("exact evaluation needs unit argument, got " +
                                   to_string(s.argument));
    try {
        if (s.upper.size() == 3 && s.lower.size() == 2)
            return eval_3f2_exact({{s.upper[0], s.upper[1], s.upper[2]}, {s.lower[0], s.lower[1]}});
        if (s.upper.size() == 2 && s.lower.size() == 1)
            return eval_2f1_exact(s.upper[0], s.upper[1], s.lower[0]);
    } catch (const UnmappableError& err) {
        throw InadmissibleInstance(err.what());
    }
    throw InadmissibleInstance("no exact route for this series shape");
}

PfqSpec to_pfq(const InstantiatedSeries& s) { return {s.upper, s.lower, s.argument}; }

void check_integer_restrictions(const IdentityEntry& entry, const Assignment& env) {
    for (const auto& name : entry.integer_params) {
        auto it = env.find(name);
        if (it == env.end()) throw DomainError("unbound parameter: " + name);
        if (!is_integer(it->second))
            throw RestrictionError("parameter " + name + " must be integral here, got " +
                                   to_string(it->second));
    }
}

std::string render_assignment(const Assignment& env) {
    if (env.empty()) return "-";
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : env) {
        if (!first) out << ",";
        out << name << "=" << to_string(value);
        first = false;
    }
    return out.str();
}

Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

const std::vector<IdentityEntry>& catalogue() {
    static const std::vector<IdentityEntry> entries = build_catalogue();
    return entries;
}

const IdentityEntry& find_identity(const std::string& id) {
    for (const auto& entry : catalogue())
        if (entry.id == id) return entry;
    throw DomainError("unknown identity: " + id);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::kPass:
            return "pass";
        case Verdict::kFail:
            return "fail";
        case Verdict::kExplained:
            return "explained";
    }
    return "?";
}

std::string render(const VerificationReport& report) {
    std::ostringstream out;
    out << "VERIFY " << report.id << " " << render_assignment(report.assignment) << " "
        << report.mode << " " << to_string(report.verdict) << " ";
    if (report.slack == 0)
        out << "0";
    else
        out << decimal_string(report.slack, 3, /*round_up=*/true);
    return out.str();
}

VerificationReport verify_exact(const std::string& id, const Assignment& assignment) {
    const IdentityEntry& entry = find_identity(id);
    check_integer_restrictions(entry, assignment);

    VerificationReport report;
    report.id = id;
    report.assignment = assignment;
    report.mode = "exact";
    report.slack = 0;

    Zeta2Number lhs = eval_series_exact(instantiate(entry.lhs, assignment));
    Zeta2Number total{Rational(0), Rational(0)};
    for (const auto& term : entry.rhs) {
        Rational coef = term.coef.eval(assignment);
        if (term.gamma_coef) coef *= term.gamma_coef->eval(assignment);
        if (!report.prefactor) report.prefactor = coef;
        total = total + coef * eval_series_exact(instantiate(term.series, assignment));
    }
    if (entry.remainder)
        total.r += entry.remainder->poly.eval(assignment) *
                   entry.remainder->gammas.eval(assignment);

    report.lhs_value = render(lhs);
    report.rhs_value = render(total);
    report.verdict = lhs == total ? Verdict::kPass : Verdict::kFail;
    return report;
}

VerificationReport verify_numeric(const std::string& id, const Assignment& assignment,
                                  unsigned precision_bits, unsigned long max_terms) {
    const IdentityEntry& entry = find_identity(id);
    check_integer_restrictions(entry, assignment);

    VerificationReport report;
    report.id = id;
    report.assignment = assignment;
    report.mode = "numeric";

    auto lhs = eval_pfq(to_pfq(instantiate(entry.lhs, assignment)), precision_bits, max_terms);
    Rational rhs_estimate(0), rhs_bound(0);
    for (const auto& term : entry.rhs) {
        Rational coef = term.coef.eval(assignment);
        if (term.gamma_coef) coef *= term.gamma_coef->eval(assignment);
        if (!report.prefactor) report.prefactor = coef;
        auto value =
            eval_pfq(to_pfq(instantiate(term.series, assignment)), precision_bits, max_terms);
        rhs_estimate += coef * value.value.estimate;
        rhs_bound += abs_rational(coef) * value.value.error_bound;
    }
    if (entry.remainder)
        rhs_estimate += entry.remainder->poly.eval(assignment) *
                        entry.remainder->gammas.eval(assignment);

    Rational difference = abs_rational(lhs.value.estimate - rhs_estimate);
    Rational combined = lhs.value.error_bound + rhs_bound;
    report.lhs_value = render(NumericValue{lhs.value.estimate, lhs.value.error_bound});
    report.rhs_value = render(NumericValue{rhs_estimate, rhs_bound});
    report.slack = difference;
    report.verdict = difference <= combined ? Verdict::kPass : Verdict::kFail;
    return report;
}

namespace {

struct SatoRelation {
    std::string id;
    IntegralParams lhs, rhs;
    Rational factor;
    Zeta2Number expected;
};

const std::vector<SatoRelation>& sato_relations() {
    static const std::vector<SatoRelation> relations = {
        {"sato1", {1, 1, 1, 1, 1}, {3, 1, 1, 2, 0}, 1, {Rational(5), Rational(-3)}},
        {"sato2", {3, 1, 2, 2, 1}, {4, 2, 2, 3, 0}, 1, {Rational(79, 4), Rational(-12)}},
        {"sato4", {3, 1, 2, 1, 1}, {3, 3, 1, 3, 0}, 1, {Rational(-59, 12), Rational(3)}},
        {"sato5", {3, 2, 2, 2, 1}, {5, 1, 3, 2, 1}, 1, {Rational(-148, 9), Rational(10)}},
        {"sato6", {3, 0, 3, 1, 1}, {3, 3, 1, 2, 1}, 9, {Rational(-59, 4), Rational(9)}},
        {"sato3", {3, 1, 3, 1, 0}, {3, 2, 1, 2, 0}, 1, {Rational(-29, 18), Rational(1)}},
    };
    return relations;
}

}  // namespace

std::vector<VerificationReport> sato_suite() {
    std::vector<VerificationReport> reports;
    for (const auto& relation : sato_relations()) {
        VerificationReport report;
        report.id = relation.id;
        report.mode = "exact";
        report.slack = 0;
        report.prefactor = relation.factor;
        Zeta2Number lhs = eval_integral_exact(relation.lhs);
        Zeta2Number rhs = eval_integral_exact(relation.rhs);
        report.lhs_value = render(lhs);
        report.rhs_value = render(relation.factor * rhs);
        bool ok = lhs == relation.expected && lhs == relation.factor * rhs;
        report.verdict = ok ? Verdict::kPass : Verdict::kFail;
        reports.push_back(std::move(report));
    }
    return reports;
}

CounterexamplePair family_A(long alpha) {
    if (alpha < 1) throw DomainError("family A needs alpha >= 1");
    return {{2 * alpha - 1, 2 * alpha - 1, alpha, 2 * alpha - 1, alpha},
            {2 * alpha + 1, 2 * alpha - 1, alpha, 2 * alpha, alpha - 1},
            Rational(1),
            "A"};
}

CounterexamplePair family_B(long alpha) {
    if (alpha < 2) throw DomainError("family B needs alpha >= 2");
    return {{alpha * alpha - 1, alpha - 1, alpha * alpha - alpha + 1, alpha - 1, 0},
            {alpha * alpha - 1, alpha, alpha * alpha - alpha - 1, alpha, 0},
            Rational(alpha - 1),
            "B"};
}

VerificationReport verify_family(const CounterexamplePair& pair) {
    VerificationReport report;
    report.id = "family-" + pair.family;
    report.mode = "exact";
    report.slack = 0;
    report.prefactor = pair.factor;

    Zeta2Number lhs = eval_integral_exact(pair.lhs);
    Zeta2Number rhs = eval_integral_exact(pair.rhs);
    report.lhs_value = render(lhs);
    report.rhs_value = render(pair.factor * rhs);

    if (lhs != pair.factor * rhs) {
        report.verdict = Verdict::kFail;
        return report;
    }
    bool explained = t_related(pair.lhs, pair.rhs) || phi_related(pair.lhs, pair.rhs);
    report.verdict = explained ? Verdict::kExplained : Verdict::kPass;
    return report;
}

}  // namespace hyperlab
