#pragma once

// Deterministic admissible-instance generators for the identity catalogue.
// Generators filter on admissibility only (instantiation succeeds, series
// are evaluable, margins are healthy); they never look at verdicts, so a
// failing identity cannot be masked here.

#include <functional>
#include <string>
#include <vector>

#include "hyperlab/identities.hpp"

namespace hyperlab::testing {

struct InstancePlan {
    bool exact = true;
    std::vector<Assignment> instances;
};

namespace detail {

inline bool exact_admissible(const IdentityEntry& entry, const Assignment& env) {
    auto series_ok = [&](const SeriesTpl& tpl) {
        if (tpl.argument.eval(env) != 1) return false;
        std::vector<Rational> upper, lower;
        for (const auto& e : tpl.upper) upper.push_back(e.eval(env));
        for (const auto& e : tpl.lower) lower.push_back(e.eval(env));
        if (upper.size() == 3 && lower.size() == 2)
            return try_map_to_integral({{upper[0], upper[1], upper[2]}, {lower[0], lower[1]}})
                .has_value();
        if (upper.size() == 2 && lower.size() == 1) {
            // padding route: positive integers with enough excess
            for (const auto& u : upper)
                if (!is_positive_integer(u)) return false;
            return try_map_to_integral(
                       {{upper[0], upper[1], upper[1] + 1}, {lower[0], upper[1] + 1}})
                .has_value();
        }
        return false;
    };
    try {
        if (!series_ok(entry.lhs)) return false;
        for (const auto& term : entry.rhs) {
            term.coef.eval(env);
            if (term.gamma_coef) term.gamma_coef->eval(env);
            if (!series_ok(term.series)) return false;
        }
        if (entry.remainder) {
            entry.remainder->poly.eval(env);
            entry.remainder->gammas.eval(env);
        }
        for (const auto& name : entry.integer_params)
            if (!is_integer(env.at(name))) return false;
    } catch (const Error&) {
        return false;
    }
    return true;
}

inline bool numeric_admissible(const IdentityEntry& entry, const Assignment& env,
                               const Rational& min_margin) {
    auto series_ok = [&](const SeriesTpl& tpl) {
        Rational argument = tpl.argument.eval(env);
        if (argument > 1 || argument < -1) return false;
        Rational excess(0);
        for (const auto& e : tpl.lower) {
            Rational v = e.eval(env);
            if (is_integer(v) && v <= 0) return false;
            excess += v;
        }
        for (const auto& e : tpl.upper) excess -= e.eval(env);
        if (argument == 1 || argument == -1) return excess >= min_margin;
        return true;
    };
    try {
        if (!series_ok(entry.lhs)) return false;
        for (const auto& term : entry.rhs) {
            term.coef.eval(env);
            if (term.gamma_coef) term.gamma_coef->eval(env);
            if (!series_ok(term.series)) return false;
        }
        if (entry.remainder) {
            entry.remainder->poly.eval(env);
            entry.remainder->gammas.eval(env);
        }
        for (const auto& name : entry.integer_params)
            if (!is_integer(env.at(name))) return false;
    } catch (const Error&) {
        return false;
    }
    return true;
}

// Enumerates candidate assignments from per-symbol value lists in odometer
// order, keeping admissible ones until `want` are found.
inline std::vector<Assignment> sweep(const std::vector<std::string>& names,
                                     const std::vector<std::vector<Rational>>& values,
                                     const std::function<bool(const Assignment&)>& keep,
                                     std::size_t want) {
    std::vector<Assignment> out;
    std::vector<std::size_t> odometer(names.size(), 0);
    while (true) {
        Assignment env;
        for (std::size_t i = 0; i < names.size(); ++i) env[names[i]] = values[i][odometer[i]];
        if (keep(env)) {
            out.push_back(env);
            if (out.size() >= want) return out;
        }
        std::size_t pos = 0;
        while (pos < odometer.size()) {
            if (++odometer[pos] < values[pos].size()) break;
            odometer[pos] = 0;
            ++pos;
        }
        if (pos == odometer.size()) return out;
    }
}

inline std::vector<Rational> range_values(long lo, long hi) {
    std::vector<Rational> out;
    for (long v = lo; v <= hi; ++v) out.push_back(Rational(v));
    return out;
}

inline std::vector<Rational> quarter_values(long lo4, long hi4, long step = 1) {
    std::vector<Rational> out;
    for (long v = lo4; v <= hi4; v += step) out.push_back(Rational(v, 4));
    return out;
}

}  // namespace detail

// Returns at least `want` admissible assignments for the identity (more
// are never returned), plus whether they are exact-mode instances.
inline InstancePlan plan_instances(const std::string& id, std::size_t want) {
    using detail::exact_admissible;
    using detail::numeric_admissible;
    using detail::quarter_values;
    using detail::range_values;
    const IdentityEntry& entry = find_identity(id);

    InstancePlan plan;
    auto exact_keep = [&](const Assignment& env) { return exact_admissible(entry, env); };

    if (id == "couplage" || id == "id1" || id == "id3") {
        plan.instances =
            detail::sweep({"alpha"}, {range_values(1, 40)}, exact_keep, want);
    } else if (id == "id2") {
        plan.instances =
            detail::sweep({"alpha"}, {range_values(2, 41)}, exact_keep, want);
    } else if (id == "b3") {
        plan.instances =
            detail::sweep({"alpha"}, {range_values(2, 24)}, exact_keep, want);
    } else if (id == "exotique") {
        plan.instances = detail::sweep({"alpha", "beta"},
                                       {range_values(1, 8), range_values(1, 8)}, exact_keep,
                                       want);
    } else if (id == "exotique2") {
        plan.instances = detail::sweep(
            {"alpha", "beta", "gamma"},
            {range_values(1, 5), range_values(1, 5), range_values(1, 12)}, exact_keep, want);
    } else if (id == "b12") {
        plan.instances = detail::sweep(
            {"alpha", "beta", "gamma"},
            {range_values(1, 8), range_values(2, 5), range_values(1, 8)}, exact_keep, want);
    } else if (id == "b5" || id == "b9" || id == "b11" || id == "b13") {
        plan.instances = detail::sweep(
            {"a", "b", "c", "d"},
            {range_values(1, 9), range_values(2, 5), range_values(1, 5), range_values(2, 14)},
            exact_keep, want);
    } else if (id == "b6") {
        plan.instances = detail::sweep(
            {"beta", "gamma", "delta"},
            {range_values(1, 8), range_values(1, 8), range_values(1, 4)}, exact_keep, want);
    } else if (id == "b10") {
        plan.instances = detail::sweep(
            {"alpha", "beta", "gamma"},
            {range_values(1, 8), range_values(1, 8), range_values(1, 8)}, exact_keep, want);
    } else if (id == "b14") {
        plan.instances = detail::sweep(
            {"a1", "a2", "c1", "c2"},
            {range_values(1, 4), range_values(1, 4), range_values(1, 4), range_values(1, 4)},
            exact_keep, want);
    } else if (id == "b15" || id == "b16") {
        plan.instances = detail::sweep(
            {"b1", "b2", "c1", "c2"},
            {range_values(1, 3), range_values(2, 8), range_values(1, 3), range_values(2, 8)},
            exact_keep, want);
    } else if (id == "thomae1") {
        plan.instances = detail::sweep(
            {"a", "b", "c", "d", "e"},
            {range_values(1, 3), range_values(1, 3), range_values(1, 3), range_values(4, 9),
             range_values(4, 9)},
            exact_keep, want);
    } else if (id == "gauss") {
        plan.instances = detail::sweep(
            {"a", "b", "c"},
            {range_values(1, 4), range_values(1, 5), range_values(3, 14)}, exact_keep, want);
    } else if (id == "T3240") {
        plan.exact = false;
        auto keep = [&](const Assignment& env) {
            return numeric_admissible(entry, env, Rational(5));
        };
        plan.instances = detail::sweep(
            {"a", "b", "c", "d"},
            {quarter_values(24, 40, 2), range_values(1, 3), quarter_values(6, 12, 2),
             quarter_values(2, 6, 2)},
            keep, want);
    } else if (id == "C55" || id == "C15" || id == "C27" || id == "C54") {
        plan.exact = false;
        auto keep = [&](const Assignment& env) {
            return numeric_admissible(entry, env, Rational(8));
        };
        plan.instances = detail::sweep(
            {"A1", "A2", "A3", "B1", "B2", "z"},
            {quarter_values(9, 17, 4), quarter_values(6, 14, 4), quarter_values(7, 11, 4),
             quarter_values(40, 56, 8), quarter_values(42, 58, 8),
             {Rational(1), Rational(1, 2)}},
            keep, want);
    } else {
        throw DomainError("no instance plan for identity: " + id);
    }
    return plan;
}

}  // namespace hyperlab::testing
