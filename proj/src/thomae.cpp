#include "hyperlab/thomae.hpp"

#include <algorithm>

#include "hyperlab/integral.hpp"

namespace hyperlab {

XParams x_of_f32(const F32Params& f) {
    const Rational &a = f.upper[0], &b = f.upper[1], &c = f.upper[2];
    const Rational &d = f.lower[0], &e = f.lower[1];
    Rational half(1, 2);
    return {{(d + e - b - c) * half, (d + e - c - a) * half, (d + e - a - b) * half, d * half,
             e * half}};
}

XParams x_of_integral(const IntegralParams& p) {
    Rational half(1, 2);
    return {{Rational(p.l + p.h + 2) * half, Rational(p.k + p.l + 2) * half,
             Rational(p.i + p.j + 2) * half, Rational(p.h + p.i + 2) * half,
             Rational(p.j + p.k + 2) * half}};
}

std::vector<OrbitMember> orbit(const XParams& x, bool dedup) {
    std::array<int, 5> idx = {0, 1, 2, 3, 4};
    std::vector<F32Params> arrays;
    arrays.reserve(120);
    do {
        const Rational &x1 = x.x[idx[0]], &x2 = x.x[idx[1]], &x3 = x.x[idx[2]];
        const Rational &x4 = x.x[idx[3]], &x5 = x.x[idx[4]];
        Rational s = x1 + x2 + x3 - x4 - x5;
        arrays.push_back({{2 * x1 - s, 2 * x2 - s, 2 * x3 - s}, {2 * x4, 2 * x5}});
    } while (std::next_permutation(idx.begin(), idx.end()));

    if (dedup)
        for (auto& f : arrays) f = f.canonical();
    std::sort(arrays.begin(), arrays.end());
    arrays.erase(std::unique(arrays.begin(), arrays.end()), arrays.end());

    std::vector<OrbitMember> members;
    members.reserve(arrays.size());
    for (auto& f : arrays) {
        bool evaluable = try_map_to_integral(f).has_value();
        members.push_back({std::move(f), evaluable});
    }
    return members;
}

namespace {

using Tuple = std::array<long, 5>;

Tuple rotate(const Tuple& t) { return {t[1], t[2], t[3], t[4], t[0]}; }

Tuple swap_hk_ij(const Tuple& t) { return {t[3], t[2], t[1], t[0], t[4]}; }

}  // namespace

bool t_related(const IntegralParams& p, const IntegralParams& q) {
    Tuple target = q.as_array();
    Tuple current = p.as_array();
    for (int r = 0; r < 5; ++r) {
        if (current == target || swap_hk_ij(current) == target) return true;
        current = rotate(current);
    }
    return false;
}

bool phi_related(const IntegralParams& p, const IntegralParams& q) {
    return p.pair_sum_multiset() == q.pair_sum_multiset();
}

std::pair<F32Params, Rational> thomae_step(const F32Params& f) {
    const Rational &a = f.upper[0], &b = f.upper[1], &c = f.upper[2];
    const Rational &d = f.lower[0], &e = f.lower[1];
    if (!is_positive_integer(a))
        throw RestrictionError(
            "thomae_step needs a positive integer first upper parameter, got " + to_string(a));
    long n = to_long(a);
    // Gamma(e)Gamma(d+e-a-b-c) / (Gamma(e-a)Gamma(d+e-b-c))
    //   = (e-a)_a / (d+e-a-b-c)_a for integer a.
    Rational numerator = pochhammer(e - a, n);
    Rational denominator = pochhammer(d + e - a - b - c, n);
    if (numerator == 0 || denominator == 0)
        throw PoleError("thomae_step prefactor degenerates at " + to_string(f));
    F32Params image = {{a, d - b, d - c}, {d, d + e - b - c}};
    return {image, numerator / denominator};
}

namespace {

Rational gamma_at_positive_integer(const Rational& v, const char* what) {
    if (!is_positive_integer(v))
        throw RestrictionError(std::string(what) +
                               " must be a positive integer for the exact gamma ratio, got " +
                               to_string(v));
    return Rational(factorial(to_long(v) - 1));
}

Rational gamma_normalizer(const F32Params& f) {
    Rational s = x_of_f32(f).s();
    return gamma_at_positive_integer(s, "s") * gamma_at_positive_integer(f.lower[0], "d") *
           gamma_at_positive_integer(f.lower[1], "e");
}

}  // namespace

Rational orbit_ratio(const F32Params& f, const F32Params& g) {
    auto members = orbit(x_of_f32(f), /*dedup=*/true);
    F32Params canon_g = g.canonical();
    bool found = std::any_of(members.begin(), members.end(),
                             [&](const OrbitMember& m) { return m.params == canon_g; });
    if (!found)
        throw NotInOrbitError(to_string(g) + " is not in the orbit of " + to_string(f));
    return gamma_normalizer(f) / gamma_normalizer(g);
}

}  // namespace hyperlab
