#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hyperlab/integral.hpp"
#include "hyperlab/thomae.hpp"

using namespace hyperlab;

namespace {

F32Params f32(long a, long b, long c, long d, long e) {
    return {{Rational(a), Rational(b), Rational(c)}, {Rational(d), Rational(e)}};
}

std::set<F32Params> orbit_set(const XParams& x) {
    std::set<F32Params> out;
    for (const auto& member : orbit(x, /*dedup=*/true)) out.insert(member.params);
    return out;
}

std::set<F32Params> canon_set(std::initializer_list<F32Params> arrays) {
    std::set<F32Params> out;
    for (const auto& f : arrays) out.insert(f.canonical());
    return out;
}

}  // namespace

TEST_CASE("x-coordinates of a series") {
    XParams x = x_of_f32(f32(2, 2, 2, 4, 4));
    CHECK(x.x == std::array<Rational, 5>{Rational(2), Rational(2), Rational(2), Rational(2),
                                         Rational(2)});
    CHECK(x.s() == 2);

    XParams y = x_of_f32(f32(1, 1, 1, 2, 2));
    CHECK(y.x == std::array<Rational, 5>{Rational(1), Rational(1), Rational(1), Rational(1),
                                         Rational(1)});
    CHECK(y.s() == 1);

    // s equals the parameter excess d+e-a-b-c
    XParams g = x_of_f32(f32(4, 2, 5, 6, 6));
    CHECK(g.s() == Rational(1));
}

TEST_CASE("x-coordinates of an integral") {
    XParams x = x_of_integral({1, 1, 1, 1, 1});
    for (const auto& v : x.x) CHECK(v == 2);
    XParams y = x_of_integral({3, 1, 1, 2, 0});
    CHECK(y.x == std::array<Rational, 5>{Rational(5, 2), Rational(2), Rational(2), Rational(3),
                                         Rational(5, 2)});
    XParams z = x_of_integral({0, 0, 0, 0, 0});
    for (const auto& v : z.x) CHECK(v == 1);
}

TEST_CASE("round trip: identity permutation reproduces the series") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> numerators(1, 24);
    for (int t = 0; t < 50; ++t) {
        F32Params f{{Rational(numerators(rng), 2), Rational(numerators(rng), 3),
                     Rational(numerators(rng))},
                    {Rational(numerators(rng), 2), Rational(numerators(rng))}};
        XParams x = x_of_f32(f);
        Rational s = x.s();
        F32Params back{{2 * x.x[0] - s, 2 * x.x[1] - s, 2 * x.x[2] - s},
                       {2 * x.x[3], 2 * x.x[4]}};
        REQUIRE(back == f);
    }
    // and the integral-side identity permutation gives the dictionary series
    IntegralParams p{3, 1, 3, 1, 0};
    XParams x = x_of_integral(p);
    Rational s = x.s();
    F32Params back{{2 * x.x[0] - s, 2 * x.x[1] - s, 2 * x.x[2] - s}, {2 * x.x[3], 2 * x.x[4]}};
    CHECK(back == f32_of_integral(p));
}

TEST_CASE("golden orbits modulo trivial symmetries") {
    CHECK(orbit_set(x_of_integral({1, 1, 1, 1, 1})) == canon_set({f32(2, 2, 2, 4, 4)}));

    CHECK(orbit_set(x_of_integral({3, 1, 1, 2, 0})) ==
          canon_set({f32(4, 3, 3, 6, 5), f32(2, 1, 3, 4, 5), f32(3, 2, 3, 6, 4),
                     f32(1, 1, 2, 4, 4), f32(2, 4, 2, 5, 5)}));

    CHECK(orbit_set(x_of_integral({3, 1, 3, 1, 0})) ==
          canon_set({f32(4, 2, 5, 6, 6), f32(1, 2, 2, 6, 3), f32(1, 4, 4, 5, 6),
                     f32(1, 1, 1, 3, 5)}));

    CHECK(orbit_set(x_of_integral({3, 2, 1, 2, 0})) ==
          canon_set({f32(4, 3, 4, 7, 5), f32(2, 1, 4, 5, 5), f32(1, 1, 3, 4, 5),
                     f32(3, 3, 3, 4, 7)}));
}

TEST_CASE("orbit sizes: 120 raw arrays, 10 representatives for generic x") {
    XParams generic{{Rational(7), Rational(11), Rational(13), Rational(17), Rational(19)}};
    CHECK(orbit(generic, false).size() == 120);
    CHECK(orbit(generic, true).size() == 10);
}

TEST_CASE("orbit flags non-evaluable members") {
    // all four golden arrays above are evaluable
    for (const auto& member : orbit(x_of_integral({3, 1, 3, 1, 0}), true))
        CHECK(member.evaluable);
    // a generic rational x-tuple yields non-integral parameters
    XParams generic{{Rational(1, 2), Rational(11), Rational(13), Rational(17), Rational(19)}};
    bool some_non_evaluable = false;
    for (const auto& member : orbit(generic, true))
        if (!member.evaluable) some_non_evaluable = true;
    CHECK(some_non_evaluable);
}

TEST_CASE("dihedral relatedness") {
    IntegralParams p{3, 1, 1, 2, 0};
    CHECK(t_related(p, p));
    CHECK(t_related(p, {2, 1, 1, 3, 0}));       // swap generator
    CHECK(t_related(p, {1, 1, 2, 0, 3}));       // a rotation image
    CHECK_FALSE(t_related({1, 1, 1, 1, 1}, p));
    // T-relatedness implies pair-sum relatedness on a sweep
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> small(0, 4);
    for (int t = 0; t < 200; ++t) {
        IntegralParams a{small(rng), small(rng), small(rng), small(rng), small(rng)};
        IntegralParams b{small(rng), small(rng), small(rng), small(rng), small(rng)};
        if (t_related(a, b)) REQUIRE(phi_related(a, b));
    }
}

TEST_CASE("pair-sum relatedness") {
    CHECK(phi_related({1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}));
    CHECK_FALSE(phi_related({1, 1, 1, 1, 1}, {3, 1, 1, 2, 0}));
    CHECK(phi_related({3, 1, 1, 2, 0}, {2, 0, 2, 1, 2}));
}

TEST_CASE("one transformation step: images and prefactors") {
    auto [image1, factor1] = thomae_step(f32(1, 1, 1, 2, 2));
    CHECK(image1 == f32(1, 1, 1, 2, 2));
    CHECK(factor1 == 1);

    auto [image2, factor2] = thomae_step(f32(2, 1, 3, 6, 5));
    CHECK(image2 == f32(2, 5, 3, 6, 7));
    CHECK(factor2 == Rational(2, 5));

    auto [image3, factor3] = thomae_step(f32(2, 2, 2, 4, 4));
    CHECK(image3 == f32(2, 2, 2, 4, 4));
    CHECK(factor3 == 1);

    CHECK_THROWS_AS(thomae_step({{Rational(1, 2), Rational(1), Rational(1)},
                                 {Rational(3), Rational(3)}}),
                    RestrictionError);
    // d+e-a-b-c = 0 makes the prefactor degenerate
    CHECK_THROWS_AS(thomae_step(f32(2, 1, 1, 2, 2)), PoleError);
}

TEST_CASE("the step preserves exact values") {
    std::mt19937_64 rng(2718);
    std::uniform_int_distribution<long> small(1, 6);
    int checked = 0;
    while (checked < 50) {
        F32Params f = f32(small(rng), small(rng), small(rng), small(rng) + 6, small(rng) + 6);
        if (!try_map_to_integral(f)) continue;
        F32Params image;
        Rational factor;
        try {
            std::tie(image, factor) = thomae_step(f);
        } catch (const PoleError&) {
            continue;
        }
        if (!try_map_to_integral(image)) continue;
        REQUIRE(eval_3f2_exact(f) == factor * eval_3f2_exact(image));
        ++checked;
    }
}

TEST_CASE("orbit ratios from the shared invariant") {
    CHECK(orbit_ratio(f32(4, 3, 3, 6, 5), f32(4, 3, 3, 6, 5)) == 1);
    CHECK(orbit_ratio(f32(4, 3, 3, 6, 5), f32(1, 1, 2, 4, 4)) == Rational(40, 3));
    CHECK(orbit_ratio(f32(4, 2, 5, 6, 6), f32(1, 2, 2, 6, 3)) == 10);
    CHECK_THROWS_AS(orbit_ratio(f32(4, 3, 3, 6, 5), f32(2, 2, 2, 4, 4)), NotInOrbitError);
    // non-integral gamma arguments are out of the exact contract
    F32Params half_lower{{Rational(1), Rational(1), Rational(1)},
                         {Rational(5, 2), Rational(2)}};
    CHECK_THROWS_AS(orbit_ratio(half_lower, half_lower), RestrictionError);
}

TEST_CASE("raw orbit keeps term-wise distinct arrays only") {
    // 30 distinct raw arrays collapse to the five canonical representatives
    auto raw = orbit(x_of_integral({3, 1, 1, 2, 0}), false);
    CHECK(raw.size() == 30);
    std::set<F32Params> canon;
    for (const auto& member : raw) canon.insert(member.params.canonical());
    CHECK(canon.size() == 5);
}

TEST_CASE("orbit ratios agree with exact evaluation") {
    CHECK(eval_3f2_exact(f32(4, 3, 3, 6, 5)) ==
          Rational(40, 3) * eval_3f2_exact(f32(1, 1, 2, 4, 4)));
    CHECK(eval_3f2_exact(f32(4, 2, 5, 6, 6)) == Rational(10) * eval_3f2_exact(f32(1, 2, 2, 6, 3)));
}

TEST_CASE("orbit contents behind the family escape argument") {
    // For [alpha+1, alpha+1, 2alpha; 3alpha+1, 3alpha+1] the orbit holds just
    // two representatives; for [alpha, alpha, 2alpha; 3alpha+1, 3alpha+1]
    // five. The two sets share no member, so no symmetry links the sides.
    for (long alpha = 2; alpha <= 4; ++alpha) {
        F32Params lhs = f32(alpha + 1, alpha + 1, 2 * alpha, 3 * alpha + 1, 3 * alpha + 1);
        F32Params rhs = f32(alpha, alpha, 2 * alpha, 3 * alpha + 1, 3 * alpha + 1);
        auto lhs_orbit = orbit_set(x_of_f32(lhs));
        auto rhs_orbit = orbit_set(x_of_f32(rhs));
        REQUIRE(lhs_orbit.size() == 2);
        REQUIRE(lhs_orbit ==
                canon_set({lhs, f32(2 * alpha, 2 * alpha, 2 * alpha, 3 * alpha + 1, 4 * alpha)}));
        REQUIRE(rhs_orbit.size() == 5);
        REQUIRE(rhs_orbit ==
                canon_set({rhs,
                           f32(2 * alpha + 2, 2 * alpha + 1, 2 * alpha + 1, 4 * alpha + 2,
                               3 * alpha + 2),
                           f32(2 * alpha + 1, alpha + 1, alpha, 3 * alpha + 2, 3 * alpha + 1),
                           f32(2 * alpha + 1, 2 * alpha + 1, 2 * alpha, 4 * alpha + 2,
                               3 * alpha + 1),
                           f32(2 * alpha + 2, alpha + 1, alpha + 1, 3 * alpha + 2,
                               3 * alpha + 2)}));
        for (const auto& member : lhs_orbit) REQUIRE(rhs_orbit.count(member) == 0);
    }
}

TEST_CASE("the shared invariant is constant on evaluable orbit members") {
    for (IntegralParams p : {IntegralParams{3, 1, 1, 2, 0}, IntegralParams{3, 1, 3, 1, 0},
                             IntegralParams{2, 1, 2, 1, 2}}) {
        REQUIRE(is_irrational(p));  // the ten conditions hold
        Zeta2Number reference = b_value(p);
        for (const auto& member : orbit(x_of_integral(p), true)) {
            if (!member.evaluable) continue;
            const F32Params& f = member.params;
            Rational normalizer =
                Rational(factorial(to_long(x_of_f32(f).s()) - 1)) *
                Rational(factorial(to_long(f.lower[0]) - 1)) *
                Rational(factorial(to_long(f.lower[1]) - 1));
            REQUIRE(eval_3f2_exact(f) / normalizer == reference);
        }
    }
}
