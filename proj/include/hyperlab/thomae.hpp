#pragma once

#include <utility>
#include <vector>

#include "hyperlab/types.hpp"

namespace hyperlab {

// Five-coordinate form of a series: 2x1 = d+e-b-c, 2x2 = d+e-c-a,
// 2x3 = d+e-a-b, 2x4 = d, 2x5 = e.
XParams x_of_f32(const F32Params& f);

// Five-coordinate form of an integral: 2x1 = l+h+2, 2x2 = k+l+2,
// 2x3 = i+j+2, 2x4 = h+i+2, 2x5 = j+k+2.
XParams x_of_integral(const IntegralParams& p);

struct OrbitMember {
    F32Params params;
    // Admissible for exact evaluation (positive-integer parameters with a
    // convergent assignment). Divergent or invalid members stay in the
    // listing but are flagged.
    bool evaluable = false;

    bool operator==(const OrbitMember&) const = default;
    auto operator<=>(const OrbitMember&) const = default;
};

// For each of the 120 permutations rho of (x1..x5) emits
// [2x_rho(1)-s_rho, 2x_rho(2)-s_rho, 2x_rho(3)-s_rho; 2x_rho(4), 2x_rho(5)].
// dedup=false keeps the term-wise distinct arrays; dedup=true canonicalizes
// by trivial symmetries (sorted uppers/lowers) and keeps distinct
// representatives. Output sorted lexicographically.
std::vector<OrbitMember> orbit(const XParams& x, bool dedup);

// True iff q is an image of p under the order-10 dihedral group generated
// by (h k)(i j) and the 5-cycle (h i j k l).
bool t_related(const IntegralParams& p, const IntegralParams& q);

// True iff the pair-sum multisets {h+i, i+j, j+k, k+l, l+h} coincide;
// the order-120 group acts as S5 on them.
bool phi_related(const IntegralParams& p, const IntegralParams& q);

// One application of the fundamental two-term transformation:
// [a,b,c;d,e] -> [a, d-b, d-c; d, d+e-b-c] with exact rational prefactor
// (e-a)_a / (d+e-a-b-c)_a. RestrictionError unless a is a positive integer
// (so the gamma prefactor reduces); PoleError on prefactor poles.
std::pair<F32Params, Rational> thomae_step(const F32Params& f);

// Exact value ratio F(f)/F(g) for g in the orbit of f, via the shared
// symmetric invariant: Gamma(s_f)Gamma(d_f)Gamma(e_f) /
// (Gamma(s_g)Gamma(d_g)Gamma(e_g)). Requires s, d, e of both to be
// positive integers. NotInOrbitError when g is not in f's orbit.
Rational orbit_ratio(const F32Params& f, const F32Params& g);

}  // namespace hyperlab
