#pragma once

#include <span>
#include <vector>

#include "resonance/types.hpp"

namespace resonance {

/// Equality pattern of an ordered weight quadruple, cases 1-4.
enum class Degeneracy {
    none = 0,        // g1l < g1r < g2r < g2l
    left_right = 1,  // g1l = g1r < g2r = g2l
    right = 2,       // g1l < g1r = g2r < g2l
    total = 3,       // all four equal
};

inline int degeneracy_case(Degeneracy d) { return static_cast<int>(d) + 1; }

/// Solution of g1l + g2l = g1r + g2r with the canonical ordering
/// g1l <= g1r <= g2r <= g2l.
struct WeightQuad {
    i64 g1l = 0;
    i64 g2l = 0;
    i64 g1r = 0;
    i64 g2r = 0;
    i64 sum = 0;
    Degeneracy degeneracy = Degeneracy::total;
    friend bool operator==(const WeightQuad&, const WeightQuad&) = default;
};

/// Solution of 1/g1 + 1/g2 = 1/g3 in positive integers, g1 <= g2.
struct WeightTriad {
    i64 g1 = 0;
    i64 g2 = 0;
    i64 g3 = 0;
    friend bool operator==(const WeightTriad&, const WeightTriad&) = default;
};

Degeneracy classify_degeneracy(i64 g1l, i64 g2l, i64 g1r, i64 g2r);

/// All weight quads with every entry <= mul, each exactly once, ordered by
/// (sum, g1l, g1r). The sum ranges over [2, 2*mul].
std::vector<WeightQuad> solve_additive_weights(i64 mul);

/// All harmonic triads with entries <= mul, ordered by (g1, g2). Divisibility
/// tests only; g3 = g1*g2 / (g1+g2) whenever that quotient is integral.
std::vector<WeightTriad> solve_harmonic_weights(i64 mul);

/// Restriction of a precomputed triad list (built for the maximal
/// multiplicity) to entries <= mul; equals solve_harmonic_weights(mul).
std::vector<WeightTriad> subset_for_class(std::span<const WeightTriad> all,
                                          i64 mul);

}  // namespace resonance
