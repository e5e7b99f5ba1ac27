#pragma once

#include <vector>

#include "resonance/canonical.hpp"
#include "resonance/types.hpp"

namespace resonance {

/// Unique writing t = gamma^c * q with q free of c-th prime powers; found by
/// direct trial division, deliberately sharing nothing with the class sieve.
struct RadicalClassKey {
    i64 gamma = 0;
    i64 q = 0;
    friend bool operator==(const RadicalClassKey&, const RadicalClassKey&) = default;
};

RadicalClassKey radical_key(i64 t, int c_abs);

constexpr i64 kGravityOracleCeiling = 40;
constexpr i64 kPlanetaryOracleCeiling = 60;

struct OracleOptions {
    i64 ceiling = 0;  // 0: the per-kind default above
    bool include_zero_sum = false;
};

/// Complete canonical four-wave solution set of [-D, D]^2 by quartic
/// enumeration: every vector pair is bucketed by momentum sum, class index
/// and weight sum, and buckets are matched pairwise. Trusted baseline; it is
/// meant to be obviously correct, not fast, and refuses large domains.
std::vector<ResonanceQuad> brute_force_gravity(i64 D,
                                               const OracleOptions& opts = {});

/// Complete canonical three-wave solution set by cubic enumeration with a
/// per-class index on the m coordinate.
std::vector<ResonanceTriad> brute_force_planetary(
    i64 D, const OracleOptions& opts = {});

}  // namespace resonance
