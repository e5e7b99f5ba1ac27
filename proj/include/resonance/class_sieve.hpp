#pragma once

#include <vector>

#include "resonance/two_squares.hpp"
#include "resonance/types.hpp"

namespace resonance {

/// Admissibility of q as a class index, decided by trial division alone.
/// gravity4: q fourth-power-free, and any prime p = 3 (mod 4) divides q
/// exactly twice. planetary3: q square-free with no prime factor p = 3 (mod 4).
bool is_class_index(i64 q, WaveKind kind);

/// Two-pass bit-array sieve over 1..2D^2 yielding every class index in
/// ascending order. Allocation failures propagate; the list is never
/// silently truncated.
std::vector<i64> sieve_classes(const RunConfig& cfg, const SpfTable& spf);

/// Largest weight g with g^|c| * q <= 2D^2, found by integer binary search.
i64 multiplicity(i64 q, const RunConfig& cfg);

/// Everything the per-class search needs: the class index, its multiplicity,
/// and the two-square decompositions of every per-weight norm g^|c| * q.
struct ClassRecord {
    i64 q = 0;
    i64 mul = 0;
    // decs[g-1]: representations of g^|c| * q, each with x >= y >= 0.
    std::vector<std::vector<TwoSquareDecomposition>> decs;
    // Ordered in-domain decomposition count of q itself (weight 1): pairs
    // (x, y) and (y, x) counted separately, both coordinates <= D. Drives the
    // multiplicity-1 skip rule and the decomposition histogram.
    i64 dec_count_in_domain = 0;
};

ClassRecord make_class_record(i64 q, const RunConfig& cfg, const SpfTable& spf);

}  // namespace resonance
