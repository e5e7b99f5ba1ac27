#pragma once

#include <array>
#include <tuple>

#include "resonance/types.hpp"
#include "resonance/weight_solver.hpp"

namespace resonance {

/// Fully resolved four-wave tuple; every invariant holds by construction:
/// norm^2(k[i]) = g_i^4 * q for the matching weight, both momentum sums agree,
/// the four vectors are pairwise distinct, and the tuple is canonical.
struct ResonanceQuad {
    i64 q = 0;
    WeightQuad weights;
    std::array<WaveVector, 4> k{};  // k1L, k2L, k1R, k2R

    friend bool operator==(const ResonanceQuad&, const ResonanceQuad&) = default;
};

/// Three-wave tuple: norm^2(k[i]) = g_i^2 * q, m1 + m2 = m3, vectors
/// pairwise distinct, (k1, k2) canonical.
struct ResonanceTriad {
    i64 q = 0;
    WeightTriad weights;
    std::array<WaveVector, 3> k{};

    friend bool operator==(const ResonanceTriad&, const ResonanceTriad&) = default;
};

struct WeightedVector {
    i64 gamma = 0;
    WaveVector v;
};

/// Canonical assembly shared by the pipeline and the brute-force oracle so
/// their outputs are directly comparable.
///
/// Inside a side the smaller weight comes first (ties broken by vector
/// order); the side whose leading weight is smaller is stored left, and for
/// weight-symmetric sides the vector-wise smaller side wins. This realizes
/// the g1l <= g1r <= g2r <= g2l pattern on the stored weights.
ResonanceQuad make_canonical_quad(i64 q, WeightedVector a1, WeightedVector a2,
                                  WeightedVector b1, WeightedVector b2);

ResonanceTriad make_canonical_triad(i64 q, WeightedVector a1, WeightedVector a2,
                                    WeightedVector c);

inline auto quad_key(const ResonanceQuad& r) {
    return std::tuple(r.q, r.weights.sum, r.weights.g1l, r.weights.g1r,
                      r.k[0].m, r.k[0].n, r.k[1].m, r.k[1].n, r.k[2].m,
                      r.k[2].n, r.k[3].m, r.k[3].n);
}

inline auto triad_key(const ResonanceTriad& r) {
    return std::tuple(r.q, r.weights.g1, r.weights.g2, r.k[0].m, r.k[0].n,
                      r.k[1].m, r.k[1].n, r.k[2].m, r.k[2].n);
}

inline bool operator<(const ResonanceQuad& a, const ResonanceQuad& b) {
    return quad_key(a) < quad_key(b);
}
inline bool operator<(const ResonanceTriad& a, const ResonanceTriad& b) {
    return triad_key(a) < triad_key(b);
}

/// Global sign symmetries of the solution sets: flipping all m, all n, or
/// both across an entire tuple maps solutions to solutions.
enum class SignFlip { flip_m, flip_n, flip_both };
constexpr std::array<SignFlip, 3> kSignFlips = {
    SignFlip::flip_m, SignFlip::flip_n, SignFlip::flip_both};

ResonanceQuad apply_flip(const ResonanceQuad& r, SignFlip f);
ResonanceTriad apply_flip(const ResonanceTriad& r, SignFlip f);

/// True when the tuple is the smallest canonical member of its sign orbit.
bool is_orbit_minimal(const ResonanceQuad& r);
bool is_orbit_minimal(const ResonanceTriad& r);

}  // namespace resonance
