#include "resonance/canonical.hpp"

#include <algorithm>
#include <cassert>

namespace resonance {

namespace {

void sort_side(WeightedVector& a, WeightedVector& b) {
    if (std::tie(a.gamma, a.v) > std::tie(b.gamma, b.v)) std::swap(a, b);
}

WaveVector flipped(WaveVector v, SignFlip f) {
    switch (f) {
        case SignFlip::flip_m: return {-v.m, v.n};
        case SignFlip::flip_n: return {v.m, -v.n};
        case SignFlip::flip_both: return {-v.m, -v.n};
    }
    return v;
}

}  // namespace

ResonanceQuad make_canonical_quad(i64 q, WeightedVector a1, WeightedVector a2,
                                  WeightedVector b1, WeightedVector b2) {
    sort_side(a1, a2);
    sort_side(b1, b2);
    assert(a1.gamma + a2.gamma == b1.gamma + b2.gamma);
    bool swap_sides;
    if (a1.gamma != b1.gamma)
        swap_sides = a1.gamma > b1.gamma;
    else
        swap_sides = std::tie(b1.v, b2.v) < std::tie(a1.v, a2.v);
    if (swap_sides) {
        std::swap(a1, b1);
        std::swap(a2, b2);
    }
    ResonanceQuad r;
    r.q = q;
    r.weights = {a1.gamma, a2.gamma, b1.gamma, b2.gamma, a1.gamma + a2.gamma,
                 classify_degeneracy(a1.gamma, a2.gamma, b1.gamma, b2.gamma)};
    r.k = {a1.v, a2.v, b1.v, b2.v};
    return r;
}

ResonanceTriad make_canonical_triad(i64 q, WeightedVector a1, WeightedVector a2,
                                    WeightedVector c) {
    sort_side(a1, a2);
    ResonanceTriad r;
    r.q = q;
    r.weights = {a1.gamma, a2.gamma, c.gamma};
    r.k = {a1.v, a2.v, c.v};
    return r;
}

ResonanceQuad apply_flip(const ResonanceQuad& r, SignFlip f) {
    return make_canonical_quad(
        r.q, {r.weights.g1l, flipped(r.k[0], f)},
        {r.weights.g2l, flipped(r.k[1], f)}, {r.weights.g1r, flipped(r.k[2], f)},
        {r.weights.g2r, flipped(r.k[3], f)});
}

ResonanceTriad apply_flip(const ResonanceTriad& r, SignFlip f) {
    return make_canonical_triad(
        r.q, {r.weights.g1, flipped(r.k[0], f)},
        {r.weights.g2, flipped(r.k[1], f)}, {r.weights.g3, flipped(r.k[2], f)});
}

bool is_orbit_minimal(const ResonanceQuad& r) {
    for (SignFlip f : kSignFlips)
        if (apply_flip(r, f) < r) return false;
    return true;
}

bool is_orbit_minimal(const ResonanceTriad& r) {
    for (SignFlip f : kSignFlips)
        if (apply_flip(r, f) < r) return false;
    return true;
}

}  // namespace resonance
