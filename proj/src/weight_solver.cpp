#include "resonance/weight_solver.hpp"

#include <algorithm>
#include <cassert>

namespace resonance {

Degeneracy classify_degeneracy(i64 g1l, i64 g2l, i64 g1r, i64 g2r) {
    assert(g1l <= g1r && g1r <= g2r && g2r <= g2l);
    if (g1l == g2l) return Degeneracy::total;
    if (g1l == g1r) return Degeneracy::left_right;
    if (g1r == g2r) return Degeneracy::right;
    return Degeneracy::none;
}

std::vector<WeightQuad> solve_additive_weights(i64 mul) {
    assert(mul >= 1);
    std::vector<WeightQuad> out;
    for (i64 s = 2; s <= 2 * mul; ++s) {
        const i64 g1l_min = std::max<i64>(1, s - mul);
        const i64 half = s / 2;
        for (i64 g1l = g1l_min; g1l <= half; ++g1l) {
            const i64 g2l = s - g1l;
            for (i64 g1r = g1l; g1r <= half; ++g1r) {
                const i64 g2r = s - g1r;
                out.push_back({g1l, g2l, g1r, g2r, s,
                               classify_degeneracy(g1l, g2l, g1r, g2r)});
            }
        }
    }
    return out;
}

std::vector<WeightTriad> solve_harmonic_weights(i64 mul) {
    assert(mul >= 1);
    std::vector<WeightTriad> out;
    for (i64 g1 = 1; g1 <= mul; ++g1)
        for (i64 g2 = g1; g2 <= mul; ++g2) {
            const i64 num = g1 * g2;
            const i64 den = g1 + g2;
            if (num % den != 0) continue;
            out.push_back({g1, g2, num / den});
        }
    return out;
}

std::vector<WeightTriad> subset_for_class(std::span<const WeightTriad> all,
                                          i64 mul) {
    std::vector<WeightTriad> out;
    for (const auto& t : all)
        if (t.g2 <= mul) out.push_back(t);  // g2 is the largest entry
    return out;
}

}  // namespace resonance
