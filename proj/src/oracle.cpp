#include "resonance/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "resonance/intmath.hpp"

namespace resonance {

RadicalClassKey radical_key(i64 t, int c_abs) {
    if (t < 1) throw std::invalid_argument("radical_key: t must be positive");
    if (c_abs != 2 && c_abs != 4)
        throw std::invalid_argument("radical_key: degree must be 2 or 4");
    i64 top = c_abs == 4 ? iroot4(t) : isqrt(t);
    for (i64 g = top; g >= 2; --g) {
        i64 gc = g * g;
        if (c_abs == 4) gc *= gc;
        if (t % gc == 0) return {g, t / gc};
    }
    return {1, t};
}

namespace {

struct Tagged {
    WaveVector v;
    i64 gamma;
};

// All nonzero lattice vectors of [-D, D]^2 grouped by class index.
std::map<i64, std::vector<Tagged>> vectors_by_class(i64 D, int c_abs) {
    std::map<i64, std::vector<Tagged>> groups;
    std::map<i64, RadicalClassKey> key_cache;
    for (i64 m = -D; m <= D; ++m)
        for (i64 n = -D; n <= D; ++n) {
            if (m == 0 && n == 0) continue;
            i64 t = m * m + n * n;
            auto it = key_cache.find(t);
            if (it == key_cache.end())
                it = key_cache.emplace(t, radical_key(t, c_abs)).first;
            groups[it->second.q].push_back({{m, n}, it->second.gamma});
        }
    return groups;
}

void check_ceiling(i64 D, i64 ceiling, i64 fallback) {
    if (ceiling == 0) ceiling = fallback;
    if (D < 1 || D > ceiling)
        throw std::invalid_argument("oracle: domain beyond configured ceiling");
}

}  // namespace

std::vector<ResonanceQuad> brute_force_gravity(i64 D,
                                               const OracleOptions& opts) {
    check_ceiling(D, opts.ceiling, kGravityOracleCeiling);

    std::vector<ResonanceQuad> out;
    for (const auto& [q, vecs] : vectors_by_class(D, 4)) {
        // Bucket unordered pairs by (momentum sum, weight sum); within one
        // class the frequency condition is exactly the weight-sum equality.
        std::map<std::tuple<i64, i64, i64>, std::vector<std::pair<size_t, size_t>>>
            buckets;
        for (size_t i = 0; i + 1 < vecs.size(); ++i)
            for (size_t j = i + 1; j < vecs.size(); ++j) {
                i64 sm = vecs[i].v.m + vecs[j].v.m;
                i64 sn = vecs[i].v.n + vecs[j].v.n;
                if (!opts.include_zero_sum && sm == 0 && sn == 0) continue;
                buckets[{sm, sn, vecs[i].gamma + vecs[j].gamma}].push_back({i, j});
            }
        for (const auto& [key, pairs] : buckets)
            for (size_t a = 0; a + 1 < pairs.size(); ++a)
                for (size_t b = a + 1; b < pairs.size(); ++b) {
                    auto [i, j] = pairs[a];
                    auto [k, l] = pairs[b];
                    if (i == k || i == l || j == k || j == l) continue;
                    out.push_back(make_canonical_quad(
                        q, {vecs[i].gamma, vecs[i].v}, {vecs[j].gamma, vecs[j].v},
                        {vecs[k].gamma, vecs[k].v}, {vecs[l].gamma, vecs[l].v}));
                }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ResonanceTriad> brute_force_planetary(i64 D,
                                                  const OracleOptions& opts) {
    check_ceiling(D, opts.ceiling, kPlanetaryOracleCeiling);

    std::vector<ResonanceTriad> out;
    for (const auto& [q, vecs] : vectors_by_class(D, 2)) {
        std::map<i64, std::vector<size_t>> by_m;
        for (size_t i = 0; i < vecs.size(); ++i) by_m[vecs[i].v.m].push_back(i);
        for (size_t i = 0; i + 1 < vecs.size(); ++i)
            for (size_t j = i + 1; j < vecs.size(); ++j) {
                auto it = by_m.find(vecs[i].v.m + vecs[j].v.m);
                if (it == by_m.end()) continue;
                const i64 g1 = vecs[i].gamma, g2 = vecs[j].gamma;
                for (size_t c : it->second) {
                    if (c == i || c == j) continue;
                    const i64 g3 = vecs[c].gamma;
                    if (g3 * (g1 + g2) != g1 * g2) continue;  // 1/g1+1/g2 = 1/g3
                    out.push_back(make_canonical_triad(q, {g1, vecs[i].v},
                                                       {g2, vecs[j].v},
                                                       {g3, vecs[c].v}));
                }
            }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace resonance
