#include "resonance/resonance_search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <condition_variable>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "resonance/intmath.hpp"
#include "resonance/oracle.hpp"

namespace resonance {

bool is_lean_class(const ClassRecord& rec, WaveKind kind) {
    if (rec.mul != 1) return false;
    if (kind == WaveKind::planetary3) return true;
    return rec.dec_count_in_domain <= 4;
}

std::vector<WaveVector> expand_signed_variants(const TwoSquareDecomposition& d) {
    std::vector<WaveVector> out;
    auto add = [&](i64 m, i64 n) {
        WaveVector v{m, n};
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    };
    const i64 ab[2][2] = {{d.x, d.y}, {d.y, d.x}};
    for (const auto& p : ab)
        for (int sa : {1, -1}) {
            if (p[0] == 0 && sa < 0) continue;
            for (int sb : {1, -1}) {
                if (p[1] == 0 && sb < 0) continue;
                add(sa * p[0], sb * p[1]);
            }
        }
    return out;
}

bool classify_asymmetric(const ResonanceQuad& r) {
    return r.weights.degeneracy == Degeneracy::none;
}

namespace {

// In-domain signed variants for every weight of a class.
std::vector<std::vector<WaveVector>> class_vectors(const ClassRecord& rec,
                                                   i64 domain) {
    std::vector<std::vector<WaveVector>> vecs(static_cast<size_t>(rec.mul));
    for (i64 g = 1; g <= rec.mul; ++g) {
        auto& vs = vecs[static_cast<size_t>(g - 1)];
        for (const auto& d : rec.decs[static_cast<size_t>(g - 1)]) {
            if (d.x > domain) continue;
            auto ex = expand_signed_variants(d);
            vs.insert(vs.end(), ex.begin(), ex.end());
        }
    }
    return vecs;
}

u64 pack_sum(i64 sm, i64 sn, i64 domain) {
    const u64 shift = static_cast<u64>(2 * domain);
    return static_cast<u64>(sm + 2 * domain) * (2 * shift + 1) +
           static_cast<u64>(sn + 2 * domain);
}

struct PairRef {
    std::uint32_t i, j;
};

// Enumerate the vector pairs of one side: unordered i < j when both slots
// draw from the same weight, full cross product otherwise.
template <typename F>
void for_each_pair(const std::vector<WaveVector>& a,
                   const std::vector<WaveVector>& b, bool same, F&& fn) {
    if (same) {
        for (std::uint32_t i = 0; i + 1 < a.size(); ++i)
            for (std::uint32_t j = i + 1; j < a.size(); ++j) fn(i, j);
    } else {
        for (std::uint32_t i = 0; i < a.size(); ++i)
            for (std::uint32_t j = 0; j < b.size(); ++j) fn(i, j);
    }
}

}  // namespace

std::vector<ResonanceQuad> search_class_gravity(const ClassRecord& rec,
                                                std::span<const WeightQuad> quads,
                                                const RunConfig& cfg) {
    std::vector<ResonanceQuad> out;
    const auto vecs = class_vectors(rec, cfg.domain);
    std::unordered_map<u64, std::vector<PairRef>> left;

    for (const auto& quad : quads) {
        const auto& A = vecs[static_cast<size_t>(quad.g1l - 1)];
        const auto& B = vecs[static_cast<size_t>(quad.g2l - 1)];
        const auto& C = vecs[static_cast<size_t>(quad.g1r - 1)];
        const auto& D = vecs[static_cast<size_t>(quad.g2r - 1)];
        if (A.empty() || B.empty() || C.empty() || D.empty()) continue;

        left.clear();
        for_each_pair(A, B, quad.g1l == quad.g2l, [&](auto i, auto j) {
            const WaveVector &u = A[i], &v = B[j];
            i64 sm = u.m + v.m, sn = u.n + v.n;
            if (!cfg.include_zero_sum && sm == 0 && sn == 0) return;
            left[pack_sum(sm, sn, cfg.domain)].push_back({i, j});
        });
        if (left.empty()) continue;

        for_each_pair(C, D, quad.g1r == quad.g2r, [&](auto i, auto j) {
            const WaveVector &w = C[i], &z = D[j];
            i64 sm = w.m + z.m, sn = w.n + z.n;
            if (!cfg.include_zero_sum && sm == 0 && sn == 0) return;
            auto it = left.find(pack_sum(sm, sn, cfg.domain));
            if (it == left.end()) return;
            for (const auto& [li, lj] : it->second) {
                const WaveVector &u = A[li], &v = B[lj];
                if (u == w || u == z || v == w || v == z) continue;
                out.push_back(make_canonical_quad(rec.q, {quad.g1l, u},
                                                  {quad.g2l, v}, {quad.g1r, w},
                                                  {quad.g2r, z}));
            }
        });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<ResonanceTriad> search_class_planetary(
    const ClassRecord& rec, std::span<const WeightTriad> triads,
    const RunConfig& cfg) {
    std::vector<ResonanceTriad> out;
    const auto vecs = class_vectors(rec, cfg.domain);
    std::unordered_map<i64, std::vector<std::uint32_t>> by_m;

    for (const auto& triad : triads) {
        const auto& A = vecs[static_cast<size_t>(triad.g1 - 1)];
        const auto& B = vecs[static_cast<size_t>(triad.g2 - 1)];
        const auto& C = vecs[static_cast<size_t>(triad.g3 - 1)];
        if (A.empty() || B.empty() || C.empty()) continue;

        by_m.clear();
        for (std::uint32_t i = 0; i < C.size(); ++i) by_m[C[i].m].push_back(i);

        for_each_pair(A, B, triad.g1 == triad.g2, [&](auto i, auto j) {
            const WaveVector &u = A[i], &v = B[j];
            auto it = by_m.find(u.m + v.m);
            if (it == by_m.end()) return;
            for (auto ci : it->second) {
                const WaveVector& w = C[ci];
                if (w == u || w == v) continue;
                out.push_back(make_canonical_triad(rec.q, {triad.g1, u},
                                                   {triad.g2, v},
                                                   {triad.g3, w}));
            }
        });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

struct BlockResult {
    std::vector<ResonanceQuad> quads;
    std::vector<ResonanceTriad> triads;
    i64 mult1_count = 0;
    i64 mult1_skipped = 0;
    i64 mult1_checked = 0;
    i64 checked_classes = 0;
    i64 first_mult1_class = 0;
    i64 max_multiplicity = 0;
    std::array<i64, 4> case_quads{};
    std::array<i64, 4> case_classes{};
    std::map<i64, i64> dec_histogram;
    bool done = false;
};

struct WeightQuadCache {
    bool enabled = false;
    std::mutex mu;
    std::unordered_map<i64, std::shared_ptr<const std::vector<WeightQuad>>> map;

    std::shared_ptr<const std::vector<WeightQuad>> get(i64 mul) {
        if (!enabled)
            return std::make_shared<const std::vector<WeightQuad>>(
                solve_additive_weights(mul));
        std::scoped_lock lock(mu);
        auto& slot = map[mul];
        if (!slot)
            slot = std::make_shared<const std::vector<WeightQuad>>(
                solve_additive_weights(mul));
        return slot;
    }
};

void search_block(std::span<const i64> block, const RunConfig& cfg,
                  const SpfTable& spf, std::span<const WeightTriad> all_triads,
                  WeightQuadCache& cache, BlockResult& res) {
    for (i64 q : block) {
        const i64 mul = multiplicity(q, cfg);
        res.max_multiplicity = std::max(res.max_multiplicity, mul);
        if (mul == 1 && res.first_mult1_class == 0) res.first_mult1_class = q;

        if (cfg.kind == WaveKind::planetary3) {
            if (mul == 1) {
                ++res.mult1_count;
                ++res.mult1_skipped;
                continue;
            }
            ClassRecord rec = make_class_record(q, cfg, spf);
            auto sub = subset_for_class(all_triads, mul);
            ++res.checked_classes;
            auto found = search_class_planetary(rec, sub, cfg);
            res.triads.insert(res.triads.end(), found.begin(), found.end());
            continue;
        }

        ClassRecord rec = make_class_record(q, cfg, spf);
        bool search_it = true;
        if (mul == 1) {
            ++res.mult1_count;
            ++res.dec_histogram[rec.dec_count_in_domain];
            if (is_lean_class(rec, cfg.kind)) {
                ++res.mult1_skipped;
                // Standing pairs are the only thing a lean class can host;
                // they are in scope only under include_zero_sum.
                search_it = cfg.include_zero_sum;
            } else {
                ++res.mult1_checked;
            }
        }
        if (!search_it) continue;

        auto quads = cache.get(mul);
        ++res.checked_classes;
        if (mul >= 2) {
            std::array<bool, 4> seen{};
            for (const auto& wq : *quads) {
                ++res.case_quads[static_cast<int>(wq.degeneracy)];
                seen[static_cast<int>(wq.degeneracy)] = true;
            }
            for (int c = 0; c < 4; ++c) res.case_classes[c] += seen[c];
        }

        auto found = search_class_gravity(rec, *quads, cfg);
        res.quads.insert(res.quads.end(), found.begin(), found.end());
    }
}

// Cross-class trivial pairings (a, b | a, b). Quadratic in the vector count,
// hence the hard domain cap.
void emit_case2_pairings(const RunConfig& cfg, SolutionSink& sink,
                         RunStats& st) {
    struct Tagged {
        WaveVector v;
        i64 q, g;
    };
    std::vector<Tagged> all;
    for (i64 m = -cfg.domain; m <= cfg.domain; ++m)
        for (i64 n = -cfg.domain; n <= cfg.domain; ++n) {
            if (m == 0 && n == 0) continue;
            auto key = radical_key(m * m + n * n, radical_degree(cfg.kind));
            all.push_back({{m, n}, key.q, key.gamma});
        }
    std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) {
        return std::tie(a.v.m, a.v.n) < std::tie(b.v.m, b.v.n);
    });
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j) {
            if (all[i].q == all[j].q) continue;
            sink.on_case2({all[i].q, all[j].q, all[i].g, all[j].g, all[i].v,
                           all[j].v});
            ++st.case2_pairings;
        }
}

i64 now_ms() {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now().time_since_epoch())
        .count();
}

}  // namespace

RunStats run(const RunConfig& cfg, SolutionSink& sink,
             const std::vector<i64>* preloaded_classes) {
    const i64 t_start = now_ms();
    RunStats st;
    st.kind = cfg.kind;
    st.domain = cfg.domain;
    st.quotient = cfg.quotient;

    SpfTable spf(cfg.norm_bound);

    std::vector<i64> sieved;
    if (preloaded_classes == nullptr) {
        const i64 t0 = now_ms();
        sieved = sieve_classes(cfg, spf);
        st.sieve_ms = now_ms() - t0;
    }
    const std::vector<i64>& classes = preloaded_classes ? *preloaded_classes
                                                        : sieved;
    st.class_count = static_cast<i64>(classes.size());

    std::vector<WeightTriad> all_triads;
    if (cfg.kind == WaveKind::planetary3 && !classes.empty())
        all_triads = solve_harmonic_weights(multiplicity(1, cfg));

    WeightQuadCache cache;
    cache.enabled = cfg.cache_weight_quads;

    const size_t block_size = 1024;
    const size_t nblocks = (classes.size() + block_size - 1) / block_size;
    std::vector<BlockResult> slots(nblocks);
    std::atomic<size_t> next{0};
    std::mutex mu;
    std::condition_variable cv;

    auto worker = [&] {
        while (true) {
            size_t b = next.fetch_add(1);
            if (b >= nblocks) break;
            BlockResult res;
            size_t lo = b * block_size;
            size_t hi = std::min(lo + block_size, classes.size());
            search_block({classes.data() + lo, hi - lo}, cfg, spf, all_triads,
                         cache, res);
            {
                std::scoped_lock lock(mu);
                res.done = true;
                slots[b] = std::move(res);
            }
            cv.notify_all();
        }
    };

    const int nthreads = std::max(1, cfg.threads);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);

    // Ordered merge: consume block b only once finished, so the stream and
    // all tallies are independent of thread count.
    auto consume_quad = [&](const ResonanceQuad& r) {
        bool minimal = is_orbit_minimal(r);
        bool asym = classify_asymmetric(r);
        i64 maxc = 0;
        for (const auto& v : r.k)
            maxc = std::max({maxc, v.m < 0 ? -v.m : v.m, v.n < 0 ? -v.n : v.n});
        int band = st.band_of(maxc);
        ++st.canonical_total;
        ++st.band_total[band];
        ++st.case_solutions[static_cast<int>(r.weights.degeneracy)];
        if (asym) {
            ++st.canonical_asymmetric;
            ++st.band_asymmetric[band];
        }
        if (minimal) {
            ++st.orbit_total;
            ++st.band_orbit_total[band];
            if (asym) {
                ++st.orbit_asymmetric;
                ++st.band_orbit_asymmetric[band];
            }
        }
        if (cfg.quotient == QuotientMode::sign_orbits && !minimal) return;
        ++st.solutions_total;
        if (asym) ++st.solutions_asymmetric;
        sink.on_quad(r);
    };
    auto consume_triad = [&](const ResonanceTriad& r) {
        bool minimal = is_orbit_minimal(r);
        i64 maxc = 0;
        for (const auto& v : r.k)
            maxc = std::max({maxc, v.m < 0 ? -v.m : v.m, v.n < 0 ? -v.n : v.n});
        int band = st.band_of(maxc);
        ++st.canonical_total;
        ++st.band_total[band];
        if (minimal) {
            ++st.orbit_total;
            ++st.band_orbit_total[band];
        }
        if (cfg.quotient == QuotientMode::sign_orbits && !minimal) return;
        ++st.solutions_total;
        sink.on_triad(r);
    };

    for (size_t b = 0; b < nblocks; ++b) {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return slots[b].done; });
        BlockResult res = std::move(slots[b]);
        lock.unlock();

        st.mult1_count += res.mult1_count;
        st.mult1_skipped += res.mult1_skipped;
        st.mult1_checked += res.mult1_checked;
        st.checked_classes += res.checked_classes;
        st.max_multiplicity = std::max(st.max_multiplicity, res.max_multiplicity);
        if (st.first_mult1_class == 0) st.first_mult1_class = res.first_mult1_class;
        for (int c = 0; c < 4; ++c) {
            st.case_quads[c] += res.case_quads[c];
            st.case_classes[c] += res.case_classes[c];
        }
        for (const auto& [dec, cnt] : res.dec_histogram)
            st.mult1_dec_histogram[dec] += cnt;
        for (const auto& r : res.quads) consume_quad(r);
        for (const auto& r : res.triads) consume_triad(r);
    }
    for (auto& t : pool) t.join();

    if (cfg.emit_case2 && cfg.kind == WaveKind::gravity4) {
        if (cfg.domain > kCase2DomainCap)
            throw std::invalid_argument(
                "emit_case2 is limited to domains <= " +
                std::to_string(kCase2DomainCap));
        emit_case2_pairings(cfg, sink, st);
    }

    st.total_ms = now_ms() - t_start;
    return st;
}

}  // namespace resonance
