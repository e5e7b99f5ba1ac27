#include <algorithm>
#include <set>

#include "doctest.h"

#include "resonance/oracle.hpp"
#include "resonance/resonance_search.hpp"

using namespace resonance;

namespace {

struct Collect : SolutionSink {
    std::vector<ResonanceQuad> quads;
    std::vector<ResonanceTriad> triads;
    std::vector<Case2Pairing> case2;
    void on_quad(const ResonanceQuad& r) override { quads.push_back(r); }
    void on_triad(const ResonanceTriad& r) override { triads.push_back(r); }
    void on_case2(const Case2Pairing& r) override { case2.push_back(r); }
};

ResonanceQuad quad_of(i64 q, std::array<i64, 4> g,
                      std::array<WaveVector, 4> k) {
    return make_canonical_quad(q, {g[0], k[0]}, {g[1], k[1]}, {g[2], k[2]},
                               {g[3], k[3]});
}

}  // namespace

TEST_CASE("expand_signed_variants") {
    auto v10 = expand_signed_variants({1, 0});
    CHECK(std::set<WaveVector>(v10.begin(), v10.end()) ==
          std::set<WaveVector>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    auto v11 = expand_signed_variants({1, 1});
    CHECK(std::set<WaveVector>(v11.begin(), v11.end()) ==
          std::set<WaveVector>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}});
    CHECK(expand_signed_variants({4, 3}).size() == 8);
}

TEST_CASE("lean classification") {
    auto cfg = RunConfig::make(WaveKind::gravity4, 1000);
    SpfTable spf(cfg.norm_bound);
    // q = 125003 = 7 * 53 * 337: multiplicity 1 at D=1000
    auto rec = make_class_record(125003, cfg, spf);
    REQUIRE(rec.mul == 1);
    CHECK(is_lean_class(rec, WaveKind::gravity4) ==
          (rec.dec_count_in_domain <= 4));
    // class 1 has multiplicity 37: never lean
    auto rec1 = make_class_record(1, cfg, spf);
    CHECK_FALSE(is_lean_class(rec1, WaveKind::gravity4));

    auto pcfg = RunConfig::make(WaveKind::planetary3, 1000);
    SpfTable pspf(pcfg.norm_bound);
    auto prec = make_class_record(500009, pcfg, pspf);
    REQUIRE(prec.mul == 1);
    CHECK(is_lean_class(prec, WaveKind::planetary3));
}

TEST_CASE("lean classes really host no solutions") {
    // Exhaustive at a moderate domain: searching a lean class anyway yields
    // nothing (standing pairs are outside the solution concept).
    auto cfg = RunConfig::make(WaveKind::gravity4, 200);
    SpfTable spf(cfg.norm_bound);
    auto quads1 = solve_additive_weights(1);
    i64 lean_seen = 0;
    for (i64 q : sieve_classes(cfg, spf)) {
        auto rec = make_class_record(q, cfg, spf);
        if (!is_lean_class(rec, WaveKind::gravity4)) continue;
        ++lean_seen;
        CHECK(search_class_gravity(rec, quads1, cfg).empty());
    }
    CHECK(lean_seen > 10000);
}

TEST_CASE("q=1 transposition-ambiguous tuple is emitted once") {
    auto cfg = RunConfig::make(WaveKind::gravity4, 50);
    SpfTable spf(cfg.norm_bound);
    auto rec = make_class_record(1, cfg, spf);
    auto quads = solve_additive_weights(rec.mul);
    auto found = search_class_gravity(rec, quads, cfg);
    ResonanceQuad want = quad_of(
        1, {3, 7, 5, 5}, {{{0, -9}, {0, 49}, {-15, 20}, {15, 20}}});
    CHECK(std::count(found.begin(), found.end(), want) == 1);
}

TEST_CASE("named asymmetric tuples") {
    {
        auto cfg = RunConfig::make(WaveKind::gravity4, 1000);
        SpfTable spf(cfg.norm_bound);
        auto rec = make_class_record(37, cfg, spf);
        auto quads = solve_additive_weights(rec.mul);
        auto found = search_class_gravity(rec, quads, cfg);
        ResonanceQuad want =
            quad_of(37, {5, 15, 7, 13},
                    {{{-150, -25}, {990, 945}, {294, 49}, {546, 871}}});
        CHECK(std::count(found.begin(), found.end(), want) == 1);
        CHECK(classify_asymmetric(want));
    }
    {
        auto cfg = RunConfig::make(WaveKind::gravity4, 50);
        SpfTable spf(cfg.norm_bound);
        auto rec = make_class_record(2, cfg, spf);
        auto quads = solve_additive_weights(rec.mul);
        auto found = search_class_gravity(rec, quads, cfg);
        ResonanceQuad want = quad_of(
            2, {2, 7, 3, 6}, {{{-4, -4}, {49, 49}, {9, 9}, {36, 36}}});
        CHECK(std::count(found.begin(), found.end(), want) == 1);
    }
}

TEST_CASE("classify_asymmetric follows the degeneracy case") {
    CHECK(classify_asymmetric(quad_of(
        37, {5, 15, 7, 13}, {{{-150, -25}, {990, 945}, {294, 49}, {546, 871}}})));
    CHECK_FALSE(classify_asymmetric(
        quad_of(1, {3, 7, 5, 5}, {{{0, -9}, {0, 49}, {-15, 20}, {15, 20}}})));
}

TEST_CASE("planetary class search: named triad") {
    auto cfg = RunConfig::make(WaveKind::planetary3, 10);
    SpfTable spf(cfg.norm_bound);
    auto rec = make_class_record(1, cfg, spf);
    auto triads = solve_harmonic_weights(rec.mul);
    auto found = search_class_planetary(rec, triads, cfg);
    ResonanceTriad want =
        make_canonical_triad(1, {2, {0, 2}}, {2, {0, -2}}, {1, {0, 1}});
    CHECK(std::count(found.begin(), found.end(), want) == 1);
    for (const auto& r : found) {
        CHECK(r.k[0].m + r.k[1].m == r.k[2].m);
        CHECK(r.weights.g3 * (r.weights.g1 + r.weights.g2) ==
              r.weights.g1 * r.weights.g2);
    }
}

TEST_CASE("run: full solution set equals the oracle at D=1") {
    auto cfg = RunConfig::make(WaveKind::gravity4, 1);
    Collect sink;
    run(cfg, sink);
    CHECK(sink.quads == brute_force_gravity(1));
}

TEST_CASE("run: emitted records re-verify and are strictly sorted") {
    auto cfg = RunConfig::make(WaveKind::gravity4, 30);
    Collect sink;
    RunStats st = run(cfg, sink);
    CHECK(st.solutions_total == static_cast<i64>(sink.quads.size()));
    for (size_t i = 0; i < sink.quads.size(); ++i) {
        const auto& r = sink.quads[i];
        const i64 g[4] = {r.weights.g1l, r.weights.g2l, r.weights.g1r,
                          r.weights.g2r};
        for (int j = 0; j < 4; ++j) {
            i64 gj = g[j];
            CHECK(r.k[j].norm_sq() == gj * gj * gj * gj * r.q);
        }
        CHECK(r.k[0].m + r.k[1].m == r.k[2].m + r.k[3].m);
        CHECK(r.k[0].n + r.k[1].n == r.k[2].n + r.k[3].n);
        if (i > 0) CHECK(sink.quads[i - 1] < r);
    }
}

TEST_CASE("symmetry closure and sign-orbit quotient") {
    auto cfg = RunConfig::make(WaveKind::gravity4, 25);
    cfg.include_zero_sum = true;  // enrich the set
    Collect sink;
    run(cfg, sink);
    std::set<ResonanceQuad> all(sink.quads.begin(), sink.quads.end());
    REQUIRE(!all.empty());
    for (const auto& r : sink.quads)
        for (SignFlip f : kSignFlips) CHECK(all.count(apply_flip(r, f)) == 1);

    auto qcfg = cfg;
    qcfg.quotient = QuotientMode::sign_orbits;
    Collect qsink;
    RunStats qst = run(qcfg, qsink);
    CHECK(qst.solutions_total == qst.orbit_total);
    std::set<ResonanceQuad> reps(qsink.quads.begin(), qsink.quads.end());
    for (const auto& r : qsink.quads)
        for (SignFlip f : kSignFlips) {
            auto img = apply_flip(r, f);
            if (!(img == r)) CHECK(reps.count(img) == 0);
        }
}

TEST_CASE("thread count does not change the stream") {
    for (WaveKind kind : {WaveKind::gravity4, WaveKind::planetary3}) {
        auto cfg = RunConfig::make(kind, 40);
        Collect one;
        run(cfg, one);
        cfg.threads = 4;
        Collect four;
        run(cfg, four);
        CHECK(one.quads == four.quads);
        CHECK(one.triads == four.triads);
    }
}

TEST_CASE("stats invariants") {
    for (WaveKind kind : {WaveKind::gravity4, WaveKind::planetary3}) {
        auto cfg = RunConfig::make(kind, 60);
        Collect sink;
        RunStats st = run(cfg, sink);
        CHECK(st.mult1_skipped + st.mult1_checked == st.mult1_count);
        i64 band_sum = 0, orbit_sum = 0;
        for (int b = 0; b < kBandCount; ++b) {
            band_sum += st.band_total[b];
            orbit_sum += st.band_orbit_total[b];
        }
        CHECK(band_sum == st.canonical_total);
        CHECK(orbit_sum == st.orbit_total);
        CHECK(st.solutions_total == st.canonical_total);  // quotient none
    }
}

TEST_CASE("weight-quad memoization changes nothing") {
    auto cfg = RunConfig::make(WaveKind::gravity4, 40);
    Collect plain;
    run(cfg, plain);
    cfg.cache_weight_quads = true;
    cfg.threads = 2;
    Collect memo;
    run(cfg, memo);
    CHECK(plain.quads == memo.quads);
}

TEST_CASE("case2 pairings: small-domain completeness") {
    auto cfg = RunConfig::make(WaveKind::gravity4, 3);
    cfg.emit_case2 = true;
    Collect sink;
    RunStats st = run(cfg, sink);
    CHECK(st.case2_pairings == static_cast<i64>(sink.case2.size()));
    // every pairing: distinct classes, vectors in lexicographic order
    i64 expected = 0;
    std::vector<std::pair<WaveVector, i64>> vecs;
    for (i64 m = -3; m <= 3; ++m)
        for (i64 n = -3; n <= 3; ++n) {
            if (m == 0 && n == 0) continue;
            vecs.push_back({{m, n}, radical_key(m * m + n * n, 4).q});
        }
    std::sort(vecs.begin(), vecs.end());
    for (size_t i = 0; i < vecs.size(); ++i)
        for (size_t j = i + 1; j < vecs.size(); ++j)
            expected += vecs[i].second != vecs[j].second;
    CHECK(st.case2_pairings == expected);
    for (const auto& p : sink.case2) {
        CHECK(p.qa != p.qb);
        CHECK(p.a < p.b);
    }

    auto big = RunConfig::make(WaveKind::gravity4, kCase2DomainCap + 1);
    big.emit_case2 = true;
    Collect reject;
    CHECK_THROWS_AS(run(big, reject), std::invalid_argument);
}
