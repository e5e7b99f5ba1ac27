#include <random>

#include "doctest.h"

#include "resonance/class_sieve.hpp"

using namespace resonance;

TEST_CASE("is_class_index: gravity rules") {
    CHECK(is_class_index(1, WaveKind::gravity4));
    CHECK_FALSE(is_class_index(16, WaveKind::gravity4));
    CHECK_FALSE(is_class_index(3, WaveKind::gravity4));
    CHECK(is_class_index(9, WaveKind::gravity4));
    CHECK_FALSE(is_class_index(27, WaveKind::gravity4));
    CHECK(is_class_index(37, WaveKind::gravity4));
    CHECK(is_class_index(761, WaveKind::gravity4));
    CHECK(is_class_index(2, WaveKind::gravity4));
    CHECK(is_class_index(8, WaveKind::gravity4));
    CHECK(is_class_index(18, WaveKind::gravity4));  // 2 * 3^2
    CHECK_FALSE(is_class_index(48, WaveKind::gravity4));
}

TEST_CASE("is_class_index: planetary rules") {
    CHECK(is_class_index(1, WaveKind::planetary3));
    CHECK_FALSE(is_class_index(3, WaveKind::planetary3));
    CHECK(is_class_index(10, WaveKind::planetary3));
    CHECK_FALSE(is_class_index(12, WaveKind::planetary3));
    CHECK_FALSE(is_class_index(9, WaveKind::planetary3));
    CHECK(is_class_index(2, WaveKind::planetary3));
    CHECK_FALSE(is_class_index(4, WaveKind::planetary3));
}

TEST_CASE("sieve at D=1 covers the two reachable norms") {
    auto cfg = RunConfig::make(WaveKind::gravity4, 1);
    SpfTable spf(cfg.norm_bound);
    CHECK(sieve_classes(cfg, spf) == std::vector<i64>{1, 2});
}

TEST_CASE("sieve agrees with trial division, both kinds") {
    for (WaveKind kind : {WaveKind::gravity4, WaveKind::planetary3}) {
        auto cfg = RunConfig::make(kind, 60);
        SpfTable spf(cfg.norm_bound);
        auto sieved = sieve_classes(cfg, spf);
        std::vector<i64> expect;
        for (i64 q = 1; q <= cfg.norm_bound; ++q)
            if (is_class_index(q, kind)) expect.push_back(q);
        CHECK(sieved == expect);
    }
}

TEST_CASE("sieve vs trial division on random samples at D=1000") {
    auto cfg = RunConfig::make(WaveKind::gravity4, 1000);
    SpfTable spf(cfg.norm_bound);
    auto classes = sieve_classes(cfg, spf);
    std::vector<bool> member(static_cast<size_t>(cfg.norm_bound) + 1, false);
    for (i64 q : classes) member[static_cast<size_t>(q)] = true;
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<i64> dist(1, cfg.norm_bound);
    for (int i = 0; i < 10000; ++i) {
        i64 q = dist(rng);
        CHECK(member[static_cast<size_t>(q)] ==
              is_class_index(q, WaveKind::gravity4));
    }
}

TEST_CASE("planetary classes are a subset of gravity classes") {
    auto gcfg = RunConfig::make(WaveKind::gravity4, 60);
    auto pcfg = RunConfig::make(WaveKind::planetary3, 60);
    SpfTable spf(gcfg.norm_bound);
    auto g = sieve_classes(gcfg, spf);
    auto p = sieve_classes(pcfg, spf);
    CHECK(std::includes(g.begin(), g.end(), p.begin(), p.end()));
}

TEST_CASE("multiplicity brackets the norm bound") {
    for (WaveKind kind : {WaveKind::gravity4, WaveKind::planetary3}) {
        auto cfg = RunConfig::make(kind, 100);
        SpfTable spf(cfg.norm_bound);
        const int c = radical_degree(kind);
        for (i64 q : sieve_classes(cfg, spf)) {
            i64 mul = multiplicity(q, cfg);
            auto pow_c = [&](i64 g) {
                i64 v = 1;
                for (int i = 0; i < c; ++i) v *= g;
                return v;
            };
            CHECK(pow_c(mul) * q <= cfg.norm_bound);
            CHECK(pow_c(mul + 1) * q > cfg.norm_bound);
        }
    }
}

TEST_CASE("multiplicity anchors at D=1000") {
    auto gcfg = RunConfig::make(WaveKind::gravity4, 1000);
    CHECK(multiplicity(1, gcfg) == 37);
    CHECK(multiplicity(125002, gcfg) == 1);
    auto pcfg = RunConfig::make(WaveKind::planetary3, 1000);
    CHECK(multiplicity(1, pcfg) == 1414);
}

TEST_CASE("class record stores valid decompositions") {
    auto cfg = RunConfig::make(WaveKind::gravity4, 50);
    SpfTable spf(cfg.norm_bound);
    auto rec = make_class_record(2, cfg, spf);
    CHECK(rec.mul == 7);
    CHECK(rec.decs.size() == 7);
    for (i64 g = 1; g <= rec.mul; ++g) {
        i64 t = g * g * g * g * 2;
        for (const auto& d : rec.decs[static_cast<size_t>(g - 1)]) {
            CHECK(d.x >= d.y);
            CHECK(d.y >= 0);
            CHECK(d.x * d.x + d.y * d.y == t);
        }
    }
    // 2 = 1 + 1: the single representation (1,1) counts once.
    CHECK(rec.dec_count_in_domain == 1);

    auto rec25 = make_class_record(25, cfg, spf);
    // 25 = (5,0) and (4,3): ordered in-domain count 2 + 2.
    CHECK(rec25.dec_count_in_domain == 4);
}
