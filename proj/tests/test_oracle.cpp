#include <fstream>
#include <sstream>

#include "doctest.h"

#include "resonance/io.hpp"
#include "resonance/oracle.hpp"
#include "resonance/resonance_search.hpp"

using namespace resonance;

namespace {

std::string fixture_path(const char* name) {
    return std::string(RESONANCE_FIXTURE_DIR) + "/" + name;
}

template <typename T>
std::string render(const std::vector<T>& v) {
    std::ostringstream os;
    for (const auto& r : v) os << to_jsonl(r) << "\n";
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("radical_key examples and roundtrip") {
    CHECK(radical_key(81, 4) == RadicalClassKey{3, 1});
    CHECK(radical_key(23125, 4) == RadicalClassKey{5, 37});
    CHECK(radical_key(50, 2) == RadicalClassKey{5, 2});
    CHECK(radical_key(1, 4) == RadicalClassKey{1, 1});
    for (i64 t = 1; t <= 1000000; ++t) {
        auto k2 = radical_key(t, 2);
        CHECK(k2.gamma * k2.gamma * k2.q == t);
    }
    for (i64 t = 1; t <= 100000; ++t) {
        auto k4 = radical_key(t, 4);
        i64 g2 = k4.gamma * k4.gamma;
        CHECK(g2 * g2 * k4.q == t);
        // the kernel is free of fourth prime powers
        for (i64 p = 2; p * p * p * p <= k4.q; ++p)
            CHECK(k4.q % (p * p * p * p) != 0);
    }
}

TEST_CASE("oracle refuses domains beyond the ceiling") {
    CHECK_THROWS_AS(brute_force_gravity(41), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_planetary(61), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_gravity(0), std::invalid_argument);
    OracleOptions opts;
    opts.ceiling = 45;
    CHECK_NOTHROW(brute_force_gravity(41, opts));
}

TEST_CASE("frozen snapshots") {
    CHECK(render(brute_force_gravity(5)) == slurp(fixture_path("oracle_gravity_d5.jsonl")));
    CHECK(render(brute_force_gravity(20)) ==
          slurp(fixture_path("oracle_gravity_d20.jsonl")));
    CHECK(render(brute_force_planetary(1)) ==
          slurp(fixture_path("oracle_planetary_d1.jsonl")));
    CHECK(render(brute_force_planetary(10)) ==
          slurp(fixture_path("oracle_planetary_d10.jsonl")));
}

TEST_CASE("planetary oracle: hand-checkable triad at D=2") {
    auto sols = brute_force_planetary(2);
    ResonanceTriad want =
        make_canonical_triad(1, {2, {0, 2}}, {2, {0, -2}}, {1, {0, 1}});
    CHECK(std::count(sols.begin(), sols.end(), want) == 1);
    CHECK(sols.size() == 4);
}

TEST_CASE("every oracle tuple passes independent re-verification") {
    for (const auto& r : brute_force_gravity(25)) {
        CHECK(!recheck(ParsedSolution{r}, 25));
    }
    for (const auto& r : brute_force_planetary(30)) {
        CHECK(!recheck(ParsedSolution{r}, 30));
    }
}

TEST_CASE("pipeline equals oracle on sampled domains") {
    struct Collect : SolutionSink {
        std::vector<ResonanceQuad> quads;
        std::vector<ResonanceTriad> triads;
        void on_quad(const ResonanceQuad& r) override { quads.push_back(r); }
        void on_triad(const ResonanceTriad& r) override { triads.push_back(r); }
    };
    for (i64 D : {7, 21, 33, 40}) {
        for (bool zs : {false, true}) {
            auto cfg = RunConfig::make(WaveKind::gravity4, D);
            cfg.include_zero_sum = zs;
            Collect sink;
            run(cfg, sink);
            OracleOptions opts;
            opts.include_zero_sum = zs;
            CHECK(sink.quads == brute_force_gravity(D, opts));
        }
    }
    for (i64 D : {9, 31, 52}) {
        auto cfg = RunConfig::make(WaveKind::planetary3, D);
        Collect sink;
        run(cfg, sink);
        CHECK(sink.triads == brute_force_planetary(D));
    }
}

TEST_CASE("first asymmetric group appears at D=50 with eight members") {
    OracleOptions opts;
    opts.ceiling = 50;
    auto sols = brute_force_gravity(50, opts);
    i64 asym = 0;
    for (const auto& r : sols) asym += classify_asymmetric(r);
    CHECK(asym == 8);
    // the group's largest coordinate is 49, so it is present from D=49 on
    auto s48 = brute_force_gravity(48, opts);
    i64 asym48 = 0;
    for (const auto& r : s48) asym48 += classify_asymmetric(r);
    CHECK(asym48 == 0);
}
