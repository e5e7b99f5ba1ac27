#pragma once

#include <span>
#include <vector>

#include "resonance/canonical.hpp"
#include "resonance/class_sieve.hpp"
#include "resonance/stats.hpp"
#include "resonance/types.hpp"
#include "resonance/weight_solver.hpp"

namespace resonance {

/// Classes that provably cannot host solutions and are skipped unsearched:
/// gravity multiplicity-1 classes with at most four in-domain decompositions,
/// and every planetary multiplicity-1 class (the harmonic weight equation
/// needs a weight below the smallest one).
bool is_lean_class(const ClassRecord& rec, WaveKind kind);

/// All distinct lattice vectors reachable from a decomposition (x, y) by
/// coordinate swap and per-coordinate sign flips; zero coordinates and x = y
/// produce no duplicates.
std::vector<WaveVector> expand_signed_variants(const TwoSquareDecomposition& d);

/// Every canonical four-wave tuple of one class, exactly once. Pairs of
/// opposite vectors on both sides (zero momentum sum) are treated as standing
/// pairs and dropped unless cfg.include_zero_sum is set.
std::vector<ResonanceQuad> search_class_gravity(const ClassRecord& rec,
                                                std::span<const WeightQuad> quads,
                                                const RunConfig& cfg);

/// Every canonical three-wave tuple of one class, exactly once.
std::vector<ResonanceTriad> search_class_planetary(
    const ClassRecord& rec, std::span<const WeightTriad> triads,
    const RunConfig& cfg);

/// True when all four weights are pairwise distinct (degeneracy case 1).
bool classify_asymmetric(const ResonanceQuad& r);

/// Cross-class pair (a, b) emitted twice as (a, b | a, b); only produced
/// under --emit-case2 and only for small domains.
struct Case2Pairing {
    i64 qa = 0, qb = 0;
    i64 ga = 0, gb = 0;
    WaveVector a, b;
    friend bool operator==(const Case2Pairing&, const Case2Pairing&) = default;
};

constexpr i64 kCase2DomainCap = 20;  // pair count grows like (2D+1)^4 / 2

/// Receives the deterministic, globally sorted solution stream.
class SolutionSink {
  public:
    virtual ~SolutionSink() = default;
    virtual void on_quad(const ResonanceQuad&) {}
    virtual void on_triad(const ResonanceTriad&) {}
    virtual void on_case2(const Case2Pairing&) {}
};

/// Steps 1-5 composed over every class: sieve, per-class records, lean
/// skipping, weight solving, sign search, canonical merge. Classes are
/// independent work units; with cfg.threads > 1 they are searched in
/// parallel and merged back in class order, so output is byte-identical to
/// the single-threaded run. Pass preloaded_classes to skip the sieve.
RunStats run(const RunConfig& cfg, SolutionSink& sink,
             const std::vector<i64>* preloaded_classes = nullptr);

}  // namespace resonance
