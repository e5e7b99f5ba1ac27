#pragma once

#include <array>
#include <map>
#include <ostream>

#include "resonance/types.hpp"

namespace resonance {

constexpr int kBandCount = 5;

/// Per-run counters. Case tallies are indexed by degeneracy case 1..4 at
/// offset 0..3 and are reported three ways (quads enumerated, classes
/// exhibiting the case, solutions emitted). Quad/class tallies cover the
/// multiplicity >= 2 classes; each checked multiplicity-1 class would add one
/// more total-degeneracy quad (mult1_checked of them).
struct RunStats {
    WaveKind kind = WaveKind::gravity4;
    i64 domain = 0;
    QuotientMode quotient = QuotientMode::none;

    i64 class_count = 0;
    i64 mult1_count = 0;
    i64 mult1_skipped = 0;
    i64 mult1_checked = 0;
    i64 checked_classes = 0;  // classes actually searched
    i64 first_mult1_class = 0;
    i64 max_multiplicity = 0;

    std::array<i64, 4> case_quads{};
    std::array<i64, 4> case_classes{};
    std::array<i64, 4> case_solutions{};

    // Counts under both supported conventions, total and asymmetric, split
    // into five nested sub-domain bands by max |coordinate|.
    i64 canonical_total = 0;
    i64 canonical_asymmetric = 0;
    i64 orbit_total = 0;
    i64 orbit_asymmetric = 0;
    std::array<i64, kBandCount> band_total{};
    std::array<i64, kBandCount> band_asymmetric{};
    std::array<i64, kBandCount> band_orbit_total{};
    std::array<i64, kBandCount> band_orbit_asymmetric{};

    // What actually went to the sink under cfg.quotient.
    i64 solutions_total = 0;
    i64 solutions_asymmetric = 0;

    i64 case2_pairings = 0;

    // Decomposition-count histogram over multiplicity-1 classes (gravity).
    std::map<i64, i64> mult1_dec_histogram;

    i64 sieve_ms = 0;
    i64 total_ms = 0;

    /// Upper edge of band b (0-based): ceil-free D*(b+1)/5 split.
    i64 band_edge(int b) const { return domain * (b + 1) / 5; }
    /// Band of a solution whose largest |coordinate| is v.
    int band_of(i64 v) const {
        for (int b = 0; b < kBandCount - 1; ++b)
            if (v <= band_edge(b)) return b;
        return kBandCount - 1;
    }
};

/// Sectioned CSV with every counter, the per-case tallies, the cumulative
/// growth bands under each counting convention, and the decomposition
/// histogram.
void emit_stats_csv(const RunStats& st, std::ostream& os);

/// Decomposition-count histogram rows (dec,classes), ascending dec.
void emit_mult1_histogram(const RunStats& st, std::ostream& os);

/// Cumulative solution counts per nested sub-domain, one row per band:
/// band upper edge, then total/asymmetric under the canonical, directed
/// (both side orders counted) and sign-orbit conventions.
void emit_domain_growth(const RunStats& st, std::ostream& os);

/// Human-readable convention comparison printed at the end of a run.
void emit_convention_report(const RunStats& st, std::ostream& os);

}  // namespace resonance
