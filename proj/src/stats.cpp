#include "resonance/stats.hpp"

namespace resonance {

namespace {

// Side-swapped representatives are distinct for every quad (all four vectors
// differ), so the directed count is exactly twice the canonical one. Triads
// have no side swap.
i64 directed_factor(WaveKind kind) {
    return kind == WaveKind::gravity4 ? 2 : 1;
}

}  // namespace

void emit_stats_csv(const RunStats& st, std::ostream& os) {
    os << "section,key,value\n";
    os << "meta,kind," << wave_kind_name(st.kind) << "\n";
    os << "meta,domain," << st.domain << "\n";
    os << "meta,quotient," << quotient_mode_name(st.quotient) << "\n";
    os << "summary,class_count," << st.class_count << "\n";
    os << "summary,mult1_count," << st.mult1_count << "\n";
    os << "summary,mult1_skipped," << st.mult1_skipped << "\n";
    os << "summary,mult1_checked," << st.mult1_checked << "\n";
    os << "summary,checked_classes," << st.checked_classes << "\n";
    os << "summary,first_mult1_class," << st.first_mult1_class << "\n";
    os << "summary,max_multiplicity," << st.max_multiplicity << "\n";
    os << "summary,solutions_total," << st.solutions_total << "\n";
    os << "summary,solutions_asymmetric," << st.solutions_asymmetric << "\n";
    os << "summary,case2_pairings," << st.case2_pairings << "\n";
    os << "summary,sieve_ms," << st.sieve_ms << "\n";
    os << "summary,total_ms," << st.total_ms << "\n";
    for (int c = 0; c < 4; ++c)
        os << "case," << c + 1 << ',' << st.case_quads[c] << ','
           << st.case_classes[c] << ',' << st.case_solutions[c] << "\n";

    i64 df = directed_factor(st.kind);
    os << "convention,canonical,total," << st.canonical_total << "\n";
    os << "convention,canonical,asymmetric," << st.canonical_asymmetric << "\n";
    os << "convention,directed,total," << df * st.canonical_total << "\n";
    os << "convention,directed,asymmetric," << df * st.canonical_asymmetric
       << "\n";
    os << "convention,sign-orbits,total," << st.orbit_total << "\n";
    os << "convention,sign-orbits,asymmetric," << st.orbit_asymmetric << "\n";
    os << "convention,directed-sign-orbits,total," << df * st.orbit_total
       << "\n";
    os << "convention,directed-sign-orbits,asymmetric,"
       << df * st.orbit_asymmetric << "\n";

    i64 ct = 0, ca = 0, ot = 0, oa = 0;
    for (int b = 0; b < kBandCount; ++b) {
        ct += st.band_total[b];
        ca += st.band_asymmetric[b];
        ot += st.band_orbit_total[b];
        oa += st.band_orbit_asymmetric[b];
        os << "growth," << st.band_edge(b) << ',' << ct << ',' << ca << ','
           << df * ct << ',' << df * ca << ',' << ot << ',' << oa << "\n";
    }
    for (const auto& [dec, classes] : st.mult1_dec_histogram)
        os << "dec_histogram," << dec << ',' << classes << "\n";
}

void emit_mult1_histogram(const RunStats& st, std::ostream& os) {
    os << "dec,classes\n";
    for (const auto& [dec, classes] : st.mult1_dec_histogram)
        os << dec << ',' << classes << "\n";
}

void emit_domain_growth(const RunStats& st, std::ostream& os) {
    i64 df = directed_factor(st.kind);
    os << "upper,total_canonical,asym_canonical,total_directed,asym_directed,"
          "total_orbit,asym_orbit\n";
    i64 ct = 0, ca = 0, ot = 0, oa = 0;
    for (int b = 0; b < kBandCount; ++b) {
        ct += st.band_total[b];
        ca += st.band_asymmetric[b];
        ot += st.band_orbit_total[b];
        oa += st.band_orbit_asymmetric[b];
        os << st.band_edge(b) << ',' << ct << ',' << ca << ',' << df * ct << ','
           << df * ca << ',' << ot << ',' << oa << "\n";
    }
}

void emit_convention_report(const RunStats& st, std::ostream& os) {
    i64 df = directed_factor(st.kind);
    os << "solution counts by convention (total / asymmetric):\n";
    os << "  canonical            " << st.canonical_total << " / "
       << st.canonical_asymmetric << "\n";
    os << "  directed             " << df * st.canonical_total << " / "
       << df * st.canonical_asymmetric << "\n";
    os << "  sign-orbits          " << st.orbit_total << " / "
       << st.orbit_asymmetric << "\n";
    os << "  directed-sign-orbits " << df * st.orbit_total << " / "
       << df * st.orbit_asymmetric << "\n";
}

}  // namespace resonance
