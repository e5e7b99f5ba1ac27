#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace resonance {

using i64 = std::int64_t;
using u64 = std::uint64_t;

/// The two supported wave systems. The variant fixes the radical degree |c|
/// of the dispersion arithmetic and the admissibility rule for class indices.
enum class WaveKind { gravity4, planetary3 };

constexpr int radical_degree(WaveKind k) {
    return k == WaveKind::gravity4 ? 4 : 2;
}

inline const char* wave_kind_name(WaveKind k) {
    return k == WaveKind::gravity4 ? "gravity4" : "planetary3";
}

inline std::optional<WaveKind> parse_wave_kind(std::string_view s) {
    if (s == "gravity4") return WaveKind::gravity4;
    if (s == "planetary3") return WaveKind::planetary3;
    return std::nullopt;
}

/// How emitted solutions are quotiented by the global sign symmetries
/// (m-flip, n-flip, both). `none` keeps every canonical tuple.
enum class QuotientMode { none, sign_orbits };

inline const char* quotient_mode_name(QuotientMode q) {
    return q == QuotientMode::none ? "none" : "sign-orbits";
}

inline std::optional<QuotientMode> parse_quotient_mode(std::string_view s) {
    if (s == "none") return QuotientMode::none;
    if (s == "sign-orbits") return QuotientMode::sign_orbits;
    return std::nullopt;
}

// Largest domain for which 2*D^2 still fits the 32-bit smallest-prime-factor
// table entries.
constexpr i64 kMaxDomain = 46340;

struct RunConfig {
    WaveKind kind = WaveKind::gravity4;
    i64 domain = 0;       // D: coordinates range over [-D, D]
    i64 norm_bound = 0;   // 2*D^2: max of m^2 + n^2 in the domain
    QuotientMode quotient = QuotientMode::none;
    bool include_zero_sum = false;  // admit standing quartets k2=-k1, k4=-k3
    bool emit_case2 = false;        // emit cross-class trivial pairings
    bool cache_weight_quads = false;
    int threads = 1;

    static RunConfig make(WaveKind kind, i64 domain) {
        if (domain < 1 || domain > kMaxDomain)
            throw std::invalid_argument("domain must be in [1, " +
                                        std::to_string(kMaxDomain) + "]");
        RunConfig cfg;
        cfg.kind = kind;
        cfg.domain = domain;
        cfg.norm_bound = 2 * domain * domain;
        return cfg;
    }
};

/// Integer lattice node (m, n), never (0, 0) for physical waves.
struct WaveVector {
    i64 m = 0;
    i64 n = 0;

    i64 norm_sq() const { return m * m + n * n; }
    friend auto operator<=>(const WaveVector&, const WaveVector&) = default;
};

}  // namespace resonance
