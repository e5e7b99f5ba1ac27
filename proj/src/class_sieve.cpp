#include "resonance/class_sieve.hpp"

#include <cassert>
#include <stdexcept>

#include "resonance/intmath.hpp"

namespace resonance {

bool is_class_index(i64 q, WaveKind kind) {
    if (q < 1) return false;
    const bool gravity = kind == WaveKind::gravity4;
    i64 rest = q;
    for (i64 p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (gravity) {
            if (e >= 4) return false;
            if (p % 4 == 3 && e != 2) return false;
        } else {
            if (e >= 2) return false;
            if (p % 4 == 3) return false;
        }
    }
    if (rest > 1 && rest % 4 == 3) return false;  // trailing prime, exponent 1
    return true;
}

std::vector<i64> sieve_classes(const RunConfig& cfg, const SpfTable& spf) {
    const i64 nb = cfg.norm_bound;
    if (spf.limit() < nb)
        throw std::invalid_argument("sieve_classes: spf table smaller than 2D^2");

    std::vector<bool> keep(static_cast<size_t>(nb) + 1, true);
    keep[0] = false;

    if (cfg.kind == WaveKind::gravity4) {
        // Pass 1: strike fourth-power multiples.
        for (i64 p : spf.primes()) {
            i64 p4 = p * p * p * p;
            if (p4 > nb) break;
            for (i64 n = p4; n <= nb; n += p4) keep[static_cast<size_t>(n)] = false;
        }
        // Pass 2: a prime p = 3 (mod 4) must divide exactly twice. For
        // n = a*p keep only v_p(n) = 2, i.e. p | a but p^2 does not.
        for (i64 p : spf.primes()) {
            if (p % 4 != 3 || p > nb) continue;
            for (i64 a = 1; a * p <= nb; ++a) {
                if (a % p != 0)
                    keep[static_cast<size_t>(a * p)] = false;
                else if ((a / p) % p == 0)
                    keep[static_cast<size_t>(a * p)] = false;
            }
        }
    } else {
        // Square-free pass.
        for (i64 p : spf.primes()) {
            i64 p2 = p * p;
            if (p2 > nb) break;
            for (i64 n = p2; n <= nb; n += p2) keep[static_cast<size_t>(n)] = false;
        }
        // No prime p = 3 (mod 4) at all.
        for (i64 p : spf.primes()) {
            if (p % 4 != 3 || p > nb) continue;
            for (i64 n = p; n <= nb; n += p) keep[static_cast<size_t>(n)] = false;
        }
    }

    std::vector<i64> classes;
    for (i64 q = 1; q <= nb; ++q)
        if (keep[static_cast<size_t>(q)]) classes.push_back(q);
    return classes;
}

i64 multiplicity(i64 q, const RunConfig& cfg) {
    assert(q >= 1 && q <= cfg.norm_bound);
    const i64 cap = cfg.norm_bound / q;  // g^|c| <= cap
    const int c = radical_degree(cfg.kind);
    auto fits = [&](i64 g) {
        i64 v = 1;
        for (int i = 0; i < c; ++i) {
            v *= g;
            if (v > cap) return false;
        }
        return true;
    };
    i64 lo = 1, hi = 2;
    while (fits(hi)) hi *= 2;
    while (hi - lo > 1) {
        i64 mid = lo + (hi - lo) / 2;
        (fits(mid) ? lo : hi) = mid;
    }
    return lo;
}

ClassRecord make_class_record(i64 q, const RunConfig& cfg, const SpfTable& spf) {
    ClassRecord rec;
    rec.q = q;
    rec.mul = multiplicity(q, cfg);
    rec.decs.reserve(static_cast<size_t>(rec.mul));
    const int c = radical_degree(cfg.kind);
    for (i64 g = 1; g <= rec.mul; ++g) {
        i64 t = q;
        for (int i = 0; i < c; ++i) t *= g;
        rec.decs.push_back(all_two_square_decompositions(t, spf));
    }
    for (const auto& d : rec.decs.front())
        if (d.x <= cfg.domain) rec.dec_count_in_domain += (d.x == d.y) ? 1 : 2;
    return rec;
}

}  // namespace resonance
