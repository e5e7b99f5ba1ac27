#pragma once

#include <bit>
#include <cassert>
#include <numeric>

#include "resonance/types.hpp"

namespace resonance {

/// Largest r with r*r <= n. Newton iteration started above the root, so it
/// converges monotonically onto the floor; no rounding to audit.
inline i64 isqrt(i64 n) {
    assert(n >= 0);
    if (n < 2) return n;
    int shift = (std::bit_width(static_cast<u64>(n)) + 1) / 2;
    i64 x = i64(1) << shift;
    while (true) {
        i64 y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    return x;
}

/// Largest r with r^4 <= n.
inline i64 iroot4(i64 n) { return isqrt(isqrt(n)); }

inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<unsigned __int128>(a) * b % m);
}

inline i64 pow_mod(i64 base, i64 exp, i64 mod) {
    assert(mod >= 1);
    i64 r = 1 % mod;
    i64 b = base % mod;
    if (b < 0) b += mod;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, b, mod);
        b = mul_mod(b, b, mod);
        exp >>= 1;
    }
    return r;
}

/// Modular inverse of a (mod m) for gcd(a, m) = 1, via extended Euclid.
inline i64 inv_mod(i64 a, i64 m) {
    i64 r0 = m, r1 = a % m;
    if (r1 < 0) r1 += m;
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        t0 -= q * t1;
        std::swap(t0, t1);
    }
    assert(r0 == 1);
    return t0 < 0 ? t0 + m : t0;
}

}  // namespace resonance
