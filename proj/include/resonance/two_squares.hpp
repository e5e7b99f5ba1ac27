#pragma once

#include <vector>

#include "resonance/types.hpp"

namespace resonance {

/// One representation m = x^2 + y^2, stored with x >= y >= 0.
struct TwoSquareDecomposition {
    i64 x = 0;
    i64 y = 0;
    friend auto operator<=>(const TwoSquareDecomposition&,
                            const TwoSquareDecomposition&) = default;
};

struct PrimePower {
    i64 p = 0;
    int e = 0;
    friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly ascending primes.
using Factorization = std::vector<PrimePower>;

/// Smallest-prime-factor table over 2..limit; built once per run, then
/// read-only shared across threads.
class SpfTable {
  public:
    explicit SpfTable(i64 limit);

    i64 limit() const { return limit_; }
    i64 spf(i64 n) const { return spf_[static_cast<size_t>(n)]; }
    const std::vector<i64>& primes() const { return primes_; }

  private:
    i64 limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<i64> primes_;
};

/// Exact factorization of 1 <= m <= table limit; rejects anything larger.
Factorization factorize(i64 m, const SpfTable& spf);

/// All t in (0, m/2) with t^2 = -1 (mod m), ascending. Empty when none exist
/// (4 | m, or a prime = 3 mod 4 divides m, or m <= 2).
std::vector<i64> sqrt_minus_one_roots(i64 m, const SpfTable& spf);

/// Euclidean remainder run m, t, ...: the first remainder below sqrt(m)
/// paired with its successor gives a primitive representation of m.
TwoSquareDecomposition cornacchia_primitive(i64 m, i64 t);

/// Every x >= y >= 0 with x^2 + y^2 = m, sorted by descending x. Primitive
/// representations are scaled by each divisor d with d^2 | m; the y = 0 and
/// x = y representations come out of the d-loop as the m/d^2 in {1, 2} cases.
std::vector<TwoSquareDecomposition> all_two_square_decompositions(
    i64 m, const SpfTable& spf);

/// Representation-count invariant delta: product of (e+1) over primes
/// p = 1 mod 4, zeroed by any odd exponent of a prime p = 3 mod 4.
i64 euler_delta(const Factorization& f);

}  // namespace resonance
