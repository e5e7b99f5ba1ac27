#include "resonance/two_squares.hpp"

#include <algorithm>
#include <stdexcept>

#include "resonance/intmath.hpp"

namespace resonance {

SpfTable::SpfTable(i64 limit) : limit_(limit) {
    if (limit < 1) throw std::invalid_argument("SpfTable: limit must be >= 1");
    spf_.assign(static_cast<size_t>(limit) + 1, 0);
    for (i64 i = 2; i <= limit; ++i) {
        if (spf_[static_cast<size_t>(i)] == 0) {
            primes_.push_back(i);
            for (i64 j = i; j <= limit; j += i) {
                auto& s = spf_[static_cast<size_t>(j)];
                if (s == 0) s = static_cast<std::uint32_t>(i);
            }
        }
    }
}

Factorization factorize(i64 m, const SpfTable& spf) {
    if (m < 1 || m > spf.limit())
        throw std::out_of_range("factorize: value outside table range");
    Factorization f;
    while (m > 1) {
        i64 p = spf.spf(m);
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        f.push_back({p, e});
    }
    return f;
}

i64 euler_delta(const Factorization& f) {
    i64 delta = 1;
    for (const auto& [p, e] : f) {
        if (p == 2) continue;
        if (p % 4 == 1)
            delta *= e + 1;
        else if (e % 2 != 0)
            return 0;
    }
    return delta;
}

namespace {

i64 ipow(i64 b, int e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Root of -1 mod prime p = 1 (mod 4): a quadratic non-residue raised to
// (p-1)/4. The non-residue scan is deterministic so results are reproducible.
i64 root_minus_one_mod_prime(i64 p) {
    for (i64 b = 2;; ++b) {
        if (pow_mod(b, (p - 1) / 2, p) == p - 1)
            return pow_mod(b, (p - 1) / 4, p);
    }
}

// Hensel lift of r with r^2 = -1 (mod p) up to modulus p^e.
i64 lift_root(i64 r, i64 p, int e) {
    i64 pk = p;
    for (int k = 1; k < e; ++k) {
        i64 pk1 = pk * p;
        i64 residue =
            static_cast<i64>(((static_cast<unsigned __int128>(r) * r + 1) / pk) % p);
        i64 h = mul_mod(residue, inv_mod((2 * r) % p, p), p);
        h = (p - h) % p;
        r += h * pk;
        pk = pk1;
    }
    return r;
}

// All roots of t^2 = -1 for a factored modulus, folded into (0, m/2).
std::vector<i64> roots_from_factorization(i64 m, const Factorization& f) {
    for (const auto& [p, e] : f) {
        if (p == 2 && e >= 2) return {};
        if (p % 4 == 3) return {};
    }
    if (m <= 2) return {};

    // CRT-combine +-root choices across the odd prime powers; the factor 2
    // contributes the fixed residue 1.
    std::vector<i64> residues = {0};
    i64 modulus = 1;
    auto combine = [&](const std::vector<i64>& opts, i64 pe) {
        std::vector<i64> next;
        next.reserve(residues.size() * opts.size());
        i64 inv = inv_mod(modulus % pe, pe);
        for (i64 r : residues)
            for (i64 s : opts) {
                i64 d = (s - r) % pe;
                if (d < 0) d += pe;
                next.push_back(r + modulus * mul_mod(d, inv, pe));
            }
        residues = std::move(next);
        modulus *= pe;
    };
    for (const auto& [p, e] : f) {
        if (p == 2) {
            combine({1}, 2);
        } else {
            i64 pe = ipow(p, e);
            i64 r = lift_root(root_minus_one_mod_prime(p), p, e);
            combine({r, pe - r}, pe);
        }
    }
    for (i64& t : residues) t = std::min(t, m - t);
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()),
                   residues.end());
    return residues;
}

// Primitive representations only; the divisor-squared loop in
// all_two_square_decompositions supplies the imprimitive ones.
std::vector<TwoSquareDecomposition> primitive_reps(i64 m,
                                                   const Factorization& f) {
    if (m == 1) return {{1, 0}};
    if (m == 2) return {{1, 1}};
    std::vector<TwoSquareDecomposition> reps;
    for (i64 t : roots_from_factorization(m, f))
        reps.push_back(cornacchia_primitive(m, t));
    return reps;
}

}  // namespace

std::vector<i64> sqrt_minus_one_roots(i64 m, const SpfTable& spf) {
    if (m < 1 || m > spf.limit())
        throw std::out_of_range("sqrt_minus_one_roots: value outside table range");
    if (m <= 2) return {};
    return roots_from_factorization(m, factorize(m, spf));
}

TwoSquareDecomposition cornacchia_primitive(i64 m, i64 t) {
    if (m < 2 || t < 1 || 2 * t >= m)
        throw std::invalid_argument("cornacchia_primitive: root out of range");
    if (mul_mod(t, t, m) != m - 1)
        throw std::invalid_argument("cornacchia_primitive: t^2 != -1 (mod m)");
    i64 r0 = m, r1 = t;
    while (r1 * r1 >= m) {
        i64 r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    i64 x = r1, y = r0 % r1;
    if (x * x + y * y != m)
        throw std::logic_error("cornacchia_primitive: remainder pair is not a "
                               "representation");
    return {x, y};
}

std::vector<TwoSquareDecomposition> all_two_square_decompositions(
    i64 m, const SpfTable& spf) {
    Factorization f = factorize(m, spf);

    // Divisors d with d^2 | m, via half exponents.
    std::vector<i64> square_divisors = {1};
    for (const auto& [p, e] : f) {
        size_t n = square_divisors.size();
        i64 pk = 1;
        for (int k = 1; k <= e / 2; ++k) {
            pk *= p;
            for (size_t i = 0; i < n; ++i)
                square_divisors.push_back(square_divisors[i] * pk);
        }
    }

    std::vector<TwoSquareDecomposition> out;
    for (i64 d : square_divisors) {
        i64 core = m / (d * d);
        Factorization cf;
        for (const auto& [p, e] : f) {
            int used = 0;
            i64 dd = d;
            while (dd % p == 0) {
                dd /= p;
                ++used;
            }
            if (e - 2 * used > 0) cf.push_back({p, e - 2 * used});
        }
        for (const auto& rep : primitive_reps(core, cf))
            out.push_back({d * rep.x, d * rep.y});
    }
    std::sort(out.begin(), out.end(),
              [](const TwoSquareDecomposition& a, const TwoSquareDecomposition& b) {
                  return a.x > b.x;
              });
    return out;
}

}  // namespace resonance
