// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace psm::he {

using u64 = uint64_t;
using u128 = unsigned __int128;

/// Word-size prime modulus with Barrett constants precomputed.
/// All arithmetic assumes p < 2^62 so that lazy sums stay below 2^64.
struct Modulus {
    u64 p = 0;
    u64 ratio_hi = 0;  // floor(2^128 / p), high word
    u64 ratio_lo = 0;  // floor(2^128 / p), low word

    Modulus() = default;
    explicit Modulus(u64 prime) : p(prime) {
        if (p < 2 || p >= (1ULL << 62)) throw std::invalid_argument("modulus out of range");
        u128 b = (u128)1 << 64;
        ratio_hi = static_cast<u64>(b / p);
        u64 rem = static_cast<u64>(b % p);
        ratio_lo = static_cast<u64>(((u128)rem << 64) / p);
    }

    /// Barrett reduction of a 128-bit value.
    u64 reduce128(u128 z) const {
        u64 z0 = static_cast<u64>(z);
        u64 z1 = static_cast<u64>(z >> 64);
        // q ~= floor(z * ratio / 2^128); off by at most 1.
        u64 carry = static_cast<u64>(((u128)z0 * ratio_lo) >> 64);
        u128 u = (u128)z0 * ratio_hi;
        u128 v = (u128)z1 * ratio_lo;
        u128 mid = (u128)static_cast<u64>(u) + static_cast<u64>(v) + carry;
        u64 q = z1 * ratio_hi + static_cast<u64>(u >> 64) + static_cast<u64>(v >> 64) +
                static_cast<u64>(mid >> 64);
        u64 r = z0 - q * p;
        return r >= p ? r - p : r;
    }

    u64 reduce(u64 a) const { return reduce128(a); }
    u64 mul(u64 a, u64 b) const { return reduce128((u128)a * b); }
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }

    u64 pow(u64 a, u64 e) const {
        u64 r = 1;
        a = a >= p ? reduce(a) : a;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    /// Inverse modulo a prime.
    u64 inv(u64 a) const { return pow(a, p - 2); }

    /// Shoup precomputation for a fixed multiplicand w: floor(w * 2^64 / p).
    u64 shoup(u64 w) const { return static_cast<u64>(((u128)w << 64) / p); }
    /// Result in [0, 2p); caller reduces when needed.
    static u64 mul_shoup_lazy(u64 a, u64 w, u64 w_shoup, u64 p) {
        u64 q = static_cast<u64>(((u128)a * w_shoup) >> 64);
        return a * w - q * p;
    }
    u64 mul_shoup(u64 a, u64 w, u64 w_shoup) const {
        u64 r = mul_shoup_lazy(a, w, w_shoup, p);
        return r >= p ? r - p : r;
    }
};

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == sp) return true;
        if (n % sp == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    Modulus m(n);
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = m.pow(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = m.mul(x, x);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

/// Largest prime below 2^bits congruent to 1 mod `cong`, skipping `taken`.
/// Deterministic, so independently configured peers derive identical chains.
inline u64 make_ntt_prime(int bits, u64 cong, const std::vector<u64>& taken) {
    if (bits < 21 || bits > 61) throw std::invalid_argument("prime size out of range");
    u64 k = ((1ULL << bits) - 1) / cong;
    while (k > 0) {
        u64 p = k * cong + 1;
        if (p < (1ULL << (bits - 1))) break;
        bool used = false;
        for (u64 t : taken)
            if (t == p) used = true;
        if (!used && is_prime_u64(p)) return p;
        --k;
    }
    throw std::runtime_error("no NTT prime found for requested size");
}

/// Primitive 2n-th root of unity modulo p (p prime, 2n | p-1).
inline u64 find_primitive_2n_root(const Modulus& m, size_t n) {
    u64 group = 2 * static_cast<u64>(n);
    if ((m.p - 1) % group != 0) throw std::invalid_argument("modulus lacks 2n-th roots");
    u64 quot = (m.p - 1) / group;
    for (u64 g = 2;; ++g) {
        u64 cand = m.pow(g, quot);
        if (m.pow(cand, static_cast<u64>(n)) == m.p - 1) return cand;  // order exactly 2n
        if (g > 1'000'000) throw std::runtime_error("no primitive root found");
    }
}

}  // namespace psm::he
