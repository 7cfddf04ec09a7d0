// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <optional>
#include <stdexcept>

#include <sodium.h>

namespace psm {

/// Uniform random byte source. Two concrete modes share one type so that
/// protocol code does not care whether randomness is live or replayable:
///   - Rng::system()  pulls from the OS CSPRNG (mask sampling, key generation)
///   - Rng::seeded()  expands a 32-byte seed with ChaCha20 (tests, benches,
///     and ciphertext seed expansion, which must be reproducible by design)
class Rng {
public:
    static constexpr size_t kSeedBytes = 32;
    using Seed = std::array<uint8_t, kSeedBytes>;

    static Rng system() { return Rng(std::nullopt); }
    static Rng seeded(const Seed& seed) { return Rng(seed); }
    static Rng seeded(uint64_t s) {
        Seed seed{};
        std::memcpy(seed.data(), &s, sizeof(s));
        return Rng(seed);
    }

    static Seed fresh_seed() {
        ensure_sodium();
        Seed s;
        randombytes_buf(s.data(), s.size());
        return s;
    }

    void fill(void* out, size_t n) {
        if (seed_) {
            // ChaCha20 keystream; 8-byte little-endian block counter as nonce.
            std::array<uint8_t, 8> nonce{};
            uint64_t ctr = counter_++;
            std::memcpy(nonce.data(), &ctr, 8);
            std::memset(out, 0, n);
            crypto_stream_chacha20_xor(static_cast<unsigned char*>(out),
                                       static_cast<const unsigned char*>(out), n, nonce.data(),
                                       seed_->data());
        } else {
            randombytes_buf(out, n);
        }
    }

    uint64_t next_u64() {
        uint64_t v;
        fill(&v, sizeof(v));
        return v;
    }

    /// Unbiased value in [0, bound) via rejection sampling.
    uint64_t uniform_below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("uniform_below: zero bound");
        if ((bound & (bound - 1)) == 0) return next_u64() & (bound - 1);
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = next_u64();
        } while (v >= limit);
        return v % bound;
    }

    /// Unbiased value in [lo, hi] inclusive.
    uint64_t uniform_range(uint64_t lo, uint64_t hi) { return lo + uniform_below(hi - lo + 1); }

    static void ensure_sodium() {
        if (sodium_init() < 0) throw std::runtime_error("libsodium initialization failed");
    }

private:
    explicit Rng(std::optional<Seed> seed) : seed_(seed) { ensure_sodium(); }

    std::optional<Seed> seed_;
    uint64_t counter_ = 0;
};

}  // namespace psm
