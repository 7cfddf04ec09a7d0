// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "psm/common/bytes.hpp"

namespace psm::he {

/// Parameter profiles. `paper_original` reconstructs the ~204-bit coefficient
/// chain that depletes its noise budget on the full membership circuit;
/// `default_safe` is the standard 128-bit chain that keeps a positive budget.
enum class Profile : uint8_t { paper_original = 0, default_safe = 1, custom = 2 };

inline const char* to_string(Profile p) {
    switch (p) {
        case Profile::paper_original: return "paper_original";
        case Profile::default_safe: return "default_safe";
        default: return "custom";
    }
}

class ParamError : public std::invalid_argument {
public:
    explicit ParamError(const std::string& what) : std::invalid_argument(what) {}
};

/// Maximum total coefficient-modulus bits for 128-bit (classical) security,
/// per the homomorphic encryption standard tables.
inline int max_coeff_bits_128(size_t poly_degree) {
    switch (poly_degree) {
        case 4096: return 109;
        case 8192: return 218;
        case 16384: return 438;
        default: return 0;
    }
}

struct HEParams {
    size_t poly_degree = 0;                  // N: power of two, slot count
    uint64_t plain_modulus = 0;              // t: prime, t = 1 mod 2N
    std::vector<int> coeff_modulus_profile;  // prime bit sizes; last is the
                                             // key-switching prime
    int security_level = 128;                // 0 marks explicitly insecure test sets

    /// Number of primes ciphertexts actually live under (all but the
    /// key-switching prime).
    size_t data_prime_count() const { return coeff_modulus_profile.size() - 1; }
    int total_coeff_bits() const {
        return std::accumulate(coeff_modulus_profile.begin(), coeff_modulus_profile.end(), 0);
    }

    void validate() const {
        if (poly_degree < 4 || (poly_degree & (poly_degree - 1)) != 0)
            throw ParamError("poly_degree must be a power of two >= 4");
        if (coeff_modulus_profile.size() < 2)
            throw ParamError("coefficient chain needs at least two primes");
        if (plain_modulus < 2) throw ParamError("plain modulus too small");
        if ((plain_modulus - 1) % (2 * poly_degree) != 0)
            throw ParamError("plain modulus not congruent to 1 mod 2N; batching unavailable");
        if (security_level == 128) {
            int cap = max_coeff_bits_128(poly_degree);
            if (cap == 0) throw ParamError("unsupported N for 128-bit security");
            if (total_coeff_bits() > cap)
                throw ParamError("coefficient modulus exceeds 128-bit security budget");
        } else if (security_level != 0) {
            throw ParamError("security_level must be 128 or 0");
        }
    }

    /// Insecure parameter sets for unit tests and toy-scale oracles.
    static HEParams custom_insecure(size_t poly_degree, uint64_t plain_modulus,
                                    std::vector<int> prime_bits) {
        HEParams p;
        p.poly_degree = poly_degree;
        p.plain_modulus = plain_modulus;
        p.coeff_modulus_profile = std::move(prime_bits);
        p.security_level = 0;
        p.validate();
        return p;
    }

    uint64_t fingerprint() const;

    void serialize(ByteWriter& w) const {
        w.u8(1);  // format version
        w.u64(poly_degree);
        w.u64(plain_modulus);
        w.u32(static_cast<uint32_t>(security_level));
        w.u32(static_cast<uint32_t>(coeff_modulus_profile.size()));
        for (int b : coeff_modulus_profile) w.u8(static_cast<uint8_t>(b));
    }
    static HEParams deserialize(ByteReader& r) {
        if (r.u8() != 1) throw SerializationError("unknown HEParams version");
        HEParams p;
        p.poly_degree = r.u64();
        p.plain_modulus = r.u64();
        p.security_level = static_cast<int>(r.u32());
        uint32_t n = r.u32();
        p.coeff_modulus_profile.resize(n);
        for (uint32_t i = 0; i < n; ++i) p.coeff_modulus_profile[i] = r.u8();
        p.validate();
        return p;
    }

    bool operator==(const HEParams&) const = default;
};

/// Builds the parameter set for a profile at the given ring degree.
///
/// Supported degrees are 2^12..2^14. The plaintext modulus is 1,032,193 at
/// N=2^13 and otherwise the smallest 20-bit prime congruent to 1 mod 2N.
/// paper_original is only defined at N=2^13, where the reference
/// configuration it reconstructs was reported.
HEParams gen_params(Profile profile, size_t poly_degree);

}  // namespace psm::he
