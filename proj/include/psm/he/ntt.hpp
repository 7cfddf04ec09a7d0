// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "psm/he/modarith.hpp"

namespace psm::he {

/// Negacyclic number-theoretic transform over Z_p[x]/(x^n + 1), n a power of
/// two. Harvey butterflies with Shoup-precomputed twiddles; intermediate
/// values ride in [0, 4p) and are reduced on output.
class NttTables {
public:
    NttTables() = default;
    NttTables(const Modulus& m, size_t n) : mod_(m), n_(n) {
        logn_ = 0;
        while ((size_t{1} << logn_) < n_) ++logn_;
        if ((size_t{1} << logn_) != n_) throw std::invalid_argument("ntt size not a power of two");
        u64 root = find_primitive_2n_root(m, n);
        u64 root_inv = m.inv(root);
        std::vector<u64> pw(n_), pwi(n_);
        pw[0] = pwi[0] = 1;
        for (size_t i = 1; i < n_; ++i) {
            pw[i] = m.mul(pw[i - 1], root);
            pwi[i] = m.mul(pwi[i - 1], root_inv);
        }
        w_.resize(n_);
        ws_.resize(n_);
        wi_.resize(n_);
        wis_.resize(n_);
        for (size_t i = 0; i < n_; ++i) {
            size_t r = 0;
            for (int b = 0; b < logn_; ++b) r |= ((i >> b) & 1u) << (logn_ - 1 - b);
            w_[i] = pw[r];
            wi_[i] = pwi[r];
            ws_[i] = m.shoup(w_[i]);
            wis_[i] = m.shoup(wi_[i]);
        }
        n_inv_ = m.inv(static_cast<u64>(n_ % m.p));
        n_inv_shoup_ = m.shoup(n_inv_);
    }

    size_t size() const { return n_; }
    const Modulus& modulus() const { return mod_; }

    /// In-place forward transform; input coefficients in [0, p), output values
    /// in [0, p).
    void forward(u64* a) const {
        const u64 p = mod_.p, two_p = 2 * p;
        size_t t = n_, m = 1;
        while (m < n_) {
            t >>= 1;
            for (size_t i = 0; i < m; ++i) {
                const u64 W = w_[m + i], Wsh = ws_[m + i];
                u64* x = a + 2 * i * t;
                u64* y = x + t;
                for (size_t j = 0; j < t; ++j) {
                    u64 u = x[j];
                    if (u >= two_p) u -= two_p;
                    u64 v = Modulus::mul_shoup_lazy(y[j], W, Wsh, p);
                    x[j] = u + v;
                    y[j] = u + two_p - v;
                }
            }
            m <<= 1;
        }
        for (size_t i = 0; i < n_; ++i) {
            u64 v = a[i];
            if (v >= two_p) v -= two_p;
            if (v >= p) v -= p;
            a[i] = v;
        }
    }

    /// In-place inverse transform; includes the 1/n scaling.
    void inverse(u64* a) const {
        const u64 p = mod_.p, two_p = 2 * p;
        size_t t = 1, m = n_;
        while (m > 1) {
            size_t h = m >> 1;
            for (size_t i = 0; i < h; ++i) {
                const u64 W = wi_[h + i], Wsh = wis_[h + i];
                u64* x = a + 2 * i * t;
                u64* y = x + t;
                for (size_t j = 0; j < t; ++j) {
                    u64 u = x[j], v = y[j];
                    u64 s = u + v;
                    if (s >= two_p) s -= two_p;
                    x[j] = s;
                    y[j] = Modulus::mul_shoup_lazy(u + two_p - v, W, Wsh, p);
                }
            }
            t <<= 1;
            m = h;
        }
        for (size_t i = 0; i < n_; ++i) {
            u64 v = Modulus::mul_shoup_lazy(a[i], n_inv_, n_inv_shoup_, p);
            if (v >= two_p) v -= two_p;
            if (v >= p) v -= p;
            a[i] = v;
        }
    }

private:
    Modulus mod_;
    size_t n_ = 0;
    int logn_ = 0;
    std::vector<u64> w_, ws_, wi_, wis_;  // bit-reversed twiddles + Shoup duals
    u64 n_inv_ = 0, n_inv_shoup_ = 0;
};

}  // namespace psm::he
