/*
 * Copyright 2026 The linfield Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Polynomials over a prime field GF(p), stored as residue vectors with the
// constant term first. This is the bootstrap layer: field moduli are found and
// large extension fields are multiplied with these routines.

#pragma once

#include <utility>
#include <vector>

#include "arith.hpp"

namespace linfield::pf {

using Poly = std::vector<u32>;

inline int deg(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (a[i]) return i;
    }
    return -1;
}

inline void trim(Poly& a) { a.resize(static_cast<std::size_t>(deg(a) + 1)); }

inline u32 inv_mod(u32 a, u32 p) { return static_cast<u32>(arith::powmod(a, p - 2, p)); }

inline Poly add(const Poly& a, const Poly& b, u32 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b, u32 p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
    trim(r);
    return r;
}

inline Poly scale(const Poly& a, u32 c, u32 p) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<u32>(u64{a[i]} * c % p);
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, u32 p) {
    int da = deg(a), db = deg(b);
    if (da < 0 || db < 0) return {};
    // p < 2^16 keeps every product below 2^32, so the u64 sums cannot overflow.
    std::vector<u64> acc(static_cast<std::size_t>(da + db + 1), 0);
    for (int i = 0; i <= da; ++i) {
        u64 ai = a[i];
        if (!ai) continue;
        u64* row = acc.data() + i;
        for (int j = 0; j <= db; ++j) row[j] += ai * b[j];
    }
    Poly r(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<u32>(acc[i] % p);
    trim(r);
    return r;
}

/// a mod m for monic m.
inline Poly rem_monic(const Poly& a, const Poly& m, u32 p) {
    int d = deg(m), da = deg(a);
    if (da < d) {
        Poly r(a.begin(), a.begin() + (da + 1));
        return r;
    }
    std::vector<u64> w(a.begin(), a.begin() + (da + 1));
    for (int i = da; i >= d; --i) {
        u64 c = w[i] % p;
        w[i] = 0;
        if (!c) continue;
        u64 nc = p - c;
        u64* base = w.data() + (i - d);
        for (int j = 0; j < d; ++j) base[j] += nc * m[j];
    }
    Poly r(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) r[j] = static_cast<u32>(w[j] % p);
    trim(r);
    return r;
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, u32 p) {
    int db = deg(b);
    if (db < 0) throw Error("polynomial division by zero");
    Poly r = a;
    trim(r);
    int da = deg(r);
    if (da < db) return {Poly{}, r};
    Poly q(static_cast<std::size_t>(da - db + 1), 0);
    u32 inv = inv_mod(b[db], p);
    for (int i = da; i >= db; --i) {
        u32 c = static_cast<u32>(u64{r[i]} * inv % p);
        q[i - db] = c;
        if (!c) continue;
        u32 nc = p - c;
        for (int j = 0; j <= db; ++j) r[i - db + j] = static_cast<u32>((r[i - db + j] + u64{nc} * b[j]) % p);
    }
    trim(q);
    trim(r);
    return {q, r};
}

inline Poly make_monic(const Poly& a, u32 p) {
    int d = deg(a);
    if (d < 0) return {};
    return scale(a, inv_mod(a[d], p), p);
}

inline Poly gcd(Poly a, Poly b, u32 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        b = make_monic(b, p);
        Poly r = rem_monic(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u32 p) { return rem_monic(mul(a, b, p), m, p); }

inline Poly powmod(Poly base, u64 e, const Poly& m, u32 p) {
    Poly r{1};
    r = rem_monic(r, m, p);
    base = rem_monic(base, m, p);
    while (e) {
        if (e & 1) r = mulmod(r, base, m, p);
        e >>= 1;
        if (e) base = mulmod(base, base, m, p);
    }
    return r;
}

/// Inverse of a modulo m (m monic); throws when gcd(a, m) != 1.
inline Poly invmod(const Poly& a, const Poly& m, u32 p) {
    Poly r0 = m, r1 = rem_monic(a, m, p), t0{}, t1{1};
    trim(r0);
    while (deg(r1) >= 0) {
        auto [q, r] = divmod(r0, r1, p);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly t = sub(t0, mul(q, t1, p), p);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (deg(r0) != 0) throw Error("element is not invertible");
    return rem_monic(scale(t0, inv_mod(r0[0], p), p), m, p);
}

/// Irreducibility by distinct-degree splitting with early exit on the first factor found.
inline bool is_irreducible(const Poly& f, u32 p) {
    int d = deg(f);
    if (d < 1) return false;
    if (d == 1) return true;
    if (f[0] == 0) return false;
    Poly m = make_monic(f, p);
    Poly x{0, 1};
    Poly h = x;
    for (int i = 1; 2 * i <= d; ++i) {
        h = powmod(h, p, m, p);
        Poly g = gcd(sub(h, x, p), m, p);
        if (deg(g) > 0) return false;
    }
    return true;
}

}  // namespace linfield::pf
