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

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linfield {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Base class of everything the library throws for invalid mathematical input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace arith {

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin, exact for every 64-bit input.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

inline u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    // Fixed seed: factorizations must not depend on run-to-run state.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    for (;;) {
        u64 c = rng() % (n - 1) + 1;
        u64 x = rng() % n, y = x, d = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

inline void factor_into(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    u64 d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
    if (n == 0) throw Error("factorize: zero has no factorization");
    std::map<u64, unsigned> m;
    detail::factor_into(n, m);
    return {m.begin(), m.end()};
}

inline std::optional<u64> checked_add(u64 a, u64 b) {
    if (a > UINT64_MAX - b) return std::nullopt;
    return a + b;
}

inline std::optional<u64> checked_mul(u64 a, u64 b) {
    if (a != 0 && b > UINT64_MAX / a) return std::nullopt;
    return a * b;
}

inline std::optional<u64> checked_pow(u64 base, unsigned exp) {
    u64 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
        r *= base;
    }
    return r;
}

inline u64 ipow(u64 base, unsigned exp) {
    auto r = checked_pow(base, exp);
    if (!r) throw Error("integer overflow computing " + std::to_string(base) + "^" + std::to_string(exp));
    return *r;
}

inline u64 lcm(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

/// Decomposes q = p^e. Returns nullopt when q is not a prime power.
inline std::optional<std::pair<u32, unsigned>> prime_power(u64 q) {
    if (q < 2) return std::nullopt;
    auto f = factorize(q);
    if (f.size() != 1 || f[0].first > UINT32_MAX) return std::nullopt;
    return std::make_pair(static_cast<u32>(f[0].first), f[0].second);
}

inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> ds{1};
    for (auto [p, e] : factorize(n)) {
        std::size_t m = ds.size();
        u64 pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < m; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

}  // namespace arith
}  // namespace linfield
