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

/**
 * @file field.hpp
 * @brief Finite fields GF(p^k) with deterministic moduli and compatible embeddings.
 *
 * Every field is GF(p)[x]/(m) where m is the least monic irreducible polynomial
 * of degree k, ordering polynomials by the integer sum c_i p^i of their lower
 * coefficients. Elements are coordinate vectors in the power basis 1, x, ...,
 * x^{k-1}; the same integer encoding orders elements ("lex-least").
 *
 * Fields with at most 2^20 elements additionally get log/exp/Zech tables on
 * first use. Larger fields fall back to polynomial arithmetic mod m.
 *
 * Embeddings GF(p^d) -> GF(p^k) send the class of x to a root of the
 * GF(p^d) modulus. The root is the lex-least one that is consistent with the
 * embeddings of every intermediate subfield, so the embeddings of a tower
 * always commute.
 */

#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "arith.hpp"
#include "gfp_linalg.hpp"
#include "prime_poly.hpp"

namespace linfield {

using Coords = std::vector<u32>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

FieldPtr field_create(u32 p, unsigned k);

/// Lex order on coordinate vectors: highest coordinate decides first.
inline bool coords_less(const Coords& a, const Coords& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

/// Log/exp/Zech tables of a small field, indexed by element code.
class CodeTables {
public:
    static constexpr u32 kNoLog = UINT32_MAX;

    u32 p = 0;
    unsigned k = 0;
    u32 size = 0;  // field order
    u32 n = 0;     // multiplicative group order, size - 1
    u32 generator = 0;
    std::vector<u32> exp;  // 2n entries so log sums need no reduction
    std::vector<u32> log;
    std::vector<u32> zech;  // log(1 + g^i), odd-characteristic extension fields only

    u32 add(u32 a, u32 b) const {
        if (p == 2) return a ^ b;
        if (k == 1) {
            u32 s = a + b;
            return s >= p ? s - p : s;
        }
        if (!a) return b;
        if (!b) return a;
        u32 la = log[a], lb = log[b];
        u32 d = lb >= la ? lb - la : lb + n - la;
        u32 z = zech[d];
        if (z == kNoLog) return 0;
        return exp[la + z];
    }
    u32 neg(u32 a) const {
        if (p == 2 || a == 0) return a;
        if (k == 1) return p - a;
        return exp[log[a] + n / 2];
    }
    u32 sub(u32 a, u32 b) const { return add(a, neg(b)); }
    u32 mul(u32 a, u32 b) const {
        if (!a || !b) return 0;
        return exp[log[a] + log[b]];
    }
    u32 inv(u32 a) const {
        if (!a) throw Error("inverse of zero");
        return exp[(n - log[a]) % n];
    }
    u32 div(u32 a, u32 b) const { return mul(a, inv(b)); }
    u32 pow(u32 a, u64 e) const {
        if (e == 0) return 1;
        if (!a) return 0;
        return exp[static_cast<u32>(u64{log[a]} * (e % n) % n)];
    }
};

class Field {
public:
    static constexpr u64 kTableCap = u64{1} << 20;

    Field(u32 p, unsigned k, pf::Poly modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {
        size_ = arith::checked_pow(p_, k_);
    }

    u32 characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    const pf::Poly& modulus() const { return modulus_; }
    std::optional<u64> size() const { return size_; }
    u64 order() const {
        if (!size_) throw Error("field order exceeds 64 bits");
        return *size_;
    }
    bool tabulated() const { return size_ && *size_ <= kTableCap; }
    bool is_prime_field() const { return k_ == 1; }

    bool same_as(const Field& o) const { return p_ == o.p_ && k_ == o.k_; }

    Coords zero() const { return Coords(k_, 0); }
    Coords one() const {
        Coords c(k_, 0);
        c[0] = 1 % p_;
        return c;
    }
    Coords from_int(long long v) const {
        Coords c(k_, 0);
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        c[0] = static_cast<u32>(r);
        return c;
    }
    bool is_zero(const Coords& a) const {
        for (u32 v : a)
            if (v) return false;
        return true;
    }

    Coords add(const Coords& a, const Coords& b) const {
        Coords r(k_);
        for (unsigned i = 0; i < k_; ++i) {
            u32 s = a[i] + b[i];
            r[i] = s >= p_ ? s - p_ : s;
        }
        return r;
    }
    Coords sub(const Coords& a, const Coords& b) const {
        Coords r(k_);
        for (unsigned i = 0; i < k_; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p_ - b[i];
        return r;
    }
    Coords neg(const Coords& a) const {
        Coords r(k_);
        for (unsigned i = 0; i < k_; ++i) r[i] = a[i] ? p_ - a[i] : 0;
        return r;
    }
    Coords scale(const Coords& a, u32 c) const {
        Coords r(k_);
        for (unsigned i = 0; i < k_; ++i) r[i] = static_cast<u32>(u64{a[i]} * c % p_);
        return r;
    }
    Coords mul(const Coords& a, const Coords& b) const {
        if (k_ == 1) return Coords{static_cast<u32>(u64{a[0]} * b[0] % p_)};
        if (tabulated()) {
            const auto& t = tables();
            return decode(t.mul(static_cast<u32>(encode(a)), static_cast<u32>(encode(b))));
        }
        return pad(pf::mulmod(a, b, modulus_, p_));
    }
    Coords inv(const Coords& a) const {
        if (is_zero(a)) throw Error("inverse of zero");
        if (k_ == 1) return Coords{pf::inv_mod(a[0], p_)};
        if (tabulated()) return decode(tables().inv(static_cast<u32>(encode(a))));
        return pad(pf::invmod(a, modulus_, p_));
    }
    Coords pow(const Coords& a, u64 e) const {
        if (tabulated()) return decode(tables().pow(static_cast<u32>(encode(a)), e));
        return pad(pf::powmod(a, e, modulus_, p_));
    }

    u64 encode(const Coords& a) const {
        if (!size_) throw Error("element codes need a field of at most 2^64 elements");
        u64 c = 0;
        for (unsigned i = k_; i-- > 0;) c = c * p_ + a[i];
        return c;
    }
    Coords decode(u64 code) const {
        Coords c(k_);
        for (unsigned i = 0; i < k_; ++i) {
            c[i] = static_cast<u32>(code % p_);
            code /= p_;
        }
        return c;
    }

    /// Tables are built on first use; only valid for tabulated fields.
    const CodeTables& tables() const {
        if (!tabulated()) throw Error("field " + to_string() + " is too large for table arithmetic");
        std::call_once(tables_once_, [this] { build_tables(); });
        return tables_;
    }

    /// "GF(p^k; modulus)" with the modulus written constant term first.
    std::string to_string() const {
        std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + "; ";
        bool first = true;
        for (std::size_t i = 0; i < modulus_.size(); ++i) {
            if (!modulus_[i]) continue;
            if (!first) s += " + ";
            first = false;
            std::string mono = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
            if (i == 0 || modulus_[i] != 1) {
                s += std::to_string(modulus_[i]);
                if (i) s += "*";
            }
            s += mono;
        }
        return s + ")";
    }

    /// Image in this field of the class of x of GF(p^d), for d | k, d > 1.
    Coords subfield_root(unsigned d) const;

    /// GF(p)-basis of the unique subfield of order p^d, as kernel of z -> z^{p^d} - z.
    std::vector<Coords> subfield_basis(unsigned d) const;

    /// Horner evaluation of a GF(p)-polynomial at z.
    Coords eval_prime_poly(const pf::Poly& f, const Coords& z) const {
        Coords r = zero();
        for (int i = pf::deg(f); i >= 0; --i) {
            r = mul(r, z);
            r[0] = (r[0] + f[i]) % p_;
        }
        return r;
    }

private:
    Coords pad(pf::Poly a) const {
        a.resize(k_, 0);
        return a;
    }

    void build_tables() const;
    Coords compute_subfield_root(unsigned d) const;

    u32 p_;
    unsigned k_;
    pf::Poly modulus_;
    std::optional<u64> size_;

    mutable std::once_flag tables_once_;
    mutable CodeTables tables_;

    mutable std::mutex cache_mu_;
    mutable std::map<unsigned, Coords> root_cache_;
};

namespace detail {

inline pf::Poly lex_least_irreducible(u32 p, unsigned k) {
    if (k == 1) return {0, 1};
    for (u64 c = 1;; ++c) {
        if (c % p == 0) continue;
        pf::Poly f(k + 1, 0);
        u64 v = c;
        for (unsigned i = 0; i < k; ++i) {
            f[i] = static_cast<u32>(v % p);
            v /= p;
        }
        if (v) throw Error("no irreducible polynomial found");
        f[k] = 1;
        if (pf::is_irreducible(f, p)) return f;
    }
}

}  // namespace detail

inline void Field::build_tables() const {
    CodeTables& t = tables_;
    t.p = p_;
    t.k = k_;
    t.size = static_cast<u32>(*size_);
    t.n = t.size - 1;
    auto factors = arith::factorize(t.n == 0 ? 1 : t.n);
    auto is_primitive = [&](const Coords& c) {
        for (auto [r, e] : factors) {
            (void)e;
            Coords v = k_ == 1 ? Coords{static_cast<u32>(arith::powmod(c[0], t.n / r, p_))}
                               : pad(pf::powmod(c, t.n / r, modulus_, p_));
            if (v == one()) return false;
        }
        return true;
    };
    Coords g;
    for (u64 code = 1; code < t.size; ++code) {
        Coords c = decode(code);
        if (t.n == 1 || is_primitive(c)) {
            g = c;
            t.generator = static_cast<u32>(code);
            break;
        }
    }
    t.exp.assign(2 * static_cast<std::size_t>(t.n), 0);
    t.log.assign(t.size, CodeTables::kNoLog);
    Coords cur = one();
    for (u32 i = 0; i < t.n; ++i) {
        u32 code = static_cast<u32>(encode(cur));
        t.exp[i] = t.exp[i + t.n] = code;
        t.log[code] = i;
        cur = k_ == 1 ? Coords{static_cast<u32>(u64{cur[0]} * g[0] % p_)} : pad(pf::mulmod(cur, g, modulus_, p_));
    }
    if (p_ != 2 && k_ > 1) {
        t.zech.assign(t.n, CodeTables::kNoLog);
        for (u32 i = 0; i < t.n; ++i) {
            u32 e = t.exp[i];
            u32 e1 = (e % p_ == p_ - 1) ? e - (p_ - 1) : e + 1;
            t.zech[i] = e1 == 0 ? CodeTables::kNoLog : t.log[e1];
        }
    }
}

inline std::vector<Coords> Field::subfield_basis(unsigned d) const {
    if (d == 0 || k_ % d != 0) throw Error("no subfield of degree " + std::to_string(d) + " in " + to_string());
    Coords x = zero();
    if (k_ > 1) x[1] = 1;
    Coords y = x;
    for (unsigned i = 0; i < d; ++i) y = pow(y, p_);
    gfp::Matrix m(k_, k_);
    Coords cur = one();
    for (unsigned i = 0; i < k_; ++i) {
        Coords col = cur;
        col[i] = (col[i] + p_ - 1) % p_;
        m.set_column(i, col);
        cur = mul(cur, y);
    }
    return gfp::kernel(m, p_);
}

inline Coords Field::subfield_root(unsigned d) const {
    if (d <= 1 || k_ % d != 0) throw Error("no proper subfield generator of degree " + std::to_string(d));
    if (d == k_) {
        Coords x = zero();
        x[1] = 1;
        return x;
    }
    {
        std::lock_guard lock(cache_mu_);
        auto it = root_cache_.find(d);
        if (it != root_cache_.end()) return it->second;
    }
    Coords root = compute_subfield_root(d);
    std::lock_guard lock(cache_mu_);
    return root_cache_.emplace(d, std::move(root)).first->second;
}

inline Coords Field::compute_subfield_root(unsigned d) const {
    FieldPtr sub = field_create(p_, d);
    const pf::Poly& md = sub->modulus();
    std::vector<Coords> roots;
    u64 subsize = arith::ipow(p_, d);
    if (tabulated()) {
        const auto& t = tables();
        u32 step = static_cast<u32>(t.n / (subsize - 1));
        for (u64 i = 0; i + 1 < subsize; ++i) {
            u32 z = t.exp[static_cast<std::size_t>(i * step % t.n)];
            u32 r = 0;
            for (int j = pf::deg(md); j >= 0; --j) r = t.add(t.mul(r, z), md[j]);
            if (r == 0) roots.push_back(decode(z));
        }
    } else {
        if (subsize > kTableCap) throw Error("subfield of order " + std::to_string(subsize) + " too large to embed");
        auto basis = subfield_basis(d);
        for (u64 combo = 1; combo < subsize; ++combo) {
            Coords z = zero();
            u64 v = combo;
            for (const auto& b : basis) {
                u32 c = static_cast<u32>(v % p_);
                v /= p_;
                if (c) z = add(z, scale(b, c));
            }
            if (is_zero(eval_prime_poly(md, z))) roots.push_back(std::move(z));
        }
    }
    std::vector<unsigned> mids;
    for (unsigned e = 2; e < d; ++e) {
        if (d % e == 0) mids.push_back(e);
    }
    std::optional<Coords> best;
    for (const auto& z : roots) {
        bool ok = true;
        for (unsigned e : mids) {
            Coords via_sub = eval_prime_poly(sub->subfield_root(e), z);
            if (via_sub != subfield_root(e)) {
                ok = false;
                break;
            }
        }
        if (ok && (!best || coords_less(z, *best))) best = z;
    }
    if (!best) throw Error("no compatible embedding root found");
    return *best;
}

inline FieldPtr field_create(u32 p, unsigned k) {
    if (!arith::is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
    if (p >= (1u << 16)) throw Error("characteristic must be below 65536");
    if (k == 0) throw Error("field degree must be positive");
    // Memo of a pure function: repeated requests share one descriptor and its tables.
    static std::mutex mu;
    static std::map<std::pair<u32, unsigned>, FieldPtr> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find({p, k});
        if (it != cache.end()) return it->second;
    }
    auto f = std::make_shared<const Field>(p, k, detail::lex_least_irreducible(p, k));
    std::lock_guard lock(mu);
    return cache.emplace(std::make_pair(p, k), f).first->second;
}

/// Field of order q = p^e.
inline FieldPtr field_of_order(u64 q) {
    auto pp = arith::prime_power(q);
    if (!pp) throw Error(std::to_string(q) + " is not a prime power");
    return field_create(pp->first, pp->second);
}

// --------------------------------------------------------------------------
// Elements

class Elem {
public:
    Elem() = default;
    Elem(FieldPtr f, Coords c) : f_(std::move(f)), c_(std::move(c)) {
        if (c_.size() != f_->degree()) throw Error("coordinate vector has wrong length");
    }

    static Elem zero(const FieldPtr& f) { return {f, f->zero()}; }
    static Elem one(const FieldPtr& f) { return {f, f->one()}; }
    static Elem from_int(const FieldPtr& f, long long v) { return {f, f->from_int(v)}; }
    static Elem from_code(const FieldPtr& f, u64 code) { return {f, f->decode(code)}; }
    /// Class of x in the power basis (the modulus root).
    static Elem x(const FieldPtr& f) {
        if (f->degree() == 1) return {f, Coords{0}};
        Coords c = f->zero();
        c[1] = 1;
        return {f, c};
    }

    const FieldPtr& field() const { return f_; }
    const Coords& coords() const { return c_; }
    bool is_zero() const { return f_->is_zero(c_); }
    bool is_one() const { return c_ == f_->one(); }
    u64 code() const { return f_->encode(c_); }

    Elem operator+(const Elem& o) const { return {f_, f_->add(c_, same(o).c_)}; }
    Elem operator-(const Elem& o) const { return {f_, f_->sub(c_, same(o).c_)}; }
    Elem operator-() const { return {f_, f_->neg(c_)}; }
    Elem operator*(const Elem& o) const { return {f_, f_->mul(c_, same(o).c_)}; }
    Elem operator/(const Elem& o) const { return {f_, f_->mul(c_, f_->inv(same(o).c_))}; }
    Elem& operator+=(const Elem& o) { return *this = *this + o; }
    Elem& operator-=(const Elem& o) { return *this = *this - o; }
    Elem& operator*=(const Elem& o) { return *this = *this * o; }

    Elem inverse() const { return {f_, f_->inv(c_)}; }
    Elem pow(u64 e) const { return {f_, f_->pow(c_, e)}; }

    friend bool operator==(const Elem& a, const Elem& b) { return a.f_->same_as(*b.f_) && a.c_ == b.c_; }
    friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

    /// Integer in prime fields, g^j in tabulated extension fields, coordinates otherwise.
    std::string to_string() const {
        if (f_->degree() == 1) return std::to_string(c_[0]);
        if (is_zero()) return "0";
        if (f_->tabulated()) {
            u32 j = f_->tables().log[static_cast<u32>(code())];
            return j == 0 ? "1" : (j == 1 ? "g" : "g^" + std::to_string(j));
        }
        std::string s = "[";
        for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
        return s + "]";
    }

private:
    const Elem& same(const Elem& o) const {
        if (!f_->same_as(*o.f_)) throw Error("arithmetic between elements of different fields");
        return o;
    }

    FieldPtr f_;
    Coords c_;
};

inline bool lex_less(const Elem& a, const Elem& b) { return coords_less(a.coords(), b.coords()); }

/// Lex-least generator of the multiplicative group.
inline Elem primitive_element(const FieldPtr& f) {
    if (f->tabulated()) return Elem::from_code(f, f->tables().generator);
    u64 n = f->order() - 1;
    auto factors = arith::factorize(n);
    for (u64 code = 1; code <= n; ++code) {
        Coords c = f->decode(code);
        bool ok = true;
        for (auto [r, e] : factors) {
            (void)e;
            if (f->pow(c, n / r) == f->one()) {
                ok = false;
                break;
            }
        }
        if (ok) return {f, c};
    }
    throw Error("no primitive element");
}

/// x^q; q must be a power of the characteristic.
inline Elem frobenius(const Elem& x, u64 q) {
    u32 p = x.field()->characteristic();
    auto pp = arith::prime_power(q);
    if (!pp || pp->first != p) throw Error("frobenius: " + std::to_string(q) + " is not a power of " + std::to_string(p));
    Elem r = x;
    for (unsigned i = 0; i < pp->second; ++i) r = r.pow(p);
    return r;
}

/// Multiplicative order; divides |F| - 1.
inline u64 element_order(const Elem& x) {
    if (x.is_zero()) throw Error("element_order: zero has no multiplicative order");
    u64 n = x.field()->order() - 1;
    u64 e = n;
    for (auto [r, mult] : arith::factorize(n == 0 ? 1 : n)) {
        for (unsigned i = 0; i < mult; ++i) {
            if (x.pow(e / r).is_one())
                e /= r;
            else
                break;
        }
    }
    return e;
}

/// Canonical embedding into a field whose degree is a multiple of x's field degree.
inline Elem embed(const Elem& x, const FieldPtr& target) {
    const Field& src = *x.field();
    if (src.characteristic() != target->characteristic())
        throw Error("embed: characteristic mismatch between " + src.to_string() + " and " + target->to_string());
    if (target->degree() % src.degree() != 0)
        throw Error("embed: " + src.to_string() + " is not a subfield of " + target->to_string());
    if (src.degree() == target->degree()) return {target, x.coords()};
    if (src.degree() == 1) return Elem::from_int(target, x.coords()[0]);
    Coords rho = target->subfield_root(src.degree());
    Coords r = target->zero();
    for (std::size_t i = x.coords().size(); i-- > 0;) {
        r = target->mul(r, rho);
        r[0] = (r[0] + x.coords()[i]) % target->characteristic();
    }
    return {target, r};
}

/// True iff x lies in the subfield of degree d.
inline bool in_subfield(const Elem& x, unsigned d) {
    const Field& f = *x.field();
    if (d == 0 || f.degree() % d != 0) return false;
    Coords y = x.coords();
    for (unsigned i = 0; i < d; ++i) y = f.pow(y, f.characteristic());
    return y == x.coords();
}

/// Preimage of x under embed(., x.field()) from `sub`, if x lies in that subfield.
inline std::optional<Elem> descend(const Elem& x, const FieldPtr& sub) {
    const Field& f = *x.field();
    if (sub->characteristic() != f.characteristic() || f.degree() % sub->degree() != 0)
        throw Error("descend: " + sub->to_string() + " is not a subfield of " + f.to_string());
    unsigned d = sub->degree();
    if (d == f.degree()) return Elem(sub, x.coords());
    if (d == 1) {
        for (std::size_t i = 1; i < x.coords().size(); ++i)
            if (x.coords()[i]) return std::nullopt;
        return Elem(sub, Coords{x.coords()[0]});
    }
    Coords rho = f.subfield_root(d);
    gfp::Matrix m(f.degree(), d);
    Coords cur = f.one();
    for (unsigned i = 0; i < d; ++i) {
        m.set_column(i, cur);
        cur = f.mul(cur, rho);
    }
    auto sol = gfp::solve(m, x.coords(), f.characteristic());
    if (!sol) return std::nullopt;
    return Elem(sub, *sol);
}

}  // namespace linfield
