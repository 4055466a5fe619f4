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

// Univariate polynomials over a tabulated field GF(Q), Q <= 2^20.
// Coefficients are element codes, constant term first.

#pragma once

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "field.hpp"

namespace linfield {

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(FieldPtr f) : f_(std::move(f)) { f_->tables(); }
    UniPoly(FieldPtr f, std::vector<u32> c) : f_(std::move(f)), c_(std::move(c)) {
        f_->tables();
        trim();
    }

    static UniPoly constant(const FieldPtr& f, u32 code) { return {f, {code}}; }
    static UniPoly x(const FieldPtr& f) { return {f, {0, 1}}; }
    static UniPoly monomial(const FieldPtr& f, u32 code, std::size_t deg) {
        std::vector<u32> c(deg + 1, 0);
        c[deg] = code;
        return {f, std::move(c)};
    }
    static UniPoly from_elems(const FieldPtr& f, const std::vector<Elem>& cs) {
        std::vector<u32> c;
        c.reserve(cs.size());
        for (const auto& e : cs) c.push_back(static_cast<u32>(embed(e, f).code()));
        return {f, std::move(c)};
    }

    const FieldPtr& field() const { return f_; }
    const std::vector<u32>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    u32 lead() const { return c_.empty() ? 0 : c_.back(); }
    u32 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    Elem coeff_elem(std::size_t i) const { return Elem::from_code(f_, coeff(i)); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    UniPoly operator+(const UniPoly& o) const {
        const auto& t = tab();
        std::vector<u32> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = t.add(coeff(i), o.coeff(i));
        return {f_, std::move(r)};
    }
    UniPoly operator-(const UniPoly& o) const {
        const auto& t = tab();
        std::vector<u32> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = t.sub(coeff(i), o.coeff(i));
        return {f_, std::move(r)};
    }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly(f_);
        const auto& t = tab();
        std::vector<u32> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i]) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = t.add(r[i + j], t.mul(c_[i], o.c_[j]));
        }
        return {f_, std::move(r)};
    }
    UniPoly scaled(u32 code) const {
        const auto& t = tab();
        std::vector<u32> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = t.mul(c_[i], code);
        return {f_, std::move(r)};
    }
    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(tab().inv(lead()));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.f_->same_as(*b.f_) && a.c_ == b.c_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Value at z, where z lies in an extension of the coefficient field.
    Elem eval(const Elem& z) const {
        Elem r = Elem::zero(z.field());
        for (std::size_t i = c_.size(); i-- > 0;) r = r * z + embed(coeff_elem(i), z.field());
        return r;
    }

    /// Same polynomial with coefficients embedded in a larger tabulated field.
    UniPoly embedded_in(const FieldPtr& big) const {
        std::vector<u32> c;
        c.reserve(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) c.push_back(static_cast<u32>(embed(coeff_elem(i), big).code()));
        return {big, std::move(c)};
    }

private:
    const CodeTables& tab() const { return f_->tables(); }
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    FieldPtr f_;
    std::vector<u32> c_;
};

// --------------------------------------------------------------------------
// Division and gcd

inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    const auto& t = a.field()->tables();
    std::vector<u32> r = a.coeffs();
    int db = b.degree(), da = a.degree();
    if (da < db) return {UniPoly(a.field()), a};
    std::vector<u32> q(static_cast<std::size_t>(da - db + 1), 0);
    u32 inv = t.inv(b.lead());
    const auto& bc = b.coeffs();
    for (int i = da; i >= db; --i) {
        u32 c = t.mul(r[i], inv);
        q[i - db] = c;
        if (!c) continue;
        for (int j = 0; j <= db; ++j) r[i - db + j] = t.sub(r[i - db + j], t.mul(c, bc[j]));
    }
    r.resize(static_cast<std::size_t>(db));
    return {UniPoly(a.field(), std::move(q)), UniPoly(a.field(), std::move(r))};
}

inline UniPoly rem(const UniPoly& a, const UniPoly& m) {
    if (a.degree() < m.degree()) return a;
    return divmod(a, m).second;
}

inline UniPoly quot(const UniPoly& a, const UniPoly& m) { return divmod(a, m).first; }

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline UniPoly derivative(const UniPoly& f) {
    const auto& t = f.field()->tables();
    u32 p = f.field()->characteristic();
    std::vector<u32> r;
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        u32 m = static_cast<u32>(i % p);
        // i * c as repeated addition keeps this valid in extension fields
        u32 v = 0;
        if (m) v = t.mul(f.coeffs()[i], m);
        r.push_back(v);
    }
    return {f.field(), std::move(r)};
}

inline UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m) { return rem(a * b, m); }

inline UniPoly powmod(UniPoly base, u64 e, const UniPoly& m) {
    UniPoly r = rem(UniPoly::constant(m.field(), 1), m);
    base = rem(base, m);
    while (e) {
        if (e & 1) r = mulmod(r, base, m);
        e >>= 1;
        if (e) base = mulmod(base, base, m);
    }
    return r;
}

/// h -> h^Q mod m as a linear map, Q = |field|. Precomputes (x^Q)^j mod m.
class FrobeniusMap {
public:
    explicit FrobeniusMap(const UniPoly& m) : m_(m) {
        UniPoly xq = powmod(UniPoly::x(m.field()), m.field()->order(), m);
        UniPoly cur = rem(UniPoly::constant(m.field(), 1), m);
        for (int j = 0; j < m.degree(); ++j) {
            powers_.push_back(cur);
            cur = mulmod(cur, xq, m);
        }
    }

    UniPoly apply(const UniPoly& h) const {
        const auto& t = m_.field()->tables();
        std::vector<u32> acc(static_cast<std::size_t>(std::max(m_.degree(), 1)), 0);
        for (std::size_t j = 0; j < h.coeffs().size(); ++j) {
            u32 c = h.coeffs()[j];
            if (!c) continue;
            const auto& pj = powers_[j].coeffs();
            for (std::size_t i = 0; i < pj.size(); ++i) acc[i] = t.add(acc[i], t.mul(c, pj[i]));
        }
        return {m_.field(), std::move(acc)};
    }

private:
    UniPoly m_;
    std::vector<UniPoly> powers_;
};

// --------------------------------------------------------------------------
// Factorization

struct Factor {
    UniPoly poly;
    unsigned multiplicity;
};

/// Squarefree decomposition of a monic polynomial: pairwise coprime squarefree
/// parts with their multiplicities.
inline std::vector<Factor> squarefree_decomposition(const UniPoly& f_in) {
    if (f_in.degree() < 1) return {};
    UniPoly f = f_in.monic();
    const FieldPtr& F = f.field();
    const auto& t = F->tables();
    u32 p = F->characteristic();
    std::vector<Factor> out;
    UniPoly c = gcd(f, derivative(f));
    UniPoly w = quot(f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        UniPoly y = gcd(w, c);
        UniPoly fac = quot(w, y);
        if (fac.degree() > 0) out.push_back({fac.monic(), i});
        w = y;
        c = quot(c, y);
        ++i;
    }
    if (c.degree() > 0) {
        // c is a polynomial in x^p; take its p-th root coefficientwise
        u64 root_exp = arith::ipow(p, F->degree() - 1);
        std::vector<u32> rc;
        for (std::size_t j = 0; j < c.coeffs().size(); j += p) rc.push_back(t.pow(c.coeffs()[j], root_exp));
        for (auto& sub : squarefree_decomposition(UniPoly(F, std::move(rc)).monic()))
            out.push_back({sub.poly, sub.multiplicity * p});
    }
    return out;
}

struct DegreePart {
    UniPoly poly;     // product of all irreducible factors of this degree
    unsigned degree;  // common degree of those factors
};

/// Distinct-degree factorization of a squarefree monic polynomial.
inline std::vector<DegreePart> distinct_degree_factorization(const UniPoly& f) {
    std::vector<DegreePart> out;
    if (f.degree() < 1) return out;
    if (f.degree() == 1) return {{f.monic(), 1}};
    UniPoly m = f.monic();
    FrobeniusMap frob(m);
    UniPoly x = UniPoly::x(m.field());
    UniPoly h = rem(x, m);
    UniPoly rest = m;
    for (unsigned i = 1; 2 * static_cast<int>(i) <= rest.degree(); ++i) {
        h = frob.apply(h);
        UniPoly g = gcd(rest, h - x);
        if (g.degree() > 0) {
            out.push_back({g, i});
            rest = quot(rest, g).monic();
        }
    }
    if (rest.degree() > 0) out.push_back({rest, static_cast<unsigned>(rest.degree())});
    return out;
}

/// Cantor-Zassenhaus splitting of a squarefree monic product of degree-d irreducibles.
inline std::vector<UniPoly> equal_degree_split(const UniPoly& g, unsigned d, std::mt19937_64& rng) {
    if (g.degree() <= static_cast<int>(d)) return {g.monic()};
    const FieldPtr& F = g.field();
    const auto& t = F->tables();
    u64 Q = F->order();
    for (;;) {
        std::vector<u32> rc(static_cast<std::size_t>(g.degree()));
        for (auto& c : rc) c = static_cast<u32>(rng() % Q);
        UniPoly a(F, std::move(rc));
        if (a.degree() < 1) continue;
        UniPoly b(F);
        if (F->characteristic() == 2) {
            // absolute trace: a + a^2 + ... + a^{2^{kd-1}}
            UniPoly cur = a;
            b = a;
            for (unsigned i = 1; i < F->degree() * d; ++i) {
                cur = mulmod(cur, cur, g);
                b = b + cur;
            }
        } else {
            // a^{(Q^d-1)/2} = (a^{1+Q+...+Q^{d-1}})^{(Q-1)/2}
            UniPoly norm = rem(a, g), cur = rem(a, g);
            for (unsigned i = 1; i < d; ++i) {
                cur = powmod(cur, Q, g);
                norm = mulmod(norm, cur, g);
            }
            b = powmod(norm, (Q - 1) / 2, g) - UniPoly::constant(F, 1);
        }
        (void)t;
        UniPoly h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            auto left = equal_degree_split(h, d, rng);
            auto right = equal_degree_split(quot(g, h).monic(), d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

inline bool poly_lex_less(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        if (a.coeffs()[i] != b.coeffs()[i]) return a.coeffs()[i] < b.coeffs()[i];
    }
    return false;
}

/// Complete factorization into monic irreducibles with multiplicity, sorted.
/// Randomness (equal-degree splitting) is drawn from the given seed only.
inline std::vector<Factor> factor(const UniPoly& f, u64 seed = 0) {
    if (f.degree() < 1) throw Error("factor: constant or zero polynomial");
    std::mt19937_64 rng(seed);
    std::vector<Factor> out;
    for (const auto& part : squarefree_decomposition(f)) {
        for (const auto& dd : distinct_degree_factorization(part.poly)) {
            for (auto& g : equal_degree_split(dd.poly, dd.degree, rng)) out.push_back({g, part.multiplicity});
        }
    }
    std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) {
        if (a.poly != b.poly) return poly_lex_less(a.poly, b.poly);
        return a.multiplicity < b.multiplicity;
    });
    return out;
}

/// Degrees of the irreducible factors with multiplicity, ascending.
inline std::vector<unsigned> factor_degrees(const UniPoly& f) {
    if (f.degree() < 1) throw Error("factor_degrees: constant or zero polynomial");
    std::vector<unsigned> out;
    for (const auto& part : squarefree_decomposition(f)) {
        for (const auto& dd : distinct_degree_factorization(part.poly)) {
            unsigned count = static_cast<unsigned>(dd.poly.degree()) / dd.degree;
            for (unsigned i = 0; i < count * part.multiplicity; ++i) out.push_back(dd.degree);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_squarefree(const UniPoly& f) { return gcd(f, derivative(f)).degree() == 0; }

inline bool is_irreducible(const UniPoly& f) {
    if (f.degree() < 1) return false;
    auto d = factor_degrees(f);
    return d.size() == 1;
}

/// Least e >= 1 with f | x^e - 1; f irreducible with f(0) != 0.
inline u64 poly_order(const UniPoly& f) {
    if (f.degree() < 1 || !is_irreducible(f)) throw Error("poly_order: polynomial is not irreducible");
    if (f.coeff(0) == 0) throw Error("poly_order: f(0) = 0");
    UniPoly m = f.monic();
    if (m.degree() == 1) {
        // root is -f0; its order in the coefficient field
        const auto& t = m.field()->tables();
        return element_order(Elem::from_code(m.field(), t.neg(m.coeff(0))));
    }
    u64 n = arith::ipow(m.field()->order(), static_cast<unsigned>(m.degree())) - 1;
    UniPoly x = UniPoly::x(m.field());
    u64 e = n;
    for (auto [r, mult] : arith::factorize(n)) {
        for (unsigned i = 0; i < mult; ++i) {
            if (powmod(x, e / r, m).is_one())
                e /= r;
            else
                break;
        }
    }
    return e;
}

/// Monic polynomial of degree d over F whose lower coefficients have the given code.
inline UniPoly monic_from_code(const FieldPtr& F, unsigned d, u64 code) {
    u64 Q = F->order();
    std::vector<u32> c(d + 1, 0);
    for (unsigned i = 0; i < d; ++i) {
        c[i] = static_cast<u32>(code % Q);
        code /= Q;
    }
    c[d] = 1;
    return {F, std::move(c)};
}

/// Least monic irreducible of degree d over F, ordered by coefficient code.
inline UniPoly lex_least_irreducible(const FieldPtr& F, unsigned d) {
    for (u64 code = 0;; ++code) {
        UniPoly f = monic_from_code(F, d, code);
        if (is_irreducible(f)) return f;
    }
}

/// Least monic primitive polynomial of degree d over F.
inline UniPoly lex_least_primitive(const FieldPtr& F, unsigned d) {
    u64 target = arith::ipow(F->order(), d) - 1;
    for (u64 code = 1;; ++code) {
        UniPoly f = monic_from_code(F, d, code);
        if (f.coeff(0) == 0 || !is_irreducible(f)) continue;
        if (poly_order(f) == target) return f;
    }
}

}  // namespace linfield
