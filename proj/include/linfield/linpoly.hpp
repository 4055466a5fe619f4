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
 * @file linpoly.hpp
 * @brief q-polynomials a_0 x + a_1 x^q + ... + a_n x^{q^n} over finite fields.
 *
 * A q-polynomial induces a GF(q)-linear map on every extension of its
 * coefficient field. Its roots form a GF(q)-space of dimension n when
 * a_0 != 0; root_space() finds the splitting field and a basis of that space
 * by linear algebra over the prime field.
 */

#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "ff/field.hpp"
#include "ff/poly.hpp"

namespace linfield {

class LinearizedPoly {
public:
    /// Largest q^n for which the ordinary (expanded) polynomial is materialized.
    static constexpr u64 kExpandCap = u64{1} << 22;

    LinearizedPoly() = default;

    /// Coefficients may come from any subfield of `field`; trailing zeros are dropped.
    LinearizedPoly(u64 q, FieldPtr field, const std::vector<Elem>& coeffs) : q_(q), f_(std::move(field)) {
        auto pp = arith::prime_power(q_);
        if (!pp || pp->first != f_->characteristic())
            throw Error("q = " + std::to_string(q_) + " is not a power of the characteristic of " + f_->to_string());
        if (f_->degree() % pp->second != 0)
            throw Error(f_->to_string() + " does not contain GF(" + std::to_string(q_) + ")");
        e_ = pp->second;
        for (const auto& c : coeffs) c_.push_back(embed(c, f_));
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    u64 q() const { return q_; }
    /// q = p^e
    unsigned q_exponent() const { return e_; }
    const FieldPtr& field() const { return f_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    int q_degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem::zero(f_); }
    Elem coeff_x() const { return coeff(0); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    LinearizedPoly embedded_in(const FieldPtr& big) const { return {q_, big, c_}; }

    /// Ordinary polynomial sum a_i x^{q^i}; coefficient field must be tabulated.
    UniPoly to_unipoly() const {
        if (is_zero()) return UniPoly(f_);
        u64 top = expanded_degree();
        std::vector<u32> c(top + 1, 0);
        u64 e = 1;
        for (const auto& a : c_) {
            c[e] = static_cast<u32>(a.code());
            e *= q_;
        }
        return {f_, std::move(c)};
    }

    /// L(x)/x, the polynomial whose roots are the nonzero roots of L.
    UniPoly divided_by_x() const {
        if (is_zero()) return UniPoly(f_);
        u64 top = expanded_degree();
        std::vector<u32> c(top, 0);
        u64 e = 1;
        for (const auto& a : c_) {
            c[e - 1] = static_cast<u32>(a.code());
            e *= q_;
        }
        return {f_, std::move(c)};
    }

    /// q^n, the ordinary degree.
    u64 expanded_degree() const {
        auto d = arith::checked_pow(q_, static_cast<unsigned>(q_degree()));
        if (!d || *d > kExpandCap) throw Error("q-polynomial too large to expand");
        return *d;
    }

    friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) {
        return a.q_ == b.q_ && a.f_->same_as(*b.f_) && a.c_ == b.c_;
    }
    friend bool operator!=(const LinearizedPoly& a, const LinearizedPoly& b) { return !(a == b); }

private:
    u64 q_ = 0;
    unsigned e_ = 0;
    FieldPtr f_;
    std::vector<Elem> c_;
};

/// Field of order q.
inline FieldPtr gfq_of(const LinearizedPoly& L) { return field_create(L.field()->characteristic(), L.q_exponent()); }

/// sum a_i z^{q^i}
inline Elem lin_eval(const LinearizedPoly& L, const Elem& z) {
    const FieldPtr& K = z.field();
    if (K->characteristic() != L.field()->characteristic() || K->degree() % L.field()->degree() != 0)
        throw Error("lin_eval: " + K->to_string() + " does not extend " + L.field()->to_string());
    Elem acc = Elem::zero(K);
    Elem cur = z;
    for (std::size_t i = 0; i < L.coeffs().size(); ++i) {
        if (i) cur = cur.pow(L.q());
        const Elem& a = L.coeffs()[i];
        if (!a.is_zero()) acc += embed(a, K) * cur;
    }
    return acc;
}

/// L1(L2(x)).
inline LinearizedPoly compose(const LinearizedPoly& L1, const LinearizedPoly& L2) {
    if (L1.q() != L2.q()) throw Error("compose: mismatched q");
    unsigned d1 = L1.field()->degree(), d2 = L2.field()->degree();
    FieldPtr K;
    if (d1 % d2 == 0)
        K = L1.field();
    else if (d2 % d1 == 0)
        K = L2.field();
    else
        throw Error("compose: coefficient fields are not nested");
    if (L1.is_zero() || L2.is_zero()) return {L1.q(), K, {}};
    std::size_t n1 = L1.coeffs().size(), n2 = L2.coeffs().size();
    std::vector<Elem> c(n1 + n2 - 1, Elem::zero(K));
    for (std::size_t j = 0; j < n2; ++j) {
        Elem b = embed(L2.coeffs()[j], K);
        for (std::size_t i = 0; i < n1; ++i) {
            if (i) b = b.pow(L1.q());
            c[i + j] += embed(L1.coeffs()[i], K) * b;
        }
    }
    return {L1.q(), K, c};
}

/// q-associate: sum a_i x^i  ->  sum a_i x^{q^i}. `a` must be over GF(q).
inline LinearizedPoly lin_from_associate(const UniPoly& a, u64 q) {
    if (a.is_zero()) throw Error("lin_from_associate: zero polynomial");
    if (a.field()->order() != q) throw Error("lin_from_associate: coefficients must lie in GF(" + std::to_string(q) + ")");
    std::vector<Elem> c;
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) c.push_back(a.coeff_elem(i));
    return {q, a.field(), c};
}

/// Inverse of lin_from_associate; every coefficient must lie in GF(q).
inline UniPoly associate_from_lin(const LinearizedPoly& L) {
    FieldPtr Fq = gfq_of(L);
    std::vector<Elem> c;
    for (std::size_t i = 0; i < L.coeffs().size(); ++i) {
        auto d = descend(L.coeffs()[i], Fq);
        if (!d) throw Error("associate_from_lin: coefficient " + std::to_string(i) + " is not in GF(" + std::to_string(L.q()) + ")");
        c.push_back(*d);
    }
    return UniPoly::from_elems(Fq, c);
}

struct ProjectivePoly {
    UniPoly poly;           // P with P(x^{q-1}) x = L(x)
    LinearizedPoly source;  // L
};

inline ProjectivePoly projective_poly(const LinearizedPoly& L) {
    if (!L.is_monic()) throw Error("projective_poly: L must be monic");
    u64 q = L.q();
    u64 top = (L.expanded_degree() - 1) / (q - 1);
    std::vector<u32> c(top + 1, 0);
    u64 e = 0;  // (q^i - 1)/(q - 1)
    for (std::size_t i = 0; i < L.coeffs().size(); ++i) {
        c[e] = static_cast<u32>(L.coeffs()[i].code());
        e = e * q + 1;
    }
    return {UniPoly(L.field(), std::move(c)), L};
}

/// P(x^{q-1}) * x as an ordinary polynomial, for checking against L.
inline UniPoly projective_expand(const ProjectivePoly& P) {
    u64 q = P.source.q();
    const auto& pc = P.poly.coeffs();
    std::vector<u32> c(pc.empty() ? 0 : (pc.size() - 1) * (q - 1) + 2, 0);
    for (std::size_t i = 0; i < pc.size(); ++i) c[i * (q - 1) + 1] = pc[i];
    return {P.poly.field(), std::move(c)};
}

// --------------------------------------------------------------------------
// Root spaces

struct RootSpace {
    unsigned splitting_degree = 0;  // s, so E = GF(q^{m s}) over F = GF(q^m)
    FieldPtr ground;                // F
    FieldPtr big;                   // E
    LinearizedPoly poly;            // L with coefficients in E
    std::vector<Elem> basis;        // GF(q)-basis of the roots, in E
};

namespace detail {

/// GF(p)-basis of ker(z -> L(z)) on L's coefficient field.
inline std::vector<Coords> additive_kernel(const LinearizedPoly& L) {
    const FieldPtr& E = L.field();
    unsigned k = E->degree();
    u32 p = E->characteristic();
    std::vector<Coords> w;  // x^{q^j}
    Coords cur = Elem::x(E).coords();
    for (std::size_t j = 0; j < L.coeffs().size(); ++j) {
        w.push_back(cur);
        cur = E->pow(cur, L.q());
    }
    std::vector<Coords> pw(w.size(), E->one());
    gfp::Matrix m(k, k);
    for (unsigned i = 0; i < k; ++i) {
        Coords col = E->zero();
        for (std::size_t j = 0; j < w.size(); ++j) {
            const Coords& a = L.coeffs()[j].coords();
            if (!E->is_zero(a)) col = E->add(col, E->mul(a, pw[j]));
            pw[j] = E->mul(pw[j], w[j]);
        }
        m.set_column(i, col);
    }
    (void)p;
    return gfp::kernel(m, p);
}

/// Greedy GF(q)-independent subset of a GF(p)-spanning list, in list order.
inline std::vector<Elem> gfq_basis(const std::vector<Coords>& gfp_vectors, const FieldPtr& E, const FieldPtr& Fq,
                                   std::size_t want) {
    u32 p = E->characteristic();
    unsigned e = Fq->degree();
    std::vector<Elem> omega;  // GF(p)-basis of GF(q) inside E
    Elem g = Elem::x(Fq);
    Elem cur = Elem::one(Fq);
    for (unsigned l = 0; l < e; ++l) {
        omega.push_back(embed(cur, E));
        if (e > 1) cur = cur * g;
    }
    std::vector<Coords> rows;
    std::vector<Elem> chosen;
    for (const auto& v : gfp_vectors) {
        if (chosen.size() == want) break;
        Elem a(E, v);
        std::vector<Coords> trial = rows;
        for (const auto& w : omega) trial.push_back((w * a).coords());
        gfp::Matrix m(trial.size(), E->degree());
        for (std::size_t r = 0; r < trial.size(); ++r)
            for (unsigned c = 0; c < E->degree(); ++c) m.at(r, c) = trial[r][c];
        if (gfp::rank(m, p) == trial.size()) {
            rows = std::move(trial);
            chosen.push_back(a);
        }
    }
    return chosen;
}

}  // namespace detail

/**
 * Splitting field and root basis of L over F.
 *
 * The splitting degree s is the least s for which the kernel of L on
 * GF(q^{m s}) has GF(q)-dimension n; it equals the lcm of the factor degrees
 * of L(x)/x over F, and the kernel at that s is checked to be full.
 * `cap` bounds s (0 means q^n - 1).
 */
inline RootSpace root_space(const LinearizedPoly& L, const FieldPtr& F, u64 cap = 0) {
    if (L.is_zero()) throw Error("root_space: zero polynomial");
    if (L.coeff_x().is_zero()) throw Error("root_space: coefficient of x is zero, L is inseparable");
    LinearizedPoly Lf = L.embedded_in(F);
    unsigned n = static_cast<unsigned>(Lf.q_degree());
    FieldPtr Fq = gfq_of(Lf);
    if (cap == 0) cap = std::max<u64>(1, Lf.expanded_degree() - 1);
    u64 s = 1;
    if (n > 0) {
        for (unsigned d : factor_degrees(Lf.divided_by_x())) s = arith::lcm(s, d);
    }
    if (s > cap) throw Error("root_space: splitting degree " + std::to_string(s) + " exceeds cap " + std::to_string(cap));
    FieldPtr E = field_create(F->characteristic(), F->degree() * static_cast<unsigned>(s));
    LinearizedPoly Le = Lf.embedded_in(E);
    std::vector<Elem> basis;
    if (n > 0) {
        auto ker = detail::additive_kernel(Le);
        if (ker.size() != std::size_t{Lf.q_exponent()} * n)
            throw Error("root_space: kernel has unexpected dimension " + std::to_string(ker.size()));
        basis = detail::gfq_basis(ker, E, Fq, n);
        if (basis.size() != n) throw Error("root_space: could not extract a GF(q)-basis");
    }
    return {static_cast<unsigned>(s), F, E, Le, basis};
}

/// True iff L(x)/x is irreducible over F.
inline bool lx_irreducible(const LinearizedPoly& L, const FieldPtr& F) {
    if (L.coeff_x().is_zero()) throw Error("lx_irreducible: coefficient of x is zero");
    UniPoly m = L.embedded_in(F).divided_by_x();
    if (m.degree() < 1) return false;
    return factor_degrees(m).size() == 1;
}

// --------------------------------------------------------------------------
// Hypothesis checker for the pencil f(x) + t g(x)

struct FamilyCertificate {
    bool certified = false;
    std::vector<std::string> violations;
    std::vector<std::string> facts;  // the irreducibility argument, when certified
    int r = -1;
};

/**
 * Checks that f is monic of odd prime q-degree r with x-coefficient -1, that g
 * is a nonzero q-polynomial of q-degree < r with zero x-coefficient, and that
 * f(x)/x and g(x)/x are coprime. Then (f + t g)/x is linear in t with coprime
 * coefficients and monic in x, hence irreducible in E[t][x] and over E(t).
 */
inline FamilyCertificate verify_family(const LinearizedPoly& f, const LinearizedPoly& g) {
    if (f.q() != g.q() || !f.field()->same_as(*g.field()))
        throw Error("verify_family: f and g must share q and coefficient field");
    FamilyCertificate out;
    const FieldPtr& E = f.field();
    out.r = f.q_degree();
    if (!f.is_monic()) out.violations.push_back("f must be monic");
    if (out.r < 3 || out.r % 2 == 0 || !arith::is_prime(static_cast<u64>(out.r)))
        out.violations.push_back("q-degree of f must be an odd prime (got " + std::to_string(out.r) + ")");
    if (f.coeff_x() != -Elem::one(E)) out.violations.push_back("coefficient of x in f must be -1");
    if (g.is_zero()) {
        out.violations.push_back("g must be nonzero");
    } else {
        if (g.q_degree() >= out.r) out.violations.push_back("q-degree of g must be less than that of f");
        if (!g.coeff_x().is_zero()) out.violations.push_back("coefficient of x in g must be 0");
        if (out.violations.empty()) {
            UniPoly h = gcd(f.divided_by_x(), g.divided_by_x());
            if (h.degree() != 0) out.violations.push_back("f(x)/x and g(x)/x must be coprime");
        }
    }
    out.certified = out.violations.empty();
    if (out.certified) {
        out.facts = {"(f + t g)/x has degree 1 in t",
                     "gcd(f/x, g/x) = 1, so (f + t g)/x is primitive in E[x][t] and irreducible there",
                     "(f + t g)/x is monic in x, so by Gauss's lemma it is irreducible over E(t)",
                     "coefficient of x in f + t g is -1"};
    }
    return out;
}

}  // namespace linfield
