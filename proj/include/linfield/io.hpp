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
 * @file io.hpp
 * @brief Text forms of fields, elements and polynomials.
 *
 * Expressions are sums of products of integers, `g` (the field's lex-least
 * generator), `x` and `t`, with `^` exponents that may be towers
 * (`x^2^3` is x^8) and optional `*`. q-polynomials may also be written
 * `lin(q; a_0, a_1, ..., a_n)`. Everything printed here parses back to the
 * same value.
 */

#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "galois.hpp"
#include "linpoly.hpp"

namespace linfield {

class ParseError : public Error {
public:
    using Error::Error;
};

namespace io {

/// Sparse polynomial in x and t: (x-degree, t-degree) -> coefficient.
using Sparse = std::map<std::pair<u64, u64>, Elem>;

namespace detail {

constexpr u64 kMaxExponentOfSum = 64;

inline void add_term(Sparse& s, std::pair<u64, u64> mono, const Elem& c) {
    auto it = s.find(mono);
    if (it == s.end()) {
        if (!c.is_zero()) s.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) s.erase(it);
}

inline Sparse mul(const Sparse& a, const Sparse& b) {
    Sparse r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            auto x = arith::checked_add(ma.first, mb.first);
            auto t = arith::checked_add(ma.second, mb.second);
            if (!x || !t) throw ParseError("exponent overflow");
            add_term(r, {*x, *t}, ca * cb);
        }
    }
    return r;
}

class Parser {
public:
    Parser(std::string_view s, FieldPtr f) : s_(s), f_(std::move(f)) {}

    Sparse parse_all() {
        Sparse r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("parse error at position " + std::to_string(pos_) + " in \"" + std::string(s_) + "\": " + what +
                         " (expected terms like 3*x^9, g^2*t*x^4, [0,1,1]*x, x^2^3 or (1 + t)*x)");
    }

private:
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        char c = s_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 't' || c == 'g' || c == '(' || c == '[';
    }

    /// [c_0, c_1, ..., c_{k-1}]: coordinates on 1, x, ..., x^{k-1} modulo the field modulus.
    Elem coordinates() {
        ++pos_;
        Coords c;
        for (;;) {
            c.push_back(static_cast<u32>(number() % f_->characteristic()));
            if (peek(',')) {
                ++pos_;
                continue;
            }
            if (!peek(']')) fail("missing ']'");
            ++pos_;
            break;
        }
        if (c.size() != f_->degree())
            fail("coordinate vector has " + std::to_string(c.size()) + " entries, " + f_->to_string() + " needs " +
                 std::to_string(f_->degree()));
        return {f_, c};
    }

    Sparse constant(const Elem& c) {
        Sparse s;
        add_term(s, {0, 0}, c);
        return s;
    }

    Sparse expr() {
        Sparse r;
        bool neg = false;
        if (peek('+')) {
            ++pos_;
        } else if (peek('-')) {
            ++pos_;
            neg = true;
        }
        for (;;) {
            Sparse t = term();
            for (const auto& [m, c] : t) add_term(r, m, neg ? -c : c);
            if (peek('+')) {
                ++pos_;
                neg = false;
            } else if (peek('-')) {
                ++pos_;
                neg = true;
            } else {
                break;
            }
        }
        return r;
    }

    Sparse term() {
        Sparse r = power();
        for (;;) {
            if (peek('*')) {
                ++pos_;
                r = mul(r, power());
            } else if (starts_factor()) {
                r = mul(r, power());
            } else {
                return r;
            }
        }
    }

    u64 number() {
        skip();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
        u64 v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            auto nv = arith::checked_mul(v, 10);
            if (!nv) fail("number too large");
            auto nv2 = arith::checked_add(*nv, static_cast<u64>(s_[pos_] - '0'));
            if (!nv2) fail("number too large");
            v = *nv2;
            ++pos_;
        }
        return v;
    }

    /// Right-associative tower: 2^3^2 = 2^9.
    u64 exponent() {
        u64 b = number();
        if (!peek('^')) return b;
        ++pos_;
        u64 e = exponent();
        auto v = arith::checked_pow(b, e > 64 ? 65 : static_cast<unsigned>(e));
        if (!v) fail("exponent too large");
        return *v;
    }

    Sparse power() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        Sparse base;
        enum { Num, X, T, G, Paren, Vec } kind;
        u64 num = 0;
        std::optional<Elem> vec;
        if (c == '[') {
            kind = Vec;
            vec = coordinates();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            kind = Num;
            num = number();
        } else if (c == 'x' || c == 't' || c == 'g') {
            kind = c == 'x' ? X : (c == 't' ? T : G);
            ++pos_;
        } else if (c == '(') {
            kind = Paren;
            ++pos_;
            base = expr();
            if (!peek(')')) fail("missing ')'");
            ++pos_;
        } else {
            fail("unexpected '" + std::string(1, c) + "'");
        }
        u64 e = 1;
        if (peek('^')) {
            ++pos_;
            e = exponent();
        }
        switch (kind) {
            case Vec: return constant(vec->pow(e));
            case Num: return constant(Elem::from_int(f_, static_cast<long long>(num % f_->characteristic())).pow(e));
            case X: {
                Sparse s;
                add_term(s, {e, 0}, Elem::one(f_));
                return s;
            }
            case T: {
                Sparse s;
                add_term(s, {0, e}, Elem::one(f_));
                return s;
            }
            case G: {
                if (!f_->tabulated()) fail("'g' needs a field small enough to tabulate");
                return constant(Elem::from_code(f_, f_->tables().generator).pow(e));
            }
            case Paren: {
                if (e > kMaxExponentOfSum) fail("exponent of a parenthesized sum is limited to " + std::to_string(kMaxExponentOfSum));
                Sparse r = constant(Elem::one(f_));
                for (u64 i = 0; i < e; ++i) r = mul(r, base);
                return r;
            }
        }
        fail("unreachable");
    }

    std::string_view s_;
    FieldPtr f_;
    std::size_t pos_ = 0;
};

inline std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

inline std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(' || s[i] == '[') ++depth;
        if (s[i] == ')' || s[i] == ']') --depth;
        if (s[i] == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

inline u64 parse_u64(const std::string& s, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(std::string("expected an integer for ") + what + ", got \"" + s + "\"");
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw ParseError(std::string("integer out of range for ") + what + ": \"" + s + "\"");
    }
}

}  // namespace detail

inline Sparse parse_sparse(std::string_view text, const FieldPtr& F) { return detail::Parser(text, F).parse_all(); }

/// Constant expression (no x, no t) in F.
inline Elem parse_elem(std::string_view text, const FieldPtr& F) {
    Sparse s = parse_sparse(text, F);
    for (const auto& [m, c] : s)
        if (m.first || m.second) throw ParseError("expected a constant, got \"" + std::string(text) + "\"");
    return s.empty() ? Elem::zero(F) : s.begin()->second;
}

/// Univariate polynomial in `var` ('x' or 't') over a tabulated field.
inline UniPoly parse_unipoly(std::string_view text, const FieldPtr& F, char var = 'x') {
    Sparse s = parse_sparse(text, F);
    u64 top = 0;
    for (const auto& [m, c] : s) {
        u64 other = var == 'x' ? m.second : m.first;
        if (other) throw ParseError(std::string("unexpected variable in univariate polynomial in ") + var + ": \"" + std::string(text) + "\"");
        top = std::max(top, var == 'x' ? m.first : m.second);
    }
    if (top > LinearizedPoly::kExpandCap) throw ParseError("polynomial degree too large");
    std::vector<u32> c(s.empty() ? 0 : top + 1, 0);
    for (const auto& [m, e] : s) c[var == 'x' ? m.first : m.second] = static_cast<u32>(e.code());
    return {F, std::move(c)};
}

/// i with q^i = e, or -1.
inline int q_log(u64 e, u64 q) {
    int i = 0;
    while (e > 1 && e % q == 0) {
        e /= q;
        ++i;
    }
    return e == 1 ? i : -1;
}

namespace detail {

inline bool is_lin_form(std::string_view s) {
    std::string t = trim(s);
    return t.rfind("lin(", 0) == 0 && t.back() == ')';
}

/// Splits "lin(q; a0, ..., an)" into q and coefficient strings.
inline std::pair<u64, std::vector<std::string>> split_lin_form(std::string_view s) {
    std::string t = trim(s);
    std::string inner = t.substr(4, t.size() - 5);
    auto semi = inner.find(';');
    if (semi == std::string::npos) throw ParseError("expected lin(q; a_0, a_1, ..., a_n), got \"" + t + "\"");
    u64 q = parse_u64(trim(inner.substr(0, semi)), "q");
    auto parts = split_top_level(inner.substr(semi + 1), ',');
    if (parts.size() == 1 && parts[0].empty()) throw ParseError("lin(...) needs at least one coefficient");
    return {q, parts};
}

}  // namespace detail

/**
 * q-polynomial over F, either as a sum of terms a*x^{q^i} or as
 * lin(q; a_0, ..., a_n). `q` is required for the sum form; for the lin form
 * a nonzero `q` must match.
 */
inline LinearizedPoly parse_linearized(std::string_view text, const FieldPtr& F, u64 q = 0) {
    if (detail::is_lin_form(text)) {
        auto [lq, parts] = detail::split_lin_form(text);
        if (q && q != lq) throw ParseError("q in lin(...) is " + std::to_string(lq) + " but " + std::to_string(q) + " was requested");
        std::vector<Elem> c;
        for (const auto& p : parts) c.push_back(parse_elem(p, F));
        return {lq, F, c};
    }
    if (!q) throw ParseError("q is required for q-polynomials written as sums of terms");
    Sparse s = parse_sparse(text, F);
    std::vector<Elem> c;
    for (const auto& [m, e] : s) {
        if (m.second) throw ParseError("unexpected t in a q-polynomial over a finite field");
        int i = q_log(m.first, q);
        if (m.first == 0 || i < 0)
            throw ParseError("x^" + std::to_string(m.first) + " is not of the form x^(" + std::to_string(q) + "^i)");
        if (c.size() <= static_cast<std::size_t>(i)) c.resize(static_cast<std::size_t>(i) + 1, Elem::zero(F));
        c[static_cast<std::size_t>(i)] = e;
    }
    return {q, F, c};
}

/// q-polynomial with coefficients in F[t].
inline BivariateLinPoly parse_bivariate(std::string_view text, const FieldPtr& F, u64 q = 0) {
    std::vector<UniPoly> c;
    if (detail::is_lin_form(text)) {
        auto [lq, parts] = detail::split_lin_form(text);
        if (q && q != lq) throw ParseError("q in lin(...) is " + std::to_string(lq) + " but " + std::to_string(q) + " was requested");
        q = lq;
        for (const auto& p : parts) c.push_back(parse_unipoly(p, F, 't'));
        return make_bivariate(q, F, std::move(c));
    }
    if (!q) throw ParseError("q is required for q-polynomials written as sums of terms");
    Sparse s = parse_sparse(text, F);
    for (const auto& [m, e] : s) {
        int i = q_log(m.first, q);
        if (m.first == 0 || i < 0)
            throw ParseError("x^" + std::to_string(m.first) + " is not of the form x^(" + std::to_string(q) + "^i)");
        if (c.size() <= static_cast<std::size_t>(i)) c.resize(static_cast<std::size_t>(i) + 1, UniPoly(F));
        c[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)] + UniPoly::monomial(F, static_cast<u32>(e.code()), m.second);
    }
    return make_bivariate(q, F, std::move(c));
}

// --------------------------------------------------------------------------
// Fields

/// "GF(8)", "GF(2^3)", "GF(2^3; 1 + x + x^3)" or a bare order "8".
inline FieldPtr parse_field(std::string_view text) {
    std::string t = detail::trim(text);
    std::string body = t;
    std::string modulus;
    if (t.rfind("GF(", 0) == 0) {
        if (t.back() != ')') throw ParseError("expected GF(p^k) or GF(q), got \"" + t + "\"");
        body = t.substr(3, t.size() - 4);
        auto semi = body.find(';');
        if (semi != std::string::npos) {
            modulus = detail::trim(body.substr(semi + 1));
            body = detail::trim(body.substr(0, semi));
        }
    }
    FieldPtr F;
    auto caret = body.find('^');
    if (caret != std::string::npos) {
        u64 p = detail::parse_u64(detail::trim(body.substr(0, caret)), "p");
        u64 k = detail::parse_u64(detail::trim(body.substr(caret + 1)), "k");
        if (p > 0xFFFFFFFFull || k > 0xFFFFFFFFull) throw ParseError("field parameters out of range");
        F = field_create(static_cast<u32>(p), static_cast<unsigned>(k));
    } else {
        F = field_of_order(detail::parse_u64(detail::trim(body), "field order"));
    }
    if (!modulus.empty()) {
        FieldPtr Fp = field_create(F->characteristic(), 1);
        UniPoly m = parse_unipoly(modulus, Fp);
        pf::Poly mc(m.coeffs().begin(), m.coeffs().end());
        if (mc != F->modulus())
            throw ParseError("modulus \"" + modulus + "\" differs from the canonical modulus of " + F->to_string());
    }
    return F;
}

// --------------------------------------------------------------------------
// Printing

namespace detail {

inline std::string monomial(const std::string& var, u64 e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

inline std::string term(const Elem& c, const std::string& mono) {
    if (mono.empty()) return c.to_string();
    if (c.is_one()) return mono;
    return c.to_string() + "*" + mono;
}

}  // namespace detail

/// Ascending: "1 + x + x^3".
inline std::string format(const UniPoly& f, const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::string s;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (!f.coeff(i)) continue;
        if (!s.empty()) s += " + ";
        s += detail::term(f.coeff_elem(i), detail::monomial(var, i));
    }
    return s;
}

inline std::string format_lin_exponent(u64 q, std::size_t i) {
    auto e = arith::checked_pow(q, static_cast<unsigned>(i));
    return e ? std::to_string(*e) : std::to_string(q) + "^" + std::to_string(i);
}

/// Descending: "x^8 + x^2 + x".
inline std::string format(const LinearizedPoly& L) {
    if (L.is_zero()) return "0";
    std::string s;
    for (std::size_t i = L.coeffs().size(); i-- > 0;) {
        const Elem& c = L.coeffs()[i];
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string mono = i == 0 ? "x" : "x^" + format_lin_exponent(L.q(), i);
        s += detail::term(c, mono);
    }
    return s;
}

/// Compact form lin(q; a_0, ..., a_n).
inline std::string format_compact(const LinearizedPoly& L) {
    std::string s = "lin(" + std::to_string(L.q()) + ";";
    for (std::size_t i = 0; i < L.coeffs().size(); ++i) s += (i ? ", " : " ") + L.coeffs()[i].to_string();
    return s + ")";
}

/// Descending in x, e.g. "x^8 + x^2 + t*x".
inline std::string format(const BivariateLinPoly& Lt) {
    std::string s;
    for (std::size_t i = Lt.coeffs.size(); i-- > 0;) {
        const UniPoly& c = Lt.coeffs[i];
        if (c.is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string mono = i == 0 ? "x" : "x^" + format_lin_exponent(Lt.q, i);
        std::size_t nonzero = 0;
        for (u32 v : c.coeffs()) nonzero += v != 0;
        if (nonzero == 1) {
            std::size_t d = static_cast<std::size_t>(c.degree());
            std::string tm = detail::monomial("t", d);
            Elem lc = c.coeff_elem(d);
            std::string coef = tm.empty() ? (lc.is_one() ? "" : lc.to_string()) : detail::term(lc, tm);
            s += coef.empty() ? mono : coef + "*" + mono;
        } else {
            s += "(" + format(c, "t") + ")*" + mono;
        }
    }
    return s;
}

inline std::string format(const MatGF& m) { return m.to_string(); }

}  // namespace io
}  // namespace linfield
