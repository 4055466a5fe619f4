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

// Square matrices over a small field GF(q), entries stored as element codes.
// Matrices act on row vectors from the right: v -> v M. A vector v is encoded
// as sum v_i q^i and a matrix as sum a_{rc} q^{r n + c}.

#pragma once

#include <string>
#include <vector>

#include "ff/field.hpp"

namespace linfield {

class MatGF {
public:
    MatGF() = default;
    MatGF(FieldPtr f, unsigned n) : f_(std::move(f)), n_(n), a_(std::size_t{n} * n, 0) {
        if (!f_->tabulated()) throw Error("MatGF: coefficient field must be tabulated");
        f_->tables();
    }

    static MatGF identity(const FieldPtr& f, unsigned n) {
        MatGF m(f, n);
        for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }
    static MatGF scalar(const FieldPtr& f, unsigned n, u32 c) {
        MatGF m(f, n);
        for (unsigned i = 0; i < n; ++i) m.set(i, i, c);
        return m;
    }
    static MatGF from_rows(const FieldPtr& f, const std::vector<std::vector<u32>>& rows) {
        MatGF m(f, static_cast<unsigned>(rows.size()));
        for (unsigned i = 0; i < m.n_; ++i) {
            if (rows[i].size() != m.n_) throw Error("MatGF: matrix is not square");
            for (unsigned j = 0; j < m.n_; ++j) {
                if (rows[i][j] >= f->order()) throw Error("MatGF: entry out of range");
                m.set(i, j, rows[i][j]);
            }
        }
        return m;
    }

    const FieldPtr& field() const { return f_; }
    unsigned n() const { return n_; }
    u32 at(unsigned i, unsigned j) const { return a_[std::size_t{i} * n_ + j]; }
    void set(unsigned i, unsigned j, u32 c) { a_[std::size_t{i} * n_ + j] = c; }
    Elem elem(unsigned i, unsigned j) const { return Elem::from_code(f_, at(i, j)); }

    MatGF operator*(const MatGF& o) const {
        check(o);
        const auto& t = f_->tables();
        MatGF r(f_, n_, 0);
        for (unsigned i = 0; i < n_; ++i) {
            for (unsigned k = 0; k < n_; ++k) {
                u32 a = at(i, k);
                if (!a) continue;
                for (unsigned j = 0; j < n_; ++j) {
                    u32 b = o.at(k, j);
                    if (b) r.a_[std::size_t{i} * n_ + j] = t.add(r.a_[std::size_t{i} * n_ + j], t.mul(a, b));
                }
            }
        }
        return r;
    }

    friend bool operator==(const MatGF& a, const MatGF& b) { return a.n_ == b.n_ && a.a_ == b.a_; }
    friend bool operator!=(const MatGF& a, const MatGF& b) { return !(a == b); }

    bool is_identity() const { return *this == identity(f_, n_); }
    bool is_scalar() const {
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j)
                if (at(i, j) != (i == j ? at(0, 0) : 0)) return false;
        return true;
    }

    /// Determinant as an element code.
    u32 det() const {
        const auto& t = f_->tables();
        std::vector<u32> m = a_;
        u32 d = 1;
        for (unsigned c = 0; c < n_; ++c) {
            unsigned piv = c;
            while (piv < n_ && m[std::size_t{piv} * n_ + c] == 0) ++piv;
            if (piv == n_) return 0;
            if (piv != c) {
                for (unsigned j = 0; j < n_; ++j) std::swap(m[std::size_t{piv} * n_ + j], m[std::size_t{c} * n_ + j]);
                d = t.neg(d);
            }
            u32 pv = m[std::size_t{c} * n_ + c];
            d = t.mul(d, pv);
            u32 inv = t.inv(pv);
            for (unsigned r = c + 1; r < n_; ++r) {
                u32 f = t.mul(m[std::size_t{r} * n_ + c], inv);
                if (!f) continue;
                for (unsigned j = c; j < n_; ++j)
                    m[std::size_t{r} * n_ + j] = t.sub(m[std::size_t{r} * n_ + j], t.mul(f, m[std::size_t{c} * n_ + j]));
            }
        }
        return d;
    }

    MatGF inverse() const {
        const auto& t = f_->tables();
        MatGF a = *this, r = identity(f_, n_);
        for (unsigned c = 0; c < n_; ++c) {
            unsigned piv = c;
            while (piv < n_ && a.at(piv, c) == 0) ++piv;
            if (piv == n_) throw Error("MatGF: singular matrix");
            if (piv != c) {
                a.swap_rows(piv, c);
                r.swap_rows(piv, c);
            }
            u32 inv = t.inv(a.at(c, c));
            a.scale_row(c, inv);
            r.scale_row(c, inv);
            for (unsigned i = 0; i < n_; ++i) {
                u32 f = a.at(i, c);
                if (i == c || !f) continue;
                for (unsigned j = 0; j < n_; ++j) {
                    a.set(i, j, t.sub(a.at(i, j), t.mul(f, a.at(c, j))));
                    r.set(i, j, t.sub(r.at(i, j), t.mul(f, r.at(c, j))));
                }
            }
        }
        return r;
    }

    MatGF pow(u64 e) const {
        MatGF r = identity(f_, n_), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    /// Multiplicative order; the matrix must be invertible.
    u64 order() const {
        if (det() == 0) throw Error("MatGF: singular matrix has no order");
        MatGF cur = *this;
        u64 k = 1;
        while (!cur.is_identity()) {
            cur = cur * *this;
            ++k;
        }
        return k;
    }

    /// Integer key sum a_idx q^idx; unique per matrix.
    u64 key() const {
        u64 q = f_->order(), k = 0;
        for (std::size_t i = a_.size(); i-- > 0;) k = k * q + a_[i];
        return k;
    }

    static MatGF from_key(const FieldPtr& f, unsigned n, u64 key) {
        MatGF m(f, n);
        u64 q = f->order();
        for (auto& c : m.a_) {
            c = static_cast<u32>(key % q);
            key /= q;
        }
        return m;
    }

    /// v M for a row vector of codes.
    std::vector<u32> apply(const std::vector<u32>& v) const {
        const auto& t = f_->tables();
        std::vector<u32> r(n_, 0);
        for (unsigned i = 0; i < n_; ++i) {
            if (!v[i]) continue;
            for (unsigned j = 0; j < n_; ++j) r[j] = t.add(r[j], t.mul(v[i], at(i, j)));
        }
        return r;
    }

    /// Rows separated by "; ", entries in field-element notation.
    std::string to_string() const {
        std::string s = "[";
        for (unsigned i = 0; i < n_; ++i) {
            if (i) s += "; ";
            for (unsigned j = 0; j < n_; ++j) s += (j ? " " : "") + elem(i, j).to_string();
        }
        return s + "]";
    }

private:
    MatGF(FieldPtr f, unsigned n, int) : f_(std::move(f)), n_(n), a_(std::size_t{n} * n, 0) {}

    void check(const MatGF& o) const {
        if (n_ != o.n_ || !f_->same_as(*o.f_)) throw Error("MatGF: mismatched matrices");
    }
    void swap_rows(unsigned a, unsigned b) {
        for (unsigned j = 0; j < n_; ++j) std::swap(a_[std::size_t{a} * n_ + j], a_[std::size_t{b} * n_ + j]);
    }
    void scale_row(unsigned r, u32 c) {
        const auto& t = f_->tables();
        for (unsigned j = 0; j < n_; ++j) a_[std::size_t{r} * n_ + j] = t.mul(a_[std::size_t{r} * n_ + j], c);
    }

    FieldPtr f_;
    unsigned n_ = 0;
    std::vector<u32> a_;
};

inline std::vector<u32> decode_vector(u64 code, u64 q, unsigned n) {
    std::vector<u32> v(n);
    for (auto& c : v) {
        c = static_cast<u32>(code % q);
        code /= q;
    }
    return v;
}

inline u64 encode_vector(const std::vector<u32>& v, u64 q) {
    u64 k = 0;
    for (std::size_t i = v.size(); i-- > 0;) k = k * q + v[i];
    return k;
}

/// Throws unless q^{n^2} fits the 64-bit matrix key.
inline void check_key_range(u64 q, unsigned n) {
    if (!arith::checked_pow(q, n * n)) throw Error("matrices of size " + std::to_string(n) + " over GF(" + std::to_string(q) + ") are too large to enumerate");
}

}  // namespace linfield
