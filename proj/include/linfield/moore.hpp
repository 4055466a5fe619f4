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
 * @file moore.hpp
 * @brief Moore matrices of root bases and the Frobenius action on them.
 *
 * For a basis a_1..a_n of the roots of L, D[i][j] = a_i^{q^j} and
 * delta = det D. The Frobenius z -> z^{|F|} of the splitting field acts on
 * the roots by a matrix S over GF(q) with S D = sigma(D), and
 * sigma(delta) = det(S) delta.
 */

#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "linpoly.hpp"
#include "matgf.hpp"

namespace linfield {

using ElemMatrix = std::vector<std::vector<Elem>>;

/// Determinant by elimination; all entries in one field.
inline Elem determinant(ElemMatrix m) {
    std::size_t n = m.size();
    if (n == 0) throw Error("determinant: empty matrix");
    const FieldPtr& f = m[0][0].field();
    Elem d = Elem::one(f);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return Elem::zero(f);
        if (piv != c) {
            std::swap(m[piv], m[c]);
            d = -d;
        }
        d *= m[c][c];
        Elem inv = m[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            Elem factor = m[r][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[r][j] -= factor * m[c][j];
        }
    }
    return d;
}

struct MooreData {
    u64 q = 0;
    std::vector<Elem> basis;
    ElemMatrix D;  // D[i][j] = basis[i]^{q^j}
    Elem delta;
};

/// Builds D and delta; throws when the basis is GF(q)-dependent (delta = 0).
inline MooreData moore_delta(const std::vector<Elem>& basis, u64 q) {
    if (basis.empty()) throw Error("moore_delta: empty basis");
    const FieldPtr& E = basis[0].field();
    auto pp = arith::prime_power(q);
    if (!pp || pp->first != E->characteristic() || E->degree() % pp->second != 0)
        throw Error("moore_delta: " + E->to_string() + " does not contain GF(" + std::to_string(q) + ")");
    MooreData md{q, basis, {}, {}};
    std::size_t n = basis.size();
    for (const auto& a : basis) {
        if (!a.field()->same_as(*E)) throw Error("moore_delta: basis elements lie in different fields");
        std::vector<Elem> row{a};
        for (std::size_t j = 1; j < n; ++j) row.push_back(row.back().pow(q));
        md.D.push_back(std::move(row));
    }
    md.delta = determinant(md.D);
    if (md.delta.is_zero()) throw Error("moore_delta: basis is linearly dependent over GF(" + std::to_string(q) + ")");
    return md;
}

/**
 * The monic q-polynomial vanishing on the span of the basis: det A / delta,
 * where A is D extended by the column a_i^{q^n} and the row x, x^q, ..., x^{q^n}.
 * Expanded along that last row.
 */
inline LinearizedPoly reconstruct_L(const MooreData& md) {
    std::size_t n = md.basis.size();
    const FieldPtr& E = md.delta.field();
    ElemMatrix A = md.D;
    for (std::size_t i = 0; i < n; ++i) A[i].push_back(md.D[i][n - 1].pow(md.q));
    Elem dinv = md.delta.inverse();
    std::vector<Elem> coeffs;
    for (std::size_t j = 0; j <= n; ++j) {
        ElemMatrix minor;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Elem> row;
            for (std::size_t c = 0; c <= n; ++c)
                if (c != j) row.push_back(A[i][c]);
            minor.push_back(std::move(row));
        }
        Elem cof = determinant(std::move(minor));
        if ((n + j) % 2) cof = -cof;
        coeffs.push_back(cof * dinv);
    }
    return {md.q, E, coeffs};
}

struct GaloisMatrix {
    MatGF S;          // sigma(a_i) = sum_j S[i][j] a_j
    u64 power = 0;    // sigma(z) = z^power, power = |F|
    RootSpace roots;
    MooreData moore;
};

namespace detail {

/// GF(p)-basis of GF(q) inside E: embedded powers of the class of x.
inline std::vector<Elem> gfq_basis_in(const FieldPtr& Fq, const FieldPtr& E) {
    std::vector<Elem> w;
    Elem cur = Elem::one(Fq);
    for (unsigned l = 0; l < Fq->degree(); ++l) {
        w.push_back(embed(cur, E));
        cur = cur * Elem::x(Fq);
    }
    return w;
}

/// Coordinates of z in the GF(q)-span of `basis`, as GF(q) codes; nullopt when z is outside.
inline std::optional<std::vector<u32>> gfq_coordinates(const Elem& z, const std::vector<Elem>& basis,
                                                      const FieldPtr& Fq) {
    const FieldPtr& E = z.field();
    auto omega = gfq_basis_in(Fq, E);
    unsigned e = Fq->degree();
    gfp::Matrix m(E->degree(), basis.size() * e);
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (unsigned l = 0; l < e; ++l) m.set_column(j * e + l, (omega[l] * basis[j]).coords());
    auto sol = gfp::solve(m, z.coords(), E->characteristic());
    if (!sol) return std::nullopt;
    std::vector<u32> out;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        Coords c(e);
        for (unsigned l = 0; l < e; ++l) c[l] = (*sol)[j * e + l];
        out.push_back(static_cast<u32>(Fq->encode(c)));
    }
    return out;
}

}  // namespace detail

inline GaloisMatrix frobenius_matrix_of(const RootSpace& rs, u64 q) {
    FieldPtr Fq = field_of_order(q);
    std::size_t n = rs.basis.size();
    GaloisMatrix gm;
    gm.power = rs.ground->order();
    gm.roots = rs;
    if (n == 0) throw Error("frobenius_matrix: L has no nonzero roots");
    gm.moore = moore_delta(rs.basis, q);
    gm.S = MatGF(Fq, static_cast<unsigned>(n));
    for (std::size_t i = 0; i < n; ++i) {
        auto c = detail::gfq_coordinates(rs.basis[i].pow(gm.power), rs.basis, Fq);
        if (!c) throw Error("frobenius_matrix: image of a root left the root space");
        for (std::size_t j = 0; j < n; ++j) gm.S.set(static_cast<unsigned>(i), static_cast<unsigned>(j), (*c)[j]);
    }
    return gm;
}

inline GaloisMatrix frobenius_matrix(const LinearizedPoly& L, const FieldPtr& F) {
    return frobenius_matrix_of(root_space(L, F), L.q());
}

/// S D == sigma(D) entrywise.
inline bool frobenius_identity_holds(const GaloisMatrix& gm) {
    const auto& D = gm.moore.D;
    const FieldPtr& E = gm.moore.delta.field();
    std::size_t n = D.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Elem lhs = Elem::zero(E);
            for (std::size_t k = 0; k < n; ++k)
                lhs += embed(gm.S.elem(static_cast<unsigned>(i), static_cast<unsigned>(k)), E) * D[k][j];
            if (lhs != D[i][j].pow(gm.power)) return false;
        }
    }
    return true;
}

/// True iff c = mu^{q-1} for some mu in c's field.
inline bool is_q_minus_1_power(const Elem& c, u64 q) {
    if (c.is_zero()) return true;
    const FieldPtr& F = c.field();
    u64 N = F->order() - 1;
    if (F->order() <= (u64{1} << 16)) {
        for (u64 code = 1; code < F->order(); ++code)
            if (Elem::from_code(F, code).pow(q - 1) == c) return true;
        return false;
    }
    return c.pow(N / std::gcd(q - 1, N)).is_one();
}

struct IdentityCheck {
    std::string name;
    bool pass = false;
    bool applicable = true;
    std::vector<std::pair<std::string, std::string>> values;
};

struct DeterminantReport {
    std::vector<IdentityCheck> checks;  // five entries, fixed order
    GaloisMatrix galois;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/**
 * (i)   delta^{q-1} lies in F
 * (ii)  coefficient of x in L equals (-1)^n delta^{q-1}
 * (iii) sigma(delta) = det(S) delta
 * (iv)  if (-1)^n coeff_x(L) is a (q-1)-th power in F then det S = 1
 * (v)   delta in F iff det S = 1
 */
inline DeterminantReport verify_determinant_identities(const LinearizedPoly& L, const FieldPtr& F) {
    if (!L.is_monic()) throw Error("verify_determinant_identities: L must be monic");
    DeterminantReport rep;
    rep.galois = frobenius_matrix(L, F);
    const GaloisMatrix& gm = rep.galois;
    const FieldPtr& E = gm.roots.big;
    u64 q = L.q();
    std::size_t n = gm.roots.basis.size();
    const Elem& delta = gm.moore.delta;
    Elem dq = delta.pow(q - 1);
    Elem sign = (n % 2) ? -Elem::one(E) : Elem::one(E);
    Elem cx = embed(L.coeff_x(), E);
    u32 detS = gm.S.det();
    Elem detS_e = embed(Elem::from_code(gm.S.field(), detS), E);
    bool delta_in_F = in_subfield(delta, F->degree());
    std::string det_str = Elem::from_code(gm.S.field(), detS).to_string();

    rep.checks.push_back({"delta^(q-1) in F", in_subfield(dq, F->degree()), true,
                          {{"delta", delta.to_string()}, {"delta^(q-1)", dq.to_string()}}});
    rep.checks.push_back({"coeff_x(L) = (-1)^n delta^(q-1)", cx == sign * dq, true,
                          {{"coeff_x", L.coeff_x().to_string()}, {"(-1)^n delta^(q-1)", (sign * dq).to_string()}}});
    Elem sd = delta.pow(gm.power);
    rep.checks.push_back({"sigma(delta) = det(S) delta", sd == detS_e * delta, true,
                          {{"sigma(delta)", sd.to_string()}, {"det S", det_str}}});
    Elem c = (n % 2) ? -L.coeff_x() : L.coeff_x();
    bool is_pow = is_q_minus_1_power(c, q);
    rep.checks.push_back({"(-1)^n coeff_x a (q-1)-power implies det S = 1", !is_pow || detS == 1, is_pow,
                          {{"(-1)^n coeff_x", c.to_string()}, {"is (q-1)-power", is_pow ? "true" : "false"}, {"det S", det_str}}});
    rep.checks.push_back({"delta in F iff det S = 1", delta_in_F == (detS == 1), true,
                          {{"delta in F", delta_in_F ? "true" : "false"}, {"det S", det_str}}});
    return rep;
}

}  // namespace linfield
