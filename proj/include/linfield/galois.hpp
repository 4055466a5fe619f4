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
 * @file galois.hpp
 * @brief Galois groups of q-polynomials.
 *
 * Over a finite ground field the group is cyclic, generated by the Frobenius
 * matrix. Over GF(q^m)(t) the group is probed by specializing t: for a
 * separable specialization the factor degrees of L_a(x)/x are the cycle
 * lengths of a group element on the nonzero roots. A candidate group that
 * has no element of an observed cycle type is ruled out. Elimination is
 * one-sided; a surviving candidate is only "consistent".
 */

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "groups.hpp"
#include "linpoly.hpp"
#include "moore.hpp"

namespace linfield {

// --------------------------------------------------------------------------
// Finite ground fields

struct FiniteGalois {
    unsigned splitting_degree = 0;
    GaloisMatrix frobenius;
    GroupSet group;  // cyclic, generated by frobenius.S
    bool transitive = false;
};

inline FiniteGalois galois_group_finite(const LinearizedPoly& L, const FieldPtr& F) {
    FiniteGalois g;
    g.frobenius = frobenius_matrix(L, F);
    g.splitting_degree = g.frobenius.roots.splitting_degree;
    const MatGF& S = g.frobenius.S;
    auto G = closure({S}, S.field(), S.n(), g.splitting_degree + 1);
    if (!G) throw Error("galois_group_finite: Frobenius order exceeds the splitting degree");
    g.group = std::move(*G);
    g.transitive = is_transitive(g.group.generators, g.group.q(), g.group.n);
    return g;
}

// --------------------------------------------------------------------------
// Function-field polynomials

/// sum a_i(t) x^{q^i}, each a_i a polynomial in t over F = GF(q^m).
struct BivariateLinPoly {
    u64 q = 0;
    FieldPtr field;
    std::vector<UniPoly> coeffs;  // a_0(t) .. a_n(t); a_n nonzero

    int q_degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool depends_on_t() const {
        for (const auto& c : coeffs)
            if (c.degree() > 0) return true;
        return false;
    }
};

inline BivariateLinPoly make_bivariate(u64 q, const FieldPtr& F, std::vector<UniPoly> coeffs) {
    auto pp = arith::prime_power(q);
    if (!pp || pp->first != F->characteristic() || F->degree() % pp->second != 0)
        throw Error("bivariate q-polynomial: " + F->to_string() + " does not contain GF(" + std::to_string(q) + ")");
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.empty()) throw Error("bivariate q-polynomial: zero polynomial");
    for (auto& c : coeffs) {
        if (!c.field()->same_as(*F)) c = c.embedded_in(F);
    }
    return {q, F, std::move(coeffs)};
}

enum class Rejection { None, Inseparable, DegreeDrop };

struct Specialization {
    std::optional<LinearizedPoly> poly;
    Rejection rejection = Rejection::None;
};

/// L with t = a; rejected when a_0(a) = 0 or a_n(a) = 0.
inline Specialization specialize(const BivariateLinPoly& Lt, const Elem& a) {
    const FieldPtr& K = a.field();
    if (K->characteristic() != Lt.field->characteristic() || K->degree() % Lt.field->degree() != 0)
        throw Error("specialize: " + K->to_string() + " does not extend " + Lt.field->to_string());
    std::vector<Elem> c;
    for (const auto& p : Lt.coeffs) c.push_back(p.eval(a));
    if (c.front().is_zero()) return {std::nullopt, Rejection::Inseparable};
    if (c.back().is_zero()) return {std::nullopt, Rejection::DegreeDrop};
    return {LinearizedPoly(Lt.q, K, c), Rejection::None};
}

using CycleType = std::vector<unsigned>;  // ascending

inline std::string cycle_type_string(const CycleType& t) {
    std::string s = "{";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + "}";
}

struct SamplePlan {
    unsigned exhaustive_max_k = 4;  // all points of GF(q^{mk}) for k <= this
    unsigned random_max_k = 8;      // seeded random points for the remaining k
    u64 max_accepted = 500;
    u64 seed = 0;
};

struct Sample {
    unsigned k = 0;      // point lies in GF(q^{mk}); (q^m)^k elements
    u64 point = 0;       // element code in that field
    CycleType type;
};

struct SampleRun {
    std::vector<Sample> samples;  // ordered by (k, point)
    u64 points_tried = 0;
    u64 rejected_inseparable = 0;
    u64 rejected_degree_drop = 0;
    u64 skipped_not_squarefree = 0;
};

/// Cycle type of the specialization at `a`, or nullopt when it must be skipped.
inline std::optional<CycleType> specialization_type(const BivariateLinPoly& Lt, const Elem& a, SampleRun& run) {
    auto sp = specialize(Lt, a);
    if (!sp.poly) {
        (sp.rejection == Rejection::Inseparable ? run.rejected_inseparable : run.rejected_degree_drop)++;
        return std::nullopt;
    }
    UniPoly m = sp.poly->divided_by_x();
    if (!is_squarefree(m)) {
        ++run.skipped_not_squarefree;
        return std::nullopt;
    }
    return factor_degrees(m);
}

inline SampleRun cycle_type_sample(const BivariateLinPoly& Lt, const SamplePlan& plan = {}) {
    SampleRun run;
    std::mt19937_64 rng(plan.seed);
    u32 p = Lt.field->characteristic();
    for (unsigned k = 1; k <= plan.random_max_k && run.samples.size() < plan.max_accepted; ++k) {
        FieldPtr K = field_create(p, Lt.field->degree() * k);
        if (!K->tabulated()) break;
        u64 size = K->order();
        std::vector<u64> points;
        u64 remaining = plan.max_accepted - run.samples.size();
        u64 quota = k <= plan.exhaustive_max_k ? size : (remaining + (plan.random_max_k - k)) / (plan.random_max_k - k + 1);
        if (quota >= size) {
            for (u64 c = 0; c < size; ++c) points.push_back(c);
        } else {
            std::set<u64> chosen;
            while (chosen.size() < quota) chosen.insert(rng() % size);
            points.assign(chosen.begin(), chosen.end());
        }
        for (u64 c : points) {
            if (run.samples.size() >= plan.max_accepted) break;
            ++run.points_tried;
            auto t = specialization_type(Lt, Elem::from_code(K, c), run);
            if (t) run.samples.push_back({k, c, std::move(*t)});
        }
    }
    if (run.samples.empty()) throw Error("cycle_type_sample: no specialization was accepted");
    return run;
}

/// Cycle types of all elements on the nonzero vectors (closed under powers).
inline std::set<CycleType> group_cycle_types(const GroupSet& G) {
    std::set<CycleType> out;
    for (const auto& g : G.elements) out.insert(vector_cycle_type(g));
    return out;
}

struct NamedGroup {
    std::string name;
    GroupSet group;
};

/// Candidate groups by name: Z (Singer), GammaL, GammaL1, SL, GL.
inline NamedGroup candidate_group(const std::string& name, u64 q, unsigned n, u64 cap = 20000) {
    if (name == "Z") {
        auto g = closure({singer_cycle(q, n)}, cap);
        if (!g) throw Error("candidate Z exceeds cap");
        return {name, *g};
    }
    if (name == "GammaL") return {name, gamma_l(q, n, false, cap)};
    if (name == "GammaL1") return {name, gamma_l(q, n, true, cap)};
    if (name == "SL") return {name, sl_group(q, n, cap)};
    if (name == "GL") return {name, gl_group(q, n, cap)};
    throw Error("unknown candidate group '" + name + "' (expected Z, GammaL, GammaL1, SL or GL)");
}

struct CandidateStatus {
    std::string name;
    u64 order = 0;
    bool ruled_out = false;
    std::optional<Sample> witness;  // first sample whose type the candidate lacks
};

struct DistinguishReport {
    std::vector<CandidateStatus> candidates;
    std::map<CycleType, u64> observed;  // type -> frequency
    u64 sample_count = 0;
    u64 seed = 0;

    std::vector<std::string> consistent() const {
        std::vector<std::string> r;
        for (const auto& c : candidates)
            if (!c.ruled_out) r.push_back(c.name);
        return r;
    }
};

inline DistinguishReport distinguish(const std::vector<Sample>& observed, const std::vector<NamedGroup>& candidates,
                                     u64 seed = 0) {
    if (observed.empty()) throw Error("distinguish: no observations");
    DistinguishReport rep;
    rep.seed = seed;
    rep.sample_count = observed.size();
    for (const auto& s : observed) ++rep.observed[s.type];
    for (const auto& cand : candidates) {
        CandidateStatus st{cand.name, cand.group.order(), false, std::nullopt};
        auto types = group_cycle_types(cand.group);
        for (const auto& s : observed) {
            if (!types.count(s.type)) {
                st.ruled_out = true;
                st.witness = s;
                break;
            }
        }
        rep.candidates.push_back(std::move(st));
    }
    if (rep.consistent().empty())
        throw Error("distinguish: every candidate was ruled out, so the observations contradict the model");
    return rep;
}

// --------------------------------------------------------------------------
// Projective quotient

struct QuotientCheck {
    unsigned s_L = 0;
    unsigned s_P = 0;
    bool divides = false;
    bool scalar = false;
    MatGF S_power;  // S^{s_P}
    bool pass() const { return divides && scalar; }
};

/// The splitting field of P lies inside that of L, and S^{s_P} is scalar.
inline QuotientCheck psl_quotient_check(const LinearizedPoly& L, const FieldPtr& F) {
    if (!L.is_monic()) throw Error("psl_quotient_check: L must be monic");
    QuotientCheck qc;
    GaloisMatrix gm = frobenius_matrix(L, F);
    qc.s_L = gm.roots.splitting_degree;
    ProjectivePoly P = projective_poly(L.embedded_in(F));
    u64 sp = 1;
    if (P.poly.degree() >= 1)
        for (unsigned d : factor_degrees(P.poly)) sp = arith::lcm(sp, d);
    qc.s_P = static_cast<unsigned>(sp);
    qc.divides = qc.s_L % qc.s_P == 0;
    qc.S_power = gm.S.pow(qc.s_P);
    qc.scalar = qc.S_power.is_scalar();
    return qc;
}

// --------------------------------------------------------------------------
// Finite-field impossibility scan

struct ImpossibilityScan {
    u64 q = 0;
    unsigned r = 0;
    u64 scanned = 0;
    std::vector<LinearizedPoly> irreducible;  // counterexamples; expected empty
};

/// Every monic L of q-degree r over GF(q) with coeff_x = (-1)^r; records those with L(x)/x irreducible.
inline ImpossibilityScan impossibility_scan(u64 q, unsigned r) {
    FieldPtr F = field_of_order(q);
    ImpossibilityScan out{q, r, 0, {}};
    Elem a0 = (r % 2) ? -Elem::one(F) : Elem::one(F);
    u64 total = arith::ipow(q, r - 1);
    for (u64 code = 0; code < total; ++code) {
        std::vector<Elem> c{a0};
        u64 k = code;
        for (unsigned i = 1; i < r; ++i, k /= q) c.push_back(Elem::from_code(F, k % q));
        c.push_back(Elem::one(F));
        LinearizedPoly L(q, F, c);
        ++out.scanned;
        if (lx_irreducible(L, F)) out.irreducible.push_back(L);
    }
    return out;
}

}  // namespace linfield
