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


#include <gtest/gtest.h>

#include <random>

#include "linfield/io.hpp"
#include "linfield/linpoly.hpp"
#include "oracles.hpp"

using namespace linfield;

namespace {

LinearizedPoly lin(const std::string& text, u64 q, u64 field_order = 0) {
    return io::parse_linearized(text, field_of_order(field_order ? field_order : q), q);
}

LinearizedPoly random_monic(u64 q, const FieldPtr& F, unsigned n, std::mt19937_64& rng) {
    std::vector<Elem> c;
    do {
        c.assign(1, Elem::from_code(F, rng() % F->order()));
    } while (c[0].is_zero());
    for (unsigned i = 1; i < n; ++i) c.push_back(Elem::from_code(F, rng() % F->order()));
    c.push_back(Elem::one(F));
    return {q, F, c};
}

}  // namespace

TEST(LinPoly, EvaluationExamples) {
    FieldPtr F8 = field_of_order(8);
    Elem beta = Elem::x(F8);
    EXPECT_EQ(lin_eval(lin("x^8 + x^2 + x", 2).embedded_in(F8), beta), beta * beta);
    for (u64 q : {2, 3, 4, 5, 7}) {
        FieldPtr F = field_of_order(q);
        LinearizedPoly L(q, F, {-Elem::one(F), Elem::one(F)});
        for (u64 c = 0; c < q; ++c) EXPECT_TRUE(lin_eval(L, Elem::from_code(F, c)).is_zero());
        EXPECT_TRUE(lin_eval(L, Elem::zero(F)).is_zero());
    }
}

TEST(LinPoly, EvaluationAgreesWithExpandedPolynomial) {
    std::mt19937_64 rng(1);
    for (auto [q, m] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {3, 2}, {4, 1}, {5, 1}}) {
        FieldPtr F = field_create(field_of_order(q)->characteristic(), field_of_order(q)->degree() * m);
        for (int t = 0; t < 10; ++t) {
            LinearizedPoly L = random_monic(q, F, 1 + rng() % 3, rng);
            UniPoly u = L.to_unipoly();
            for (int s = 0; s < 20; ++s) {
                Elem z = Elem::from_code(F, rng() % F->order());
                EXPECT_EQ(lin_eval(L, z), u.eval(z));
            }
        }
    }
}

TEST(LinPoly, AdditivityAndHomogeneity) {
    std::mt19937_64 rng(2);
    for (u64 q : {3, 4, 9}) {
        FieldPtr F = field_of_order(q * q), Fq = field_of_order(q);
        LinearizedPoly L = random_monic(q, F, 3, rng);
        for (int t = 0; t < 50; ++t) {
            Elem a = Elem::from_code(F, rng() % F->order()), b = Elem::from_code(F, rng() % F->order());
            Elem lam = embed(Elem::from_code(Fq, rng() % q), F);
            EXPECT_EQ(lin_eval(L, a + b), lin_eval(L, a) + lin_eval(L, b));
            EXPECT_EQ(lin_eval(L, lam * a), lam * lin_eval(L, a));
        }
    }
}

TEST(LinPoly, CompositionExamplesAndAssociateProduct) {
    for (u64 q : {2, 3, 4}) {
        FieldPtr F = field_of_order(q);
        LinearizedPoly X(q, F, {Elem::one(F)}), Xq(q, F, {Elem::zero(F), Elem::one(F)});
        LinearizedPoly Xq2(q, F, {Elem::zero(F), Elem::zero(F), Elem::one(F)});
        EXPECT_EQ(compose(Xq, Xq), Xq2);
        std::mt19937_64 rng(q);
        LinearizedPoly L = random_monic(q, F, 2, rng);
        EXPECT_EQ(compose(L, X), L);
        EXPECT_EQ(compose(X, L), L);
    }
    std::mt19937_64 rng(4);
    for (u64 q : {2, 3, 5}) {
        FieldPtr F = field_of_order(q);
        for (int t = 0; t < 20; ++t) {
            LinearizedPoly L1 = random_monic(q, F, 1 + rng() % 3, rng), L2 = random_monic(q, F, 1 + rng() % 3, rng);
            EXPECT_EQ(associate_from_lin(compose(L1, L2)), associate_from_lin(L1) * associate_from_lin(L2));
            FieldPtr E = field_create(F->characteristic(), 4);
            for (int s = 0; s < 10; ++s) {
                Elem z = Elem::from_code(E, rng() % E->order());
                EXPECT_EQ(lin_eval(compose(L1, L2).embedded_in(E), z),
                          lin_eval(L1.embedded_in(E), lin_eval(L2.embedded_in(E), z)));
            }
        }
    }
}

TEST(LinPoly, AssociateExamples) {
    FieldPtr F2 = field_of_order(2);
    EXPECT_EQ(io::format(lin_from_associate(UniPoly(F2, {1, 1, 0, 1}), 2)), "x^8 + x^2 + x");
    EXPECT_EQ(associate_from_lin(lin("x^8 + x^2 + x", 2)), UniPoly(F2, {1, 1, 0, 1}));
    for (u64 q : {2, 3, 4, 5}) {
        FieldPtr F = field_of_order(q);
        LinearizedPoly Xq = lin_from_associate(UniPoly::x(F), q);
        EXPECT_EQ(Xq.q_degree(), 1);
        EXPECT_TRUE(Xq.coeff_x().is_zero());
        UniPoly xm1 = UniPoly::x(F) - UniPoly::constant(F, 1);
        LinearizedPoly L = lin_from_associate(xm1, q);
        EXPECT_EQ(L.coeff_x(), -Elem::one(F));
        EXPECT_EQ(associate_from_lin(L), xm1);
        EXPECT_EQ(associate_from_lin(LinearizedPoly(q, F, {Elem::one(F), Elem::one(F), Elem::one(F)})),
                  UniPoly(F, {1, 1, 1}));
    }
    EXPECT_THROW(associate_from_lin(LinearizedPoly(2, field_of_order(4), {Elem::x(field_of_order(4)), Elem::one(field_of_order(4))})),
                 Error);
}

TEST(LinPoly, ProjectivePolynomialExamples) {
    for (u64 q : {2, 3, 4, 5}) {
        FieldPtr F = field_of_order(q);
        Elem b = F->order() > 2 ? Elem::from_code(F, 2) : Elem::one(F);
        LinearizedPoly L(q, F, {Elem::one(F), b, Elem::one(F)});
        ProjectivePoly P = projective_poly(L);
        std::vector<u32> expect(q + 2, 0);
        expect[0] = 1;
        expect[1] = static_cast<u32>(b.code());
        expect[q + 1] = 1;
        EXPECT_EQ(P.poly, UniPoly(F, expect));
        EXPECT_EQ(projective_expand(P), L.to_unipoly());
        ProjectivePoly P1 = projective_poly(LinearizedPoly(q, F, {-Elem::one(F), Elem::one(F)}));
        EXPECT_EQ(P1.poly, UniPoly::x(F) - UniPoly::constant(F, 1));
    }
    EXPECT_EQ(projective_poly(lin("x^8 + x^2 + x", 2)).poly, UniPoly(field_of_order(2), {1, 1, 0, 0, 0, 0, 0, 1}));
}

TEST(LinPoly, RootSpaceExamples) {
    for (u64 q : {2, 3, 4}) {
        FieldPtr F = field_of_order(q);
        RootSpace rs = root_space(LinearizedPoly(q, F, {-Elem::one(F), Elem::one(F)}), F);
        EXPECT_EQ(rs.splitting_degree, 1u);
        ASSERT_EQ(rs.basis.size(), 1u);
        EXPECT_TRUE(rs.basis[0].is_one());
    }
    RootSpace rs = root_space(lin("x^8 + x^2 + x", 2), field_of_order(2));
    EXPECT_EQ(rs.splitting_degree, 7u);
    EXPECT_EQ(rs.big->order(), 128u);
    EXPECT_EQ(rs.basis.size(), 3u);
}

TEST(LinPoly, RootSpaceIsTheFullRootSet) {
    std::mt19937_64 rng(8);
    for (auto [q, m] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {4, 1}, {3, 2}}) {
        FieldPtr Fq = field_of_order(q);
        FieldPtr F = field_create(Fq->characteristic(), Fq->degree() * m);
        for (int t = 0; t < 6; ++t) {
            unsigned n = 1 + rng() % 3;
            LinearizedPoly L = random_monic(q, F, n, rng);
            RootSpace rs = root_space(L, F);
            if (rs.big->order() > (1u << 14)) continue;
            ASSERT_EQ(rs.basis.size(), n);
            EXPECT_TRUE(oracle::independent(rs.basis, Fq));
            u64 roots = 0;
            for (u64 c = 0; c < rs.big->order(); ++c) roots += lin_eval(rs.poly, Elem::from_code(rs.big, c)).is_zero();
            EXPECT_EQ(roots, arith::ipow(q, n));
            // s is minimal: no smaller extension of F holds every root
            for (unsigned d = 1; d < rs.splitting_degree; ++d) {
                if (rs.splitting_degree % d) continue;
                bool all = true;
                for (const auto& b : rs.basis) all = all && in_subfield(b, F->degree() * d);
                EXPECT_FALSE(all);
            }
        }
    }
}

TEST(LinPoly, IrreducibilityExamples) {
    EXPECT_TRUE(lx_irreducible(lin("x^8 + x^2 + x", 2), field_of_order(2)));
    EXPECT_TRUE(lx_irreducible(lin("x^4 + x^2 + x", 2), field_of_order(2)));
    for (u64 q : {3, 4, 5}) {
        FieldPtr F = field_of_order(q);
        EXPECT_FALSE(lx_irreducible(LinearizedPoly(q, F, {-Elem::one(F), Elem::one(F)}), F));
    }
}

TEST(LinPoly, PrimitiveAssociateGivesIrreducibleQuotient) {
    for (auto [q, d] : std::vector<std::pair<u64, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {4, 2}, {5, 2}}) {
        FieldPtr F = field_of_order(q);
        u64 N = arith::ipow(q, d) - 1;
        for (u64 code = 0; code < arith::ipow(q, d); ++code) {
            UniPoly a = monic_from_code(F, d, code);
            if (a.coeff(0) == 0 || !is_irreducible(a) || poly_order(a) != N) continue;
            LinearizedPoly L = lin_from_associate(a, q);
            EXPECT_TRUE(lx_irreducible(L, F)) << io::format(a);
            EXPECT_EQ(root_space(L, F).splitting_degree, N);
        }
    }
}

TEST(LinPoly, FamilyCertificateExamples) {
    FieldPtr F2 = field_of_order(2);
    auto c = verify_family(lin("x^8 + x^2 + x", 2), lin("x^2", 2));
    EXPECT_TRUE(c.certified);
    EXPECT_EQ(c.r, 3);
    auto z = verify_family(lin("x^8 + x^2 + x", 2), LinearizedPoly(2, F2, {}));
    EXPECT_FALSE(z.certified);
    ASSERT_FALSE(z.violations.empty());
    EXPECT_NE(z.violations[0].find("nonzero"), std::string::npos);
    auto x = verify_family(lin("x^8 + x^2 + x", 2), lin("x^2 + x", 2));
    EXPECT_FALSE(x.certified);
    auto even = verify_family(lin("x^4 + x", 2), lin("x^2", 2));
    EXPECT_FALSE(even.certified);
}

TEST(LinPoly, RejectsInvalidInput) {
    EXPECT_THROW(LinearizedPoly(4, field_of_order(2), {}), Error);
    EXPECT_THROW(LinearizedPoly(3, field_of_order(2), {}), Error);
    EXPECT_THROW(root_space(lin("x^4 + x^2", 2), field_of_order(2)), Error);
    EXPECT_THROW(lx_irreducible(lin("x^4 + x^2", 2), field_of_order(2)), Error);
}
