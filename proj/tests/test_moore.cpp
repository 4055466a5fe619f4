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
#include "linfield/moore.hpp"
#include "oracles.hpp"

using namespace linfield;

namespace {

LinearizedPoly random_monic(u64 q, const FieldPtr& F, unsigned n, std::mt19937_64& rng) {
    std::vector<Elem> c;
    do {
        c.assign(1, Elem::from_code(F, rng() % F->order()));
    } while (c[0].is_zero());
    for (unsigned i = 1; i < n; ++i) c.push_back(Elem::from_code(F, rng() % F->order()));
    c.push_back(Elem::one(F));
    return {q, F, c};
}

oracle::Mat to_rows(const MatGF& m) {
    oracle::Mat r(m.n(), std::vector<u32>(m.n()));
    for (unsigned i = 0; i < m.n(); ++i)
        for (unsigned j = 0; j < m.n(); ++j) r[i][j] = m.at(i, j);
    return r;
}

}  // namespace

TEST(Moore, DeltaExamples) {
    FieldPtr F8 = field_of_order(8);
    Elem beta = Elem::x(F8);
    for (u64 q : {2, 3, 4, 5}) EXPECT_TRUE(moore_delta({Elem::one(field_of_order(q))}, q).delta.is_one());
    MooreData md = moore_delta({beta, beta * beta}, 2);
    EXPECT_TRUE(md.delta.is_one());
    EXPECT_EQ(md.D[0][0], beta);
    EXPECT_EQ(md.D[1][0], beta * beta);
    EXPECT_THROW(moore_delta({beta, beta}, 2), Error);
    EXPECT_THROW(moore_delta({}, 2), Error);
}

TEST(Moore, DeltaVanishesExactlyOnDependentSets) {
    std::mt19937_64 rng(5);
    for (auto [q, k] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {3, 3}, {4, 3}, {2, 6}}) {
        FieldPtr Fq = field_of_order(q);
        FieldPtr E = field_create(Fq->characteristic(), Fq->degree() * k);
        for (int t = 0; t < 40; ++t) {
            unsigned n = 1 + rng() % 3;
            std::vector<Elem> b;
            for (unsigned i = 0; i < n; ++i) b.push_back(Elem::from_code(E, rng() % E->order()));
            bool indep = oracle::independent(b, Fq);
            if (indep)
                EXPECT_FALSE(moore_delta(b, q).delta.is_zero());
            else
                EXPECT_THROW(moore_delta(b, q), Error);
        }
    }
}

TEST(Moore, DeterminantMatchesLeibniz) {
    std::mt19937_64 rng(6);
    for (u32 p : {2u, 3u, 7u}) {
        FieldPtr F = field_create(p, 1);
        for (int t = 0; t < 30; ++t) {
            std::size_t n = 1 + rng() % 4;
            ElemMatrix m(n);
            oracle::Mat o(n, std::vector<u32>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    o[i][j] = static_cast<u32>(rng() % p);
                    m[i].push_back(Elem::from_code(F, o[i][j]));
                }
            EXPECT_EQ(determinant(m).code(), oracle::det(o, p));
        }
    }
}

TEST(Moore, ReconstructionExamples) {
    for (u64 q : {2, 3, 4}) {
        FieldPtr F = field_of_order(q);
        LinearizedPoly L = reconstruct_L(moore_delta({Elem::one(F)}, q));
        EXPECT_EQ(L, LinearizedPoly(q, F, {-Elem::one(F), Elem::one(F)}));
    }
    FieldPtr F8 = field_of_order(8);
    Elem beta = Elem::x(F8);
    LinearizedPoly L = reconstruct_L(moore_delta({beta, beta * beta}, 2));
    EXPECT_TRUE(L.is_monic());
    EXPECT_EQ(L.q_degree(), 2);
    EXPECT_TRUE(L.coeff_x().is_one());
    EXPECT_EQ(beta * beta * beta * (beta + beta * beta), L.coeff_x());
    for (const auto& z : {beta, beta * beta, beta + beta * beta}) EXPECT_TRUE(lin_eval(L, z).is_zero());
}

TEST(Moore, ReconstructionInvertsRootSpace) {
    std::mt19937_64 rng(9);
    for (auto [q, m] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {2, 3}, {3, 1}, {3, 2}, {4, 1}, {5, 1}}) {
        FieldPtr Fq = field_of_order(q);
        FieldPtr F = field_create(Fq->characteristic(), Fq->degree() * m);
        for (int t = 0; t < 10; ++t) {
            LinearizedPoly L = random_monic(q, F, 1 + rng() % 3, rng);
            RootSpace rs = root_space(L, F);
            MooreData md = moore_delta(rs.basis, q);
            EXPECT_EQ(reconstruct_L(md), L.embedded_in(rs.big)) << io::format(L);
        }
    }
}

TEST(Moore, FrobeniusMatrixExamples) {
    for (u64 q : {2, 3, 4}) {
        FieldPtr F = field_of_order(q);
        GaloisMatrix gm = frobenius_matrix(LinearizedPoly(q, F, {-Elem::one(F), Elem::one(F)}), F);
        EXPECT_TRUE(gm.S.is_identity());
    }
    GaloisMatrix gm = frobenius_matrix(io::parse_linearized("x^8 + x^2 + x", field_of_order(2), 2), field_of_order(2));
    EXPECT_EQ(oracle::order(to_rows(gm.S), 2), 7u);
    EXPECT_EQ(oracle::det(to_rows(gm.S), 2), 1u);
    EXPECT_TRUE(frobenius_identity_holds(gm));
}

TEST(Moore, NormalBasisGivesCyclicPermutation) {
    FieldPtr F2 = field_of_order(2), F8 = field_of_order(8);
    LinearizedPoly L(2, F2, {Elem::one(F2), Elem::zero(F2), Elem::zero(F2), Elem::one(F2)});  // x^8 + x
    for (u64 c = 1; c < 8; ++c) {
        Elem w = Elem::from_code(F8, c);
        std::vector<Elem> nb{w, w.pow(2), w.pow(4)};
        if (!oracle::independent(nb, F2)) continue;
        RootSpace rs{3, F2, F8, L.embedded_in(F8), nb};
        GaloisMatrix gm = frobenius_matrix_of(rs, 2);
        EXPECT_EQ(to_rows(gm.S), (oracle::Mat{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
        EXPECT_EQ(gm.S.det(), 1u);
    }
}

TEST(Moore, FrobeniusMatrixProperties) {
    std::mt19937_64 rng(10);
    for (auto [q, m] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 1}, {5, 1}}) {
        FieldPtr Fq = field_of_order(q);
        FieldPtr F = field_create(Fq->characteristic(), Fq->degree() * m);
        for (int t = 0; t < 8; ++t) {
            LinearizedPoly L = random_monic(q, F, 1 + rng() % 3, rng);
            GaloisMatrix gm = frobenius_matrix(L, F);
            EXPECT_TRUE(frobenius_identity_holds(gm));
            EXPECT_NE(gm.S.det(), 0u);
            EXPECT_EQ(gm.S.order(), gm.roots.splitting_degree);
            if (Fq->degree() == 1) {
                EXPECT_EQ(oracle::order(to_rows(gm.S), static_cast<u32>(q)), gm.roots.splitting_degree);
            }
        }
    }
}

TEST(Moore, QMinusOnePowerMatchesEnumeration) {
    for (auto [q, k] : std::vector<std::pair<u64, unsigned>>{{2, 1}, {3, 2}, {4, 2}, {5, 1}, {3, 4}}) {
        FieldPtr Fq = field_of_order(q);
        FieldPtr F = field_create(Fq->characteristic(), Fq->degree() * k);
        std::set<u64> powers;
        for (u64 c = 1; c < F->order(); ++c) powers.insert(Elem::from_code(F, c).pow(q - 1).code());
        for (u64 c = 1; c < F->order(); ++c) EXPECT_EQ(is_q_minus_1_power(Elem::from_code(F, c), q), powers.count(c) > 0);
    }
    FieldPtr big = field_create(3, 24);  // exercises the exponent test
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        Elem z = Elem::from_code(big, 1 + rng() % (big->order() - 1));
        EXPECT_TRUE(is_q_minus_1_power(z.pow(2), 3));
    }
}

TEST(Moore, DeterminantIdentitiesOnKnownInstance) {
    FieldPtr F2 = field_of_order(2);
    DeterminantReport rep = verify_determinant_identities(io::parse_linearized("x^8 + x^2 + x", F2, 2), F2);
    ASSERT_EQ(rep.checks.size(), 5u);
    EXPECT_TRUE(rep.all_pass());
    EXPECT_EQ(rep.galois.S.det(), 1u);
}

TEST(Moore, DeterminantIdentitiesOnRandomInstances) {
    std::mt19937_64 rng(12);
    for (u64 order : {3, 4, 9}) {
        FieldPtr F = field_of_order(order);
        for (u64 q : {u64{F->characteristic()}, order}) {
            for (int t = 0; t < 25; ++t) {
                LinearizedPoly L = random_monic(q, F, 1 + rng() % 3, rng);
                if (!root_space(L, F).big->tabulated()) continue;
                DeterminantReport rep = verify_determinant_identities(L, F);
                for (const auto& c : rep.checks) EXPECT_TRUE(c.pass) << c.name << " on " << io::format(L) << " over " << F->to_string();
            }
            if (q == order) break;
        }
    }
}

TEST(Moore, DeltaInGroundFieldIffDetOne) {
    // x^9 + x^3 + 2x over GF(3): delta^2 = 2 is not a square in GF(3), so det S = -1
    FieldPtr F3 = field_of_order(3);
    DeterminantReport rep = verify_determinant_identities(io::parse_linearized("x^9 + x^3 + 2*x", F3, 3), F3);
    EXPECT_TRUE(rep.all_pass());
    EXPECT_EQ(rep.galois.S.det(), 2u);
    EXPECT_FALSE(in_subfield(rep.galois.moore.delta, 1));
}
