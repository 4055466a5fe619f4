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

#include <numeric>
#include <random>

#include "linfield/groups.hpp"
#include "linfield/io.hpp"
#include "oracles.hpp"

using namespace linfield;

namespace {

oracle::Mat to_rows(const MatGF& m) {
    oracle::Mat r(m.n(), std::vector<u32>(m.n()));
    for (unsigned i = 0; i < m.n(); ++i)
        for (unsigned j = 0; j < m.n(); ++j) r[i][j] = m.at(i, j);
    return r;
}

std::vector<oracle::Mat> to_rows(const std::vector<MatGF>& v) {
    std::vector<oracle::Mat> r;
    for (const auto& m : v) r.push_back(to_rows(m));
    return r;
}

MatGF random_mat(const FieldPtr& F, unsigned n, std::mt19937_64& rng) {
    MatGF m(F, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) m.set(i, j, static_cast<u32>(rng() % F->order()));
    return m;
}

std::vector<u64> class_orders(const Classification& c) {
    std::vector<u64> v;
    for (const auto& k : c.classes) v.push_back(k.fingerprint.order);
    return v;
}

}  // namespace

TEST(MatGF, ArithmeticMatchesNaiveMatrices) {
    std::mt19937_64 rng(1);
    for (u32 p : {2u, 3u, 5u}) {
        FieldPtr F = field_of_order(p);
        for (int t = 0; t < 40; ++t) {
            unsigned n = 1 + rng() % 3;
            MatGF a = random_mat(F, n, rng), b = random_mat(F, n, rng);
            EXPECT_EQ(to_rows(a * b), oracle::mul(to_rows(a), to_rows(b), p));
            EXPECT_EQ(a.det(), oracle::det(to_rows(a), p));
            EXPECT_EQ(MatGF::from_key(F, n, a.key()), a);
            if (a.det()) {
                EXPECT_TRUE((a * a.inverse()).is_identity());
                EXPECT_EQ(a.order(), oracle::order(to_rows(a), p));
            } else {
                EXPECT_THROW(a.inverse(), Error);
            }
        }
    }
}

TEST(MatGF, DeterminantIsMultiplicativeOverExtensionField) {
    std::mt19937_64 rng(2);
    FieldPtr F = field_of_order(9);
    for (int t = 0; t < 40; ++t) {
        MatGF a = random_mat(F, 3, rng), b = random_mat(F, 3, rng);
        EXPECT_EQ(Elem::from_code(F, (a * b).det()), Elem::from_code(F, a.det()) * Elem::from_code(F, b.det()));
    }
}

TEST(MatGF, ActsOnRowVectors) {
    FieldPtr F = field_of_order(3);
    MatGF m = MatGF::from_rows(F, {{0, 1}, {2, 0}});
    EXPECT_EQ(m.apply({1, 0}), (std::vector<u32>{0, 1}));
    EXPECT_EQ(m.apply({0, 1}), (std::vector<u32>{2, 0}));
    EXPECT_EQ(decode_vector(encode_vector({2, 1, 0}, 3), 3, 3), (std::vector<u32>{2, 1, 0}));
}

TEST(Singer, CompanionMatrixForCubicOverGF2) {
    SingerData d = singer_data(2, 3);
    EXPECT_EQ(io::format(d.modulus), "1 + x + x^3");
    EXPECT_TRUE(d.modulus_primitive);
    EXPECT_EQ(oracle::order(to_rows(d.matrix), 2), 7u);
}

TEST(Singer, OrdersAndDeterminants) {
    for (auto [q, n] : std::vector<std::pair<u64, unsigned>>{{2, 2}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {4, 2}, {4, 3}, {5, 2}, {5, 3}, {7, 2}, {9, 2}}) {
        SingerData d = singer_data(q, n);
        EXPECT_EQ(d.matrix.order(), arith::ipow(q, n) - 1) << q << "," << n;
        EXPECT_EQ(element_order(Elem::from_code(d.matrix.field(), d.matrix.det())), q - 1) << q << "," << n;
        EXPECT_EQ(d.frobenius.order(), n);
        EXPECT_EQ(d.frobenius.inverse() * d.matrix * d.frobenius, d.matrix.pow(q));
        if (arith::prime_power(q)->second == 1) {
            EXPECT_EQ(oracle::order(to_rows(d.matrix), static_cast<u32>(q)), arith::ipow(q, n) - 1);
        }
    }
    EXPECT_FALSE(singer_data(4, 3).modulus_primitive);
    EXPECT_FALSE(singer_data(5, 3).modulus_primitive);
}

TEST(Groups, ClosureExamples) {
    FieldPtr F2 = field_of_order(2);
    EXPECT_EQ(closure({MatGF::identity(F2, 3)}, 100)->order(), 1u);
    MatGF tau = singer_cycle(2, 3), phi = frobenius_semilinear(2, 3);
    EXPECT_EQ(closure({tau}, 100)->order(), 7u);
    EXPECT_EQ(closure({tau, phi}, 100)->order(), 21u);
    EXPECT_EQ(oracle::group_order(to_rows(std::vector<MatGF>{tau, phi}), 2), 21u);
    EXPECT_FALSE(closure({tau, phi}, 20).has_value());
}

TEST(Groups, SemilinearOrderFormulas) {
    for (auto [q, n] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {3, 3}, {4, 3}, {5, 3}, {2, 5}, {3, 2}, {7, 2}}) {
        u64 N = arith::ipow(q, n) - 1;
        EXPECT_EQ(gamma_l(q, n, false).order(), n * N) << q << "," << n;
        EXPECT_EQ(gamma_l(q, n, true).order(), n * N / (q - 1)) << q << "," << n;
    }
    EXPECT_EQ(gamma_l(2, 3, false).order(), 21u);
    EXPECT_EQ(gamma_l(3, 3, true).order(), 39u);
    for (unsigned n : {2u, 3u, 4u}) EXPECT_EQ(gamma_l(2, n, true).keys, gamma_l(2, n, false).keys);
}

TEST(Groups, ClassicalGroupOrders) {
    EXPECT_EQ(sl_group(2, 3).order(), 168u);
    EXPECT_EQ(oracle::group_order(to_rows(sl_generators(2, 3)), 2), 168u);
    EXPECT_EQ(sl_group(3, 2).order(), 24u);
    EXPECT_EQ(gl_group(3, 2).order(), 48u);
    EXPECT_EQ(sl_group(5, 2).order(), 120u);
    EXPECT_EQ(sl_group(4, 2).order(), 60u);
    EXPECT_EQ(oracle::group_order(to_rows(sl_generators(5, 2)), 5), 120u);
}

TEST(Groups, TransitivityMatchesOrbitSearch) {
    EXPECT_TRUE(orbits(gamma_l(2, 3, false)).transitive);
    EXPECT_FALSE(orbits(gamma_l(3, 3, true)).transitive);
    EXPECT_FALSE(orbits(gamma_l(4, 3, true)).transitive);
    for (auto [q, n] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {2, 5}, {3, 3}, {5, 3}, {3, 2}, {7, 2}}) {
        for (bool sl : {false, true}) {
            GroupSet G = gamma_l(q, n, sl);
            EXPECT_EQ(orbits(G).transitive, oracle::transitive(to_rows(G.generators), static_cast<u32>(q)));
            EXPECT_EQ(is_transitive(G.generators, q, n), orbits(G).transitive);
        }
    }
}

TEST(Groups, OrbitsPartitionNonzeroVectors) {
    GroupSet G = gamma_l(3, 3, true);
    u64 total = 0;
    std::set<u64> seen;
    for (const auto& o : orbits(G).orbits) {
        total += o.size();
        for (u64 v : o) EXPECT_TRUE(seen.insert(v).second);
    }
    EXPECT_EQ(total, 26u);
    for (const auto& g : G.elements) {
        auto t = vector_cycle_type(g);
        EXPECT_EQ(std::accumulate(t.begin(), t.end(), u64{0}), 26u);
    }
}

TEST(Groups, FingerprintExamples) {
    GroupFingerprint z = fingerprint(*closure({singer_cycle(2, 3)}, 100));
    EXPECT_EQ(z.order_histogram, (std::map<u64, u64>{{1, 1}, {7, 6}}));
    EXPECT_EQ(z.involutions, 0u);
    GroupFingerprint s = fingerprint(sl_group(5, 2));
    EXPECT_EQ(s.order, 120u);
    EXPECT_EQ(s.involutions, 1u);
    EXPECT_EQ(s.center_order, 2u);
    EXPECT_EQ(fingerprint(gl_group(3, 2)).det_image_order, 2u);
}

TEST(Groups, NormalityAndConjugacy) {
    GroupSet Z = *closure({singer_cycle(2, 3)}, 100), G = gamma_l(2, 3, false), SL = sl_group(2, 3);
    EXPECT_TRUE(is_normal_in(Z, G));
    EXPECT_FALSE(is_normal_in(Z, SL));
    MatGF c = MatGF::from_rows(field_of_order(2), {{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
    GroupSet Zc = *closure({c.inverse() * singer_cycle(2, 3) * c}, 100);
    auto g = find_conjugator(Z, Zc, SL);
    ASSERT_TRUE(g.has_value());
    for (const auto& x : Z.elements) EXPECT_TRUE(Zc.contains(*g * x * g->inverse()));
    EXPECT_FALSE(find_conjugator(Z, G, SL).has_value());
}

TEST(Classify, SL32HasThreeTransitiveClasses) {
    Classification c = classify_transitive_subgroups(2, 3);
    EXPECT_TRUE(c.exhaustive);
    EXPECT_EQ(class_orders(c), (std::vector<u64>{7, 21, 168}));
    // some conjugate of the order-7 class is normal in the order-21 representative
    bool normal = false;
    for (const auto& h : c.classes[1].group.elements)
        if (h.order() == 7) normal = normal || is_normal_in(*closure({h}, 100), c.classes[1].group);
    EXPECT_TRUE(normal);
}

TEST(Classify, TwoDimensionalSmallFields) {
    EXPECT_EQ(class_orders(classify_transitive_subgroups(2, 2)), (std::vector<u64>{3, 6}));
    Classification c3 = classify_transitive_subgroups(3, 2);
    ASSERT_EQ(class_orders(c3), (std::vector<u64>{8, 24}));
    EXPECT_EQ(c3.classes[0].fingerprint.involutions, 1u);
    EXPECT_EQ(c3.classes[0].fingerprint.order_histogram.at(4), 6u);
    for (const auto& k : c3.classes)
        EXPECT_EQ(oracle::transitive(to_rows(k.group.generators), 3), true);
}

TEST(Classify, RandomizedModeIsSeedDeterministic) {
    ClassifyOptions o;
    o.mode = ClassifyMode::Randomized;
    o.samples = 100;
    Classification a = classify_transitive_subgroups(5, 2, o), b = classify_transitive_subgroups(5, 2, o);
    ASSERT_EQ(a.classes.size(), b.classes.size());
    for (std::size_t i = 0; i < a.classes.size(); ++i) EXPECT_EQ(a.classes[i].fingerprint, b.classes[i].fingerprint);
    EXPECT_FALSE(a.exhaustive);
    for (const auto& k : a.classes) EXPECT_TRUE(k.fingerprint.transitive);
}

TEST(Classify, TwoGenerationIsComplete) {
    for (auto [q, n] : std::vector<std::pair<u64, unsigned>>{{2, 2}, {3, 2}, {2, 3}}) {
        GenerationCheck g = verify_two_generation(q, n);
        EXPECT_TRUE(g.complete) << q << "," << n;
        EXPECT_TRUE(g.missing.empty());
    }
}
