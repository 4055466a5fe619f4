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

#include "linfield/galois.hpp"
#include "linfield/io.hpp"
#include "oracles.hpp"

using namespace linfield;

namespace {

BivariateLinPoly biv(const std::string& text, u64 q) { return io::parse_bivariate(text, field_of_order(q), q); }

std::set<CycleType> observed_types(const SampleRun& run) {
    std::set<CycleType> s;
    for (const auto& x : run.samples) s.insert(x.type);
    return s;
}

const CycleType kInvolution{1, 1, 1, 2, 2};

}  // namespace

TEST(GaloisFinite, Examples) {
    for (u64 q : {2, 3, 4}) {
        FieldPtr F = field_of_order(q);
        FiniteGalois g = galois_group_finite(LinearizedPoly(q, F, {-Elem::one(F), Elem::one(F)}), F);
        EXPECT_EQ(g.splitting_degree, 1u);
        EXPECT_EQ(g.group.order(), 1u);
    }
    FieldPtr F2 = field_of_order(2);
    FiniteGalois g = galois_group_finite(io::parse_linearized("x^8 + x^2 + x", F2, 2), F2);
    EXPECT_EQ(g.group.order(), 7u);
    EXPECT_TRUE(g.transitive);
    EXPECT_EQ(vector_cycle_type(g.frobenius.S), (CycleType{7}));
    UniPoly a = lex_least_primitive(F2, 5);
    FiniteGalois g5 = galois_group_finite(lin_from_associate(a, 2), F2);
    EXPECT_EQ(g5.group.order(), 31u);
    EXPECT_TRUE(g5.transitive);
}

TEST(GaloisFinite, TransitiveIffQuotientIrreducible) {
    std::mt19937_64 rng(3);
    for (u64 q : {2, 3, 4, 5}) {
        FieldPtr F = field_of_order(q);
        for (int t = 0; t < 30; ++t) {
            unsigned n = 1 + rng() % 3;
            std::vector<Elem> c{Elem::from_code(F, 1 + rng() % (q - 1))};
            for (unsigned i = 1; i < n; ++i) c.push_back(Elem::from_code(F, rng() % q));
            c.push_back(Elem::one(F));
            LinearizedPoly L(q, F, c);
            FiniteGalois g = galois_group_finite(L, F);
            EXPECT_EQ(g.group.order(), g.splitting_degree);
            EXPECT_EQ(g.transitive, lx_irreducible(L, F)) << io::format(L);
            Elem sign = (n % 2) ? -Elem::one(F) : Elem::one(F);
            if (c[0] == sign) {
                EXPECT_EQ(g.frobenius.S.det(), 1u) << io::format(L);
            }
        }
    }
}

TEST(Specialize, Examples) {
    BivariateLinPoly Lt = biv("x^8 + t*x", 2);
    FieldPtr F2 = field_of_order(2), F8 = field_of_order(8);
    auto one = specialize(Lt, Elem::one(F2));
    ASSERT_TRUE(one.poly.has_value());
    EXPECT_EQ(io::format(*one.poly), "x^8 + x");
    auto zero = specialize(Lt, Elem::zero(F2));
    EXPECT_FALSE(zero.poly.has_value());
    EXPECT_EQ(zero.rejection, Rejection::Inseparable);
    Elem beta = Elem::x(F8);
    auto b = specialize(biv("x^8 + x^2 + t*x", 2), beta);
    ASSERT_TRUE(b.poly.has_value());
    EXPECT_EQ(b.poly->coeff_x(), beta);
    auto drop = specialize(biv("(1 + t)*x^4 + x", 2), Elem::one(F2));
    EXPECT_EQ(drop.rejection, Rejection::DegreeDrop);
}

TEST(Sampling, TypesMatchRootCountingOracle) {
    BivariateLinPoly Lt = biv("x^8 + x^2 + t*x", 2);
    for (unsigned k : {1u, 2u}) {
        FieldPtr K = field_create(2, k);
        for (u64 c = 1; c < K->order(); ++c) {
            Elem a = Elem::from_code(K, c);
            SampleRun run;
            auto t = specialization_type(Lt, a, run);
            if (!t) continue;
            UniPoly m = specialize(Lt, a).poly->divided_by_x();
            std::vector<Elem> coeffs;
            for (int i = 0; i <= m.degree(); ++i) coeffs.push_back(m.coeff_elem(static_cast<std::size_t>(i)));
            EXPECT_EQ(*t, oracle::factor_degrees(coeffs, K));
            EXPECT_EQ(std::accumulate(t->begin(), t->end(), 0u), 7u);
        }
    }
}

TEST(Sampling, PlanAndDeterminism) {
    BivariateLinPoly Lt = biv("x^8 + x^2 + t*x", 2);
    SamplePlan plan;
    SampleRun a = cycle_type_sample(Lt, plan), b = cycle_type_sample(Lt, plan);
    ASSERT_EQ(a.samples.size(), b.samples.size());
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        EXPECT_EQ(a.samples[i].point, b.samples[i].point);
        EXPECT_EQ(a.samples[i].type, b.samples[i].type);
    }
    EXPECT_LE(a.samples.size(), 500u);
    // k = 1..4 are enumerated in full: 2 + 4 + 8 + 16 points
    for (unsigned k = 1; k <= 4; ++k) {
        SamplePlan exact;
        exact.exhaustive_max_k = k;
        exact.random_max_k = k;
        EXPECT_EQ(cycle_type_sample(Lt, exact).points_tried, (u64{2} << k) - 2);
    }
    EXPECT_EQ(a.points_tried, a.samples.size() + a.rejected_inseparable + a.rejected_degree_drop + a.skipped_not_squarefree);
    std::set<std::pair<unsigned, u64>> points;
    for (const auto& s : a.samples) EXPECT_TRUE(points.insert({s.k, s.point}).second);
    SamplePlan other = plan;
    other.seed = 1;
    EXPECT_NO_THROW(cycle_type_sample(Lt, other));
}

TEST(Sampling, ConstantPolynomialGivesFrobeniusPowers) {
    FieldPtr F2 = field_of_order(2);
    for (const char* text : {"x^8 + x^2 + x", "x^8 + x^4 + x", "x^4 + x^2 + x", "x^8 + x"}) {
        LinearizedPoly L = io::parse_linearized(text, F2, 2);
        FiniteGalois g = galois_group_finite(L, F2);
        SampleRun run = cycle_type_sample(biv(text, 2));
        for (const auto& s : run.samples) EXPECT_EQ(s.type, vector_cycle_type(g.frobenius.S.pow(s.k))) << text << " k=" << s.k;
        std::vector<NamedGroup> cands{{"G", g.group}};
        EXPECT_FALSE(distinguish(run.samples, cands).candidates[0].ruled_out);
    }
}

TEST(CycleTypes, CandidateTypeSets) {
    auto z = group_cycle_types(candidate_group("Z", 2, 3).group);
    EXPECT_EQ(z, (std::set<CycleType>{{7}, {1, 1, 1, 1, 1, 1, 1}}));
    auto gl = group_cycle_types(candidate_group("GammaL", 2, 3).group);
    EXPECT_TRUE(gl.count({1, 3, 3}));
    EXPECT_FALSE(gl.count(kInvolution));
    auto sl = group_cycle_types(candidate_group("SL", 2, 3).group);
    EXPECT_TRUE(sl.count(kInvolution));
    EXPECT_TRUE(sl.count({1, 2, 4}));
    for (const auto& g : candidate_group("GammaL", 2, 3).group.elements)
        for (u64 k = 1; k <= 8; ++k) EXPECT_TRUE(gl.count(vector_cycle_type(g.pow(k))));
    EXPECT_THROW(candidate_group("PSL", 2, 3), Error);
}

TEST(Distinguish, SpecialLinearFamily) {
    SampleRun run = cycle_type_sample(biv("x^8 + x^2 + t*x", 2));
    EXPECT_TRUE(observed_types(run).count(kInvolution));
    std::vector<NamedGroup> cands{candidate_group("Z", 2, 3), candidate_group("GammaL", 2, 3), candidate_group("SL", 2, 3)};
    DistinguishReport rep = distinguish(run.samples, cands, 0);
    EXPECT_EQ(rep.consistent(), (std::vector<std::string>{"SL"}));
    for (const auto& c : rep.candidates) {
        if (!c.ruled_out) continue;
        ASSERT_TRUE(c.witness.has_value());
        NamedGroup g = candidate_group(c.name, 2, 3);
        EXPECT_FALSE(group_cycle_types(g.group).count(c.witness->type));
    }
}

TEST(Distinguish, SemilinearFamilyIsOneSided) {
    SampleRun run = cycle_type_sample(biv("x^8 + t*x", 2));
    for (const auto& t : observed_types(run))
        EXPECT_TRUE(t == CycleType({7}) || t == CycleType({1, 3, 3}) || t == CycleType({1, 1, 1, 1, 1, 1, 1}))
            << cycle_type_string(t);
    std::vector<NamedGroup> cands{candidate_group("Z", 2, 3), candidate_group("GammaL", 2, 3), candidate_group("SL", 2, 3)};
    DistinguishReport rep = distinguish(run.samples, cands, 0);
    EXPECT_EQ(rep.consistent(), (std::vector<std::string>{"GammaL", "SL"}));
    EXPECT_EQ(rep.candidates[0].witness->type, (CycleType{1, 3, 3}));
}

TEST(Distinguish, IdentityObservationsRuleNothingOut) {
    std::vector<Sample> obs{{1, 1, {1, 1, 1, 1, 1, 1, 1}}};
    std::vector<NamedGroup> cands{candidate_group("Z", 2, 3), candidate_group("SL", 2, 3)};
    EXPECT_EQ(distinguish(obs, cands).consistent().size(), 2u);
    std::vector<Sample> bad{{1, 1, {1, 2, 4}}};
    std::vector<NamedGroup> only_z{candidate_group("Z", 2, 3)};
    EXPECT_THROW(distinguish(bad, only_z), Error);
    EXPECT_THROW(distinguish({}, only_z), Error);
}

TEST(Quotient, ChecksPass) {
    FieldPtr F2 = field_of_order(2), F3 = field_of_order(3);
    QuotientCheck a = psl_quotient_check(io::parse_linearized("x^8 + x^2 + x", F2, 2), F2);
    EXPECT_TRUE(a.pass());
    EXPECT_EQ(a.s_P, a.s_L);
    EXPECT_TRUE(a.S_power.is_identity());
    QuotientCheck b = psl_quotient_check(io::parse_linearized("x^9 + x^3 + 2*x", F3, 3), F3);
    EXPECT_TRUE(b.pass());
    EXPECT_TRUE(b.S_power.is_identity() || b.S_power == MatGF::scalar(F3, 2, 2));
    QuotientCheck c = psl_quotient_check(LinearizedPoly(3, F3, {-Elem::one(F3), Elem::one(F3)}), F3);
    EXPECT_EQ(c.s_L, 1u);
    EXPECT_EQ(c.s_P, 1u);
    std::mt19937_64 rng(4);
    for (u64 q : {3, 4, 5}) {
        FieldPtr F = field_of_order(q);
        for (int t = 0; t < 20; ++t) {
            std::vector<Elem> cs{Elem::from_code(F, 1 + rng() % (q - 1)), Elem::from_code(F, rng() % q), Elem::one(F)};
            EXPECT_TRUE(psl_quotient_check(LinearizedPoly(q, F, cs), F).pass());
        }
    }
}

TEST(Impossibility, NoIrreducibleQuotientWithUnitNorm) {
    for (auto [q, r] : std::vector<std::pair<u64, unsigned>>{{3, 3}, {4, 3}, {5, 3}, {7, 3}, {3, 5}}) {
        ImpossibilityScan s = impossibility_scan(q, r);
        EXPECT_EQ(s.scanned, arith::ipow(q, r - 1));
        EXPECT_TRUE(s.irreducible.empty()) << q << "," << r;
    }
}

TEST(Impossibility, BinaryFieldHasCounterexamples) {
    // over GF(2) the sign condition is vacuous and x^8 + x^2 + x qualifies
    ImpossibilityScan s = impossibility_scan(2, 3);
    ASSERT_FALSE(s.irreducible.empty());
    EXPECT_EQ(io::format(s.irreducible.front()), "x^8 + x^2 + x");
}
