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
 * @file suites.hpp
 * @brief The ten acceptance suites.
 *
 * Each suite returns a Report whose last check is its time budget. All
 * arithmetic is exact, so every mathematical check has zero tolerance.
 */

#pragma once

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "galois.hpp"
#include "groups.hpp"
#include "io.hpp"
#include "linpoly.hpp"
#include "moore.hpp"
#include "parallel.hpp"
#include "report.hpp"

namespace linfield::suites {

struct Options {
    u64 seed = 0;
    u64 samples = 500;  // accepted specializations per family in the distinguisher suite
    unsigned threads = thread_count();
};

struct Instance {
    std::string label;
    LinearizedPoly L;
    FieldPtr F;
};

/// 200 seeded random monic separable L over GF(q^m), q in {2,3,4,5}, n <= 3, m <= 3, plus fixed examples.
inline std::vector<Instance> standard_instances(u64 seed, std::size_t count = 200) {
    std::vector<Instance> out;
    std::mt19937_64 rng(seed);
    const u64 qs[] = {2, 3, 4, 5};
    for (std::size_t i = 0; i < count; ++i) {
        u64 q = qs[i % 4];
        unsigned n = 1 + static_cast<unsigned>((i / 4) % 3);
        unsigned m = 1 + static_cast<unsigned>((i / 12) % 3);
        auto pp = *arith::prime_power(q);
        FieldPtr F = field_create(pp.first, pp.second * m);
        u64 size = F->order();
        std::vector<Elem> c{Elem::from_code(F, 1 + rng() % (size - 1))};
        for (unsigned j = 1; j < n; ++j) c.push_back(Elem::from_code(F, rng() % size));
        c.push_back(Elem::one(F));
        LinearizedPoly L(q, F, c);
        out.push_back({"random #" + std::to_string(i) + " " + io::format(L) + " over " + F->to_string(), L, F});
    }
    auto fixed = [&](const std::string& text, u64 q, u64 order) {
        FieldPtr F = field_of_order(order);
        LinearizedPoly L = io::parse_linearized(text, F, q);
        out.push_back({io::format(L) + " over " + F->to_string(), L, F});
    };
    fixed("x^8 + x^2 + x", 2, 2);
    fixed("x^4 + x^2 + x", 2, 2);
    fixed("x^3 - x", 3, 3);
    fixed("x^4 - x", 4, 4);
    fixed("x^5 - x", 5, 5);
    fixed("x^9 + x^3 + 2*x", 3, 3);
    fixed("x^9 + g*x^3 + x", 3, 9);
    return out;
}

namespace detail {

inline std::string first_failure(const std::vector<std::string>& failures) {
    return failures.empty() ? std::string() : failures.front();
}

inline void add_aggregate(Report& r, const std::string& name, std::size_t total, const std::vector<std::string>& failures) {
    Json v{{"instances", total}, {"failures", failures.size()}};
    r.add(name, failures.empty(), v, failures.empty() ? std::nullopt : std::optional<std::string>(failures.front()));
}

inline std::string join(const std::vector<std::string>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + x;
    return s;
}

}  // namespace detail

// 1 ------------------------------------------------------------------------

inline Report moore_identities(const Options& opt) {
    Report r("suite moore-identities", {{"instances", "200 random + 7 fixed"}}, opt.seed);
    auto inst = standard_instances(opt.seed);
    struct Out {
        std::string identity_fail, matrix_fail, order_fail;
    };
    auto res = parallel_map<Out>(inst.size(), [&](std::size_t i) {
        Out o;
        auto rep = verify_determinant_identities(inst[i].L, inst[i].F);
        for (const auto& c : rep.checks)
            if (!c.pass && o.identity_fail.empty()) o.identity_fail = inst[i].label + ": " + c.name;
        if (!frobenius_identity_holds(rep.galois)) o.matrix_fail = inst[i].label;
        const MatGF& S = rep.galois.S;
        unsigned s = rep.galois.roots.splitting_degree;
        u32 d = S.det();
        if (S.order() != s || S.field()->tables().pow(d, s) != 1) o.order_fail = inst[i].label;
        return o;
    }, opt.threads);
    std::vector<std::string> f1, f2, f3;
    for (const auto& o : res) {
        if (!o.identity_fail.empty()) f1.push_back(o.identity_fail);
        if (!o.matrix_fail.empty()) f2.push_back(o.matrix_fail);
        if (!o.order_fail.empty()) f3.push_back(o.order_fail);
    }
    detail::add_aggregate(r, "five determinant identities on every instance", inst.size(), f1);
    detail::add_aggregate(r, "S D = sigma(D) on every instance", inst.size(), f2);
    detail::add_aggregate(r, "ord(S) = s and det(S)^s = 1 on every instance", inst.size(), f3);
    return r;
}

// 2 ------------------------------------------------------------------------

inline Report round_trips(const Options& opt) {
    Report r("suite round-trips", {{"instances", "200 random + 7 fixed"}}, opt.seed);
    auto inst = standard_instances(opt.seed);
    auto res = parallel_map<std::string>(inst.size(), [&](std::size_t i) {
        RootSpace rs = root_space(inst[i].L, inst[i].F);
        LinearizedPoly back = reconstruct_L(moore_delta(rs.basis, inst[i].L.q()));
        return back == rs.poly ? std::string() : inst[i].label;
    }, opt.threads);
    std::vector<std::string> f1;
    for (const auto& s : res)
        if (!s.empty()) f1.push_back(s);
    detail::add_aggregate(r, "reconstruct_L(root_space(L)) = L", inst.size(), f1);

    std::vector<std::string> f2, f3;
    std::size_t n2 = 0, n3 = 0;
    std::mt19937_64 rng(opt.seed);
    for (u64 q : {2, 3, 4, 5}) {
        FieldPtr Fq = field_of_order(q);
        auto random_poly = [&](unsigned maxdeg) {
            for (;;) {
                std::vector<u32> c(maxdeg + 1);
                for (auto& v : c) v = static_cast<u32>(rng() % q);
                UniPoly a(Fq, c);
                if (!a.is_zero()) return a;
            }
        };
        for (int k = 0; k < 50; ++k) {
            UniPoly a = random_poly(5);
            ++n2;
            if (associate_from_lin(lin_from_associate(a, q)) != a) f2.push_back(io::format(a) + " over GF(" + std::to_string(q) + ")");
            UniPoly b = random_poly(3), c = random_poly(3);
            ++n3;
            LinearizedPoly comp = compose(lin_from_associate(b, q), lin_from_associate(c, q));
            if (associate_from_lin(comp) != b * c)
                f3.push_back(io::format(b) + " and " + io::format(c) + " over GF(" + std::to_string(q) + ")");
        }
    }
    for (const auto& in : inst) {
        if (in.F->order() != in.L.q()) continue;
        ++n2;
        if (lin_from_associate(associate_from_lin(in.L), in.L.q()) != in.L) f2.push_back(in.label);
    }
    detail::add_aggregate(r, "associate <-> q-polynomial round trips", n2, f2);
    detail::add_aggregate(r, "associate of a composition is the product of associates", n3, f3);
    return r;
}

// 3, 4 ----------------------------------------------------------------------

inline const std::vector<std::pair<u64, unsigned>>& semilinear_cases() {
    static const std::vector<std::pair<u64, unsigned>> cases{{2, 3}, {3, 3}, {4, 3}, {5, 3}, {2, 5}};
    return cases;
}

inline Report order_formulas(const Options& opt) {
    Report r("suite order-formulas", Json::object(), opt.seed);
    for (auto [q, n] : semilinear_cases()) {
        u64 full = n * (arith::ipow(q, n) - 1);
        u64 sl = full / (q - 1);
        GroupSet G = gamma_l(q, n, false), G1 = gamma_l(q, n, true);
        std::string tag = "(q,n) = (" + std::to_string(q) + "," + std::to_string(n) + ")";
        r.add("|GammaL(1,q^n)| = n(q^n-1) at " + tag, G.order() == full, {{"order", G.order()}, {"expected", full}});
        r.add("|GammaL1(1,q^n)| = n(q^n-1)/(q-1) at " + tag, G1.order() == sl, {{"order", G1.order()}, {"expected", sl}});
        std::set<u32> dets;
        for (const auto& g : G.elements) dets.insert(g.det());
        r.add("det maps GammaL onto GF(q)^* at " + tag, dets.size() == q - 1, {{"det image", dets.size()}});
        SingerData sd = singer_data(q, n);
        r.add("Frobenius normalizes the Singer cycle at " + tag,
              sd.frobenius.inverse() * sd.matrix * sd.frobenius == sd.matrix.pow(q), Json::object());
    }
    return r;
}

inline Report transitivity(const Options& opt) {
    Report r("suite transitivity", Json::object(), opt.seed);
    for (auto [q, n] : semilinear_cases()) {
        GroupSet G1 = gamma_l(q, n, true);
        bool t = orbits(G1).transitive;
        bool expected = q == 2;
        std::string tag = "(q,n) = (" + std::to_string(q) + "," + std::to_string(n) + ")";
        r.add(std::string("GammaL1 ") + (expected ? "transitive" : "not transitive") + " at " + tag, t == expected,
              {{"orbits", orbits(G1).orbits.size()}, {"transitive", t}});
    }
    return r;
}

// 5 ------------------------------------------------------------------------

inline Report sl32_classification(const Options& opt) {
    Report r("suite sl32-classification", {{"q", 2}, {"n", 3}}, opt.seed);
    Classification c = classify_transitive_subgroups(2, 3, {ClassifyMode::Exhaustive});
    std::vector<u64> orders;
    for (const auto& k : c.classes) orders.push_back(k.fingerprint.order);
    r.add("transitive subgroups of SL(3,2) up to conjugacy have orders 7, 21, 168", orders == std::vector<u64>{7, 21, 168},
          {{"orders", orders}, {"closures", c.closures}});
    if (orders == std::vector<u64>{7, 21, 168}) {
        GroupSet SL = sl_group(2, 3);
        const GroupSet& Z = c.classes[0].group;
        const GroupSet& H = c.classes[1].group;
        std::vector<MatGF> sylow7;
        for (const auto& e : H.elements)
            if (e.order() == 7) sylow7.push_back(e);
        auto N = closure({sylow7.front()}, 8);
        bool normal = N && N->order() == 7 && is_normal_in(*N, H) && H.order() / N->order() == 3;
        bool conj = N && find_conjugator(*N, Z, SL).has_value();
        r.add("order-7 class is normal of index 3 in the order-21 class", normal && conj,
              {{"normal", normal}, {"conjugate to the order-7 class", conj}});
        GroupSet GL = gamma_l(2, 3, false);
        bool gl_in = find_conjugator(GL, H, SL).has_value();
        r.add("order-21 class contains the Singer and Frobenius matrices", gl_in, Json::object());
    }
    GenerationCheck g = verify_two_generation(2, 3);
    r.add("no transitive subgroup beyond the 2-generated ones", g.complete,
          {{"subgroup classes", g.subgroup_classes}, {"closures", g.closures}},
          g.complete ? std::nullopt : std::optional<std::string>(g.missing.front()));
    return r;
}

// 6 ------------------------------------------------------------------------

inline Report exceptional_subgroups(const Options& opt) {
    Report r("suite exceptional-subgroups", {{"q", {2, 3, 5, 7, 11}}, {"n", 2}}, opt.seed);
    auto orders_of = [](const Classification& c) {
        std::vector<u64> o;
        for (const auto& k : c.classes) o.push_back(k.fingerprint.order);
        return o;
    };
    auto find = [](const Classification& c, u64 order) -> const ClassifiedSubgroup* {
        for (const auto& k : c.classes)
            if (k.fingerprint.order == order) return &k;
        return nullptr;
    };

    Classification c2 = classify_transitive_subgroups(2, 2, {ClassifyMode::Exhaustive});
    r.add("q=2: transitive subgroups have orders 3 and 6", orders_of(c2) == std::vector<u64>{3, 6}, {{"orders", orders_of(c2)}});

    Classification c3 = classify_transitive_subgroups(3, 2, {ClassifyMode::Exhaustive});
    const auto* q8 = find(c3, 8);
    bool q8_ok = q8 && q8->fingerprint.involutions == 1 && q8->fingerprint.order_histogram.at(4) == 6;
    r.add("q=3: Q8 and SL(2,3)", orders_of(c3) == std::vector<u64>{8, 24} && q8_ok,
          {{"orders", orders_of(c3)}, {"Q8 involutions", q8 ? q8->fingerprint.involutions : 0}});

    Classification c5 = classify_transitive_subgroups(5, 2, {ClassifyMode::Exhaustive});
    const auto* s24 = find(c5, 24);
    r.add("q=5: order-24 transitive subgroup with one involution", s24 && s24->fingerprint.involutions == 1,
          {{"orders", orders_of(c5)}});

    Classification c7 = classify_transitive_subgroups(7, 2, {ClassifyMode::Exhaustive});
    const auto* b48 = find(c7, 48);
    GroupFingerprint gl23 = fingerprint(gl_group(3, 2));
    bool b48_ok = b48 && b48->fingerprint.involutions == 1 && gl23.order == 48 && gl23.involutions > 1;
    r.add("q=7: order-48 transitive subgroup with one involution, unlike GL(2,3)", b48_ok,
          {{"orders", orders_of(c7)},
           {"order-48 involutions", b48 ? b48->fingerprint.involutions : 0},
           {"GL(2,3) involutions", gl23.involutions}});

    ClassifyOptions ro;
    ro.mode = ClassifyMode::Randomized;
    ro.seed = opt.seed;
    Classification c11 = classify_transitive_subgroups(11, 2, ro);
    const auto* s120 = find(c11, 120);
    bool s120_ok = s120 && s120->fingerprint.involutions == 1;
    if (s120) {
        const std::set<u64> allowed{1, 2, 3, 4, 5, 6, 10};
        for (const auto& [o, cnt] : s120->fingerprint.order_histogram) s120_ok = s120_ok && allowed.count(o);
    }
    r.add("q=11 (randomized, up to fingerprint): order-120 transitive subgroup like SL(2,5)", s120_ok,
          {{"orders", orders_of(c11)}, {"pairs", c11.closures}, {"seed", ro.seed}});

    std::vector<std::string> incomplete;
    for (u64 q : {2, 3, 5, 7})
        if (!verify_two_generation(q, 2).complete) incomplete.push_back(std::to_string(q));
    r.add("two generators suffice for q in {2,3,5,7}", incomplete.empty(), {{"failing q", incomplete}});
    return r;
}

// 7 ------------------------------------------------------------------------

inline Report singer_pipeline(const Options& opt) {
    Report r("suite singer-pipeline", {{"r", {3, 5, 7}}}, opt.seed);
    FieldPtr F2 = field_create(2, 1);
    for (unsigned deg : {3u, 5u, 7u}) {
        UniPoly a = lex_least_primitive(F2, deg);
        LinearizedPoly L = lin_from_associate(a, 2);
        u64 N = arith::ipow(2, deg) - 1;
        auto degs = factor_degrees(L.divided_by_x());
        FiniteGalois g = galois_group_finite(L, F2);
        bool regular = vector_cycle_type(g.frobenius.S) == std::vector<unsigned>{static_cast<unsigned>(N)};
        std::string tag = "r=" + std::to_string(deg) + ", a = " + io::format(a);
        r.add("L(x)/x irreducible, " + tag, degs == std::vector<unsigned>{static_cast<unsigned>(N)}, {{"factor degrees", degs}});
        r.add("Galois group cyclic of order 2^r-1 acting regularly (Singer), " + tag,
              g.group.order() == N && g.frobenius.S.order() == N && g.transitive && regular,
              {{"order", g.group.order()}, {"splitting degree", g.splitting_degree}});
    }
    return r;
}

// 8 ------------------------------------------------------------------------

struct FamilyResult {
    SampleRun run;
    DistinguishReport report;
};

inline FamilyResult run_family(const std::string& text, u64 q, unsigned n, const std::vector<std::string>& cands,
                               const Options& opt) {
    FieldPtr F = field_of_order(q);
    BivariateLinPoly Lt = io::parse_bivariate(text, F, q);
    SamplePlan plan;
    plan.seed = opt.seed;
    plan.max_accepted = opt.samples;
    SampleRun run = cycle_type_sample(Lt, plan);
    std::vector<NamedGroup> groups;
    for (const auto& c : cands) groups.push_back(candidate_group(c, q, n));
    return {run, distinguish(run.samples, groups, opt.seed)};
}

inline Report distinguisher(const Options& opt) {
    Report r("suite distinguisher", {{"samples", opt.samples}}, opt.seed);
    struct Case {
        std::string text;
        unsigned n;
        std::vector<std::string> candidates, expect_consistent;
    };
    const std::vector<Case> cases{{"x^8 + x^2 + t*x", 3, {"Z", "GammaL", "SL"}, {"SL"}},
                                  {"x^8 + t*x", 3, {"Z", "GammaL", "SL"}, {"GammaL", "SL"}},
                                  {"x^4 + t*x^2 + x", 2, {"Z", "SL"}, {"SL"}}};
    for (const auto& c : cases) {
        FamilyResult fr = run_family(c.text, 2, c.n, c.candidates, opt);
        Json types = Json::object();
        for (const auto& [t, k] : fr.report.observed) types[cycle_type_string(t)] = k;
        std::string witnesses;
        for (const auto& s : fr.report.candidates)
            if (s.ruled_out) witnesses += (witnesses.empty() ? "" : "; ") + s.name + " by " + cycle_type_string(s.witness->type);
        auto consistent = fr.report.consistent();
        r.add(c.text + ": consistent candidates are " + detail::join(c.expect_consistent),
              consistent == c.expect_consistent && fr.report.sample_count >= 200,
              {{"accepted samples", fr.report.sample_count}, {"consistent", consistent}, {"observed", types}},
              witnesses.empty() ? std::nullopt : std::optional<std::string>(witnesses));
        if (c.text == "x^8 + t*x") {
            u64 inv = fr.report.observed.count({1, 1, 1, 2, 2}) ? fr.report.observed.at({1, 1, 1, 2, 2}) : 0;
            r.add("x^8 + t*x: no observation of type {1,1,1,2,2}", inv == 0, {{"count", inv}});
        }
    }
    return r;
}

// 9 ------------------------------------------------------------------------

inline Report finite_field_impossibility(const Options& opt) {
    Report r("suite finite-field-impossibility", Json::object(), opt.seed);
    for (auto [q, deg] : std::vector<std::pair<u64, unsigned>>{{3, 3}, {4, 3}, {5, 3}}) {
        ImpossibilityScan s = impossibility_scan(q, deg);
        r.add("(q,r) = (" + std::to_string(q) + "," + std::to_string(deg) + "): no L with coeff_x = (-1)^r has L(x)/x irreducible",
              s.irreducible.empty(), {{"scanned", s.scanned}, {"irreducible", s.irreducible.size()}},
              s.irreducible.empty() ? std::nullopt : std::optional<std::string>(io::format(s.irreducible.front())));
    }
    return r;
}

// 10 -----------------------------------------------------------------------

inline Report projective_layer(const Options& opt) {
    Report r("suite projective-layer", {{"instances", "200 random + 7 fixed"}}, opt.seed);
    auto inst = standard_instances(opt.seed);
    struct Out {
        std::string ident, quot;
    };
    auto res = parallel_map<Out>(inst.size(), [&](std::size_t i) {
        Out o;
        ProjectivePoly P = projective_poly(inst[i].L);
        if (projective_expand(P) != inst[i].L.to_unipoly()) o.ident = inst[i].label;
        QuotientCheck qc = psl_quotient_check(inst[i].L, inst[i].F);
        if (!qc.pass()) o.quot = inst[i].label + " (s_L=" + std::to_string(qc.s_L) + ", s_P=" + std::to_string(qc.s_P) + ")";
        return o;
    }, opt.threads);
    std::vector<std::string> f1, f2;
    for (const auto& o : res) {
        if (!o.ident.empty()) f1.push_back(o.ident);
        if (!o.quot.empty()) f2.push_back(o.quot);
    }
    detail::add_aggregate(r, "P(x^(q-1)) x = L(x)", inst.size(), f1);
    detail::add_aggregate(r, "s_P divides s_L and S^(s_P) is scalar", inst.size(), f2);
    return r;
}

// ---------------------------------------------------------------------------

struct Suite {
    int criterion;
    std::string name;
    double budget_seconds;
    std::function<Report(const Options&)> run;
};

inline const std::vector<Suite>& registry() {
    static const std::vector<Suite> r{
        {1, "moore-identities", 30, moore_identities},
        {2, "round-trips", 10, round_trips},
        {3, "order-formulas", 60, order_formulas},
        {4, "transitivity", 60, transitivity},
        {5, "sl32-classification", 300, sl32_classification},
        {6, "exceptional-subgroups", 600, exceptional_subgroups},
        {7, "singer-pipeline", 120, singer_pipeline},
        {8, "distinguisher", 180, distinguisher},
        {9, "finite-field-impossibility", 120, finite_field_impossibility},
        {10, "projective-layer", 60, projective_layer},
    };
    return r;
}

inline const Suite* find_suite(const std::string& name) {
    for (const auto& s : registry())
        if (s.name == name || std::to_string(s.criterion) == name) return &s;
    return nullptr;
}

/// Runs a suite and appends its time-budget check.
inline Report run(const Suite& s, const Options& opt) {
    auto start = std::chrono::steady_clock::now();
    Report r = s.run(opt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.add("within time budget", secs < s.budget_seconds, {{"seconds", secs}, {"budget", s.budget_seconds}});
    return r;
}

}  // namespace linfield::suites
