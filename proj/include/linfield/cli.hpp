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
 * @file cli.hpp
 * @brief Command-line front end.
 *
 * Exit codes: 0 when every check passes, 1 when a mathematical check fails
 * (the report carries the witness), 2 on usage or input errors.
 */

#pragma once

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galois.hpp"
#include "groups.hpp"
#include "io.hpp"
#include "linpoly.hpp"
#include "moore.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace linfield::cli {

enum ExitCode { kPass = 0, kCheckFailed = 1, kUsage = 2 };

class UsageError : public Error {
public:
    using Error::Error;
};

struct Args {
    u64 q = 0;
    unsigned n = 0;
    std::string field;
    std::string lin;
    std::string assoc;
    std::string f, g;
    std::string at;
    std::string basis;
    std::string group = "GammaL";
    std::string candidates = "Z,GammaL,SL";
    std::string mode = "auto";
    std::string suite;
    bool sl = false;
    u64 seed = 0;
    u64 cap = 20000;
    u64 closure_cap = 2000;
    u64 samples = 500;
    std::string out;
    std::string format;  // empty: text on stdout, structured with --out
};

namespace detail {

/// The prime shared by every x-exponent above 1, e.g. 2 for "x^8 + x^2 + t*x".
inline u64 infer_q(const std::string& text) {
    std::optional<u64> prime;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != 'x' || text[i + 1] != '^') continue;
        std::size_t j = i + 2;
        std::vector<u64> tower;
        for (;;) {
            u64 v = 0;
            std::size_t start = j;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) v = v * 10 + static_cast<u64>(text[j++] - '0');
            if (j == start) break;
            tower.push_back(v);
            if (j < text.size() && text[j] == '^') {
                ++j;
                continue;
            }
            break;
        }
        if (tower.empty() || tower[0] < 2) continue;
        auto f = arith::factorize(tower[0]);
        if (f.size() != 1 || (prime && *prime != f[0].first))
            throw UsageError("cannot infer q from \"" + text + "\"; pass --q");
        prime = f[0].first;
    }
    if (!prime) throw UsageError("cannot infer q from \"" + text + "\"; pass --q");
    return *prime;
}

inline u64 require_q(const Args& a, const std::string& text) {
    if (a.q) return a.q;
    if (text.rfind("lin(", 0) == 0) return io::detail::split_lin_form(text).first;
    return infer_q(text);
}

inline FieldPtr field_or_gfq(const Args& a, u64 q) { return a.field.empty() ? field_of_order(q) : io::parse_field(a.field); }

inline void require(const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(std::string("missing required option ") + flag);
}

inline Json elems_json(const std::vector<Elem>& v) {
    Json j = Json::array();
    for (const auto& e : v) j.push_back(e.to_string());
    return j;
}

inline Json fingerprint_json(const GroupFingerprint& fp) {
    Json h = Json::object();
    for (auto [o, c] : fp.order_histogram) h[std::to_string(o)] = c;
    return {{"order", fp.order},
            {"element orders", h},
            {"involutions", fp.involutions},
            {"center order", fp.center_order},
            {"det image order", fp.det_image_order},
            {"transitive", fp.transitive}};
}

inline Json input_echo(const std::string& cmd, const Args& a) {
    Json j;
    j["command"] = cmd;
    if (a.q) j["q"] = a.q;
    if (a.n) j["n"] = a.n;
    if (!a.field.empty()) j["field"] = a.field;
    if (!a.lin.empty()) j["lin"] = a.lin;
    if (!a.assoc.empty()) j["assoc"] = a.assoc;
    if (!a.f.empty()) j["f"] = a.f;
    if (!a.g.empty()) j["g"] = a.g;
    if (!a.at.empty()) j["at"] = a.at;
    if (!a.basis.empty()) j["basis"] = a.basis;
    return j;
}

inline GroupSet named_group(const Args& a) {
    if (!a.q || !a.n) throw UsageError("--q and --n are required");
    return candidate_group(a.group, a.q, a.n, a.cap).group;
}

// ---------------------------------------------------------------------------

inline Report cmd_field(const Args& a) {
    if (!a.q && a.field.empty()) throw UsageError("field needs --q or --field");
    FieldPtr F = a.field.empty() ? field_of_order(a.q) : io::parse_field(a.field);
    Report r("field", input_echo("field", a), a.seed);
    bool irr = pf::is_irreducible(F->modulus(), F->characteristic());
    Json v{{"field", F->to_string()}, {"order", F->size() ? Json(*F->size()) : Json("> 2^64")}};
    r.add("modulus is irreducible over the prime field", irr, v);
    if (F->tabulated()) {
        Elem g = primitive_element(F);
        u64 ord = element_order(g);
        Json gv{{"generator code", g.code()}, {"order", ord}};
        if (F->degree() > 1) gv["modulus primitive"] = element_order(Elem::x(F)) == F->order() - 1;
        r.add("generator g has order |F| - 1", ord == F->order() - 1, gv);
    }
    return r;
}

inline LinearizedPoly lin_arg(const Args& a, FieldPtr* F_out = nullptr) {
    require(a.lin, "--lin");
    u64 q = require_q(a, a.lin);
    FieldPtr F = field_or_gfq(a, q);
    if (F_out) *F_out = F;
    return io::parse_linearized(a.lin, F, q);
}

inline Report cmd_linpoly(const std::string& sub, const Args& a) {
    Report r("linpoly " + sub, input_echo("linpoly " + sub, a), a.seed);
    if (sub == "eval") {
        FieldPtr F;
        LinearizedPoly L = lin_arg(a, &F);
        require(a.at, "--at");
        Elem z = io::parse_elem(a.at, F);
        Elem v = lin_eval(L, z);
        FieldPtr Fq = gfq_of(L);
        bool homogeneous = true;
        for (u64 c = 0; c < Fq->order(); ++c) {
            Elem lam = embed(Elem::from_code(Fq, c), F);
            if (lin_eval(L, lam * z) != lam * v) homogeneous = false;
        }
        r.add("L(lambda z) = lambda L(z) for lambda in GF(q)", homogeneous,
              {{"L", io::format(L)}, {"z", z.to_string()}, {"L(z)", v.to_string()}});
    } else if (sub == "associate") {
        if (!a.assoc.empty()) {
            if (!a.q) throw UsageError("--assoc needs --q");
            FieldPtr Fq = field_of_order(a.q);
            UniPoly p = io::parse_unipoly(a.assoc, Fq);
            LinearizedPoly L = lin_from_associate(p, a.q);
            r.add("associate round trip", associate_from_lin(L) == p, {{"a", io::format(p)}, {"L", io::format(L)}});
        } else {
            LinearizedPoly L = lin_arg(a);
            UniPoly p = associate_from_lin(L);
            r.add("associate round trip", lin_from_associate(p, L.q()) == L.embedded_in(p.field()),
                  {{"L", io::format(L)}, {"a", io::format(p)}});
        }
    } else if (sub == "projective") {
        LinearizedPoly L = lin_arg(a);
        ProjectivePoly P = projective_poly(L);
        r.add("P(x^(q-1)) x = L(x)", projective_expand(P) == L.to_unipoly(),
              {{"L", io::format(L)}, {"P", io::format(P.poly, "y")}, {"deg P", P.poly.degree()}});
    } else if (sub == "roots") {
        FieldPtr F;
        LinearizedPoly L = lin_arg(a, &F);
        RootSpace rs = root_space(L, F, a.cap == 20000 ? 0 : a.cap);
        bool vanish = true;
        for (const auto& b : rs.basis) vanish = vanish && lin_eval(rs.poly, b).is_zero();
        r.add("basis elements are roots", vanish,
              {{"L", io::format(L)}, {"splitting degree", rs.splitting_degree}, {"E", rs.big->to_string()}, {"basis", elems_json(rs.basis)}});
        bool indep = true;
        if (!rs.basis.empty()) {
            try {
                moore_delta(rs.basis, L.q());
            } catch (const Error&) {
                indep = false;
            }
        }
        r.add("basis is GF(q)-independent (delta != 0)", indep, Json::object());
    } else if (sub == "irreducible") {
        FieldPtr F;
        LinearizedPoly L = lin_arg(a, &F);
        auto degs = factor_degrees(L.embedded_in(F).divided_by_x());
        r.add("L(x)/x is irreducible over " + F->to_string(), degs.size() == 1, {{"L", io::format(L)}, {"factor degrees", degs}});
    } else if (sub == "family") {
        require(a.f, "--f");
        require(a.g, "--g");
        u64 q = a.q ? a.q : infer_q(a.f);
        FieldPtr E = field_or_gfq(a, q);
        LinearizedPoly f = io::parse_linearized(a.f, E, q), g = io::parse_linearized(a.g, E, q);
        FamilyCertificate c = verify_family(f, g);
        std::string viol;
        for (const auto& v : c.violations) viol += (viol.empty() ? "" : "; ") + v;
        r.add("(f + t g)/x irreducible over E(t) by the hypotheses", c.certified,
              {{"f", io::format(f)}, {"g", io::format(g)}, {"r", c.r}, {"certificate", c.facts}},
              viol.empty() ? std::nullopt : std::optional<std::string>(viol));
    } else {
        throw UsageError("unknown linpoly subcommand '" + sub + "' (expected eval, associate, projective, roots, irreducible, family)");
    }
    return r;
}

inline MooreData basis_arg(const Args& a) {
    require(a.basis, "--basis");
    if (!a.q) throw UsageError("--q is required");
    require(a.field, "--field");
    FieldPtr E = io::parse_field(a.field);
    std::vector<Elem> b;
    for (const auto& s : io::detail::split_top_level(a.basis, ',')) b.push_back(io::parse_elem(s, E));
    return moore_delta(b, a.q);
}

inline Report cmd_moore(const std::string& sub, const Args& a) {
    Report r("moore " + sub, input_echo("moore " + sub, a), a.seed);
    if (sub == "delta" || sub == "reconstruct") {
        std::optional<MooreData> md;
        try {
            md = basis_arg(a);
        } catch (const UsageError&) {
            throw;
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            r.add("basis is GF(q)-independent (delta != 0)", false, Json::object(), std::string(e.what()));
            return r;
        }
        Json D = Json::array();
        for (const auto& row : md->D) D.push_back(elems_json(row));
        r.add("basis is GF(q)-independent (delta != 0)", true, {{"D", D}, {"delta", md->delta.to_string()}});
        if (sub == "reconstruct") {
            LinearizedPoly L = reconstruct_L(*md);
            bool vanish = true;
            for (const auto& b : md->basis) vanish = vanish && lin_eval(L, b).is_zero();
            std::size_t n = md->basis.size();
            Elem expect = md->delta.pow(a.q - 1);
            if (n % 2) expect = -expect;
            r.add("L is monic of q-degree n and vanishes on the basis", L.is_monic() && L.q_degree() == static_cast<int>(n) && vanish,
                  {{"L", io::format(L)}});
            r.add("coeff_x(L) = (-1)^n delta^(q-1)", L.coeff_x() == expect, {{"coeff_x", L.coeff_x().to_string()}});
        }
    } else if (sub == "verify") {
        FieldPtr F;
        LinearizedPoly L = lin_arg(a, &F);
        DeterminantReport rep = verify_determinant_identities(L.embedded_in(F), F);
        for (const auto& c : rep.checks) {
            Json v = Json::object();
            for (const auto& [k, val] : c.values) v[k] = val;
            if (!c.applicable) v["applicable"] = false;
            r.add(c.name, c.pass, v);
        }
        r.add("S D = sigma(D)", frobenius_identity_holds(rep.galois),
              {{"S", rep.galois.S.to_string()}, {"splitting degree", rep.galois.roots.splitting_degree}});
    } else {
        throw UsageError("unknown moore subcommand '" + sub + "' (expected delta, reconstruct, verify)");
    }
    return r;
}

inline Report cmd_groups(const std::string& sub, const Args& a) {
    Report r("groups " + sub, input_echo("groups " + sub, a), a.seed);
    if (!a.q || !a.n) throw UsageError("--q and --n are required");
    u64 N = arith::ipow(a.q, a.n) - 1;
    if (sub == "singer") {
        SingerData d = singer_data(a.q, a.n);
        u64 ord = d.matrix.order();
        r.add("Singer cycle has order q^n - 1", ord == N,
              {{"matrix", d.matrix.to_string()},
               {"modulus", io::format(d.modulus)},
               {"modulus primitive", d.modulus_primitive},
               {"generator", io::format(d.generator)},
               {"order", ord},
               {"det", Elem::from_code(d.matrix.field(), d.matrix.det()).to_string()}});
    } else if (sub == "gammal") {
        GroupSet G = gamma_l(a.q, a.n, a.sl, a.cap);
        u64 expected = a.sl ? a.n * N / (a.q - 1) : a.n * N;
        r.add(std::string(a.sl ? "|GammaL1(1,q^n)| = n(q^n-1)/(q-1)" : "|GammaL(1,q^n)| = n(q^n-1)"), G.order() == expected,
              {{"order", G.order()}, {"expected", expected}, {"transitive", orbits(G).transitive}});
    } else if (sub == "orbits") {
        GroupSet G = named_group(a);
        OrbitPartition p = orbits(G);
        std::vector<u64> sizes;
        u64 total = 0;
        for (const auto& o : p.orbits) {
            sizes.push_back(o.size());
            total += o.size();
        }
        r.add("orbits partition the nonzero vectors", total == N,
              {{"group", a.group}, {"order", G.order()}, {"orbit sizes", sizes}, {"transitive", p.transitive}});
    } else if (sub == "fingerprint") {
        GroupSet G = named_group(a);
        GroupFingerprint fp = fingerprint(G);
        u64 total = 0;
        for (auto [o, c] : fp.order_histogram) total += c;
        Json v = fingerprint_json(fp);
        v["group"] = a.group;
        r.add("histogram totals the group order", total == fp.order, v);
    } else if (sub == "classify") {
        ClassifyOptions o;
        o.mode = a.mode == "exhaustive" ? ClassifyMode::Exhaustive
                 : a.mode == "randomized" ? ClassifyMode::Randomized
                 : a.mode == "auto" ? ClassifyMode::Auto
                                    : throw UsageError("--mode must be auto, exhaustive or randomized");
        o.exhaustive_cap = a.cap;
        o.closure_cap = a.closure_cap;
        o.samples = a.samples;
        o.seed = a.seed;
        Classification c = classify_transitive_subgroups(a.q, a.n, o);
        Json classes = Json::array();
        for (const auto& k : c.classes) {
            Json e = fingerprint_json(k.fingerprint);
            Json gens = Json::array();
            for (const auto& g : k.generators) gens.push_back(g.to_string());
            e["generators"] = gens;
            if (c.exhaustive) e["conjugates"] = k.class_size;
            classes.push_back(e);
        }
        r.add(c.exhaustive ? "transitive subgroups up to SL-conjugacy" : "transitive subgroups up to fingerprint",
              !c.classes.empty(), {{"exhaustive", c.exhaustive}, {"closures", c.closures}, {"classes", classes}});
    } else {
        throw UsageError("unknown groups subcommand '" + sub + "' (expected singer, gammal, orbits, classify, fingerprint)");
    }
    return r;
}

inline Report cmd_galois(const std::string& sub, const Args& a) {
    Report r("galois " + sub, input_echo("galois " + sub, a), a.seed);
    if (sub == "finite") {
        FieldPtr F;
        LinearizedPoly L = lin_arg(a, &F);
        FiniteGalois g = galois_group_finite(L.embedded_in(F), F);
        bool irr = lx_irreducible(L, F);
        r.add("cyclic of order s", g.group.order() == g.splitting_degree,
              {{"splitting degree", g.splitting_degree}, {"generator", g.frobenius.S.to_string()}, {"cycle type", vector_cycle_type(g.frobenius.S)}});
        r.add("transitive iff L(x)/x irreducible", g.transitive == irr, {{"transitive", g.transitive}, {"L(x)/x irreducible", irr}});
    } else if (sub == "distinguish") {
        require(a.lin, "--lin");
        u64 q = require_q(a, a.lin);
        FieldPtr F = field_or_gfq(a, q);
        BivariateLinPoly Lt = io::parse_bivariate(a.lin, F, q);
        SamplePlan plan;
        plan.seed = a.seed;
        plan.max_accepted = a.samples;
        SampleRun run = cycle_type_sample(Lt, plan);
        std::vector<NamedGroup> cands;
        for (const auto& c : io::detail::split_top_level(a.candidates, ','))
            cands.push_back(candidate_group(c, q, static_cast<unsigned>(Lt.q_degree()), a.cap));
        DistinguishReport rep = distinguish(run.samples, cands, a.seed);
        Json observed = Json::object();
        for (const auto& [t, k] : rep.observed) observed[cycle_type_string(t)] = k;
        Json status = Json::array();
        for (const auto& c : rep.candidates) {
            Json e{{"name", c.name}, {"order", c.order}, {"status", c.ruled_out ? "ruled out" : "consistent"}};
            if (c.witness) {
                FieldPtr K = field_create(F->characteristic(), F->degree() * c.witness->k);
                e["witness type"] = cycle_type_string(c.witness->type);
                e["witness point"] = Elem::from_code(K, c.witness->point).to_string() + " in " + K->to_string();
            }
            status.push_back(e);
        }
        auto consistent = rep.consistent();
        std::string verdict = consistent.size() == 1 ? "consistent with " + consistent[0] + ", all other candidates eliminated"
                                                     : std::to_string(consistent.size()) + " candidates remain consistent";
        r.add("at least one candidate survives", true,
              {{"polynomial", io::format(Lt)},
               {"accepted samples", rep.sample_count},
               {"points tried", run.points_tried},
               {"rejected (a_0 = 0)", run.rejected_inseparable},
               {"rejected (degree drop)", run.rejected_degree_drop},
               {"observed", observed},
               {"candidates", status},
               {"verdict", verdict}});
    } else if (sub == "psl-check") {
        FieldPtr F;
        LinearizedPoly L = lin_arg(a, &F);
        QuotientCheck qc = psl_quotient_check(L.embedded_in(F), F);
        r.add("s_P divides s_L", qc.divides, {{"s_L", qc.s_L}, {"s_P", qc.s_P}});
        r.add("S^(s_P) is scalar", qc.scalar, {{"S^(s_P)", qc.S_power.to_string()}});
    } else {
        throw UsageError("unknown galois subcommand '" + sub + "' (expected finite, distinguish, psl-check)");
    }
    return r;
}

inline Report cmd_suite(const Args& a) {
    suites::Options o;
    o.seed = a.seed;
    o.samples = a.samples;
    if (a.suite == "all") {
        Report all("suite all", {{"suite", "all"}}, a.seed);
        for (const auto& s : suites::registry()) {
            Report r = suites::run(s, o);
            for (const auto& c : r.checks()) {
                Check cc = c;
                cc.name = "[" + std::to_string(s.criterion) + " " + s.name + "] " + c.name;
                all.add(std::move(cc));
            }
        }
        return all;
    }
    const suites::Suite* s = suites::find_suite(a.suite);
    if (!s) {
        std::string names;
        for (const auto& x : suites::registry()) names += (names.empty() ? "" : ", ") + x.name;
        throw UsageError("unknown suite '" + a.suite + "' (expected all, " + names + ")");
    }
    return suites::run(*s, o);
}

inline void add_common(CLI::App* app, Args& a) {
    app->add_option("--q", a.q, "order of the small field GF(q)");
    app->add_option("--n", a.n, "dimension n");
    app->add_option("--field", a.field, "field, e.g. GF(8), GF(2^3) or GF(2^3; 1 + x + x^3)");
    app->add_option("--lin", a.lin, "q-polynomial, e.g. \"x^8 + x^2 + x\" or \"lin(2; 1, 1, 0, 1)\"");
    app->add_option("--seed", a.seed, "random seed (default 0)");
    app->add_option("--cap", a.cap, "enumeration cap (default 20000)");
    app->add_option("--samples", a.samples, "sample count (default 500)");
    app->add_option("--out", a.out, "write the report to this file");
    app->add_option("--format", a.format, "text or structured (default: text, or structured with --out)")->check(CLI::IsMember({"text", "structured"}));
}

}  // namespace detail

/// Parses argv, runs one command, writes the report. Returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Linearized polynomials, Moore determinants, semilinear groups and Galois groups over finite fields",
                 "linfield"};
    app.require_subcommand(1);
    Args a;
    std::string sub;
    std::string group_cmd;

    auto* field = app.add_subcommand("field", "describe GF(q)");
    detail::add_common(field, a);

    auto* lin = app.add_subcommand("linpoly", "q-polynomial operations");
    lin->add_option("op", sub, "eval | associate | projective | roots | irreducible | family")->required();
    detail::add_common(lin, a);
    lin->add_option("--assoc", a.assoc, "ordinary polynomial over GF(q) to turn into a q-polynomial");
    lin->add_option("--at", a.at, "evaluation point in --field");
    lin->add_option("--f", a.f, "f for the family check");
    lin->add_option("--g", a.g, "g for the family check");

    auto* moore = app.add_subcommand("moore", "Moore determinants");
    moore->add_option("op", sub, "delta | reconstruct | verify")->required();
    detail::add_common(moore, a);
    moore->add_option("--basis", a.basis, "comma-separated elements of --field");

    auto* groups = app.add_subcommand("groups", "matrix groups over GF(q)");
    groups->add_option("op", sub, "singer | gammal | orbits | classify | fingerprint")->required();
    detail::add_common(groups, a);
    groups->add_flag("--sl", a.sl, "determinant-one part of GammaL");
    groups->add_option("--group", a.group, "Z, GammaL, GammaL1, SL or GL (default GammaL)");
    groups->add_option("--mode", a.mode, "auto, exhaustive or randomized (default auto)");
    groups->add_option("--closure-cap", a.closure_cap, "closure cap in randomized mode (default 2000)");

    auto* galois = app.add_subcommand("galois", "Galois groups of q-polynomials");
    galois->add_option("op", sub, "finite | distinguish | psl-check")->required();
    detail::add_common(galois, a);
    galois->add_option("--candidates", a.candidates, "comma-separated candidate groups (default Z,GammaL,SL)");

    auto* suite = app.add_subcommand("suite", "run an acceptance suite");
    suite->add_option("name", a.suite, "suite name, criterion number or all")->required();
    detail::add_common(suite, a);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    std::optional<Report> rep;
    try {
        if (field->parsed())
            rep = detail::cmd_field(a);
        else if (lin->parsed())
            rep = detail::cmd_linpoly(sub, a);
        else if (moore->parsed())
            rep = detail::cmd_moore(sub, a);
        else if (groups->parsed())
            rep = detail::cmd_groups(sub, a);
        else if (galois->parsed())
            rep = detail::cmd_galois(sub, a);
        else
            rep = detail::cmd_suite(a);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    bool as_json = a.format == "structured" || (a.format.empty() && !a.out.empty());
    std::string text = as_json ? rep->to_json().dump(2) + "\n" : rep->to_text();
    if (a.out.empty()) {
        out << text;
    } else {
        std::ofstream f(a.out);
        if (!f) {
            err << "error: cannot write " << a.out << "\n";
            return kUsage;
        }
        f << text;
    }
    return rep->all_pass() ? kPass : kCheckFailed;
}

}  // namespace linfield::cli
