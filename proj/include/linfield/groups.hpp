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
 * @file groups.hpp
 * @brief Explicitly enumerated matrix groups over GF(q).
 *
 * Groups are small enough to list: closure() does a breadth-first product
 * search, and everything else (orbits on nonzero vectors, fingerprints,
 * subgroup classification) works on the listed elements.
 */

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ff/poly.hpp"
#include "matgf.hpp"

namespace linfield {

struct GroupSet {
    FieldPtr field;
    unsigned n = 0;
    std::vector<MatGF> generators;
    std::vector<MatGF> elements;  // sorted by key
    std::vector<u64> keys;        // sorted

    u64 order() const { return elements.size(); }
    u64 q() const { return field->order(); }
    bool contains(const MatGF& m) const { return std::binary_search(keys.begin(), keys.end(), m.key()); }
    bool contains_key(u64 k) const { return std::binary_search(keys.begin(), keys.end(), k); }
};

namespace detail {

inline GroupSet make_group(const FieldPtr& f, unsigned n, std::vector<MatGF> gens, std::vector<MatGF> elems) {
    std::sort(elems.begin(), elems.end(), [](const MatGF& a, const MatGF& b) { return a.key() < b.key(); });
    GroupSet g{f, n, std::move(gens), std::move(elems), {}};
    g.keys.reserve(g.elements.size());
    for (const auto& e : g.elements) g.keys.push_back(e.key());
    return g;
}

}  // namespace detail

/// Product closure of `gens`; nullopt when the group has more than `cap` elements.
inline std::optional<GroupSet> closure(const std::vector<MatGF>& gens, const FieldPtr& field, unsigned n, u64 cap) {
    check_key_range(field->order(), n);
    for (const auto& g : gens) {
        if (g.n() != n || !g.field()->same_as(*field)) throw Error("closure: generator has the wrong shape or field");
        if (g.det() == 0) throw Error("closure: singular generator " + g.to_string());
    }
    std::vector<MatGF> elems{MatGF::identity(field, n)};
    std::unordered_set<u64> seen{elems[0].key()};
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (const auto& g : gens) {
            MatGF m = elems[i] * g;
            if (seen.insert(m.key()).second) {
                if (elems.size() >= cap) return std::nullopt;
                elems.push_back(std::move(m));
            }
        }
    }
    return detail::make_group(field, n, gens, std::move(elems));
}

inline std::optional<GroupSet> closure(const std::vector<MatGF>& gens, u64 cap) {
    if (gens.empty()) throw Error("closure: empty generator list needs an explicit field and size");
    return closure(gens, gens[0].field(), gens[0].n(), cap);
}

/// Greedy generating set: walk the elements in key order, keep those outside the span so far.
inline std::vector<MatGF> greedy_generators(const std::vector<MatGF>& elems, const FieldPtr& f, unsigned n) {
    std::vector<MatGF> gens;
    GroupSet cur = *closure({}, f, n, elems.size() + 1);
    for (const auto& e : elems) {
        if (cur.contains(e)) continue;
        gens.push_back(e);
        cur = *closure(gens, f, n, elems.size() + 1);
        if (cur.order() == elems.size()) break;
    }
    return gens;
}

// --------------------------------------------------------------------------
// Singer cycles and semilinear groups

struct SingerData {
    UniPoly modulus;       // degree-n irreducible h over GF(q), lex-least
    bool modulus_primitive = false;
    UniPoly generator;     // element of GF(q)[x]/(h) whose multiplication matrix is returned
    MatGF matrix;          // multiplication by `generator` on the basis 1, x, ..., x^{n-1}
    MatGF frobenius;       // z -> z^q on the same basis
};

namespace detail {

inline MatGF multiplication_matrix(const UniPoly& gamma, const UniPoly& h) {
    const FieldPtr& f = h.field();
    unsigned n = static_cast<unsigned>(h.degree());
    MatGF m(f, n);
    UniPoly xi = UniPoly::constant(f, 1);
    for (unsigned i = 0; i < n; ++i) {
        UniPoly row = rem(gamma * xi, h);
        for (unsigned j = 0; j < n; ++j) m.set(i, j, row.coeff(j));
        xi = rem(xi * UniPoly::x(f), h);
    }
    return m;
}

}  // namespace detail

inline SingerData singer_data(u64 q, unsigned n) {
    if (n == 0) throw Error("singer_cycle: n must be positive");
    FieldPtr F = field_of_order(q);
    check_key_range(q, n);
    UniPoly h = lex_least_irreducible(F, n);
    u64 target = arith::ipow(q, n) - 1;
    SingerData d;
    d.modulus = h;
    UniPoly x = UniPoly::x(F);
    d.modulus_primitive = h.coeff(0) != 0 && poly_order(h) == target;
    if (d.modulus_primitive) {
        d.generator = x;
    } else {
        auto factors = arith::factorize(target);
        for (u64 code = 1; code <= target; ++code) {
            std::vector<u32> c;
            for (u64 k = code; k; k /= q) c.push_back(static_cast<u32>(k % q));
            UniPoly g(F, c);
            bool prim = true;
            for (auto [r, e] : factors) {
                (void)e;
                if (powmod(g, target / r, h).is_one()) {
                    prim = false;
                    break;
                }
            }
            if (prim) {
                d.generator = g;
                break;
            }
        }
    }
    d.matrix = detail::multiplication_matrix(d.generator, h);
    MatGF fr(F, n);
    UniPoly xi = UniPoly::constant(F, 1);
    for (unsigned i = 0; i < n; ++i) {
        UniPoly row = powmod(xi, q, h);
        for (unsigned j = 0; j < n; ++j) fr.set(i, j, row.coeff(j));
        xi = rem(xi * x, h);
    }
    d.frobenius = fr;
    return d;
}

/// Multiplication by a primitive element of GF(q^n); order q^n - 1.
inline MatGF singer_cycle(u64 q, unsigned n) { return singer_data(q, n).matrix; }

inline MatGF frobenius_semilinear(u64 q, unsigned n) { return singer_data(q, n).frobenius; }

/// Determinant-one elements of G, with a fresh generating set.
inline GroupSet sl_part(const GroupSet& G) {
    std::vector<MatGF> elems;
    for (const auto& e : G.elements)
        if (e.det() == 1) elems.push_back(e);
    auto gens = greedy_generators(elems, G.field, G.n);
    return detail::make_group(G.field, G.n, std::move(gens), std::move(elems));
}

/// GammaL(1, q^n) = <Singer, Frobenius>; with sl_only its determinant-one part.
inline GroupSet gamma_l(u64 q, unsigned n, bool sl_only, u64 cap = 20000) {
    SingerData d = singer_data(q, n);
    auto g = closure({d.matrix, d.frobenius}, cap);
    if (!g) throw Error("gamma_l: group order exceeds cap " + std::to_string(cap));
    return sl_only ? sl_part(*g) : *g;
}

/// Elementary transvections I + c E_ij, c running over a GF(p)-basis of GF(q).
inline std::vector<MatGF> sl_generators(u64 q, unsigned n) {
    FieldPtr F = field_of_order(q);
    std::vector<MatGF> gens;
    u32 p = F->characteristic();
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            if (i == j) continue;
            u32 c = 1;
            for (unsigned l = 0; l < F->degree(); ++l, c *= p) {
                MatGF m = MatGF::identity(F, n);
                m.set(i, j, c);
                gens.push_back(m);
            }
        }
    }
    return gens;
}

inline GroupSet sl_group(u64 q, unsigned n, u64 cap = 20000) {
    FieldPtr F = field_of_order(q);
    auto g = n == 1 ? closure({}, F, 1, cap) : closure(sl_generators(q, n), F, n, cap);
    if (!g) throw Error("sl_group: |SL(" + std::to_string(n) + "," + std::to_string(q) + ")| exceeds cap " + std::to_string(cap));
    return *g;
}

inline GroupSet gl_group(u64 q, unsigned n, u64 cap = 20000) {
    FieldPtr F = field_of_order(q);
    auto gens = sl_generators(q, n);
    MatGF d = MatGF::identity(F, n);
    d.set(0, 0, F->tables().generator);
    gens.push_back(d);
    auto g = closure(gens, F, n, cap);
    if (!g) throw Error("gl_group: |GL(" + std::to_string(n) + "," + std::to_string(q) + ")| exceeds cap " + std::to_string(cap));
    return *g;
}

// --------------------------------------------------------------------------
// Orbits on nonzero vectors

struct OrbitPartition {
    std::vector<std::vector<u64>> orbits;  // each sorted; ordered by least member
    bool transitive = false;
};

inline std::vector<std::vector<u64>> generator_orbits(const std::vector<MatGF>& gens, u64 q, unsigned n) {
    u64 N = arith::ipow(q, n);
    std::vector<u64> owner(N, 0);
    std::vector<std::vector<u64>> out;
    for (u64 v = 1; v < N; ++v) {
        if (owner[v]) continue;
        std::vector<u64> orb{v};
        owner[v] = out.size() + 1;
        for (std::size_t i = 0; i < orb.size(); ++i) {
            auto vec = decode_vector(orb[i], q, n);
            for (const auto& g : gens) {
                u64 w = encode_vector(g.apply(vec), q);
                if (!owner[w]) {
                    owner[w] = out.size() + 1;
                    orb.push_back(w);
                }
            }
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

inline OrbitPartition orbits(const GroupSet& G) {
    OrbitPartition p;
    p.orbits = generator_orbits(G.generators, G.q(), G.n);
    p.transitive = p.orbits.size() == 1;
    return p;
}

/// Orbit of e_1 only; cheaper than the full partition.
inline bool is_transitive(const std::vector<MatGF>& gens, u64 q, unsigned n) {
    u64 N = arith::ipow(q, n);
    std::vector<char> seen(N, 0);
    std::vector<u64> orb{1};
    seen[1] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i) {
        auto vec = decode_vector(orb[i], q, n);
        for (const auto& g : gens) {
            u64 w = encode_vector(g.apply(vec), q);
            if (!seen[w]) {
                seen[w] = 1;
                orb.push_back(w);
            }
        }
    }
    return orb.size() == N - 1;
}

/// Cycle lengths of m on the nonzero vectors, ascending.
inline std::vector<unsigned> vector_cycle_type(const MatGF& m) {
    u64 q = m.field()->order();
    u64 N = arith::ipow(q, m.n());
    std::vector<char> seen(N, 0);
    std::vector<unsigned> t;
    for (u64 v = 1; v < N; ++v) {
        if (seen[v]) continue;
        unsigned len = 0;
        u64 w = v;
        do {
            seen[w] = 1;
            w = encode_vector(m.apply(decode_vector(w, q, m.n())), q);
            ++len;
        } while (w != v);
        t.push_back(len);
    }
    std::sort(t.begin(), t.end());
    return t;
}

// --------------------------------------------------------------------------
// Fingerprints

struct GroupFingerprint {
    u64 order = 0;
    std::map<u64, u64> order_histogram;  // element order -> count
    u64 involutions = 0;
    u64 center_order = 0;
    u64 det_image_order = 0;
    bool transitive = false;

    friend bool operator==(const GroupFingerprint& a, const GroupFingerprint& b) {
        return a.order == b.order && a.order_histogram == b.order_histogram && a.involutions == b.involutions &&
               a.center_order == b.center_order && a.det_image_order == b.det_image_order &&
               a.transitive == b.transitive;
    }
    friend bool operator<(const GroupFingerprint& a, const GroupFingerprint& b) {
        return std::tie(a.order, a.order_histogram, a.involutions, a.center_order, a.det_image_order, a.transitive) <
               std::tie(b.order, b.order_histogram, b.involutions, b.center_order, b.det_image_order, b.transitive);
    }

    std::string to_string() const {
        std::string s = "order " + std::to_string(order) + ", orders {";
        bool first = true;
        for (auto [o, c] : order_histogram) {
            s += (first ? "" : ", ") + std::to_string(o) + ":" + std::to_string(c);
            first = false;
        }
        s += "}, involutions " + std::to_string(involutions) + ", center " + std::to_string(center_order) +
             ", det image " + std::to_string(det_image_order) + (transitive ? ", transitive" : ", intransitive");
        return s;
    }
};

inline GroupFingerprint fingerprint(const GroupSet& G) {
    GroupFingerprint fp;
    fp.order = G.order();
    std::set<u32> dets;
    for (const auto& e : G.elements) {
        ++fp.order_histogram[e.order()];
        dets.insert(e.det());
        bool central = true;
        for (const auto& g : G.generators) {
            if (e * g != g * e) {
                central = false;
                break;
            }
        }
        if (central) ++fp.center_order;
    }
    fp.involutions = fp.order_histogram.count(2) ? fp.order_histogram.at(2) : 0;
    fp.det_image_order = dets.size();
    fp.transitive = is_transitive(G.generators, G.q(), G.n);
    return fp;
}

/// Some x in `ambient` with x A x^{-1} = B, if one exists.
inline std::optional<MatGF> find_conjugator(const GroupSet& A, const GroupSet& B, const GroupSet& ambient) {
    if (A.order() != B.order()) return std::nullopt;
    for (const auto& x : ambient.elements) {
        MatGF xi = x.inverse();
        bool ok = true;
        for (const auto& g : A.generators) {
            if (!B.contains(x * g * xi)) {
                ok = false;
                break;
            }
        }
        if (ok) return x;
    }
    return std::nullopt;
}

/// N is normalized by every generator of G (N must be a subgroup of G).
inline bool is_normal_in(const GroupSet& N, const GroupSet& G) {
    for (const auto& g : G.generators) {
        MatGF gi = g.inverse();
        for (const auto& h : N.generators)
            if (!N.contains(g * h * gi)) return false;
    }
    return true;
}

// --------------------------------------------------------------------------
// Classification of transitive subgroups of SL(n, q)

enum class ClassifyMode { Auto, Exhaustive, Randomized };

struct ClassifyOptions {
    ClassifyMode mode = ClassifyMode::Auto;
    u64 exhaustive_cap = 20000;  // largest |SL(n,q)| enumerated in full
    u64 closure_cap = 2000;      // randomized mode only
    u64 samples = 500;           // generator pairs drawn in randomized mode
    u64 seed = 0;
};

struct ClassifiedSubgroup {
    GroupFingerprint fingerprint;
    std::vector<MatGF> generators;
    GroupSet group;
    u64 class_size = 0;  // number of SL-conjugates; 0 in randomized mode
};

struct Classification {
    u64 q = 0;
    unsigned n = 0;
    bool exhaustive = false;  // false: classes are distinct up to fingerprint only
    u64 sl_order = 0;         // 0 when SL was not enumerated
    u64 closures = 0;
    std::vector<ClassifiedSubgroup> classes;  // ascending by order
};

namespace detail {

/// SL(n,q) with elements indexed in key order and products looked up by index.
class IndexedGroup {
public:
    explicit IndexedGroup(const GroupSet& G) : G_(G) {
        N_ = static_cast<u32>(G.order());
        for (u32 i = 0; i < N_; ++i) index_[G.keys[i]] = i;
        // A full Cayley table is only kept for small groups.
        if (u64{N_} * N_ <= (u64{1} << 22)) {
            table_.resize(std::size_t{N_} * N_);
            for (u32 a = 0; a < N_; ++a)
                for (u32 b = 0; b < N_; ++b) table_[std::size_t{a} * N_ + b] = lookup(G.elements[a] * G.elements[b]);
        }
        inv_.resize(N_);
        for (u32 a = 0; a < N_; ++a) inv_[a] = lookup(G.elements[a].inverse());
    }

    u32 size() const { return N_; }
    const MatGF& elem(u32 i) const { return G_.elements[i]; }
    u32 inv(u32 a) const { return inv_[a]; }
    u32 mul(u32 a, u32 b) const {
        if (!table_.empty()) return table_[std::size_t{a} * N_ + b];
        return lookup(G_.elements[a] * G_.elements[b]);
    }
    u32 lookup(const MatGF& m) const {
        auto it = index_.find(m.key());
        if (it == index_.end()) throw Error("element outside the enumerated group");
        return it->second;
    }

    /// Sorted index set of <gens>.
    std::vector<u32> closure(const std::vector<u32>& gens) const {
        std::vector<char> seen(N_, 0);
        u32 id = lookup(MatGF::identity(G_.field, G_.n));
        std::vector<u32> out{id};
        seen[id] = 1;
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (u32 g : gens) {
                u32 m = mul(out[i], g);
                if (!seen[m]) {
                    seen[m] = 1;
                    out.push_back(m);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<u32> conjugate(const std::vector<u32>& H, u32 x) const {
        std::vector<u32> r;
        r.reserve(H.size());
        u32 xi = inv(x);
        for (u32 h : H) r.push_back(mul(mul(x, h), xi));
        std::sort(r.begin(), r.end());
        return r;
    }

    /// One representative per conjugacy class, least index first.
    std::vector<u32> class_representatives() const {
        std::vector<char> seen(N_, 0);
        std::vector<u32> reps;
        for (u32 g = 0; g < N_; ++g) {
            if (seen[g]) continue;
            reps.push_back(g);
            for (u32 x = 0; x < N_; ++x) seen[mul(mul(x, g), inv(x))] = 1;
        }
        return reps;
    }

    std::vector<MatGF> matrices(const std::vector<u32>& idx) const {
        std::vector<MatGF> r;
        for (u32 i : idx) r.push_back(G_.elements[i]);
        return r;
    }

    const GroupSet& group() const { return G_; }

private:
    const GroupSet& G_;
    u32 N_ = 0;
    std::unordered_map<u64, u32> index_;
    std::vector<u32> table_;
    std::vector<u32> inv_;
};

struct SubgroupIndex {
    std::map<std::vector<u32>, std::size_t> class_of;  // every conjugate -> class id
    std::vector<std::vector<u32>> reps;
    std::vector<std::vector<u32>> rep_gens;
    std::vector<u64> class_sizes;

    /// Registers H and all its conjugates; returns the class id.
    std::size_t add(const IndexedGroup& S, const std::vector<u32>& H, const std::vector<u32>& gens) {
        auto it = class_of.find(H);
        if (it != class_of.end()) return it->second;
        std::size_t id = reps.size();
        std::set<std::vector<u32>> conj;
        for (u32 x = 0; x < S.size(); ++x) conj.insert(S.conjugate(H, x));
        for (const auto& c : conj) class_of.emplace(c, id);
        reps.push_back(H);
        rep_gens.push_back(gens);
        class_sizes.push_back(conj.size());
        return id;
    }
};

inline std::vector<u32> trim_generators(const IndexedGroup& S, std::vector<u32> gens) {
    u32 id = S.lookup(MatGF::identity(S.group().field, S.group().n));
    gens.erase(std::remove(gens.begin(), gens.end(), id), gens.end());
    if (gens.size() == 2 && (gens[0] == gens[1] || S.closure({gens[0]}).size() == S.closure(gens).size()))
        gens.resize(1);
    return gens;
}

inline GroupSet group_from_indices(const IndexedGroup& S, const std::vector<u32>& H, const std::vector<u32>& gens) {
    return make_group(S.group().field, S.group().n, S.matrices(gens), S.matrices(H));
}

inline MatGF random_sl(const FieldPtr& F, unsigned n, std::mt19937_64& rng) {
    u64 q = F->order();
    const auto& t = F->tables();
    for (;;) {
        MatGF m(F, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) m.set(i, j, static_cast<u32>(rng() % q));
        u32 d = m.det();
        if (!d) continue;
        u32 di = t.inv(d);
        for (unsigned j = 0; j < n; ++j) m.set(0, j, t.mul(m.at(0, j), di));
        return m;
    }
}

}  // namespace detail

/// All 1- and 2-generated transitive subgroups of SL(n,q) up to SL-conjugacy.
inline Classification classify_exhaustive(const GroupSet& SL, u64 q, unsigned n) {
    detail::IndexedGroup S(SL);
    Classification out;
    out.q = q;
    out.n = n;
    out.exhaustive = true;
    out.sl_order = SL.order();
    detail::SubgroupIndex idx;
    std::set<std::vector<u32>> seen;
    for (u32 g : S.class_representatives()) {
        for (u32 h = 0; h < S.size(); ++h) {
            auto H = S.closure({g, h});
            ++out.closures;
            if (H.size() % (arith::ipow(q, n) - 1) != 0) continue;
            if (!seen.insert(H).second) continue;
            auto gens = detail::trim_generators(S, {g, h});
            if (!is_transitive(S.matrices(gens), q, n)) continue;
            idx.add(S, H, gens);
        }
    }
    for (std::size_t c = 0; c < idx.reps.size(); ++c) {
        GroupSet G = detail::group_from_indices(S, idx.reps[c], idx.rep_gens[c]);
        out.classes.push_back({fingerprint(G), G.generators, G, idx.class_sizes[c]});
    }
    std::sort(out.classes.begin(), out.classes.end(), [](const auto& a, const auto& b) {
        return std::tie(a.fingerprint.order, a.group.keys) < std::tie(b.fingerprint.order, b.group.keys);
    });
    return out;
}

/// Seeded random generator pairs; classes are distinct up to fingerprint only.
inline Classification classify_randomized(u64 q, unsigned n, const ClassifyOptions& opt) {
    FieldPtr F = field_of_order(q);
    check_key_range(q, n);
    Classification out;
    out.q = q;
    out.n = n;
    std::mt19937_64 rng(opt.seed);
    std::map<GroupFingerprint, ClassifiedSubgroup> found;
    u64 divisor = arith::ipow(q, n) - 1;
    for (u64 s = 0; s < opt.samples; ++s) {
        MatGF a = detail::random_sl(F, n, rng), b = detail::random_sl(F, n, rng);
        auto G = closure({a, b}, F, n, opt.closure_cap);
        ++out.closures;
        if (!G || G->order() % divisor != 0) continue;
        if (!is_transitive(G->generators, q, n)) continue;
        GroupFingerprint fp = fingerprint(*G);
        if (!found.count(fp)) found.emplace(fp, ClassifiedSubgroup{fp, G->generators, *G, 0});
    }
    for (auto& [fp, c] : found) out.classes.push_back(std::move(c));
    return out;
}

inline Classification classify_transitive_subgroups(u64 q, unsigned n, const ClassifyOptions& opt = {}) {
    if (opt.mode == ClassifyMode::Randomized) return classify_randomized(q, n, opt);
    FieldPtr F = field_of_order(q);
    auto SL = n == 1 ? closure({}, F, 1, opt.exhaustive_cap) : closure(sl_generators(q, n), F, n, opt.exhaustive_cap);
    if (!SL) {
        if (opt.mode == ClassifyMode::Exhaustive)
            throw Error("classify: |SL(" + std::to_string(n) + "," + std::to_string(q) + ")| exceeds the exhaustive cap");
        return classify_randomized(q, n, opt);
    }
    return classify_exhaustive(*SL, q, n);
}

/// Outcome of re-running the classification over 3-element generating sets.
struct GenerationCheck {
    bool complete = true;        // no transitive subgroup outside the 2-generated classes
    u64 subgroup_classes = 0;    // classes of 2-generated subgroups (transitive or not)
    u64 closures = 0;
    std::vector<std::string> missing;
};

/**
 * Every transitive subgroup <g, h, c> of SL(n,q) is conjugate to one of the
 * transitive 2-generated classes. Runs <H, c> for a representative H of each
 * class of 2-generated subgroups and every c.
 */
inline GenerationCheck verify_two_generation(u64 q, unsigned n, u64 cap = 20000) {
    GroupSet SL = sl_group(q, n, cap);
    detail::IndexedGroup S(SL);
    detail::SubgroupIndex all;
    std::set<std::vector<u32>> seen;
    for (u32 g : S.class_representatives()) {
        for (u32 h = 0; h < S.size(); ++h) {
            auto H = S.closure({g, h});
            if (seen.insert(H).second) all.add(S, H, {g, h});
        }
    }
    GenerationCheck out;
    out.subgroup_classes = all.reps.size();
    u64 divisor = arith::ipow(q, n) - 1;
    for (std::size_t c = 0; c < all.reps.size(); ++c) {
        for (u32 x = 0; x < S.size(); ++x) {
            std::vector<u32> gens = all.rep_gens[c];
            gens.push_back(x);
            auto K = S.closure(gens);
            ++out.closures;
            if (K.size() % divisor != 0 || !is_transitive(S.matrices(gens), q, n)) continue;
            auto it = all.class_of.find(K);
            if (it == all.class_of.end()) {
                out.complete = false;
                out.missing.push_back("order " + std::to_string(K.size()));
            }
        }
    }
    return out;
}

}  // namespace linfield
