#pragma once

// Splitting-edge decomposition of d-uniform triangulated hypergraphs in which
// intersecting edges share d-1 vertices, the resulting Betti recursion, and
// checks of the self disjoint characterisation built on it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperbetti/betti_table.hpp"
#include "hyperbetti/families.hpp"
#include "hyperbetti/hypergraph.hpp"
#include "hyperbetti/linalg.hpp"

namespace hyperbetti {

/// Least-id simplicial vertex, or none.
inline std::optional<VertexId> find_simplicial_vertex(const Hypergraph& h) {
    const auto d = detail::require_uniform(h);
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (detail::simplicial_among(h.edges(), h.all_edges_mask(), d, v)) return v;
    return std::nullopt;
}

namespace detail {

inline void require_special(const Hypergraph& h) {
    const auto p = uniformity_profile(h);
    if (!p.is_uniform || !p.is_special_class)
        throw Error(ErrorCode::NotSpecialClass,
                    "hypergraph must be uniform with intersecting edges sharing all but one vertex");
}

/// Least-id simplicial vertex lying on some edge.
inline std::optional<VertexId> find_splitting_vertex(const Hypergraph& h) {
    const auto d = require_uniform(h);
    const auto covered = h.union_of(h.all_edges_mask());
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (covered.contains(v) && simplicial_among(h.edges(), h.all_edges_mask(), d, v)) return v;
    return std::nullopt;
}

/// Weaker simpliciality: v lies on an edge, and any two edges through v have a
/// third edge inside their union minus v. Used by the recursion when the
/// neighbourhood condition finds no vertex, as happens after deleting one face
/// from the boundary of a simplex.
inline bool weakly_simplicial(const Hypergraph& h, VertexId v) {
    const auto& es = h.edges();
    bool on_edge = false;
    for (std::size_t a = 0; a < es.size(); ++a) {
        if (!es[a].contains(v)) continue;
        on_edge = true;
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            if (!es[b].contains(v)) continue;
            auto around = es[a] | es[b];
            around.erase(v);
            if (h.edges_inside(around) == 0) return false;
        }
    }
    return on_edge;
}

inline std::optional<VertexId> find_weakly_simplicial_vertex(const Hypergraph& h) {
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (weakly_simplicial(h, v)) return v;
    return std::nullopt;
}

inline bool vertex_lex_less(VertexSet a, VertexSet b) { return a.to_vector() < b.to_vector(); }

} // namespace detail

struct SplittingDecomposition {
    VertexId x = 0;
    std::size_t S = 0;                       ///< edge index in H
    std::size_t t = 0;                       ///< |N(S)|
    std::vector<VertexId> z;                 ///< N(S), increasing
    std::vector<std::size_t> neighbor_edges; ///< S_l with S_l \ S = {z_l}, x not in S_l
    Hypergraph H1;                           ///< H minus S (edge indices above S shift down by one)
    Hypergraph H2;                           ///< H induced on V \ (S u N(S)), relabelled densely
    VertexSet h2_vertices;                   ///< V \ (S u N(S)) in H's ids
    std::vector<std::size_t> h2_edge_origin; ///< edge of H behind each edge of H2
};

inline SplittingDecomposition split(const Hypergraph& h, VertexId x, std::size_t s) {
    detail::require_special(h);
    h.check_vertex(x);
    h.check_edge(s);
    const auto S = h.edge(s);
    if (!S.contains(x)) throw Error(ErrorCode::InvalidArgument, "the splitting edge must contain x");
    if (!is_simplicial_vertex(h, x)) throw Error(ErrorCode::NotSimplicial, "vertex " + h.label(x) + " is not simplicial");

    SplittingDecomposition dec;
    dec.x = x;
    dec.S = s;
    const auto n_s = edge_neighborhood(h, s);
    dec.z = n_s.to_vector();
    dec.t = dec.z.size();
    for (auto z : dec.z) {
        std::optional<std::size_t> direct, through_x;
        for (std::size_t e = 0; e < h.num_edges(); ++e) {
            const auto E = h.edges()[e];
            if (E - S != VertexSet::singleton(z)) continue;
            auto& slot = E.contains(x) ? through_x : direct;
            if (!slot || detail::vertex_lex_less(E, h.edges()[*slot])) slot = e;
        }
        if (direct) {
            dec.neighbor_edges.push_back(*direct);
            continue;
        }
        if (!through_x) throw Error(ErrorCode::NotSpecialClass, "no edge meets S in " + h.label(z));
        const auto E = h.edges()[*through_x];
        const auto spare = S - E - VertexSet::singleton(x);
        if (spare.empty()) throw Error(ErrorCode::NotSpecialClass, "no swap vertex available");
        auto swapped = E;
        swapped.erase(x);
        swapped.insert(spare.front());
        const auto found = h.find_edge(swapped);
        if (!found) throw Error(ErrorCode::NotSimplicial, "swapped neighbor edge is missing");
        dec.neighbor_edges.push_back(*found);
    }
    dec.H1 = delete_edge(h, s);
    dec.h2_vertices = h.vertices() - S - n_s;
    dec.H2 = induced_subhypergraph(h, dec.h2_vertices);
    dec.h2_edge_origin = induced_edge_indices(h, dec.h2_vertices);
    return dec;
}

namespace detail {

/// Isolated vertices dropped, the rest relabelled by (degree, id). Distinct keys
/// may belong to isomorphic hypergraphs; equal keys never to different ones.
inline std::vector<std::uint64_t> recursion_key(const Hypergraph& h) {
    const auto n = h.num_vertices();
    std::vector<std::pair<std::size_t, VertexId>> order;
    for (VertexId v = 0; v < n; ++v) {
        std::size_t deg = 0;
        for (const auto& e : h.edges()) deg += e.contains(v) ? 1 : 0;
        if (deg > 0) order.emplace_back(deg, v);
    }
    std::sort(order.begin(), order.end());
    std::vector<VertexId> relabel(n, 0);
    for (std::size_t r = 0; r < order.size(); ++r) relabel[order[r].second] = static_cast<VertexId>(r);
    std::vector<std::uint64_t> key;
    for (const auto& e : h.edges()) {
        VertexSet r;
        e.for_each([&](VertexId v) { r.insert(relabel[v]); });
        key.push_back(r.bits());
    }
    std::sort(key.begin(), key.end());
    return key;
}

using Entries = std::map<std::pair<int, int>, std::uint64_t>;

inline Entries betti_recursive_entries(const Hypergraph& h, std::map<std::vector<std::uint64_t>, Entries>& memo) {
    const auto key = recursion_key(h);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Entries out{{{0, 0}, 1}};
    if (h.num_edges() == 1) {
        out[{1, static_cast<int>(h.edges().front().size())}] = 1;
    } else if (h.num_edges() > 1) {
        auto x = find_splitting_vertex(h);
        if (!x) x = find_weakly_simplicial_vertex(h);
        if (!x) throw Error(ErrorCode::NotTriangulated, "no simplicial vertex on an edge");
        std::size_t s = h.num_edges();
        for (std::size_t e = 0; e < h.num_edges(); ++e)
            if (h.edges()[e].contains(*x) && (s == h.num_edges() || vertex_lex_less(h.edges()[e], h.edges()[s]))) s = e;
        const auto S = h.edges()[s];
        const auto d = static_cast<int>(S.size());
        const auto t = edge_neighborhood(h, s).size();
        const auto h2 = induced_subhypergraph(h, h.vertices() - S - edge_neighborhood(h, s));
        out = betti_recursive_entries(delete_edge(h, s), memo);
        for (const auto& [ij, v] : betti_recursive_entries(h2, memo))
            for (std::size_t l = 0; l <= t; ++l)
                out[{ij.first + 1 + static_cast<int>(l), ij.second + d + static_cast<int>(l)}] += binomial(t, l) * v;
    }
    memo.emplace(key, out);
    return out;
}

} // namespace detail

/// Betti table from the splitting recursion
/// beta_{i,j}(H) = beta_{i,j}(H1) + sum_l C(t,l) beta_{i-1-l, j-d-l}(H2).
inline BettiTable betti_recursive(const Hypergraph& h, const FieldChoice& field = FieldChoice::rationals()) {
    detail::require_special(h);
    if (!is_triangulated(h)) throw Error(ErrorCode::NotTriangulated, "hypergraph is not triangulated");
    std::map<std::vector<std::uint64_t>, detail::Entries> memo;
    BettiTable table(field, h.num_vertices());
    for (const auto& [ij, v] : detail::betti_recursive_entries(h, memo)) table.set(ij.first, ij.second, v);
    return table;
}

/// Outcome of comparing the table against self disjoint sets.
struct SelfDisjointEquivalenceReport {
    bool equivalence = true;
    std::optional<FamilyType> first_violation;  ///< least (i,j) where the two sides disagree
    int pd = 0, reg = 0;
    std::size_t d1 = 0, d2 = 0, d1_prime = 0, d2_prime = 0;
    std::map<FamilyType, EdgeFamily> witnesses;  ///< self disjoint witness per nonzero entry

    bool pd_ok() const { return static_cast<std::size_t>(pd) == d1 && d1 == d2; }
    bool reg_ok() const { return static_cast<std::size_t>(reg) == d1_prime && d1_prime == d2_prime; }
    bool ok() const { return equivalence && pd_ok() && reg_ok(); }
};

/// beta_{i,j} != 0 iff a self disjoint set of type (i,j) exists, over the whole
/// window 0 <= i <= m, 0 <= j <= n; plus pd = d1 = d2 and reg = d1' = d2'.
inline SelfDisjointEquivalenceReport check_betti_self_disjoint_equivalence(const Hypergraph& h, const BettiTable& table,
                                                                           const FamilyCensus& census) {
    SelfDisjointEquivalenceReport r;
    const auto inv = invariants_from_census(census);
    r.pd = table.pd();
    r.reg = table.reg();
    r.d1 = inv.d1;
    r.d2 = inv.d2;
    r.d1_prime = inv.d1_prime;
    r.d2_prime = inv.d2_prime;
    for (std::size_t i = 0; i <= h.num_edges(); ++i)
        for (std::size_t j = 0; j <= h.num_vertices(); ++j) {
            const FamilyType t{i, j};
            const bool nonzero = table.at(static_cast<int>(i), static_cast<int>(j)) != 0;
            const bool has = census.self_disjoint.has(t);
            if (nonzero && has) r.witnesses.emplace(t, census.self_disjoint.witness.at(t));
            if (nonzero != has && !r.first_violation) {
                r.equivalence = false;
                r.first_violation = t;
            }
        }
    return r;
}

inline SelfDisjointEquivalenceReport check_betti_self_disjoint_equivalence(const Hypergraph& h,
                                                                           const FieldChoice& field = FieldChoice::rationals()) {
    return check_betti_self_disjoint_equivalence(h, betti_recursive(h, field), family_census(h));
}

/// A family of the smaller hypergraph that failed to keep its class in H.
struct LemmaViolation {
    std::string what;
    EdgeFamily family;  ///< indices in H
};

struct LemmaReport {
    std::size_t checked = 0;
    std::vector<LemmaViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Every induced matching and every self disjoint set of H \ S stays one in H.
inline LemmaReport check_induced_matching_persistence(const Hypergraph& h, VertexId x, std::size_t s) {
    h.check_edge(s);
    if (!h.edge(s).contains(x)) throw Error(ErrorCode::InvalidArgument, "the edge must contain x");
    if (!is_simplicial_vertex(h, x)) throw Error(ErrorCode::NotSimplicial, "vertex " + h.label(x) + " is not simplicial");
    const auto h1 = delete_edge(h, s);
    LemmaReport rep;
    for_each_uncovered_family(h1, [&](const std::vector<std::size_t>& members, const std::vector<VertexSet>&, VertexSet uni) {
        EdgeFamily small;
        small.indices = members;
        small.union_size = uni.size();
        const auto in_small = classify(h1, small);
        if (!in_small.induced && !in_small.self_disjoint) return;
        ++rep.checked;
        EdgeFamily big = small;
        for (auto& e : big.indices) e += e >= s ? 1 : 0;
        const auto in_big = classify(h, big);
        if (in_small.induced && !in_big.induced) rep.violations.push_back({"induced matching lost", big});
        if (in_small.self_disjoint && !in_big.self_disjoint) rep.violations.push_back({"self disjoint set lost", big});
    });
    return rep;
}

/// Every self disjoint set S' of H2 extends to the self disjoint set
/// S' u {S, S_1..S_t} of H, with type shifted by (1 + t, d + t).
inline LemmaReport check_self_disjoint_extension(const Hypergraph& h, const SplittingDecomposition& dec) {
    const auto d = h.edge(dec.S).size();
    std::vector<std::size_t> base{dec.S};
    base.insert(base.end(), dec.neighbor_edges.begin(), dec.neighbor_edges.end());
    LemmaReport rep;
    auto check = [&](const std::vector<std::size_t>& members, std::size_t union_size) {
        ++rep.checked;
        auto idx = base;
        for (auto e : members) idx.push_back(dec.h2_edge_origin[e]);
        const auto fam = make_family(h, idx);
        const FamilyType want{members.size() + 1 + dec.t, union_size + d + dec.t};
        if (fam.type() != want)
            rep.violations.push_back({"extended family has the wrong type", fam});
        else if (!classify(h, fam).self_disjoint)
            rep.violations.push_back({"extended family is not self disjoint", fam});
    };
    check({}, 0);
    for_each_uncovered_family(dec.H2, [&](const std::vector<std::size_t>& members, const std::vector<VertexSet>&, VertexSet uni) {
        EdgeFamily f;
        f.indices = members;
        f.union_size = uni.size();
        if (classify(dec.H2, f).self_disjoint) check(members, uni.size());
    });
    return rep;
}

} // namespace hyperbetti
