#pragma once

// Named hypergraph families and seeded random instance generators.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hyperbetti/hypergraph.hpp"

namespace hyperbetti {

// Named families ----------------------------------------------------------------

/// Path on n vertices x1..xn.
inline Hypergraph path_graph(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<std::vector<VertexId>> edges;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
    return Hypergraph::build(std::move(labels), edges);
}

/// Cycle on n >= 3 vertices.
inline Hypergraph cycle_graph(std::size_t n) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "a cycle needs at least three vertices");
    std::vector<std::string> labels;
    std::vector<std::vector<VertexId>> edges;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>((i + 1) % n)});
    return Hypergraph::build(std::move(labels), edges);
}

inline Hypergraph complete_graph(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<std::vector<VertexId>> edges;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) edges.push_back({a, b});
    return Hypergraph::build(std::move(labels), edges);
}

/// Centre z joined to x1..xn, plus the path x1 - x2 - ... - xn.
/// Edges: z x1, x1 x2, z x2, x2 x3, ... so that z x_i and x_i x_{i+1} interleave.
inline Hypergraph fan_graph(std::size_t n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "a fan needs at least one blade");
    std::vector<std::string> labels{"z"};
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    std::vector<std::vector<VertexId>> edges;
    for (VertexId i = 1; i <= n; ++i) {
        edges.push_back({0, i});
        if (i < n) edges.push_back({i, i + 1});
    }
    return Hypergraph::build(std::move(labels), edges);
}

/// All d-subsets of {x1..x_{d+1}}.
inline Hypergraph complete_d_subsets(std::size_t d) {
    if (d < 2) throw Error(ErrorCode::InvalidArgument, "edge size must be at least two");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i <= d; ++i) labels.push_back("x" + std::to_string(i + 1));
    std::vector<std::vector<VertexId>> edges;
    for (std::size_t skip = d + 1; skip-- > 0;) {
        std::vector<VertexId> e;
        for (VertexId v = 0; v <= d; ++v)
            if (v != skip) e.push_back(v);
        edges.push_back(std::move(e));
    }
    return Hypergraph::build(std::move(labels), edges);
}

/// Star hypergraph: common core z1..z_{d-1}, edges core + x_i for i = 1..n.
inline Hypergraph star_hypergraph(std::size_t d, std::size_t n) {
    if (d < 2) throw Error(ErrorCode::InvalidArgument, "edge size must be at least two");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i + 1 < d; ++i) labels.push_back("z" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    std::vector<std::vector<VertexId>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<VertexId> e;
        for (VertexId c = 0; c + 1 < d; ++c) e.push_back(c);
        e.push_back(static_cast<VertexId>(d - 1 + i));
        edges.push_back(std::move(e));
    }
    return Hypergraph::build(std::move(labels), edges);
}

// Random generators ---------------------------------------------------------------

/// Per-instance seed derived from a campaign seed and an instance index.
inline std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

namespace detail {

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline VertexSet random_subset(Rng& rng, std::size_t n, std::size_t k) {
    std::vector<VertexId> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<VertexId>(i);
    std::shuffle(all.begin(), all.end(), rng);
    VertexSet s;
    for (std::size_t i = 0; i < k; ++i) s.insert(all[i]);
    return s;
}

/// Adds s unless it is comparable with an edge already present.
inline bool try_add_edge(std::vector<VertexSet>& edges, VertexSet s) {
    for (const auto& e : edges)
        if (e.subset_of(s) || s.subset_of(e)) return false;
    edges.push_back(s);
    return true;
}

} // namespace detail

/// Up to m random edges of size 2..max_edge on n vertices, forming an antichain.
inline Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t m, std::size_t max_edge = 4) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least two vertices");
    max_edge = std::clamp<std::size_t>(max_edge, 2, n);
    std::vector<VertexSet> edges;
    for (std::size_t tries = 0; edges.size() < m && tries < 50 * (m + 1); ++tries)
        detail::try_add_edge(edges, detail::random_subset(rng, n, detail::uniform_index(rng, 2, max_edge)));
    return Hypergraph::from_sets(Hypergraph::default_labels(n), std::move(edges));
}

/// Up to m distinct random d-subsets of n vertices.
inline Hypergraph random_uniform_hypergraph(Rng& rng, std::size_t n, std::size_t m, std::size_t d) {
    if (d < 2 || d > n) throw Error(ErrorCode::InvalidArgument, "need 2 <= d <= n");
    std::vector<VertexSet> edges;
    for (std::size_t tries = 0; edges.size() < m && tries < 50 * (m + 1); ++tries)
        detail::try_add_edge(edges, detail::random_subset(rng, n, d));
    return Hypergraph::from_sets(Hypergraph::default_labels(n), std::move(edges));
}

/// Every edge gets its own private vertex: m random cores drawn from a pool of
/// `pool` shared vertices, each extended by a fresh vertex.
inline Hypergraph random_free_vertex_hypergraph(Rng& rng, std::size_t m, std::size_t pool) {
    if (pool + m > kMaxVertices) throw Error(ErrorCode::SizeCapExceeded, "too many vertices");
    std::vector<VertexSet> edges;
    for (std::size_t s = 0; s < m; ++s) {
        auto core = pool == 0 ? VertexSet{} : detail::random_subset(rng, pool, detail::uniform_index(rng, 1, pool));
        core.insert(static_cast<VertexId>(pool + s));
        if (core.size() < 2) core.insert(0);
        edges.push_back(core);
    }
    return Hypergraph::from_sets(Hypergraph::default_labels(pool + m), std::move(edges));
}

/// d-uniform triangulated hypergraph in which intersecting edges share d-1
/// vertices, on exactly n vertices. Built by repeatedly adding a vertex v
/// together with the edges {v} u T for all (d-1)-subsets T of a clique K, which
/// makes v simplicial; a step is kept only if the intersection condition still
/// holds. For d = 2 this is a random chordal graph grown along a perfect
/// elimination ordering. Occasionally v starts a fresh component.
inline Hypergraph random_special_triangulated(Rng& rng, std::size_t n, std::size_t d, std::size_t max_edges = 64) {
    if (d < 2) throw Error(ErrorCode::InvalidArgument, "edge size must be at least two");
    if (n > kMaxVertices) throw Error(ErrorCode::SizeCapExceeded, "too many vertices");
    std::vector<VertexSet> edges;
    std::size_t used = 0;
    auto is_edge = [&](VertexSet s) { return std::find(edges.begin(), edges.end(), s) != edges.end(); };
    auto special_with = [&](const std::vector<VertexSet>& extra) {
        for (std::size_t a = 0; a < extra.size(); ++a) {
            for (const auto& e : edges) {
                const auto k = (e & extra[a]).size();
                if (k != 0 && k != d - 1) return false;
            }
            for (std::size_t b = a + 1; b < extra.size(); ++b) {
                const auto k = (extra[a] & extra[b]).size();
                if (k != 0 && k != d - 1) return false;
            }
        }
        return true;
    };
    auto d_subsets_are_edges = [&](VertexSet k, VertexId w) {
        // every d-subset of k u {w} containing w is an edge
        const auto vs = k.to_vector();
        if (vs.size() + 1 < d) return true;
        std::vector<bool> pick(vs.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d - 1), true);
        do {
            VertexSet s = VertexSet::singleton(w);
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (pick[i]) s.insert(vs[i]);
            if (!is_edge(s)) return false;
        } while (std::prev_permutation(pick.begin(), pick.end()));
        return true;
    };
    auto fresh_edge = [&]() {
        VertexSet e;
        for (std::size_t i = 0; i < d; ++i) e.insert(static_cast<VertexId>(used++));
        edges.push_back(e);
    };
    if (n >= d) fresh_edge();
    while (used < n) {
        const auto v = static_cast<VertexId>(used);
        bool placed = false;
        if (!edges.empty() && edges.size() < max_edges && std::bernoulli_distribution(0.9)(rng)) {
            for (int attempt = 0; attempt < 20 && !placed; ++attempt) {
                // Seed K with d-1 vertices of a random edge, then grow it greedily.
                const auto& base = edges[detail::uniform_index(rng, 0, edges.size() - 1)];
                auto bv = base.to_vector();
                std::shuffle(bv.begin(), bv.end(), rng);
                VertexSet k;
                for (std::size_t i = 0; i + 1 < d; ++i) k.insert(bv[i]);
                std::vector<VertexId> others;
                for (VertexId w = 0; w < used; ++w)
                    if (!k.contains(w)) others.push_back(w);
                std::shuffle(others.begin(), others.end(), rng);
                const auto grow = detail::uniform_index(rng, 0, 2);
                std::size_t grown = 0;
                for (auto w : others) {
                    if (grown == grow) break;
                    if (d_subsets_are_edges(k, w)) {
                        k.insert(w);
                        ++grown;
                    }
                }
                std::vector<VertexSet> extra;
                const auto kv = k.to_vector();
                std::vector<bool> pick(kv.size(), false);
                std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d - 1), true);
                do {
                    VertexSet s = VertexSet::singleton(v);
                    for (std::size_t i = 0; i < kv.size(); ++i)
                        if (pick[i]) s.insert(kv[i]);
                    extra.push_back(s);
                } while (std::prev_permutation(pick.begin(), pick.end()));
                if (edges.size() + extra.size() > max_edges || !special_with(extra)) continue;
                edges.insert(edges.end(), extra.begin(), extra.end());
                ++used;
                placed = true;
            }
        }
        if (placed) continue;
        if (used + d <= n && (edges.empty() || edges.size() < max_edges)) {
            fresh_edge();
        } else {
            ++used;  // isolated vertex
        }
    }
    return Hypergraph::from_sets(Hypergraph::default_labels(n), std::move(edges));
}

/// Random chordal graph on n vertices.
inline Hypergraph random_chordal_graph(Rng& rng, std::size_t n, std::size_t max_edges = 64) {
    return random_special_triangulated(rng, n, 2, max_edges);
}

} // namespace hyperbetti
