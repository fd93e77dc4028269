#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "hyperbetti/error.hpp"
#include "hyperbetti/vertex_set.hpp"

namespace hyperbetti {

/// Simple hypergraph: labelled vertices 0..n-1 and an antichain of edges,
/// each of size at least two. Edges keep their input order; that order is the
/// default edge ordering for every Taylor/Lyubeznik construction.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Validating constructor. Edges are given as lists of vertex ids.
    static Hypergraph build(std::vector<std::string> labels, const std::vector<std::vector<VertexId>>& edges) {
        std::vector<VertexSet> sets;
        sets.reserve(edges.size());
        for (const auto& e : edges) {
            VertexSet s;
            for (auto v : e) {
                if (v >= labels.size())
                    throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(v) + " not in vertex table");
                s.insert(v);
            }
            sets.push_back(s);
        }
        return from_sets(std::move(labels), std::move(sets));
    }

    /// Same as build, with edges already packed as vertex sets.
    static Hypergraph from_sets(std::vector<std::string> labels, std::vector<VertexSet> edges) {
        if (labels.size() > kMaxVertices)
            throw Error(ErrorCode::SizeCapExceeded, "at most 64 vertices are supported");
        if (edges.size() > kMaxEdges)
            throw Error(ErrorCode::SizeCapExceeded, "at most 64 edges are supported");
        std::unordered_set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second) throw Error(ErrorCode::InvalidArgument, "duplicate vertex label '" + l + "'");
        const auto all = VertexSet::range(labels.size());
        for (std::size_t a = 0; a < edges.size(); ++a) {
            if (!edges[a].subset_of(all)) throw Error(ErrorCode::UnknownVertex, "edge references unknown vertex");
            if (edges[a].size() < 2)
                throw Error(ErrorCode::EdgeTooSmall, "edge " + std::to_string(a) + " has fewer than two vertices");
        }
        for (std::size_t a = 0; a < edges.size(); ++a) {
            for (std::size_t b = a + 1; b < edges.size(); ++b) {
                if (edges[a] == edges[b])
                    throw Error(ErrorCode::DuplicateEdge,
                                "edges " + std::to_string(a) + " and " + std::to_string(b) + " coincide");
                if (edges[a].subset_of(edges[b]) || edges[b].subset_of(edges[a]))
                    throw Error(ErrorCode::ComparableEdges,
                                "edges " + std::to_string(a) + " and " + std::to_string(b) + " are nested");
            }
        }
        Hypergraph h;
        h.labels_ = std::move(labels);
        h.edges_ = std::move(edges);
        return h;
    }

    /// Vertices named "0".."n-1".
    static std::vector<std::string> default_labels(std::size_t n) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
        return out;
    }

    std::size_t num_vertices() const { return labels_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    const std::vector<VertexSet>& edges() const { return edges_; }
    const VertexSet& edge(std::size_t s) const {
        check_edge(s);
        return edges_[s];
    }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(VertexId v) const {
        check_vertex(v);
        return labels_[v];
    }
    VertexSet vertices() const { return VertexSet::range(labels_.size()); }

    std::optional<VertexId> find_label(const std::string& l) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == l) return static_cast<VertexId>(i);
        return std::nullopt;
    }

    std::optional<std::size_t> find_edge(VertexSet s) const {
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i] == s) return i;
        return std::nullopt;
    }

    EdgeMask all_edges_mask() const {
        return edges_.size() >= 64 ? ~EdgeMask{0} : ((EdgeMask{1} << edges_.size()) - 1);
    }

    /// Union of the edges selected by a mask.
    VertexSet union_of(EdgeMask mask) const {
        VertexSet u;
        for (auto b = mask; b != 0; b &= b - 1) u |= edges_[static_cast<std::size_t>(std::countr_zero(b))];
        return u;
    }

    /// Mask of all edges contained in the vertex set w.
    EdgeMask edges_inside(VertexSet w) const {
        EdgeMask m = 0;
        for (std::size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].subset_of(w)) m |= EdgeMask{1} << i;
        return m;
    }

    std::size_t max_edge_size() const {
        std::size_t t = 0;
        for (const auto& e : edges_) t = std::max(t, e.size());
        return t;
    }
    std::size_t min_edge_size() const {
        if (edges_.empty()) return 0;
        std::size_t t = kMaxVertices + 1;
        for (const auto& e : edges_) t = std::min(t, e.size());
        return t;
    }

    /// Copy with edges re-sorted lexicographically by their sorted vertex lists.
    Hypergraph lex_sorted() const {
        auto edges = edges_;
        std::sort(edges.begin(), edges.end(),
                  [](VertexSet a, VertexSet b) { return a.to_vector() < b.to_vector(); });
        Hypergraph h;
        h.labels_ = labels_;
        h.edges_ = std::move(edges);
        return h;
    }

    void check_vertex(VertexId v) const {
        if (v >= labels_.size()) throw Error(ErrorCode::UnknownVertex, "vertex id " + std::to_string(v));
    }
    void check_edge(std::size_t s) const {
        if (s >= edges_.size()) throw Error(ErrorCode::IndexOutOfRange, "edge index " + std::to_string(s));
    }
    void check_vertex_set(VertexSet w) const {
        if (!w.subset_of(vertices())) throw Error(ErrorCode::UnknownVertex, "vertex set outside V(H)");
    }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> edges_;
};

/// Indices of the edges of h contained in w, in edge order.
inline std::vector<std::size_t> induced_edge_indices(const Hypergraph& h, VertexSet w) {
    h.check_vertex_set(w);
    return mask_to_indices(h.edges_inside(w));
}

/// H_W with vertices relabelled densely in increasing id order.
inline Hypergraph induced_subhypergraph(const Hypergraph& h, VertexSet w) {
    h.check_vertex_set(w);
    std::vector<VertexId> remap(h.num_vertices(), 0);
    std::vector<std::string> labels;
    w.for_each([&](VertexId v) {
        remap[v] = static_cast<VertexId>(labels.size());
        labels.push_back(h.labels()[v]);
    });
    std::vector<VertexSet> edges;
    for (const auto& e : h.edges()) {
        if (!e.subset_of(w)) continue;
        VertexSet r;
        e.for_each([&](VertexId v) { r.insert(remap[v]); });
        edges.push_back(r);
    }
    return Hypergraph::from_sets(std::move(labels), std::move(edges));
}

/// H \ S: same vertex set, edge s removed.
inline Hypergraph delete_edge(const Hypergraph& h, std::size_t s) {
    h.check_edge(s);
    auto edges = h.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(s));
    return Hypergraph::from_sets(h.labels(), std::move(edges));
}

/// N(S): vertices outside S lying on an edge that meets S. Empty for an isolated edge.
inline VertexSet edge_neighborhood(const Hypergraph& h, std::size_t s) {
    const auto S = h.edge(s);
    VertexSet out;
    for (const auto& e : h.edges())
        if (e.intersects(S)) out |= e;
    return out - S;
}

struct VertexNeighborhood {
    VertexSet open;
    VertexSet closed;
};

inline VertexNeighborhood vertex_neighborhood(const Hypergraph& h, VertexId x) {
    h.check_vertex(x);
    VertexSet closed = VertexSet::singleton(x);
    for (const auto& e : h.edges())
        if (e.contains(x)) closed |= e;
    return {closed - VertexSet::singleton(x), closed};
}

struct UniformityProfile {
    bool is_uniform = false;
    std::size_t d = 0;  ///< common edge size; 0 for the edgeless hypergraph
    bool is_special_class = false;
};

/// Detects d-uniformity and the condition that intersecting edges share exactly d-1 vertices.
/// The edgeless hypergraph counts as uniform (d = 0) and special.
inline UniformityProfile uniformity_profile(const Hypergraph& h) {
    UniformityProfile p;
    if (h.num_edges() == 0) {
        p.is_uniform = true;
        p.is_special_class = true;
        return p;
    }
    const auto d = h.edges().front().size();
    p.is_uniform = std::all_of(h.edges().begin(), h.edges().end(), [d](VertexSet e) { return e.size() == d; });
    if (!p.is_uniform) return p;
    p.d = d;
    p.is_special_class = true;
    const auto& es = h.edges();
    for (std::size_t a = 0; a < es.size() && p.is_special_class; ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            const auto k = (es[a] & es[b]).size();
            if (k != 0 && k != d - 1) {
                p.is_special_class = false;
                break;
            }
        }
    return p;
}

inline std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace detail {

inline std::size_t require_uniform(const Hypergraph& h) {
    const auto p = uniformity_profile(h);
    if (!p.is_uniform) throw Error(ErrorCode::NotUniform, "hypergraph is not uniform");
    return p.d;
}

/// Simpliciality of x inside the sub-hypergraph whose edges are `edges` (all of size d).
inline bool simplicial_among(const std::vector<VertexSet>& edges, EdgeMask live, std::size_t d, VertexId x) {
    VertexSet closed = VertexSet::singleton(x);
    for (auto b = live; b != 0; b &= b - 1) {
        const auto& e = edges[static_cast<std::size_t>(std::countr_zero(b))];
        if (e.contains(x)) closed |= e;
    }
    if (closed.size() < d || d == 0) return true;
    std::uint64_t inside = 0;
    for (auto b = live; b != 0; b &= b - 1)
        if (edges[static_cast<std::size_t>(std::countr_zero(b))].subset_of(closed)) ++inside;
    return inside == binomial(closed.size(), d);
}

} // namespace detail

/// Every d-subset of N[x] is an edge. Requires a uniform hypergraph.
inline bool is_simplicial_vertex(const Hypergraph& h, VertexId x) {
    h.check_vertex(x);
    const auto d = detail::require_uniform(h);
    return detail::simplicial_among(h.edges(), h.all_edges_mask(), d, x);
}

inline constexpr std::size_t kDefaultTriangulatedCap = 16;

/// Every induced subhypergraph has a simplicial vertex. Simpliciality passes to
/// induced subhypergraphs, so this holds iff repeatedly deleting some simplicial
/// vertex empties the vertex set, and any simplicial vertex may be taken at each
/// step. The search is therefore greedy.
inline bool is_triangulated(const Hypergraph& h, std::size_t cap = kDefaultTriangulatedCap) {
    const auto d = detail::require_uniform(h);
    const auto n = h.num_vertices();
    if (n > cap)
        throw Error(ErrorCode::SizeCapExceeded,
                    "triangulation check limited to " + std::to_string(cap) + " vertices");
    VertexSet alive = h.vertices();
    while (!alive.empty()) {
        const auto live = h.edges_inside(alive);
        std::optional<VertexId> pick;
        alive.for_each([&](VertexId v) {
            if (!pick && detail::simplicial_among(h.edges(), live, d, v)) pick = v;
        });
        if (!pick) return false;
        alive.erase(*pick);
    }
    return true;
}

} // namespace hyperbetti
