#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "hyperbetti/generators.hpp"
#include "hyperbetti/hypergraph.hpp"
#include "hyperbetti/io.hpp"

using namespace hyperbetti;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvalidArgument;
}

// Chordality through perfect elimination orderings: try every vertex order.
// Independent of the simplicial-vertex machinery in the library.
bool has_peo(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [a, b] : edges) adj[a][b] = adj[b][a] = true;
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    do {
        bool ok = true;
        for (std::size_t p = 0; p < n && ok; ++p) {
            std::vector<int> later;
            for (std::size_t q = p + 1; q < n; ++q)
                if (adj[order[p]][order[q]]) later.push_back(order[q]);
            for (std::size_t a = 0; a < later.size() && ok; ++a)
                for (std::size_t b = a + 1; b < later.size() && ok; ++b) ok = adj[later[a]][later[b]];
        }
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

Hypergraph graph_of(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<VertexId>> e;
    for (auto [a, b] : edges) e.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
    return Hypergraph::build(Hypergraph::default_labels(n), e);
}

// Literal reading of the definition: every vertex subset must induce a
// hypergraph with a simplicial vertex.
bool triangulated_by_definition(const Hypergraph& h) {
    const std::uint64_t full = h.vertices().bits();
    for (std::uint64_t w = full;; w = (w - 1) & full) {
        const auto sub = induced_subhypergraph(h, VertexSet(w));
        if (sub.num_vertices() > 0) {
            bool found = false;
            for (VertexId v = 0; v < sub.num_vertices() && !found; ++v) found = is_simplicial_vertex(sub, v);
            if (!found) return false;
        }
        if (w == 0) break;
    }
    return true;
}

} // namespace

TEST(Build, RejectsMalformedInput) {
    const auto labels = Hypergraph::default_labels(3);
    EXPECT_EQ(code_of([&] { Hypergraph::build(labels, {{0}}); }), ErrorCode::EdgeTooSmall);
    EXPECT_EQ(code_of([&] { Hypergraph::build(labels, {{0, 1}, {1, 0}}); }), ErrorCode::DuplicateEdge);
    EXPECT_EQ(code_of([&] { Hypergraph::build(labels, {{0, 1}, {0, 1, 2}}); }), ErrorCode::ComparableEdges);
    EXPECT_EQ(code_of([&] { Hypergraph::build(labels, {{0, 5}}); }), ErrorCode::UnknownVertex);
    EXPECT_EQ(code_of([&] { Hypergraph::build({"a", "a"}, {}); }), ErrorCode::InvalidArgument);
}

TEST(Build, KeepsEdgeOrderAndLabels) {
    const auto h = Hypergraph::build({"x", "y", "z"}, {{1, 2}, {0, 1}});
    EXPECT_EQ(h.edge(0), VertexSet::of({1, 2}));
    EXPECT_EQ(h.label(2), "z");
    EXPECT_EQ(h.lex_sorted().edge(0), VertexSet::of({0, 1}));
    EXPECT_EQ(code_of([&] { (void)h.edge(2); }), ErrorCode::IndexOutOfRange);
}

TEST(Structure, InducedAndDeletedSubhypergraphs) {
    const auto p4 = path_graph(4);
    const auto sub = induced_subhypergraph(p4, VertexSet::of({0, 1, 3}));
    EXPECT_EQ(sub.num_vertices(), 3u);
    EXPECT_EQ(sub.num_edges(), 1u);
    EXPECT_EQ(sub.label(2), "x4");
    const auto del = delete_edge(p4, 1);
    EXPECT_EQ(del.num_vertices(), 4u);
    EXPECT_EQ(del.num_edges(), 2u);
    EXPECT_EQ(del.edge(1), VertexSet::of({2, 3}));
}

TEST(Structure, Neighborhoods) {
    const auto p4 = path_graph(4);
    EXPECT_EQ(edge_neighborhood(p4, 0), VertexSet::of({2}));
    EXPECT_EQ(edge_neighborhood(p4, 1), VertexSet::of({0, 3}));
    const auto nx = vertex_neighborhood(p4, 1);
    EXPECT_EQ(nx.open, VertexSet::of({0, 2}));
    EXPECT_EQ(nx.closed, VertexSet::of({0, 1, 2}));
}

TEST(Structure, UniformityProfile) {
    const auto k4 = complete_d_subsets(3);
    const auto p = uniformity_profile(k4);
    EXPECT_TRUE(p.is_uniform);
    EXPECT_EQ(p.d, 3u);
    EXPECT_TRUE(p.is_special_class);
    const auto mixed = Hypergraph::build(Hypergraph::default_labels(4), {{0, 1}, {1, 2, 3}});
    EXPECT_FALSE(uniformity_profile(mixed).is_uniform);
    // two 3-edges meeting in one vertex
    const auto thin = Hypergraph::build(Hypergraph::default_labels(5), {{0, 1, 2}, {2, 3, 4}});
    EXPECT_FALSE(uniformity_profile(thin).is_special_class);
}

TEST(Simplicial, SmallGraphs) {
    const auto c4 = cycle_graph(4);
    for (VertexId v = 0; v < 4; ++v) EXPECT_FALSE(is_simplicial_vertex(c4, v));
    const auto p4 = path_graph(4);
    EXPECT_TRUE(is_simplicial_vertex(p4, 0));
    EXPECT_FALSE(is_simplicial_vertex(p4, 1));
    const auto k4 = complete_graph(4);
    for (VertexId v = 0; v < 4; ++v) EXPECT_TRUE(is_simplicial_vertex(k4, v));
    const auto mixed = Hypergraph::build(Hypergraph::default_labels(4), {{0, 1}, {1, 2, 3}});
    EXPECT_EQ(code_of([&] { is_simplicial_vertex(mixed, 0); }), ErrorCode::NotUniform);
}

TEST(Triangulated, NamedExamples) {
    EXPECT_FALSE(is_triangulated(cycle_graph(4)));
    EXPECT_FALSE(is_triangulated(cycle_graph(5)));
    EXPECT_TRUE(is_triangulated(cycle_graph(3)));
    EXPECT_TRUE(is_triangulated(fan_graph(5)));
    EXPECT_TRUE(is_triangulated(complete_d_subsets(3)));
    EXPECT_TRUE(is_triangulated(star_hypergraph(3, 4)));
    EXPECT_EQ(code_of([] { is_triangulated(path_graph(20)); }), ErrorCode::SizeCapExceeded);
}

TEST(Triangulated, TreesAreTriangulated) {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 2 + k % 7;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % v), static_cast<int>(v));
        EXPECT_TRUE(is_triangulated(graph_of(n, edges)));
    }
}

TEST(Triangulated, EqualsChordalityOnAllSmallGraphs) {
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < static_cast<int>(n); ++a)
            for (int b = a + 1; b < static_cast<int>(n); ++b) pairs.emplace_back(a, b);
        for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << pairs.size()); ++sel) {
            std::vector<std::pair<int, int>> edges;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if (sel >> k & 1u) edges.push_back(pairs[k]);
            ASSERT_EQ(is_triangulated(graph_of(n, edges)), has_peo(n, edges)) << "n=" << n << " sel=" << sel;
        }
    }
}

TEST(Triangulated, EqualsChordalityOnRandomLargerGraphs) {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 300; ++k) {
        const std::size_t n = 7 + k % 2;
        std::vector<std::pair<int, int>> edges;
        const auto density = 20 + rng() % 60;
        for (int a = 0; a < static_cast<int>(n); ++a)
            for (int b = a + 1; b < static_cast<int>(n); ++b)
                if (rng() % 100 < density) edges.emplace_back(a, b);
        ASSERT_EQ(is_triangulated(graph_of(n, edges)), has_peo(n, edges)) << "instance " << k;
    }
}

TEST(Triangulated, GreedyEliminationMatchesDefinition) {
    for (std::uint64_t k = 0; k < 120; ++k) {
        Rng rng(instance_seed(3, k));
        const auto h = random_uniform_hypergraph(rng, 6, 2 + k % 6, 3);
        EXPECT_EQ(is_triangulated(h), triangulated_by_definition(h)) << serialize_edgelist(h);
    }
    for (std::uint64_t k = 0; k < 40; ++k) {
        Rng rng(instance_seed(4, k));
        const auto h = random_special_triangulated(rng, 7, 3);
        EXPECT_TRUE(triangulated_by_definition(h));
    }
}
