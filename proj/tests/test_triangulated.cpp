#include <gtest/gtest.h>

#include "hyperbetti/generators.hpp"
#include "hyperbetti/hochster.hpp"
#include "hyperbetti/io.hpp"
#include "hyperbetti/taylor.hpp"
#include "hyperbetti/triangulated.hpp"

using namespace hyperbetti;

TEST(Split, PathOnThreeVertices) {
    const auto p3 = path_graph(3);
    const auto dec = split(p3, 0, 0);
    EXPECT_EQ(dec.t, 1u);
    ASSERT_EQ(dec.neighbor_edges.size(), 1u);
    EXPECT_EQ(p3.edge(dec.neighbor_edges[0]), VertexSet::of({1, 2}));
    EXPECT_EQ(dec.H1.num_edges(), 1u);
    EXPECT_EQ(dec.H2.num_vertices(), 0u);
}

TEST(Split, SingleEdge) {
    const auto h = Hypergraph::build(Hypergraph::default_labels(5), {{0, 1, 2}});
    const auto dec = split(h, 0, 0);
    EXPECT_EQ(dec.t, 0u);
    EXPECT_EQ(dec.H1.num_edges(), 0u);
    EXPECT_EQ(dec.H2.num_vertices(), 2u);
    EXPECT_EQ(dec.H2.num_edges(), 0u);
}

TEST(Split, StarLeaf) {
    const auto star = star_hypergraph(3, 2);  // z1 z2 x1, z1 z2 x2
    const auto x1 = *star.find_label("x1");
    const auto dec = split(star, x1, 0);
    EXPECT_EQ(dec.t, 1u);
    EXPECT_EQ(dec.z, std::vector<VertexId>{*star.find_label("x2")});
    EXPECT_EQ(dec.H2.num_edges(), 0u);
}

TEST(Split, NeighborEdgesAvoidX) {
    for (std::uint64_t k = 0; k < 40; ++k) {
        Rng rng(instance_seed(41, k));
        const auto h = random_special_triangulated(rng, 8, 2 + k % 2);
        for (VertexId x = 0; x < h.num_vertices(); ++x) {
            if (!is_simplicial_vertex(h, x)) continue;
            for (std::size_t s = 0; s < h.num_edges(); ++s) {
                if (!h.edge(s).contains(x)) continue;
                const auto dec = split(h, x, s);
                ASSERT_EQ(dec.neighbor_edges.size(), dec.t);
                for (std::size_t l = 0; l < dec.t; ++l) {
                    const auto E = h.edge(dec.neighbor_edges[l]);
                    EXPECT_EQ(E - h.edge(s), VertexSet::singleton(dec.z[l]));
                    EXPECT_FALSE(E.contains(x));
                }
            }
        }
    }
}

TEST(Split, Preconditions) {
    EXPECT_THROW(split(path_graph(4), 1, 0), Error);  // x2 is not simplicial
    const auto thin = Hypergraph::build(Hypergraph::default_labels(5), {{0, 1, 2}, {2, 3, 4}});
    EXPECT_THROW(split(thin, 0, 0), Error);
}

TEST(Recursion, BaseCases) {
    const auto empty = Hypergraph::build({"a", "b"}, {});
    const auto t0 = betti_recursive(empty);
    EXPECT_EQ(t0.entries().size(), 1u);
    const auto one = Hypergraph::build({"a", "b", "c"}, {{0, 1, 2}});
    const auto t1 = betti_recursive(one);
    EXPECT_EQ(t1.at(1, 3), 1u);
    EXPECT_EQ(t1.entries().size(), 2u);
}

TEST(Recursion, RejectsOutsideTheClass) {
    try {
        betti_recursive(cycle_graph(4));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotTriangulated);
    }
    const auto thin = Hypergraph::build(Hypergraph::default_labels(5), {{0, 1, 2}, {2, 3, 4}});
    try {
        betti_recursive(thin);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotSpecialClass);
    }
}

TEST(Recursion, AgreesWithBothEngines) {
    for (std::uint64_t k = 0; k < 90; ++k) {
        Rng rng(instance_seed(42, k));
        const auto h = random_special_triangulated(rng, 9, 2 + k % 3, 11);
        const auto want = betti_table(h);
        EXPECT_TRUE(betti_recursive(h).same_entries(want)) << serialize_edgelist(h);
        if (h.num_edges() <= 10) {
            EXPECT_TRUE(betti_via_taylor(h).same_entries(want)) << serialize_edgelist(h);
        }
    }
}

// Deleting one face from the boundary of a 3-simplex leaves no vertex whose
// closed neighbourhood has all its 3-subsets as edges, so the smaller
// hypergraph is not triangulated even though the original is.
TEST(Recursion, SimplexBoundaryLosesSimplicialVertices) {
    const auto h = complete_d_subsets(3);
    ASSERT_TRUE(is_triangulated(h));
    const auto dec = split(h, 0, 0);
    EXPECT_TRUE(uniformity_profile(dec.H1).is_special_class);
    EXPECT_FALSE(is_triangulated(dec.H1));
    EXPECT_FALSE(find_simplicial_vertex(dec.H1).has_value());
    // the recursion still applies and matches Hochster
    EXPECT_TRUE(betti_recursive(h).same_entries(betti_table(h)));
}

TEST(SelfDisjoint, ClosingExamples) {
    for (std::size_t d = 2; d <= 4; ++d) {
        const auto h = complete_d_subsets(d);
        const auto r = check_betti_self_disjoint_equivalence(h);
        EXPECT_TRUE(r.ok());
        EXPECT_EQ(r.pd, 2);
        EXPECT_EQ(r.reg, static_cast<int>(d) - 1);
    }
    for (std::size_t d = 2; d <= 3; ++d)
        for (std::size_t n = 2; n <= 5; ++n) {
            const auto h = star_hypergraph(d, n);
            const auto r = check_betti_self_disjoint_equivalence(h);
            EXPECT_TRUE(r.ok());
            EXPECT_EQ(r.pd, static_cast<int>(n));
            EXPECT_EQ(r.reg, static_cast<int>(d) - 1);
        }
}

TEST(SelfDisjoint, TreesHaveBouquetInvariants) {
    for (std::uint64_t k = 0; k < 20; ++k) {
        Rng rng(instance_seed(43, k));
        std::vector<std::vector<VertexId>> edges;
        const std::size_t n = 3 + k % 4;
        for (VertexId v = 1; v < n; ++v) edges.push_back({static_cast<VertexId>(rng() % v), v});
        const auto tree = Hypergraph::build(Hypergraph::default_labels(n), edges);
        const auto t = betti_table(tree);
        const auto bq = bouquet_invariants(tree);
        EXPECT_EQ(static_cast<std::size_t>(t.pd()), bq.d_G);
        EXPECT_EQ(static_cast<std::size_t>(t.reg()), bq.d_G_prime);
    }
}

TEST(Lemmas, PersistenceOnNamedExamples) {
    const auto p3 = path_graph(3);
    EXPECT_TRUE(check_induced_matching_persistence(p3, 0, 0).ok());
    const auto k4 = complete_graph(4);
    for (VertexId x = 0; x < 4; ++x)
        for (std::size_t s = 0; s < k4.num_edges(); ++s)
            if (k4.edge(s).contains(x)) {
                    EXPECT_TRUE(check_induced_matching_persistence(k4, x, s).ok());
                }
    const auto star = star_hypergraph(3, 4);
    const auto leaf = *star.find_label("x1");
    EXPECT_TRUE(check_induced_matching_persistence(star, leaf, 0).ok());
}

TEST(Lemmas, ExtensionOnNamedExamples) {
    const auto p4 = path_graph(4);
    const auto dec = split(p4, 0, 0);
    const auto r = check_self_disjoint_extension(p4, dec);
    EXPECT_TRUE(r.ok());
    EXPECT_GE(r.checked, 1u);
}

TEST(Lemmas, HoldOnRandomSpecialInstances) {
    for (std::uint64_t k = 0; k < 30; ++k) {
        Rng rng(instance_seed(44, k));
        const auto h = random_special_triangulated(rng, 9, 3, 10);
        for (VertexId x = 0; x < h.num_vertices(); ++x) {
            if (!is_simplicial_vertex(h, x)) continue;
            for (std::size_t s = 0; s < h.num_edges(); ++s) {
                if (!h.edge(s).contains(x)) continue;
                EXPECT_TRUE(check_induced_matching_persistence(h, x, s).ok()) << serialize_edgelist(h);
                EXPECT_TRUE(check_self_disjoint_extension(h, split(h, x, s)).ok()) << serialize_edgelist(h);
            }
        }
    }
}

TEST(Generators, SpecialTriangulatedStaysInClass) {
    for (std::uint64_t k = 0; k < 60; ++k) {
        Rng rng(instance_seed(45, k));
        const auto d = 2 + k % 3;
        const auto h = random_special_triangulated(rng, 9, d);
        const auto p = uniformity_profile(h);
        if (h.num_edges() == 0) continue;
        EXPECT_TRUE(p.is_uniform);
        EXPECT_EQ(p.d, d);
        EXPECT_TRUE(p.is_special_class);
        EXPECT_TRUE(is_triangulated(h));
    }
}
