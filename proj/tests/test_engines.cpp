#include <gtest/gtest.h>

#include <map>
#include <random>

#include "hyperbetti/families.hpp"
#include "hyperbetti/generators.hpp"
#include "hyperbetti/hochster.hpp"
#include "hyperbetti/io.hpp"
#include "hyperbetti/taylor.hpp"
#include "oracle/brute_betti.hpp"

using namespace hyperbetti;

namespace {

const auto Q = FieldChoice::rationals();
const auto GF2 = FieldChoice::prime(2);

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int spread, int density) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (static_cast<int>(rng() % 100) < density) m(i, j) = static_cast<int>(rng() % (2 * spread + 1)) - spread;
    return m;
}

// Minimal non-faces of the six-vertex real projective plane: its Stanley-Reisner
// ideal is an edge ideal of ten 3-edges, with 2-torsion in homology.
Hypergraph projective_plane_nonfaces() {
    const std::vector<std::vector<VertexId>> facets{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                    {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}};
    std::vector<std::vector<VertexId>> nonfaces;
    for (VertexId a = 0; a < 6; ++a)
        for (VertexId b = a + 1; b < 6; ++b)
            for (VertexId c = b + 1; c < 6; ++c)
                if (std::find(facets.begin(), facets.end(), std::vector<VertexId>{a, b, c}) == facets.end())
                    nonfaces.push_back({a, b, c});
    return Hypergraph::build(Hypergraph::default_labels(6), nonfaces);
}

} // namespace

TEST(Linalg, SparseReductionMatchesDenseElimination) {
    std::mt19937_64 rng(8);
    for (int k = 0; k < 300; ++k) {
        const auto m = random_matrix(rng, 1 + rng() % 12, 1 + rng() % 12, 1 + k % 4, 20 + k % 70);
        EXPECT_EQ(rank(m, Q), rank_dense(m, Q));
        EXPECT_EQ(rank(m, GF2), rank_dense(m, GF2));
        EXPECT_EQ(rank(m, FieldChoice::prime(3)), rank_dense(m, FieldChoice::prime(3)));
    }
}

TEST(Linalg, CharacteristicMatters) {
    IntMatrix m(2, 2);
    m(0, 0) = 1, m(0, 1) = 1, m(1, 0) = 1, m(1, 1) = -1;  // determinant -2
    EXPECT_EQ(rank(m, Q), 2u);
    EXPECT_EQ(rank(m, GF2), 1u);
    EXPECT_EQ(rank(m, FieldChoice::prime(3)), 2u);
}

TEST(Linalg, UnitVectorMembershipMatchesRankTest) {
    std::mt19937_64 rng(9);
    for (int k = 0; k < 200; ++k) {
        const auto m = random_matrix(rng, 1 + rng() % 9, 1 + rng() % 6, 2, 30);
        for (const auto& f : {Q, GF2}) {
            const auto got = unit_vectors_in_column_space(m, f);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                std::vector<int> e(m.rows(), 0);
                e[r] = 1;
                EXPECT_EQ(got[r], in_column_space(m, e, f));
            }
        }
    }
}

TEST(Linalg, FieldParsing) {
    EXPECT_EQ(FieldChoice::parse("q"), Q);
    EXPECT_EQ(FieldChoice::parse("gf2"), GF2);
    EXPECT_EQ(FieldChoice::parse("gf:7").p, 7u);
    EXPECT_THROW(FieldChoice::parse("gf:8"), Error);
    EXPECT_THROW(FieldChoice::parse("r"), Error);
}

TEST(Hochster, EdgelessAndSingleEdge) {
    const auto empty = Hypergraph::build({"a", "b", "c"}, {});
    const auto t = betti_table(empty);
    EXPECT_EQ(t.entries().size(), 1u);
    EXPECT_EQ(t.at(0, 0), 1u);
    EXPECT_EQ(t.pd(), 0);
    EXPECT_EQ(t.reg(), 0);
    const auto one = Hypergraph::build({"a", "b", "c"}, {{0, 1, 2}});
    EXPECT_EQ(betti_table(one).at(1, 3), 1u);
    EXPECT_EQ(betti_table(one).reg(), 2);
}

TEST(Hochster, IndependenceComplexAndHomology) {
    const auto c4 = cycle_graph(4);
    const auto cx = independence_complex(c4, c4.vertices());
    EXPECT_EQ(cx.count(-1), 1u);
    EXPECT_EQ(cx.count(0), 4u);
    EXPECT_EQ(cx.count(1), 2u);  // the two diagonals
    const auto dims = reduced_homology_dims(cx, Q);
    EXPECT_EQ(dims[1], 1u);  // two components
}

TEST(Hochster, VertexCapIsEnforced) {
    EXPECT_THROW(betti_table(path_graph(16)), Error);
    EXPECT_NO_THROW(betti_table(path_graph(16), Q, 16));
}

TEST(Hochster, TorsionShowsUpOverTwoElements) {
    const auto h = projective_plane_nonfaces();
    const auto q = betti_table(h, Q), two = betti_table(h, GF2);
    EXPECT_FALSE(q.same_entries(two));
    EXPECT_TRUE(q.same_entries(betti_via_taylor(h, Q)));
    EXPECT_TRUE(two.same_entries(betti_via_taylor(h, GF2)));
    oracle::Table want;
    std::vector<unsigned> masks;
    for (const auto& e : h.edges()) masks.push_back(static_cast<unsigned>(e.bits()));
    for (const auto& [k, v] : q.entries()) want[k] = static_cast<long long>(v);
    EXPECT_EQ(oracle::betti(6, masks), want);
}

TEST(Hochster, ThreeUniformSixVertexTable) {
    const auto h = Hypergraph::build({"x1", "x2", "x3", "x4", "x5", "x6"}, {{0, 1, 2}, {1, 2, 3}, {1, 4, 5}});
    const auto t = betti_table(h);
    EXPECT_EQ(t.at(1, 3), 3u);
    EXPECT_EQ(t.at(2, 4), 1u);
    EXPECT_EQ(t.at(2, 5), 2u);
    EXPECT_EQ(t.at(3, 6), 1u);
    EXPECT_EQ(t.pd(), 3);
}

TEST(Taylor, SlicesAndBoundary) {
    const auto p3 = path_graph(3);
    const TaylorComplex tc(p3);
    EXPECT_EQ(tc.basis(1, 2).size(), 2u);
    EXPECT_EQ(tc.basis(2, 3).size(), 1u);
    const auto d = tc.boundary(2, 3);
    EXPECT_EQ(d.rows(), 0u);  // no single edge has three vertices
    EXPECT_THROW(TaylorComplex(path_graph(14)), Error);
}

TEST(Taylor, ReducedBoundaryDropsUncoveredMembers) {
    // C3: every edge lies in the union of the other two, so d(e_{012}) has three terms
    const auto c3 = cycle_graph(3);
    const auto chain = chain_of_edges(c3, {0, 1, 2});
    EXPECT_EQ(reduced_boundary(c3, EdgeOrdering::identity(3), chain).size(), 3u);
    EXPECT_FALSE(in_kernel(c3, EdgeOrdering::identity(3), chain));
    const auto p3 = path_graph(3);
    EXPECT_TRUE(in_kernel(p3, EdgeOrdering::identity(2), chain_of_edges(p3, {0, 1})));
}

TEST(Taylor, BSetMatchesPerVectorRankTest) {
    for (std::uint64_t k = 0; k < 40; ++k) {
        Rng rng(instance_seed(31, k));
        const auto h = random_hypergraph(rng, 6, 3 + k % 5);
        const TaylorComplex tc(h);
        for (const auto& [key, basis] : tc.slices()) {
            const auto [i, j] = key;
            std::size_t want = 0;
            for (auto c : basis) {
                const auto members = mask_to_indices(c);
                if (!detail::all_nonempty(detail::private_parts(h, members))) continue;
                if (!basis_vector_in_image(tc, c, j, Q)) ++want;
            }
            EXPECT_EQ(b_set(tc, h, i, j, Q).size(), want) << serialize_edgelist(h) << " at " << i << "," << j;
        }
    }
}

TEST(Taylor, ConditionsOnSmallGraphs) {
    const auto c3 = cycle_graph(3);
    EXPECT_TRUE(kernel_basis_condition(c3, 2, 3));
    EXPECT_FALSE(kernel_basis_condition(c3, 3, 3));
    EXPECT_FALSE(image_separation_condition(c3, 2, 3));
    const auto p4 = path_graph(4);
    EXPECT_TRUE(image_separation_condition(p4, 2, 3));
    const auto fb = betti_bounds_from_families(p4, 2, 3);
    EXPECT_TRUE(fb.applicable());
    EXPECT_TRUE(fb.holds());
}

TEST(Lyubeznik, AdmissibilityOnPath) {
    const auto p4 = path_graph(4);
    const auto id = EdgeOrdering::identity(3);
    EXPECT_TRUE(is_l_admissible(p4, id, make_chain(p4, id, {0, 1})));
    // nothing precedes e0, so every symbol starting there passes
    EXPECT_TRUE(is_l_admissible(p4, id, make_chain(p4, id, {0, 2})));
    EXPECT_EQ(max_admissible_length(p4, id), 3u);
    // with the middle edge first, x2x3 lies in the union of the two outer edges
    const auto mid_first = EdgeOrdering::leading(3, {1});
    EXPECT_FALSE(is_l_admissible(p4, mid_first, make_chain(p4, mid_first, {1, 2})));
    EXPECT_EQ(max_admissible_length(p4, mid_first), 2u);
}

TEST(Lyubeznik, LongestAdmissibleBoundsProjectiveDimension) {
    for (std::uint64_t k = 0; k < 60; ++k) {
        Rng rng(instance_seed(32, k));
        const auto h = random_hypergraph(rng, 6, 2 + k % 6);
        const auto id = EdgeOrdering::identity(h.num_edges());
        EXPECT_LE(static_cast<std::size_t>(betti_table(h).pd()), max_admissible_length(h, id)) << serialize_edgelist(h);
    }
}

namespace {

// true if some beta_{i,j} exceeds the number of admissible symbols of size i and degree j
bool exceeds_symbol_count(const Hypergraph& h, const LyubeznikReading& reading) {
    const auto m = h.num_edges();
    const auto ord = EdgeOrdering::identity(m);
    std::map<std::pair<int, int>, std::uint64_t> count;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::size_t> pos;
        for (std::size_t q = 0; q < m; ++q)
            if (mask >> q & 1) pos.push_back(q);
        const auto c = make_chain(h, ord, pos);
        if (is_l_admissible(h, ord, c, reading)) ++count[{static_cast<int>(pos.size()), static_cast<int>(c.degree)}];
    }
    const auto table = betti_table(h);
    for (const auto& [ij, b] : table.entries())
        if (ij.first > 0 && b > count[ij]) return true;
    return false;
}

} // namespace

// The last position never matters (S_q inside a single S_l is impossible), so
// the two ranges for t agree; the position-range union is not a resolution.
TEST(Lyubeznik, ReadingsComparedAgainstBetti) {
    using R = LyubeznikReading;
    std::size_t members_bad = 0, range_bad = 0;
    for (std::uint64_t k = 0; k < 120; ++k) {
        Rng rng(instance_seed(34, k));
        const auto h = random_hypergraph(rng, 6, 2 + k % 7);
        const auto id = EdgeOrdering::identity(h.num_edges());
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << h.num_edges()); ++mask) {
            std::vector<std::size_t> pos;
            for (std::size_t q = 0; q < h.num_edges(); ++q)
                if (mask >> q & 1) pos.push_back(q);
            const auto c = make_chain(h, id, pos);
            EXPECT_EQ(is_l_admissible(h, id, c, R{R::Union::SymbolMembers, R::Positions::All}),
                      is_l_admissible(h, id, c, R{R::Union::SymbolMembers, R::Positions::AllButLast}));
        }
        members_bad += exceeds_symbol_count(h, R{});
        range_bad += exceeds_symbol_count(h, R{R::Union::PositionRange, R::Positions::All});
    }
    EXPECT_EQ(members_bad, 0u);
    EXPECT_GT(range_bad, 0u);
}

TEST(Lyubeznik, OrderingValidation) {
    EdgeOrdering o;
    o.order = {0, 0, 1};
    EXPECT_THROW(o.validate(3), Error);
    EXPECT_EQ(EdgeOrdering::leading(4, {2, 0}).order, (std::vector<std::size_t>{2, 0, 1, 3}));
}

TEST(Certificates, FanSelfOrdered) {
    for (std::size_t n = 3; n <= 6; ++n) {
        const auto g = fan_graph(n);
        const auto census = family_census(g);
        const FamilyType t{n, n + 1};
        ASSERT_TRUE(census.self_ordered.has(t)) << "fan " << n;
        const auto table = betti_table(g);
        const auto res = certify_nonvanishing(g, {CertificateKind::SelfOrdered, census.self_ordered.witness.at(t), t, std::nullopt}, table);
        EXPECT_EQ(res.verdict, Verdict::Verified) << res.detail;
        EXPECT_GE(table.pd(), static_cast<int>(n));
    }
}

TEST(Certificates, SemiDisjointOnThreeUniformExample) {
    const auto h = Hypergraph::build({"x1", "x2", "x3", "x4", "x5", "x6"}, {{0, 1, 2}, {1, 2, 3}, {1, 4, 5}});
    const auto fam = make_family(h, {0, 1, 2});
    const auto res = certify_nonvanishing(h, {CertificateKind::SelfSemiDisjoint, fam, fam.type(), std::nullopt}, betti_table(h));
    EXPECT_EQ(res.verdict, Verdict::Verified) << res.detail;
    EXPECT_TRUE(res.restricted.has_value());
}

TEST(Certificates, PremiseAndTypeAreChecked) {
    const auto p4 = path_graph(4);
    const auto table = betti_table(p4);
    const auto outer = make_family(p4, {0, 2});
    EXPECT_EQ(certify_nonvanishing(p4, {CertificateKind::InducedMatching, outer, outer.type(), std::nullopt}, table).verdict,
              Verdict::PremiseFails);
    const auto one = make_family(p4, {1});
    EXPECT_EQ(certify_nonvanishing(p4, {CertificateKind::InducedMatching, one, FamilyType{1, 3}, std::nullopt}, table).verdict,
              Verdict::PremiseFails);
    EXPECT_EQ(certify_nonvanishing(p4, {CertificateKind::InducedMatching, one, one.type(), std::nullopt}, table).verdict,
              Verdict::Verified);
}
