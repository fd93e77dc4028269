// Reference tables from the brute-force homology oracle, frozen, then compared
// against both library engines.

#include <gtest/gtest.h>

#include <random>

#include "hyperbetti/generators.hpp"
#include "hyperbetti/hochster.hpp"
#include "hyperbetti/taylor.hpp"
#include "oracle/brute_betti.hpp"

using namespace hyperbetti;

namespace {

oracle::Table to_oracle_table(const BettiTable& t) {
    oracle::Table out;
    for (const auto& [k, v] : t.entries()) out[k] = static_cast<long long>(v);
    return out;
}

std::vector<unsigned> masks(const Hypergraph& h) {
    std::vector<unsigned> out;
    for (const auto& e : h.edges()) out.push_back(static_cast<unsigned>(e.bits()));
    return out;
}

// Computed once with oracle::betti and pasted here.
const oracle::Table kP3{{{0, 0}, 1}, {{1, 2}, 2}, {{2, 3}, 1}};
const oracle::Table kC3{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}};
const oracle::Table kC4{{{0, 0}, 1}, {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}};
const oracle::Table kP6{{{0, 0}, 1}, {{1, 2}, 5}, {{2, 3}, 4}, {{2, 4}, 3}, {{3, 5}, 4}, {{4, 6}, 1}};

} // namespace

TEST(Oracle, FrozenTablesStillReproduce) {
    EXPECT_EQ(oracle::betti(3, {0b011, 0b110}), kP3);
    EXPECT_EQ(oracle::betti(3, {0b011, 0b110, 0b101}), kC3);
    EXPECT_EQ(oracle::betti(4, {0b0011, 0b0110, 0b1100, 0b1001}), kC4);
    EXPECT_EQ(oracle::betti(6, {0b000011, 0b000110, 0b001100, 0b011000, 0b110000}), kP6);
}

TEST(Oracle, HochsterMatchesFrozenTables) {
    EXPECT_EQ(to_oracle_table(betti_table(path_graph(3))), kP3);
    EXPECT_EQ(to_oracle_table(betti_table(cycle_graph(3))), kC3);
    EXPECT_EQ(to_oracle_table(betti_table(cycle_graph(4))), kC4);
    EXPECT_EQ(to_oracle_table(betti_table(path_graph(6))), kP6);
}

TEST(Oracle, TaylorMatchesFrozenTables) {
    EXPECT_EQ(to_oracle_table(betti_via_taylor(path_graph(3))), kP3);
    EXPECT_EQ(to_oracle_table(betti_via_taylor(cycle_graph(3))), kC3);
    EXPECT_EQ(to_oracle_table(betti_via_taylor(cycle_graph(4))), kC4);
    EXPECT_EQ(to_oracle_table(betti_via_taylor(path_graph(6))), kP6);
}

TEST(Oracle, DerivedInvariantsOfFrozenGraphs) {
    const auto c4 = betti_table(cycle_graph(4));
    EXPECT_EQ(c4.pd(), 3);
    EXPECT_EQ(c4.reg(), 1);
    const auto p6 = betti_table(path_graph(6));
    EXPECT_EQ(p6.pd(), 4);
    EXPECT_EQ(p6.reg(), 2);
}

TEST(Oracle, RandomHypergraphsAgreeWithBothEngines) {
    for (std::uint64_t k = 0; k < 60; ++k) {
        Rng rng(instance_seed(99, k));
        const auto n = 3 + k % 4;
        const auto h = random_hypergraph(rng, n, 2 + k % 5);
        const auto want = oracle::betti(static_cast<int>(n), masks(h));
        EXPECT_EQ(to_oracle_table(betti_table(h)), want) << "instance " << k;
        EXPECT_EQ(to_oracle_table(betti_via_taylor(h)), want) << "instance " << k;
    }
}
