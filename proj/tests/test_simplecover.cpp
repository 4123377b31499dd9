#include <gtest/gtest.h>

#include <hurwitz/simplecover.hpp>

#include "oracles.hpp"

using namespace hurwitz;

namespace {

/// j-subsets of {0..n-1} containing exactly one of 0, 1.
std::uint64_t moved_subsets(unsigned n, unsigned j) {
    std::uint64_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (static_cast<unsigned>(__builtin_popcount(mask)) == j && ((mask & 1u) != 0) != ((mask & 2u) != 0)) ++count;
    return count;
}

} // namespace

TEST(BranchCount, Examples) {
    EXPECT_EQ(branch_count(0, 5), 8u);
    EXPECT_EQ(branch_count(2, 7), 16u);
    EXPECT_EQ(branch_count(0, 2), 2u);
    EXPECT_THROW(branch_count(0, 1), DomainError);
}

TEST(MuJSubsets, Examples) {
    EXPECT_EQ(mu_jsubsets(6, 2), 8u);
    EXPECT_EQ(mu_jsubsets(9, 1), 2u);
    EXPECT_EQ(mu_jsubsets(8, 4), 40u);
    EXPECT_THROW(mu_jsubsets(6, 4), DomainError);
}

TEST(MuJSubsets, SubsetCountOracle) {
    for (unsigned n = 2; n <= 16; ++n)
        for (unsigned j = 1; 2 * j <= n; ++j) {
            if (oracle::binomial(n, j) > 10000) continue;
            EXPECT_EQ(mu_jsubsets(n, j), moved_subsets(n, j)) << n << " " << j;
        }
}

TEST(Feasibility, Examples) {
    EXPECT_FALSE(feasible(5, 2, 0));
    EXPECT_TRUE(feasible(6, 1, 1));
    EXPECT_THROW(feasibility_scan(4, 3), DomainError);
}

TEST(Feasibility, OnlyNaturalActionAtLowGenus) {
    std::set<FeasibleTriple> expected;
    for (std::uint64_t n = 5; n <= 50; ++n)
        for (std::uint64_t g = 0; g <= 1; ++g) expected.insert({n, 1, g});
    auto got = feasibility_scan(50, 10);
    EXPECT_EQ(std::set<FeasibleTriple>(got.begin(), got.end()), expected);
    EXPECT_EQ(got.size(), expected.size());
}

TEST(Feasibility, RationalFormAgrees) {
    for (std::uint64_t n = 5; n <= 40; ++n)
        for (std::uint64_t j = 1; 2 * j <= n; ++j)
            for (std::uint64_t g = 0; g <= 6; ++g)
                EXPECT_EQ(feasible(n, j, g), mpq_class(j * (n - j)) <= mpq_class(n * (n - 1), n + g - 1));
}

TEST(Muller, SmallDegreesByClosure) {
    for (std::size_t n = 3; n <= 7; ++n) {
        auto r = muller_example(n);
        EXPECT_EQ(r.transpositions.size(), 2 * n - 2);
        EXPECT_TRUE(r.product_is_identity);
        std::vector<oracle::Images> gens;
        for (const auto& t : r.transpositions) gens.emplace_back(t.images().begin(), t.images().end());
        EXPECT_EQ(oracle::closure(n, gens).size(), oracle::factorial(static_cast<unsigned>(n)));
        EXPECT_TRUE(r.generates_symmetric);
        // 2g - 2 = -2n + (2n - 2)
        EXPECT_EQ(r.genus, 0);
    }
}

TEST(Muller, LargerDegrees) {
    for (std::size_t n : {10u, 12u, 16u}) {
        auto r = muller_example(n);
        EXPECT_TRUE(r.product_is_identity);
        EXPECT_TRUE(r.generates_symmetric);
        EXPECT_EQ(r.genus, 0);
    }
    EXPECT_THROW(muller_example(2), DomainError);
}

TEST(TheoremDecision, Examples) {
    EXPECT_EQ(theorem_decision(0, 6), (std::set<std::string>{"a"}));
    EXPECT_EQ(theorem_decision(2, 7), (std::set<std::string>{"a", "b", "c"}));
    EXPECT_EQ(theorem_decision(3, 6), (std::set<std::string>{"a", "b"}));
    EXPECT_THROW(theorem_decision(0, 5), HypothesisUnmet);
    EXPECT_THROW(theorem_decision(1, 4), HypothesisUnmet);
}

TEST(TranspositionBound, ExceedsOne) {
    for (std::uint64_t n = 5; n <= 12; ++n)
        for (std::uint64_t g = 2; g <= 5; ++g) {
            // 1 + (2/2)(-2 + (2g + 2n - 2)/2) = g + n - 2
            EXPECT_EQ(transposition_bound(g, n), mpq_class(static_cast<long>(g + n) - 2)) << n << " " << g;
            EXPECT_GT(transposition_bound(g, n), 1);
        }
}
