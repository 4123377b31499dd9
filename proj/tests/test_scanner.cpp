#include <gtest/gtest.h>

#include <hurwitz/scanner.hpp>

using namespace hurwitz;

namespace {

/// Number of distinct roots of f in F_p by evaluation at every residue.
std::size_t roots_mod(const IntPoly& f, std::uint64_t p) {
    std::size_t count = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        mpz_class v = f.eval(mpz_class(static_cast<unsigned long>(x))) % static_cast<unsigned long>(p);
        if (v == 0) ++count;
    }
    return count;
}

bool has_linear_factor(const SpecializationReport& r) {
    return std::find(r.factor_degrees.begin(), r.factor_degrees.end(), 1u) != r.factor_degrees.end();
}

} // namespace

TEST(Specialize, Examples) {
    EXPECT_EQ(specialize(2, 0), (IntPoly{2, -4, 1}));
    EXPECT_EQ(specialize(1, -1).degree(), 1);
    EXPECT_EQ(specialize(1, -1).coeff(0), 0);
    EXPECT_TRUE(factor_over_Q(specialize(5, 0)).irreducible());
    // alpha = 1/2: primitive with integer coefficients
    auto f = specialize(3, mpq_class(1, 2));
    EXPECT_EQ(f.content(), 1);
    EXPECT_EQ(f.degree(), 3);
}

TEST(Analyze, Examples) {
    auto a = analyze(5, 0);
    EXPECT_EQ(a.galois, GaloisVerdict::symmetric);
    EXPECT_FALSE(a.degenerate);
    auto b = analyze(6, -3);
    EXPECT_TRUE(b.degenerate);
    auto c = analyze(2, 0);
    EXPECT_EQ(c.galois, GaloisVerdict::symmetric);
    EXPECT_FALSE(c.disc_square);
    EXPECT_THROW(analyze(5, 0, 0), DomainError);
}

TEST(Analyze, EvidenceRecheck) {
    for (unsigned n = 4; n <= 9; ++n)
        for (long a = -6; a <= 6; ++a) {
            auto r = analyze(n, a);
            if (r.degenerate || r.galois == GaloisVerdict::reducible) continue;
            for (const auto& s : r.evidence) {
                std::uint32_t total = 0, ones = 0;
                for (auto part : s.cycle_type.parts) {
                    total += part;
                    ones += part == 1;
                }
                EXPECT_EQ(total, n);
                EXPECT_EQ(roots_mod(r.cleared, s.prime), ones) << n << " " << a << " p=" << s.prime;
            }
            if (r.galois == GaloisVerdict::symmetric || r.galois == GaloisVerdict::alternating) {
                bool big = false;
                for (const auto& s : r.evidence) big |= s.role == "n-cycle" || s.role == "(n-1)-cycle";
                EXPECT_TRUE(big) << n << " " << a;
            }
        }
}

TEST(Analyze, DiscSquareAgreesWithCleared) {
    for (unsigned n = 2; n <= 8; ++n)
        for (long b = 1; b <= 3; ++b)
            for (long a = -9; a <= 9; ++a) {
                mpq_class alpha(a, b);
                alpha.canonicalize();
                auto r = analyze(n, alpha, 5);
                if (r.degenerate) continue;
                EXPECT_EQ(r.disc_square, is_rational_square(mpq_class(discriminant(r.cleared)))) << n << " " << alpha;
            }
}

TEST(Scan, DegreeFourFindsLinearFactor) {
    auto s = scan(4, 20);
    bool found = false;
    for (const auto& r : s.exceptions) found |= !r.degenerate && has_linear_factor(r);
    EXPECT_TRUE(found);
}

TEST(Scan, DegreeFiveFindsSquareDiscriminant) {
    auto s = scan(5, 20);
    bool found = false;
    for (const auto& r : s.exceptions) found |= !r.degenerate && r.disc_square;
    EXPECT_TRUE(found);
}

TEST(Scan, CountsAddUpAndAreDeterministic) {
    auto a = scan(6, 6, 30, 1), b = scan(6, 6, 30, 2);
    EXPECT_EQ(a.total, height_enumeration(6).size());
    const auto& c = a.counts;
    EXPECT_EQ(c.s_n + c.a_n + c.contains_an + c.reducible + c.undetermined + c.degenerate, a.total);
    EXPECT_EQ(a.exceptions.size(), a.total - c.s_n);
    ASSERT_EQ(a.exceptions.size(), b.exceptions.size());
    for (std::size_t i = 0; i < a.exceptions.size(); ++i) {
        EXPECT_EQ(a.exceptions[i].alpha, b.exceptions[i].alpha);
        EXPECT_EQ(a.exceptions[i].galois, b.exceptions[i].galois);
    }
    EXPECT_EQ(c.degenerate, 5u); // alpha = -2..-6
}

TEST(HeightEnumeration, ReducedFractions) {
    auto v = height_enumeration(3);
    // b = 1: 7 values, b = 2: 4 odd numerators, b = 3: 4 numerators prime to 3
    EXPECT_EQ(v.size(), 7u + 4u + 4u);
    EXPECT_THROW(scan(4, 0), DomainError);
}

TEST(JCensus, WeightedTotalIsDegree) {
    for (long a = -8; a <= 8; ++a) {
        auto c = j_factor_census(6, a);
        std::size_t total = 0;
        for (auto [j, k] : c.counts) total += j * k;
        EXPECT_EQ(total, 6u) << a;
        EXPECT_EQ(c.squarefree_counts.has_value(), a <= -2 && a >= -6) << a;
    }
    auto irr = j_factor_census(5, 0);
    EXPECT_EQ(irr.counts, (std::map<std::uint32_t, std::size_t>{{5, 1}}));
}
