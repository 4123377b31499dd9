#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include <hurwitz/laguerre.hpp>
#include <hurwitz/monodromy.hpp>

#include "oracles.hpp"

using namespace hurwitz;

namespace {

oracle::Images images_of(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

std::vector<std::uint32_t> sorted_lengths(const Permutation& p) {
    auto v = oracle::cycle_lengths(images_of(p));
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
}

std::vector<std::uint32_t> single_cycle(unsigned n, unsigned m) {
    std::vector<std::uint32_t> v{m};
    v.resize(n - m + 1, 1);
    return v;
}

} // namespace

TEST(Roots, Quadratic) {
    auto r = roots_at(2, 0.0);
    ASSERT_EQ(r.size(), 2u);
    std::vector<double> re{r[0].real(), r[1].real()};
    std::sort(re.begin(), re.end());
    EXPECT_NEAR(re[0], 2 - std::sqrt(2.0), 1e-10);
    EXPECT_NEAR(re[1], 2 + std::sqrt(2.0), 1e-10);
    EXPECT_NEAR(std::abs(r[0].imag()) + std::abs(r[1].imag()), 0, 1e-10);
}

TEST(Roots, Linear) {
    auto r = roots_at(1, cplx(2.5, -1));
    ASSERT_EQ(r.size(), 1u);
    EXPECT_NEAR(std::abs(r[0] - cplx(3.5, -1)), 0, 1e-12);
}

TEST(Roots, ResidualAgainstExactCoefficients) {
    for (unsigned n = 2; n <= 10; ++n) {
        auto r = roots_at(n, 1.0);
        ASSERT_EQ(r.size(), n);
        EXPECT_GT(detail::min_separation(r), 1e-3);
        auto f = build_laguerre(n).poly.eval_t(1);
        for (auto z : r) {
            std::complex<long double> v = 0, zz(z.real(), z.imag());
            long double scale = 0;
            for (long k = f.degree(); k >= 0; --k) {
                const long double c = f.coeff(static_cast<std::size_t>(k)).get_d();
                v = v * zz + c;
                scale = scale * std::abs(zz) + std::abs(c);
            }
            EXPECT_LT(std::abs(v), 1e-9L * scale) << n;
        }
    }
}

TEST(TrackLoop, Examples) {
    auto a = track_loop(6, LoopSpec::around(-4));
    EXPECT_TRUE(a.converged);
    EXPECT_EQ(sorted_lengths(a.permutation), single_cycle(6, 4));
    auto b = track_loop(5, LoopSpec::around(-2));
    EXPECT_EQ(sorted_lengths(b.permutation), single_cycle(5, 2));
    EXPECT_LT(b.max_drift_ratio, 1.0 / 3.0);
}

TEST(TrackLoop, EmptyLoopIsIdentity) {
    LoopSpec L = LoopSpec::around(-0.5);
    EXPECT_TRUE(track_loop(6, L).permutation.is_identity());
    LoopSpec far{cplx(3.0, 2.0), 0.7, 64, 1.0, 1};
    EXPECT_TRUE(track_loop(7, far).permutation.is_identity());
}

TEST(TrackLoop, StableUnderRefinement) {
    for (unsigned n : {5u, 7u}) {
        for (long nu = -2; nu >= -static_cast<long>(n); --nu) {
            auto coarse = track_loop(n, LoopSpec::around(static_cast<double>(nu), 32));
            auto fine = track_loop(n, LoopSpec::around(static_cast<double>(nu), 128));
            EXPECT_EQ(coarse.permutation, fine.permutation) << n << " " << nu;
        }
        EXPECT_EQ(track_loop(n, LoopSpec::infinity(n, 32)).permutation,
                  track_loop(n, LoopSpec::infinity(n, 128)).permutation);
    }
}

TEST(LemmaEv, CycleTypesMatchFiberMultiplicity) {
    for (unsigned n = 3; n <= 9; ++n)
        for (const auto& row : verify_lemma_ev(n)) {
            const unsigned m = fiber_shape(n, row.nu).multiplicity;
            EXPECT_EQ(sorted_lengths(row.loop.permutation), single_cycle(n, m)) << n << " " << row.nu;
            EXPECT_TRUE(row.ok);
        }
    EXPECT_THROW(verify_lemma_ev(13), DomainError);
}

TEST(Infinity, DeltaConsistency) {
    for (unsigned n = 3; n <= 10; ++n) {
        auto p = infinity_profile(n);
        EXPECT_EQ(p.delta, expected_delta_infinity(n)) << n;
        EXPECT_TRUE(p.loop.converged);
    }
    EXPECT_EQ(expected_delta_infinity(6), 3);
    EXPECT_EQ(expected_delta_infinity(5), 2);
    EXPECT_EQ(expected_delta_infinity(3), 1);
}

TEST(Genus, FloorFormula) {
    for (unsigned n = 3; n <= 10; ++n) {
        auto g = laguerre_genus(n);
        EXPECT_EQ(g.genus, static_cast<long>((n - 2) * (n - 2) / 4)) << n;
        ASSERT_EQ(g.finite_deltas.size(), n - 1);
        for (std::size_t i = 0; i < g.finite_deltas.size(); ++i) EXPECT_EQ(g.finite_deltas[i], static_cast<long>(i) + 1);
    }
    EXPECT_EQ(laguerre_genus(6).genus, 4);
}

TEST(Relation, ProductIsIdentityAndGeneratesSymmetric) {
    for (unsigned n = 3; n <= 10; ++n) {
        auto r = loop_relation(n);
        EXPECT_TRUE(r.holds) << n;
        auto prod = images_of(r.product);
        EXPECT_EQ(oracle::compose(prod, images_of(r.infinity)), images_of(Permutation::identity(n))) << n;
        std::vector<oracle::Images> gens;
        for (const auto& p : r.finite) gens.push_back(images_of(p));
        gens.push_back(images_of(r.infinity));
        if (n <= 7) {
            EXPECT_EQ(oracle::closure(n, gens).size(), oracle::factorial(n)) << n;
        } else {
            // transitive with a transposition (the loop around -2)
            std::set<std::uint32_t> orbit{0};
            for (bool grew = true; grew;) {
                grew = false;
                for (const auto& g : gens)
                    for (auto x : std::set<std::uint32_t>(orbit)) grew |= orbit.insert(g[x]).second;
            }
            EXPECT_EQ(orbit.size(), n);
            EXPECT_EQ(sorted_lengths(r.finite[0]), single_cycle(n, 2));
        }
    }
}
