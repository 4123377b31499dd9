#include <gtest/gtest.h>

#include <complex>
#include <random>

#include <hurwitz/polyalg.hpp>

#include "random_polys.hpp"

using namespace hurwitz;

namespace {

/// Roots by Durand-Kerner; the discriminant is lc^(2n-2) prod_{i<j} (r_i - r_j)^2.
long double numeric_discriminant(const IntPoly& f) {
    using C = std::complex<long double>;
    const long n = f.degree();
    std::vector<C> a;
    for (const auto& c : f.coeffs()) a.emplace_back(c.get_d() / f.lc().get_d());
    std::vector<C> r(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = std::pow(C(0.4L, 0.9L), i);
    for (int it = 0; it < 2000; ++it)
        for (std::size_t i = 0; i < r.size(); ++i) {
            C num = 0;
            for (long k = n; k >= 0; --k) num = num * r[i] + a[static_cast<std::size_t>(k)];
            C den = 1;
            for (std::size_t j = 0; j < r.size(); ++j)
                if (j != i) den *= r[i] - r[j];
            r[i] -= num / den;
        }
    C prod = 1;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) prod *= (r[i] - r[j]) * (r[i] - r[j]);
    return (std::pow(f.lc().get_d(), static_cast<long double>(2 * n - 2)) * prod).real();
}

modp::Poly mp(std::initializer_list<std::uint64_t> c) { return modp::Poly(c); }

bool has_root_mod(const modp::Poly& a, std::uint64_t p) {
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = 0;
        for (std::size_t k = a.size(); k-- > 0;) v = (v * x + a[k]) % p;
        if (v == 0) return true;
    }
    return false;
}

} // namespace

TEST(IntPoly, Arithmetic) {
    IntPoly f{-1, 0, 1};
    EXPECT_EQ(f * IntPoly({1, 1}), (IntPoly{-1, -1, 1, 1}));
    EXPECT_EQ(f.derivative(), (IntPoly{0, 2}));
    EXPECT_EQ(f.eval(mpz_class(3)), 8);
    EXPECT_EQ((IntPoly{4, 6, 2}).content(), 2);
    EXPECT_EQ((IntPoly{4, 6, 2}).primitive_part(), (IntPoly{2, 3, 1}));
    EXPECT_EQ(f.to_string(), "x^2 - 1");
}

TEST(Gcd, CommonFactor) {
    IntPoly a = IntPoly{1, 1} * IntPoly{-2, 0, 1};
    IntPoly b = IntPoly{1, 1} * IntPoly{3, 1};
    EXPECT_EQ(gcd(a, b), (IntPoly{1, 1}));
    IntPoly q;
    EXPECT_TRUE(divide_exact(a, IntPoly{1, 1}, &q));
    EXPECT_EQ(q, (IntPoly{-2, 0, 1}));
    EXPECT_FALSE(divide_exact(a, IntPoly{3, 1}));
}

TEST(Yun, Squarefree) {
    IntPoly f = IntPoly{1, 1}.pow(3) * IntPoly{-2, 1}.pow(2) * IntPoly{5, 0, 1};
    auto parts = yun_squarefree(f);
    IntPoly back = IntPoly::constant(1);
    for (const auto& [g, m] : parts) back *= g.pow(m);
    EXPECT_EQ(back, f);
    EXPECT_EQ(squarefree_part(f), (IntPoly{1, 1} * IntPoly{-2, 1} * IntPoly{5, 0, 1}));
}

TEST(FactorModP, XSquaredPlusOne) {
    auto r5 = factor_mod_p(IntPoly{1, 0, 1}, 5);
    ASSERT_EQ(r5.factors.size(), 2u);
    EXPECT_EQ(r5.factors[0].first, mp({2, 1}));
    EXPECT_EQ(r5.factors[1].first, mp({3, 1}));
    auto r7 = factor_mod_p(IntPoly{1, 0, 1}, 7);
    ASSERT_EQ(r7.factors.size(), 1u);
    EXPECT_EQ(r7.factors[0].first, mp({1, 0, 1}));
}

TEST(FactorModP, BadPrime) {
    EXPECT_THROW(factor_mod_p(IntPoly{1, 0, 1}, 9), BadPrime);
    EXPECT_THROW(factor_mod_p(IntPoly{1, 0, 5}, 5), BadPrime);
}

TEST(FactorModP, RandomRoundTripMod101) {
    const std::uint64_t p = 101;
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<modp::Poly> known;
        modp::Poly prod{1};
        for (int k = 0; k < 3; ++k) {
            modp::Poly g;
            const std::size_t d = 1 + rng() % 3;
            do {
                g.assign(d + 1, 0);
                for (std::size_t i = 0; i < d; ++i) g[i] = rng() % p;
                g[d] = 1;
            } while (d > 1 && has_root_mod(g, p));
            known.push_back(g);
            prod = modp::mul(prod, g, p);
        }
        std::vector<mpz_class> c;
        for (auto v : prod) c.emplace_back(static_cast<unsigned long>(v));
        auto r = factor_mod_p(IntPoly(std::move(c)), p);
        std::vector<modp::Poly> got;
        for (const auto& [g, m] : r.factors)
            for (unsigned i = 0; i < m; ++i) got.push_back(g);
        auto key = [](const modp::Poly& x, const modp::Poly& y) {
            return x.size() != y.size() ? x.size() < y.size() : x < y;
        };
        std::sort(known.begin(), known.end(), key);
        std::sort(got.begin(), got.end(), key);
        EXPECT_EQ(got, known) << "trial " << trial;
    }
}

TEST(FactorOverQ, XFourthMinusOne) {
    auto r = factor_over_Q(IntPoly{-1, 0, 0, 0, 1});
    ASSERT_EQ(r.factors.size(), 3u);
    EXPECT_EQ(r.factors[0].first, (IntPoly{-1, 1}));
    EXPECT_EQ(r.factors[1].first, (IntPoly{1, 1}));
    EXPECT_EQ(r.factors[2].first, (IntPoly{1, 0, 1}));
}

TEST(FactorOverQ, MixedDegrees) {
    auto r = factor_over_Q(IntPoly{-2, 0, 1} * IntPoly{-2, 0, 0, 1});
    EXPECT_EQ(r.degrees(), (std::vector<std::uint32_t>{3, 2}));
    EXPECT_FALSE(r.irreducible());
}

TEST(FactorOverQ, ContentAndSign) {
    auto r = factor_over_Q(IntPoly{6, 0, -6});
    EXPECT_EQ(r.unit, -6);
    EXPECT_EQ(r.unit.get_num() * r.expand(), (IntPoly{6, 0, -6}));
}

TEST(FactorOverQ, SwinnertonDyerStyleIsIrreducible) {
    // x^4 - 10x^2 + 1 splits modulo every prime, but is irreducible over Q.
    EXPECT_TRUE(factor_over_Q(IntPoly{1, 0, -10, 0, 1}).irreducible());
}

TEST(FactorOverQ, DegreeCap) {
    EXPECT_THROW(factor_over_Q(IntPoly::monomial(1, 17) + IntPoly{1}), DegreeCapExceeded);
    EXPECT_THROW(factor_over_Q(IntPoly{1, 1, 1, 1, 1}, 3), DegreeCapExceeded);
}

TEST(FactorOverQ, RandomKnownProducts) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        auto prod = randpoly::random_product(rng, 12);
        auto r = factor_over_Q(prod.poly);
        EXPECT_EQ(randpoly::canonical(r), randpoly::canonical(prod.factors)) << prod.poly.to_string();
        EXPECT_EQ(r.unit.get_num() * r.expand(), prod.poly);
    }
}

TEST(Dedekind, CycleTypes) {
    EXPECT_EQ(dedekind_cycle_type(IntPoly{1, 0, 1}, 5).parts, (std::vector<std::uint32_t>{1, 1}));
    EXPECT_EQ(dedekind_cycle_type(IntPoly{1, 0, 1}, 7).parts, (std::vector<std::uint32_t>{2}));
    EXPECT_THROW(dedekind_cycle_type(IntPoly{1, 0, 1}, 2), BadPrime);
    EXPECT_FALSE(good_reduction(IntPoly{1, 0, 1}, 2));
}

TEST(RationalSquare, Examples) {
    EXPECT_TRUE(is_rational_square(mpq_class(9, 4)));
    EXPECT_TRUE(is_rational_square(0));
    EXPECT_FALSE(is_rational_square(mpq_class(2, 9)));
    EXPECT_FALSE(is_rational_square(-4));
}

TEST(Discriminant, ClosedForms) {
    EXPECT_EQ(discriminant(IntPoly{3, 5, 2}), 25 - 24);
    // cubic a x^3 + b x^2 + c x + d
    const long a = 2, b = -3, c = 1, d = 7;
    const long expected = b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
    EXPECT_EQ(discriminant(IntPoly{d, c, b, a}), expected);
    EXPECT_EQ(discriminant(IntPoly{1, 1, 1}.pow(2)), 0);
}

TEST(Discriminant, NumericOracle) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coef(-6, 6);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<mpz_class> c(5 + trial % 2);
        for (auto& v : c) v = coef(rng);
        c.back() = 1 + trial % 3;
        IntPoly f(c);
        const long double exact = discriminant(f).get_d();
        EXPECT_NEAR(static_cast<double>(numeric_discriminant(f)), static_cast<double>(exact),
                    1e-6 * std::max(1.0L, std::abs(exact)))
            << f.to_string();
    }
}

TEST(Bivar, DiscOfXSquaredMinusT) {
    BivarPoly f({IntPoly{0, -1}, IntPoly{}, IntPoly{1}});
    EXPECT_EQ(disc_x(f), (IntPoly{0, 4}));
}

TEST(Bivar, DiscOfLaguerreTwo) {
    // 2 L_2^(t)(x) = x^2 - 2(t+2) x + (t+1)(t+2)
    BivarPoly f({IntPoly{2, 3, 1}, IntPoly{-4, -2}, IntPoly{1}});
    EXPECT_EQ(disc_x(f), (IntPoly{8, 4}));
}

TEST(Bivar, ResultantWithSelfVanishes) {
    BivarPoly f({IntPoly{1, 2}, IntPoly{0, 1}, IntPoly{3}});
    EXPECT_TRUE(resultant_x(f, f).is_zero());
}

TEST(Bivar, DiscCommutesWithSpecialization) {
    BivarPoly f({IntPoly{3, 1, -1}, IntPoly{0, 2}, IntPoly{-1, 0, 1}, IntPoly{2}});
    IntPoly d = disc_x(f);
    for (long t = -5; t <= 5; ++t) {
        IntPoly ft = f.eval_t(t);
        if (ft.degree() == f.degree_x()) EXPECT_EQ(d.eval(mpz_class(t)), discriminant(ft)) << t;
    }
}

TEST(Bivar, ClearedEvaluation) {
    BivarPoly f({IntPoly{1, 1}, IntPoly{0, 0, 1}});
    // t = 1/2: b^2 * ((1 + 1/2) + x/4) = 6 + x
    EXPECT_EQ(f.eval_t_cleared(mpq_class(1, 2)), (IntPoly{6, 1}));
}

TEST(Primes, Basics) {
    EXPECT_TRUE(is_prime(101));
    EXPECT_FALSE(is_prime(91));
    EXPECT_EQ(next_prime(100), 101u);
}
