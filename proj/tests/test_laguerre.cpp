#include <gtest/gtest.h>

#include <random>

#include <hurwitz/laguerre.hpp>

using namespace hurwitz;

namespace {

using QPoly = std::vector<mpq_class>;

QPoly qsub_x_times(const QPoly& a, const mpq_class& s) {
    // (s - x) * a
    QPoly r(a.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += s * a[i];
        r[i + 1] -= a[i];
    }
    return r;
}

/// n! L_n^(a)(x) from the three-term recurrence, exact over Q.
QPoly recurrence_laguerre(unsigned n, const mpq_class& a) {
    QPoly prev{1}, cur{1 + a, -1};
    if (n == 0) return prev;
    mpq_class fact = 1;
    for (unsigned m = 1; m < n; ++m) {
        QPoly next = qsub_x_times(cur, 2 * m + 1 + a);
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= (m + a) * prev[i];
        for (auto& c : next) c /= m + 1;
        prev = std::move(cur);
        cur = std::move(next);
    }
    for (unsigned m = 2; m <= n; ++m) fact *= m;
    for (auto& c : cur) {
        c *= fact;
        c.canonicalize();
    }
    return cur;
}

QPoly to_q(const IntPoly& f) { return QPoly(f.coeffs().begin(), f.coeffs().end()); }

} // namespace

TEST(Build, SmallDegrees) {
    EXPECT_EQ(build_laguerre(1).poly, BivarPoly({IntPoly{1, 1}, IntPoly{-1}}));
    EXPECT_EQ(build_laguerre(2).poly, BivarPoly({IntPoly{2, 3, 1}, IntPoly{-4, -2}, IntPoly{1}}));
    EXPECT_THROW(build_laguerre(0), DomainError);
}

TEST(Build, MatchesRecurrenceAtRandomRationals) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    for (int trial = 0; trial < 100; ++trial) {
        const unsigned n = 1 + static_cast<unsigned>(trial % 10);
        mpq_class a(num(rng), den(rng));
        a.canonicalize();
        auto oracle = recurrence_laguerre(n, a);
        auto termwise = laguerre_termwise(n, a);
        ASSERT_EQ(termwise.size(), oracle.size());
        for (std::size_t i = 0; i < oracle.size(); ++i) EXPECT_EQ(termwise[i], oracle[i]) << n << " " << a;
        if (a.get_den() == 1) EXPECT_EQ(to_q(build_laguerre(n).poly.eval_t(a.get_num())), oracle);
    }
}

TEST(Build, IntegerSpecializationMatchesRecurrence) {
    for (unsigned n = 1; n <= 10; ++n)
        for (long t = -12; t <= 12; ++t)
            EXPECT_EQ(to_q(build_laguerre(n).poly.eval_t(t)), recurrence_laguerre(n, t)) << n << " " << t;
}

TEST(Homogenized, MuOneAndMuZero) {
    for (unsigned n = 1; n <= 8; ++n) {
        auto L = build_laguerre(n);
        BivarPoly signed_poly = n % 2 ? BivarPoly(std::vector<IntPoly>{}) - L.poly : L.poly;
        EXPECT_EQ(L.homogenized.at_mu(1), signed_poly) << n;
        BivarPoly x_minus_t({IntPoly{0, -1}, IntPoly{1}}), pw({IntPoly{1}});
        for (unsigned i = 0; i < n; ++i) pw = pw * x_minus_t;
        EXPECT_EQ(L.homogenized.at_mu(0), pw) << n;
    }
}

TEST(Recurrences, HoldUpToTwelve) {
    auto rows = check_recurrences(12);
    ASSERT_EQ(rows.size(), 12u);
    for (const auto& r : rows) {
        EXPECT_TRUE(r.deriv_ok) << r.m;
        EXPECT_TRUE(r.recur_ok) << r.m;
    }
    EXPECT_THROW(check_recurrences(1), DomainError);
}

TEST(Discriminant, ClosedFormSmall) {
    EXPECT_EQ(disc_closed_form(2), (IntPoly{8, 4}));
    // 3! * 2(t+2) * (3(t+3))^2
    EXPECT_EQ(disc_closed_form(3), (mpz_class(6) * IntPoly{4, 2} * IntPoly{9, 3}.pow(2)));
}

TEST(Discriminant, ResultantAgreesUpToTwelve) {
    for (unsigned n = 2; n <= 12; ++n) EXPECT_TRUE(disc_check(n)) << n;
}

TEST(Discriminant, MatchesUnivariateAtIntegers) {
    for (unsigned n = 2; n <= 9; ++n) {
        auto L = build_laguerre(n);
        auto closed = disc_closed_form(n);
        for (long t = -15; t <= 15; ++t) {
            mpz_class d = discriminant(L.poly.eval_t(t));
            EXPECT_EQ(d, closed.eval(mpz_class(t))) << n << " " << t;
            EXPECT_EQ(d == 0, t <= -2 && t >= -static_cast<long>(n)) << n << " " << t;
        }
    }
}

TEST(BranchLocus, Values) {
    for (unsigned n = 2; n <= 10; ++n) {
        auto b = branch_locus(n);
        std::vector<mpq_class> expected;
        for (long v = -2; v >= -static_cast<long>(n); --v) expected.emplace_back(v);
        EXPECT_EQ(b.finite, expected) << n;
        EXPECT_EQ(b.disc_degree_t, static_cast<long>(n * (n - 1) / 2)) << n;
        EXPECT_EQ(b.mu_power, static_cast<long>(n * (n - 1) / 2)) << n;
    }
}

TEST(FiberShape, OracleMultiplicityAtZero) {
    for (unsigned n = 2; n <= 11; ++n)
        for (long nu = -2; nu >= -static_cast<long>(n); --nu) {
            auto f = build_laguerre(n).poly.eval_t(nu);
            const auto m = static_cast<std::size_t>(-nu);
            for (std::size_t i = 0; i < m; ++i) ASSERT_EQ(f.coeff(i), 0) << n << " " << nu;
            ASSERT_NE(f.coeff(m), 0);
            std::vector<mpz_class> rest(f.coeffs().begin() + static_cast<long>(m), f.coeffs().end());
            IntPoly g(rest);
            if (g.degree() >= 2) ASSERT_NE(discriminant(g), 0) << n << " " << nu;

            auto s = fiber_shape(n, nu);
            EXPECT_EQ(s.repeated_root, 0);
            EXPECT_EQ(s.multiplicity, m);
            EXPECT_EQ(s.simple_roots, n - m);
        }
}

TEST(FiberShape, Examples) {
    EXPECT_EQ(fiber_shape(6, -6).multiplicity, 6u);
    EXPECT_EQ(fiber_shape(6, -2).simple_roots, 4u);
    EXPECT_EQ(fiber_shape(3, -3).multiplicity, 3u);
    EXPECT_THROW(fiber_shape(5, -1), DomainError);
    EXPECT_THROW(fiber_shape(5, -6), DomainError);
}

TEST(Smoothness, UpToTwelve) {
    for (unsigned n = 3; n <= 12; ++n) EXPECT_TRUE(affine_smoothness(n)) << n;
    EXPECT_THROW(affine_smoothness(2), DomainError);
}

TEST(QuadSubfield, DegreeAndGenus) {
    for (unsigned n = 2; n <= 14; ++n) {
        // exponent j - 1 of (t + j) is odd exactly for even j
        long even_j = 0;
        for (unsigned j = 2; j <= n; ++j) even_j += j % 2 == 0;
        auto q = quad_subfield(n);
        EXPECT_EQ(q.squarefree_degree, even_j) << n;
        EXPECT_EQ(q.genus, (static_cast<long>(n) - 2) / 4) << n;
    }
    EXPECT_EQ(quad_subfield(6).squarefree_degree, 3);
    EXPECT_EQ(quad_subfield(6).genus, 1);
    EXPECT_EQ(quad_subfield(10).genus, 2);
    EXPECT_EQ(quad_subfield(5).genus, 0);
}
