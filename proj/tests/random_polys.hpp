#pragma once

// Random integer polynomials whose irreducible factorization is known by construction.

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include <hurwitz/polyalg.hpp>

namespace randpoly {

using hurwitz::IntPoly;

/// Eisenstein at p: lc prime to p, other coefficients divisible by p, constant not by p^2.
inline IntPoly eisenstein(std::mt19937_64& rng, unsigned degree) {
    static const long primes[] = {2, 3, 5, 7};
    const long p = primes[rng() % 4];
    std::uniform_int_distribution<long> small(-4, 4);
    std::vector<mpz_class> c(degree + 1);
    long u;
    do u = small(rng); while (u == 0 || u % p == 0);
    c[0] = p * u;
    for (unsigned i = 1; i < degree; ++i) c[i] = p * small(rng);
    long lc;
    do lc = std::uniform_int_distribution<long>(1, 6)(rng); while (lc % p == 0);
    c[degree] = lc;
    return IntPoly(std::move(c)).primitive_part();
}

/// a x + b with a > 0 and gcd(a, b) = 1.
inline IntPoly linear(std::mt19937_64& rng) {
    long a, b;
    do {
        a = std::uniform_int_distribution<long>(1, 5)(rng);
        b = std::uniform_int_distribution<long>(-9, 9)(rng);
    } while (std::gcd(a, b) != 1);
    return IntPoly{b, a};
}

struct Product {
    IntPoly poly;
    std::vector<IntPoly> factors; // with repetition, primitive, positive lc
};

/// Product of irreducibles with total degree in [1, max_degree].
inline Product random_product(std::mt19937_64& rng, unsigned max_degree) {
    Product r{IntPoly::constant(1), {}};
    unsigned budget = std::uniform_int_distribution<unsigned>(1, max_degree)(rng);
    while (budget > 0) {
        unsigned d = std::uniform_int_distribution<unsigned>(1, std::min(budget, 6u))(rng);
        IntPoly f = d == 1 ? linear(rng) : eisenstein(rng, d);
        r.poly *= f;
        r.factors.push_back(f);
        budget -= d;
    }
    return r;
}

/// Sorted (coefficients) list for multiset comparison.
inline std::vector<std::vector<mpz_class>> canonical(const std::vector<IntPoly>& fs) {
    std::vector<std::vector<mpz_class>> out;
    for (const auto& f : fs) out.push_back(f.coeffs());
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::vector<mpz_class>> canonical(const hurwitz::FactorizationResult& r) {
    std::vector<IntPoly> fs;
    for (const auto& [g, m] : r.factors)
        for (unsigned i = 0; i < m; ++i) fs.push_back(g);
    return canonical(fs);
}

} // namespace randpoly
