#pragma once

/**
 * @file modular.hpp
 * @brief Constant-field descriptors Q_{p,n}, orders of PGL2/PSL2 over Z/n,
 *        and the genus of X_0(n).
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace hurwitz {

struct FieldDescriptor {
    std::string label;
    unsigned degree = 1; // over Q
    std::uint64_t conductor = 1;

    bool operator==(const FieldDescriptor&) const = default;
};

namespace detail {

inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> f;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

inline bool prime_u64(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

inline std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

} // namespace detail

inline FieldDescriptor qpn(std::uint64_t p, std::uint64_t n) {
    if (!detail::prime_u64(p)) throw DomainError("qpn: p must be prime");
    if (n < 2) throw DomainError("qpn: need n > 1");
    if (p > 2 && n % p == 0) return {"quadratic, conductor " + std::to_string(p), 2, p};
    if (p == 2 && n % 8 == 0) return {"biquadratic, conductor 8", 4, 8};
    if (p == 2 && n % 4 == 0) return {"quadratic, conductor 4", 2, 4};
    return {"Q", 1, 1};
}

/// [K~_n : K] for K linearly disjoint from it: 2^{#odd p | n} * (4 if 8|n, 2 if 4||n, else 1).
inline std::uint64_t tilde_degree(std::uint64_t n) {
    if (n < 2) throw DomainError("tilde_degree: need n > 1");
    std::uint64_t d = 1;
    for (auto [p, e] : detail::factorize(n)) {
        if (p > 2) d *= 2;
        else if (e >= 3) d *= 4;
        else if (e == 2) d *= 2;
    }
    return d;
}

/// |SL2(Z/n)| = n^3 prod (1 - p^-2); also |PGL2(Z/n)|.
inline std::uint64_t sl2_order(std::uint64_t n) {
    if (n < 2) throw DomainError("sl2_order: need n > 1");
    std::uint64_t r = n * n * n;
    for (auto [p, e] : detail::factorize(n)) r = r / (p * p) * (p * p - 1);
    return r;
}

inline std::uint64_t pgl2_order(std::uint64_t n) { return sl2_order(n); }

/// Image of SL2(Z/n) in PGL2(Z/n): SL2 modulo the scalars lambda with lambda^2 = 1.
inline std::uint64_t psl2_order(std::uint64_t n) {
    std::uint64_t roots = 0;
    for (std::uint64_t l = 0; l < n; ++l)
        if ((l * l) % n == 1 % n) ++roots;
    return sl2_order(n) / roots;
}

struct X0Data {
    std::uint64_t n = 0;
    std::uint64_t psi = 0; // index of Gamma_0(n) in SL2(Z)
    std::uint64_t nu2 = 0;
    std::uint64_t nu3 = 0;
    std::uint64_t cusps = 0;
    long long genus = 0;
};

inline X0Data x0_data(std::uint64_t n) {
    if (n < 1) throw DomainError("genus_X0: need n >= 1");
    X0Data x;
    x.n = n;
    const auto f = detail::factorize(n);
    x.psi = n;
    for (auto [p, e] : f) x.psi = x.psi / p * (p + 1);
    x.nu2 = n % 4 == 0 ? 0 : 1;
    x.nu3 = n % 9 == 0 ? 0 : 1;
    for (auto [p, e] : f) {
        // 1 + (-1/p) and 1 + (-3/p)
        if (x.nu2) x.nu2 *= p == 2 ? 1 : (p % 4 == 1 ? 2 : 0);
        if (x.nu3) x.nu3 *= p == 3 ? 1 : (p % 3 == 1 ? 2 : 0);
    }
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0) x.cusps += detail::euler_phi(detail::gcd_u64(d, n / d));
    long long twelve_g = 12 + static_cast<long long>(x.psi) - 3 * static_cast<long long>(x.nu2) -
                         4 * static_cast<long long>(x.nu3) - 6 * static_cast<long long>(x.cusps);
    if (twelve_g % 12 != 0) throw ViolatedIdentity("genus_X0: non-integral genus at n=" + std::to_string(n));
    x.genus = twelve_g / 12;
    return x;
}

/// g = 1 + psi/12 - nu2/4 - nu3/3 - cusps/2
inline long long genus_X0(std::uint64_t n) { return x0_data(n).genus; }

struct CumminsPauli {
    std::uint64_t general = 53;
    std::uint64_t prime = 23;
    std::string citation = "Cummins-Pauli tables of congruence subgroups of genus <= 1 (cited, not recomputed)";
};

/// Beyond these levels every proper subgroup of PSL2(Z/n) has genus >= 2.
inline CumminsPauli cummins_pauli_thresholds() { return {}; }

} // namespace hurwitz
