#pragma once

/**
 * @file rhgenus.hpp
 * @brief Riemann-Hurwitz genus bounds and exact genus from ramification data.
 */

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "permgroup.hpp"

namespace hurwitz {

inline std::uint64_t least_prime_divisor(std::uint64_t e) {
    if (e <= 1) throw DomainError("least_prime_divisor: need e > 1");
    for (std::uint64_t p = 2; p * p <= e; ++p)
        if (e % p == 0) return p;
    return e;
}

/// A branch point nu of the Galois cover; label empty means infinity.
struct BranchPoint {
    std::optional<mpq_class> label;
    std::optional<CycleType> inertia_cycle_type;
    std::uint64_t e = 1;

    static BranchPoint finite(const mpq_class& nu, const CycleType& ct) {
        return BranchPoint{nu, ct, ct.order()};
    }
    std::string label_string() const { return label ? label->get_str() : std::string("inf"); }
};

/// One element of the subset V used in the lower bound.
struct BoundTerm {
    std::uint64_t e = 2;
    std::uint64_t c1 = 0;
};

/// 1 - 1/d(e)
inline mpq_class tame_weight(std::uint64_t e) {
    mpq_class w(1);
    w -= mpq_class(1, static_cast<unsigned long>(least_prime_divisor(e)));
    w.canonicalize();
    return w;
}

/// 1 + (index/2)(-2 + sum(1 - 1/d(e))) - (1/2) sum c1 (1 - 1/d(e))
inline mpq_class genus_lower_bound(std::uint64_t index, const std::vector<BoundTerm>& v) {
    mpq_class s = -2, c = 0;
    for (const auto& t : v) {
        auto w = tame_weight(t.e);
        s += w;
        c += w * mpq_class(static_cast<unsigned long>(t.c1));
    }
    mpq_class g = 1 + mpq_class(static_cast<unsigned long>(index), 2) * s - c / 2;
    g.canonicalize();
    return g;
}

struct GenusBoundRow {
    long long nu = 0;
    std::uint64_t e = 0;
    std::uint64_t d = 0;
    std::uint64_t c1 = 0;
};

struct GenusBoundReport {
    std::string subgroup;
    std::uint64_t index = 0;
    std::vector<GenusBoundRow> rows;
    mpq_class bound;
    bool verdict = false; // bound > 1

    mpq_class recompute() const {
        std::vector<BoundTerm> v;
        for (const auto& r : rows) v.push_back({r.e, r.c1});
        return genus_lower_bound(index, v);
    }
};

inline GenusBoundReport make_report(std::string name, std::uint64_t index, std::vector<GenusBoundRow> rows) {
    GenusBoundReport r{std::move(name), index, std::move(rows), 0, false};
    for (auto& row : r.rows) row.d = least_prime_divisor(row.e);
    r.bound = r.recompute();
    r.verdict = r.bound > 1;
    return r;
}

/// g = 1 - index + (1/2) sum Delta, over all branch points including infinity.
inline long long exact_genus(std::uint64_t index, const std::vector<RamificationProfile>& profiles) {
    std::uint64_t total = 0;
    for (const auto& p : profiles) {
        if (p.index != index)
            throw DomainError("exact_genus: profile degree " + std::to_string(p.index) + " != index " +
                              std::to_string(index));
        total += p.delta;
    }
    if (total % 2 != 0) throw ParityError("exact_genus: sum of Delta is odd (" + std::to_string(total) + ")");
    long long g = 1 - static_cast<long long>(index) + static_cast<long long>(total / 2);
    if (g < 0) throw NegativeGenus("exact_genus: genus would be " + std::to_string(g));
    return g;
}

/// Same, from the Delta values only.
inline long long exact_genus_from_deltas(std::uint64_t index, const std::vector<std::uint64_t>& deltas) {
    std::uint64_t total = 0;
    for (auto d : deltas) total += d;
    if (total % 2 != 0) throw ParityError("exact_genus: sum of Delta is odd (" + std::to_string(total) + ")");
    long long g = 1 - static_cast<long long>(index) + static_cast<long long>(total / 2);
    if (g < 0) throw NegativeGenus("exact_genus: genus would be " + std::to_string(g));
    return g;
}

/// -2 + sum_{i<k} (1 - 1/d(n-i)), evaluated exactly at n.
inline mpq_class consecutive_integer_bound(unsigned k, std::uint64_t n) {
    if (n < k + 2) throw DomainError("consecutive_integer_bound: need n >= k+2");
    mpq_class s = -2;
    for (unsigned i = 0; i < k; ++i) s += tame_weight(n - i);
    return s;
}

/// Worst case over all n of the sum above: 7/15 for k=4, 53/30 for k=6.
inline mpq_class consecutive_integer_floor(unsigned k) {
    if (k == 4) return mpq_class(7, 15);
    if (k == 6) return mpq_class(53, 30);
    throw DomainError("consecutive_integer_floor: k must be 4 or 6");
}

/// Bound for the degree-n cover of the Laguerre curve, V = {-n..5-n}, c1(nu) = n + nu.
inline mpq_class laguerre_generic_bound(std::uint64_t n) {
    if (n < 7) throw DomainError("laguerre_generic_bound: need n >= 7");
    std::vector<BoundTerm> v;
    for (std::uint64_t i = 0; i <= 5; ++i) v.push_back({n - i, i});
    return genus_lower_bound(n, v);
}

/// The cruder closed form 1 + 53n/60 - (1/2)(1 - 1/n)*15.
inline mpq_class laguerre_crude_bound(std::uint64_t n) {
    mpq_class b = 1 + mpq_class(53 * static_cast<long>(n), 60) -
                  mpq_class(15, 2) * (1 - mpq_class(1, static_cast<unsigned long>(n)));
    b.canonicalize();
    return b;
}

/// floor((n+1)/2)!, the least index of a primitive subgroup other than A_n.
inline std::uint64_t bochert_index(std::uint64_t n) {
    if (n < 5) throw DomainError("bochert_index: need n >= 5");
    return factorial(static_cast<unsigned>((n + 1) / 2));
}

/// 1 + (7/30) floor((n+1)/2)! - (1 - 1/n)(10n - 27)/2
inline mpq_class bochert_bound(std::uint64_t n) {
    mpz_class idx = 1;
    for (std::uint64_t i = 2; i <= (n + 1) / 2; ++i) idx *= static_cast<unsigned long>(i);
    mpq_class b = 1 + mpq_class(idx * 7, 30) -
                  (1 - mpq_class(1, static_cast<unsigned long>(n))) *
                      mpq_class(10 * static_cast<long>(n) - 27, 2);
    b.canonicalize();
    return b;
}

/// Stirling form of the previous bound. Not rational, so evaluated in long double.
inline long double stirling_bound(std::uint64_t n) {
    const long double nn = static_cast<long double>(n);
    const long double pi = std::numbers::pi_v<long double>, e = std::numbers::e_v<long double>;
    return 1 + 7 * std::sqrt(pi * nn) / 30 * std::pow(nn / (2 * e), nn / 2) - (1 - 1 / nn) * (10 * nn - 27) / 2;
}

/// String form used in all serialized output: "p/q", or "p" when integral.
inline std::string rational_string(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return c.get_str();
}

} // namespace hurwitz
