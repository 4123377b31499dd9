#pragma once

/**
 * @file simplecover.hpp
 * @brief Branch counts, minimal displacement on j-subsets and the
 *        feasibility inequality for simple covers.
 */

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "permgroup.hpp"
#include "rhgenus.hpp"

namespace hurwitz {

struct CoverClass {
    std::uint64_t n = 2;
    std::uint64_t g = 0;
};

/// 2g + 2n - 2
inline std::uint64_t branch_count(std::uint64_t g, std::uint64_t n) {
    if (n < 2) throw DomainError("branch_count: need n >= 2");
    return 2 * g + 2 * n - 2;
}

inline std::uint64_t mu_closed_form(std::size_t n, std::size_t j) {
    return 2 * binomial(static_cast<unsigned>(n - 2), static_cast<unsigned>(j - 1));
}

/// Points moved by a transposition on the j-subsets, counted directly.
inline std::uint64_t mu_bruteforce(std::size_t n, std::size_t j, std::size_t cap = kDefaultElementCap) {
    JSubsetAction act(n, j, cap);
    auto t = act.induced(Permutation::cycle(n, {1, 2}));
    std::uint64_t moved = 0;
    for (std::size_t i = 0; i < act.num_points(); ++i)
        if (t(static_cast<std::uint32_t>(i)) != i) ++moved;
    return moved;
}

/// mu = 2 C(n-2, j-1), checked against the induced action.
inline std::uint64_t mu_jsubsets(std::size_t n, std::size_t j, std::size_t cap = kDefaultElementCap) {
    if (j < 1 || 2 * j > n) throw DomainError("mu_jsubsets: need 1 <= j <= n/2");
    auto closed = mu_closed_form(n, j);
    auto brute = mu_bruteforce(n, j, cap);
    if (closed != brute)
        throw ViolatedIdentity("mu_jsubsets: closed form " + std::to_string(closed) + " != count " +
                               std::to_string(brute));
    return closed;
}

struct FeasibleTriple {
    std::uint64_t n = 0, j = 0, g = 0;
    auto operator<=>(const FeasibleTriple&) const = default;
};

/// j(n-j) <= n(n-1)/(n+g-1), tested in integers.
inline bool feasible(std::uint64_t n, std::uint64_t j, std::uint64_t g) {
    return j * (n - j) * (n + g - 1) <= n * (n - 1);
}

inline std::vector<FeasibleTriple> feasibility_scan(std::uint64_t n_max, std::uint64_t g_max) {
    if (n_max < 5) throw DomainError("feasibility_scan: need n_max >= 5");
    std::vector<FeasibleTriple> out;
    for (std::uint64_t n = 5; n <= n_max; ++n)
        for (std::uint64_t j = 1; 2 * j <= n; ++j)
            for (std::uint64_t g = 0; g <= g_max; ++g)
                if (feasible(n, j, g)) out.push_back({n, j, g});
    return out;
}

struct MullerReport {
    std::size_t n = 0;
    std::vector<Permutation> transpositions;
    bool product_is_identity = false;
    bool generates_symmetric = false;
    long long genus = -1;
};

/// (1 2), (2 3), ..., (n-1 n), then the same list reversed.
inline MullerReport muller_example(std::size_t n) {
    if (n < 3 || n > 16) throw DomainError("muller_example: need 3 <= n <= 16");
    MullerReport r;
    r.n = n;
    for (std::uint32_t i = 1; i < n; ++i) r.transpositions.push_back(Permutation::cycle(n, {i, i + 1}));
    for (std::uint32_t i = static_cast<std::uint32_t>(n) - 1; i >= 1; --i)
        r.transpositions.push_back(Permutation::cycle(n, {i, i + 1}));
    auto prod = Permutation::identity(n);
    for (const auto& t : r.transpositions) prod = prod * t;
    r.product_is_identity = prod.is_identity();
    GroupSpec g(n, r.transpositions);
    if (n <= 10) {
        r.generates_symmetric = g.order() == factorial(static_cast<unsigned>(n));
    } else {
        // a transitive group containing a transposition is S_n
        r.generates_symmetric = g.is_transitive();
    }
    std::vector<std::uint64_t> deltas(r.transpositions.size(), 1);
    r.genus = exact_genus_from_deltas(n, deltas);
    return r;
}

/// Parts of the conclusion that apply: "a" always, "b" for g >= 2, "c" for g >= 2 and n >= 7.
inline std::set<std::string> theorem_decision(std::uint64_t g, std::uint64_t n) {
    if (n < 5) throw HypothesisUnmet("theorem_decision: need n >= 5");
    if (g == 0 && n < 6) throw HypothesisUnmet("theorem_decision: genus 0 needs n >= 6");
    std::set<std::string> out{"a"};
    if (g >= 2) out.insert("b");
    if (g >= 2 && n >= 7) out.insert("c");
    return out;
}

/// Bound for a transitive subgroup without transpositions: every branch point has c1 = 0, e = 2.
inline mpq_class transposition_bound(std::uint64_t g, std::uint64_t n, std::uint64_t index = 2) {
    std::vector<BoundTerm> v(branch_count(g, n), BoundTerm{2, 0});
    return genus_lower_bound(index, v);
}

} // namespace hurwitz
