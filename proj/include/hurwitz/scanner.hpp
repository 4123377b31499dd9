#pragma once

/**
 * @file scanner.hpp
 * @brief Specializations L_n^{(alpha)}(x) at rational alpha: factorization,
 *        discriminant class and Frobenius-based Galois certification.
 */

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "laguerre.hpp"
#include "parallel.hpp"
#include "permgroup.hpp"
#include "polyalg.hpp"

namespace hurwitz {

inline constexpr std::size_t kDefaultPrimeBudget = 60;

enum class GaloisVerdict { symmetric, alternating, contains_alternating, reducible, undetermined };

inline std::string to_string(GaloisVerdict g) {
    switch (g) {
    case GaloisVerdict::symmetric: return "S_n certified";
    case GaloisVerdict::alternating: return "A_n certified";
    case GaloisVerdict::contains_alternating: return "contains-A_n certified";
    case GaloisVerdict::reducible: return "reducible";
    case GaloisVerdict::undetermined: return "undetermined";
    }
    return "?";
}

struct FrobeniusSample {
    std::uint64_t prime = 0;
    CycleType cycle_type;
    std::string role; // n-cycle, (n-1)-cycle, q-cycle power, transposition power
};

struct SpecializationReport {
    unsigned n = 0;
    mpq_class alpha;
    IntPoly cleared;
    bool degenerate = false;
    std::vector<std::uint32_t> factor_degrees; // descending, with multiplicity
    bool disc_square = false;
    GaloisVerdict galois = GaloisVerdict::undetermined;
    std::vector<FrobeniusSample> evidence;
    std::size_t budget_used = 0;
};

/// n! L_n^{(alpha)}(x) times the least power of den(alpha) making it integral, divided by its content.
inline IntPoly specialize(unsigned n, const mpq_class& alpha) {
    mpq_class a(alpha);
    a.canonicalize();
    auto f = build_laguerre(n).poly.eval_t_cleared(a);
    auto c = f.content();
    if (c > 1) {
        std::vector<mpz_class> q;
        for (const auto& v : f.coeffs()) q.push_back(v / c);
        f = IntPoly(std::move(q));
    }
    return f;
}

namespace detail {

/// A prime q with n/2 < q < n-2 occurring once in ct and dividing no other part: a power is a q-cycle.
inline std::optional<std::uint32_t> q_cycle_power(const CycleType& ct, std::size_t n) {
    for (auto q : ct.parts) {
        if (2 * q <= n || q + 2 >= n || !is_prime(q)) continue;
        bool clean = true, seen = false;
        for (auto p : ct.parts) {
            if (p % q != 0) continue;
            if (p != q || seen) clean = false;
            seen = true;
        }
        if (clean) return q;
    }
    return std::nullopt;
}

/// Exactly one even part, equal to 2: the odd-order power is a transposition.
inline bool transposition_power(const CycleType& ct) {
    std::size_t twos = 0, evens = 0;
    for (auto p : ct.parts) {
        if (p % 2 == 0) ++evens;
        if (p == 2) ++twos;
    }
    return evens == 1 && twos == 1;
}

} // namespace detail

/**
 * Irreducible with an n- or (n-1)-cycle and a power that is a q-cycle
 * (q prime, n/2 < q < n-2): the group is primitive and contains A_n by Jordan.
 * An n-cycle, an (n-1)-cycle and a transposition power give S_n directly.
 */
inline SpecializationReport analyze(unsigned n, const mpq_class& alpha,
                                    std::size_t prime_budget = kDefaultPrimeBudget) {
    if (prime_budget < 1) throw DomainError("analyze: prime_budget must be >= 1");
    if (n < 1 || n > kFactorDegreeCap) throw DomainError("analyze: n out of range");
    SpecializationReport r;
    r.n = n;
    r.alpha = alpha;
    r.alpha.canonicalize();
    r.cleared = specialize(n, r.alpha);
    const mpq_class disc = n >= 2 ? disc_closed_form(n).eval(r.alpha) : mpq_class(1);
    r.degenerate = disc == 0 || r.cleared.degree() != static_cast<long>(n);
    r.disc_square = is_rational_square(disc);
    const auto fac = factor_over_Q(r.cleared);
    r.factor_degrees = fac.degrees();
    if (!fac.irreducible()) {
        r.galois = GaloisVerdict::reducible;
        return r;
    }
    if (n <= 3) {
        // S_1, S_2, and for cubics the discriminant decides
        r.galois = (n == 3 && r.disc_square) ? GaloisVerdict::alternating : GaloisVerdict::symmetric;
        return r;
    }
    bool has_n = false, has_n1 = false, has_q = false, has_t = false;
    std::uint64_t p = 1;
    std::size_t tried = 0;
    while (r.budget_used < prime_budget && tried < 20 * prime_budget) {
        p = next_prime(p);
        ++tried;
        if (!good_reduction(r.cleared, p)) continue;
        ++r.budget_used;
        const auto ct = dedekind_cycle_type(r.cleared, p);
        auto note = [&](bool& flag, const char* role) {
            if (flag) return;
            flag = true;
            r.evidence.push_back({p, ct, role});
        };
        if (ct.is_single_cycle(static_cast<std::uint32_t>(n))) note(has_n, "n-cycle");
        if (ct.is_single_cycle(static_cast<std::uint32_t>(n - 1))) note(has_n1, "(n-1)-cycle");
        if (detail::q_cycle_power(ct, n)) note(has_q, "q-cycle power");
        if (detail::transposition_power(ct)) note(has_t, "transposition power");
        const bool contains_an = (has_n || has_n1) && has_q;
        if (has_n && has_n1 && has_t) {
            r.galois = GaloisVerdict::symmetric;
            break;
        }
        if (contains_an) {
            r.galois = r.disc_square ? GaloisVerdict::alternating : GaloisVerdict::symmetric;
            break;
        }
    }
    return r;
}

struct ScanCounts {
    std::size_t s_n = 0, a_n = 0, contains_an = 0, reducible = 0, undetermined = 0, degenerate = 0;
};

struct ScanResult {
    unsigned n = 0;
    long height_bound = 0;
    std::size_t prime_budget = 0;
    std::size_t total = 0;
    ScanCounts counts;
    std::vector<SpecializationReport> exceptions; // degenerate, reducible or not certified S_n
};

/// alpha = a/b with b = 1..H, a = -H..H, gcd(a,b) = 1, in that order.
inline std::vector<mpq_class> height_enumeration(long height_bound) {
    std::vector<mpq_class> out;
    for (long b = 1; b <= height_bound; ++b)
        for (long a = -height_bound; a <= height_bound; ++a)
            if (std::gcd(a, b) == 1) out.emplace_back(a, b);
    return out;
}

inline ScanResult scan(unsigned n, long height_bound, std::size_t prime_budget = kDefaultPrimeBudget,
                       std::size_t jobs = 1) {
    if (height_bound < 1) throw DomainError("scan: height_bound must be >= 1");
    ScanResult s;
    s.n = n;
    s.height_bound = height_bound;
    s.prime_budget = prime_budget;
    auto reports = parallel_map(height_enumeration(height_bound), jobs,
                                [&](const mpq_class& alpha) { return analyze(n, alpha, prime_budget); });
    for (auto& r : reports) {
        ++s.total;
        bool exceptional = true;
        if (r.degenerate) {
            ++s.counts.degenerate;
        } else {
            switch (r.galois) {
            case GaloisVerdict::symmetric: ++s.counts.s_n; exceptional = false; break;
            case GaloisVerdict::alternating: ++s.counts.a_n; break;
            case GaloisVerdict::contains_alternating: ++s.counts.contains_an; break;
            case GaloisVerdict::reducible: ++s.counts.reducible; break;
            case GaloisVerdict::undetermined: ++s.counts.undetermined; break;
            }
        }
        if (exceptional) s.exceptions.push_back(std::move(r));
    }
    return s;
}

struct JFactorCensus {
    std::map<std::uint32_t, std::size_t> counts;                       // with multiplicity
    std::optional<std::map<std::uint32_t, std::size_t>> squarefree_counts; // degenerate alpha only
};

inline JFactorCensus j_factor_census(unsigned n, const mpq_class& alpha) {
    JFactorCensus c;
    const auto f = specialize(n, alpha);
    for (auto d : factor_over_Q(f).degrees()) ++c.counts[d];
    const mpq_class disc = n >= 2 ? disc_closed_form(n).eval(alpha) : mpq_class(1);
    if (disc == 0) {
        std::map<std::uint32_t, std::size_t> sq;
        for (auto d : factor_over_Q(squarefree_part(f)).degrees()) ++sq[d];
        c.squarefree_counts = std::move(sq);
    }
    return c;
}

} // namespace hurwitz
