#pragma once

/**
 * @file catalog.hpp
 * @brief Explicit generators for the maximal subgroups of S_n and A_n
 *        (6 <= n <= 9) that the genus certification runs over.
 *
 * Every group is validated by enumeration against its expected order and
 * family, so a wrong generator set fails loudly. Maximality itself is not
 * checked; it is taken from the standard classification.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permgroup.hpp"

namespace hurwitz {

enum class Family { intransitive, imprimitive, primitive, alternating_maximal };

inline std::string to_string(Family f) {
    switch (f) {
    case Family::intransitive: return "intransitive";
    case Family::imprimitive: return "imprimitive";
    case Family::primitive: return "primitive";
    case Family::alternating_maximal: return "alternating-maximal";
    }
    return "?";
}

struct CatalogEntry {
    std::string name;
    std::size_t degree = 0;
    Family family = Family::intransitive;
    std::string case_label;
    std::optional<GroupSpec> group;      // empty for index-only rows
    std::uint64_t expected_order = 0;    // 0 for index-only rows
    std::uint64_t index_lower_bound = 0; // [S_n : E] lower bound for index-only rows

    bool is_generic() const { return !group.has_value(); }

    std::uint64_t index() const {
        if (!group) return index_lower_bound;
        return factorial(static_cast<unsigned>(degree)) / expected_order;
    }
};

/// Order, A_n containment and family flags; throws DomainError on mismatch.
inline void validate(const CatalogEntry& e) {
    if (!e.group) return;
    const auto& g = *e.group;
    auto fail = [&](const std::string& what) {
        throw DomainError("catalog entry " + e.name + ": " + what);
    };
    if (g.degree() != e.degree) fail("degree mismatch");
    if (g.order() != e.expected_order)
        fail("order " + std::to_string(g.order()) + " != expected " + std::to_string(e.expected_order));
    switch (e.family) {
    case Family::intransitive:
        if (g.is_transitive()) fail("expected intransitive");
        break;
    case Family::imprimitive:
        if (!g.is_transitive() || g.is_primitive()) fail("expected transitive imprimitive");
        break;
    case Family::primitive:
        if (!g.is_primitive()) fail("expected primitive");
        break;
    case Family::alternating_maximal:
        if (!g.all_even()) fail("expected a subgroup of A_n");
        break;
    }
}

namespace detail {

inline std::vector<Permutation> symmetric_on(std::size_t n, std::uint32_t first, std::uint32_t count) {
    // generators of Sym({first, ..., first+count-1}), 1-based
    std::vector<Permutation> gens;
    if (count < 2) return gens;
    gens.push_back(Permutation::cycle(n, {first, first + 1}));
    if (count > 2) {
        std::vector<std::uint32_t> c(count);
        for (std::uint32_t i = 0; i < count; ++i) c[i] = first + i;
        gens.push_back(Permutation::cycle(n, c));
    }
    return gens;
}

inline CatalogEntry make(std::string name, std::size_t n, Family fam, std::string label, GroupSpec g,
                         std::uint64_t expected) {
    CatalogEntry e{std::move(name), n, fam, std::move(label), std::move(g), expected, 0};
    validate(e);
    return e;
}

inline std::uint32_t mod(long long a, long long q) { return static_cast<std::uint32_t>(((a % q) + q) % q); }

inline std::uint64_t power_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

/// Mobius map z -> (a z + b)/(c z + d) on P^1(F_q); point q is infinity.
inline Permutation mobius(std::uint32_t q, long long a, long long b, long long c, long long d) {
    std::vector<std::uint32_t> im(q + 1);
    auto inv = [q](std::uint32_t x) { return static_cast<std::uint32_t>(power_mod(x, q - 2, q)); };
    for (std::uint32_t z = 0; z <= q; ++z) {
        if (z == q) {
            im[z] = mod(c, q) == 0 ? q : mod(a * inv(mod(c, q)), q);
            continue;
        }
        auto num = mod(a * z + b, q), den = mod(c * z + d, q);
        im[z] = den == 0 ? q : mod(static_cast<long long>(num) * inv(den), q);
    }
    return Permutation(std::move(im));
}

/// Linear map of F_2^3 given by its three columns (as bitmasks), as a map on vectors 0..7.
inline std::uint32_t apply_f2(const std::array<std::uint32_t, 3>& cols, std::uint32_t v) {
    std::uint32_t w = 0;
    for (int i = 0; i < 3; ++i)
        if (v >> i & 1) w ^= cols[i];
    return w;
}

inline std::vector<std::array<std::uint32_t, 3>> gl3f2_transvections() {
    // I + E_ij for i != j
    std::vector<std::array<std::uint32_t, 3>> out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            std::array<std::uint32_t, 3> cols{1u, 2u, 4u};
            cols[j] ^= 1u << i;
            out.push_back(cols);
        }
    return out;
}

} // namespace detail

/// S_j x S_{n-j} on {1..j} and {j+1..n}.
inline CatalogEntry intransitive(std::size_t n, std::size_t j) {
    if (j < 1 || j >= n) throw DomainError("intransitive: need 1 <= j < n");
    auto gens = detail::symmetric_on(n, 1, static_cast<std::uint32_t>(j));
    auto rest = detail::symmetric_on(n, static_cast<std::uint32_t>(j + 1), static_cast<std::uint32_t>(n - j));
    gens.insert(gens.end(), rest.begin(), rest.end());
    auto name = "S" + std::to_string(j) + "xS" + std::to_string(n - j);
    auto order = factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(n - j));
    return detail::make(name, n, Family::intransitive, "max:intransitive", GroupSpec(n, gens, name), order);
}

/// S_j wr S_{n/j}, the stabilizer of the partition into consecutive blocks of size j.
inline CatalogEntry imprimitive(std::size_t n, std::size_t j) {
    if (j <= 1 || j >= n || n % j != 0)
        throw NotADivisor("imprimitive: j=" + std::to_string(j) + " is not a proper divisor of n=" +
                          std::to_string(n));
    const std::size_t blocks = n / j;
    auto gens = detail::symmetric_on(n, 1, static_cast<std::uint32_t>(j));
    auto block_perm = [&](const std::vector<std::size_t>& target) {
        std::vector<std::uint32_t> im(n);
        for (std::size_t b = 0; b < blocks; ++b)
            for (std::size_t k = 0; k < j; ++k) im[b * j + k] = static_cast<std::uint32_t>(target[b] * j + k);
        return Permutation(im);
    };
    std::vector<std::size_t> swap01(blocks), shift(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        swap01[b] = b;
        shift[b] = (b + 1) % blocks;
    }
    std::swap(swap01[0], swap01[1]);
    gens.push_back(block_perm(swap01));
    if (blocks > 2) gens.push_back(block_perm(shift));
    auto name = "S" + std::to_string(j) + "wrS" + std::to_string(blocks);
    std::uint64_t order = factorial(static_cast<unsigned>(blocks));
    for (std::size_t b = 0; b < blocks; ++b) order *= factorial(static_cast<unsigned>(j));
    return detail::make(name, n, Family::imprimitive, "max:imprimitive", GroupSpec(n, gens, name), order);
}

/**
 * Named primitive groups:
 *   "PSL2(7)@7"  GL_3(F_2) on the 7 nonzero vectors of F_2^3
 *   "PGL2(7)@8"  Mobius action on P^1(F_7)
 *   "AGL3(2)@8"  affine group of F_2^3 (2^3:PSL_2(7))
 *   "PGL2(5)@6"  Mobius action on P^1(F_5), a transitive copy of S_5
 *   "PSL2(5)@6"  its even part, a transitive copy of A_5 inside A_6
 */
inline CatalogEntry primitive_named(const std::string& name) {
    using detail::apply_f2;
    if (name == "PSL2(7)@7") {
        std::vector<Permutation> gens;
        for (const auto& m : detail::gl3f2_transvections()) {
            std::vector<std::uint32_t> im(7);
            for (std::uint32_t v = 1; v <= 7; ++v) im[v - 1] = apply_f2(m, v) - 1;
            gens.emplace_back(im);
        }
        return detail::make(name, 7, Family::primitive, "max:primitive", GroupSpec(7, gens, name), 168);
    }
    if (name == "AGL3(2)@8") {
        std::vector<Permutation> gens;
        for (const auto& m : detail::gl3f2_transvections()) {
            std::vector<std::uint32_t> im(8);
            for (std::uint32_t v = 0; v < 8; ++v) im[v] = apply_f2(m, v);
            gens.emplace_back(im);
        }
        std::vector<std::uint32_t> translate(8);
        for (std::uint32_t v = 0; v < 8; ++v) translate[v] = v ^ 1u;
        gens.emplace_back(translate);
        return detail::make(name, 8, Family::primitive, "max:primitive", GroupSpec(8, gens, name), 1344);
    }
    if (name == "PGL2(7)@8") {
        // 3 generates F_7^*
        std::vector<Permutation> gens{detail::mobius(7, 1, 1, 0, 1), detail::mobius(7, 3, 0, 0, 1),
                                      detail::mobius(7, 0, -1, 1, 0)};
        return detail::make(name, 8, Family::primitive, "max:primitive", GroupSpec(8, gens, name), 336);
    }
    if (name == "PGL2(5)@6") {
        // 2 generates F_5^*
        std::vector<Permutation> gens{detail::mobius(5, 1, 1, 0, 1), detail::mobius(5, 2, 0, 0, 1),
                                      detail::mobius(5, 0, -1, 1, 0)};
        return detail::make(name, 6, Family::primitive, "max:primitive", GroupSpec(6, gens, name), 120);
    }
    if (name == "PSL2(5)@6") {
        std::vector<Permutation> gens{detail::mobius(5, 1, 1, 0, 1), detail::mobius(5, 4, 0, 0, 1),
                                      detail::mobius(5, 0, -1, 1, 0)};
        return detail::make(name, 6, Family::primitive, "max:primitive", GroupSpec(6, gens, name), 60);
    }
    throw UnknownName("primitive_named: unknown group '" + name + "'");
}

/// Even part of S_a x S_b, on {1..a} and {a+1..a+b}.
inline CatalogEntry even_intransitive(std::size_t a, std::size_t b, std::string name, std::string label) {
    auto base = intransitive(a + b, a);
    auto g = even_part(*base.group, name);
    auto order = factorial(static_cast<unsigned>(a)) * factorial(static_cast<unsigned>(b)) / 2;
    return detail::make(name, a + b, Family::alternating_maximal, std::move(label), g, order);
}

/// A_{n-1}, the point stabilizer of n in A_n.
inline CatalogEntry alternating_point_stabilizer(std::size_t n, std::string label) {
    std::vector<Permutation> gens;
    for (std::uint32_t k = 3; k + 1 <= n; ++k) gens.push_back(Permutation::cycle(n, {1, 2, k}));
    auto name = "A" + std::to_string(n - 1);
    return detail::make(name, n, Family::alternating_maximal, std::move(label), GroupSpec(n, gens, name),
                        factorial(static_cast<unsigned>(n - 1)) / 2);
}

/**
 * (3x3):4 inside A_6: the normalizer in A_6 of the Sylow 3-subgroup
 * <(1 2 3), (4 5 6)>, found by searching all of A_6.
 */
inline CatalogEntry sylow3_normalizer_a6() {
    const std::size_t n = 6;
    GroupSpec p(n, {Permutation::cycle(n, {1, 2, 3}), Permutation::cycle(n, {4, 5, 6})});
    const auto a6 = GroupSpec::alternating(n);
    std::vector<Permutation> normalizer;
    for (const auto& s : a6.elements()) {
        bool normalizes = true;
        for (const auto& g : p.generators())
            if (!p.contains(conjugate(g, s))) {
                normalizes = false;
                break;
            }
        if (normalizes) normalizer.push_back(s);
    }
    auto g = subgroup_from_elements(n, normalizer, "(3x3):4");
    return detail::make("(3x3):4", n, Family::alternating_maximal, "alt:n=6", g, 36);
}

/// Maximal subgroups of S_n other than A_n, up to conjugacy, for 6 <= n <= 9.
inline std::vector<CatalogEntry> symmetric_maximals(std::size_t n) {
    if (n < 6 || n > 9) throw DomainError("symmetric_maximals: n must be in [6,9]");
    std::vector<CatalogEntry> out;
    for (std::size_t j = 1; 2 * j < n; ++j) out.push_back(intransitive(n, j));
    for (std::size_t j = 2; j < n; ++j)
        if (n % j == 0) out.push_back(imprimitive(n, j));
    switch (n) {
    case 6: out.push_back(primitive_named("PGL2(5)@6")); break;
    case 7: out.push_back(primitive_named("PSL2(7)@7")); break;
    case 8:
        out.push_back(primitive_named("PGL2(7)@8"));
        out.push_back(primitive_named("AGL3(2)@8"));
        break;
    case 9: {
        // Primitive groups of degree 9 are not constructed; only the
        // minimal-index bound floor((n+1)/2)! is used.
        CatalogEntry e;
        e.name = "primitive(index>=120)";
        e.degree = 9;
        e.family = Family::primitive;
        e.case_label = "max:primitive-generic";
        e.index_lower_bound = factorial(5);
        out.push_back(std::move(e));
        break;
    }
    }
    return out;
}

/// Maximal subgroups of A_n (6 <= n <= 9), up to isomorphism type.
inline std::vector<CatalogEntry> alternating_maximals(std::size_t n) {
    std::vector<CatalogEntry> out;
    const std::string label = "alt:n=" + std::to_string(n);
    auto renamed = [&](CatalogEntry e, const std::string& name) {
        e.name = name;
        e.family = Family::alternating_maximal;
        e.case_label = label;
        validate(e);
        return e;
    };
    switch (n) {
    case 6:
        out.push_back(alternating_point_stabilizer(6, label));
        out.push_back(sylow3_normalizer_a6());
        out.push_back(even_intransitive(2, 4, "S4", label));
        out.push_back(renamed(primitive_named("PSL2(5)@6"), "A5(transitive)"));
        break;
    case 7:
        out.push_back(alternating_point_stabilizer(7, label));
        out.push_back(renamed(primitive_named("PSL2(7)@7"), "PSL2(7)"));
        out.push_back(even_intransitive(2, 5, "S5", label));
        out.push_back(even_intransitive(4, 3, "(A4x3):2", label));
        break;
    case 8: {
        out.push_back(alternating_point_stabilizer(8, label));
        out.push_back(renamed(primitive_named("AGL3(2)@8"), "2^3:PSL2(7)"));
        out.push_back(even_intransitive(2, 6, "S6", label));
        auto wr = imprimitive(8, 4);
        auto g = even_part(*wr.group, "2^4:(S3xS3)");
        out.push_back(detail::make("2^4:(S3xS3)", 8, Family::alternating_maximal, label, g, 576));
        out.push_back(even_intransitive(5, 3, "(A5x3):2", label));
        break;
    }
    case 9: {
        out.push_back(alternating_point_stabilizer(9, label));
        out.push_back(even_intransitive(2, 7, "S7", label));
        CatalogEntry e;
        e.name = "other(index>=84 in A9)";
        e.degree = 9;
        e.family = Family::alternating_maximal;
        e.case_label = label + "-generic";
        e.index_lower_bound = 168;
        out.push_back(std::move(e));
        break;
    }
    default: throw DomainError("alternating_maximals: n must be in [6,9]");
    }
    return out;
}

/// Everything the certifier examines for degree n.
inline std::vector<CatalogEntry> catalog_for(std::size_t n) {
    auto out = symmetric_maximals(n);
    auto alt = alternating_maximals(n);
    out.insert(out.end(), alt.begin(), alt.end());
    return out;
}

} // namespace hurwitz
