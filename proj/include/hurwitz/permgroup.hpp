#pragma once

/**
 * @file permgroup.hpp
 * @brief Permutations of {0..n-1}, small permutation groups given by
 *        generators, and the coset machinery used for genus bounds.
 *
 * Everything here targets degree n <= 10 with explicit enumeration.
 * Points are 0-based internally; cycle notation (parsing and printing)
 * is 1-based so that (1 2 3) means what it says.
 *
 * Composition convention: (p * q)(i) = p(q(i)).
 */

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "errors.hpp"

namespace hurwitz {

inline constexpr std::size_t kDefaultElementCap = 4'000'000;

// ---------------------------------------------------------------------------
// Permutation
// ---------------------------------------------------------------------------

class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (auto v : images_) {
            if (v >= images_.size() || seen[v])
                throw DomainError("Permutation: images are not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<std::uint32_t> im(n);
        std::iota(im.begin(), im.end(), 0u);
        return Permutation(std::move(im), trusted{});
    }

    /// Builds a permutation of degree n from 1-based disjoint cycles.
    static Permutation from_cycles(std::size_t n,
                                   const std::vector<std::vector<std::uint32_t>>& cycles) {
        std::vector<std::uint32_t> im(n);
        std::iota(im.begin(), im.end(), 0u);
        std::vector<bool> used(n, false);
        for (const auto& c : cycles) {
            for (std::size_t k = 0; k < c.size(); ++k) {
                std::uint32_t a = c[k], b = c[(k + 1) % c.size()];
                if (a < 1 || a > n || b < 1 || b > n)
                    throw DomainError("from_cycles: point out of range");
                if (used[a - 1])
                    throw DomainError("from_cycles: cycles are not disjoint");
                used[a - 1] = true;
                im[a - 1] = b - 1;
            }
        }
        return Permutation(std::move(im));
    }

    static Permutation cycle(std::size_t n, std::vector<std::uint32_t> points) {
        return from_cycles(n, {std::move(points)});
    }

    /// An m-cycle on the first m points: (1 2 ... m).
    static Permutation standard_cycle(std::size_t n, std::size_t m) {
        std::vector<std::uint32_t> pts(m);
        std::iota(pts.begin(), pts.end(), 1u);
        return cycle(n, pts);
    }

    std::size_t degree() const { return images_.size(); }
    std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
    std::span<const std::uint32_t> images() const { return images_; }

    Permutation inverse() const {
        std::vector<std::uint32_t> im(images_.size());
        for (std::uint32_t i = 0; i < images_.size(); ++i) im[images_[i]] = i;
        return Permutation(std::move(im), trusted{});
    }

    bool is_identity() const {
        for (std::uint32_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    /// Orbit lengths of <p> on the points, unsorted, in order of first point.
    std::vector<std::uint32_t> cycle_lengths() const {
        std::vector<std::uint32_t> out;
        std::vector<bool> seen(images_.size(), false);
        for (std::uint32_t i = 0; i < images_.size(); ++i) {
            if (seen[i]) continue;
            std::uint32_t len = 0;
            for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
                seen[j] = true;
                ++len;
            }
            out.push_back(len);
        }
        return out;
    }

    int sign() const {
        std::size_t even_cycles = 0;
        for (auto l : cycle_lengths())
            if (l % 2 == 0) ++even_cycles;
        return even_cycles % 2 == 0 ? 1 : -1;
    }

    std::uint64_t order() const {
        std::uint64_t o = 1;
        for (auto l : cycle_lengths()) o = std::lcm(o, static_cast<std::uint64_t>(l));
        return o;
    }

    Permutation pow(long long k) const {
        Permutation base = k < 0 ? inverse() : *this;
        unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : k;
        Permutation acc = identity(degree());
        while (e) {
            if (e & 1) acc = compose_unchecked(acc, base);
            base = compose_unchecked(base, base);
            e >>= 1;
        }
        return acc;
    }

    /// 4 bits per point; only for degree <= 16.
    std::uint64_t pack() const {
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            key |= static_cast<std::uint64_t>(images_[i]) << (4 * i);
        return key;
    }

    static Permutation unpack(std::uint64_t key, std::size_t n) {
        std::vector<std::uint32_t> im(n);
        for (std::size_t i = 0; i < n; ++i) im[i] = static_cast<std::uint32_t>((key >> (4 * i)) & 0xF);
        return Permutation(std::move(im), trusted{});
    }

    /// 1-based disjoint cycle notation; "()" for the identity.
    std::string to_string() const {
        std::ostringstream os;
        std::vector<bool> seen(images_.size(), false);
        bool any = false;
        for (std::uint32_t i = 0; i < images_.size(); ++i) {
            if (seen[i] || images_[i] == i) continue;
            any = true;
            os << '(';
            bool first = true;
            for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
                seen[j] = true;
                if (!first) os << ' ';
                os << (j + 1);
                first = false;
            }
            os << ')';
        }
        if (!any) os << "()";
        return os.str();
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

    friend Permutation compose_unchecked(const Permutation& p, const Permutation& q) {
        std::vector<std::uint32_t> im(q.images_.size());
        for (std::size_t i = 0; i < im.size(); ++i) im[i] = p.images_[q.images_[i]];
        return Permutation(std::move(im), trusted{});
    }

private:
    struct trusted {};
    Permutation(std::vector<std::uint32_t> images, trusted) : images_(std::move(images)) {}

    std::vector<std::uint32_t> images_;
};

/// (p o q)(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw DegreeMismatch("compose: degrees " + std::to_string(p.degree()) + " and " +
                             std::to_string(q.degree()));
    return compose_unchecked(p, q);
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// sigma * g * sigma^-1
inline Permutation conjugate(const Permutation& g, const Permutation& sigma) {
    return compose(compose(sigma, g), sigma.inverse());
}

// ---------------------------------------------------------------------------
// CycleType
// ---------------------------------------------------------------------------

struct CycleType {
    std::vector<std::uint32_t> parts; // descending, fixed points included as 1s

    CycleType() = default;
    explicit CycleType(std::vector<std::uint32_t> p) : parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<>());
    }

    std::size_t degree() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

    std::uint64_t order() const {
        std::uint64_t o = 1;
        for (auto p : parts) o = std::lcm(o, static_cast<std::uint64_t>(p));
        return o;
    }

    std::size_t num_cycles() const { return parts.size(); }

    /// True when the type is one m-cycle plus fixed points.
    bool is_single_cycle(std::uint32_t m) const {
        if (parts.empty() || parts.front() != m) return false;
        if (m == 1) return std::all_of(parts.begin(), parts.end(), [](auto v) { return v == 1; });
        return std::all_of(parts.begin() + 1, parts.end(), [](auto v) { return v == 1; });
    }

    /// Cycle type of g^k given the type of g.
    CycleType power(std::uint64_t k) const {
        std::vector<std::uint32_t> out;
        for (auto c : parts) {
            auto g = static_cast<std::uint32_t>(std::gcd(static_cast<std::uint64_t>(c), k));
            for (std::uint32_t i = 0; i < g; ++i) out.push_back(c / g);
        }
        return CycleType(std::move(out));
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts[i]);
        }
        return s + "]";
    }

    friend bool operator==(const CycleType&, const CycleType&) = default;
};

inline CycleType cycle_type(const Permutation& p) { return CycleType(p.cycle_lengths()); }

// ---------------------------------------------------------------------------
// Symmetric group helpers
// ---------------------------------------------------------------------------

inline std::uint64_t factorial(unsigned n) {
    std::uint64_t f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline void check_symmetric_cap(std::size_t n, std::size_t cap) {
    if (n > 20 || factorial(static_cast<unsigned>(n)) > cap)
        throw CapExceeded("S_" + std::to_string(n) + " has more than " + std::to_string(cap) +
                          " elements");
}

/// Visits every element of S_n in lexicographic order of images.
template <class Fn>
void for_each_symmetric(std::size_t n, Fn&& fn, std::size_t cap = kDefaultElementCap) {
    check_symmetric_cap(n, cap);
    std::vector<std::uint32_t> im(n);
    std::iota(im.begin(), im.end(), 0u);
    do {
        fn(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
}

/// Lehmer rank of a permutation in lexicographic order, 0 <= rank < n!.
inline std::uint64_t lehmer_rank(std::span<const std::uint32_t> im) {
    const std::size_t n = im.size();
    std::uint64_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (im[j] < im[i]) ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// GroupSpec
// ---------------------------------------------------------------------------

/**
 * A subgroup of S_n given by generators. The element list, order and
 * membership set are computed lazily, once, and then shared by copies.
 */
class GroupSpec {
public:
    GroupSpec() : GroupSpec(1, {}, {}) {}

    GroupSpec(std::size_t degree, std::vector<Permutation> generators, std::string name = {})
        : degree_(degree), generators_(std::move(generators)), name_(std::move(name)),
          cache_(std::make_shared<Cache>()) {
        if (degree_ == 0 || degree_ > 16)
            throw DomainError("GroupSpec: degree must be in [1,16]");
        for (const auto& g : generators_)
            if (g.degree() != degree_)
                throw DegreeMismatch("GroupSpec: generator degree " + std::to_string(g.degree()) +
                                     " != " + std::to_string(degree_));
    }

    static GroupSpec symmetric(std::size_t n) {
        std::vector<Permutation> gens;
        if (n >= 2) {
            gens.push_back(Permutation::cycle(n, {1, 2}));
            gens.push_back(Permutation::standard_cycle(n, n));
        }
        return GroupSpec(n, std::move(gens), "S" + std::to_string(n));
    }

    static GroupSpec alternating(std::size_t n) {
        std::vector<Permutation> gens;
        // 3-cycles (1 2 k) generate A_n
        for (std::uint32_t k = 3; k <= n; ++k) gens.push_back(Permutation::cycle(n, {1, 2, k}));
        return GroupSpec(n, std::move(gens), "A" + std::to_string(n));
    }

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::string& name() const { return name_; }

    /// Sorted element list (lexicographic on images); throws CapExceeded.
    const std::vector<Permutation>& elements(std::size_t cap = kDefaultElementCap) const {
        ensure_enumerated(cap);
        return cache_->elements;
    }

    std::uint64_t order(std::size_t cap = kDefaultElementCap) const { return elements(cap).size(); }

    bool contains(const Permutation& p, std::size_t cap = kDefaultElementCap) const {
        ensure_enumerated(cap);
        return p.degree() == degree_ && cache_->keys.count(p.pack()) != 0;
    }

    bool contains_key(std::uint64_t key, std::size_t cap = kDefaultElementCap) const {
        ensure_enumerated(cap);
        return cache_->keys.count(key) != 0;
    }

    /// Orbit of a point under the generators (sorted).
    std::vector<std::uint32_t> orbit(std::uint32_t point) const {
        std::vector<bool> seen(degree_, false);
        std::vector<std::uint32_t> stack{point}, out;
        seen[point] = true;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            out.push_back(x);
            for (const auto& g : generators_) {
                auto y = g(x);
                if (!seen[y]) {
                    seen[y] = true;
                    stack.push_back(y);
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_transitive() const { return orbit(0).size() == degree_; }

    /**
     * Smallest block of imprimitivity containing points a and b
     * (union-find closure under the generators). Returns the block of a.
     */
    std::vector<std::uint32_t> minimal_block(std::uint32_t a, std::uint32_t b) const {
        std::vector<std::uint32_t> parent(degree_);
        std::iota(parent.begin(), parent.end(), 0u);
        std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        std::vector<std::pair<std::uint32_t, std::uint32_t>> todo{{a, b}};
        parent[find(b)] = find(a);
        while (!todo.empty()) {
            auto [x, y] = todo.back();
            todo.pop_back();
            for (const auto& g : generators_) {
                auto u = find(g(x)), v = find(g(y));
                if (u != v) {
                    parent[v] = u;
                    todo.emplace_back(u, v);
                }
            }
        }
        std::vector<std::uint32_t> block;
        auto root = find(a);
        for (std::uint32_t x = 0; x < degree_; ++x)
            if (find(x) == root) block.push_back(x);
        return block;
    }

    bool is_primitive() const {
        if (!is_transitive()) return false;
        for (std::uint32_t b = 1; b < degree_; ++b)
            if (minimal_block(0, b).size() < degree_) return false;
        return true;
    }

    /// A nontrivial block system for a transitive imprimitive group, if any.
    std::optional<std::vector<std::uint32_t>> nontrivial_block() const {
        if (!is_transitive()) return std::nullopt;
        for (std::uint32_t b = 1; b < degree_; ++b) {
            auto blk = minimal_block(0, b);
            if (blk.size() < degree_) return blk;
        }
        return std::nullopt;
    }

    bool all_even() const {
        return std::all_of(generators_.begin(), generators_.end(),
                           [](const Permutation& g) { return g.sign() == 1; });
    }

private:
    struct Cache {
        std::once_flag once;
        std::vector<Permutation> elements;
        std::unordered_set<std::uint64_t> keys;
    };

    void ensure_enumerated(std::size_t cap) const {
        std::call_once(cache_->once, [&] { enumerate(cap); });
        if (cache_->elements.size() > cap)
            throw CapExceeded(label() + ": " + std::to_string(cache_->elements.size()) +
                              " elements exceed cap " + std::to_string(cap));
    }

    std::string label() const { return name_.empty() ? std::string("group") : name_; }

    // Closure of the generators by breadth-first multiplication. Throwing
    // from here leaves the once_flag unset, so a later call may retry.
    void enumerate(std::size_t cap) const {
        std::unordered_set<std::uint64_t> keys;
        std::vector<std::uint64_t> frontier;
        auto id = Permutation::identity(degree_).pack();
        keys.insert(id);
        frontier.push_back(id);
        std::vector<std::uint64_t> gens;
        for (const auto& g : generators_) gens.push_back(g.pack());
        auto mul = [n = degree_](std::uint64_t p, std::uint64_t q) {
            std::uint64_t r = 0;
            for (std::size_t i = 0; i < n; ++i) {
                auto qi = (q >> (4 * i)) & 0xF;
                auto pqi = (p >> (4 * qi)) & 0xF;
                r |= pqi << (4 * i);
            }
            return r;
        };
        while (!frontier.empty()) {
            std::vector<std::uint64_t> next;
            for (auto x : frontier) {
                for (auto g : gens) {
                    auto y = mul(g, x);
                    if (keys.insert(y).second) {
                        if (keys.size() > cap)
                            throw CapExceeded(label() + ": closure exceeds cap " +
                                              std::to_string(cap));
                        next.push_back(y);
                    }
                }
            }
            frontier = std::move(next);
        }
        std::vector<Permutation> els;
        els.reserve(keys.size());
        for (auto k : keys) els.push_back(Permutation::unpack(k, degree_));
        std::sort(els.begin(), els.end());
        cache_->elements = std::move(els);
        cache_->keys = std::move(keys);
    }

    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::string name_;
    std::shared_ptr<Cache> cache_;
};

inline const std::vector<Permutation>& enumerate_elements(const GroupSpec& g,
                                                          std::size_t cap = kDefaultElementCap) {
    if (cap < 1) throw DomainError("enumerate_elements: cap must be >= 1");
    return g.elements(cap);
}

/// Picks a small generating set of the subgroup formed by `members`.
inline GroupSpec subgroup_from_elements(std::size_t degree, const std::vector<Permutation>& members,
                                        std::string name) {
    std::vector<Permutation> gens;
    std::unordered_set<std::uint64_t> have;
    have.insert(Permutation::identity(degree).pack());
    for (const auto& m : members) {
        if (have.count(m.pack())) continue;
        gens.push_back(m);
        GroupSpec tmp(degree, gens);
        have.clear();
        for (const auto& e : tmp.elements()) have.insert(e.pack());
    }
    GroupSpec g(degree, std::move(gens), std::move(name));
    if (g.order() != members.size())
        throw DomainError("subgroup_from_elements: members do not form a subgroup");
    return g;
}

/// The even permutations of g, as a GroupSpec.
inline GroupSpec even_part(const GroupSpec& g, std::string name) {
    std::vector<Permutation> even;
    for (const auto& e : g.elements())
        if (e.sign() == 1) even.push_back(e);
    return subgroup_from_elements(g.degree(), even, std::move(name));
}

// ---------------------------------------------------------------------------
// Counting and c_1
// ---------------------------------------------------------------------------

/// Number of elements whose cycle type is exactly one m-cycle plus fixed points.
inline std::uint64_t count_m_cycles(const GroupSpec& g, std::uint32_t m,
                                    std::size_t cap = kDefaultElementCap) {
    if (m < 2) throw DomainError("count_m_cycles: m must be >= 2");
    const auto& els = g.elements(cap);
    if (m > g.degree()) return 0;
    std::uint64_t count = 0;
    for (const auto& e : els)
        if (cycle_type(e).is_single_cycle(m)) ++count;
    return count;
}

/**
 * c_1 = #Y / #E with Y = { sigma in S_n : sigma <gamma> sigma^-1 in E },
 * by running over all of S_n. Y must be a union of right cosets of E.
 */
inline std::uint64_t c1_bruteforce(const GroupSpec& e, const Permutation& gamma,
                                   std::size_t cap = kDefaultElementCap) {
    if (gamma.degree() != e.degree()) throw DegreeMismatch("c1_bruteforce: degree mismatch");
    if (gamma.is_identity()) throw DomainError("c1_bruteforce: <gamma> must be nontrivial");
    const std::size_t n = e.degree();
    const auto order = e.order(cap);
    std::uint64_t y = 0;
    for_each_symmetric(
        n,
        [&](const Permutation& sigma) {
            if (e.contains_key(conjugate(gamma, sigma).pack(), cap)) ++y;
        },
        cap);
    if (y % order != 0)
        throw std::logic_error("c1_bruteforce: #Y is not a multiple of #E");
    return y / order;
}

/// (number of m-cycles in E) / #E * m (n-m)!
inline std::uint64_t c1_closed_form(std::size_t n, const GroupSpec& e, std::uint32_t m,
                                    std::size_t cap = kDefaultElementCap) {
    if (e.degree() != n) throw DegreeMismatch("c1_closed_form: degree mismatch");
    if (m > n) return 0;
    const auto cycles = count_m_cycles(e, m, cap);
    const auto numer = cycles * m * factorial(static_cast<unsigned>(n - m));
    const auto order = e.order(cap);
    if (numer % order != 0) throw std::logic_error("c1_closed_form: non-integral value");
    return numer / order;
}

// ---------------------------------------------------------------------------
// Ramification profile of <gamma> on the right cosets E\S_n
// ---------------------------------------------------------------------------

struct RamificationProfile {
    std::uint64_t index = 0;                     // [S_n : E], the cover degree
    std::vector<std::uint64_t> orbit_sizes;      // descending
    std::map<std::uint64_t, std::uint64_t> c;    // delta -> c_delta
    std::uint64_t delta = 0;                     // sum of (size - 1)

    std::uint64_t c1() const {
        auto it = c.find(1);
        return it == c.end() ? 0 : it->second;
    }

    static RamificationProfile from_orbits(std::vector<std::uint64_t> sizes) {
        RamificationProfile r;
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        for (auto s : sizes) {
            r.index += s;
            r.c[s] += 1;
            r.delta += s - 1;
        }
        r.orbit_sizes = std::move(sizes);
        return r;
    }
};

/**
 * Right cosets of E in S_n, each labelled by its lexicographically least
 * element. coset_of[lehmer_rank(sigma)] is the coset id of E sigma.
 */
class CosetTable {
public:
    CosetTable(const GroupSpec& e, std::size_t cap = kDefaultElementCap) : n_(e.degree()) {
        check_symmetric_cap(n_, cap);
        const auto& hs = e.elements(cap);
        coset_of_.assign(factorial(static_cast<unsigned>(n_)), kUnassigned);
        for_each_symmetric(
            n_,
            [&](const Permutation& sigma) {
                auto r = lehmer_rank(sigma.images());
                if (coset_of_[r] != kUnassigned) return;
                auto id = static_cast<std::uint32_t>(reps_.size());
                reps_.push_back(sigma);
                for (const auto& h : hs) coset_of_[lehmer_rank(compose_unchecked(h, sigma).images())] = id;
            },
            cap);
    }

    std::size_t size() const { return reps_.size(); }
    const Permutation& representative(std::size_t id) const { return reps_[id]; }
    std::uint32_t coset_of(const Permutation& sigma) const { return coset_of_[lehmer_rank(sigma.images())]; }

    /// Permutation of the coset ids induced by right multiplication by g.
    std::vector<std::uint32_t> right_action(const Permutation& g) const {
        std::vector<std::uint32_t> act(reps_.size());
        for (std::size_t i = 0; i < reps_.size(); ++i) act[i] = coset_of(compose(reps_[i], g));
        return act;
    }

private:
    static constexpr std::uint32_t kUnassigned = 0xFFFFFFFFu;
    std::size_t n_;
    std::vector<std::uint32_t> coset_of_;
    std::vector<Permutation> reps_;
};

inline RamificationProfile ramification_profile(const GroupSpec& e, const Permutation& gamma,
                                                std::size_t cap = kDefaultElementCap) {
    if (gamma.degree() != e.degree()) throw DegreeMismatch("ramification_profile: degree mismatch");
    CosetTable table(e, cap);
    auto act = table.right_action(gamma);
    std::vector<bool> seen(act.size(), false);
    std::vector<std::uint64_t> sizes;
    for (std::size_t i = 0; i < act.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (auto j = static_cast<std::uint32_t>(i); !seen[j]; j = act[j]) {
            seen[j] = true;
            ++len;
        }
        sizes.push_back(len);
    }
    return RamificationProfile::from_orbits(std::move(sizes));
}

// ---------------------------------------------------------------------------
// Double cosets E sigma D
// ---------------------------------------------------------------------------

struct DoubleCoset {
    Permutation representative; // least element of the class
    std::uint64_t size = 0;
    std::uint64_t e = 0; // [sigma I sigma^-1 : E cap sigma I sigma^-1]
    std::uint64_t f = 0; // e*f = [sigma D sigma^-1 : E cap sigma D sigma^-1]
};

/**
 * Partition of `ambient` into double cosets E sigma D, with the ramification
 * index and residue degree of each class. `inertia` defaults to D.
 */
inline std::vector<DoubleCoset> double_cosets(const GroupSpec& e, const GroupSpec& d,
                                              const GroupSpec& ambient,
                                              const std::optional<GroupSpec>& inertia = std::nullopt,
                                              std::size_t cap = kDefaultElementCap) {
    if (e.degree() != ambient.degree() || d.degree() != ambient.degree())
        throw DegreeMismatch("double_cosets: degree mismatch");
    const auto& gs = ambient.elements(cap);
    const auto& hs = e.elements(cap);
    const auto& ds = d.elements(cap);
    const auto& is = inertia ? inertia->elements(cap) : ds;

    auto overlap = [&](const std::vector<Permutation>& sub, const Permutation& sigma) {
        std::uint64_t k = 0;
        for (const auto& x : sub)
            if (e.contains_key(conjugate(x, sigma).pack(), cap)) ++k;
        return k;
    };

    std::unordered_map<std::uint64_t, bool> assigned;
    assigned.reserve(gs.size());
    std::vector<DoubleCoset> out;
    for (const auto& sigma : gs) {
        if (assigned.count(sigma.pack())) continue;
        DoubleCoset dc;
        dc.representative = sigma;
        for (const auto& h : hs)
            for (const auto& x : ds) {
                auto key = compose_unchecked(compose_unchecked(h, sigma), x).pack();
                if (assigned.emplace(key, true).second) ++dc.size;
            }
        const auto ef = ds.size() / overlap(ds, sigma);
        dc.e = is.size() / overlap(is, sigma);
        dc.f = ef / dc.e;
        out.push_back(std::move(dc));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Action on j-subsets
// ---------------------------------------------------------------------------

/**
 * The induced action of S_n on the C(n,j) subsets of size j, with subsets
 * ordered colexicographically (rank = sum C(s_i, i+1) over sorted s_i).
 */
class JSubsetAction {
public:
    JSubsetAction(std::size_t n, std::size_t j, std::size_t cap = kDefaultElementCap) : n_(n), j_(j) {
        if (j < 1 || j + 1 > n) throw DomainError("jsubset_action: need 1 <= j <= n-1");
        auto count = binomial(static_cast<unsigned>(n), static_cast<unsigned>(j));
        if (count > cap) throw CapExceeded("jsubset_action: C(n,j) exceeds cap");
        subsets_.reserve(count);
        std::vector<std::uint32_t> s(j);
        std::iota(s.begin(), s.end(), 0u);
        // colex successor
        while (true) {
            subsets_.push_back(s);
            std::size_t i = 0;
            while (i + 1 < j && s[i] + 1 == s[i + 1]) ++i;
            if (s[i] + 1 >= n) break;
            ++s[i];
            for (std::size_t k = 0; k < i; ++k) s[k] = static_cast<std::uint32_t>(k);
        }
    }

    std::size_t degree() const { return n_; }
    std::size_t subset_size() const { return j_; }
    std::size_t num_points() const { return subsets_.size(); }
    const std::vector<std::uint32_t>& subset(std::size_t rank) const { return subsets_[rank]; }

    std::uint32_t rank(std::vector<std::uint32_t> s) const {
        std::sort(s.begin(), s.end());
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            r += binomial(s[i], static_cast<unsigned>(i + 1));
        return static_cast<std::uint32_t>(r);
    }

    Permutation induced(const Permutation& p) const {
        if (p.degree() != n_) throw DegreeMismatch("jsubset_action: degree mismatch");
        std::vector<std::uint32_t> im(subsets_.size());
        std::vector<std::uint32_t> img(j_);
        for (std::size_t r = 0; r < subsets_.size(); ++r) {
            for (std::size_t k = 0; k < j_; ++k) img[k] = p(subsets_[r][k]);
            im[r] = rank(img);
        }
        return Permutation(std::move(im));
    }

    /// Transitivity of the image of a group given by generators.
    bool image_transitive(const std::vector<Permutation>& gens) const {
        std::vector<Permutation> induced_gens;
        for (const auto& g : gens) induced_gens.push_back(induced(g));
        std::vector<bool> seen(subsets_.size(), false);
        std::vector<std::uint32_t> stack{0};
        seen[0] = true;
        std::size_t reached = 1;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (const auto& g : induced_gens) {
                auto y = g(x);
                if (!seen[y]) {
                    seen[y] = true;
                    ++reached;
                    stack.push_back(y);
                }
            }
        }
        return reached == subsets_.size();
    }

private:
    std::size_t n_, j_;
    std::vector<std::vector<std::uint32_t>> subsets_;
};

inline JSubsetAction jsubset_action(std::size_t n, std::size_t j, std::size_t cap = kDefaultElementCap) {
    return JSubsetAction(n, j, cap);
}

inline bool is_transitive(const GroupSpec& g) { return g.is_transitive(); }
inline bool is_primitive(const GroupSpec& g) { return g.is_primitive(); }

} // namespace hurwitz
