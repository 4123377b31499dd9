#pragma once

/**
 * @file polyalg.hpp
 * @brief Exact polynomials over Z and F_p: squarefree decomposition,
 *        factorization over Q (Zassenhaus), Frobenius cycle types and
 *        resultants of bivariate polynomials.
 */

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "permgroup.hpp"

namespace hurwitz {

inline constexpr long kFactorDegreeCap = 16;

// ---------------------------------------------------------------------------
// IntPoly
// ---------------------------------------------------------------------------

/// Polynomial with arbitrary-precision integer coefficients, ascending degree.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> c) : c_(std::move(c)) { trim(); }
    IntPoly(std::initializer_list<long> c) {
        for (auto v : c) c_.emplace_back(v);
        trim();
    }

    static IntPoly constant(const mpz_class& a) { return IntPoly(std::vector<mpz_class>{a}); }
    static IntPoly monomial(const mpz_class& a, std::size_t deg) {
        std::vector<mpz_class> c(deg + 1, 0);
        c[deg] = a;
        return IntPoly(std::move(c));
    }
    static IntPoly x() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }
    mpz_class lc() const { return c_.empty() ? mpz_class(0) : c_.back(); }

    IntPoly operator-() const {
        auto c = c_;
        for (auto& v : c) v = -v;
        return IntPoly(std::move(c));
    }
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<mpz_class> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<mpz_class> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return IntPoly(std::move(c));
    }
    friend IntPoly operator*(const mpz_class& s, const IntPoly& a) {
        auto c = a.c_;
        for (auto& v : c) v *= s;
        return IntPoly(std::move(c));
    }
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

    IntPoly pow(unsigned e) const {
        IntPoly r = constant(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    IntPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<mpz_class> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return IntPoly(std::move(c));
    }

    mpz_class eval(const mpz_class& t) const {
        mpz_class r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
        return r;
    }
    mpq_class eval(const mpq_class& t) const {
        mpq_class r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + mpq_class(*it);
        return r;
    }

    /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
    mpz_class content() const {
        mpz_class g = 0;
        for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        return g;
    }

    /// Divides out the content and makes the leading coefficient positive.
    IntPoly primitive_part() const {
        if (is_zero()) return {};
        mpz_class g = content();
        if (lc() < 0) g = -g;
        auto c = c_;
        for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        return IntPoly(std::move(c));
    }

    std::string to_string(char var = 'x') const {
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (long i = degree(); i >= 0; --i) {
            const auto& a = c_[static_cast<std::size_t>(i)];
            if (a == 0) continue;
            mpz_class m = abs(a);
            if (first) {
                if (a < 0) os << '-';
            } else {
                os << (a < 0 ? " - " : " + ");
            }
            first = false;
            if (i == 0 || m != 1) {
                os << m.get_str();
                if (i > 0) os << '*';
            }
            if (i >= 1) os << var;
            if (i >= 2) os << '^' << i;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<mpz_class> c_;
};

/// Division over Z; returns false if b does not divide a exactly in Z[x].
inline bool divide_exact(const IntPoly& a, const IntPoly& b, IntPoly* quotient = nullptr) {
    if (b.is_zero()) throw DomainError("divide_exact: division by zero");
    if (a.is_zero()) {
        if (quotient) *quotient = {};
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<mpz_class> r = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<mpz_class> q(r.size() - db, 0);
    const mpz_class& lb = b.lc();
    for (std::size_t k = q.size(); k-- > 0;) {
        const auto& top = r[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return false;
        mpz_class c = top / lb;
        q[k] = c;
        for (std::size_t i = 0; i <= db; ++i) r[k + i] -= c * b.coeffs()[i];
    }
    for (const auto& v : r)
        if (v != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

inline IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
    IntPoly q;
    if (!divide_exact(a, b, &q)) throw std::logic_error("exact_quotient: not divisible");
    return q;
}

/// lc(b)^(deg a - deg b + 1) a mod b
inline IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw DomainError("pseudo_remainder: division by zero");
    std::vector<mpz_class> r = a.coeffs();
    const long db = b.degree();
    const mpz_class& lb = b.lc();
    for (long k = static_cast<long>(r.size()) - 1; k >= db; --k) {
        mpz_class top = r[static_cast<std::size_t>(k)];
        for (auto& v : r) v *= lb;
        for (long i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= top * b.coeffs()[static_cast<std::size_t>(i)];
        r.pop_back();
    }
    return IntPoly(std::move(r));
}

/// Primitive gcd over Q[x], normalized primitive with positive leading coefficient.
inline IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly u = a.primitive_part(), v = b.primitive_part();
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPoly r = pseudo_remainder(u, v).primitive_part();
        u = std::move(v);
        v = std::move(r);
    }
    return u.primitive_part();
}

/// Yun's algorithm on the primitive part: f = c * prod u_i^i. Constant u_i are omitted.
inline std::vector<std::pair<IntPoly, unsigned>> yun_squarefree(const IntPoly& f) {
    if (f.is_zero()) throw DomainError("yun_squarefree: zero polynomial");
    std::vector<std::pair<IntPoly, unsigned>> out;
    IntPoly p = f.primitive_part();
    if (p.degree() <= 0) return out;
    IntPoly d = p.derivative();
    IntPoly a = gcd(p, d);
    IntPoly b = exact_quotient(p, a);
    IntPoly c = exact_quotient(d, a);
    IntPoly e = c - b.derivative();
    for (unsigned i = 1; b.degree() > 0; ++i) {
        a = gcd(b, e);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = exact_quotient(b, a);
        c = exact_quotient(e, a);
        e = c - b.derivative();
    }
    return out;
}

inline IntPoly squarefree_part(const IntPoly& f) {
    IntPoly r = IntPoly::constant(1);
    for (const auto& [u, m] : yun_squarefree(f)) r *= u;
    return r;
}

// ---------------------------------------------------------------------------
// Primes
// ---------------------------------------------------------------------------

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t next_prime(std::uint64_t n) {
    do ++n;
    while (!is_prime(n));
    return n;
}

inline std::uint64_t mod_ui(const mpz_class& a, std::uint64_t p) {
    return mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(p));
}

// ---------------------------------------------------------------------------
// Polynomials over F_p (p < 2^32)
// ---------------------------------------------------------------------------

namespace modp {

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline long deg(const Poly& a) { return static_cast<long>(a.size()) - 1; }

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw DomainError("modp::inv: zero has no inverse");
    return pow_mod(a, p - 2, p);
}

inline Poly reduce(const IntPoly& f, std::uint64_t p) {
    Poly a;
    for (const auto& c : f.coeffs()) a.push_back(mod_ui(c, p));
    trim(a);
    return a;
}

inline Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + b[i]) % p;
    trim(c);
    return c;
}
inline Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + p - b[i]) % p;
    trim(c);
    return c;
}
inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}
inline Poly scale(const Poly& a, std::uint64_t s, std::uint64_t p) {
    Poly c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * (s % p) % p;
    trim(c);
    return c;
}
inline Poly monic(const Poly& a, std::uint64_t p) { return a.empty() ? a : scale(a, inv(a.back(), p), p); }

inline void divmod(const Poly& a, const Poly& b, std::uint64_t p, Poly& q, Poly& r) {
    if (b.empty()) throw DomainError("modp::divmod: division by zero");
    r = a;
    if (deg(a) < deg(b)) {
        q.clear();
        return;
    }
    q.assign(a.size() - b.size() + 1, 0);
    const std::uint64_t ib = inv(b.back(), p);
    for (long k = deg(a) - deg(b); k >= 0; --k) {
        std::uint64_t c = r[static_cast<std::size_t>(k + deg(b))] * ib % p;
        q[static_cast<std::size_t>(k)] = c;
        if (!c) continue;
        for (std::size_t i = 0; i < b.size(); ++i) {
            auto& v = r[static_cast<std::size_t>(k) + i];
            v = (v + p - c * b[i] % p) % p;
        }
    }
    trim(q);
    trim(r);
}
inline Poly rem(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly q, r;
    divmod(a, b, p, q, r);
    return r;
}
inline Poly quo(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly q, r;
    divmod(a, b, p, q, r);
    return q;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a, p);
}

/// g = s a + t b with g monic.
inline Poly xgcd(const Poly& a, const Poly& b, std::uint64_t p, Poly& s, Poly& t) {
    Poly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
    while (!r1.empty()) {
        Poly q, r;
        divmod(r0, r1, p, q, r);
        Poly s2 = sub(s0, mul(q, s1, p), p), t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) {
        s = s0;
        t = t0;
        return r0;
    }
    auto il = inv(r0.back(), p);
    s = scale(s0, il, p);
    t = scale(t0, il, p);
    return scale(r0, il, p);
}

inline Poly derivative(const Poly& a, std::uint64_t p) {
    if (a.size() <= 1) return {};
    Poly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * (i % p) % p;
    trim(d);
    return d;
}

inline Poly powmod(Poly base, const mpz_class& e, const Poly& m, std::uint64_t p) {
    Poly r{1};
    r = rem(r, m, p);
    base = rem(base, m, p);
    const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = rem(mul(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, p), m, p);
    }
    return r;
}

/// Squarefree decomposition of a monic polynomial over F_p.
inline std::vector<std::pair<Poly, unsigned>> squarefree(const Poly& f, std::uint64_t p) {
    std::vector<std::pair<Poly, unsigned>> out;
    if (deg(f) <= 0) return out;
    Poly c = gcd(f, derivative(f, p), p);
    Poly w = quo(f, c, p);
    for (unsigned i = 1; deg(w) > 0; ++i) {
        Poly y = gcd(w, c, p);
        Poly z = quo(w, y, p);
        if (deg(z) > 0) out.emplace_back(z, i);
        w = std::move(y);
        c = quo(c, w, p);
    }
    if (deg(c) > 0) {
        // c is a p-th power
        Poly root;
        for (std::size_t i = 0; i < c.size(); i += p) root.push_back(c[i]);
        for (auto& [g, m] : squarefree(root, p)) out.emplace_back(g, m * static_cast<unsigned>(p));
    }
    return out;
}

/// Distinct-degree factorization of a monic squarefree polynomial.
inline std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f, std::uint64_t p) {
    std::vector<std::pair<Poly, unsigned>> out;
    const Poly x{0, 1};
    Poly h = rem(x, f, p);
    const mpz_class pe = static_cast<unsigned long>(p);
    for (unsigned i = 1; deg(f) >= 2 * static_cast<long>(i); ++i) {
        h = powmod(h, pe, f, p);
        Poly g = gcd(sub(h, x, p), f, p);
        if (deg(g) > 0) {
            out.emplace_back(g, i);
            f = quo(f, g, p);
            h = rem(h, f, p);
        }
    }
    if (deg(f) > 0) out.emplace_back(f, static_cast<unsigned>(deg(f)));
    return out;
}

/// Cantor-Zassenhaus equal-degree splitting; deterministic given the seed.
inline void equal_degree(const Poly& g, unsigned d, std::uint64_t p, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (deg(g) == static_cast<long>(d)) {
        out.push_back(g);
        return;
    }
    mpz_class e;
    if (p != 2) {
        mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), d);
        e = (e - 1) / 2;
    }
    std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);
    while (true) {
        Poly a(static_cast<std::size_t>(deg(g)));
        for (auto& v : a) v = coin(rng);
        trim(a);
        if (deg(a) <= 0) continue;
        Poly b;
        if (p == 2) {
            // trace to F_2: a + a^2 + ... + a^(2^(d-1))
            Poly term = rem(a, g, 2);
            b = term;
            for (unsigned i = 1; i < d; ++i) {
                term = rem(mul(term, term, 2), g, 2);
                b = add(b, term, 2);
            }
        } else {
            b = sub(powmod(a, e, g, p), Poly{1}, p);
        }
        Poly h = gcd(b, g, p);
        if (deg(h) > 0 && deg(h) < deg(g)) {
            equal_degree(h, d, p, rng, out);
            equal_degree(quo(g, h, p), d, p, rng, out);
            return;
        }
    }
}

} // namespace modp

struct ModFactorization {
    std::uint64_t p = 0;
    std::uint64_t unit = 0;                                  // leading coefficient mod p
    std::vector<std::pair<modp::Poly, unsigned>> factors;    // monic irreducible, multiplicity
};

/// Full factorization over F_p. Throws BadPrime if p is not prime or divides lc(f).
inline ModFactorization factor_mod_p(const IntPoly& f, std::uint64_t p) {
    if (!is_prime(p) || p >= (1ull << 32)) throw BadPrime("factor_mod_p: " + std::to_string(p) + " is not a usable prime");
    if (f.is_zero()) throw DomainError("factor_mod_p: zero polynomial");
    if (mod_ui(f.lc(), p) == 0) throw BadPrime("factor_mod_p: p divides the leading coefficient");
    auto a = modp::reduce(f, p);
    ModFactorization r{p, a.back(), {}};
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ (p * 1000003ull) ^ static_cast<std::uint64_t>(a.size()));
    for (auto& [s, m] : modp::squarefree(modp::monic(a, p), p))
        for (auto& [g, d] : modp::distinct_degree(s, p)) {
            std::vector<modp::Poly> parts;
            modp::equal_degree(g, d, p, rng, parts);
            for (auto& q : parts) r.factors.emplace_back(std::move(q), m);
        }
    std::sort(r.factors.begin(), r.factors.end(), [](const auto& x, const auto& y) {
        if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
    });
    return r;
}

/// True if f mod p keeps its degree and stays squarefree.
inline bool good_reduction(const IntPoly& f, std::uint64_t p) {
    if (mod_ui(f.lc(), p) == 0) return false;
    auto a = modp::reduce(f, p);
    return modp::deg(modp::gcd(a, modp::derivative(a, p), p)) == 0;
}

/// Degrees of the irreducible factors of f mod p, as a cycle type.
inline CycleType dedekind_cycle_type(const IntPoly& f, std::uint64_t p) {
    if (!is_prime(p)) throw BadPrime("dedekind_cycle_type: " + std::to_string(p) + " is not prime");
    if (!good_reduction(f, p)) throw BadPrime("dedekind_cycle_type: bad reduction at " + std::to_string(p));
    std::vector<std::uint32_t> parts;
    for (const auto& [g, m] : factor_mod_p(f, p).factors)
        for (unsigned i = 0; i < m; ++i) parts.push_back(static_cast<std::uint32_t>(modp::deg(g)));
    return CycleType(std::move(parts));
}

// ---------------------------------------------------------------------------
// Factorization over Q
// ---------------------------------------------------------------------------

struct FactorizationResult {
    mpq_class unit;
    std::vector<std::pair<IntPoly, unsigned>> factors; // primitive, positive lc, sorted

    IntPoly expand() const {
        IntPoly r = IntPoly::constant(1);
        for (const auto& [g, m] : factors) r *= g.pow(m);
        return r;
    }
    std::vector<std::uint32_t> degrees() const {
        std::vector<std::uint32_t> d;
        for (const auto& [g, m] : factors)
            for (unsigned i = 0; i < m; ++i) d.push_back(static_cast<std::uint32_t>(g.degree()));
        std::sort(d.begin(), d.end(), std::greater<>());
        return d;
    }
    bool irreducible() const { return factors.size() == 1 && factors[0].second == 1; }
};

namespace detail {

using ZPoly = std::vector<mpz_class>; // mod-M arithmetic, ascending

inline void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline ZPoly zreduce(ZPoly a, const mpz_class& m) {
    for (auto& v : a) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
    return a;
}
inline ZPoly zmul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return zreduce(std::move(c), m);
}
inline ZPoly from_modp(const modp::Poly& a) {
    ZPoly z;
    for (auto v : a) z.emplace_back(static_cast<unsigned long>(v));
    return z;
}
inline modp::Poly to_modp(const ZPoly& a, std::uint64_t p) {
    modp::Poly r;
    for (const auto& v : a) r.push_back(mod_ui(v, p));
    modp::trim(r);
    return r;
}

/// Lifts G = a b (mod p) to G = A B (mod M = p^k). G, a, b monic.
inline std::pair<ZPoly, ZPoly> hensel_pair(const ZPoly& G, const modp::Poly& a, const modp::Poly& b, std::uint64_t p,
                                           const mpz_class& M) {
    modp::Poly s, t;
    auto g = modp::xgcd(a, b, p, s, t);
    if (g != modp::Poly{1}) throw std::logic_error("hensel_pair: factors not coprime mod p");
    ZPoly A = from_modp(a), B = from_modp(b);
    mpz_class m = static_cast<unsigned long>(p);
    while (m < M) {
        ZPoly e = G;
        auto ab = zmul(A, B, M);
        e.resize(std::max(e.size(), ab.size()), 0);
        for (std::size_t i = 0; i < ab.size(); ++i) e[i] -= ab[i];
        e = zreduce(std::move(e), M);
        for (auto& v : e) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        auto ep = to_modp(e, p);
        modp::Poly q, alpha;
        modp::divmod(modp::mul(t, ep, p), a, p, q, alpha);
        auto beta = modp::add(modp::mul(s, ep, p), modp::mul(q, b, p), p);
        auto bump = [&](ZPoly& X, const modp::Poly& d) {
            X.resize(std::max(X.size(), d.size()), 0);
            for (std::size_t i = 0; i < d.size(); ++i) X[i] += m * static_cast<unsigned long>(d[i]);
        };
        bump(A, alpha);
        bump(B, beta);
        m *= static_cast<unsigned long>(p);
        A = zreduce(std::move(A), M);
        B = zreduce(std::move(B), M);
    }
    return {A, B};
}

inline void hensel_multi(const ZPoly& G, const std::vector<modp::Poly>& fs, std::uint64_t p, const mpz_class& M,
                         std::vector<ZPoly>& out) {
    if (fs.size() == 1) {
        out.push_back(G);
        return;
    }
    const std::size_t half = fs.size() / 2;
    modp::Poly a{1}, b{1};
    for (std::size_t i = 0; i < half; ++i) a = modp::mul(a, fs[i], p);
    for (std::size_t i = half; i < fs.size(); ++i) b = modp::mul(b, fs[i], p);
    auto [A, B] = hensel_pair(G, a, b, p, M);
    hensel_multi(A, std::vector<modp::Poly>(fs.begin(), fs.begin() + static_cast<long>(half)), p, M, out);
    hensel_multi(B, std::vector<modp::Poly>(fs.begin() + static_cast<long>(half), fs.end()), p, M, out);
}

inline IntPoly symmetric(const ZPoly& a, const mpz_class& M) {
    std::vector<mpz_class> c = a;
    mpz_class half = M / 2;
    for (auto& v : c)
        if (v > half) v -= M;
    return IntPoly(std::move(c));
}

/// Zassenhaus on a primitive squarefree polynomial of positive degree.
inline std::vector<IntPoly> zassenhaus(IntPoly g) {
    if (g.degree() <= 1) return {g};
    // pick the good prime with the fewest modular factors among the first few
    std::uint64_t best_p = 0;
    ModFactorization best;
    int tried = 0;
    for (std::uint64_t p = 2; tried < 6 && p < 100000; p = next_prime(p)) {
        if (!good_reduction(g, p)) continue;
        ++tried;
        auto mf = factor_mod_p(g, p);
        if (best_p == 0 || mf.factors.size() < best.factors.size()) {
            best_p = p;
            best = std::move(mf);
        }
        if (best.factors.size() == 1) break;
    }
    if (best_p == 0) throw std::logic_error("zassenhaus: no good prime found");
    if (best.factors.size() == 1) return {g};
    const std::uint64_t p = best_p;

    // coefficient bound for lc(g) * (any factor)
    mpz_class norm2 = 0;
    for (const auto& c : g.coeffs()) norm2 += c * c;
    mpz_class bound = sqrt(norm2) + 1;
    bound <<= static_cast<unsigned long>(g.degree());
    bound *= abs(g.lc());
    mpz_class M = static_cast<unsigned long>(p);
    while (M <= 2 * bound) M *= static_cast<unsigned long>(p);

    // monic G = g / lc (mod M)
    mpz_class ilc;
    mpz_invert(ilc.get_mpz_t(), g.lc().get_mpz_t(), M.get_mpz_t());
    ZPoly G = zreduce(g.coeffs(), M);
    for (auto& v : G) v *= ilc;
    G = zreduce(std::move(G), M);

    std::vector<modp::Poly> fs;
    for (const auto& [f, m] : best.factors) fs.push_back(f);
    std::vector<ZPoly> lifted;
    hensel_multi(G, fs, p, M, lifted);

    std::vector<IntPoly> found;
    std::vector<ZPoly> rest = lifted;
    for (std::size_t s = 1; 2 * s <= rest.size();) {
        bool hit = false;
        std::vector<std::size_t> idx(s);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            ZPoly cand{g.lc()};
            cand = zreduce(std::move(cand), M);
            for (auto i : idx) cand = zmul(cand, rest[i], M);
            IntPoly h = symmetric(cand, M).primitive_part();
            IntPoly q;
            if (h.degree() > 0 && divide_exact(g, h, &q)) {
                found.push_back(h);
                g = q.lc() < 0 ? -q : q;
                std::vector<ZPoly> keep;
                for (std::size_t i = 0, k = 0; i < rest.size(); ++i) {
                    if (k < idx.size() && idx[k] == i) {
                        ++k;
                        continue;
                    }
                    keep.push_back(std::move(rest[i]));
                }
                rest = std::move(keep);
                hit = true;
                break;
            }
            // next s-subset in lexicographic order
            std::size_t k = s;
            while (k > 0 && idx[k - 1] == rest.size() - s + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!hit) ++s;
    }
    if (g.degree() > 0) found.push_back(g);
    return found;
}

} // namespace detail

/// Complete factorization over Q of an integer polynomial of degree <= kFactorDegreeCap.
inline FactorizationResult factor_over_Q(const IntPoly& f, long degree_cap = kFactorDegreeCap) {
    if (f.is_zero()) throw DomainError("factor_over_Q: zero polynomial");
    if (f.degree() > degree_cap)
        throw DegreeCapExceeded("factor_over_Q: degree " + std::to_string(f.degree()) + " exceeds cap " +
                                std::to_string(degree_cap));
    FactorizationResult r;
    mpz_class c = f.content();
    r.unit = f.lc() < 0 ? mpq_class(-c) : mpq_class(c);
    for (const auto& [u, m] : yun_squarefree(f))
        for (auto& h : detail::zassenhaus(u)) r.factors.emplace_back(h.primitive_part(), m);
    std::sort(r.factors.begin(), r.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        if (a.first.coeffs() != b.first.coeffs()) return a.first.coeffs() < b.first.coeffs();
        return a.second < b.second;
    });
    IntPoly check = r.expand();
    if (!(r.unit.get_num() * check == f))
        throw std::logic_error("factor_over_Q: product check failed for " + f.to_string());
    return r;
}

inline bool is_rational_square(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    if (c < 0) return false;
    return mpz_perfect_square_p(c.get_num_mpz_t()) && mpz_perfect_square_p(c.get_den_mpz_t());
}

// ---------------------------------------------------------------------------
// Bivariate polynomials: sum_i x^i c_i(t)
// ---------------------------------------------------------------------------

class BivarPoly {
public:
    BivarPoly() = default;
    explicit BivarPoly(std::vector<IntPoly> cx) : cx_(std::move(cx)) { trim(); }

    bool is_zero() const { return cx_.empty(); }
    long degree_x() const { return static_cast<long>(cx_.size()) - 1; }
    long degree_t() const {
        long d = -1;
        for (const auto& c : cx_) d = std::max(d, c.degree());
        return d;
    }
    const std::vector<IntPoly>& coeffs_x() const { return cx_; }
    IntPoly coeff_x(std::size_t i) const { return i < cx_.size() ? cx_[i] : IntPoly{}; }
    IntPoly lc_x() const { return cx_.empty() ? IntPoly{} : cx_.back(); }

    friend BivarPoly operator+(const BivarPoly& a, const BivarPoly& b) {
        std::vector<IntPoly> c(std::max(a.cx_.size(), b.cx_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff_x(i) + b.coeff_x(i);
        return BivarPoly(std::move(c));
    }
    friend BivarPoly operator-(const BivarPoly& a, const BivarPoly& b) {
        std::vector<IntPoly> c(std::max(a.cx_.size(), b.cx_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff_x(i) - b.coeff_x(i);
        return BivarPoly(std::move(c));
    }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<IntPoly> c(a.cx_.size() + b.cx_.size() - 1);
        for (std::size_t i = 0; i < a.cx_.size(); ++i)
            for (std::size_t j = 0; j < b.cx_.size(); ++j) c[i + j] += a.cx_[i] * b.cx_[j];
        return BivarPoly(std::move(c));
    }
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.cx_ == b.cx_; }

    BivarPoly derivative_x() const {
        if (cx_.size() <= 1) return {};
        std::vector<IntPoly> c(cx_.size() - 1);
        for (std::size_t i = 1; i < cx_.size(); ++i) c[i - 1] = mpz_class(static_cast<unsigned long>(i)) * cx_[i];
        return BivarPoly(std::move(c));
    }
    BivarPoly derivative_t() const {
        std::vector<IntPoly> c;
        for (const auto& v : cx_) c.push_back(v.derivative());
        return BivarPoly(std::move(c));
    }

    IntPoly eval_t(const mpz_class& t) const {
        std::vector<mpz_class> c;
        for (const auto& v : cx_) c.push_back(v.eval(t));
        return IntPoly(std::move(c));
    }

    /// b^D f(x, a/b) with D = degree_t, an integer polynomial in x.
    IntPoly eval_t_cleared(const mpq_class& t) const {
        const mpz_class a = t.get_num(), b = t.get_den();
        const long D = std::max(0L, degree_t());
        std::vector<mpz_class> c;
        for (const auto& v : cx_) {
            mpz_class s = 0, apow = 1;
            std::vector<mpz_class> bpow(static_cast<std::size_t>(D) + 1, 1);
            for (long k = 1; k <= D; ++k) bpow[static_cast<std::size_t>(k)] = bpow[static_cast<std::size_t>(k - 1)] * b;
            for (long k = 0; k <= v.degree(); ++k) {
                s += v.coeff(static_cast<std::size_t>(k)) * apow * bpow[static_cast<std::size_t>(D - k)];
                apow *= a;
            }
            c.push_back(s);
        }
        return IntPoly(std::move(c));
    }

    std::string to_string() const {
        if (cx_.empty()) return "0";
        std::string s;
        for (long i = degree_x(); i >= 0; --i) {
            const auto& c = cx_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c.to_string('t') + ")";
            if (i >= 1) s += "*x";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim() {
        while (!cx_.empty() && cx_.back().is_zero()) cx_.pop_back();
    }
    std::vector<IntPoly> cx_;
};

/// Determinant by fraction-free Gaussian elimination.
inline mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

/// Sylvester resultant with formal degrees m = deg f, k = deg g (coefficients ascending).
inline mpz_class sylvester_resultant(const std::vector<mpz_class>& f, std::size_t m, const std::vector<mpz_class>& g,
                                     std::size_t k) {
    const std::size_t N = m + k;
    std::vector<std::vector<mpz_class>> S(N, std::vector<mpz_class>(N, 0));
    auto at = [](const std::vector<mpz_class>& v, std::size_t i) { return i < v.size() ? v[i] : mpz_class(0); };
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t i = 0; i <= m; ++i) S[r][r + i] = at(f, m - i);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= k; ++i) S[k + r][r + i] = at(g, k - i);
    return bareiss_determinant(std::move(S));
}

/// Newton interpolation through (x_i, y_i); the result must have integer coefficients.
inline IntPoly interpolate_integer(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys) {
    const std::size_t n = xs.size();
    std::vector<mpq_class> dd(ys.begin(), ys.end());
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / mpq_class(xs[i] - xs[i - j]);
            if (i == j) break;
        }
    std::vector<mpq_class> poly{dd[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        // poly = poly * (t - xs[i]) + dd[i]
        std::vector<mpq_class> next(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            next[k + 1] += poly[k];
            next[k] -= poly[k] * xs[i];
        }
        next[0] += dd[i];
        poly = std::move(next);
    }
    std::vector<mpz_class> c;
    for (auto& q : poly) {
        q.canonicalize();
        if (q.get_den() != 1) throw std::logic_error("interpolate_integer: non-integral coefficient");
        c.push_back(q.get_num());
    }
    return IntPoly(std::move(c));
}

/// Res_x(f, g) as a polynomial in t.
inline IntPoly resultant_x(const BivarPoly& f, const BivarPoly& g) {
    if (f.degree_x() < 1 || g.degree_x() < 1) throw DomainError("resultant_x: need positive x-degrees");
    const auto m = static_cast<std::size_t>(f.degree_x()), k = static_cast<std::size_t>(g.degree_x());
    const long bound = static_cast<long>(k) * std::max(0L, f.degree_t()) + static_cast<long>(m) * std::max(0L, g.degree_t());
    std::vector<mpz_class> xs, ys;
    for (long i = 0; i <= bound; ++i) {
        mpz_class t = i;
        xs.push_back(t);
        ys.push_back(sylvester_resultant(f.eval_t(t).coeffs(), m, g.eval_t(t).coeffs(), k));
    }
    return interpolate_integer(xs, ys);
}

/// disc_x(f) = (-1)^(n(n-1)/2) Res_x(f, f_x) / lc_x(f).
inline IntPoly disc_x(const BivarPoly& f) {
    const long n = f.degree_x();
    if (n < 1) throw DomainError("disc_x: need positive x-degree");
    if (n == 1) return IntPoly::constant(1);
    IntPoly r = resultant_x(f, f.derivative_x());
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return exact_quotient(r, f.lc_x());
}

/// Discriminant of a univariate integer polynomial of degree >= 1.
inline mpz_class discriminant(const IntPoly& f) {
    const long n = f.degree();
    if (n < 1) throw DomainError("discriminant: need positive degree");
    if (n == 1) return 1;
    auto d = f.derivative();
    mpz_class r = sylvester_resultant(f.coeffs(), static_cast<std::size_t>(n), d.coeffs(), static_cast<std::size_t>(n - 1));
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), f.lc().get_mpz_t());
    return r;
}

} // namespace hurwitz
