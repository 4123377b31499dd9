#pragma once

/**
 * @file laguerre.hpp
 * @brief The generalized Laguerre family n! L_n^{(t)}(x), its homogenization
 *        F_n(x, nu, mu), discriminant and branch structure. Exact only.
 */

#include <array>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "polyalg.hpp"

namespace hurwitz {

/// Polynomial in (x, nu, mu) with integer coefficients.
class TriPoly {
public:
    using Exp = std::array<unsigned, 3>;
    enum Var { X = 0, NU = 1, MU = 2 };

    TriPoly() = default;
    static TriPoly constant(const mpz_class& c) {
        TriPoly p;
        p.add_term({0, 0, 0}, c);
        return p;
    }
    static TriPoly var(Var v) {
        TriPoly p;
        Exp e{0, 0, 0};
        e[v] = 1;
        p.add_term(e, 1);
        return p;
    }

    void add_term(const Exp& e, const mpz_class& c) {
        if (c == 0) return;
        auto& slot = terms_[e];
        slot += c;
        if (slot == 0) terms_.erase(e);
    }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, mpz_class>& terms() const { return terms_; }

    friend TriPoly operator+(TriPoly a, const TriPoly& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, c);
        return a;
    }
    friend TriPoly operator-(TriPoly a, const TriPoly& b) {
        for (const auto& [e, c] : b.terms_) a.add_term(e, -c);
        return a;
    }
    friend TriPoly operator*(const TriPoly& a, const TriPoly& b) {
        TriPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        return r;
    }
    friend TriPoly operator*(const mpz_class& s, const TriPoly& a) { return constant(s) * a; }
    friend bool operator==(const TriPoly& a, const TriPoly& b) { return a.terms_ == b.terms_; }

    TriPoly derivative(Var v) const {
        TriPoly r;
        for (const auto& [e, c] : terms_) {
            if (e[v] == 0) continue;
            Exp f = e;
            --f[v];
            r.add_term(f, c * static_cast<unsigned long>(e[v]));
        }
        return r;
    }

    /// Set mu = m and return the polynomial in (x, t = nu).
    BivarPoly at_mu(const mpz_class& m) const {
        std::map<unsigned, std::map<unsigned, mpz_class>> acc;
        for (const auto& [e, c] : terms_) {
            mpz_class v = c;
            for (unsigned i = 0; i < e[MU]; ++i) v *= m;
            acc[e[X]][e[NU]] += v;
        }
        unsigned dx = 0;
        for (const auto& [i, row] : acc) dx = std::max(dx, i);
        std::vector<IntPoly> cx(dx + 1);
        for (const auto& [i, row] : acc) {
            unsigned dt = 0;
            for (const auto& [j, c] : row) dt = std::max(dt, j);
            std::vector<mpz_class> ct(dt + 1, 0);
            for (const auto& [j, c] : row) ct[j] = c;
            cx[i] = IntPoly(std::move(ct));
        }
        return BivarPoly(std::move(cx));
    }

private:
    std::map<Exp, mpz_class> terms_;
};

struct LaguerreFamily {
    unsigned n = 0;
    BivarPoly poly;            // n! L_n^{(t)}(x)
    TriPoly homogenized;       // F_n(x, nu, mu)
    std::vector<TriPoly> k;    // k[j] = j (nu + j mu), k[0] unused
};

namespace detail {

/// prod_{k=j+1}^{n} (nu + k mu)
inline TriPoly rising_block(unsigned j, unsigned n) {
    TriPoly r = TriPoly::constant(1);
    for (unsigned k = j + 1; k <= n; ++k)
        r = r * (TriPoly::var(TriPoly::NU) + mpz_class(k) * TriPoly::var(TriPoly::MU));
    return r;
}

inline TriPoly homogenized_laguerre(unsigned n) {
    // (-1)^n sum_j (-x)^j C(n,j) prod_{k>j} (nu + k mu)
    TriPoly F;
    TriPoly xpow = TriPoly::constant(1);
    for (unsigned j = 0; j <= n; ++j) {
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), n, j);
        if ((j + n) % 2 == 1) c = -c;
        F = F + c * (xpow * rising_block(j, n));
        xpow = xpow * TriPoly::var(TriPoly::X);
    }
    return F;
}

} // namespace detail

inline LaguerreFamily build_laguerre(unsigned n) {
    if (n < 1) throw DomainError("build_laguerre: need n >= 1");
    LaguerreFamily L;
    L.n = n;
    std::vector<IntPoly> cx;
    for (unsigned j = 0; j <= n; ++j) {
        IntPoly prod = IntPoly::constant(1);
        for (unsigned k = j + 1; k <= n; ++k) prod *= IntPoly{static_cast<long>(k), 1};
        mpz_class c;
        mpz_bin_uiui(c.get_mpz_t(), n, j);
        if (j % 2 == 1) c = -c;
        cx.push_back(c * prod);
    }
    L.poly = BivarPoly(std::move(cx));
    L.homogenized = detail::homogenized_laguerre(n);
    L.k.push_back(TriPoly{});
    for (unsigned j = 1; j <= n; ++j)
        L.k.push_back(mpz_class(j) *
                      (TriPoly::var(TriPoly::NU) + mpz_class(j) * TriPoly::var(TriPoly::MU)));
    return L;
}

/// Termwise evaluation of n! L_n^{(alpha)}(x) at a rational alpha, as rational coefficients.
inline std::vector<mpq_class> laguerre_termwise(unsigned n, const mpq_class& alpha) {
    std::vector<mpq_class> c;
    for (unsigned j = 0; j <= n; ++j) {
        mpq_class prod = 1;
        for (unsigned k = j + 1; k <= n; ++k) prod *= alpha + k;
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), n, j);
        c.push_back((j % 2 ? -1 : 1) * mpq_class(b) * prod);
    }
    return c;
}

struct RecurrenceRow {
    unsigned m = 0;
    bool deriv_ok = false; // x dF_m/dx - m F_m - k_m F_{m-1} = 0
    bool recur_ok = false; // F_m - (x - nu - (2m-1)mu) F_{m-1} + mu k_{m-1} F_{m-2} = 0 (m >= 2)
};

/// Checks both identities for 1 <= m <= n_max; throws ViolatedIdentity on failure.
inline std::vector<RecurrenceRow> check_recurrences(unsigned n_max) {
    if (n_max < 2) throw DomainError("check_recurrences: need n_max >= 2");
    std::vector<TriPoly> F{TriPoly::constant(1)};
    for (unsigned m = 1; m <= n_max; ++m) F.push_back(detail::homogenized_laguerre(m));
    const auto x = TriPoly::var(TriPoly::X), nu = TriPoly::var(TriPoly::NU), mu = TriPoly::var(TriPoly::MU);
    auto kk = [&](unsigned j) { return mpz_class(j) * (nu + mpz_class(j) * mu); };
    std::vector<RecurrenceRow> rows;
    for (unsigned m = 1; m <= n_max; ++m) {
        RecurrenceRow r;
        r.m = m;
        r.deriv_ok = (x * F[m].derivative(TriPoly::X) - mpz_class(m) * F[m] - kk(m) * F[m - 1]).is_zero();
        r.recur_ok = m < 2 ||
                     (F[m] - (x - nu - mpz_class(2 * m - 1) * mu) * F[m - 1] + mu * kk(m - 1) * F[m - 2]).is_zero();
        if (!r.deriv_ok || !r.recur_ok)
            throw ViolatedIdentity("check_recurrences: identity fails at m=" + std::to_string(m));
        rows.push_back(r);
    }
    return rows;
}

/// n! k_2 k_3^2 ... k_n^(n-1) at mu = 1, k_j = j (t + j).
inline IntPoly disc_closed_form(unsigned n) {
    if (n < 2) throw DomainError("disc_closed_form: need n >= 2");
    mpz_class nf;
    mpz_fac_ui(nf.get_mpz_t(), n);
    IntPoly d = IntPoly::constant(nf);
    for (unsigned j = 2; j <= n; ++j) d *= IntPoly{static_cast<long>(j) * j, static_cast<long>(j)}.pow(j - 1);
    return d;
}

/// Resultant-based discriminant of F_n(x, t, 1).
inline IntPoly disc_resultant(unsigned n) { return disc_x(build_laguerre(n).homogenized.at_mu(1)); }

inline bool disc_check(unsigned n) { return disc_resultant(n) == disc_closed_form(n); }

struct BranchLocus {
    std::vector<mpq_class> finite; // descending
    long disc_degree_t = 0;
    long mu_power = 0;             // order of vanishing of the homogeneous disc at mu = 0
};

inline BranchLocus branch_locus(unsigned n) {
    if (n < 2) throw DomainError("branch_locus: need n >= 2");
    auto disc = disc_resultant(n);
    BranchLocus b;
    b.disc_degree_t = disc.degree();
    b.mu_power = static_cast<long>(n) * (n - 1) - disc.degree();
    for (const auto& [g, m] : factor_over_Q(squarefree_part(disc)).factors) {
        if (g.degree() != 1) continue;
        b.finite.push_back(mpq_class(-g.coeff(0), g.coeff(1)));
    }
    for (auto& q : b.finite) q.canonicalize();
    std::sort(b.finite.begin(), b.finite.end(), std::greater<>());
    return b;
}

struct FiberShape {
    unsigned n = 0;
    long nu = 0;
    mpq_class repeated_root;
    unsigned multiplicity = 0;
    unsigned simple_roots = 0;
};

/// L_n^{(nu)} must have exactly one repeated root, of multiplicity |nu|.
inline FiberShape fiber_shape(unsigned n, long nu) {
    if (nu > -2 || nu < -static_cast<long>(n)) throw DomainError("fiber_shape: nu must lie in {-2..-n}");
    auto f = build_laguerre(n).poly.eval_t(nu);
    FiberShape s;
    s.n = n;
    s.nu = nu;
    unsigned repeated = 0;
    for (const auto& [u, m] : yun_squarefree(f)) {
        if (m == 1) {
            s.simple_roots += static_cast<unsigned>(u.degree());
            continue;
        }
        repeated += static_cast<unsigned>(u.degree());
        if (u.degree() != 1)
            throw ShapeViolation("fiber_shape: n=" + std::to_string(n) + " nu=" + std::to_string(nu) +
                                 " has several repeated roots");
        s.multiplicity = m;
        s.repeated_root = mpq_class(-u.coeff(0), u.coeff(1));
        s.repeated_root.canonicalize();
    }
    if (repeated != 1 || s.multiplicity != static_cast<unsigned>(-nu) || s.simple_roots + s.multiplicity != n)
        throw ShapeViolation("fiber_shape: n=" + std::to_string(n) + " nu=" + std::to_string(nu) +
                             " has multiplicity " + std::to_string(s.multiplicity));
    return s;
}

/// No common zero of F, dF/dx, dF/dnu over any branch point; throws SingularPointFound.
inline bool affine_smoothness(unsigned n) {
    if (n < 3) throw DomainError("affine_smoothness: need n >= 3");
    const auto L = build_laguerre(n);
    const auto dx = L.poly.derivative_x(), dt = L.poly.derivative_t();
    for (long nu = -2; nu >= -static_cast<long>(n); --nu) {
        IntPoly g = gcd(gcd(L.poly.eval_t(nu), dx.eval_t(nu)), dt.eval_t(nu));
        if (g.degree() > 0)
            throw SingularPointFound("affine_smoothness: n=" + std::to_string(n) + " nu=" + std::to_string(nu) +
                                     " common factor " + g.to_string());
    }
    return true;
}

struct QuadSubfield {
    long squarefree_degree = 0;
    long genus = 0;
};

/// y^2 = disc(t): degree of the squarefree part and genus of the hyperelliptic curve.
inline QuadSubfield quad_subfield(unsigned n) {
    IntPoly odd = IntPoly::constant(1);
    for (const auto& [u, m] : yun_squarefree(disc_closed_form(n)))
        if (m % 2 == 1) odd *= u;
    QuadSubfield q;
    q.squarefree_degree = odd.degree();
    q.genus = q.squarefree_degree >= 1 ? (q.squarefree_degree - 1) / 2 : 0;
    return q;
}

} // namespace hurwitz
