#pragma once

/**
 * @file monodromy.hpp
 * @brief Numerical root continuation for n! L_n^{(t)}(x) along loops in the
 *        t-plane, giving inertia permutations at every branch point.
 *
 * Double precision throughout. A step is accepted only when every root
 * moves by less than a third of the current root separation, which makes
 * nearest-neighbour matching unambiguous; otherwise the step is halved.
 */

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "permgroup.hpp"

namespace hurwitz {

using cplx = std::complex<double>;

class MonodromyMismatch : public Error {
public:
    using Error::Error;
};

inline constexpr std::size_t kMonodromyStepLimit = 1u << 16;

/// Coefficients (ascending in x) of n! L_n^{(t)}(x) at a complex t.
inline std::vector<cplx> laguerre_coeffs(unsigned n, cplx t) {
    std::vector<cplx> c(n + 1);
    cplx prod = 1.0;
    double binom = 1.0; // C(n, j), filled from j = n downwards
    for (unsigned j = n + 1; j-- > 0;) {
        if (j < n) {
            prod *= t + static_cast<double>(j + 1);
            binom = binom * static_cast<double>(j + 1) / static_cast<double>(n - j);
        }
        c[j] = ((j % 2) ? -binom : binom) * prod;
    }
    return c;
}

namespace detail {

inline void horner(const std::vector<cplx>& c, cplx x, cplx& f, cplx& df) {
    f = 0.0;
    df = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        df = df * x + f;
        f = f * x + c[i];
    }
}

inline double min_separation(const std::vector<cplx>& r) {
    double s = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j) s = std::min(s, std::abs(r[i] - r[j]));
    return s;
}

inline bool newton(const std::vector<cplx>& c, cplx& x) {
    double prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < 40; ++it) {
        cplx f, df;
        horner(c, x, f, df);
        if (df == 0.0) return false;
        cplx dx = f / df;
        x -= dx;
        const double rel = std::abs(dx) / std::max(1.0, std::abs(x));
        if (rel <= 1e-13) return true;
        // stalled at rounding level
        if (rel <= 1e-9 && rel >= prev / 2) return true;
        prev = rel;
    }
    return false;
}

} // namespace detail

/// All roots at t by Durand-Kerner, Newton-polished, sorted by (real, imag).
inline std::vector<cplx> roots_at(unsigned n, cplx t, double tol = 1e-12) {
    if (n == 0) return {};
    auto c = laguerre_coeffs(n, t);
    const cplx lead = c.back();
    for (auto& v : c) v /= lead;
    double radius = 0;
    for (unsigned j = 0; j < n; ++j) radius = std::max(radius, std::abs(c[j]));
    radius = 1 + radius;
    std::vector<cplx> z(n);
    for (unsigned k = 0; k < n; ++k) z[k] = radius * std::pow(cplx(0.4, 0.9), static_cast<double>(k));
    bool done = false;
    for (int it = 0; it < 2000 && !done; ++it) {
        double worst = 0;
        for (unsigned i = 0; i < n; ++i) {
            cplx f, df;
            detail::horner(c, z[i], f, df);
            cplx den = 1.0;
            for (unsigned j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            cplx dz = f / den;
            z[i] -= dz;
            worst = std::max(worst, std::abs(dz) / std::max(1.0, std::abs(z[i])));
        }
        done = worst < tol;
    }
    if (!done) throw NonConvergence("roots_at: Durand-Kerner did not converge");
    for (auto& r : z) detail::newton(c, r);
    double scale = 0;
    for (const auto& v : c) scale = std::max(scale, std::abs(v));
    for (const auto& r : z) {
        cplx f, df;
        detail::horner(c, r, f, df);
        if (std::abs(f) > 1e-6 * scale * std::pow(std::max(1.0, std::abs(r)), n))
            throw NonConvergence("roots_at: residual too large");
    }
    std::sort(z.begin(), z.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

/// A loop based at `basepoint`. Without a center it is the circle |t| = radius.
struct LoopSpec {
    std::optional<cplx> center;
    double radius = 0.4;
    std::size_t steps = 64; // initial steps per path segment
    cplx basepoint = 1.0;
    int direction = 1;      // +1 counterclockwise

    static LoopSpec around(double nu, std::size_t steps = 64) { return LoopSpec{cplx(nu, 0), 0.4, steps, 1.0, 1}; }
    /// Clockwise in t, i.e. positively oriented around infinity.
    static LoopSpec infinity(unsigned n, std::size_t steps = 64) {
        return LoopSpec{std::nullopt, 2.0 * n + 2.0, steps, 1.0, -1};
    }
};

struct MonodromyResult {
    Permutation permutation;
    double min_separation = 0;
    double max_step_drift = 0;
    double max_drift_ratio = 0; // max over steps of drift / separation, < 1/3 when converged
    std::size_t steps = 0;
    bool converged = false;
};

namespace detail {

struct Segment {
    bool arc = false;
    cplx a, b;           // line endpoints
    cplx center;         // arc data
    double r = 0, th0 = 0, th1 = 0;

    cplx at(double s) const {
        if (!arc) return a + (b - a) * s;
        return center + std::polar(r, th0 + (th1 - th0) * s);
    }
};

inline std::vector<Segment> loop_path(const LoopSpec& L) {
    const double two_pi = 2 * std::acos(-1.0);
    const double dir = L.direction >= 0 ? 1.0 : -1.0;
    std::vector<Segment> out;
    auto line = [&](cplx a, cplx b) { out.push_back(Segment{false, a, b, {}, 0, 0, 0}); };
    if (!L.center) {
        const cplx R(L.radius, 0);
        line(L.basepoint, R);
        out.push_back(Segment{true, {}, {}, 0.0, L.radius, 0.0, dir * two_pi});
        line(R, L.basepoint);
        return out;
    }
    const cplx c = *L.center, up(0, 1);
    const cplx p1 = L.basepoint + up, p2 = c + up, p3 = c + up * L.radius;
    line(L.basepoint, p1);
    line(p1, p2);
    line(p2, p3);
    const double th = std::arg(p3 - c);
    out.push_back(Segment{true, {}, {}, c, L.radius, th, th + dir * two_pi});
    line(p3, p2);
    line(p2, p1);
    line(p1, L.basepoint);
    return out;
}

} // namespace detail

/// Continues the basepoint roots around the loop; result maps label i to the label it arrives at.
inline MonodromyResult track_loop(unsigned n, const LoopSpec& L) {
    const auto start = roots_at(n, L.basepoint);
    std::vector<cplx> cur = start;
    MonodromyResult res;
    res.min_separation = detail::min_separation(cur);
    std::size_t total = 0;
    for (const auto& seg : detail::loop_path(L)) {
        const double h0 = 1.0 / static_cast<double>(std::max<std::size_t>(L.steps, 1));
        double s = 0, h = h0;
        while (s < 1.0) {
            h = std::min(h, 1.0 - s);
            const cplx t = seg.at(s + h);
            auto c = laguerre_coeffs(n, t);
            std::vector<cplx> next = cur;
            bool ok = true;
            for (auto& x : next) ok = ok && detail::newton(c, x);
            const double sep_old = detail::min_separation(cur);
            const double sep_new = ok ? detail::min_separation(next) : 0.0;
            double drift = 0;
            for (std::size_t i = 0; i < cur.size(); ++i) drift = std::max(drift, std::abs(next[i] - cur[i]));
            const double sep = std::min(sep_old, sep_new);
            if (ok && drift < sep / 3) {
                cur = std::move(next);
                s += h;
                res.min_separation = std::min(res.min_separation, sep);
                res.max_step_drift = std::max(res.max_step_drift, drift);
                res.max_drift_ratio = std::max(res.max_drift_ratio, sep > 0 ? drift / sep : 1.0);
                h = std::min(h0, 2 * h);
            } else {
                h /= 2;
            }
            if (++total > kMonodromyStepLimit)
                throw StepLimitExceeded("track_loop: more than 2^16 steps for n=" + std::to_string(n));
        }
    }
    res.steps = total;
    // match final roots to basepoint labels
    std::vector<std::uint32_t> im(n);
    std::vector<bool> used(n, false);
    const double sep0 = detail::min_separation(start);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        double bd = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            double d = std::abs(cur[i] - start[j]);
            if (d < bd) {
                bd = d;
                best = j;
            }
        }
        if (used[best] || bd > sep0 / 3) throw MonodromyMismatch("track_loop: end roots do not match start roots");
        used[best] = true;
        im[i] = static_cast<std::uint32_t>(best);
    }
    res.permutation = Permutation(std::move(im));
    res.converged = res.max_drift_ratio < 1.0 / 3;
    return res;
}

struct InfinityProfile {
    CycleType cycle_type;
    long delta = 0;
    MonodromyResult loop;
};

/// 2 floor((n-2)^2/4) - 2 + 2n - n(n-1)/2
inline long expected_delta_infinity(long n) {
    return 2 * (((n - 2) * (n - 2)) / 4) - 2 + 2 * n - n * (n - 1) / 2;
}

/// Cycle type of the big-circle monodromy and Delta_inf = n - #cycles.
inline InfinityProfile infinity_profile(unsigned n, std::size_t steps = 64) {
    InfinityProfile p;
    p.loop = track_loop(n, LoopSpec::infinity(n, steps));
    p.cycle_type = cycle_type(p.loop.permutation);
    p.delta = static_cast<long>(n) - static_cast<long>(p.cycle_type.num_cycles());
    if (p.delta != expected_delta_infinity(n))
        throw InconsistentGenus("infinity_profile: n=" + std::to_string(n) + " measured Delta_inf=" +
                                std::to_string(p.delta) + ", genus formula needs " +
                                std::to_string(expected_delta_infinity(n)));
    return p;
}

struct LemmaEvRow {
    long nu = 0;
    CycleType cycle_type;
    MonodromyResult loop;
    bool ok = false;
};

/// Each finite branch point nu in {-2..-n} must give a single |nu|-cycle.
inline std::vector<LemmaEvRow> verify_lemma_ev(unsigned n, std::size_t steps = 64) {
    if (n < 2 || n > 12) throw DomainError("verify_lemma_ev: need 2 <= n <= 12");
    std::vector<LemmaEvRow> rows;
    for (long nu = -2; nu >= -static_cast<long>(n); --nu) {
        LemmaEvRow r;
        r.nu = nu;
        r.loop = track_loop(n, LoopSpec::around(static_cast<double>(nu), steps));
        r.cycle_type = cycle_type(r.loop.permutation);
        r.ok = r.cycle_type.is_single_cycle(static_cast<std::uint32_t>(-nu));
        if (!r.ok)
            throw MonodromyMismatch("verify_lemma_ev: n=" + std::to_string(n) + " nu=" + std::to_string(nu) +
                                    " gave cycle type " + r.cycle_type.to_string());
        rows.push_back(std::move(r));
    }
    return rows;
}

struct LaguerreGenus {
    unsigned n = 0;
    std::vector<long> finite_deltas; // for nu = -2, -3, ..., -n
    long delta_infinity = 0;
    long genus = 0;
};

/// g(L_n) = 1 - n + (1/2)(sum of finite Delta + Delta_inf), all measured numerically.
inline LaguerreGenus laguerre_genus(unsigned n, std::size_t steps = 64) {
    LaguerreGenus g;
    g.n = n;
    long total = 0;
    for (const auto& r : verify_lemma_ev(n, steps)) {
        long d = static_cast<long>(n) - static_cast<long>(r.cycle_type.num_cycles());
        g.finite_deltas.push_back(d);
        total += d;
    }
    g.delta_infinity = infinity_profile(n, steps).delta;
    total += g.delta_infinity;
    if (total % 2 != 0) throw ParityError("laguerre_genus: odd total Delta");
    g.genus = 1 - static_cast<long>(n) + total / 2;
    return g;
}

struct LoopRelation {
    std::vector<Permutation> finite; // loops around -2, -3, ..., -n
    Permutation infinity;
    Permutation product;             // finite[0] * finite[1] * ... * finite[n-2]
    bool holds = false;              // product * infinity is the identity
};

/// With tails over the upper half plane the loop around -n is traversed first.
inline LoopRelation loop_relation(unsigned n, std::size_t steps = 64) {
    LoopRelation r;
    r.product = Permutation::identity(n);
    for (long nu = -2; nu >= -static_cast<long>(n); --nu) {
        r.finite.push_back(track_loop(n, LoopSpec::around(static_cast<double>(nu), steps)).permutation);
        r.product = r.product * r.finite.back();
    }
    r.infinity = track_loop(n, LoopSpec::infinity(n, steps)).permutation;
    r.holds = (r.product * r.infinity).is_identity();
    return r;
}

} // namespace hurwitz
