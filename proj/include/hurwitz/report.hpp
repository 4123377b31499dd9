#pragma once

/**
 * @file report.hpp
 * @brief JSON and CSV forms of every result type. Keys come out sorted and
 *        rationals are written as "p/q" strings, so equal inputs give
 *        byte-identical output.
 */

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "certifier.hpp"
#include "laguerre.hpp"
#include "modular.hpp"
#include "monodromy.hpp"
#include "parallel.hpp"
#include "rhgenus.hpp"
#include "scanner.hpp"
#include "simplecover.hpp"

namespace hurwitz {

using json = nlohmann::json;

inline json to_json(const CycleType& ct) { return json(ct.parts); }

inline json to_json(const IntPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.get_str());
    return a;
}

inline json to_json(const CatalogEntry& e) {
    json j;
    j["name"] = e.name;
    j["degree"] = e.degree;
    j["family"] = to_string(e.family);
    j["case_label"] = e.case_label;
    j["generic"] = e.is_generic();
    j["order"] = e.is_generic() ? json(nullptr) : json(e.expected_order);
    j["index"] = e.index();
    return j;
}

inline json catalog_json(std::size_t n) {
    json j;
    j["n"] = n;
    j["entries"] = json::array();
    for (const auto& e : catalog_for(n)) j["entries"].push_back(to_json(e));
    return j;
}

inline json to_json(const C1Entry& r) {
    auto opt = [](const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); };
    json j;
    j["nu"] = r.nu;
    j["e"] = r.m;
    j["d"] = r.d;
    j["oracle"] = opt(r.oracle);
    j["closed_form"] = opt(r.closed_form);
    j["profile_fixed"] = opt(r.profile_fixed);
    j["oracle_an"] = opt(r.oracle_an);
    j["used"] = r.used;
    if (r.published) {
        j["published"] = {{"value", r.published->value}, {"upper_bound", r.published->upper_bound}};
    } else {
        j["published"] = nullptr;
    }
    return j;
}

inline json to_json(const Discrepancy& d) {
    return json{{"n", d.n},          {"subgroup", d.subgroup}, {"nu", d.nu},
                {"kind", d.kind},    {"published", d.published},       {"oracle", d.oracle},
                {"ambient", to_string(d.ambient)}};
}

inline json to_json(const CertificationCase& c) {
    json j;
    j["n"] = c.n;
    j["subgroup"] = to_json(c.subgroup);
    j["V"] = c.V;
    j["index"] = c.index;
    j["c1"] = json::array();
    for (const auto& r : c.c1) j["c1"].push_back(to_json(r));
    j["bound"] = rational_string(c.bound);
    j["verdict"] = c.verdict;
    j["witness"] = c.witness ? json{{"nu", c.witness->nu}, {"delta", c.witness->delta}} : json(nullptr);
    j["delegated"] = c.delegated ? json{{"method", c.delegated->method}, {"bound", rational_string(c.delegated->bound)}}
                                 : json(nullptr);
    j["published_ambient"] = to_string(c.published_ambient);
    j["published_bound"] = c.published_bound ? json(rational_string(*c.published_bound)) : json(nullptr);
    j["oracle_bound_published_convention"] =
        c.oracle_bound_published_convention ? json(rational_string(*c.oracle_bound_published_convention)) : json(nullptr);
    j["published_bound_dominated"] = c.published_bound_dominated;
    j["notes"] = c.notes;
    return j;
}

inline json certify_json(std::size_t n, const std::vector<CertificationCase>& cases) {
    json j;
    j["n"] = n;
    j["cases"] = json::array();
    bool all = true;
    for (const auto& c : cases) {
        j["cases"].push_back(to_json(c));
        all = all && c.verdict;
    }
    j["ledger"] = json::array();
    for (const auto& d : discrepancy_ledger(cases)) j["ledger"].push_back(to_json(d));
    j["all_verdicts"] = all;
    return j;
}

inline std::string certify_csv(const std::vector<CertificationCase>& cases) {
    std::ostringstream os;
    os << "n,subgroup,index,nu,e,d,oracle,closed_form,profile_fixed,oracle_an,published,published_upper_bound,bound,verdict\n";
    auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string(); };
    for (const auto& c : cases)
        for (const auto& r : c.c1)
            os << c.n << ',' << '"' << c.subgroup.name << '"' << ',' << c.index << ',' << r.nu << ',' << r.m << ','
               << r.d << ',' << opt(r.oracle) << ',' << opt(r.closed_form) << ',' << opt(r.profile_fixed) << ','
               << opt(r.oracle_an) << ',' << (r.published ? std::to_string(r.published->value) : "") << ','
               << (r.published ? (r.published->upper_bound ? "1" : "0") : "") << ','
               << rational_string(c.delegated ? c.delegated->bound : c.bound) << ',' << (c.verdict ? 1 : 0) << '\n';
    return os.str();
}

inline json to_json(const SpecializationReport& r) {
    json j;
    j["n"] = r.n;
    j["alpha"] = rational_string(r.alpha);
    j["cleared"] = to_json(r.cleared);
    j["degenerate"] = r.degenerate;
    j["factor_degrees"] = r.factor_degrees;
    j["disc_square"] = r.disc_square;
    j["galois"] = to_string(r.galois);
    j["evidence"] = json::array();
    for (const auto& e : r.evidence)
        j["evidence"].push_back({{"prime", e.prime}, {"cycle_type", to_json(e.cycle_type)}, {"role", e.role}});
    j["budget_used"] = r.budget_used;
    return j;
}

inline json to_json(const ScanResult& s) {
    json j;
    j["params"] = {{"n", s.n}, {"height_bound", s.height_bound}, {"prime_budget", s.prime_budget}, {"total", s.total}};
    j["counts"] = {{"s_n", s.counts.s_n},         {"a_n", s.counts.a_n},
                   {"contains_an", s.counts.contains_an}, {"reducible", s.counts.reducible},
                   {"undetermined", s.counts.undetermined}, {"degenerate", s.counts.degenerate}};
    j["exceptions"] = json::array();
    for (const auto& r : s.exceptions) j["exceptions"].push_back(to_json(r));
    return j;
}

inline json to_json(const X0Data& x) {
    return json{{"n", x.n}, {"psi", x.psi}, {"nu2", x.nu2}, {"nu3", x.nu3}, {"cusps", x.cusps}, {"genus", x.genus}};
}

inline json modular_json(std::uint64_t max_n) {
    json j;
    j["max"] = max_n;
    j["rows"] = json::array();
    for (std::uint64_t n = 1; n <= max_n; ++n) j["rows"].push_back(to_json(x0_data(n)));
    return j;
}

inline std::string modular_csv(std::uint64_t max_n) {
    std::ostringstream os;
    os << "n,psi,nu2,nu3,cusps,genus\n";
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        auto x = x0_data(n);
        os << x.n << ',' << x.psi << ',' << x.nu2 << ',' << x.nu3 << ',' << x.cusps << ',' << x.genus << '\n';
    }
    return os.str();
}

inline json simple_cover_json(std::uint64_t n_max, std::uint64_t g_max) {
    json j;
    j["params"] = {{"n_max", n_max}, {"g_max", g_max}};
    j["feasible"] = json::array();
    bool only_j1 = true;
    for (const auto& t : feasibility_scan(n_max, g_max)) {
        j["feasible"].push_back({{"n", t.n}, {"j", t.j}, {"g", t.g}});
        only_j1 = only_j1 && t.j == 1 && t.g <= 1;
    }
    j["only_j1_low_genus"] = only_j1;
    return j;
}

inline std::string simple_cover_csv(std::uint64_t n_max, std::uint64_t g_max) {
    std::ostringstream os;
    os << "n,j,g\n";
    for (const auto& t : feasibility_scan(n_max, g_max)) os << t.n << ',' << t.j << ',' << t.g << '\n';
    return os.str();
}

inline json to_json(const MonodromyResult& m) {
    return json{{"permutation", m.permutation.to_string()},
                {"cycle_type", to_json(cycle_type(m.permutation))},
                {"min_separation", m.min_separation},
                {"max_step_drift", m.max_step_drift},
                {"max_drift_ratio", m.max_drift_ratio},
                {"steps", m.steps},
                {"converged", m.converged}};
}

inline json genus_bound_json(const GenusBoundReport& r) {
    json j;
    j["index"] = r.index;
    j["rows"] = json::array();
    for (const auto& row : r.rows) j["rows"].push_back({{"e", row.e}, {"d", row.d}, {"c1", row.c1}});
    j["bound"] = rational_string(r.bound);
    j["verdict"] = r.verdict;
    return j;
}

inline json monodromy_json(unsigned n, std::size_t steps = 64, std::size_t jobs = 1) {
    std::vector<long> nus;
    for (long nu = -2; nu >= -static_cast<long>(n); --nu) nus.push_back(nu);
    nus.push_back(0); // 0 stands for the loop around infinity
    auto loops = parallel_map(nus, jobs, [&](long nu) {
        return track_loop(n, nu == 0 ? LoopSpec::infinity(n, steps) : LoopSpec::around(static_cast<double>(nu), steps));
    });
    json j;
    j["n"] = n;
    j["basepoint"] = 1;
    j["steps"] = steps;
    j["loops"] = json::array();
    auto product = Permutation::identity(n);
    long total = 0;
    bool inertia_ok = true;
    for (std::size_t i = 0; i < nus.size(); ++i) {
        json row = to_json(loops[i]);
        row["nu"] = nus[i] == 0 ? json("inf") : json(nus[i]);
        j["loops"].push_back(row);
        const auto ct = cycle_type(loops[i].permutation);
        total += static_cast<long>(n) - static_cast<long>(ct.num_cycles());
        if (nus[i] != 0) {
            inertia_ok = inertia_ok && ct.is_single_cycle(static_cast<std::uint32_t>(-nus[i]));
            product = product * loops[i].permutation;
        }
    }
    const auto& inf = loops.back();
    j["delta_infinity"] = static_cast<long>(n) - static_cast<long>(cycle_type(inf.permutation).num_cycles());
    j["expected_delta_infinity"] = expected_delta_infinity(n);
    j["genus"] = total % 2 == 0 ? json(1 - static_cast<long>(n) + total / 2) : json(nullptr);
    j["inertia_ok"] = inertia_ok;
    j["relation_holds"] = (product * inf.permutation).is_identity();
    return j;
}

inline json laguerre_verify_json(unsigned max_n) {
    json j;
    j["max_n"] = max_n;
    j["recurrences"] = json::array();
    bool all = true;
    for (const auto& r : check_recurrences(max_n)) {
        j["recurrences"].push_back({{"m", r.m}, {"deriv_ok", r.deriv_ok}, {"recur_ok", r.recur_ok}});
        all = all && r.deriv_ok && r.recur_ok;
    }
    j["rows"] = json::array();
    for (unsigned n = 2; n <= max_n; ++n) {
        json row;
        row["n"] = n;
        row["disc_ok"] = disc_check(n);
        bool fibers = true, smooth = true;
        if (n >= 3) {
            for (long nu = -2; nu >= -static_cast<long>(n); --nu) {
                try {
                    fiber_shape(n, nu);
                } catch (const ShapeViolation&) {
                    fibers = false;
                }
            }
            try {
                affine_smoothness(n);
            } catch (const SingularPointFound&) {
                smooth = false;
            }
        }
        row["fiber_shapes_ok"] = fibers;
        row["smooth_ok"] = smooth;
        row["quad_subfield_genus"] = quad_subfield(n).genus;
        all = all && row["disc_ok"].get<bool>() && fibers && smooth;
        j["rows"].push_back(row);
    }
    j["all_ok"] = all;
    return j;
}

} // namespace hurwitz
