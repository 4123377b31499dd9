/**
 * @file hurwitz.cpp
 * @brief Command-line front end: one subcommand per verification.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hurwitz/hurwitz.hpp>

namespace {

using hurwitz::json;

enum class Format { json, csv, text };

struct RunConfig {
    Format format = Format::text;
    std::string out;
    std::size_t jobs = hurwitz::default_jobs();
    std::size_t cap = hurwitz::kDefaultElementCap;
};

struct Outcome {
    std::string body;
    bool ok = true;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void no_csv(const RunConfig& cfg, const char* what) {
    if (cfg.format == Format::csv) throw UsageError(std::string(what) + ": csv output is not available");
}

Outcome laguerre_verify(const RunConfig& cfg, unsigned max_n) {
    no_csv(cfg, "laguerre-verify");
    if (max_n < 2 || max_n > 30) throw UsageError("laguerre-verify: --max-n must be in [2, 30]");
    auto j = hurwitz::laguerre_verify_json(max_n);
    Outcome o{"", j["all_ok"].get<bool>()};
    if (cfg.format == Format::json) {
        o.body = dump(j);
        return o;
    }
    std::ostringstream os;
    for (const auto& r : j["recurrences"])
        os << "m=" << r["m"] << " deriv " << (r["deriv_ok"].get<bool>() ? "ok" : "FAIL") << " recur "
           << (r["recur_ok"].get<bool>() ? "ok" : "FAIL") << '\n';
    for (const auto& r : j["rows"])
        os << "n=" << r["n"] << " disc " << (r["disc_ok"].get<bool>() ? "ok" : "FAIL") << " fibers "
           << (r["fiber_shapes_ok"].get<bool>() ? "ok" : "FAIL") << " smooth "
           << (r["smooth_ok"].get<bool>() ? "ok" : "FAIL") << " quad_subfield_genus " << r["quad_subfield_genus"]
           << '\n';
    os << (o.ok ? "all identities hold" : "FAILED") << '\n';
    o.body = os.str();
    return o;
}

Outcome certify(const RunConfig& cfg, std::size_t n) {
    if (n < 6 || n > 9) throw UsageError("certify: --n must be in [6, 9]");
    std::vector<hurwitz::CertificationCase> cases;
    Outcome o;
    try {
        cases = hurwitz::certify_all(n, cfg.cap, cfg.jobs);
    } catch (const hurwitz::VerdictFailure& e) {
        o.ok = false;
        o.body = std::string(e.what()) + "\n";
        return o;
    }
    if (cfg.format == Format::json) {
        o.body = dump(hurwitz::certify_json(n, cases));
    } else if (cfg.format == Format::csv) {
        o.body = hurwitz::certify_csv(cases);
    } else {
        std::ostringstream os;
        for (const auto& c : cases) {
            const auto& b = c.delegated ? c.delegated->bound : c.bound;
            os << c.subgroup.name << "  index " << c.index << "  bound " << hurwitz::rational_string(b)
               << (c.verdict ? "  > 1" : "  <= 1  FAIL");
            if (c.witness) os << "  (witness nu=" << c.witness->nu << ", delta=" << c.witness->delta << ")";
            if (c.delegated) os << "  (" << c.delegated->method << ")";
            os << '\n';
        }
        auto ledger = hurwitz::discrepancy_ledger(cases);
        os << "ledger entries: " << ledger.size() << '\n';
        for (const auto& d : ledger)
            os << "  " << d.subgroup << " nu=" << d.nu << " " << d.kind << " published " << d.published << " oracle "
               << d.oracle << " (" << hurwitz::to_string(d.ambient) << ")\n";
        o.body = os.str();
    }
    return o;
}

Outcome scan(const RunConfig& cfg, unsigned n, long height, std::size_t budget) {
    no_csv(cfg, "scan");
    if (n < 1 || n > 12) throw UsageError("scan: --n must be in [1, 12]");
    auto s = hurwitz::scan(n, height, budget, cfg.jobs);
    Outcome o;
    if (cfg.format == Format::json) {
        o.body = dump(hurwitz::to_json(s));
        return o;
    }
    std::ostringstream os;
    os << "n=" << s.n << " height " << s.height_bound << " budget " << s.prime_budget << " total " << s.total << '\n'
       << "S_n " << s.counts.s_n << ", A_n " << s.counts.a_n << ", contains-A_n " << s.counts.contains_an
       << ", reducible " << s.counts.reducible << ", undetermined " << s.counts.undetermined << ", degenerate "
       << s.counts.degenerate << '\n';
    for (const auto& r : s.exceptions) {
        os << "  alpha=" << hurwitz::rational_string(r.alpha) << "  "
           << (r.degenerate ? std::string("degenerate") : hurwitz::to_string(r.galois)) << "  degrees";
        for (auto d : r.factor_degrees) os << ' ' << d;
        if (r.disc_square) os << "  square disc";
        os << '\n';
    }
    o.body = os.str();
    return o;
}

Outcome modular_table(const RunConfig& cfg, std::uint64_t max_n) {
    if (max_n < 1 || max_n > 100000) throw UsageError("modular-table: --max must be in [1, 100000]");
    Outcome o;
    if (cfg.format == Format::json) {
        o.body = dump(hurwitz::modular_json(max_n));
    } else if (cfg.format == Format::csv) {
        o.body = hurwitz::modular_csv(max_n);
    } else {
        std::ostringstream os;
        os << "n psi nu2 nu3 cusps genus\n";
        for (std::uint64_t n = 1; n <= max_n; ++n) {
            auto x = hurwitz::x0_data(n);
            os << x.n << ' ' << x.psi << ' ' << x.nu2 << ' ' << x.nu3 << ' ' << x.cusps << ' ' << x.genus << '\n';
        }
        o.body = os.str();
    }
    return o;
}

Outcome simple_cover(const RunConfig& cfg, std::uint64_t n_max, std::uint64_t g_max) {
    if (n_max < 5 || n_max > 1000) throw UsageError("simple-cover: n_max must be in [5, 1000]");
    auto j = hurwitz::simple_cover_json(n_max, g_max);
    Outcome o{"", j["only_j1_low_genus"].get<bool>()};
    if (cfg.format == Format::json) {
        o.body = dump(j);
    } else if (cfg.format == Format::csv) {
        o.body = hurwitz::simple_cover_csv(n_max, g_max);
    } else {
        std::ostringstream os;
        for (const auto& t : j["feasible"]) os << "n=" << t["n"] << " j=" << t["j"] << " g=" << t["g"] << '\n';
        os << (o.ok ? "every feasible triple has j = 1 and g <= 1" : "FAILED: feasible triple outside j = 1, g <= 1")
           << '\n';
        o.body = os.str();
    }
    return o;
}

Outcome monodromy(const RunConfig& cfg, unsigned n, bool all, std::size_t steps) {
    no_csv(cfg, "monodromy");
    if (steps < 8) throw UsageError("monodromy: --steps must be >= 8");
    if (n < 3 || n > 12) throw UsageError("monodromy: --n must be in [3, 12]");
    auto j = hurwitz::monodromy_json(n, steps, cfg.jobs);
    const long expected = static_cast<long>((n - 2) * (n - 2) / 4);
    Outcome o;
    o.ok = j["inertia_ok"].get<bool>() && j["relation_holds"].get<bool>() &&
           j["delta_infinity"] == j["expected_delta_infinity"] && j["genus"] == expected;
    if (!all) {
        json kept = json::array();
        for (const auto& l : j["loops"])
            if (l["nu"].is_string()) kept.push_back(l);
        j["loops"] = kept;
    }
    if (cfg.format == Format::json) {
        o.body = dump(j);
        return o;
    }
    std::ostringstream os;
    for (const auto& l : j["loops"])
        os << "nu=" << (l["nu"].is_string() ? l["nu"].get<std::string>() : std::to_string(l["nu"].get<long>()))
           << "  " << l["permutation"].get<std::string>() << "  min_separation " << l["min_separation"] << '\n';
    os << "delta_infinity " << j["delta_infinity"] << " (expected " << j["expected_delta_infinity"] << ")  genus "
       << j["genus"] << "  inertia " << (j["inertia_ok"].get<bool>() ? "ok" : "FAIL") << "  relation "
       << (j["relation_holds"].get<bool>() ? "ok" : "FAIL") << '\n';
    o.body = os.str();
    return o;
}

Outcome catalog(const RunConfig& cfg, std::size_t n) {
    no_csv(cfg, "catalog");
    if (n < 6 || n > 9) throw UsageError("catalog: --n must be in [6, 9]");
    Outcome o;
    if (cfg.format == Format::json) {
        o.body = dump(hurwitz::catalog_json(n));
        return o;
    }
    std::ostringstream os;
    for (const auto& e : hurwitz::catalog_for(n))
        os << e.name << "  " << hurwitz::to_string(e.family) << "  " << e.case_label << "  index " << e.index()
           << '\n';
    o.body = os.str();
    return o;
}

std::vector<hurwitz::GenusBoundRow> parse_terms(const std::string& spec) {
    std::vector<hurwitz::GenusBoundRow> rows;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw UsageError("genus-bound: term '" + item + "' is not e:c1");
        try {
            std::size_t used = 0;
            auto e = std::stoull(item.substr(0, colon), &used);
            if (used != colon) throw std::invalid_argument(item);
            auto rest = item.substr(colon + 1);
            auto c1 = std::stoull(rest, &used);
            if (used != rest.size()) throw std::invalid_argument(item);
            if (e < 1) throw UsageError("genus-bound: e must be >= 1");
            rows.push_back({0, e, 0, c1});
        } catch (const std::logic_error&) {
            throw UsageError("genus-bound: term '" + item + "' is not e:c1");
        }
    }
    if (rows.empty()) throw UsageError("genus-bound: --v needs at least one term");
    return rows;
}

Outcome genus_bound(const RunConfig& cfg, std::uint64_t index, const std::string& terms) {
    no_csv(cfg, "genus-bound");
    if (index < 1) throw UsageError("genus-bound: --index must be >= 1");
    auto r = hurwitz::make_report("", index, parse_terms(terms));
    Outcome o;
    o.body = cfg.format == Format::json ? dump(hurwitz::genus_bound_json(r)) : hurwitz::rational_string(r.bound) + "\n";
    return o;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genus bounds, Laguerre checks and specialization scans"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "Write output to this file instead of stdout");
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--cap", cfg.cap, "Element enumeration cap")
        ->envname("HURWITZ_ELEMENT_CAP")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    unsigned lv_max = 12;
    auto* lv = app.add_subcommand("laguerre-verify", "Recurrences, discriminant, fiber shapes and smoothness");
    lv->add_option("--max-n", lv_max)->capture_default_str();

    std::size_t cert_n = 7;
    auto* cert = app.add_subcommand("certify", "Genus bounds for every maximal subgroup of degree n");
    cert->add_option("--n", cert_n)->required();

    unsigned scan_n = 5;
    long scan_h = 20;
    std::size_t scan_b = hurwitz::kDefaultPrimeBudget;
    auto* sc = app.add_subcommand("scan", "Galois census of specializations up to a height bound");
    sc->add_option("--n", scan_n)->required();
    sc->add_option("--height", scan_h)->check(CLI::Range(1L, 1000L))->capture_default_str();
    sc->add_option("--budget", scan_b)->check(CLI::PositiveNumber)->capture_default_str();

    std::uint64_t mod_max = 52;
    auto* mod = app.add_subcommand("modular-table", "Genus data of X0(n)");
    mod->add_option("--max", mod_max)->capture_default_str();

    std::vector<std::uint64_t> sc_range{50, 10};
    auto* simple = app.add_subcommand("simple-cover", "Feasible (n, j, g) for simple covers");
    simple->add_option("--scan", sc_range, "n_max g_max")->expected(2)->capture_default_str();

    unsigned mono_n = 6;
    bool mono_all = false;
    std::size_t mono_steps = 64;
    auto* mono = app.add_subcommand("monodromy", "Numerical monodromy of the Laguerre cover");
    mono->add_option("--n", mono_n)->required();
    mono->add_flag("--all", mono_all, "Report every loop, not only the one around infinity");
    mono->add_option("--steps", mono_steps)->capture_default_str();

    std::size_t cat_n = 6;
    auto* cat = app.add_subcommand("catalog", "Maximal subgroups considered for degree n");
    cat->add_option("--n", cat_n)->required();

    std::uint64_t gb_index = 0;
    std::string gb_terms;
    auto* gb = app.add_subcommand("genus-bound", "Evaluate the genus lower bound for e:c1 terms");
    gb->add_option("--index", gb_index)->required();
    gb->add_option("--v", gb_terms, "Comma-separated e:c1 pairs")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

    Outcome o;
    try {
        if (lv->parsed()) o = laguerre_verify(cfg, lv_max);
        else if (cert->parsed()) o = certify(cfg, cert_n);
        else if (sc->parsed()) o = scan(cfg, scan_n, scan_h, scan_b);
        else if (mod->parsed()) o = modular_table(cfg, mod_max);
        else if (simple->parsed()) o = simple_cover(cfg, sc_range[0], sc_range[1]);
        else if (mono->parsed()) o = monodromy(cfg, mono_n, mono_all, mono_steps);
        else if (cat->parsed()) o = catalog(cfg, cat_n);
        else if (gb->parsed()) o = genus_bound(cfg, gb_index, gb_terms);
    } catch (const UsageError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const hurwitz::DomainError& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const hurwitz::HypothesisUnmet& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const hurwitz::CapExceeded& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const hurwitz::Error& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    if (cfg.out.empty()) {
        std::cout << o.body;
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot open " << cfg.out << '\n';
            return 1;
        }
        f << o.body;
    }
    if (!o.ok) std::cerr << "verdict failure\n";
    return o.ok ? 0 : 2;
}
