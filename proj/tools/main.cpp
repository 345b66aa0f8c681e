#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ancensus/census.hpp"
#include "ancensus/cubic_order.hpp"
#include "ancensus/disc_fiber.hpp"
#include "ancensus/errors.hpp"
#include "ancensus/fitting.hpp"
#include "ancensus/galois.hpp"
#include "ancensus/pila.hpp"
#include "ancensus/reducible.hpp"
#include "ancensus/store.hpp"

namespace {

using ancensus::BoxConst;
using nlohmann::json;

struct CommonOpts {
    std::string out;
    std::string format = "json";
    std::string store_path = ancensus::default_store_path();
};

void add_common(CLI::App* cmd, CommonOpts* opts) {
    cmd->add_option("--out", opts->out, "Optional export path for this run's records");
    cmd->add_option("--format", opts->format, "Export format")
        ->check(CLI::IsMember({"json", "csv"}));
}

// Appends to the store and honors --out; returns the CSV text of this run.
void finish_run(const CommonOpts& opts, const ancensus::RunRecord& record) {
    ancensus::store_append(record, opts.store_path);
    if (opts.out.empty()) return;
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw std::runtime_error("output path not writable: " + opts.out);
    if (opts.format == "csv") {
        f << ancensus::export_csv({record});
    } else {
        f << "{\"run_id\":\"" << record.run_id << "\",\"payload\":" << record.payload_json
          << ",\"diagnostics\":" << record.diagnostics_json << "}\n";
    }
}

std::vector<ancensus::Int> parse_base_coeffs(const std::vector<long long>& raw) {
    std::vector<ancensus::Int> coeffs;
    for (long long v : raw) coeffs.emplace_back(static_cast<long>(v));
    return coeffs;
}

std::vector<BoxConst> parse_sweep(const std::string& sweep, const BoxConst& fallback) {
    if (sweep.empty()) return {fallback};
    std::vector<BoxConst> out;
    std::stringstream ss(sweep);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(BoxConst::parse(item));
    if (out.empty()) throw std::domain_error("empty box sweep");
    return out;
}

int cmd_census(int n, long long xmax, double grid_ratio, const std::string& box_constant,
               const std::string& box_sweep, int primes, int fingerprint_primes, int partitions,
               const CommonOpts& opts) {
    const BoxConst base_c = BoxConst::parse(box_constant);
    const std::vector<BoxConst> sweep = parse_sweep(box_sweep, base_c);

    json rows = json::array();
    json diagnostics;
    std::uint64_t disc_zero = 0, unknown = 0, unresolved = 0;
    std::printf("%-8s %-12s %14s %12s %10s %10s\n", "c", "X", "points_on_R", "an_polys",
                "fields", "unknown");
    for (const BoxConst& c : sweep) {
        ancensus::CensusConfig cfg;
        cfg.n = n;
        cfg.xmax = xmax;
        cfg.grid_ratio = grid_ratio;
        cfg.c = c;
        cfg.prime_budget = primes;
        cfg.fingerprint_primes = fingerprint_primes;
        cfg.partitions = partitions;
        const ancensus::CensusSummary summary = ancensus::run_census(cfg);
        disc_zero += summary.diagnostics.disc_zero;
        unresolved += summary.diagnostics.unresolved_field_discs;
        for (const auto& cp : summary.checkpoints) {
            std::printf("%-8s %-12lld %14llu %12llu %10llu %10llu\n", c.to_string().c_str(),
                        cp.x, static_cast<unsigned long long>(cp.points_on_r),
                        static_cast<unsigned long long>(cp.an_polys),
                        static_cast<unsigned long long>(cp.fields),
                        static_cast<unsigned long long>(cp.unknown_verdicts));
            json row;
            row["n"] = n;
            row["x"] = cp.x;
            row["c"] = c.to_string();
            row["points_on_r"] = cp.points_on_r;
            row["an_polys"] = cp.an_polys;
            row["fields"] = cp.fields;
            row["unknown_verdicts"] = cp.unknown_verdicts;
            rows.push_back(row);
        }
        if (!summary.checkpoints.empty()) unknown += summary.checkpoints.back().unknown_verdicts;
    }
    diagnostics["disc_zero"] = disc_zero;
    diagnostics["unknown_verdicts"] = unknown;
    diagnostics["unresolved_field_discs"] = unresolved;
    diagnostics["numeric_failures"] = 0;

    json config;
    config["n"] = n;
    config["xmax"] = xmax;
    config["grid_ratio"] = grid_ratio;
    config["box_constant"] = base_c.to_string();
    config["box_sweep"] = box_sweep;
    config["primes"] = primes;
    config["fingerprint_primes"] = fingerprint_primes;
    finish_run(opts, ancensus::make_record("census", config, rows, diagnostics));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic census of alternating-group number field candidates"};
    app.require_subcommand(1);

    // census
    auto* census = app.add_subcommand("census", "Scan the search box and count fields");
    int c_n = 3;
    long long c_xmax = 1000;
    double c_ratio = 3.1622776601683795;
    std::string c_box = "4", c_sweep;
    int c_primes = 100, c_fp = 25, c_parts = 1;
    CommonOpts c_opts;
    census->add_option("--n", c_n, "Polynomial degree");
    census->add_option("--xmax", c_xmax, "Largest discriminant bound");
    census->add_option("--grid-ratio", c_ratio, "Checkpoint grid ratio");
    census->add_option("--box-constant", c_box, "Box constant c (integer or a/b)");
    census->add_option("--box-sweep", c_sweep, "Comma-separated list of box constants");
    census->add_option("--primes", c_primes, "Prime budget for certification");
    census->add_option("--fingerprint-primes", c_fp, "Primes in the dedup fingerprint");
    census->add_option("--partitions", c_parts, "Parallel partitions over a_2");
    add_common(census, &c_opts);

    // fiber
    auto* fiber = app.add_subcommand("fiber", "Point counts on one discriminant fiber");
    int f_n = 3;
    std::vector<long long> f_base;
    std::string f_box = "1";
    std::vector<long long> f_grid;
    bool f_singular = false;
    CommonOpts f_opts;
    fiber->add_option("--n", f_n, "Polynomial degree");
    fiber->add_option("--base", f_base, "Base coefficients a_2 .. a_{n-1}")->expected(-1);
    fiber->add_option("--box-constant", f_box, "Box constant c");
    fiber->add_option("--xmax", f_grid, "X grid values (repeatable)")->expected(-1);
    fiber->add_flag("--include-singular", f_singular, "Count singular points too");
    add_common(fiber, &f_opts);

    // reducible
    auto* reducible = app.add_subcommand("reducible", "Scan for geometrically reducible fibers");
    int r_n = 3;
    std::vector<long long> r_grid;
    CommonOpts r_opts;
    reducible->add_option("--n", r_n, "Polynomial degree");
    reducible->add_option("--h-grid", r_grid, "Box half-sides H (repeatable)")->expected(-1);
    add_common(reducible, &r_opts);

    // pila
    auto* pila = app.add_subcommand("pila", "Exponent formulas and the point-count bound");
    int p_n = 3, p_d = 0;
    double p_b = 0;
    CommonOpts p_opts;
    pila->add_option("--n", p_n, "Polynomial degree");
    pila->add_option("--d", p_d, "Curve degree for the bound (0 = skip)");
    pila->add_option("--bound", p_b, "Coordinate bound B for the bound");
    add_common(pila, &p_opts);

    // oracle-cubic
    auto* oracle = app.add_subcommand("oracle-cubic", "Cyclic cubic field count by conductors");
    long long o_xmax = 100;
    CommonOpts o_opts;
    oracle->add_option("--xmax", o_xmax, "Discriminant bound");
    add_common(oracle, &o_opts);

    // critical
    auto* critical = app.add_subcommand("critical", "Critical values of the trace-zero family");
    int k_n = 3;
    std::vector<long long> k_base;
    double k_tol = 1e-8;
    std::uint64_t k_seed = 0x5eed5eed5eedULL;
    CommonOpts k_opts;
    critical->add_option("--n", k_n, "Polynomial degree");
    critical->add_option("--base", k_base, "Base coefficients a_2 .. a_{n-1}")->expected(-1);
    critical->add_option("--tolerance", k_tol, "Relative tolerance for the factorization check");
    critical->add_option("--seed", k_seed, "Root-finder seed");
    add_common(critical, &k_opts);

    // fit
    auto* fit = app.add_subcommand("fit", "Least-squares growth exponent from X:count pairs");
    std::vector<std::string> fit_pairs;
    CommonOpts fit_opts;
    fit->add_option("points", fit_pairs, "Data points as X:count")->expected(-1);
    add_common(fit, &fit_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (census->parsed())
            return cmd_census(c_n, c_xmax, c_ratio, c_box, c_sweep, c_primes, c_fp, c_parts,
                              c_opts);

        if (fiber->parsed()) {
            if (f_grid.empty()) f_grid = {100, 1000, 10000};
            ancensus::FiberBase base(f_n, parse_base_coeffs(f_base));
            const BoxConst c = BoxConst::parse(f_box);
            json rows = json::array();
            std::printf("%-12s %10s\n", "X", "count");
            for (long long x : f_grid) {
                const std::uint64_t count =
                    ancensus::count_fiber_points(base, x, c, f_singular);
                std::printf("%-12lld %10llu\n", x, static_cast<unsigned long long>(count));
                json row;
                row["n"] = f_n;
                row["x"] = x;
                row["c"] = c.to_string();
                row["count"] = count;
                rows.push_back(row);
            }
            if (f_grid.size() >= 3 && !f_singular) {
                const ancensus::FiberScanResult scan =
                    ancensus::fiber_exponent_scan(base, f_grid, c);
                std::printf("slope %s  within_pila_bound %s\n",
                            ancensus::format_sig6(scan.slope).c_str(),
                            scan.within_pila_bound ? "yes" : "no");
                json row;
                row["n"] = f_n;
                row["slope"] = scan.slope;
                rows.push_back(row);
            }
            json config;
            config["n"] = f_n;
            config["base"] = f_base;
            config["box_constant"] = c.to_string();
            config["include_singular"] = f_singular;
            finish_run(f_opts, ancensus::make_record("fiber", config, rows, json::object()));
            return 0;
        }

        if (reducible->parsed()) {
            if (r_grid.empty()) r_grid = {5};
            json rows = json::array();
            std::printf("%-8s %12s %10s\n", "H", "bases", "reducible");
            for (long long h : r_grid) {
                const ancensus::ReducibleScanReport report =
                    ancensus::scan_reducible_fibers(r_n, h);
                std::printf("%-8lld %12llu %10zu\n", h,
                            static_cast<unsigned long long>(report.total_bases),
                            report.hits.size());
                json row;
                row["n"] = r_n;
                row["h"] = h;
                row["count"] = report.hits.size();
                rows.push_back(row);
            }
            if (r_grid.size() >= 3 && r_n % 2 == 1) {
                const double slope = ancensus::reducible_growth_exponent(r_n, r_grid);
                std::printf("growth exponent %s\n", ancensus::format_sig6(slope).c_str());
                json row;
                row["n"] = r_n;
                row["exponent"] = slope;
                rows.push_back(row);
            }
            json config;
            config["n"] = r_n;
            config["h_grid"] = r_grid;
            finish_run(r_opts, ancensus::make_record("reducible", config, rows, json::object()));
            return 0;
        }

        if (pila->parsed()) {
            const ancensus::ExponentSet e = ancensus::theorem_exponents(p_n);
            std::printf("n %d\n", e.n);
            std::printf("theorem_exp    %s (= %s)\n", e.theorem_exp.get_str().c_str(),
                        ancensus::format_sig6(e.theorem_exp.get_d()).c_str());
            std::printf("schmidt_exp    %s (= %s)\n", e.schmidt_exp.get_str().c_str(),
                        ancensus::format_sig6(e.schmidt_exp.get_d()).c_str());
            std::printf("malle_exp      %s\n", e.malle_exp.get_str().c_str());
            std::printf("pila_fiber_exp %s\n", e.pila_fiber_exp.get_str().c_str());
            std::printf("log_power      %d\n", e.log_power);
            json rows = json::array();
            json row;
            row["n"] = e.n;
            row["exponent"] = e.theorem_exp.get_d();
            if (p_d >= 1 && p_b > 1.0) {
                const double lg = ancensus::pila_bound_log10({p_d, p_b});
                std::printf("pila_bound_log10(d=%d, B=%s) = %s\n", p_d,
                            ancensus::format_sig6(p_b).c_str(),
                            ancensus::format_sig6(lg).c_str());
                row["bound_log10"] = lg;
            }
            rows.push_back(row);
            json config;
            config["n"] = p_n;
            config["d"] = p_d;
            config["bound"] = p_b;
            finish_run(p_opts, ancensus::make_record("pila", config, rows, json::object()));
            return 0;
        }

        if (oracle->parsed()) {
            const std::uint64_t count = ancensus::cyclic_cubic_oracle(o_xmax);
            std::printf("%llu\n", static_cast<unsigned long long>(count));
            json config;
            config["xmax"] = o_xmax;
            json row;
            row["n"] = 3;
            row["x"] = o_xmax;
            row["count"] = count;
            finish_run(o_opts,
                       ancensus::make_record("oracle-cubic", config, json::array({row}),
                                             json::object()));
            return 0;
        }

        if (critical->parsed()) {
            ancensus::FiberBase base(k_n, parse_base_coeffs(k_base));
            ancensus::RootFindConfig rcfg;
            rcfg.seed = k_seed;
            const ancensus::CriticalValueSet cvs = ancensus::critical_values(base, rcfg);
            for (const auto& v : cvs.values)
                std::printf("critical value %s + %si\n",
                            ancensus::format_sig6(v.real()).c_str(),
                            ancensus::format_sig6(v.imag()).c_str());
            const bool ok = ancensus::verify_cv_factorization(base, k_tol, rcfg);
            std::printf("factorization check: %s\n", ok ? "ok" : "FAILED");
            json config;
            config["n"] = k_n;
            config["base"] = k_base;
            config["tolerance"] = k_tol;
            config["seed"] = k_seed;
            json row;
            row["n"] = k_n;
            row["count"] = cvs.values.size();
            finish_run(k_opts, ancensus::make_record("critical", config, json::array({row}),
                                                     json::object()));
            return ok ? 0 : 2;
        }

        if (fit->parsed()) {
            std::vector<std::pair<double, double>> pts;
            for (const std::string& s : fit_pairs) {
                const size_t colon = s.find(':');
                if (colon == std::string::npos)
                    throw std::domain_error("fit points must be X:count, got " + s);
                pts.emplace_back(std::stod(s.substr(0, colon)), std::stod(s.substr(colon + 1)));
            }
            const double slope = ancensus::fit_exponent(pts);
            std::printf("%s\n", ancensus::format_sig6(slope).c_str());
            json config;
            config["points"] = fit_pairs;
            json row;
            row["slope"] = slope;
            finish_run(fit_opts,
                       ancensus::make_record("fit", config, json::array({row}), json::object()));
            return 0;
        }
    } catch (const ancensus::numeric_failure& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
