// overpath: command-line front end for the overpartition / lattice-path
// engine.  Subcommands: count, series, verify, render.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "overpath/budget.hpp"
#include "overpath/gf.hpp"
#include "overpath/lattice_path.hpp"
#include "overpath/overpartition.hpp"
#include "overpath/render.hpp"
#include "overpath/verify.hpp"

namespace {

using nlohmann::json;
using namespace overpath;

void apply_env_budget() {
    if (const char* env = std::getenv("OVERPATH_BUDGET")) {
        try {
            set_node_budget(std::stoull(env));
        } catch (const std::exception&) {
            throw CLI::ValidationError("OVERPATH_BUDGET",
                                       "must be a non-negative integer");
        }
    }
}

int run_count(const std::string& family, int k, int a, int n,
              const std::string& side, bool as_json) {
    long long c = 0;
    if (side == "overpartition") {
        c = count_overpartitions(overpartition_family_from_string(family), k, a, n);
    } else if (side == "path") {
        c = count_paths(path_family_from_string(family), k, a, n);
    } else {
        throw CLI::ValidationError("--side", "expected 'overpartition' or 'path'");
    }
    if (as_json) {
        json j;
        j["family"] = family;
        j["k"] = k;
        j["a"] = a;
        j["n"] = n;
        j["side"] = side;
        j["count"] = c;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << c << "\n";
    }
    return 0;
}

int run_series(const std::string& identity, int k, int a, int trunc,
               const std::string& side, bool as_json) {
    if (identity == "GT") {
        const TriSeries s = gf_gt(k, trunc);
        if (as_json) {
            json arr = json::array();
            for (const auto& [key, c] : s.terms()) {
                const auto& [l, m, n] = key;
                arr.push_back({{"l", l}, {"m", m}, {"n", n},
                               {"coeff", c.convert_to<long long>()}});
            }
            std::cout << json{{"identity", "GT"}, {"k", k}, {"trunc", trunc},
                              {"terms", arr}}.dump() << "\n";
        } else {
            std::cout << "l\tm\tn\tcoeff\n";
            for (const auto& [key, c] : s.terms()) {
                const auto& [l, m, n] = key;
                std::cout << l << "\t" << m << "\t" << n << "\t" << c << "\n";
            }
        }
        return 0;
    }
    const Identity id = identity_from_string(identity);
    const bool want_sum = side == "sum" || side == "both";
    const bool want_prod = side == "prod" || side == "both";
    if (!want_sum && !want_prod)
        throw CLI::ValidationError("--side", "expected 'sum', 'prod' or 'both'");
    Series sum = Series::one(trunc), prod = Series::one(trunc);
    if (want_sum) sum = gf_sum(id, k, a, trunc);
    if (want_prod) prod = gf_prod(id, k, a, trunc);
    if (as_json) {
        json j;
        j["identity"] = identity;
        j["k"] = k;
        j["a"] = a;
        j["trunc"] = trunc;
        j["side"] = side;
        if (want_sum) {
            json arr = json::array();
            for (int n = 0; n <= trunc; ++n)
                arr.push_back(sum[n].convert_to<long long>());
            j["sum"] = arr;
        }
        if (want_prod) {
            json arr = json::array();
            for (int n = 0; n <= trunc; ++n)
                arr.push_back(prod[n].convert_to<long long>());
            j["prod"] = arr;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "n";
        if (want_sum) std::cout << "\tsum";
        if (want_prod) std::cout << "\tprod";
        if (want_sum && want_prod) std::cout << "\tdiff";
        std::cout << "\n";
        for (int n = 0; n <= trunc; ++n) {
            std::cout << n;
            if (want_sum) std::cout << "\t" << sum[n];
            if (want_prod) std::cout << "\t" << prod[n];
            if (want_sum && want_prod) std::cout << "\t" << (sum[n] - prod[n]);
            std::cout << "\n";
        }
    }
    return 0;
}

int run_verify(const std::string& theorem, const VerifyBounds& bounds,
               bool as_json) {
    const VerificationReport rep = verify_theorem(theorem, bounds);
    if (as_json) {
        std::cout << rep.to_json().dump() << "\n";
    } else {
        std::cout << "theorem " << rep.theorem << ": " << rep.description
                  << "\n";
        std::cout << "cells: " << rep.cells.size() << "  passed: "
                  << rep.passed << "  failed: " << rep.failed << "\n";
        if (!rep.all_pass()) {
            const VerifyCell& c =
                rep.cells[static_cast<std::size_t>(rep.first_failure())];
            std::cout << "first failing cell:";
            for (const auto& [name, v] : c.params)
                std::cout << " " << name << "=" << v;
            std::cout << " |";
            for (const auto& [name, v] : c.values)
                std::cout << " " << name << "=" << v;
            std::cout << "\n";
        }
        std::cout << (rep.all_pass() ? "PASS" : "FAIL") << "\n";
    }
    return rep.all_pass() ? 0 : 1;
}

int run_render(const std::string& encoding, const std::string& format,
               bool as_json) {
    const LatticePath p = LatticePath::from_text(encoding);
    std::string why;
    if (!validate(p, &why))
        throw CLI::ValidationError("--path", "invalid path: " + why);
    if (as_json) {
        std::cout << path_json(p).dump() << "\n";
    } else if (format == "ascii") {
        std::cout << render_ascii(p);
    } else if (format == "svg") {
        std::cout << render_svg(p);
    } else {
        throw CLI::ValidationError("--format", "expected 'ascii' or 'svg'");
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics for overpartitions and four-step "
                 "lattice paths"};
    app.require_subcommand(1);

    int k = 2, a = 1, n = 0, nmax = 15, kmax = 3, trunc = 10;
    std::string family = "B", identity = "AB", theorem, side, format = "ascii",
                path_text;
    bool as_json = false;
    std::uint64_t budget = 0;
    bool budget_set = false;

    auto* cnt = app.add_subcommand("count", "count one family at (k,a,n)");
    cnt->add_option("--family", family,
                    "overpartition family {B,A,C,D,O,OverO} or path family "
                    "{E,F,H,J,S}");
    cnt->add_option("--k", k, "modulus parameter k >= 2");
    cnt->add_option("--a", a, "residue parameter a");
    cnt->add_option("--n", n, "weight n >= 0");
    cnt->add_option("--side", side, "overpartition | path")->required();

    auto* ser = app.add_subcommand("series",
                                   "print generating-function coefficients");
    ser->add_option("--identity", identity, "AB | D | H | J | O | OverO | GT");
    ser->add_option("--k", k, "modulus parameter k >= 2");
    ser->add_option("--a", a, "residue parameter a");
    ser->add_option("--trunc", trunc, "truncation order (coefficients 0..trunc)");
    ser->add_option("--side", side, "sum | prod | both")->default_val("sum");

    auto* ver = app.add_subcommand("verify",
                                   "cross-check a theorem over a grid");
    ver->add_option("--theorem", theorem,
                    "one of 1.1 .. 1.9, 3.2, 6.1")->required();
    ver->add_option("--k", k, "fix k instead of sweeping 2..kmax");
    ver->add_option("--kmax", kmax, "upper end of the k sweep");
    ver->add_option("--nmax", nmax, "weight bound");

    auto* ren = app.add_subcommand("render", "draw a lattice path");
    ren->add_option("--path", path_text,
                    "path encoding, e.g. k=4,a=2:dndndundddnd "
                    "(u=NE, d=SE, n=N, e=E)")->required();
    ren->add_option("--format", format, "ascii | svg");

    for (auto* sub : {cnt, ser, ver, ren}) {
        sub->add_flag("--json", as_json, "machine-readable JSON output");
        sub->add_option("--budget", budget,
                        "abort enumeration after this many search nodes "
                        "(0 = unlimited)")
            ->each([&](const std::string&) { budget_set = true; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        apply_env_budget();
        if (budget_set) set_node_budget(budget);
        if (cnt->parsed()) return run_count(family, k, a, n, side, as_json);
        if (ser->parsed()) return run_series(identity, k, a, trunc, side, as_json);
        if (ver->parsed()) {
            VerifyBounds b;
            b.k = ver->count("--k") ? k : 0;
            b.kmax = kmax;
            b.nmax = nmax;
            return run_verify(theorem, b, as_json);
        }
        if (ren->parsed()) return run_render(path_text, format, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
