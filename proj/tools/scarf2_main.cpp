#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "scarf2/closed_forms.hpp"
#include "scarf2/identities.hpp"
#include "scarf2/quadrature.hpp"
#include "scarf2/scarf_model.hpp"
#include "scarf2/table_io.hpp"
#include "scarf2/verification.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

using scarf2::Complex;
using scarf2::io::Cell;
using scarf2::io::Table;
namespace model = scarf2::model;
namespace closed = scarf2::closed;
namespace quadns = scarf2::quad;
namespace verif = scarf2::verification;
namespace ident = scarf2::identities;

struct OutputOptions {
    std::string format = "csv";
    std::string path = "-"; // stdout
    std::uint64_t seed = 0;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", out.path, "Output file, '-' for stdout")
        ->capture_default_str();
    cmd->add_option("--seed", out.seed, "Random seed for spot checks")->capture_default_str();
}

quadns::QuadratureControls quadrature_controls(std::optional<double> tol_option) {
    quadns::QuadratureControls controls;
    if (const char* env = std::getenv("SCARF2_QUAD_TOL")) {
        try {
            controls.target_abs_tol = std::stod(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("SCARF2_QUAD_TOL", "not a number");
        }
    }
    if (tol_option)
        controls.target_abs_tol = *tol_option;
    controls.validate();
    return controls;
}

void write_output(const Table& table, const OutputOptions& out, nlohmann::json meta) {
    std::string payload;
    if (out.format == "json") {
        meta["version"] = kVersion;
        meta["seed"] = out.seed;
        payload = scarf2::io::to_json(table, std::move(meta)).dump(2);
        payload += '\n';
    } else {
        payload = scarf2::io::to_csv(table);
    }
    if (out.path == "-") {
        std::cout << payload;
    } else {
        std::ofstream file(out.path, std::ios::binary);
        if (!file)
            throw std::runtime_error("cannot open output file '" + out.path + "'");
        file << payload;
    }
}

Complex parse_complex_option(const std::string& text, const char* name) {
    try {
        return scarf2::parse_complex(text);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(name, e.what());
    }
}

// ---------------------------------------------------------------- spectrum

int run_spectrum(const std::string& alpha_s, const std::string& beta_s,
                 const std::string& parity, const OutputOptions& out) {
    const Complex alpha = parse_complex_option(alpha_s, "--alpha");
    const Complex beta = parse_complex_option(beta_s, "--beta");
    const model::ScarfParams params{alpha, beta};

    Table table;
    table.columns = {"n", "quasi_parity"};
    Table::add_complex_columns(table.columns, "energy");
    int total = 0;
    for (int q : {+1, -1}) {
        if ((parity == "+1" && q != +1) || (parity == "-1" && q != -1))
            continue;
        const int count = model::bound_state_count(params, q);
        total += count;
        for (int n = 0; n < count; ++n) {
            const Complex e = model::energy(params, model::StateIndex(n, q));
            std::vector<Cell> row{static_cast<std::int64_t>(n), static_cast<std::int64_t>(q)};
            Table::add_complex_cells(row, e);
            table.add_row(std::move(row));
        }
    }
    if (total == 0)
        std::cerr << "note: no bound states for alpha=" << scarf2::format_complex(alpha)
                  << ", beta=" << scarf2::format_complex(beta) << "\n";
    write_output(table, out,
                 {{"command", "spectrum"},
                  {"params",
                   {{"alpha", scarf2::format_complex(alpha)},
                    {"beta", scarf2::format_complex(beta)},
                    {"parity", parity}}}});
    return kExitOk;
}

// -------------------------------------------------------------- pseudonorm

int run_pseudonorm(const std::string& alpha_s, const std::string& beta_s, int delta_sign,
                   bool check, std::optional<double> quad_tol, const OutputOptions& out) {
    const Complex alpha = parse_complex_option(alpha_s, "--alpha");
    const Complex beta = parse_complex_option(beta_s, "--beta");
    const model::ScarfParams params{alpha, beta};
    if (!model::is_pt_family(params))
        throw CLI::ValidationError("--alpha/--beta",
                                   "pseudonorm requires real beta and real or imaginary alpha");
    const auto controls = quadrature_controls(quad_tol);

    Table table;
    table.columns = {"n"};
    Table::add_complex_columns(table.columns, "value");
    table.columns.emplace_back("sign");
    table.columns.emplace_back("vanishing_reason");
    if (check)
        table.columns.emplace_back("oracle_residual");

    const int count = model::bound_state_count(params, +1);
    for (int n = 0; n < count; ++n) {
        const auto r = closed::pseudo_inner(alpha, beta.real(), delta_sign, n, n);
        std::vector<Cell> row{static_cast<std::int64_t>(n)};
        Table::add_complex_cells(row, r.value);
        row.emplace_back(static_cast<std::int64_t>(r.sign));
        std::string reason;
        if (r.vanishing_reason == closed::VanishingReason::SineFactorZero)
            reason = "sine_factor_zero";
        else if (r.vanishing_reason == closed::VanishingReason::OffDiagonal)
            reason = "off_diagonal";
        row.emplace_back(reason);
        if (check) {
            const model::StateIndex ket(n, +1), bra(n, delta_sign);
            const auto est = quadns::overlap_numeric(params, bra, ket, true, true, {}, controls);
            row.emplace_back(std::abs(est.value - r.value));
        }
        table.add_row(std::move(row));
    }
    write_output(table, out,
                 {{"command", "pseudonorm"},
                  {"params",
                   {{"alpha", scarf2::format_complex(alpha)},
                    {"beta", scarf2::format_complex(beta)},
                    {"delta_sign", delta_sign},
                    {"check", check}}}});
    return kExitOk;
}

// ------------------------------------------------------------------ verify

verif::GridSpec load_grid_file(const std::string& path) {
    std::ifstream file(path);
    if (!file)
        throw std::runtime_error("cannot open grid file '" + path + "'");
    verif::GridSpec grid;
    std::string line;
    int lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::string trimmed;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c)))
                trimmed += c;
        if (trimmed.empty())
            continue;
        const auto comma = trimmed.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected 'alpha,beta'");
        try {
            grid.points.emplace_back(scarf2::parse_complex(trimmed.substr(0, comma)),
                                     scarf2::parse_complex(trimmed.substr(comma + 1)));
        } catch (const std::exception& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return grid;
}

int run_verify(const std::string& grid_file, double tol, std::optional<double> quad_tol,
               const OutputOptions& out) {
    const verif::GridSpec grid =
        grid_file.empty() ? verif::standard_grid() : load_grid_file(grid_file);
    verif::Tolerances tolerances;
    tolerances.abs_tol = tol;
    const auto controls = quadrature_controls(quad_tol);
    const auto report = verif::verify_closed_forms(grid, tolerances, controls);

    Table table;
    table.columns = {"case_id"};
    Table::add_complex_columns(table.columns, "closed");
    Table::add_complex_columns(table.columns, "oracle");
    table.columns.emplace_back("abs_diff");
    table.columns.emplace_back("pass");
    table.columns.emplace_back("note");
    for (const auto& e : report.entries) {
        std::vector<Cell> row{e.case_id};
        Table::add_complex_cells(row, e.closed_value);
        Table::add_complex_cells(row, e.oracle_value);
        row.emplace_back(e.abs_diff);
        row.emplace_back(std::string(e.pass ? "true" : "false"));
        row.emplace_back(e.note);
        table.add_row(std::move(row));
    }
    write_output(table, out,
                 {{"command", "verify"},
                  {"params",
                   {{"grid", grid_file.empty() ? "default" : grid_file},
                    {"tol", tol},
                    {"entries", report.entries.size()},
                    {"max_abs_diff", report.max_abs_diff},
                    {"all_pass", report.all_pass}}}});
    std::cerr << "verify: " << report.entries.size() << " comparisons, max |diff| = "
              << report.max_abs_diff << (report.all_pass ? " (all pass)\n" : " (FAILURES)\n");
    return report.all_pass ? kExitOk : kExitVerifyFailed;
}

// ------------------------------------------------------------------- sweep

std::vector<Complex> parse_path_spec(const std::string& spec) {
    std::vector<Complex> path;
    std::stringstream ss(spec);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty())
            continue;
        const bool real_seg = part.rfind("real:", 0) == 0;
        const bool imag_seg = part.rfind("imag:", 0) == 0;
        if (real_seg || imag_seg) {
            // "real:a..b:steps" -> inclusive linear segment
            const std::string body = part.substr(5);
            const auto dots = body.find("..");
            const auto colon = body.find(':', dots == std::string::npos ? 0 : dots + 2);
            if (dots == std::string::npos || colon == std::string::npos)
                throw std::runtime_error("malformed path segment '" + part + "'");
            const double from = std::stod(body.substr(0, dots));
            const double to = std::stod(body.substr(dots + 2, colon - dots - 2));
            const int steps = std::stoi(body.substr(colon + 1));
            if (steps < 1)
                throw std::runtime_error("path segment needs at least one step");
            for (int i = 0; i < steps; ++i) {
                const double t = steps == 1 ? from : from + (to - from) * i / (steps - 1);
                path.push_back(real_seg ? Complex(t, 0.0) : Complex(0.0, t));
            }
        } else {
            path.push_back(scarf2::parse_complex(part));
        }
    }
    if (path.empty())
        throw std::runtime_error("empty sweep path");
    return path;
}

int run_sweep(double beta, const std::string& path_spec, int n, std::optional<double> quad_tol,
              const OutputOptions& out) {
    std::vector<Complex> path;
    try {
        path = parse_path_spec(path_spec);
    } catch (const std::exception& e) {
        throw CLI::ValidationError("--path", e.what());
    }
    const auto controls = quadrature_controls(quad_tol);
    const auto records = verif::pt_breaking_sweep(beta, path, n, controls);

    Table table;
    Table::add_complex_columns(table.columns, "alpha");
    table.columns.emplace_back("beta");
    table.columns.emplace_back("n");
    table.columns.emplace_back("quasi_parity");
    table.columns.emplace_back("status");
    Table::add_complex_columns(table.columns, "energy");
    table.columns.emplace_back("im_energy_formula");
    table.columns.emplace_back("im_energy_ratio");
    Table::add_complex_columns(table.columns, "pseudo_norm");
    table.columns.emplace_back("pseudo_norm_sign");
    table.columns.emplace_back("oracle_residual");
    for (const auto& r : records) {
        std::vector<Cell> row;
        Table::add_complex_cells(row, r.alpha);
        row.emplace_back(r.beta);
        row.emplace_back(static_cast<std::int64_t>(r.n));
        row.emplace_back(static_cast<std::int64_t>(r.quasi_parity));
        row.emplace_back(std::string(r.has_state ? "ok" : "no_state"));
        Table::add_complex_cells(row, r.energy);
        row.emplace_back(r.im_energy_formula);
        row.emplace_back(r.im_energy_ratio);
        Table::add_complex_cells(row, r.pseudo_norm);
        row.emplace_back(static_cast<std::int64_t>(r.pseudo_norm_sign));
        row.emplace_back(r.oracle_residual);
        table.add_row(std::move(row));
    }
    write_output(table, out,
                 {{"command", "sweep"},
                  {"params", {{"beta", beta}, {"path", path_spec}, {"n", n}}}});
    return kExitOk;
}

// -------------------------------------------------------------- identities

int run_identities(int max_n, bool negate_rhs, const OutputOptions& out) {
    Table table;
    table.columns = {"check", "n", "m", "ok", "detail"};
    bool all_ok = true;

    for (int l = 0; l <= 20; ++l) {
        for (int j = 0; j <= l; ++j) {
            const ident::Rational got = ident::binomial_moment_sum(l, j);
            ident::Rational want = 0;
            if (j == l) {
                ident::BigInt f = 1;
                for (int i = 2; i <= l; ++i)
                    f *= i;
                want = ident::Rational(l % 2 == 0 ? f : -f);
            }
            if (got != want) {
                all_ok = false;
                table.add_row({std::string("moment"), static_cast<std::int64_t>(l),
                               static_cast<std::int64_t>(j), std::string("false"),
                               got.str() + " != " + want.str()});
            }
        }
    }
    table.add_row({std::string("moment_sum_l<=20"), static_cast<std::int64_t>(20),
                   static_cast<std::int64_t>(-1), std::string(all_ok ? "true" : "false"),
                   std::string("")});

    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= n; ++m) {
            const auto proof = ident::new_sum_rule_prove(n, m, negate_rhs);
            if (!proof.holds)
                all_ok = false;
            std::string detail;
            if (!proof.holds)
                detail = "coefficient of a^" + std::to_string(proof.bad_degree.first) + " b^" +
                         std::to_string(proof.bad_degree.second) + " = " +
                         proof.bad_coefficient.str();
            table.add_row({std::string("sum_rule"), static_cast<std::int64_t>(n),
                           static_cast<std::int64_t>(m),
                           std::string(proof.holds ? "true" : "false"), detail});
        }
    }

    write_output(table, out,
                 {{"command", "identities"},
                  {"params", {{"max_n", max_n}}},
                  {"all_pass", all_ok}});
    return all_ok ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form spectra, pseudo-norms, overlap integrals and "
                 "symmetry-breaking diagnostics for the complex Scarf II potential, "
                 "cross-checked against an adaptive quadrature oracle"};
    app.require_subcommand(1);
    std::optional<double> quad_tol;
    app.add_option("--quad-tol", quad_tol,
                   "Quadrature oracle tolerance (overrides SCARF2_QUAD_TOL)");

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "Bound-state energies for both branches");
    std::string sp_alpha, sp_beta, sp_parity = "both";
    OutputOptions sp_out;
    spectrum->add_option("--alpha", sp_alpha, "Complex literal, e.g. -3, 0.5i, -1.5-0.7i")
        ->required();
    spectrum->add_option("--beta", sp_beta, "Complex literal")->required();
    spectrum->add_option("--parity", sp_parity, "Quasi-parity branch")
        ->check(CLI::IsMember({"+1", "-1", "both"}))
        ->capture_default_str();
    add_output_options(spectrum, sp_out);

    // pseudonorm
    auto* pseudonorm =
        app.add_subcommand("pseudonorm", "Diagonal reflected-conjugated products per level");
    std::string pn_alpha, pn_beta;
    int pn_delta_sign = +1;
    bool pn_check = false;
    OutputOptions pn_out;
    pseudonorm->add_option("--alpha", pn_alpha, "Complex literal")->required();
    pseudonorm->add_option("--beta", pn_beta, "Real value")->required();
    pseudonorm->add_option("--delta-sign", pn_delta_sign, "Bra quasi-parity relative to ket")
        ->check(CLI::IsMember({+1, -1}))
        ->capture_default_str();
    pseudonorm->add_flag("--check", pn_check, "Add a quadrature residual column");
    add_output_options(pseudonorm, pn_out);

    // verify
    auto* verify = app.add_subcommand("verify", "Closed forms against the quadrature oracle");
    std::string vf_grid;
    double vf_tol = 1e-8;
    OutputOptions vf_out;
    verify->add_option("--grid-file", vf_grid, "File of 'alpha,beta' lines ('#' comments)");
    verify->add_option("--tol", vf_tol, "Absolute comparison tolerance")->capture_default_str();
    add_output_options(verify, vf_out);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Symmetry-breaking sweep along an alpha path");
    double sw_beta = 0.0;
    std::string sw_path;
    int sw_n = 0;
    OutputOptions sw_out;
    sweep->add_option("--beta", sw_beta, "Real value")->required();
    sweep
        ->add_option("--path", sw_path,
                     "Comma-separated complex values and/or segments "
                     "real:a..b:steps, imag:c..d:steps")
        ->required();
    sweep->add_option("--n", sw_n, "Level to follow")->capture_default_str();
    add_output_options(sweep, sw_out);

    // identities
    auto* identities =
        app.add_subcommand("identities", "Exact-arithmetic proofs of the binomial identities");
    int id_max_n = 8;
    bool id_negate = false;
    OutputOptions id_out;
    identities->add_option("--max-n", id_max_n, "Prove the sum rule for all n up to this")
        ->check(CLI::Range(0, 12))
        ->capture_default_str();
    identities->add_flag("--negate-rhs", id_negate)->group(""); // negative control
    add_output_options(identities, id_out);

    try {
        app.parse(argc, argv);
        if (spectrum->parsed())
            return run_spectrum(sp_alpha, sp_beta, sp_parity, sp_out);
        if (pseudonorm->parsed())
            return run_pseudonorm(pn_alpha, pn_beta, pn_delta_sign, pn_check, quad_tol, pn_out);
        if (verify->parsed())
            return run_verify(vf_grid, vf_tol, quad_tol, vf_out);
        if (sweep->parsed())
            return run_sweep(sw_beta, sw_path, sw_n, quad_tol, sw_out);
        if (identities->parsed())
            return run_identities(id_max_n, id_negate, id_out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
