#include "shellpc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "shellpc/eigenfun.hpp"
#include "shellpc/error.hpp"
#include "shellpc/greens.hpp"
#include "shellpc/kernels.hpp"
#include "shellpc/oracle.hpp"

namespace shellpc::cli {

using nlohmann::json;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<std::string> split(std::string_view text, char sep)
{
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = text.find(sep, start);
        parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            return parts;
        }
        start = pos + 1;
    }
}

double parse_double(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(v)) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception&) {
        throw UsageError{std::string("invalid number for ") + what + ": '" + s + "'"};
    }
}

std::vector<double> parse_list(const std::string& s, const char* what)
{
    std::vector<double> out;
    for (const auto& part : split(s, ',')) {
        out.push_back(parse_double(part, what));
    }
    return out;
}

Operator parse_operator(const std::string& s)
{
    if (s == "laplace") {
        return Operator::Laplace;
    }
    if (s == "stokes") {
        return Operator::Stokes;
    }
    throw UsageError{"operator must be laplace or stokes, got '" + s + "'"};
}

OutputFormat parse_format(const std::string& s)
{
    if (s == "csv") {
        return OutputFormat::Csv;
    }
    if (s == "json") {
        return OutputFormat::Json;
    }
    throw UsageError{"format must be csv or json, got '" + s + "'"};
}

void set_tol(RunConfig& cfg, const std::string& name, double v)
{
    if (!cfg.tolerances.contains(name)) {
        throw UsageError{"unknown tolerance '" + name + "'"};
    }
    if (!(v > 0.0)) {
        throw UsageError{"tolerance '" + name + "' must be positive"};
    }
    cfg.tolerances[name] = v;
}

void parse_tol(RunConfig& cfg, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw UsageError{"--tol expects NAME=VALUE, got '" + assignment + "'"};
    }
    set_tol(cfg, assignment.substr(0, eq), parse_double(assignment.substr(eq + 1), "--tol"));
}

void apply_config_file(RunConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw UsageError{"cannot read config file '" + path + "'"};
    }
    json j;
    try {
        in >> j;
        if (j.contains("command")) {
            const auto c = parse_command(j.at("command").get<std::string>());
            if (!c) {
                throw UsageError{"unknown command in config file"};
            }
            cfg.command = *c;
        }
        if (j.contains("a")) {
            cfg.A = j.at("a").get<double>();
        }
        if (j.contains("sigma")) {
            cfg.sigma = j.at("sigma").get<double>();
        }
        if (j.contains("grid")) {
            cfg.grid = parse_grid(j.at("grid").get<std::string>());
        }
        if (j.contains("format")) {
            cfg.format = parse_format(j.at("format").get<std::string>());
        }
        if (j.contains("out")) {
            cfg.output_path = j.at("out").get<std::string>();
        }
        if (j.contains("operator")) {
            cfg.op = parse_operator(j.at("operator").get<std::string>());
        }
        if (j.contains("samples")) {
            cfg.samples = j.at("samples").get<int>();
        }
        if (j.contains("values")) {
            cfg.values = j.at("values").get<std::vector<double>>();
        }
        if (j.contains("nodes")) {
            cfg.nodes = j.at("nodes").get<int>();
        }
        if (j.contains("n_grid")) {
            cfg.n_grid = j.at("n_grid").get<int>();
        }
        if (j.contains("tol")) {
            for (const auto& [name, value] : j.at("tol").items()) {
                set_tol(cfg, name, value.get<double>());
            }
        }
    } catch (const json::exception& e) {
        throw UsageError{"malformed config file '" + path + "': " + e.what()};
    }
}

ShellGeometry single_geometry(const RunConfig& cfg)
{
    if (cfg.A && cfg.sigma) {
        throw UsageError{"give either --a or --sigma, not both"};
    }
    if (cfg.sigma) {
        return ShellGeometry::from_sigma(*cfg.sigma);
    }
    return ShellGeometry::from_A(cfg.A.value_or(0.0));
}

std::vector<double> grid_values(const RunConfig& cfg)
{
    return make_grid(cfg.grid.min, cfg.grid.max, cfg.grid.points, cfg.grid.scale, cfg.grid.densify_below);
}

std::string fixed10(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10f", v);
    return buf;
}

double round10(double v) { return std::round(v * 1e10) / 1e10; }

json result_json(const EigenResult& r)
{
    return {{"operator", to_string(r.op)},
            {"frame", to_string(r.frame)},
            {"kappa", r.kappa},
            {"lambda", r.lambda},
            {"multiplicity", r.multiplicity},
            {"poincare", r.poincare},
            {"method", to_string(r.method)}};
}

std::string render_eig(const RunConfig& cfg)
{
    const ShellGeometry g = single_geometry(cfg);
    const EigenResult lap = laplace_first(g, g.R_inner > 0.0);
    const EigenResult sto = stokes_first(g);
    if (cfg.format == OutputFormat::Json) {
        json j = {{"A", g.A},
                  {"sigma", g.sigma},
                  {"frame", to_string(g.frame)},
                  {"laplace", result_json(lap)},
                  {"stokes", result_json(sto)},
                  {"c_p", round10(lap.poincare)},
                  {"c_pS", round10(sto.poincare)}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "A,sigma,frame,kappa_L,lambda_L,c_p,multiplicity_L,kappa_S,lambda_S,c_pS,multiplicity_S\n";
    out << format_number(g.A) << ',' << format_number(g.sigma) << ',' << to_string(g.frame) << ','
        << format_number(lap.kappa) << ',' << format_number(lap.lambda) << ',' << fixed10(lap.poincare) << ','
        << lap.multiplicity << ',' << format_number(sto.kappa) << ',' << format_number(sto.lambda) << ','
        << fixed10(sto.poincare) << ',' << sto.multiplicity << '\n';
    return out.str();
}

std::string render_table(const RunConfig& cfg)
{
    const std::vector<double> grid = grid_values(cfg);
    const std::vector<TableRow> rows = kernels::sweep_table(grid);
    for (const TableRow& r : rows) {
        check_row_invariants(r);
    }
    if (cfg.format == OutputFormat::Json) {
        json arr = json::array();
        for (const TableRow& r : rows) {
            arr.push_back({{"A", r.A},
                           {"sigma", r.sigma},
                           {"kappa_L", r.kappa_L},
                           {"lambda_L", r.lambda_L},
                           {"c_p", r.c_p},
                           {"kappa_S", r.kappa_S},
                           {"lambda_S", r.lambda_S},
                           {"c_pS", r.c_pS}});
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "A,sigma,kappa_L,lambda_L,c_p,kappa_S,lambda_S,c_pS\n";
    for (const TableRow& r : rows) {
        out << format_number(r.A) << ',' << format_number(r.sigma) << ',' << format_number(r.kappa_L) << ','
            << format_number(r.lambda_L) << ',' << format_number(r.c_p) << ',' << format_number(r.kappa_S) << ','
            << format_number(r.lambda_S) << ',' << format_number(r.c_pS) << '\n';
    }
    return out.str();
}

std::string render_bounds(const RunConfig& cfg)
{
    const std::vector<double> grid = grid_values(cfg);
    if (cfg.format == OutputFormat::Json) {
        json arr = json::array();
        for (double a : grid) {
            const BoundSet b = bounds_for(ShellGeometry::from_A(a));
            arr.push_back({{"A", b.A},
                           {"diam_half", b.diam_half},
                           {"diam_pi_sqrt2", b.diam_over_pi_sqrt2},
                           {"nazarov", b.nazarov ? json(*b.nazarov) : json(nullptr)},
                           {"best", b.best},
                           {"c_p", 1.0 / pi}});
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "A,diam_half,diam_pi_sqrt2,nazarov,best,c_p\n";
    for (double a : grid) {
        const BoundSet b = bounds_for(ShellGeometry::from_A(a));
        out << format_number(b.A) << ',' << format_number(b.diam_half) << ',' << format_number(b.diam_over_pi_sqrt2)
            << ',' << (b.nazarov ? format_number(*b.nazarov) : std::string()) << ',' << format_number(b.best) << ','
            << format_number(1.0 / pi) << '\n';
    }
    return out.str();
}

std::string render_profile(const RunConfig& cfg)
{
    const ShellGeometry g = single_geometry(cfg);
    if (cfg.samples < 2) {
        throw UsageError{"--samples must be at least 2"};
    }
    const RadialProfile p = cfg.op == Operator::Laplace ? laplace_profile(g, cfg.samples) : stokes_profile(g, cfg.samples);
    if (cfg.format == OutputFormat::Json) {
        json samples = json::array();
        for (const auto& s : p.samples) {
            samples.push_back({s.r, s.value});
        }
        json j = {{"operator", to_string(p.op)},
                  {"A", g.A},
                  {"sigma", g.sigma},
                  {"frame", to_string(g.frame)},
                  {"norm_constant", p.norm_constant},
                  {"samples", samples}};
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "r,value\n";
    for (const auto& s : p.samples) {
        out << format_number(s.r) << ',' << format_number(s.value) << '\n';
    }
    return out.str();
}

std::string render_greens(const RunConfig& cfg, bool& failed)
{
    const std::vector<double> sigmas = cfg.values.empty() ? std::vector<double>{0.0, 0.25, 0.5, 0.75} : cfg.values;
    const double tol = cfg.tolerances.at("greens_rel");
    json results = json::array();
    failed = false;
    for (double s : sigmas) {
        const double est = inverse_norm_estimate(GreensParams::for_sigma(s, cfg.nodes));
        const double exact = (1.0 - s) * (1.0 - s) / (pi * pi);
        const double rel = std::abs(est - exact) / exact;
        failed = failed || !(rel <= tol);
        results.push_back({{"sigma", s}, {"estimate", est}, {"exact", exact}, {"rel_error", rel}});
    }
    json j = {{"results", results}, {"tolerance", tol}, {"passed", !failed}};
    return j.dump(2) + "\n";
}

std::string render_oracle(const RunConfig& cfg, bool& failed)
{
    const std::vector<double> as = cfg.values.empty() ? std::vector<double>{0.1, 1.0, 10.0} : cfg.values;
    const double tol = cfg.tolerances.at("oracle_rel");
    json results = json::array();
    failed = false;
    for (double a : as) {
        const ShellGeometry g = ShellGeometry::from_A(a);
        const double k_root = stokes_first(g).kappa;
        const double k_fd = std::sqrt(oracle::radial_eigenvalue({g, 1, cfg.n_grid}));
        const double rel = std::abs(k_root - k_fd) / k_root;
        failed = failed || !(rel <= tol);
        results.push_back({{"A", a}, {"kappa_rootfind", k_root}, {"kappa_oracle", k_fd}, {"rel_diff", rel}});
    }
    json j = {{"results", results}, {"tolerance", tol}, {"passed", !failed}};
    return j.dump(2) + "\n";
}

void report(std::ostream& err, std::string_view code, const std::string& message)
{
    json j = {{"error", {{"code", code}, {"message", message}}}};
    err << j.dump() << '\n';
}

int exit_code_for(ErrorCode code)
{
    switch (code) {
    case ErrorCode::Domain:
    case ErrorCode::InvalidGeometry: return kUsage;
    default: return kValidation;
    }
}

} // namespace

std::string_view to_string(Command c) noexcept
{
    switch (c) {
    case Command::Eig: return "eig";
    case Command::Table: return "table";
    case Command::Bounds: return "bounds";
    case Command::Profile: return "profile";
    case Command::GreensValidate: return "greens-validate";
    case Command::OracleCheck: return "oracle-check";
    }
    return "unknown";
}

std::optional<Command> parse_command(std::string_view text)
{
    for (Command c : {Command::Eig, Command::Table, Command::Bounds, Command::Profile, Command::GreensValidate,
                      Command::OracleCheck}) {
        if (to_string(c) == text) {
            return c;
        }
    }
    return std::nullopt;
}

GridSpec parse_grid(std::string_view text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 4) {
        throw UsageError{"--grid expects min:max:points:log|linear, got '" + std::string(text) + "'"};
    }
    GridSpec g;
    g.min = parse_double(parts[0], "grid min");
    g.max = parse_double(parts[1], "grid max");
    try {
        std::size_t used = 0;
        g.points = std::stoi(parts[2], &used);
        if (used != parts[2].size()) {
            throw std::invalid_argument(parts[2]);
        }
    } catch (const std::exception&) {
        throw UsageError{"invalid grid point count '" + parts[2] + "'"};
    }
    if (parts[3] == "log") {
        g.scale = GridScale::Log;
    } else if (parts[3] == "linear") {
        g.scale = GridScale::Linear;
    } else {
        throw UsageError{"grid scale must be log or linear, got '" + parts[3] + "'"};
    }
    g.densify_below.reset();
    if (!(g.min < g.max) || g.points < 2 || (g.scale == GridScale::Log && !(g.min > 0.0)) || g.min < 0.0) {
        throw UsageError{"grid needs 0 <= min < max (min > 0 for log) and at least 2 points"};
    }
    return g;
}

std::string format_number(double v)
{
    if (v == 0.0) {
        return "0"; // folds -0
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out)
{
    CLI::App app{"First Laplace and Stokes eigenvalues and Poincare constants of spherical shells"};
    app.set_help_flag("-h,--help", "Print this help message and exit");

    std::string command;
    std::string config_path;
    double a = 0.0;
    double sigma = 0.0;
    std::string grid;
    std::string format;
    std::string out_path;
    std::vector<std::string> tols;
    std::string op;
    int samples = 0;
    std::string values;
    int nodes = 0;
    int n_grid = 0;

    app.add_option("--command", command, "eig | table | bounds | profile | greens-validate | oracle-check");
    app.add_option("--config", config_path, "JSON config file; flags override its values");
    app.add_option("--a", a, "inverse relative gap width A");
    app.add_option("--sigma", sigma, "radius ratio sigma");
    app.add_option("--grid", grid, "A grid as min:max:points:log|linear");
    app.add_option("--format", format, "csv | json");
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--tol", tols, "tolerance override NAME=VALUE (oracle_rel, greens_rel)");
    app.add_option("--operator", op, "laplace | stokes (profile)");
    app.add_option("--samples", samples, "profile sample count");
    app.add_option("--values", values, "comma list: sigmas for greens-validate, A values for oracle-check");
    app.add_option("--nodes", nodes, "radial quadrature nodes for greens-validate");
    app.add_option("--n-grid", n_grid, "finite-difference intervals for oracle-check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError{e.what()};
    }

    RunConfig cfg;
    if (app.count("--config")) {
        apply_config_file(cfg, config_path);
    }
    if (app.count("--command")) {
        const auto c = parse_command(command);
        if (!c) {
            throw UsageError{"unknown command '" + command + "'"};
        }
        cfg.command = *c;
    } else if (!app.count("--config")) {
        throw UsageError{"--command is required"};
    }
    if (app.count("--a")) {
        cfg.A = a;
        cfg.sigma.reset();
    }
    if (app.count("--sigma")) {
        cfg.sigma = sigma;
        if (!app.count("--a")) {
            cfg.A.reset();
        }
    }
    if (app.count("--grid")) {
        cfg.grid = parse_grid(grid);
    }
    if (app.count("--format")) {
        cfg.format = parse_format(format);
    }
    if (app.count("--out")) {
        cfg.output_path = out_path;
    }
    for (const auto& t : tols) {
        parse_tol(cfg, t);
    }
    if (app.count("--operator")) {
        cfg.op = parse_operator(op);
    }
    if (app.count("--samples")) {
        cfg.samples = samples;
    }
    if (app.count("--values")) {
        cfg.values = parse_list(values, "--values");
    }
    if (app.count("--nodes")) {
        cfg.nodes = nodes;
    }
    if (app.count("--n-grid")) {
        cfg.n_grid = n_grid;
    }
    return cfg;
}

std::string render(const RunConfig& cfg, bool& validation_failed)
{
    validation_failed = false;
    switch (cfg.command) {
    case Command::Eig: return render_eig(cfg);
    case Command::Table: return render_table(cfg);
    case Command::Bounds: return render_bounds(cfg);
    case Command::Profile: return render_profile(cfg);
    case Command::GreensValidate: return render_greens(cfg, validation_failed);
    case Command::OracleCheck: return render_oracle(cfg, validation_failed);
    }
    throw UsageError{"unhandled command"};
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::string text;
    bool failed = false;
    RunConfig cfg;
    try {
        auto parsed = parse_args(argc, argv, out);
        if (!parsed) {
            return kOk;
        }
        cfg = *parsed;
        text = render(cfg, failed);
    } catch (const UsageError& e) {
        report(err, "Usage", e.message);
        return kUsage;
    } catch (const Error& e) {
        report(err, to_string(e.code()), e.what());
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        report(err, "Internal", e.what());
        return kValidation;
    }

    if (cfg.output_path.empty() || cfg.output_path == "-") {
        out << text;
        out.flush();
        if (!out) {
            report(err, "Io", "failed writing to stdout");
            return kIo;
        }
    } else {
        std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
        file << text;
        file.close();
        if (!file) {
            report(err, "Io", "cannot write '" + cfg.output_path + "'");
            return kIo;
        }
    }
    if (failed) {
        report(err, "ValidationFailed", std::string(to_string(cfg.command)) + " exceeded its tolerance");
        return kValidation;
    }
    return kOk;
}

} // namespace shellpc::cli
