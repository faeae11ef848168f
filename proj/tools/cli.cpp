#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "hellmann/curves.hpp"
#include "hellmann/envelope.hpp"
#include "hellmann/errors.hpp"
#include "hellmann/oracle.hpp"
#include "output.hpp"

#ifndef HELLMANN_VERSION
#define HELLMANN_VERSION "unknown"
#endif

namespace hellmann::cli {

namespace {

constexpr int kSchemaVersion = 1;

struct Args {
    double A = 2.0;
    std::optional<double> B;
    double C = 1.0;
    double omega = 1.0;
    int n = 1;
    int ell = 0;
    double tol = 1e-8;
    std::string format = "csv";
    std::string out;
    bool timestamp = false;

    // solve
    std::string samples_path;
    // sweep-b
    double b_min = -2.0;
    double b_max = 2.0;
    int steps = 81;
    bool with_oracle = false;
    // curve
    double r_min = 0.4;
    double r_max = 5.0;
    int curve_steps = 50;
    std::string spacing = "log";
};

// Thrown for parameter values that parse but violate the model invariants.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

HellmannParams make_params(Args const& a, double default_B) {
    try {
        return HellmannParams(a.A, a.B.value_or(default_B), a.C, a.omega);
    } catch (DomainError const& e) {
        throw UsageError(e.what());
    }
}

QuantumNumbers make_quantum(Args const& a) {
    try {
        return QuantumNumbers(a.n, a.ell);
    } catch (DomainError const& e) {
        throw UsageError(e.what());
    }
}

nlohmann::ordered_json base_meta(std::string const& command, Args const& a) {
    nlohmann::ordered_json meta;
    meta["command"] = command;
    meta["schema_version"] = kSchemaVersion;
    meta["version"] = HELLMANN_VERSION;
    if (a.timestamp) {
        auto const now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        meta["timestamp"] = buf;
    }
    return meta;
}

nlohmann::ordered_json param_meta(HellmannParams const& p, QuantumNumbers const& q) {
    return {{"A", p.A()}, {"B", p.B()}, {"C", p.C()}, {"omega", p.omega()},
            {"n", q.n()},  {"ell", q.ell()}};
}

class Emitter {
public:
    Emitter(Args const& a, std::ostream& fallback)
        : format_(a.format == "json" ? Format::Json : Format::Csv), os_(&fallback) {
        if (!a.out.empty()) {
            file_.open(a.out);
            if (!file_) throw NumericalError("cannot open output file " + a.out);
            os_ = &file_;
        }
    }
    void emit(Table const& t) { write_table(*os_, t, format_); }

private:
    Format format_;
    std::ofstream file_;
    std::ostream* os_;
};

int cmd_bound(Args const& a, std::ostream& out) {
    auto const p = make_params(a, 0.0);
    auto const q = make_quantum(a);
    auto const b = envelope_energy(p, q);

    Table t;
    t.columns = {"A", "B", "C", "omega", "n", "ell", "energy", "direction", "minimizer_r"};
    t.rows.push_back({p.A(), p.B(), p.C(), p.omega(), static_cast<long long>(q.n()),
                      static_cast<long long>(q.ell()), b.energy,
                      std::string(to_string(b.direction)), b.minimizer_r});
    t.meta = base_meta("bound", a);
    t.meta["parameters"] = param_meta(p, q);
    Emitter(a, out).emit(t);
    return kSuccess;
}

int cmd_solve(Args const& a, std::ostream& out) {
    auto const p = make_params(a, 0.0);
    auto const q = make_quantum(a);
    if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
    OracleOptions opts;
    opts.tol = a.tol;
    auto const sol = solve_eigenvalue(p, q, opts);

    Table t;
    t.columns = {"energy", "nodes", "tol", "r_max", "num_points"};
    t.rows.push_back({sol.energy, static_cast<long long>(sol.nodes), sol.tolerance,
                      sol.grid.r_max(), static_cast<long long>(sol.grid.num_points())});
    t.meta = base_meta("solve", a);
    t.meta["parameters"] = param_meta(p, q);
    t.meta["tolerances"] = {{"tol", a.tol}};
    Emitter(a, out).emit(t);

    if (!a.samples_path.empty()) {
        std::ofstream dump(a.samples_path);
        if (!dump) throw NumericalError("cannot open samples file " + a.samples_path);
        write_samples_csv(dump, sol);
    }
    return kSuccess;
}

int cmd_sweep_b(Args const& a, std::ostream& out, std::ostream& err) {
    make_params(a, a.b_min);
    SweepSpec spec;
    spec.A = a.A;
    spec.C = a.C;
    spec.quantum = make_quantum(a);
    spec.B_min = a.b_min;
    spec.B_max = a.b_max;
    spec.steps = a.steps;
    spec.with_oracle = a.with_oracle;
    spec.tol = a.tol;
    if (spec.steps < 2) throw UsageError("--steps must be at least 2");
    if (spec.B_min > spec.B_max) throw UsageError("--b-min must not exceed --b-max");
    if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");

    auto const rows = sweep_b(spec);
    Table t;
    t.columns = {"B", "bound", "direction", "oracle", "gap", "status"};
    int failures = 0;
    for (auto const& r : rows) {
        Cell oracle = r.oracle ? Cell{*r.oracle} : Cell{};
        Cell gap = r.gap ? Cell{*r.gap} : Cell{};
        t.rows.push_back({r.B, r.bound, std::string(to_string(r.direction)), oracle, gap, r.status});
        if (!r.ok()) {
            ++failures;
            err << "sweep-b: B = " << format_double(r.B) << ": " << r.status << '\n';
        }
    }
    t.meta = base_meta("sweep-b", a);
    t.meta["parameters"] = {{"A", spec.A},           {"C", spec.C},
                            {"n", spec.quantum.n()}, {"ell", spec.quantum.ell()},
                            {"b_min", spec.B_min},   {"b_max", spec.B_max},
                            {"steps", spec.steps},   {"with_oracle", spec.with_oracle}};
    t.meta["tolerances"] = {{"tol", spec.tol}};
    Emitter(a, out).emit(t);
    return failures == 0 ? kSuccess : kNumericalFailure;
}

int cmd_curve(Args const& a, std::ostream& out) {
    auto const p = make_params(a, 1.0);
    auto const q = make_quantum(a);
    if (a.curve_steps < 2) throw UsageError("--steps must be at least 2");
    if (!(a.r_min > 0.0) || !(a.r_max > a.r_min)) {
        throw UsageError("need 0 < --r-min < --r-max");
    }
    auto const points = energy_curve(p, q, a.r_min, a.r_max, a.curve_steps,
                                     a.spacing == "linear" ? Spacing::Linear : Spacing::Log);

    Table t;
    t.columns = {"r", "v", "energy", "scaled"};
    for (auto const& pt : points) t.rows.push_back({pt.contact_r, pt.v, pt.energy, pt.scaled});
    t.meta = base_meta("curve", a);
    t.meta["parameters"] = param_meta(p, q);
    t.meta["parameters"]["r_min"] = a.r_min;
    t.meta["parameters"]["r_max"] = a.r_max;
    t.meta["parameters"]["steps"] = a.curve_steps;
    t.meta["parameters"]["spacing"] = a.spacing;
    Emitter(a, out).emit(t);
    return kSuccess;
}

int cmd_scale_check(Args const& a, std::ostream& out) {
    auto const p = make_params(a, 1.0);
    auto const q = make_quantum(a);
    if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
    OracleOptions opts;
    opts.tol = a.tol;

    auto const scaled = reduce_scale(p);
    double const full = solve_eigenvalue(p, q, opts).energy;
    double const reduced = solve_eigenvalue(reduced_params(scaled), q, opts).energy;
    double const predicted = scaled.multiplier * reduced;
    double const difference = std::abs(full - predicted);
    bool const pass = difference <= 10.0 * a.tol;

    Table t;
    t.columns = {"omega", "A",          "B",     "C",          "n",     "ell",   "alpha",
                 "beta",  "multiplier", "full",  "reduced",    "predicted", "ratio",
                 "difference", "status"};
    t.rows.push_back({p.omega(), p.A(), p.B(), p.C(), static_cast<long long>(q.n()),
                      static_cast<long long>(q.ell()), scaled.alpha, scaled.beta,
                      scaled.multiplier, full, reduced, predicted, full / predicted, difference,
                      std::string(pass ? "pass" : "fail")});
    t.meta = base_meta("scale-check", a);
    t.meta["parameters"] = param_meta(p, q);
    t.meta["tolerances"] = {{"tol", a.tol}, {"agreement", 10.0 * a.tol}};
    Emitter(a, out).emit(t);
    return pass ? kSuccess : kNumericalFailure;
}

void add_model_flags(CLI::App* sub, Args& a, bool with_B, bool with_omega) {
    sub->add_option("--A", a.A, "Coulomb strength A > 0")->capture_default_str();
    if (with_B) sub->add_option("--B", a.B, "screened-term strength B (any sign)");
    sub->add_option("--C", a.C, "screening rate C > 0")->capture_default_str();
    if (with_omega) sub->add_option("--omega", a.omega, "kinetic weight omega > 0")->capture_default_str();
    sub->add_option("--n", a.n, "radial index n >= 1")->capture_default_str();
    sub->add_option("--l", a.ell, "angular momentum l >= 0")->capture_default_str();
}

void add_output_flags(CLI::App* sub, Args& a) {
    sub->add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    sub->add_option("--out", a.out, "output file (default: standard output)");
    sub->add_flag("--timestamp", a.timestamp, "record a timestamp in JSON metadata");
}

} // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Envelope bounds and reference eigenvalues for the Hellmann potential "
                 "V(r) = -A/r + B exp(-C r)/r",
                 "hellmann"};
    app.require_subcommand(1);
    Args a;

    auto* bound = app.add_subcommand("bound", "semi-classical eigenvalue bound");
    add_model_flags(bound, a, true, true);
    add_output_flags(bound, a);

    auto* solve = app.add_subcommand("solve", "reference eigenvalue from the radial solver");
    add_model_flags(solve, a, true, true);
    add_output_flags(solve, a);
    solve->add_option("--tol", a.tol, "energy tolerance")->capture_default_str();
    solve->add_option("--samples", a.samples_path, "write sampled u(r) as CSV (r,u)");

    auto* sweep = app.add_subcommand("sweep-b", "bound (and optionally oracle) over a range of B");
    add_model_flags(sweep, a, false, false);
    add_output_flags(sweep, a);
    sweep->add_option("--b-min", a.b_min, "first B value")->capture_default_str();
    sweep->add_option("--b-max", a.b_max, "last B value")->capture_default_str();
    sweep->add_option("--steps", a.steps, "number of B values, endpoints included")->capture_default_str();
    sweep->add_flag("--with-oracle", a.with_oracle, "solve each row and check the bound direction");
    sweep->add_option("--tol", a.tol, "oracle and direction tolerance")->capture_default_str();

    auto* curve = app.add_subcommand("curve", "parametric coupling curve {v, E(v)}");
    add_model_flags(curve, a, true, true);
    add_output_flags(curve, a);
    curve->add_option("--r-min", a.r_min, "smallest contact radius")->capture_default_str();
    curve->add_option("--r-max", a.r_max, "largest contact radius")->capture_default_str();
    curve->add_option("--steps", a.curve_steps, "number of curve points")->capture_default_str();
    curve->add_option("--spacing", a.spacing, "r sampling")
        ->check(CLI::IsMember({"log", "linear"}))
        ->capture_default_str();

    auto* scale = app.add_subcommand("scale-check", "oracle check of the scaling reduction");
    add_model_flags(scale, a, true, true);
    add_output_flags(scale, a);
    scale->add_option("--tol", a.tol, "oracle tolerance")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (CLI::ParseError const& e) {
        int const code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (bound->parsed()) return cmd_bound(a, out);
        if (solve->parsed()) return cmd_solve(a, out);
        if (sweep->parsed()) return cmd_sweep_b(a, out, err);
        if (curve->parsed()) return cmd_curve(a, out);
        if (scale->parsed()) return cmd_scale_check(a, out);
    } catch (UsageError const& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kUsageError;
    } catch (std::exception const& e) {
        err << "error: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kUsageError;
}

} // namespace hellmann::cli
