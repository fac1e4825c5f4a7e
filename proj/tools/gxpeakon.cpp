// Command-line front end: evaluates the closed-form Geng-Xue multipeakon
// solution, verifies it against numerical integration of the peakon ODEs,
// and exports trajectories, asymptotic lines and characteristic curves
// as CSV or JSON.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "gxpeakon/asymptote.hpp"
#include "gxpeakon/characteristic.hpp"
#include "gxpeakon/field.hpp"
#include "gxpeakon/fixtures.hpp"
#include "gxpeakon/jsonio.hpp"
#include "gxpeakon/solve.hpp"
#include "gxpeakon/validate.hpp"

namespace {

// Exit codes, also listed in --help:
//   0 success
//   1 constraint violations (validate) or internal error
//   2 config / usage error
//   3 output I/O error
//   4 verification tolerance exceeded
//   5 determinant enumeration capacity exceeded
enum ExitCode {
    kOk = 0,
    kInvalidConfig = 1,
    kUsage = 2,
    kIo = 3,
    kToleranceExceeded = 4,
    kCapacity = 5,
};

struct Options {
    std::string config_path;
    std::string fixture_name;
    std::string format = "csv";
    std::string out_path;
    std::optional<double> t0, t1, h, tolerance;
    std::optional<int> samples, steps;
    int thetas = 5;
};

gx::RunConfig load_config(const Options& opt) {
    gx::RunConfig cfg;
    if (!opt.fixture_name.empty()) {
        const gx::Fixture f = gx::fixture(opt.fixture_name);
        cfg.layout = f.layout;
        cfg.spectral = f.spectral;
        cfg.params = f.params;
    } else if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) throw std::runtime_error("cannot open config file: " + opt.config_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        cfg = gx::parse_config(ss.str());
    } else {
        throw std::runtime_error("either --config or --fixture is required");
    }
    if (opt.t0) cfg.t0 = *opt.t0;
    if (opt.t1) cfg.t1 = *opt.t1;
    if (opt.samples) cfg.samples = *opt.samples;
    if (opt.h) cfg.h = *opt.h;
    if (opt.steps) cfg.steps = *opt.steps;
    if (opt.tolerance) cfg.tolerance = *opt.tolerance;
    if (!(cfg.t0 < cfg.t1)) throw std::runtime_error("run options require t0 < t1");
    if (cfg.samples < 2) throw std::runtime_error("run options require samples >= 2");
    if (!(cfg.h > 0.0)) throw std::runtime_error("run options require h > 0");
    return cfg;
}

int emit(const Options& opt, const gx::Table& table) {
    std::ostringstream os;
    if (opt.format == "json")
        gx::write_json(os, table);
    else
        gx::write_csv(os, table);
    if (opt.out_path.empty()) {
        std::cout << os.str();
        return kOk;
    }
    std::ofstream out(opt.out_path);
    if (!out) {
        std::cerr << "error: cannot open output file: " << opt.out_path << "\n";
        return kIo;
    }
    out << os.str();
    return out ? kOk : kIo;
}

gx::Table layout_table(const gx::GroupLayout& lay) {
    gx::Table t;
    t.parity = lay.odd() ? "odd" : "even";
    t.K = lay.K();
    t.x_sizes = lay.x_sizes;
    t.y_sizes = lay.y_sizes;
    return t;
}

void state_columns(const gx::GroupLayout& lay, gx::Table& table) {
    table.columns.push_back("t");
    auto add = [&](const char* prefix, const std::vector<int>& sizes) {
        for (std::size_t g = 0; g < sizes.size(); ++g)
            for (int i = 1; i <= sizes[g]; ++i)
                table.columns.push_back(std::string(prefix) + "[" + std::to_string(g + 1) + "." +
                                        std::to_string(i) + "]");
    };
    add("x", lay.x_sizes);
    add("y", lay.y_sizes);
    add("m", lay.x_sizes);
    add("n", lay.y_sizes);
}

std::vector<double> state_row(const gx::PeakonState& st) {
    std::vector<double> row = {st.t};
    for (double v : st.flat_x()) row.push_back(v);
    for (double v : st.flat_y()) row.push_back(v);
    for (double v : st.flat_log_m()) row.push_back(std::exp(v));
    for (double v : st.flat_log_n()) row.push_back(std::exp(v));
    return row;
}

int cmd_validate(const Options& opt) {
    const gx::RunConfig cfg = load_config(opt);
    const gx::ValidationReport report = gx::validate(cfg.layout, cfg.spectral, cfg.params);
    for (const auto& w : report.warnings) std::cout << "warning: " << w << "\n";
    if (report.ok()) {
        std::cout << "OK\n";
        return kOk;
    }
    for (const auto& v : report.violations)
        std::cout << "violation [" << v.code << "] " << v.message << "\n";
    return kInvalidConfig;
}

int cmd_solve(const Options& opt) {
    const gx::RunConfig cfg = load_config(opt);
    const gx::Solver solver(cfg.layout, cfg.spectral, cfg.params);
    gx::Table table = layout_table(cfg.layout);
    state_columns(cfg.layout, table);
    for (int k = 0; k < cfg.samples; ++k) {
        const double t = cfg.t0 + (cfg.t1 - cfg.t0) * k / (cfg.samples - 1);
        table.rows.push_back(state_row(solver.solve(t)));
    }
    return emit(opt, table);
}

int cmd_integrate(const Options& opt) {
    const gx::RunConfig cfg = load_config(opt);
    const gx::Solver solver(cfg.layout, cfg.spectral, cfg.params);
    gx::Table table = layout_table(cfg.layout);
    state_columns(cfg.layout, table);
    gx::PeakonState st = solver.solve(cfg.t0);
    table.rows.push_back(state_row(st));
    const int intervals = cfg.samples - 1;
    const int steps_per = std::max(1, cfg.steps / intervals);
    for (int k = 1; k <= intervals; ++k) {
        const double t = cfg.t0 + (cfg.t1 - cfg.t0) * k / intervals;
        st = gx::integrate(st, t, steps_per);
        table.rows.push_back(state_row(st));
    }
    return emit(opt, table);
}

int cmd_verify(const Options& opt) {
    const gx::RunConfig cfg = load_config(opt);
    const gx::Solver solver(cfg.layout, cfg.spectral, cfg.params);

    double worst = 0.0, worst_t = cfg.t0;
    for (int k = 0; k < cfg.samples; ++k) {
        const double t = cfg.t0 + (cfg.t1 - cfg.t0) * k / (cfg.samples - 1);
        const double r = gx::ode_residual(solver, t, cfg.h);
        if (r > worst) {
            worst = r;
            worst_t = t;
        }
    }
    std::cout << "max ODE residual over [" << cfg.t0 << ", " << cfg.t1 << "]: " << worst
              << " (at t = " << worst_t << ")\n";

    const gx::PeakonState end = gx::integrate(solver.solve(cfg.t0), cfg.t1, cfg.steps);
    const gx::PeakonState exact = solver.solve(cfg.t1);
    double pos_err = 0.0, amp_err = 0.0;
    const auto ex = exact.flat_x(), ey = exact.flat_y();
    const auto gx_ = end.flat_x(), gy = end.flat_y();
    for (std::size_t i = 0; i < ex.size(); ++i) pos_err = std::max(pos_err, std::abs(ex[i] - gx_[i]));
    for (std::size_t i = 0; i < ey.size(); ++i) pos_err = std::max(pos_err, std::abs(ey[i] - gy[i]));
    const auto em = exact.flat_log_m(), en = exact.flat_log_n();
    const auto gm = end.flat_log_m(), gn = end.flat_log_n();
    for (std::size_t i = 0; i < em.size(); ++i)
        amp_err = std::max(amp_err, std::abs(std::expm1(gm[i] - em[i])));
    for (std::size_t i = 0; i < en.size(); ++i)
        amp_err = std::max(amp_err, std::abs(std::expm1(gn[i] - en[i])));
    std::cout << "RK4 endpoint deviation at t = " << cfg.t1 << ": positions " << pos_err
              << " (absolute), amplitudes " << amp_err << " (relative), " << cfg.steps
              << " steps\n";

    if (worst > cfg.tolerance || pos_err > cfg.tolerance || amp_err > cfg.tolerance) {
        std::cout << "FAIL (tolerance " << cfg.tolerance << ")\n";
        return kToleranceExceeded;
    }
    std::cout << "OK (tolerance " << cfg.tolerance << ")\n";
    return kOk;
}

int cmd_asymptotics(const Options& opt) {
    const gx::RunConfig cfg = load_config(opt);
    const gx::Solver solver(cfg.layout, cfg.spectral, cfg.params);

    std::ostringstream os;
    const bool json = opt.format == "json";
    if (!json) os << "target,kind,direction,slope,intercept,measured_slope,gap_at_200\n";
    std::vector<std::string> lines;
    char buf[512];
    for (gx::Direction dir : {gx::Direction::minus_inf, gx::Direction::plus_inf}) {
        const double ta = dir == gx::Direction::plus_inf ? 180.0 : -220.0;
        const double tb = dir == gx::Direction::plus_inf ? 220.0 : -180.0;
        const double t200 = dir == gx::Direction::plus_inf ? 200.0 : -200.0;
        const gx::PeakonState st = solver.solve(t200);
        for (const auto& line : gx::all_asymptotes(solver, dir)) {
            const auto& ref = line.target;
            auto value_at = [&](const gx::PeakonState& s) {
                if (line.kind == gx::LineKind::position)
                    return ref.side == gx::Side::X ? s.x[ref.group - 1][ref.member - 1]
                                                   : s.y[ref.group - 1][ref.member - 1];
                return ref.side == gx::Side::X ? s.log_m[ref.group - 1][ref.member - 1]
                                               : s.log_n[ref.group - 1][ref.member - 1];
            };
            const auto [mc, md] =
                gx::fit_line([&](double t) { return value_at(solver.solve(t)); }, ta, tb, 21);
            (void)md;
            const double gap = std::abs(value_at(st) - (line.slope * t200 + line.intercept));
            std::snprintf(buf, sizeof buf,
                          json ? "{\"target\": \"%s\", \"kind\": \"%s\", \"direction\": \"%s\", "
                                 "\"slope\": %.17g, \"intercept\": %.17g, "
                                 "\"measured_slope\": %.17g, \"gap_at_200\": %.17g}"
                               : "%s,%s,%s,%.17g,%.17g,%.17g,%.17g\n",
                          gx::to_string(ref).c_str(),
                          line.kind == gx::LineKind::position ? "position" : "log-amplitude",
                          dir == gx::Direction::plus_inf ? "+inf" : "-inf", line.slope,
                          line.intercept, mc, gap);
            if (json)
                lines.emplace_back(buf);
            else
                os << buf;
        }
    }
    if (json) {
        os << "[\n";
        for (std::size_t i = 0; i < lines.size(); ++i)
            os << "  " << lines[i] << (i + 1 < lines.size() ? "," : "") << "\n";
        os << "]\n";
    }
    if (opt.out_path.empty()) {
        std::cout << os.str();
        return kOk;
    }
    std::ofstream out(opt.out_path);
    if (!out) {
        std::cerr << "error: cannot open output file: " << opt.out_path << "\n";
        return kIo;
    }
    out << os.str();
    return kOk;
}

int cmd_characteristics(const Options& opt) {
    const gx::RunConfig cfg = load_config(opt);
    const gx::Solver solver(cfg.layout, cfg.spectral, cfg.params);
    const gx::Characteristics chars(solver);

    gx::Table table = layout_table(cfg.layout);
    table.columns = {"family", "theta", "t", "xi", "residual"};
    int index = 0;
    for (const auto& fam : chars.families()) {
        // Log-spaced interior thetas; infinite ranges get a broad sweep
        // above the lower endpoint.
        const double lo = fam.theta_lo > 0.0 ? fam.theta_lo * (1.0 + 1e-9) : 1e-12;
        const double hi =
            std::isfinite(fam.theta_hi) ? fam.theta_hi * (1.0 - 1e-9) : lo * 1e24;
        for (int q = 0; q < opt.thetas; ++q) {
            const double theta =
                lo * std::pow(hi / lo, (q + 0.5) / opt.thetas);
            for (int k = 0; k < cfg.samples; ++k) {
                const double t = cfg.t0 + (cfg.t1 - cfg.t0) * k / (cfg.samples - 1);
                table.rows.push_back({static_cast<double>(index), theta, t,
                                      chars.xi(fam, theta, t),
                                      chars.residual(fam, theta, t, cfg.h)});
            }
        }
        ++index;
    }
    return emit(opt, table);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gxpeakon: closed-form multipeakon solutions of the Geng-Xue equation.\n"
        "Exit codes: 0 ok, 1 constraint violation, 2 config/usage error,\n"
        "3 output I/O error, 4 verification tolerance exceeded, 5 capacity\n"
        "exceeded (see PEAKON_GX_MAX_K)."};
    app.require_subcommand(0, 1);

    Options opt;
    bool list_fixtures = false;
    app.add_flag("--list-fixtures", list_fixtures, "list built-in fixture names and exit");

    app.set_help_flag("--help", "print help and exit");  // frees -h for --h below
    auto add_common = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help and exit");
        cmd->add_option("--config", opt.config_path, "JSON configuration file");
        cmd->add_option("--fixture", opt.fixture_name, "built-in fixture name");
        cmd->add_option("--t0", opt.t0, "start of the time grid");
        cmd->add_option("--t1", opt.t1, "end of the time grid");
        cmd->add_option("--samples", opt.samples, "number of grid samples");
        cmd->add_option("--h", opt.h, "finite-difference step");
        cmd->add_option("--steps", opt.steps, "RK4 step count");
        cmd->add_option("--tolerance", opt.tolerance, "verification tolerance");
        cmd->add_option("--format", opt.format, "output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        cmd->add_option("--out", opt.out_path, "output path (default: stdout)");
        return cmd;
    };

    CLI::App* validate_cmd = add_common(app.add_subcommand("validate", "check a configuration"));
    CLI::App* solve_cmd =
        add_common(app.add_subcommand("solve", "closed-form trajectories on a time grid"));
    CLI::App* verify_cmd = add_common(
        app.add_subcommand("verify", "ODE residuals plus an RK4 cross-check"));
    CLI::App* asym_cmd = add_common(
        app.add_subcommand("asymptotics", "predicted lines vs measured slopes"));
    CLI::App* chars_cmd = add_common(
        app.add_subcommand("characteristics", "characteristic curves per family"));
    chars_cmd->add_option("--thetas", opt.thetas, "curves per family");
    CLI::App* integrate_cmd =
        add_common(app.add_subcommand("integrate", "RK4 trajectories from the t0 state"));

    CLI11_PARSE(app, argc, argv);

    if (list_fixtures) {
        for (const auto& name : gx::fixture_names()) std::cout << name << "\n";
        return kOk;
    }
    if (app.get_subcommands().empty()) {
        std::cerr << app.help();
        return kUsage;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(opt);
        if (solve_cmd->parsed()) return cmd_solve(opt);
        if (verify_cmd->parsed()) return cmd_verify(opt);
        if (asym_cmd->parsed()) return cmd_asymptotics(opt);
        if (chars_cmd->parsed()) return cmd_characteristics(opt);
        if (integrate_cmd->parsed()) return cmd_integrate(opt);
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapacity;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidConfig;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
