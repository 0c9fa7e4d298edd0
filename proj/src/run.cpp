#include "run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cascade.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "potential.hpp"
#include "reduction1d.hpp"
#include "scalar.hpp"
#include "series.hpp"

namespace fs = std::filesystem;

namespace b2p1 {

namespace {

struct CliOverrides {
    std::string config_path;
    std::string out_dir;
    std::optional<int> case_no;
    std::optional<std::string> formulation;
    std::optional<std::string> form;
    bool as_printed = false;
    bool secular = false;
    std::optional<long> seed;
};

RunConfig load_config(const CliOverrides& ov, std::string* text_out) {
    if (ov.config_path.empty()) throw ConfigError("--config is required for this subcommand");
    std::string text = read_text_file(ov.config_path);
    RunConfig cfg = parse_config(text);
    if (ov.case_no) {
        const bool with_st = cfg.regime == Regime::Case3ST;
        cfg.regime = regime_from_case(*ov.case_no, with_st);
        cfg.warnings = validate_regime(cfg.params, cfg.regime).warnings;
    }
    if (ov.formulation) {
        if (*ov.formulation == "pair") cfg.formulation = Formulation::Pair;
        else if (*ov.formulation == "scalar") cfg.formulation = Formulation::Scalar;
        else throw ConfigError("--formulation must be pair or scalar");
    }
    if (ov.form) {
        if (*ov.form == "consistent") cfg.form = EquationForm::Consistent;
        else if (*ov.form == "printed") cfg.form = EquationForm::Printed;
        else throw ConfigError("--form must be printed or consistent");
    }
    if (!ov.out_dir.empty()) cfg.output.dir = ov.out_dir;
    if (text_out) *text_out = text;
    return cfg;
}

void write_manifest(const std::string& dir, const std::string& command,
                    const std::string& config_text, const CliOverrides& ov,
                    double wall_seconds) {
    char hash[9];
    std::snprintf(hash, sizeof(hash), "%08x", crc32(config_text.data(), config_text.size()));
    std::ostringstream m;
    m << "format = B2P1SNAP 1\n"
      << "command = " << command << "\n"
      << "content_hash = " << hash << "\n";
    if (ov.seed) m << "seed = " << *ov.seed << "\n";
    m << "wall_seconds = " << format_double(wall_seconds) << "\n"
      << "--- config ---\n"
      << config_text;
    write_text_file(dir + "/run.manifest", m.str());
}

StepperConfig stepper_config(const RunConfig& cfg) {
    StepperConfig s;
    s.dt = cfg.dt();
    s.filter = cfg.time.filter;
    s.dealias = cfg.time.dealias;
    return s;
}

int step_count(const RunConfig& cfg) {
    if (cfg.time.t_end <= 0.0) throw ConfigError("t_end must be positive");
    return int(std::ceil(cfg.time.t_end / cfg.dt() - 1e-9));
}

// f with f_x = w - mean(w) (the uniform part of w has no periodic potential).
Field2D potential_from_w(const Field2D& w) {
    OperatorSymbol dxx;
    dxx.c20 = 1.0;  // symbol -kx^2
    return invert_symbol(deriv(w, 1, 0), dxx);
}

WaveState make_initial_impl(const RunConfig& cfg) {
    const Grid2D& g = cfg.grid;
    switch (cfg.initial.kind) {
        case InitialKind::Gaussian: {
            const double x0 = cfg.initial.x0 < 0 ? g.Lx / 2 : cfg.initial.x0;
            const double y0 = cfg.initial.y0 < 0 ? g.Ly / 2 : cfg.initial.y0;
            const double sg = cfg.initial.sigma < 0 ? g.Lx / 10 : cfg.initial.sigma;
            const double amp = cfg.initial.amp;
            Field2D eta = Field2D::sample(g, [&](double x, double y) {
                const double dx = x - x0, dy = y - y0;
                return amp * std::exp(-(dx * dx + dy * dy) / (2 * sg * sg));
            });
            return WaveState(std::move(eta), Field2D(g), 0.0);
        }
        case InitialKind::PlaneWave: {
            const double kx = g.kx(cfg.initial.jx), ky = g.ky(cfg.initial.jy);
            const double om =
                cfg.initial.branch * std::sqrt(kx * kx + cfg.params.ratio() * ky * ky);
            if (om == 0.0) throw ConfigError("plane-wave initial data needs a nonzero mode");
            const double amp = cfg.initial.amp, ph = cfg.initial.phase;
            Field2D eta = Field2D::sample(
                g, [&](double x, double y) { return amp * std::cos(kx * x + ky * y + ph); });
            Field2D f = Field2D::sample(
                g, [&](double x, double y) { return amp / om * std::sin(kx * x + ky * y + ph); });
            return WaveState(std::move(eta), std::move(f), 0.0);
        }
        case InitialKind::SolitonLine: {
            Grid1D g1(g.nx, g.Lx);
            const double x0 = cfg.initial.x0 < 0 ? g.Lx / 2 : cfg.initial.x0;
            State1D s1 = soliton_init(g1, cfg.initial.amp, cfg.params, x0);
            Field2D eta(g), w(g);
            for (int j = 0; j < g.ny; ++j)
                for (int i = 0; i < g.nx; ++i) {
                    eta.at(i, j) = s1.eta.at(i);
                    w.at(i, j) = s1.w.at(i);
                }
            return WaveState(std::move(eta), potential_from_w(w), 0.0);
        }
        case InitialKind::File: {
            WaveState s = read_snapshot(cfg.initial.file);
            if (s.eta.grid() != g)
                throw ConfigError("snapshot grid does not match [grid] in '" +
                                  cfg.initial.file + "'");
            return s;
        }
    }
    throw ConfigError("unknown initial kind");
}

std::string snap_name(int step) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "snap_%06d.b2p1snap", step);
    return buf;
}

void print_warnings(const RunConfig& cfg) {
    for (const std::string& w : cfg.warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_simulate(const RunConfig& cfg) {
    fs::create_directories(cfg.output.dir);
    print_warnings(cfg);
    const Bathymetry bath = make_bathymetry(cfg.bathymetry, cfg.grid);
    const StepperConfig scfg = stepper_config(cfg);
    const int steps = step_count(cfg);

    std::optional<CsvWriter> diag;
    if (cfg.output.csv) {
        diag.emplace(cfg.output.dir + "/diagnostics.csv");
        diag->header({"t", "mass", "l2_eta", "linf_eta", "tail_fraction"});
    }
    auto record = [&](const WaveState& s, int step) {
        if (diag) {
            Diagnostics d = diagnostics(s);
            diag->row({s.t, d.mass, d.l2_eta, d.linf_eta, d.spectrum_tail_fraction});
        }
        if (cfg.output.snapshots && cfg.time.snapshot_every > 0 &&
            (step % cfg.time.snapshot_every == 0 || step == steps))
            write_snapshot(cfg.output.dir + "/" + snap_name(step), s);
    };

    if (cfg.formulation == Formulation::Pair) {
        WaveState s = make_initial_impl(cfg);
        record(s, 0);
        for (int i = 1; i <= steps; ++i) {
            s = step_rk4(s, scfg, bath, cfg.params, cfg.regime, cfg.st_mode);
            record(s, i);
        }
        std::cout << "simulate: " << steps << " steps to t = " << format_double(s.t)
                  << ", linf_eta = " << format_double(s.eta.max_abs()) << "\n";
    } else {
        WaveState init = make_initial_impl(cfg);
        ScalarState s = scalar_launch(init, bath, cfg.params, cfg.regime);
        ScalarStepConfig sscfg{scfg.dt, scfg.dealias};
        auto surface = [&](const ScalarState& st) {
            return WaveState(eta_from_f(st, cfg.params, cfg.regime), st.f, st.t);
        };
        record(surface(s), 0);
        for (int i = 1; i <= steps; ++i) {
            s = scalar_step(s, sscfg, bath, cfg.params, cfg.regime);
            record(surface(s), i);
        }
        std::cout << "simulate (scalar): " << steps << " steps to t = " << format_double(s.t)
                  << "\n";
    }
    return kOk;
}

int cmd_residual(const RunConfig& cfg) {
    fs::create_directories(cfg.output.dir);
    print_warnings(cfg);
    const Bathymetry bath = make_bathymetry(cfg.bathymetry, cfg.grid);
    PlaneWaveComponent c{cfg.initial.jx, cfg.initial.jy, cfg.initial.amp, cfg.initial.phase,
                         cfg.initial.branch};
    PlaneWaveJet jet(cfg.grid, {c}, cfg.params.ratio(), 0.0);
    const double res =
        scalar_residual(jet, bath, cfg.params, cfg.regime, cfg.form).max_abs();
    CsvWriter out(cfg.output.dir + "/residual.csv");
    out.header({"jx", "jy", "omega", "residual_sup"});
    out.row({double(c.jx), double(c.jy), jet.omega(0), res});
    std::cout << "residual: mode (" << c.jx << "," << c.jy << "), omega = "
              << format_double(jet.omega(0)) << ", sup = " << format_double(res) << "\n";
    return kOk;
}

double harmonic_equation_residual(const HarmonicField& u, const HarmonicField& source,
                                  double ratio) {
    // u solves u_xx + ratio u_yy - u_tt = -source in this sign convention:
    // wave_operator(u) returns the (omega^2 - k^2) form, equal to source.
    HarmonicField r = u.wave_operator(ratio) + source.scaled(-1.0);
    double worst = 0.0;
    for (double t : {0.0, 0.37, 1.0}) worst = std::max(worst, r.evaluate(t).max_abs());
    return worst;
}

int cmd_perturb(const RunConfig& cfg, bool secular) {
    fs::create_directories(cfg.output.dir);
    print_warnings(cfg);
    const Bathymetry bath = make_bathymetry(cfg.bathymetry, cfg.grid);
    PlaneWaveSpec spec;
    spec.comps.push_back({cfg.initial.jx, cfg.initial.jy, cfg.initial.amp, cfg.initial.phase,
                          cfg.initial.branch});
    const double ratio = cfg.params.ratio();

    CorrectionSources src = correction_sources(spec, cfg.grid, bath, cfg.params);
    const ResonancePolicy policy = secular ? ResonancePolicy::Secular : ResonancePolicy::Error;
    std::vector<std::string> warnings;
    Corrections corr;
    corr.a = solve_correction(src.Sa, cfg.params, -1.0, policy, &warnings);
    corr.b = solve_correction(src.Sb, cfg.params, -1.0, policy, &warnings);
    corr.g = solve_correction(src.Sg, cfg.params, -1.0, policy, &warnings);
    corr.d = solve_correction(src.Sd, cfg.params, -1.0, policy, &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";

    CsvWriter out(cfg.output.dir + "/perturb.csv");
    out.header({"correction", "harmonics", "equation_residual"});
    const struct {
        const char* name;
        const HarmonicField* u;
        const HarmonicField* s;
    } rows[] = {{"alpha", &corr.a, &src.Sa},
                {"beta", &corr.b, &src.Sb},
                {"gamma", &corr.g, &src.Sg},
                {"delta", &corr.d, &src.Sd}};
    for (const auto& r : rows) {
        const double res = harmonic_equation_residual(*r.u, *r.s, ratio);
        out.row(std::vector<std::string>{r.name, std::to_string(r.u->harmonics().size()),
                                         format_double(res)});
        std::cout << "perturb: " << r.name << " correction, "
                  << r.u->harmonics().size() << " harmonics, equation residual "
                  << format_double(res) << "\n";
    }
    return kOk;
}

int cmd_reduce_check(const RunConfig& cfg) {
    fs::create_directories(cfg.output.dir);
    print_warnings(cfg);
    const Bathymetry bath = make_bathymetry(cfg.bathymetry, cfg.grid);
    WaveState s = make_initial_impl(cfg);
    ReductionReport rep = reduction_check(s, bath, cfg.params, cfg.regime, step_count(cfg),
                                          stepper_config(cfg), cfg.st_mode);
    CsvWriter out(cfg.output.dir + "/reduce.csv");
    out.header({"max_diff", "max_y_variance", "reducible"});
    out.row({rep.max_diff, rep.max_y_variance, rep.reducible ? 1.0 : 0.0});
    for (const std::string& n : rep.notes) std::cout << "reduce-check: " << n << "\n";
    std::cout << "reduce-check: max |eta_2D - eta_1D| = " << format_double(rep.max_diff)
              << ", max y-variance = " << format_double(rep.max_y_variance) << "\n";
    return rep.reducible ? kOk : kError;
}

double crest_position(const Field1D& eta) {
    const Grid1D& g = eta.grid();
    int best = 0;
    for (int i = 1; i < g.n; ++i)
        if (eta.at(i) > eta.at(best)) best = i;
    const double ym = eta.at((best + g.n - 1) % g.n), y0 = eta.at(best),
                 yp = eta.at((best + 1) % g.n);
    const double den = ym - 2 * y0 + yp;
    const double frac = den != 0.0 ? 0.5 * (ym - yp) / den : 0.0;
    return g.x(best) + frac * g.dx();
}

int cmd_soliton(const RunConfig& cfg, bool as_printed) {
    fs::create_directories(cfg.output.dir);
    print_warnings(cfg);
    Grid1D g(cfg.grid.nx, cfg.grid.Lx);
    const SmallParams& p = cfg.params;
    const double amp = cfg.initial.amp;
    const double x0 = cfg.initial.x0 < 0 ? g.L / 2 : cfg.initial.x0;
    const double expected = 1.0 + p.alpha * amp / 2.0;
    const double dt = cfg.dt();
    const int steps = step_count(cfg);
    const Bathymetry1D bath = Bathymetry1D::flat(g, 0.0);

    Field1D eta_kdv = soliton_eta(g, amp, p, x0);
    State1D s = soliton_init(g, amp, p, x0);
    const double c_disp = kdv_c_disp(p, as_printed);
    StepperConfig scfg = stepper_config(cfg);

    for (int i = 0; i < steps; ++i) {
        eta_kdv = step_rk4_kdv(eta_kdv, dt, bath, p, c_disp);
        s = step_rk4_1d(s, scfg, bath, p, cfg.regime, cfg.st_mode);
    }
    const double t_end = steps * dt;

    CsvWriter out(cfg.output.dir + "/soliton.csv");
    out.header({"model", "speed", "expected_speed", "shape_drift"});
    auto report = [&](const char* name, const Field1D& eta) {
        double travel = crest_position(eta) - x0;
        while (travel < -g.L / 2) travel += g.L;  // unwrap one period
        const double speed = travel / t_end;
        Field1D ref = soliton_eta(g, amp, p, x0 + speed * t_end);
        const double drift = std::sqrt(integral(pointwise(eta - ref, eta - ref)) /
                                       integral(pointwise(ref, ref)));
        out.row(std::vector<std::string>{name, format_double(speed), format_double(expected),
                                         format_double(drift)});
        std::cout << "soliton-demo: " << name << " speed " << format_double(speed)
                  << " (expected " << format_double(expected) << "), shape drift "
                  << format_double(drift) << "\n";
    };
    report("kdv", eta_kdv);
    report("pair", s.eta);
    return kOk;
}

int cmd_potential(const RunConfig& cfg) {
    fs::create_directories(cfg.output.dir);
    print_warnings(cfg);
    const Bathymetry bath = make_bathymetry(cfg.bathymetry, cfg.grid);
    const Field2D f = make_initial_impl(cfg).eta;  // any smooth band-limited profile
    const std::vector<double> zs = {0.0, 0.25, 0.5, 0.75, 1.0};
    CsvWriter out(cfg.output.dir + "/potential.csv");
    out.header({"M", "laplace_res", "bottom_res"});
    for (int M = 1; M <= 3; ++M) {
        PotentialSeries ps(f, bottom_F(f, bath, cfg.params, cfg.regime), M, cfg.params);
        PotentialResiduals r = potential_residuals(ps, bath, zs);
        out.row({double(M), r.laplace, r.bottom});
        std::cout << "potential: M = " << M << ", laplace " << format_double(r.laplace)
                  << ", bottom " << format_double(r.bottom) << "\n";
    }
    return kOk;
}

// Formulation cross-check at one epsilon: matched plane-wave initial data,
// pair vs scalar, sup-norm of the recovered-surface difference.
double formulation_gap(double eps, int steps, double dt) {
    Grid2D g(64, 64, 2 * M_PI, 2 * M_PI);
    SmallParams p(eps, eps, eps, 0.0);
    const Bathymetry bath = Bathymetry::flat(g, 0.0);

    const double kx = g.kx(1), om = std::sqrt(kx * kx);
    const double amp = 0.01;
    Field2D eta = Field2D::sample(g, [&](double x, double) { return amp * std::cos(kx * x); });
    Field2D f =
        Field2D::sample(g, [&](double x, double) { return amp / om * std::sin(kx * x); });

    StepperConfig scfg;
    scfg.dt = dt;
    WaveState ws(eta, f, 0.0);
    ScalarState ss = scalar_launch(ws, bath, p, Regime::Case1);
    ScalarStepConfig sscfg{dt, true};
    for (int i = 0; i < steps; ++i) {
        ws = step_rk4(ws, scfg, bath, p, Regime::Case1);
        ss = scalar_step(ss, sscfg, bath, p, Regime::Case1);
    }
    return (ws.eta - eta_from_f(ss, p, Regime::Case1)).max_abs();
}

int sweep_threads() {
    if (const char* env = std::getenv("B2P1_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? int(hc) : 1;
}

int cmd_sweep(const RunConfig& cfg) {
    fs::create_directories(cfg.output.dir);
    const std::vector<double> eps = {0.2, 0.1, 0.05};
    // The scalar form carries explicit fourth-derivative dispersion; keep dt
    // inside the RK4 stability band for the dealiased modes at eps = 0.2.
    const int steps = std::max(1, std::min(step_count(cfg), 100));
    const double dt = 0.01;

    std::vector<double> gaps(eps.size(), 0.0);
    std::vector<std::exception_ptr> errs(eps.size());
    const int max_threads = sweep_threads();
    for (size_t base = 0; base < eps.size(); base += size_t(max_threads)) {
        std::vector<std::thread> pool;
        for (size_t i = base; i < eps.size() && i < base + size_t(max_threads); ++i)
            pool.emplace_back([&, i] {
                try {
                    gaps[i] = formulation_gap(eps[i], steps, dt);
                } catch (...) {
                    errs[i] = std::current_exception();
                }
            });
        for (std::thread& th : pool) th.join();
    }
    for (const std::exception_ptr& e : errs)
        if (e) std::rethrow_exception(e);

    // Log-log least-squares slope of gap against epsilon.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < eps.size(); ++i) {
        const double lx = std::log(eps[i]), ly = std::log(gaps[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = double(eps.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);

    CsvWriter out(cfg.output.dir + "/sweep.csv");
    out.header({"epsilon", "formulation_gap", "slope"});
    for (size_t i = 0; i < eps.size(); ++i) out.row({eps[i], gaps[i], slope});
    std::cout << "sweep: formulation-gap slope " << format_double(slope) << " over "
              << eps.size() << " epsilons\n";
    return kOk;
}

int cmd_derive(int case_no, bool diff_printed, const std::string& out_dir) {
    const std::string report = derive_report(case_no, diff_printed);
    std::cout << report;
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_text_file(out_dir + "/derive.txt", report);
    }
    return kOk;
}

}  // namespace

int status_for(const std::exception& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return kConfigError;
    if (dynamic_cast<const NonFiniteState*>(&e) || dynamic_cast<const PicardDiverged*>(&e) ||
        dynamic_cast<const NonFiniteField*>(&e) || dynamic_cast<const SlopeTooLarge*>(&e))
        return kInstability;
    if (dynamic_cast<const ResonantForcing*>(&e)) return kResonance;
    return kError;
}

WaveState make_initial(const RunConfig& cfg) { return make_initial_impl(cfg); }

ScalarState scalar_launch(const WaveState& s, const Bathymetry& bath, const SmallParams& p,
                          Regime r) {
    return ScalarState(s.f, rhs(s, bath, p, r).f_t, s.t);
}

std::string derive_report(int case_no, bool diff_printed) {
    const Regime r = regime_from_case(case_no);
    std::ostringstream out;
    out << "case " << case_no << " single-equation form (derived):\n"
        << series::derive_scalar_equation(r).serialize() << "\n";
    if (diff_printed) {
        const series::TermSum diff =
            series::diff_termsums(series::printed_scalar_equation(r),
                                  series::derive_scalar_equation(r));
        if (diff.terms().empty()) {
            out << "diff vs typeset equation: empty\n";
        } else {
            out << "diff vs typeset equation (" << diff.terms().size() << " terms):\n"
                << diff.serialize() << "\n";
        }
    }
    return out.str();
}

int run_cli(int argc, const char* const* argv) {
    CliOverrides ov;
    int derive_case = 1;
    bool diff_printed = false;

    CLI::App app{"pseudospectral Boussinesq wave lab"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub, bool with_config = true) {
        if (with_config) sub->add_option("--config", ov.config_path, "config file path");
        sub->add_option("--out", ov.out_dir, "output directory override");
        sub->add_option("--case", ov.case_no, "regime case override (1-4)");
        sub->add_option("--seed", ov.seed, "seed for randomized initial kinds");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "advance the wave system");
    add_common(simulate);
    simulate->add_option("--formulation", ov.formulation, "pair|scalar");
    simulate->add_option("--form", ov.form, "printed|consistent");

    CLI::App* residual = app.add_subcommand("residual", "plane-wave residual of the single-f equation");
    add_common(residual);
    residual->add_option("--form", ov.form, "printed|consistent");

    CLI::App* perturb = app.add_subcommand("perturb", "first-order perturbation cascade");
    add_common(perturb);
    perturb->add_flag("--secular", ov.secular, "accept resonant harmonics as secular terms");

    CLI::App* reduce = app.add_subcommand("reduce-check", "2D vs 1D reduction comparison");
    add_common(reduce);

    CLI::App* soliton = app.add_subcommand("soliton-demo", "1D soliton propagation benchmark");
    add_common(soliton);
    soliton->add_flag("--as-printed", ov.as_printed, "bare 1/6 dispersion coefficient");

    CLI::App* potential = app.add_subcommand("potential", "potential-series residual tables");
    add_common(potential);

    CLI::App* derive = app.add_subcommand("derive", "print the derived single-f equation");
    derive->add_option("--case", derive_case, "regime case (1-4)")->required();
    derive->add_flag("--diff-printed", diff_printed, "diff against the typeset equation");
    derive->add_option("--out", ov.out_dir, "output directory override");

    CLI::App* sweep = app.add_subcommand("sweep", "formulation-gap convergence sweep");
    add_common(sweep);

    try {
        app.parse(argc, const_cast<char**>(argv));
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kConfigError;
    }

    const auto t_start = std::chrono::steady_clock::now();
    try {
        if (derive->parsed()) return cmd_derive(derive_case, diff_printed, ov.out_dir);

        std::string config_text;
        RunConfig cfg = load_config(ov, &config_text);
        int code = kError;
        std::string name;
        if (simulate->parsed()) { code = cmd_simulate(cfg); name = "simulate"; }
        else if (residual->parsed()) { code = cmd_residual(cfg); name = "residual"; }
        else if (perturb->parsed()) { code = cmd_perturb(cfg, ov.secular); name = "perturb"; }
        else if (reduce->parsed()) { code = cmd_reduce_check(cfg); name = "reduce-check"; }
        else if (soliton->parsed()) { code = cmd_soliton(cfg, ov.as_printed); name = "soliton-demo"; }
        else if (potential->parsed()) { code = cmd_potential(cfg); name = "potential"; }
        else if (sweep->parsed()) { code = cmd_sweep(cfg); name = "sweep"; }
        else throw Error("no subcommand selected");

        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
        write_manifest(cfg.output.dir, name, config_text, ov, wall);
        return code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return status_for(e);
    }
}

}  // namespace b2p1
