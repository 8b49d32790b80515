#pragma once

// Config-driven runs, grid-convergence studies and the maximum-Mach sweep.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hfv/cases.hpp"
#include "hfv/config.hpp"
#include "hfv/output.hpp"
#include "hfv/solver.hpp"

namespace hfv {

struct RunResult {
    bool failed = false;
    StepReport report;  // report of the last attempted step
    long steps = 0;
    double time = 0.0;
    std::optional<Field1D> field1d;
    std::optional<Field2D> field2d;
    std::optional<DfField1D> df1d;
    std::optional<DfField2D> df2d;
};

/// Called after every successful step.
using StepObserver = std::function<void(long step, double t)>;

namespace detail {

inline std::string step_tag(long step) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%06ld", step);
    return buf;
}

template <class Field, class Df>
void write_outputs(const RunConfig& cfg, const Field& f, const Df& a, const std::string& stem) {
    namespace fs = std::filesystem;
    const fs::path dir(cfg.out_dir);
    const GammaModel g{cfg.gamma};
    if (cfg.format == OutputFormat::csv || cfg.format == OutputFormat::both) {
        write_snapshot_csv(f, (dir / (stem + ".csv")).string(), g);
        write_df_csv(a, (dir / ("df_" + stem + ".csv")).string());
    }
    if (cfg.format == OutputFormat::vtk || cfg.format == OutputFormat::both)
        write_snapshot_vtk(f, (dir / (stem + ".vtk")).string(), g);
}

inline void write_report(const RunConfig& cfg, const RunResult& r) {
    const auto path = (std::filesystem::path(cfg.out_dir) / "report.txt").string();
    std::ofstream out(path);
    if (!out) throw OutputError("cannot write '" + path + "'");
    out << "status = " << (r.failed ? "failed" : "completed") << '\n'
        << "steps = " << r.steps << '\n'
        << "time = " << detail::format_double(r.time) << '\n';
    if (r.failed) {
        out << "failed_step = " << r.steps + 1 << '\n'
            << "failed_stage = " << r.report.stage << '\n'
            << "failed_i = " << r.report.i << '\n'
            << "failed_j = " << r.report.j << '\n'
            << "failed_variable = " << r.report.variable << '\n';
    }
}

inline double min_spacing(const Mesh1D& m) { return m.dx; }
inline double min_spacing(const Mesh2D& m) { return std::min(m.dx, m.dy); }

template <class Scheme>
RunResult run_scheme(const RunConfig& cfg, Scheme scheme, typename Scheme::Field init, const StepObserver& observer) {
    Solver<Scheme> solver(std::move(scheme), std::move(init));
    typename Solver<Scheme>::RunLimits lim;
    lim.cfl = cfg.cfl;
    lim.dt_fixed = cfg.dt > 0.0 ? cfg.dt : (cfg.dt_dx > 0.0 ? cfg.dt_dx * min_spacing(solver.field().mesh()) : 0.0);
    lim.t_end = cfg.resolved_t_end();
    lim.max_steps = cfg.resolved_max_steps();
    const bool write = !cfg.out_dir.empty() && cfg.format != OutputFormat::none;
    if (write) {
        std::filesystem::create_directories(cfg.out_dir);
        std::ofstream echo(std::filesystem::path(cfg.out_dir) / "config.echo");
        echo << to_text(cfg);
    }
    const auto rep = solver.run(lim, [&](const Solver<Scheme>& s, const StepReport&) {
        if (observer) observer(s.steps(), s.time());
        if (write && cfg.snapshot_every > 0 && s.steps() % cfg.snapshot_every == 0)
            write_outputs(cfg, s.field(), s.df(), "snapshot_" + step_tag(s.steps()));
    });
    RunResult r;
    r.failed = rep.failed;
    r.report = rep;
    r.steps = solver.steps();
    r.time = solver.time();
    if constexpr (std::is_same_v<Scheme, Scheme1D>) {
        r.field1d = solver.field();
        r.df1d = solver.df();
    } else {
        r.field2d = solver.field();
        r.df2d = solver.df();
    }
    if (write) {
        write_outputs(cfg, solver.field(), solver.df(), "snapshot_final");
        write_report(cfg, r);
    }
    return r;
}

}  // namespace detail

/// Runs the configured case to its horizon or the first failure.
[[nodiscard]] inline RunResult run(const RunConfig& cfg, const StepObserver& observer = {}) {
    const auto spec = cfg.spec();
    const GammaModel g{cfg.gamma};
    if (spec.dim == 1) {
        const auto mesh = case_mesh_1d(spec, cfg.resolved_nx());
        return detail::run_scheme(cfg, Scheme1D(mesh, cfg.scheme_options(), case_boundary_1d(spec)),
                                  initial_field_1d(spec, mesh, cfg.params, g), observer);
    }
    const auto mesh = case_mesh_2d(spec, cfg.resolved_nx(), cfg.resolved_ny());
    return detail::run_scheme(cfg, Scheme2D(mesh, cfg.scheme_options(), case_boundary_2d(spec)),
                              initial_field_2d(spec, mesh, cfg.params, g), observer);
}

// ---------------------------------------------------------------------------
// Convergence

struct ErrorNorms {
    double l1 = 0.0;    // mean absolute error
    double l2 = 0.0;    // root-mean-square error
    double linf = 0.0;  // max absolute error
};

/// Discrete norms of the density cell-average difference over interior cells.
[[nodiscard]] inline ErrorNorms density_error(const Field1D& a, const Field1D& b) {
    ErrorNorms e;
    const int n = a.nx();
    for (int i = 0; i < n; ++i) {
        const double d = std::abs(a(i)[0] - b(i)[0]);
        e.l1 += d;
        e.l2 += d * d;
        e.linf = std::max(e.linf, d);
    }
    e.l1 /= n;
    e.l2 = std::sqrt(e.l2 / n);
    return e;
}

[[nodiscard]] inline ErrorNorms density_error(const Field2D& a, const Field2D& b) {
    ErrorNorms e;
    const long n = static_cast<long>(a.nx()) * a.ny();
    for (int j = 0; j < a.ny(); ++j) {
        for (int i = 0; i < a.nx(); ++i) {
            const double d = std::abs(a(i, j)[0] - b(i, j)[0]);
            e.l1 += d;
            e.l2 += d * d;
            e.linf = std::max(e.linf, d);
        }
    }
    e.l1 /= static_cast<double>(n);
    e.l2 = std::sqrt(e.l2 / static_cast<double>(n));
    return e;
}

struct ConvergenceRow {
    int n = 0;
    ErrorNorms err;
    double order_l1 = std::nan("");  // NaN on the first row
    double order_l2 = std::nan("");
    double order_linf = std::nan("");
};

/// Observed order between consecutive meshes: log(E_prev / E) / log(n / n_prev).
[[nodiscard]] inline double observed_order(double e_coarse, double e_fine, int n_coarse, int n_fine) {
    return std::log(e_coarse / e_fine) / std::log(static_cast<double>(n_fine) / n_coarse);
}

[[nodiscard]] inline std::vector<ConvergenceRow> convergence_table(const std::vector<int>& meshes,
                                                                   const std::vector<ErrorNorms>& errors) {
    if (meshes.size() != errors.size()) throw std::invalid_argument("convergence_table: size mismatch");
    std::vector<ConvergenceRow> rows;
    for (std::size_t k = 0; k < meshes.size(); ++k) {
        ConvergenceRow r{meshes[k], errors[k]};
        if (k > 0) {
            const auto& p = rows.back();
            r.order_l1 = observed_order(p.err.l1, r.err.l1, p.n, r.n);
            r.order_l2 = observed_order(p.err.l2, r.err.l2, p.n, r.n);
            r.order_linf = observed_order(p.err.linf, r.err.linf, p.n, r.n);
        }
        rows.push_back(r);
    }
    return rows;
}

class RunFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs the smooth case on each mesh (n x n in 2-D) and measures the density
/// error against the exact cell averages at the final time.
[[nodiscard]] inline std::vector<ConvergenceRow> convergence_study(const RunConfig& base,
                                                                   const std::vector<int>& meshes) {
    const auto spec = base.spec();
    if (!spec.has_exact) throw std::invalid_argument("case '" + spec.name + "' has no exact solution");
    const GammaModel g{base.gamma};
    std::vector<ErrorNorms> errors;
    for (int n : meshes) {
        RunConfig cfg = base;
        cfg.nx = n;
        cfg.ny = spec.dim == 2 ? n : 1;
        cfg.out_dir.clear();
        const auto r = run(cfg);
        if (r.failed) throw RunFailure("convergence run failed at N = " + std::to_string(n));
        if (spec.dim == 1) {
            const auto exact = exact_sine_1d(r.field1d->mesh(), r.time, g);
            errors.push_back(density_error(*r.field1d, exact));
        } else {
            const auto exact = exact_sine_2d(r.field2d->mesh(), r.time, g);
            errors.push_back(density_error(*r.field2d, exact));
        }
    }
    return convergence_table(meshes, errors);
}

[[nodiscard]] inline std::string format_order(double x) {
    if (std::isnan(x)) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

inline constexpr const char* kConvergenceHeader = "n,l1,l2,linf,order_l1,order_l2,order_linf";

[[nodiscard]] inline std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream o;
    o << kConvergenceHeader << '\n';
    auto num = [](double x) { return std::isnan(x) ? std::string() : detail::format_double(x); };
    for (const auto& r : rows)
        o << r.n << ',' << num(r.err.l1) << ',' << num(r.err.l2) << ',' << num(r.err.linf) << ','
          << num(r.order_l1) << ',' << num(r.order_l2) << ',' << num(r.order_linf) << '\n';
    return o.str();
}

inline void write_convergence_csv(const std::vector<ConvergenceRow>& rows, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw OutputError("cannot write '" + path + "'");
    out << convergence_csv(rows);
    if (!out) throw OutputError("write failed for '" + path + "'");
}

/// Human-readable table: errors in %.6e, orders in %.2f.
[[nodiscard]] inline std::string format_convergence(const std::vector<ConvergenceRow>& rows) {
    std::ostringstream o;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%6s %14s %6s %14s %6s %14s %6s\n", "N", "L1", "order", "L2", "order", "Linf",
                  "order");
    o << buf;
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%6d %14.6e %6s %14.6e %6s %14.6e %6s\n", r.n, r.err.l1,
                      format_order(r.order_l1).c_str(), r.err.l2, format_order(r.order_l2).c_str(), r.err.linf,
                      format_order(r.order_linf).c_str());
        o << buf;
    }
    return o.str();
}

// ---------------------------------------------------------------------------
// Maximum-Mach sweep

struct SweepProbe {
    double mach = 0.0;
    bool survived = false;
};

struct SweepResult {
    bool conclusive = false;
    double max_surviving = std::nan("");  // largest grid value that survived
    double min_failing = std::nan("");    // smallest grid value that failed
    double boundary = std::nan("");       // inconclusive: the endpoint both probes agree on
    std::vector<SweepProbe> probes;
};

/// Bisection on the grid {k * resolution} between a surviving `lo` and a
/// failing `hi`. Assumes survival is monotone in the Mach number.
[[nodiscard]] inline SweepResult bisect_max_mach(const std::function<bool(double)>& survives, double lo, double hi,
                                                 double resolution = 0.1) {
    if (!(hi > lo) || !(resolution > 0.0)) throw std::invalid_argument("sweep: need lo < hi and resolution > 0");
    const double per_unit = 1.0 / resolution;
    const bool integral = std::abs(per_unit - std::round(per_unit)) < 1e-9;
    auto at = [&](long k) {
        return integral ? static_cast<double>(k) / std::round(per_unit) : static_cast<double>(k) * resolution;
    };
    long klo = std::lround(lo * per_unit);
    long khi = std::lround(hi * per_unit);
    SweepResult res;
    auto probe = [&](long k) {
        const double m = at(k);
        const bool ok = survives(m);
        res.probes.push_back({m, ok});
        return ok;
    };
    const bool lo_ok = probe(klo);
    const bool hi_ok = probe(khi);
    if (lo_ok == hi_ok || !lo_ok) {
        res.conclusive = false;
        res.boundary = lo_ok ? at(khi) : at(klo);
        if (lo_ok) res.max_surviving = at(khi);
        else res.min_failing = at(klo);
        return res;
    }
    while (khi - klo > 1) {
        const long mid = klo + (khi - klo) / 2;
        if (probe(mid)) klo = mid;
        else khi = mid;
    }
    res.conclusive = true;
    res.max_surviving = at(klo);
    res.min_failing = at(khi);
    return res;
}

/// Sets a named sweep parameter: `mach` maps through the case's Mach relation,
/// `p0`, `v0`, `p_side` are set directly.
inline void set_named_param(RunConfig& cfg, std::string_view name, double value) {
    if (name == "mach") set_sweep_param(cfg.case_id, cfg.params, param_of_mach(cfg.case_id, value, GammaModel{cfg.gamma}));
    else if (name == "p0") cfg.params.p0 = value;
    else if (name == "v0") cfg.params.v0 = value;
    else if (name == "p_side") cfg.params.p_side = value;
    else throw std::invalid_argument("unknown sweep parameter '" + std::string(name) + "'");
}

/// Whether the run reaches its horizon with the named parameter set to value.
[[nodiscard]] inline bool survives_at(const RunConfig& base, std::string_view name, double value) {
    RunConfig cfg = base;
    cfg.out_dir.clear();
    set_named_param(cfg, name, value);
    return !run(cfg).failed;
}

/// Bisection over a named parameter.
[[nodiscard]] inline SweepResult parameter_sweep(const RunConfig& base, std::string_view name, double lo, double hi,
                                                 double resolution = 0.1,
                                                 const std::function<void(const SweepProbe&)>& on_probe = {}) {
    return bisect_max_mach(
        [&](double v) {
            const bool ok = survives_at(base, name, v);
            if (on_probe) on_probe({v, ok});
            return ok;
        },
        lo, hi, resolution);
}

[[nodiscard]] inline SweepResult max_mach_sweep(const RunConfig& base, double mach_lo, double mach_hi,
                                                double resolution = 0.1,
                                                const std::function<void(const SweepProbe&)>& on_probe = {}) {
    return parameter_sweep(base, "mach", mach_lo, mach_hi, resolution, on_probe);
}

}  // namespace hfv
