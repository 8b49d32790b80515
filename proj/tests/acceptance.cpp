// Acceptance harness: one PASS/FAIL line per criterion.
//
// Usage: hfv_acceptance [criterion ...]   (no argument runs all of them)
// Artifacts (convergence CSVs, snapshots) go to ./acceptance_out/<criterion>/.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hfv/driver.hpp"
#include "hfv/limiters.hpp"
#include "hfv/weno_ao.hpp"
#include "oracle.hpp"

namespace fs = std::filesystem;
using namespace hfv;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what + (ok ? "" : " [violated]");
        pass = pass && ok;
    }
};

std::string fmt(const char* f, double a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

fs::path out_dir(const std::string& criterion) {
    const auto p = fs::path("acceptance_out") / criterion;
    fs::create_directories(p);
    return p;
}

void progress(const std::string& s) {
    std::fprintf(stderr, "  .. %s\n", s.c_str());
    std::fflush(stderr);
}

RunConfig base_config(CaseId id, SolverKind s, ReconMode m) {
    RunConfig c;
    c.case_id = id;
    c.solver = s;
    c.recon = m;
    c.format = OutputFormat::none;
    return c;
}

const char* solver_name(SolverKind s) { return s == SolverKind::gks_s2o4 ? "gks" : "lf"; }

std::string combo(SolverKind s, ReconMode m) { return std::string(solver_name(s)) + "/" + to_string(m); }

// ---------------------------------------------------------------------------
// Convergence

Outcome check_convergence(const std::string& name, RunConfig cfg, const std::vector<int>& meshes, double lo, double hi,
                          std::size_t first_checked_row, double ref_l1_80) {
    Outcome o;
    const auto rows = convergence_study(cfg, meshes);
    std::fputs(format_convergence(rows).c_str(), stderr);
    auto dir = out_dir(name) / combo(cfg.solver, cfg.recon).replace(3, 1, "_");
    fs::create_directories(dir);
    write_convergence_csv(rows, (dir / "convergence.csv").string());
    std::ofstream(dir / "config.echo") << to_text(cfg);
    for (std::size_t r = first_checked_row; r < rows.size(); ++r) {
        const auto& row = rows[r];
        for (double ord : {row.order_l1, row.order_l2, row.order_linf}) {
            o.require(ord >= lo && ord <= hi, "N=" + std::to_string(row.n) + " order " + fmt("%.3f", ord));
        }
    }
    if (ref_l1_80 > 0.0) {
        for (const auto& row : rows) {
            if (row.n != 80) continue;
            const double ratio = row.err.l1 / ref_l1_80;
            o.require(ratio <= 3.0 && ratio >= 1.0 / 3.0, "L1(80) " + fmt("%.4e", row.err.l1));
        }
    }
    return o;
}

Outcome convergence_1d_gks() {
    auto cfg = base_config(CaseId::sine1d, SolverKind::gks_s2o4, ReconMode::hybrid);
    cfg.dt_dx = 0.25;
    return check_convergence("convergence_1d_gks", cfg, {20, 40, 80, 160}, 4.7, 5.1, 2, 3.045127e-08);
}

Outcome convergence_1d_lf() {
    auto cfg = base_config(CaseId::sine1d, SolverKind::lf_ssprk3, ReconMode::hybrid);
    cfg.dt_dx = 0.05;
    return check_convergence("convergence_1d_lf", cfg, {20, 40, 80, 160}, 4.6, 5.1, 2, 8.825108e-08);
}

Outcome convergence_2d() {
    Outcome o;
    for (auto s : {SolverKind::gks_s2o4, SolverKind::lf_ssprk3}) {
        auto cfg = base_config(CaseId::sine2d, s, ReconMode::hybrid);
        cfg.cfl = 0.1;
        cfg.t_end = 0.5;
        const auto r = check_convergence("convergence_2d", cfg, {20, 40, 80, 160}, 4.6, 1e9, 3, 0.0);
        o.require(r.pass, std::string(solver_name(s)) + ": " + r.detail);
    }
    return o;
}

// ---------------------------------------------------------------------------
// Degeneracy and conservation

Outcome degeneracy() {
    Outcome o;
    int compared = 0;
    for (auto id : {CaseId::uniform1d, CaseId::uniform2d, CaseId::sine1d, CaseId::sine2d, CaseId::shu_osher,
                    CaseId::config3, CaseId::config6, CaseId::rarefaction, CaseId::problem123, CaseId::hurricane}) {
        const auto spec = case_spec(id);
        for (auto s : {SolverKind::gks_s2o4, SolverKind::lf_ssprk3}) {
            auto weno = base_config(id, s, ReconMode::weno_ao);
            weno.nx = spec.dim == 1 ? spec.nx : 48;
            weno.t_end = 0.0;
            weno.max_steps = 25;
            if (id == CaseId::hurricane) weno.params.v0 = hurricane_v0_for_mach(1.0);
            auto hybrid = weno;
            hybrid.recon = ReconMode::hybrid;
            hybrid.alpha_thres = 0.0;
            const auto a = run(weno);
            const auto b = run(hybrid);
            bool same = a.failed == b.failed && a.steps == b.steps && a.time == b.time;
            if (same && spec.dim == 1) same = a.field1d->raw() == b.field1d->raw();
            if (same && spec.dim == 2) same = a.field2d->raw() == b.field2d->raw();
            if (!same) o.require(false, spec.name + " " + solver_name(s) + " differs");
            ++compared;
        }
    }
    o.require(true, std::to_string(compared) + " case/solver pairs compared bitwise");
    return o;
}

Outcome conservation() {
    Outcome o;
    for (auto s : {SolverKind::gks_s2o4, SolverKind::lf_ssprk3}) {
        auto cfg = base_config(CaseId::sine2d, s, ReconMode::hybrid);
        const auto spec = cfg.spec();
        const auto mesh = case_mesh_2d(spec, cfg.resolved_nx(), cfg.resolved_ny());
        const GammaModel g{cfg.gamma};
        Solver2D solver(Scheme2D(mesh, cfg.scheme_options(), case_boundary_2d(spec)),
                        initial_field_2d(spec, mesh, cfg.params, g));
        auto totals = [&](const Field2D& f) {
            Vec4 t;
            for (int j = 0; j < f.ny(); ++j)
                for (int i = 0; i < f.nx(); ++i) t += f(i, j);
            return t;
        };
        const auto before = totals(solver.field());
        const auto rep = solver.run({cfg.cfl, 0.0, 0.0, 100});
        o.require(!rep.failed && solver.steps() == 100, std::string(solver_name(s)) + " ran 100 steps");
        const auto after = totals(solver.field());
        double worst = 0.0;
        for (std::size_t k = 0; k < 4; ++k)
            worst = std::max(worst, std::abs(after[k] - before[k]) / std::max(std::abs(before[k]), 1e-300));
        o.require(worst < 1e-11, std::string(solver_name(s)) + " drift " + fmt("%.2e", worst));
    }
    return o;
}

// ---------------------------------------------------------------------------
// GKS flux oracle and reconstruction suite

Outcome gks_oracle() {
    Outcome o;
    const GammaModel g{};
    std::mt19937_64 rng(20240601);
    double worst_flux = 0.0;
    for (int t = 0; t < 50; ++t) {
        const auto r = oracle::random_recon(rng, g.gamma);
        GksParams params;
        const double dt = 0.005 * (1 + t % 4);
        const double delta = t % 2 == 0 ? 0.5 * dt : dt;
        const auto flux = gks_time_integrated_flux(r, delta, dt, params, g);
        const auto ref = oracle::gks_transport(r, delta, dt, params, g.gamma);
        double n = 0.0, e = 0.0;
        for (std::size_t k = 0; k < 4; ++k) {
            n = std::max(n, std::abs(ref[k]));
            e = std::max(e, std::abs(flux.transport[k] - ref[k]));
        }
        worst_flux = std::max(worst_flux, flux.physical ? e / n : INFINITY);
    }
    o.require(worst_flux < 1e-8, "flux rel err " + fmt("%.2e", worst_flux));

    double worst_moment = 0.0;
    const auto rule = oracle::gauss_legendre(10);
    std::uniform_real_distribution<double> vel(-3.0, 3.0), lam(0.1, 5.0);
    for (int t = 0; t < 30; ++t) {
        const MaxwellianState m{1.0, vel(rng), vel(rng), lam(rng)};
        const auto tab = build_moment_table(m, g);
        const double sigma = 1.0 / std::sqrt(2.0 * m.lambda);
        const double L = 14.0 * sigma;
        auto gauss = [&](double x) {
            return std::sqrt(m.lambda / std::numbers::pi) * std::exp(-m.lambda * (x - m.U) * (x - m.U));
        };
        for (int n = 0; n <= 6; ++n) {
            auto f = [&](double u) { return std::pow(u, n) * gauss(u); };
            const double scale = std::pow(std::abs(m.U) + sigma, n);
            const double full = oracle::integrate(f, m.U - L, m.U + L, 24, rule);
            const double plus = m.U + L > 0.0 ? oracle::integrate(f, std::max(0.0, m.U - L), m.U + L, 24, rule) : 0.0;
            const double minus = m.U - L < 0.0 ? oracle::integrate(f, m.U - L, std::min(0.0, m.U + L), 24, rule) : 0.0;
            const auto k = static_cast<std::size_t>(n);
            worst_moment = std::max({worst_moment, std::abs(tab.u_full[k] - full) / scale,
                                     std::abs(tab.u_plus[k] - plus) / scale, std::abs(tab.u_minus[k] - minus) / scale});
        }
        const auto xi = oracle::xi_moments(m.lambda, g.K());
        worst_moment = std::max({worst_moment, std::abs(tab.xi[1] - xi[1]) / xi[1], std::abs(tab.xi[2] - xi[2]) / xi[2]});
    }
    o.require(worst_moment < 1e-10, "moment err " + fmt("%.2e", worst_moment));
    return o;
}

Outcome reconstruction() {
    Outcome o;
    auto mono_avg = [](int n, double a, double b) {
        return (std::pow(b, n + 1) - std::pow(a, n + 1)) / ((n + 1) * (b - a));
    };
    const ReconConfig cfg{};
    double weno_err = 0.0;
    for (int n = 0; n <= 4; ++n) {
        for (double x0 : {-0.4, 0.3, 1.1}) {
            const double dx = 0.01;
            StencilValues s;
            s.dx = dx;
            for (int k = 0; k < 5; ++k) s.q[static_cast<std::size_t>(k)] = mono_avg(n, x0 + (k - 3) * dx, x0 + (k - 2) * dx);
            for (double xi : {0.0, -kGaussC, kGaussC - 1.0, -1.0}) {
                const auto r = weno_ao_reconstruct(s, cfg, xi * dx);
                weno_err = std::max(weno_err, std::abs(r.value - std::pow(x0 + xi * dx, n)));
            }
        }
    }
    o.require(weno_err < 1e-10, "WENO-AO degree<=4 err " + fmt("%.2e", weno_err));

    double df_err = 0.0;
    double mean_err = 0.0;
    const double dx = 0.3;
    const auto rule = oracle::gauss_legendre(4);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> d(-2.0, 2.0), a01(0.0, 1.0);
    for (int t = 0; t < 100; ++t) {
        const double c0 = d(rng), c1 = d(rng), c2 = d(rng);
        auto F = [&](double x) { return c0 * x + c1 * x * x / 2.0 + c2 * x * x * x / 3.0; };
        auto avg = [&](double lo, double hi) { return (F(hi) - F(lo)) / (hi - lo); };
        const double qm = avg(-2.0 * dx, -dx), q0 = avg(-dx, 0.0), qp = avg(0.0, dx);
        for (double x : {0.0, -0.5 * dx, -dx, -0.2 * dx}) {
            const auto pv = df_cubic_reconstruct(qm, q0, qp, 1.0, x, dx);
            df_err = std::max(df_err, std::abs(pv.value - (c0 + c1 * x + c2 * x * x)));
        }
        const double alpha = a01(rng);
        const double mean =
            oracle::integrate([&](double x) { return df_cubic_reconstruct(qm, q0, qp, alpha, x, dx).value; }, -dx, 0.0,
                              1, rule) /
            dx;
        mean_err = std::max(mean_err, std::abs(mean - q0));
    }
    o.require(df_err < 1e-12, "DF quadratic err " + fmt("%.2e", df_err));
    o.require(mean_err < 1e-13, "mean err " + fmt("%.2e", mean_err));

    double overshoot = 0.0;
    for (int jump = 1; jump <= 4; ++jump) {
        for (double h : {1.0, 0.5}) {
            StencilValues s;
            for (int k = 0; k < 5; ++k) s.q[static_cast<std::size_t>(k)] = k >= jump ? h : 0.0;
            for (double xi : {0.0, -kGaussC, kGaussC - 1.0, -1.0}) {
                const double v = weno_ao_reconstruct(s, cfg, xi).value;
                overshoot = std::max({overshoot, -v, v - h});
            }
        }
    }
    o.require(overshoot <= 1e-8, "step overshoot " + fmt("%.2e", std::max(overshoot, 0.0)));
    return o;
}

// ---------------------------------------------------------------------------
// Robustness

bool survives(RunConfig cfg, double mach) {
    set_named_param(cfg, "mach", mach);
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = run(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    progress(cfg.spec().name + " " + combo(cfg.solver, cfg.recon) + " Ma " + fmt("%.2f", mach) + ": " +
             (r.failed ? "failed at step " + std::to_string(r.steps + 1) + " (" + r.report.variable + ")"
                       : "completed " + std::to_string(r.steps) + " steps") +
             " in " + fmt("%.0f", secs) + " s");
    return !r.failed;
}

Outcome robustness_123() {
    Outcome o;
    auto cfg = [](SolverKind s, ReconMode m) { return base_config(CaseId::problem123, s, m); };
    o.require(!survives(cfg(SolverKind::gks_s2o4, ReconMode::weno_ao), 10.0), "weno_ao/gks fails at Ma 10");
    o.require(survives(cfg(SolverKind::gks_s2o4, ReconMode::hybrid), 20.0), "hybrid/gks completes Ma 20");
    o.require(survives(cfg(SolverKind::lf_ssprk3, ReconMode::hybrid), 60.0), "hybrid/lf completes Ma 60");
    o.require(!survives(cfg(SolverKind::lf_ssprk3, ReconMode::weno_ao), 12.0), "weno_ao/lf fails at Ma 12");
    return o;
}

struct DfSpread {
    long flagged = 0;
    double median_r = 0.0;
    double max_r = 0.0;
};

DfSpread df_spread(const DfField2D& a) {
    std::vector<double> r;
    const auto& m = a.mesh();
    for (int j = 0; j < m.ny; ++j)
        for (int i = 0; i < m.nx; ++i)
            if (a(i, j) < 0.5) r.push_back(std::hypot(m.xc(i), m.yc(j)));
    DfSpread s;
    s.flagged = static_cast<long>(r.size());
    if (r.empty()) return s;
    std::sort(r.begin(), r.end());
    s.median_r = r[r.size() / 2];
    s.max_r = r.back();
    return s;
}

Outcome robustness_hurricane() {
    Outcome o;
    auto cfg = [](SolverKind s, ReconMode m) { return base_config(CaseId::hurricane, s, m); };

    // hybrid/GKS at Ma 10, stepped by hand to sample the DF field
    {
        auto c = cfg(SolverKind::gks_s2o4, ReconMode::hybrid);
        set_named_param(c, "mach", 10.0);
        const auto spec = c.spec();
        const auto mesh = case_mesh_2d(spec, c.resolved_nx(), c.resolved_ny());
        const GammaModel g{c.gamma};
        Solver2D solver(Scheme2D(mesh, c.scheme_options(), case_boundary_2d(spec)),
                        initial_field_2d(spec, mesh, c.params, g));
        const auto dir = out_dir("robustness_hurricane");
        DfSpread early, late;
        bool failed = false;
        for (long n = 1; n <= spec.max_steps; ++n) {
            const auto rep = solver.step(solver.stable_dt(c.cfl));
            if (rep.failed) {
                failed = true;
                progress("hurricane gks/hybrid Ma 10 failed at step " + std::to_string(n));
                break;
            }
            if (n == 5 || n == spec.max_steps) {
                write_df_csv(solver.df(), (dir / ("df_step_" + detail::step_tag(n) + ".csv")).string());
                write_snapshot_csv(solver.field(), (dir / ("snapshot_step_" + detail::step_tag(n) + ".csv")).string(), g);
                (n == 5 ? early : late) = df_spread(solver.df());
            }
        }
        o.require(!failed, "hybrid/gks completes Ma 10");
        o.require(early.flagged > 0 && early.median_r < 0.5,
                  "DF<0.5 near centre at step 5 (" + std::to_string(early.flagged) + " cells, median r " +
                      fmt("%.3f", early.median_r) + ")");
        o.require(late.max_r > early.max_r,
                  "DF region extends outward (max r " + fmt("%.3f", early.max_r) + " -> " + fmt("%.3f", late.max_r) + ")");
    }
    o.require(!survives(cfg(SolverKind::gks_s2o4, ReconMode::weno_ao), 4.0), "weno_ao/gks fails by Ma 4");
    o.require(survives(cfg(SolverKind::lf_ssprk3, ReconMode::hybrid), 4.0), "hybrid/lf completes Ma 4");
    return o;
}

Outcome robustness_rarefaction() {
    Outcome o;
    struct Range {
        SolverKind s;
        double lo, hi;
    };
    for (const auto& r : {Range{SolverKind::lf_ssprk3, 1.0, 4.0}, Range{SolverKind::gks_s2o4, 1.0, 40.0}}) {
        const auto weno = base_config(CaseId::rarefaction, r.s, ReconMode::weno_ao);
        const auto sweep = bisect_max_mach([&](double m) { return survives(weno, m); }, r.lo, r.hi, 0.1);
        if (!sweep.conclusive) {
            o.require(false, std::string(solver_name(r.s)) + " weno_ao sweep inconclusive at " +
                                 fmt("%.1f", sweep.boundary));
            continue;
        }
        const double probe = sweep.min_failing;
        const bool hybrid_ok = survives(base_config(CaseId::rarefaction, r.s, ReconMode::hybrid), probe);
        o.require(hybrid_ok, std::string(solver_name(r.s)) + " weno_ao max Ma " + fmt("%.1f", sweep.max_surviving) +
                                 ", hybrid completes Ma " + fmt("%.1f", probe));
    }
    return o;
}

// ---------------------------------------------------------------------------
// Resolution and 2-D Riemann problems

Outcome shu_osher() {
    Outcome o;
    auto ref_cfg = base_config(CaseId::shu_osher, SolverKind::gks_s2o4, ReconMode::weno_ao);
    ref_cfg.nx = 2000;
    progress("shu_osher reference, 2000 cells");
    const auto ref = run(ref_cfg);
    if (ref.failed) {
        o.require(false, "reference run failed");
        return o;
    }
    const auto dir = out_dir("shu_osher");
    write_snapshot_csv(*ref.field1d, (dir / "reference.csv").string());
    const int n = 400;
    const int ratio = 2000 / n;
    std::vector<double> ref_avg(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < ratio; ++k) ref_avg[static_cast<std::size_t>(i)] += (*ref.field1d)(i * ratio + k)[0];
        ref_avg[static_cast<std::size_t>(i)] /= ratio;
    }
    for (auto s : {SolverKind::gks_s2o4, SolverKind::lf_ssprk3}) {
        std::map<ReconMode, double> dist;
        for (auto m : {ReconMode::weno_ao, ReconMode::hybrid, ReconMode::van_leer}) {
            auto c = base_config(CaseId::shu_osher, s, m);
            c.nx = n;
            const auto r = run(c);
            if (r.failed) {
                o.require(false, combo(s, m) + " failed");
                dist[m] = INFINITY;
                continue;
            }
            write_snapshot_csv(*r.field1d, (dir / (std::string(solver_name(s)) + "_" + to_string(m) + ".csv")).string());
            double d = 0.0;
            for (int i = 0; i < n; ++i) d += std::abs((*r.field1d)(i)[0] - ref_avg[static_cast<std::size_t>(i)]);
            dist[m] = d / n;
            progress("shu_osher " + combo(s, m) + " L1 " + fmt("%.4e", dist[m]));
        }
        const double w = dist[ReconMode::weno_ao];
        o.require(dist[ReconMode::hybrid] <= 1.15 * w,
                  std::string(solver_name(s)) + " hybrid/weno " + fmt("%.3f", dist[ReconMode::hybrid] / w));
        o.require(dist[ReconMode::van_leer] >= 1.5 * w,
                  std::string(solver_name(s)) + " van_leer/weno " + fmt("%.3f", dist[ReconMode::van_leer] / w));
    }
    return o;
}

Outcome riemann(const std::string& name, CaseId id, int n) {
    Outcome o;
    const auto q = quadrant_setup(id == CaseId::config3 ? QuadrantCase::config3 : QuadrantCase::config6);
    double lo = INFINITY, hi = 0.0;
    for (const auto& s : q.states) {
        lo = std::min(lo, s.rho);
        hi = std::max(hi, s.rho);
    }
    const auto dir = out_dir(name);
    for (auto s : {SolverKind::gks_s2o4, SolverKind::lf_ssprk3}) {
        for (auto m : {ReconMode::weno_ao, ReconMode::hybrid}) {
            auto c = base_config(id, s, m);
            c.nx = n;
            const auto t0 = std::chrono::steady_clock::now();
            const auto r = run(c);
            const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            progress(name + " " + combo(s, m) + (r.failed ? " failed" : " completed") + " after " +
                     std::to_string(r.steps) + " steps in " + fmt("%.0f", secs) + " s");
            if (r.failed) {
                o.require(false, combo(s, m) + " completes");
                continue;
            }
            write_snapshot_csv(*r.field2d, (dir / (std::string(solver_name(s)) + "_" + to_string(m) + ".csv")).string());
            double rmin = INFINITY, rmax = 0.0;
            const auto& f = *r.field2d;
            for (int j = 0; j < f.ny(); ++j)
                for (int i = 0; i < f.nx(); ++i) {
                    rmin = std::min(rmin, f(i, j)[0]);
                    rmax = std::max(rmax, f(i, j)[0]);
                }
            o.require(rmin >= 0.9 * lo && rmax <= 1.1 * hi,
                      combo(s, m) + " rho in [" + fmt("%.4f", rmin) + ", " + fmt("%.4f", rmax) + "]");
        }
    }
    return o;
}

Outcome riemann_config3() { return riemann("riemann_config3", CaseId::config3, 250); }
Outcome riemann_config6() { return riemann("riemann_config6", CaseId::config6, 400); }

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"convergence_1d_gks", convergence_1d_gks},
        {"convergence_1d_lf", convergence_1d_lf},
        {"convergence_2d", convergence_2d},
        {"degeneracy", degeneracy},
        {"conservation", conservation},
        {"gks_oracle", gks_oracle},
        {"reconstruction", reconstruction},
        {"robustness_123", robustness_123},
        {"robustness_hurricane", robustness_hurricane},
        {"robustness_rarefaction", robustness_rarefaction},
        {"shu_osher", shu_osher},
        {"riemann_config3", riemann_config3},
        {"riemann_config6", riemann_config6},
    };
    std::vector<std::string> wanted(argv + 1, argv + argc);
    for (const auto& w : wanted) {
        if (std::none_of(criteria.begin(), criteria.end(), [&](const auto& c) { return c.first == w; })) {
            std::fprintf(stderr, "unknown criterion '%s'\n", w.c_str());
            return 2;
        }
    }
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), name) == wanted.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %s (%.0f s): %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
