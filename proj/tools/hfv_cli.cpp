// hfv command-line driver: run, converge, sweep.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hfv/config.hpp"
#include "hfv/driver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRunFailure = 2;

hfv::RunConfig load(const std::string& path, const std::string& out, const std::vector<std::string>& overrides) {
    auto cfg = hfv::load_config(path);
    for (const auto& kv : overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw hfv::ConfigError("--set expects key=value, got '" + kv + "'");
        hfv::set_config_value(cfg, hfv::detail::trim(std::string_view(kv).substr(0, eq)),
                              hfv::detail::trim(std::string_view(kv).substr(eq + 1)));
    }
    if (!out.empty()) cfg.out_dir = out;
    return cfg;
}

void echo_config(const hfv::RunConfig& cfg) {
    if (cfg.out_dir.empty()) return;
    std::filesystem::create_directories(cfg.out_dir);
    std::ofstream(std::filesystem::path(cfg.out_dir) / "config.echo") << hfv::to_text(cfg);
}

void print_failure(const hfv::RunResult& r) {
    std::printf("FAILED at step %ld (t = %.9g), stage %d, cell (%d, %d), variable %s\n", r.steps + 1, r.time,
                r.report.stage, r.report.i, r.report.j, r.report.variable.c_str());
}

int cmd_run(const hfv::RunConfig& cfg, bool verbose) {
    const auto r = hfv::run(cfg, [&](long step, double t) {
        if (verbose) std::printf("step %6ld  t = %.9g\n", step, t);
    });
    if (r.failed) {
        print_failure(r);
        return kExitRunFailure;
    }
    std::printf("completed %ld steps, t = %.9g\n", r.steps, r.time);
    return kExitOk;
}

int cmd_converge(const hfv::RunConfig& cfg, const std::vector<int>& meshes) {
    std::vector<hfv::ConvergenceRow> rows;
    try {
        rows = hfv::convergence_study(cfg, meshes);
    } catch (const hfv::RunFailure& e) {
        std::printf("FAILED: %s\n", e.what());
        return kExitRunFailure;
    }
    std::fputs(hfv::format_convergence(rows).c_str(), stdout);
    if (!cfg.out_dir.empty()) {
        echo_config(cfg);
        hfv::write_convergence_csv(rows, (std::filesystem::path(cfg.out_dir) / "convergence.csv").string());
    }
    return kExitOk;
}

int cmd_sweep(const hfv::RunConfig& cfg, const std::string& param, double lo, double hi, double res) {
    const auto s = hfv::parameter_sweep(cfg, param, lo, hi, res, [&](const hfv::SweepProbe& p) {
        std::printf("%s = %.6g: %s\n", param.c_str(), p.mach, p.survived ? "survived" : "failed");
        std::fflush(stdout);
    });
    if (s.conclusive) {
        std::printf("max surviving %s = %.6g (first failure at %.6g)\n", param.c_str(), s.max_surviving,
                    s.min_failing);
    } else {
        std::printf("inconclusive: both endpoints %s, boundary %s = %.6g\n",
                    std::isnan(s.max_surviving) ? "failed" : "survived", param.c_str(), s.boundary);
    }
    if (!cfg.out_dir.empty()) {
        echo_config(cfg);
        std::ofstream out(std::filesystem::path(cfg.out_dir) / "sweep.csv");
        out << "value,survived\n";
        for (const auto& p : s.probes) out << hfv::detail::format_double(p.mach) << ',' << (p.survived ? 1 : 0) << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-order finite-volume Euler solver"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::vector<std::string> overrides;
    auto common = [&](CLI::App* sub) {
        sub->add_option("config", config_path, "key = value run configuration")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "output directory (overrides out_dir)");
        sub->add_option("--set", overrides, "override a config key, key=value (repeatable)");
    };

    bool verbose = false;
    auto* run = app.add_subcommand("run", "run one case to its horizon");
    common(run);
    run->add_flag("-v,--verbose", verbose, "print every step");

    std::vector<int> meshes{20, 40, 80, 160};
    auto* converge = app.add_subcommand("converge", "grid-convergence study on a smooth case");
    common(converge);
    converge->add_option("--meshes", meshes, "cells per direction")->delimiter(',');

    std::string param = "mach";
    double lo = 0.0;
    double hi = 0.0;
    double res = 0.1;
    auto* sweep = app.add_subcommand("sweep", "bisection for the largest surviving parameter value");
    common(sweep);
    sweep->add_option("--param", param, "mach, p0, v0 or p_side")->check(CLI::IsMember({"mach", "p0", "v0", "p_side"}));
    sweep->add_option("--lo", lo, "surviving end of the range")->required();
    sweep->add_option("--hi", hi, "failing end of the range")->required();
    sweep->add_option("--res", res, "grid resolution");

    CLI11_PARSE(app, argc, argv);

    try {
        const auto cfg = load(config_path, out_dir, overrides);
        if (*run) return cmd_run(cfg, verbose);
        if (*converge) return cmd_converge(cfg, meshes);
        if (*sweep) return cmd_sweep(cfg, param, lo, hi, res);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
