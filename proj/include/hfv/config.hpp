#pragma once

// Flat `key = value` run configuration. One key per line, `#` starts a
// comment, unknown keys are rejected.

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hfv/cases.hpp"
#include "hfv/scheme.hpp"

namespace hfv {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { csv, vtk, both, none };

struct RunConfig {
    CaseId case_id = CaseId::sine1d;
    SolverKind solver = SolverKind::gks_s2o4;
    ReconMode recon = ReconMode::hybrid;
    int nx = 0;               // 0: case default
    int ny = 0;
    double cfl = 0.5;
    double dt = 0.0;          // > 0: fixed step instead of the CFL estimate
    double dt_dx = 0.0;       // > 0 and dt unset: fixed step dt_dx * min(dx, dy)
    double t_end = -1.0;      // < 0: case default; 0: no time limit
    long max_steps = -1;      // < 0: case default; 0: no step limit
    double alpha_thres = 0.5;
    double d_h = 0.85;
    double d_l = 0.85;
    double gamma = 1.4;
    double gks_c1 = 0.01;
    double gks_c2 = 5.0;
    CaseParams params{};
    std::string out_dir;
    OutputFormat format = OutputFormat::csv;
    long snapshot_every = 0;  // 0: final snapshot only

    [[nodiscard]] CaseSpec spec() const { return case_spec(case_id); }
    [[nodiscard]] int resolved_nx() const { return nx > 0 ? nx : spec().nx; }
    [[nodiscard]] int resolved_ny() const { return ny > 0 ? ny : (spec().dim == 2 ? resolved_nx() : 1); }
    [[nodiscard]] double resolved_t_end() const { return t_end >= 0.0 ? t_end : spec().t_end; }
    [[nodiscard]] long resolved_max_steps() const { return max_steps >= 0 ? max_steps : spec().max_steps; }

    [[nodiscard]] SchemeOptions scheme_options() const {
        SchemeOptions o;
        o.solver = solver;
        o.recon.mode = recon;
        o.recon.alpha_thres = alpha_thres;
        o.recon.d_h = d_h;
        o.recon.d_l = d_l;
        o.gamma.gamma = gamma;
        o.gks.c1 = gks_c1;
        o.gks.c2 = gks_c2;
        return o;
    }
};

// ---------------------------------------------------------------------------
// Enum <-> text

[[nodiscard]] inline std::string to_string(SolverKind s) { return s == SolverKind::gks_s2o4 ? "gks_s2o4" : "lf_ssprk3"; }

[[nodiscard]] inline std::string to_string(ReconMode m) {
    switch (m) {
        case ReconMode::weno_ao: return "weno_ao";
        case ReconMode::hybrid: return "hybrid";
        case ReconMode::van_leer: return "van_leer";
    }
    return "?";
}

[[nodiscard]] inline std::string to_string(OutputFormat f) {
    switch (f) {
        case OutputFormat::csv: return "csv";
        case OutputFormat::vtk: return "vtk";
        case OutputFormat::both: return "csv,vtk";
        case OutputFormat::none: return "none";
    }
    return "?";
}

[[nodiscard]] inline SolverKind parse_solver(std::string_view s) {
    if (s == "gks_s2o4" || s == "gks") return SolverKind::gks_s2o4;
    if (s == "lf_ssprk3" || s == "lf") return SolverKind::lf_ssprk3;
    throw ConfigError("unknown solver '" + std::string(s) + "'");
}

[[nodiscard]] inline ReconMode parse_recon(std::string_view s) {
    if (s == "weno_ao") return ReconMode::weno_ao;
    if (s == "hybrid") return ReconMode::hybrid;
    if (s == "van_leer") return ReconMode::van_leer;
    throw ConfigError("unknown recon mode '" + std::string(s) + "'");
}

[[nodiscard]] inline OutputFormat parse_format(std::string_view s) {
    if (s == "csv") return OutputFormat::csv;
    if (s == "vtk") return OutputFormat::vtk;
    if (s == "csv,vtk" || s == "vtk,csv" || s == "both") return OutputFormat::both;
    if (s == "none") return OutputFormat::none;
    throw ConfigError("unknown format '" + std::string(s) + "'");
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline double parse_double(std::string_view key, std::string_view v) {
    double x = 0.0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
    if (r.ec != std::errc{} || r.ptr != v.data() + v.size())
        throw ConfigError("key '" + std::string(key) + "': not a number: '" + std::string(v) + "'");
    return x;
}

inline long parse_long(std::string_view key, std::string_view v) {
    long x = 0;
    const auto r = std::from_chars(v.data(), v.data() + v.size(), x);
    if (r.ec != std::errc{} || r.ptr != v.data() + v.size())
        throw ConfigError("key '" + std::string(key) + "': not an integer: '" + std::string(v) + "'");
    return x;
}

inline std::string format_double(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace detail

/// Applies one key/value pair; throws ConfigError on unknown keys or bad values.
inline void set_config_value(RunConfig& c, std::string_view key, std::string_view value) {
    using detail::parse_double;
    using detail::parse_long;
    try {
        if (key == "case") c.case_id = parse_case_id(value);
        else if (key == "solver") c.solver = parse_solver(value);
        else if (key == "recon") c.recon = parse_recon(value);
        else if (key == "nx") c.nx = static_cast<int>(parse_long(key, value));
        else if (key == "ny") c.ny = static_cast<int>(parse_long(key, value));
        else if (key == "cfl") c.cfl = parse_double(key, value);
        else if (key == "dt") c.dt = parse_double(key, value);
        else if (key == "dt_dx") c.dt_dx = parse_double(key, value);
        else if (key == "t_end") c.t_end = parse_double(key, value);
        else if (key == "max_steps") c.max_steps = parse_long(key, value);
        else if (key == "alpha_thres") c.alpha_thres = parse_double(key, value);
        else if (key == "d_h") c.d_h = parse_double(key, value);
        else if (key == "d_l") c.d_l = parse_double(key, value);
        else if (key == "gamma") c.gamma = parse_double(key, value);
        else if (key == "gks_c1") c.gks_c1 = parse_double(key, value);
        else if (key == "gks_c2") c.gks_c2 = parse_double(key, value);
        else if (key == "p0") c.params.p0 = parse_double(key, value);
        else if (key == "v0") c.params.v0 = parse_double(key, value);
        else if (key == "p_side") c.params.p_side = parse_double(key, value);
        else if (key == "out_dir") c.out_dir = std::string(value);
        else if (key == "format") c.format = parse_format(value);
        else if (key == "snapshot_every") c.snapshot_every = parse_long(key, value);
        else throw ConfigError("unknown key '" + std::string(key) + "'");
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

[[nodiscard]] inline RunConfig parse_config(std::string_view text) {
    RunConfig c;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
        const auto key = detail::trim(line.substr(0, eq));
        const auto value = detail::trim(line.substr(eq + 1));
        try {
            set_config_value(c, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return c;
}

[[nodiscard]] inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

/// Serialises every key; parse_config(to_text(c)) reproduces c.
[[nodiscard]] inline std::string to_text(const RunConfig& c) {
    using detail::format_double;
    std::ostringstream o;
    o << "case = " << case_spec(c.case_id).name << '\n'
      << "solver = " << to_string(c.solver) << '\n'
      << "recon = " << to_string(c.recon) << '\n'
      << "nx = " << c.nx << '\n'
      << "ny = " << c.ny << '\n'
      << "cfl = " << format_double(c.cfl) << '\n'
      << "dt = " << format_double(c.dt) << '\n'
      << "dt_dx = " << format_double(c.dt_dx) << '\n'
      << "t_end = " << format_double(c.t_end) << '\n'
      << "max_steps = " << c.max_steps << '\n'
      << "alpha_thres = " << format_double(c.alpha_thres) << '\n'
      << "d_h = " << format_double(c.d_h) << '\n'
      << "d_l = " << format_double(c.d_l) << '\n'
      << "gamma = " << format_double(c.gamma) << '\n'
      << "gks_c1 = " << format_double(c.gks_c1) << '\n'
      << "gks_c2 = " << format_double(c.gks_c2) << '\n'
      << "p0 = " << format_double(c.params.p0) << '\n'
      << "v0 = " << format_double(c.params.v0) << '\n'
      << "p_side = " << format_double(c.params.p_side) << '\n'
      << "out_dir = " << c.out_dir << '\n'
      << "format = " << to_string(c.format) << '\n'
      << "snapshot_every = " << c.snapshot_every << '\n';
    return o.str();
}

}  // namespace hfv
