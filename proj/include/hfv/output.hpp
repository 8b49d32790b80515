#pragma once

// Snapshot writers: CSV (17 significant digits) and legacy ASCII VTK
// structured points, plus the per-cell DF table.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hfv/mesh.hpp"
#include "hfv/state.hpp"

namespace hfv {

class OutputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kCsvHeader1D = "x,rho,u,p";
inline constexpr const char* kCsvHeader2D = "x,y,rho,u,v,p";
inline constexpr const char* kVtkHeader = "# vtk DataFile Version 3.0";

namespace detail {

inline std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw OutputError("cannot write '" + path + "'");
    return out;
}

inline void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw OutputError("write failed for '" + path + "'");
}

inline std::string g17(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// Primitive state for output; non-physical cells are written as computed.
inline PrimitiveState output_primitive(const ConservedState& w, const GammaModel& g) {
    return conserved_to_primitive(w, g).state;
}

}  // namespace detail

inline void write_snapshot_csv(const Field1D& f, const std::string& path, const GammaModel& g = {}) {
    auto out = detail::open_for_write(path);
    out << kCsvHeader1D << '\n';
    for (int i = 0; i < f.nx(); ++i) {
        const auto p = detail::output_primitive(f(i), g);
        out << detail::g17(f.mesh().xc(i)) << ',' << detail::g17(p.rho) << ',' << detail::g17(p.u) << ','
            << detail::g17(p.p) << '\n';
    }
    detail::finish(out, path);
}

inline void write_snapshot_csv(const Field2D& f, const std::string& path, const GammaModel& g = {}) {
    auto out = detail::open_for_write(path);
    out << kCsvHeader2D << '\n';
    for (int j = 0; j < f.ny(); ++j) {
        for (int i = 0; i < f.nx(); ++i) {
            const auto p = detail::output_primitive(f(i, j), g);
            out << detail::g17(f.mesh().xc(i)) << ',' << detail::g17(f.mesh().yc(j)) << ',' << detail::g17(p.rho)
                << ',' << detail::g17(p.u) << ',' << detail::g17(p.v) << ',' << detail::g17(p.p) << '\n';
        }
    }
    detail::finish(out, path);
}

namespace detail {

inline void vtk_preamble(std::ofstream& out, int nx, int ny, double x0, double y0, double dx, double dy) {
    out << kVtkHeader << '\n'
        << "hfv snapshot\n"
        << "ASCII\n"
        << "DATASET STRUCTURED_POINTS\n"
        << "DIMENSIONS " << nx << ' ' << ny << " 1\n"
        << "ORIGIN " << g17(x0) << ' ' << g17(y0) << " 0\n"
        << "SPACING " << g17(dx) << ' ' << g17(dy) << " 1\n"
        << "POINT_DATA " << static_cast<long>(nx) * ny << '\n';
}

template <class Get>
void vtk_scalar(std::ofstream& out, const char* name, std::size_t n, Get&& get) {
    out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (std::size_t k = 0; k < n; ++k) out << g17(get(k)) << '\n';
}

}  // namespace detail

inline void write_snapshot_vtk(const Field1D& f, const std::string& path, const GammaModel& g = {}) {
    auto out = detail::open_for_write(path);
    const auto& m = f.mesh();
    detail::vtk_preamble(out, m.nx, 1, m.xc(0), 0.0, m.dx, 1.0);
    std::vector<PrimitiveState> p(static_cast<std::size_t>(m.nx));
    for (int i = 0; i < m.nx; ++i) p[static_cast<std::size_t>(i)] = detail::output_primitive(f(i), g);
    detail::vtk_scalar(out, "rho", p.size(), [&](std::size_t k) { return p[k].rho; });
    detail::vtk_scalar(out, "u", p.size(), [&](std::size_t k) { return p[k].u; });
    detail::vtk_scalar(out, "v", p.size(), [&](std::size_t k) { return p[k].v; });
    detail::vtk_scalar(out, "p", p.size(), [&](std::size_t k) { return p[k].p; });
    detail::finish(out, path);
}

inline void write_snapshot_vtk(const Field2D& f, const std::string& path, const GammaModel& g = {}) {
    auto out = detail::open_for_write(path);
    const auto& m = f.mesh();
    detail::vtk_preamble(out, m.nx, m.ny, m.xc(0), m.yc(0), m.dx, m.dy);
    std::vector<PrimitiveState> p;
    p.reserve(static_cast<std::size_t>(m.nx) * static_cast<std::size_t>(m.ny));
    for (int j = 0; j < m.ny; ++j)
        for (int i = 0; i < m.nx; ++i) p.push_back(detail::output_primitive(f(i, j), g));
    detail::vtk_scalar(out, "rho", p.size(), [&](std::size_t k) { return p[k].rho; });
    detail::vtk_scalar(out, "u", p.size(), [&](std::size_t k) { return p[k].u; });
    detail::vtk_scalar(out, "v", p.size(), [&](std::size_t k) { return p[k].v; });
    detail::vtk_scalar(out, "p", p.size(), [&](std::size_t k) { return p[k].p; });
    detail::finish(out, path);
}

/// Per-cell DF as `x,alpha` / `x,y,alpha`.
inline void write_df_csv(const DfField1D& a, const std::string& path) {
    auto out = detail::open_for_write(path);
    out << "x,alpha\n";
    for (int i = 0; i < a.nx(); ++i) out << detail::g17(a.mesh().xc(i)) << ',' << detail::g17(a(i)) << '\n';
    detail::finish(out, path);
}

inline void write_df_csv(const DfField2D& a, const std::string& path) {
    auto out = detail::open_for_write(path);
    out << "x,y,alpha\n";
    for (int j = 0; j < a.ny(); ++j)
        for (int i = 0; i < a.nx(); ++i)
            out << detail::g17(a.mesh().xc(i)) << ',' << detail::g17(a.mesh().yc(j)) << ',' << detail::g17(a(i, j))
                << '\n';
    detail::finish(out, path);
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Reads a numeric CSV with a header line.
[[nodiscard]] inline CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw OutputError("cannot read '" + path + "'");
    CsvTable t;
    std::string line;
    if (!std::getline(in, line)) throw OutputError("empty csv '" + path + "'");
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) t.header.push_back(cell);
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            row.push_back(cell.empty() ? std::nan("") : std::strtod(cell.c_str(), nullptr));
        if (line.back() == ',') row.push_back(std::nan(""));
        if (row.size() != t.header.size()) throw OutputError("column count mismatch in '" + path + "'");
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace hfv
