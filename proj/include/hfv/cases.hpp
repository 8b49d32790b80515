#pragma once

// Benchmark initial conditions, exact solutions for the smooth cases and the
// Mach-number maps of the robustness sweeps.

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hfv/boundary.hpp"
#include "hfv/mesh.hpp"
#include "hfv/state.hpp"

namespace hfv {

enum class CaseId { uniform1d, uniform2d, sine1d, sine2d, shu_osher, config3, config6, rarefaction, problem123, hurricane };

struct CaseParams {
    double p0 = 0.4;       // 123 problem initial pressure
    double v0 = 10.0;      // hurricane rotation speed
    double p_side = 0.4;   // rarefaction interaction side-quadrant pressure
};

struct CaseSpec {
    CaseId id = CaseId::sine1d;
    std::string name;
    int dim = 1;
    double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
    int nx = 100, ny = 1;
    double t_end = 0.0;
    long max_steps = 0;
    BoundaryKind boundary = BoundaryKind::free;
    std::string sweep_param;  // empty when the case has no sweep
    bool has_exact = false;
};

[[nodiscard]] inline CaseSpec case_spec(CaseId id) {
    switch (id) {
        case CaseId::uniform1d: return {id, "uniform1d", 1, 0, 1, 0, 1, 50, 1, 0.0, 100, BoundaryKind::periodic, "", false};
        case CaseId::uniform2d: return {id, "uniform2d", 2, 0, 1, 0, 1, 16, 16, 0.0, 100, BoundaryKind::periodic, "", false};
        case CaseId::sine1d: return {id, "sine1d", 1, 0, 2, 0, 1, 40, 1, 2.0, 0, BoundaryKind::periodic, "", true};
        case CaseId::sine2d: return {id, "sine2d", 2, -1, 1, -1, 1, 40, 40, 2.0, 0, BoundaryKind::periodic, "", true};
        case CaseId::shu_osher: return {id, "shu_osher", 1, 0, 10, 0, 1, 400, 1, 1.8, 0, BoundaryKind::free, "", false};
        case CaseId::config3: return {id, "config3", 2, 0, 1, 0, 1, 500, 500, 0.6, 0, BoundaryKind::free, "", false};
        case CaseId::config6: return {id, "config6", 2, 0, 2, 0, 2, 800, 800, 1.6, 0, BoundaryKind::free, "", false};
        case CaseId::rarefaction:
            return {id, "rarefaction", 2, 0, 1, 0, 1, 400, 400, 0.15, 0, BoundaryKind::free, "p_side", false};
        case CaseId::problem123: return {id, "123", 1, 0, 1, 0, 1, 100, 1, 0.14, 0, BoundaryKind::free, "p0", false};
        case CaseId::hurricane:
            return {id, "hurricane", 2, -2, 2, -2, 2, 400, 400, 0.0, 50, BoundaryKind::non_reflecting, "v0", false};
    }
    throw std::invalid_argument("unknown case");
}

[[nodiscard]] inline CaseId parse_case_id(std::string_view s) {
    for (auto id : {CaseId::uniform1d, CaseId::uniform2d, CaseId::sine1d, CaseId::sine2d, CaseId::shu_osher,
                    CaseId::config3, CaseId::config6, CaseId::rarefaction, CaseId::problem123, CaseId::hurricane}) {
        if (case_spec(id).name == s) return id;
    }
    if (s == "problem123") return CaseId::problem123;
    if (s == "config2") return CaseId::rarefaction;
    throw std::invalid_argument("unknown case '" + std::string(s) + "'");
}

[[nodiscard]] inline Mesh1D case_mesh_1d(const CaseSpec& c, int nx) {
    return {nx, c.x0, (c.x1 - c.x0) / nx};
}

[[nodiscard]] inline Mesh2D case_mesh_2d(const CaseSpec& c, int nx, int ny) {
    return {nx, ny, c.x0, c.y0, (c.x1 - c.x0) / nx, (c.y1 - c.y0) / ny};
}

[[nodiscard]] inline BoundarySpec1D case_boundary_1d(const CaseSpec& c) { return {c.boundary, c.boundary}; }
[[nodiscard]] inline BoundarySpec2D case_boundary_2d(const CaseSpec& c) { return BoundarySpec2D::all(c.boundary); }

// ---------------------------------------------------------------------------
// Quadrature cell averages

inline constexpr std::array<double, 3> kQuadNodes = {-0.77459666924148337704, 0.0, 0.77459666924148337704};
inline constexpr std::array<double, 3> kQuadWeights = {5.0 / 18.0, 8.0 / 18.0, 5.0 / 18.0};  // sum to 1

/// Average of the conserved state of `prim(x)` over [a, b], 3-point Gauss.
template <class F>
[[nodiscard]] ConservedState cell_average(F&& prim, double a, double b, const GammaModel& g) {
    ConservedState s{};
    const double xm = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    for (int q = 0; q < 3; ++q) s += kQuadWeights[q] * primitive_to_conserved(prim(xm + h * kQuadNodes[q]), g);
    return s;
}

/// Average over [ax, bx] x [ay, by], tensor 3x3 Gauss.
template <class F>
[[nodiscard]] ConservedState cell_average(F&& prim, double ax, double bx, double ay, double by, const GammaModel& g) {
    ConservedState s{};
    const double xm = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
    const double ym = 0.5 * (ay + by), hy = 0.5 * (by - ay);
    for (int qy = 0; qy < 3; ++qy)
        for (int qx = 0; qx < 3; ++qx)
            s += (kQuadWeights[qx] * kQuadWeights[qy]) *
                 primitive_to_conserved(prim(xm + hx * kQuadNodes[qx], ym + hy * kQuadNodes[qy]), g);
    return s;
}

template <class F>
[[nodiscard]] Field1D average_field(const Mesh1D& m, F&& prim, const GammaModel& g) {
    Field1D f(m);
    for (int i = 0; i < m.nx; ++i) f(i) = cell_average(prim, m.xf(i), m.xf(i + 1), g);
    return f;
}

template <class F>
[[nodiscard]] Field2D average_field(const Mesh2D& m, F&& prim, const GammaModel& g) {
    Field2D f(m);
    for (int j = 0; j < m.ny; ++j)
        for (int i = 0; i < m.nx; ++i) f(i, j) = cell_average(prim, m.xf(i), m.xf(i + 1), m.yf(j), m.yf(j + 1), g);
    return f;
}

template <class F>
[[nodiscard]] Field1D sample_field(const Mesh1D& m, F&& prim, const GammaModel& g) {
    Field1D f(m);
    for (int i = 0; i < m.nx; ++i) f(i) = primitive_to_conserved(prim(m.xc(i)), g);
    return f;
}

template <class F>
[[nodiscard]] Field2D sample_field(const Mesh2D& m, F&& prim, const GammaModel& g) {
    Field2D f(m);
    for (int j = 0; j < m.ny; ++j)
        for (int i = 0; i < m.nx; ++i) f(i, j) = primitive_to_conserved(prim(m.xc(i), m.yc(j)), g);
    return f;
}

// ---------------------------------------------------------------------------
// Smooth cases

[[nodiscard]] inline PrimitiveState sine_1d_state(double x, double t) {
    return {1.0 + 0.2 * std::sin(std::numbers::pi * (x - t)), 1.0, 0.0, 1.0};
}

[[nodiscard]] inline PrimitiveState sine_2d_state(double x, double y, double t) {
    return {1.0 + 0.2 * std::sin(std::numbers::pi * (x - t)) * std::sin(std::numbers::pi * (y - t)), 1.0, 1.0, 1.0};
}

[[nodiscard]] inline Field1D exact_sine_1d(const Mesh1D& m, double t, const GammaModel& g = {}) {
    return average_field(m, [t](double x) { return sine_1d_state(x, t); }, g);
}

[[nodiscard]] inline Field2D exact_sine_2d(const Mesh2D& m, double t, const GammaModel& g = {}) {
    return average_field(m, [t](double x, double y) { return sine_2d_state(x, y, t); }, g);
}

[[nodiscard]] inline Field1D init_sine_1d(const Mesh1D& m, const GammaModel& g = {}) { return exact_sine_1d(m, 0.0, g); }
[[nodiscard]] inline Field2D init_sine_2d(const Mesh2D& m, const GammaModel& g = {}) { return exact_sine_2d(m, 0.0, g); }

[[nodiscard]] inline Field1D init_uniform_1d(const Mesh1D& m, const PrimitiveState& s, const GammaModel& g = {}) {
    return sample_field(m, [&](double) { return s; }, g);
}

[[nodiscard]] inline Field2D init_uniform_2d(const Mesh2D& m, const PrimitiveState& s, const GammaModel& g = {}) {
    return sample_field(m, [&](double, double) { return s; }, g);
}

// ---------------------------------------------------------------------------
// Shock cases

[[nodiscard]] inline PrimitiveState shu_osher_state(double x) {
    if (x < 1.0) return {3.857134, 2.629369, 0.0, 10.33333};
    return {1.0 + 0.2 * std::sin(5.0 * x), 0.0, 0.0, 1.0};
}

[[nodiscard]] inline Field1D init_shu_osher(const Mesh1D& m, const GammaModel& g = {}) {
    return average_field(m, shu_osher_state, g);
}

enum class QuadrantCase { config3, config6, config2 };

/// States listed as lower-left, lower-right, upper-right, upper-left.
struct QuadrantSetup {
    double xc = 0.5, yc = 0.5;
    std::array<PrimitiveState, 4> states{};
};

inline constexpr double kRarefactionEntropy = 1.5;
inline constexpr double kRarefactionSpeed = 0.6323;

/// Side-quadrant density on the isentrope p = 1.5 rho^gamma.
[[nodiscard]] inline double rarefaction_side_density(double p_side, const GammaModel& g = {}) {
    if (!(p_side > 0.0)) throw std::invalid_argument("rarefaction: side pressure must be positive");
    return std::pow(p_side / kRarefactionEntropy, 1.0 / g.gamma);
}

[[nodiscard]] inline double mach_rarefaction(double p_side, const GammaModel& g = {}) {
    const double rho = rarefaction_side_density(p_side, g);
    const double speed = std::sqrt(2.0) * kRarefactionSpeed;
    return speed / std::sqrt(g.gamma * kRarefactionEntropy * std::pow(rho, g.gamma - 1.0));
}

[[nodiscard]] inline double rarefaction_p_for_mach(double mach, const GammaModel& g = {}) {
    if (!(mach > 0.0)) throw std::invalid_argument("rarefaction: Mach number must be positive");
    const double speed2 = 2.0 * kRarefactionSpeed * kRarefactionSpeed;
    const double rho = std::pow(speed2 / (g.gamma * kRarefactionEntropy * mach * mach), 1.0 / (g.gamma - 1.0));
    return kRarefactionEntropy * std::pow(rho, g.gamma);
}

[[nodiscard]] inline QuadrantSetup quadrant_setup(QuadrantCase c, const CaseParams& params = {},
                                                  const GammaModel& g = {}) {
    switch (c) {
        case QuadrantCase::config3:
            return {0.7, 0.7,
                    {{{0.138, 1.206, 1.206, 0.129},
                      {0.5323, 0.0, 1.206, 0.3},
                      {1.5, 0.0, 0.0, 1.5},
                      {0.5323, 1.206, 0.0, 0.3}}}};
        case QuadrantCase::config6:
            return {1.0, 1.0,
                    {{{1.0, -0.75, 0.5, 1.0},
                      {3.0, -0.75, -0.5, 1.0},
                      {1.0, 0.75, -0.5, 1.0},
                      {2.0, 0.75, 0.5, 1.0}}}};
        case QuadrantCase::config2: {
            const double rho = rarefaction_side_density(params.p_side, g);
            const double s = kRarefactionSpeed;
            return {0.5, 0.5,
                    {{{1.0, -s, -s, 1.5},
                      {rho, s, -s, params.p_side},
                      {1.0, s, s, 1.5},
                      {rho, -s, s, params.p_side}}}};
        }
    }
    throw std::invalid_argument("unknown quadrant case");
}

[[nodiscard]] inline PrimitiveState quadrant_state(const QuadrantSetup& q, double x, double y) {
    const bool right = x >= q.xc;
    const bool top = y >= q.yc;
    if (!top) return right ? q.states[1] : q.states[0];
    return right ? q.states[2] : q.states[3];
}

[[nodiscard]] inline Field2D init_riemann_quadrant(const Mesh2D& m, QuadrantCase c, const CaseParams& params = {},
                                                   const GammaModel& g = {}) {
    const auto q = quadrant_setup(c, params, g);
    return sample_field(m, [&](double x, double y) { return quadrant_state(q, x, y); }, g);
}

// ---------------------------------------------------------------------------
// 123 problem

[[nodiscard]] inline double mach_123(double p0, const GammaModel& g = {}) {
    if (!(p0 > 0.0)) throw std::invalid_argument("123: p0 must be positive");
    return 2.0 / std::sqrt(g.gamma * p0);
}

[[nodiscard]] inline double p0_for_mach_123(double mach, const GammaModel& g = {}) {
    if (!(mach > 0.0)) throw std::invalid_argument("123: Mach number must be positive");
    return 4.0 / (g.gamma * mach * mach);
}

[[nodiscard]] inline Field1D init_123(const Mesh1D& m, double p0, const GammaModel& g = {}) {
    if (!(p0 > 0.0)) throw std::invalid_argument("123: p0 must be positive");
    return sample_field(m, [p0](double x) { return PrimitiveState{1.0, x < 0.5 ? -2.0 : 2.0, 0.0, p0}; }, g);
}

// ---------------------------------------------------------------------------
// Hurricane-like rotation

inline constexpr double kHurricaneEntropy = 25.0;

[[nodiscard]] inline double hurricane_sound_speed(const GammaModel& g = {}) {
    return std::sqrt(g.gamma * kHurricaneEntropy);
}

[[nodiscard]] inline double mach_hurricane(double v0, const GammaModel& g = {}) {
    return v0 / hurricane_sound_speed(g);
}

[[nodiscard]] inline double hurricane_v0_for_mach(double mach, const GammaModel& g = {}) {
    return mach * hurricane_sound_speed(g);
}

[[nodiscard]] inline PrimitiveState hurricane_state(double x, double y, double v0) {
    const double th = std::atan2(y, x);
    return {1.0, v0 * std::sin(th), -v0 * std::cos(th), kHurricaneEntropy};
}

[[nodiscard]] inline Field2D init_hurricane(const Mesh2D& m, double v0, const GammaModel& g = {}) {
    if (!(v0 > 0.0)) throw std::invalid_argument("hurricane: v0 must be positive");
    return sample_field(m, [v0](double x, double y) { return hurricane_state(x, y, v0); }, g);
}

// ---------------------------------------------------------------------------
// Sweep parameter <-> Mach number

[[nodiscard]] inline double mach_of_param(CaseId id, double value, const GammaModel& g = {}) {
    switch (id) {
        case CaseId::problem123: return mach_123(value, g);
        case CaseId::hurricane: return mach_hurricane(value, g);
        case CaseId::rarefaction: return mach_rarefaction(value, g);
        default: throw std::invalid_argument("case has no Mach sweep");
    }
}

[[nodiscard]] inline double param_of_mach(CaseId id, double mach, const GammaModel& g = {}) {
    switch (id) {
        case CaseId::problem123: return p0_for_mach_123(mach, g);
        case CaseId::hurricane: return hurricane_v0_for_mach(mach, g);
        case CaseId::rarefaction: return rarefaction_p_for_mach(mach, g);
        default: throw std::invalid_argument("case has no Mach sweep");
    }
}

inline void set_sweep_param(CaseId id, CaseParams& p, double value) {
    switch (id) {
        case CaseId::problem123: p.p0 = value; return;
        case CaseId::hurricane: p.v0 = value; return;
        case CaseId::rarefaction: p.p_side = value; return;
        default: throw std::invalid_argument("case has no sweep parameter");
    }
}

// ---------------------------------------------------------------------------
// Dispatch

[[nodiscard]] inline Field1D initial_field_1d(const CaseSpec& c, const Mesh1D& m, const CaseParams& p,
                                              const GammaModel& g = {}) {
    switch (c.id) {
        case CaseId::uniform1d: return init_uniform_1d(m, {1.0, 1.0, 0.0, 1.0}, g);
        case CaseId::sine1d: return init_sine_1d(m, g);
        case CaseId::shu_osher: return init_shu_osher(m, g);
        case CaseId::problem123: return init_123(m, p.p0, g);
        default: throw std::invalid_argument("case '" + c.name + "' is not 1-D");
    }
}

[[nodiscard]] inline Field2D initial_field_2d(const CaseSpec& c, const Mesh2D& m, const CaseParams& p,
                                              const GammaModel& g = {}) {
    switch (c.id) {
        case CaseId::uniform2d: return init_uniform_2d(m, {1.0, 1.0, 1.0, 1.0}, g);
        case CaseId::sine2d: return init_sine_2d(m, g);
        case CaseId::config3: return init_riemann_quadrant(m, QuadrantCase::config3, p, g);
        case CaseId::config6: return init_riemann_quadrant(m, QuadrantCase::config6, p, g);
        case CaseId::rarefaction: return init_riemann_quadrant(m, QuadrantCase::config2, p, g);
        case CaseId::hurricane: return init_hurricane(m, p.v0, g);
        default: throw std::invalid_argument("case '" + c.name + "' is not 2-D");
    }
}

}  // namespace hfv
