#pragma once

// CFL step size, the two time integrators and the non-linear time limiter.
//
// The integrators are generic over the state type: anything with `a + b` and
// `s * a` works, from a scalar to a whole field. The right-hand side returns
// an empty optional when its input stage is invalid; the step then aborts.

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "hfv/mesh.hpp"
#include "hfv/state.hpp"
#include "hfv/weno_ao.hpp"

namespace hfv {

struct StepReport {
    double dt = 0.0;
    int stages = 0;
    bool failed = false;
    int stage = -1;           // stage whose output was invalid
    int i = 0;                // failing cell
    int j = 0;
    std::string variable;     // "rho", "p" or "nan"
};

/// Classifies an invalid cell average; empty string when the cell is valid.
[[nodiscard]] inline std::string invalid_variable(const ConservedState& w, const GammaModel& g) {
    if (!is_finite(w)) return "nan";
    if (!(w[0] > 0.0)) return "rho";
    if (!(pressure(w, g) > 0.0)) return "p";
    return {};
}

/// dt = cfl * dx / (|U| + c); returns 0 on a non-physical cell.
[[nodiscard]] inline double compute_dt(const Field1D& f, double cfl, const GammaModel& g) {
    double smax = 0.0;
    for (int i = 0; i < f.nx(); ++i) {
        const auto pr = conserved_to_primitive(f(i), g);
        if (!pr.physical) return 0.0;
        smax = std::max(smax, std::abs(pr.state.u) + sound_speed(pr.state, g));
    }
    return cfl * f.mesh().dx / smax;
}

/// dt = cfl * min(dx, dy) / max(|U| + |V| + c).
[[nodiscard]] inline double compute_dt(const Field2D& f, double cfl, const GammaModel& g) {
    double smax = 0.0;
    for (int j = 0; j < f.ny(); ++j) {
        for (int i = 0; i < f.nx(); ++i) {
            const auto pr = conserved_to_primitive(f(i, j), g);
            if (!pr.physical) return 0.0;
            smax = std::max(smax, std::abs(pr.state.u) + std::abs(pr.state.v) + sound_speed(pr.state, g));
        }
    }
    return cfl * std::min(f.mesh().dx, f.mesh().dy) / smax;
}

/// Three-stage strong-stability-preserving Runge-Kutta step.
/// `rhs(state, stage)` -> std::optional<State>.
template <class State, class Rhs>
[[nodiscard]] std::optional<State> ssp_rk3_step(const State& w, double dt, Rhs&& rhs) {
    const auto l0 = rhs(w, 0);
    if (!l0) return std::nullopt;
    const State w1 = w + dt * *l0;
    const auto l1 = rhs(w1, 1);
    if (!l1) return std::nullopt;
    const State w2 = 0.75 * w + 0.25 * w1 + (0.25 * dt) * *l1;
    const auto l2 = rhs(w2, 2);
    if (!l2) return std::nullopt;
    return (1.0 / 3.0) * w + (2.0 / 3.0) * w2 + (2.0 / 3.0 * dt) * *l2;
}

template <class State>
struct TimeDerivatives {
    State l;           // flux divergence
    State dl;          // its time derivative
    State dl_limited;  // time derivative with the interface time limiter applied
};

/// Two-stage fourth-order step using the limited time derivatives in the
/// final update. `rhs(state, stage)` -> std::optional<TimeDerivatives<State>>.
template <class State, class Rhs>
[[nodiscard]] std::optional<State> s2o4_step(const State& w, double dt, Rhs&& rhs) {
    const auto d0 = rhs(w, 0);
    if (!d0) return std::nullopt;
    const State ws = w + (0.5 * dt) * d0->l + (0.125 * dt * dt) * d0->dl;
    const auto d1 = rhs(ws, 1);
    if (!d1) return std::nullopt;
    const double dt2 = dt * dt;
    return w + dt * d0->l + (0.5 * dt2) * d0->dl + (-dt2 / 3.0) * d0->dl_limited + (dt2 / 3.0) * d1->dl_limited;
}

namespace detail {

inline double time_limiter_side(double beta_min, double beta_max, double tau_z, double eps) {
    const double a1 = 1.0 + (tau_z / (beta_min + eps)) * (tau_z / (beta_min + eps));
    const double a2 = 1.0 + (tau_z / (beta_max + eps)) * (tau_z / (beta_max + eps));
    return 2.0 * a2 / (a1 + a2);
}

}  // namespace detail

/// Interface weight in (0, 1] damping the flux time derivative near
/// discontinuities; 1 when both sides are smooth.
[[nodiscard]] inline double time_limiter_weight(const SmoothnessIndicators& left, const SmoothnessIndicators& right,
                                                double eps = 1e-6) {
    const double al = detail::time_limiter_side(left.beta_min(), left.beta_max(), left.tau_z, eps);
    const double ar = detail::time_limiter_side(right.beta_min(), right.beta_max(), right.tau_z, eps);
    return std::min(al, ar);
}

/// Scalar form taking the extreme indicators directly.
[[nodiscard]] inline double time_limiter_weight(double beta_min_l, double beta_max_l, double tau_z_l,
                                                double beta_min_r, double beta_max_r, double tau_z_r,
                                                double eps = 1e-6) {
    return std::min(detail::time_limiter_side(beta_min_l, beta_max_l, tau_z_l, eps),
                    detail::time_limiter_side(beta_min_r, beta_max_r, tau_z_r, eps));
}

}  // namespace hfv
