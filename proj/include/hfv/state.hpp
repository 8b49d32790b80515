#pragma once

// Fluid states for the 2-D compressible Euler equations.
//
// Conserved vectors are stored as (rho, rho*U, rho*V, rho*E). 1-D runs reuse the
// same 4-vectors with V = 0.

#include <array>
#include <cmath>
#include <cstddef>

namespace hfv {

/// Plain 4-vector used for conserved states, fluxes and their derivatives.
struct Vec4 {
    std::array<double, 4> c{0.0, 0.0, 0.0, 0.0};

    constexpr double& operator[](std::size_t k) { return c[k]; }
    constexpr double operator[](std::size_t k) const { return c[k]; }

    constexpr Vec4& operator+=(const Vec4& o) {
        for (std::size_t k = 0; k < 4; ++k) c[k] += o.c[k];
        return *this;
    }
    constexpr Vec4& operator-=(const Vec4& o) {
        for (std::size_t k = 0; k < 4; ++k) c[k] -= o.c[k];
        return *this;
    }
    constexpr Vec4& operator*=(double s) {
        for (auto& x : c) x *= s;
        return *this;
    }
    friend constexpr Vec4 operator+(Vec4 a, const Vec4& b) { return a += b; }
    friend constexpr Vec4 operator-(Vec4 a, const Vec4& b) { return a -= b; }
    friend constexpr Vec4 operator*(Vec4 a, double s) { return a *= s; }
    friend constexpr Vec4 operator*(double s, Vec4 a) { return a *= s; }
    friend constexpr bool operator==(const Vec4&, const Vec4&) = default;
};

using ConservedState = Vec4;
using FluxVector = Vec4;

struct PrimitiveState {
    double rho = 1.0;
    double u = 0.0;
    double v = 0.0;
    double p = 1.0;
};

/// Specific-heat ratio together with the internal degrees of freedom of the
/// kinetic model, K = (4 - 2 gamma) / (gamma - 1).
struct GammaModel {
    double gamma = 1.4;

    [[nodiscard]] constexpr double K() const { return (4.0 - 2.0 * gamma) / (gamma - 1.0); }
};

[[nodiscard]] inline bool is_finite(const Vec4& w) {
    return std::isfinite(w[0]) && std::isfinite(w[1]) && std::isfinite(w[2]) && std::isfinite(w[3]);
}

[[nodiscard]] constexpr ConservedState primitive_to_conserved(const PrimitiveState& w, const GammaModel& g) {
    return {{w.rho, w.rho * w.u, w.rho * w.v, w.p / (g.gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v)}};
}

struct PrimitiveResult {
    PrimitiveState state;
    bool physical = true;
};

/// Inverse of primitive_to_conserved. `physical` is false when rho <= 0, the
/// derived pressure is <= 0, or anything is non-finite.
[[nodiscard]] inline PrimitiveResult conserved_to_primitive(const ConservedState& w, const GammaModel& g) {
    PrimitiveResult r;
    const double rho = w[0];
    r.state.rho = rho;
    r.state.u = w[1] / rho;
    r.state.v = w[2] / rho;
    r.state.p = (g.gamma - 1.0) * (w[3] - 0.5 * (w[1] * w[1] + w[2] * w[2]) / rho);
    r.physical = rho > 0.0 && r.state.p > 0.0 && std::isfinite(r.state.p) && std::isfinite(r.state.u) &&
                 std::isfinite(r.state.v);
    return r;
}

[[nodiscard]] inline double pressure(const ConservedState& w, const GammaModel& g) {
    return (g.gamma - 1.0) * (w[3] - 0.5 * (w[1] * w[1] + w[2] * w[2]) / w[0]);
}

[[nodiscard]] inline double sound_speed(const PrimitiveState& w, const GammaModel& g) {
    return std::sqrt(g.gamma * w.p / w.rho);
}

/// Unit normal of an interface, stored as (cos theta, sin theta).
struct Normal {
    double nx = 1.0;
    double ny = 0.0;
};

inline constexpr Normal kNormalX{1.0, 0.0};
inline constexpr Normal kNormalY{0.0, 1.0};

/// Global -> local frame: momentum rotated so that x points along n.
[[nodiscard]] constexpr Vec4 rotate_to_local(const Vec4& w, const Normal& n) {
    return {{w[0], n.nx * w[1] + n.ny * w[2], -n.ny * w[1] + n.nx * w[2], w[3]}};
}

[[nodiscard]] constexpr Vec4 rotate_from_local(const Vec4& w, const Normal& n) {
    return {{w[0], n.nx * w[1] - n.ny * w[2], n.ny * w[1] + n.nx * w[2], w[3]}};
}

}  // namespace hfv
