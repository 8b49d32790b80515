#pragma once

// Characteristic decomposition of the Euler flux Jacobian in a given direction.
// Reconstruction projects a whole stencil with one basis evaluated at the
// arithmetic average of the two cells adjacent to the target interface.

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "hfv/state.hpp"

namespace hfv {

class CharacteristicBasis {
public:
    using Mat4 = std::array<std::array<double, 4>, 4>;

    /// Identity basis, used when the reference state is not physical.
    CharacteristicBasis() {
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) left_[r][c] = right_[r][c] = (r == c) ? 1.0 : 0.0;
    }

    /// Basis of the Jacobian dF/dW . n at `ref`. Falls back to the identity and
    /// clears physical() if `ref` has non-positive density or pressure.
    CharacteristicBasis(const ConservedState& ref, const Normal& n, const GammaModel& g) : CharacteristicBasis() {
        const auto prim = conserved_to_primitive(ref, g);
        if (!prim.physical) {
            physical_ = false;
            return;
        }
        const double u = prim.state.u;
        const double v = prim.state.v;
        const double c = sound_speed(prim.state, g);
        const double q2 = u * u + v * v;
        const double h = (ref[3] + prim.state.p) / prim.state.rho;
        const double un = u * n.nx + v * n.ny;
        const double ut = -u * n.ny + v * n.nx;
        const double b1 = (g.gamma - 1.0) / (c * c);
        const double b2 = 0.5 * b1 * q2;

        // columns: acoustic (un - c), entropy, shear, acoustic (un + c)
        right_ = {{{1.0, 1.0, 0.0, 1.0},
                   {u - c * n.nx, u, -n.ny, u + c * n.nx},
                   {v - c * n.ny, v, n.nx, v + c * n.ny},
                   {h - c * un, 0.5 * q2, ut, h + c * un}}};

        left_ = {{{0.5 * (b2 + un / c), -0.5 * (b1 * u + n.nx / c), -0.5 * (b1 * v + n.ny / c), 0.5 * b1},
                  {1.0 - b2, b1 * u, b1 * v, -b1},
                  {-ut, -n.ny, n.nx, 0.0},
                  {0.5 * (b2 - un / c), -0.5 * (b1 * u - n.nx / c), -0.5 * (b1 * v - n.ny / c), 0.5 * b1}}};
    }

    [[nodiscard]] bool physical() const { return physical_; }
    [[nodiscard]] const Mat4& left() const { return left_; }
    [[nodiscard]] const Mat4& right() const { return right_; }

    [[nodiscard]] Vec4 project(const Vec4& w) const { return apply(left_, w); }
    [[nodiscard]] Vec4 unproject(const Vec4& q) const { return apply(right_, q); }

private:
    static Vec4 apply(const Mat4& m, const Vec4& w) {
        Vec4 out;
        for (int r = 0; r < 4; ++r)
            out[r] = m[r][0] * w[0] + m[r][1] * w[1] + m[r][2] * w[2] + m[r][3] * w[3];
        return out;
    }

    Mat4 left_{};
    Mat4 right_{};
    bool physical_ = true;
};

/// Arithmetic-average basis for the interface between `ref_left` and `ref_right`.
[[nodiscard]] inline CharacteristicBasis interface_basis(const ConservedState& ref_left,
                                                         const ConservedState& ref_right, const Normal& n,
                                                         const GammaModel& g) {
    return CharacteristicBasis(0.5 * (ref_left + ref_right), n, g);
}

struct ProjectedStencil {
    std::vector<Vec4> values;
    bool physical = true;
};

[[nodiscard]] inline ProjectedStencil characteristic_project(std::span<const ConservedState> stencil,
                                                             const ConservedState& ref_left,
                                                             const ConservedState& ref_right, const Normal& n,
                                                             const GammaModel& g) {
    const auto basis = interface_basis(ref_left, ref_right, n, g);
    ProjectedStencil out;
    out.physical = basis.physical();
    out.values.reserve(stencil.size());
    for (const auto& w : stencil) out.values.push_back(basis.project(w));
    return out;
}

[[nodiscard]] inline std::vector<ConservedState> characteristic_unproject(std::span<const Vec4> projected,
                                                                          const ConservedState& ref_left,
                                                                          const ConservedState& ref_right,
                                                                          const Normal& n, const GammaModel& g) {
    const auto basis = interface_basis(ref_left, ref_right, n, g);
    std::vector<ConservedState> out;
    out.reserve(projected.size());
    for (const auto& q : projected) out.push_back(basis.unproject(q));
    return out;
}

}  // namespace hfv
