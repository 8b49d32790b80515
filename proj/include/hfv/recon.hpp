#pragma once

// Direction-by-direction interface reconstruction.
//
// The normal pass turns six consecutive cell averages W[i-2..i+3] into the left
// and right line values (and normal derivatives) at interface i+1/2. The
// tangential pass turns five consecutive line values along an interface into
// point values and tangential derivatives at the two Gauss points of the
// middle segment. In hybrid mode each side independently switches to the
// DF-scaled quadratic when its three neighbouring cell DFs are all below the
// threshold.

#include <array>
#include <cmath>
#include <numbers>

#include "hfv/characteristic.hpp"
#include "hfv/df.hpp"
#include "hfv/limiters.hpp"
#include "hfv/state.hpp"
#include "hfv/weno_ao.hpp"

namespace hfv {

/// Gauss-Legendre point parameter on an edge, c = 1/2 + sqrt(3)/6.
inline constexpr double kGaussC = 0.5 + 0.28867513459481288225;  // sqrt(3)/6
inline constexpr std::array<double, 2> kGaussWeights = {0.5, 0.5};
/// Gauss points in the segment-local coordinate xi in [-1, 0].
inline constexpr std::array<double, 2> kGaussXi = {-kGaussC, kGaussC - 1.0};

struct SideValue {
    Vec4 value;
    Vec4 deriv;  // derivative along the reconstruction axis
};

struct LineRecon {
    SideValue left;
    SideValue right;
    StencilChoice left_choice = StencilChoice::weno_ao;
    StencilChoice right_choice = StencilChoice::weno_ao;
    bool basis_physical = true;
};

namespace detail {

inline StencilChoice choose(const ReconConfig& cfg, double am, double a0, double ap) {
    if (cfg.mode != ReconMode::hybrid) return StencilChoice::weno_ao;
    return hybrid_select(am, a0, ap, cfg.alpha_thres);
}

}  // namespace detail

/// Normal reconstruction at interface i+1/2 from w[k] = W_{i-2+k}, k = 0..5.
/// `alpha[k]` is the DF of cell i-1+k, k = 0..3. `axis` is the direction of
/// increasing index; derivatives are with respect to that coordinate.
[[nodiscard]] inline LineRecon reconstruct_interface_line(const std::array<ConservedState, 6>& w,
                                                          const std::array<double, 4>& alpha, const Normal& axis,
                                                          double h, const ReconConfig& cfg, const GammaModel& g) {
    LineRecon out;
    if (cfg.mode == ReconMode::van_leer) {
        for (int k = 0; k < 4; ++k) {
            const double sl = van_leer_slope(w[1][k], w[2][k], w[3][k]);
            const double sr = van_leer_slope(w[2][k], w[3][k], w[4][k]);
            out.left.value[k] = w[2][k] + 0.5 * sl;
            out.left.deriv[k] = sl / h;
            out.right.value[k] = w[3][k] - 0.5 * sr;
            out.right.deriv[k] = sr / h;
        }
        return out;
    }

    out.left_choice = detail::choose(cfg, alpha[0], alpha[1], alpha[2]);
    out.right_choice = detail::choose(cfg, alpha[1], alpha[2], alpha[3]);

    if (out.left_choice == StencilChoice::df_cubic) {
        for (int k = 0; k < 4; ++k) {
            const auto pv = df_cubic_reconstruct(w[1][k], w[2][k], w[3][k], alpha[1], 0.0, h);
            out.left.value[k] = pv.value;
            out.left.deriv[k] = pv.deriv;
        }
    }
    if (out.right_choice == StencilChoice::df_cubic) {
        for (int k = 0; k < 4; ++k) {
            const auto pv = df_cubic_reconstruct(w[4][k], w[3][k], w[2][k], alpha[2], 0.0, h);
            out.right.value[k] = pv.value;
            out.right.deriv[k] = -pv.deriv;
        }
    }
    if (out.left_choice == StencilChoice::weno_ao || out.right_choice == StencilChoice::weno_ao) {
        const auto basis = interface_basis(w[2], w[3], axis, g);
        out.basis_physical = basis.physical();
        std::array<Vec4, 6> q;
        for (int k = 0; k < 6; ++k) q[k] = basis.project(w[k]);
        Vec4 lv, ld, rv, rd;
        const double inv_h = 1.0 / h;
        if (out.left_choice == StencilChoice::weno_ao) {
            const auto poly = weno_ao_polynomial4({q[0], q[1], q[2], q[3], q[4]}, cfg);
            lv = poly.coef[0];
            ld = inv_h * poly.coef[1];
        }
        if (out.right_choice == StencilChoice::weno_ao) {
            const auto poly = weno_ao_polynomial4({q[5], q[4], q[3], q[2], q[1]}, cfg);
            rv = poly.coef[0];
            rd = -inv_h * poly.coef[1];
        }
        if (out.left_choice == StencilChoice::weno_ao) out.left = {basis.unproject(lv), basis.unproject(ld)};
        if (out.right_choice == StencilChoice::weno_ao) out.right = {basis.unproject(rv), basis.unproject(rd)};
    }
    return out;
}

struct GaussSideValue {
    Vec4 value;
    Vec4 normal_deriv;
    Vec4 tangential_deriv;  // along the direction of increasing tangential index
};

/// Tangential reconstruction along one side of an interface.
/// `line[k]` is the line value of segment j-2+k; `alpha[k]` the DF of the
/// same-side cell of segment j-1+k. The characteristic basis is built from the
/// two cell averages adjacent to the interface at segment j and the
/// tangential direction; the second overload builds it from those inputs.
[[nodiscard]] inline std::array<GaussSideValue, 2> reconstruct_gauss_points(
    const std::array<Vec4, 5>& line, const Vec4& normal_deriv, const std::array<double, 3>& alpha,
    const CharacteristicBasis& basis, double h, const ReconConfig& cfg) {
    std::array<GaussSideValue, 2> out;
    out[0].normal_deriv = normal_deriv;
    out[1].normal_deriv = normal_deriv;

    if (cfg.mode == ReconMode::van_leer) {
        for (int k = 0; k < 4; ++k) {
            const double s = van_leer_slope(line[1][k], line[2][k], line[3][k]);
            for (int m = 0; m < 2; ++m) {
                out[m].value[k] = line[2][k] + s * (kGaussXi[m] + 0.5);
                out[m].tangential_deriv[k] = s / h;
            }
        }
        return out;
    }

    if (detail::choose(cfg, alpha[0], alpha[1], alpha[2]) == StencilChoice::df_cubic) {
        for (int k = 0; k < 4; ++k) {
            for (int m = 0; m < 2; ++m) {
                const auto pv = df_cubic_reconstruct(line[1][k], line[2][k], line[3][k], alpha[1], kGaussXi[m] * h, h);
                out[m].value[k] = pv.value;
                out[m].tangential_deriv[k] = pv.deriv;
            }
        }
        return out;
    }

    std::array<Vec4, 5> q;
    for (int k = 0; k < 5; ++k) q[k] = basis.project(line[k]);
    std::array<Vec4, 2> val, der;
    const auto poly = weno_ao_polynomial4(q, cfg);
    const auto& a = poly.coef;
    for (int m = 0; m < 2; ++m) {
        const double x = kGaussXi[m];
        val[m] = a[0] + x * (a[1] + x * (a[2] + x * (a[3] + x * a[4])));
        der[m] = (1.0 / h) * (a[1] + x * (2.0 * a[2] + x * (3.0 * a[3] + x * (4.0 * a[4]))));
    }
    for (int m = 0; m < 2; ++m) {
        out[m].value = basis.unproject(val[m]);
        out[m].tangential_deriv = basis.unproject(der[m]);
    }
    return out;
}

[[nodiscard]] inline std::array<GaussSideValue, 2> reconstruct_gauss_points(
    const std::array<Vec4, 5>& line, const Vec4& normal_deriv, const std::array<double, 3>& alpha,
    const ConservedState& ref_a, const ConservedState& ref_b, const Normal& axis, double h, const ReconConfig& cfg,
    const GammaModel& g) {
    return reconstruct_gauss_points(line, normal_deriv, alpha, interface_basis(ref_a, ref_b, axis, g), h, cfg);
}

/// Smoothness indicators of the left (cells i-2..i+2) and right (cells
/// i+3..i-1, mirrored) density stencils of interface i+1/2, used by the
/// non-linear time limiter.
struct InterfaceIndicators {
    SmoothnessIndicators left;
    SmoothnessIndicators right;
};

[[nodiscard]] inline InterfaceIndicators density_indicators(const std::array<ConservedState, 6>& w) {
    return {smoothness_indicators({{w[0][0], w[1][0], w[2][0], w[3][0], w[4][0]}, 1.0}),
            smoothness_indicators({{w[5][0], w[4][0], w[3][0], w[2][0], w[1][0]}, 1.0})};
}

}  // namespace hfv
