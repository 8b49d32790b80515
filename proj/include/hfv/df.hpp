#pragma once

// Discontinuity feedback factor (DF) and the hybrid stencil selector.

#include <algorithm>
#include <cmath>
#include <span>

#include "hfv/state.hpp"

namespace hfv {

struct GaussPointDf {
    double alpha = 1.0;
    bool flagged = false;  // a side had non-positive density or pressure
};

/// alpha = 1 / (1 + D^2) with
/// D = |dp|/p_l + |dp|/p_r + (Ma_n^l - Ma_n^r)^2 + (Ma_t^l - Ma_t^r)^2.
[[nodiscard]] inline GaussPointDf df_gauss_point(const PrimitiveState& left, const PrimitiveState& right,
                                                 const Normal& n, const GammaModel& g) {
    if (!(left.p > 0.0) || !(right.p > 0.0) || !(left.rho > 0.0) || !(right.rho > 0.0)) return {0.0, true};
    const double cl = sound_speed(left, g);
    const double cr = sound_speed(right, g);
    const double man_l = (left.u * n.nx + left.v * n.ny) / cl;
    const double man_r = (right.u * n.nx + right.v * n.ny) / cr;
    const double mat_l = (-left.u * n.ny + left.v * n.nx) / cl;
    const double mat_r = (-right.u * n.ny + right.v * n.nx) / cr;
    const double dp = std::abs(left.p - right.p);
    const double d = dp / left.p + dp / right.p + (man_l - man_r) * (man_l - man_r) + (mat_l - mat_r) * (mat_l - mat_r);
    const double alpha = 1.0 / (1.0 + d * d);
    if (!std::isfinite(alpha)) return {0.0, true};
    return {alpha, false};
}

[[nodiscard]] inline GaussPointDf df_gauss_point(const ConservedState& left, const ConservedState& right,
                                                 const Normal& n, const GammaModel& g) {
    const auto pl = conserved_to_primitive(left, g);
    const auto pr = conserved_to_primitive(right, g);
    if (!pl.physical || !pr.physical) return {0.0, true};
    return df_gauss_point(pl.state, pr.state, n, g);
}

/// Cell DF: product of the Gauss-point factors on all of its faces.
[[nodiscard]] inline double df_cell_update(std::span<const double> gauss_alphas) {
    double a = 1.0;
    for (double x : gauss_alphas) a *= x;
    return a;
}

enum class StencilChoice { df_cubic, weno_ao };

/// DF_CUBIC iff max{alpha_-, alpha_0, alpha_+} < alpha_thres (strict).
[[nodiscard]] constexpr StencilChoice hybrid_select(double alpha_minus, double alpha_center, double alpha_plus,
                                                    double alpha_thres) {
    return std::max({alpha_minus, alpha_center, alpha_plus}) < alpha_thres ? StencilChoice::df_cubic
                                                                           : StencilChoice::weno_ao;
}

}  // namespace hfv
