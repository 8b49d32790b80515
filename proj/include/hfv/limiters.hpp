#pragma once

// Low-order reconstructions: the van Leer limited slope and the zero-mean
// quadratic scaled by the discontinuity-feedback factor.

#include <cmath>

namespace hfv {

struct VanLeerResult {
    double left_interface = 0.0;   // value at the upstream face, q0 - s/2
    double right_interface = 0.0;  // value at the downstream face, q0 + s/2
    double slope = 0.0;            // limited undivided difference
};

/// Harmonic-mean limited slope; zero at extrema.
[[nodiscard]] inline double van_leer_slope(double qm, double q0, double qp) {
    const double dm = q0 - qm;
    const double dp = qp - q0;
    if (dm * dp <= 0.0) return 0.0;
    const double den = std::abs(dm) + std::abs(dp);
    if (den == 0.0) return 0.0;
    return (dm * std::abs(dp) + dp * std::abs(dm)) / den;
}

[[nodiscard]] inline VanLeerResult van_leer_reconstruct(double qm, double q0, double qp) {
    const double s = van_leer_slope(qm, q0, qp);
    return {q0 - 0.5 * s, q0 + 0.5 * s, s};
}

struct PointValue {
    double value = 0.0;
    double deriv = 0.0;
};

/// Zero-mean quadratic built from p1 and scaled by alpha. Cell occupies
/// [-dx, 0]; x is the physical local coordinate.
[[nodiscard]] inline PointValue df_cubic_reconstruct(double qm, double q0, double qp, double alpha, double x,
                                                     double dx) {
    const double xi = x / dx;
    const double slope = qp - q0;
    const double curv = 0.5 * qm - q0 + 0.5 * qp;
    return {q0 + alpha * (slope * (xi + 0.5) + curv * (xi * xi - 1.0 / 3.0)),
            alpha * (slope + 2.0 * curv * xi) / dx};
}

}  // namespace hfv
