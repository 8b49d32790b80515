#pragma once

// WENO-AO(5,3) reconstruction with WENO-Z type non-linear weights.
//
// All polynomials live in the cell-local coordinate xi = x / dx where the cell
// being reconstructed occupies xi in [-1, 0] and xi = 0 is its downstream
// interface. Stencil entry q[k] holds the cell average of cell k - 2 relative
// to that cell.

#include <algorithm>
#include <array>
#include <cmath>

#include "hfv/state.hpp"

namespace hfv {

enum class ReconMode { weno_ao, hybrid, van_leer };

struct ReconConfig {
    double d_h = 0.85;
    double d_l = 0.85;
    double eps = 1e-6;
    double alpha_thres = 0.5;
    ReconMode mode = ReconMode::hybrid;
};

/// Coefficients of a degree <= 4 polynomial in xi, lowest order first.
using Poly4 = std::array<double, 5>;

struct StencilValues {
    std::array<double, 5> q{};
    double dx = 1.0;
};

struct LinearWeights {
    std::array<double, 4> d{};
};

[[nodiscard]] constexpr LinearWeights linear_weights(double d_h, double d_l) {
    const double d0 = 0.5 * (1.0 - d_h) * (1.0 - d_l);
    return {{d0, (1.0 - d_h) * d_l, d0, d_h}};
}

namespace detail {

/// Integral of xi^n over [-1, 0].
inline constexpr std::array<double, 9> kCellMoment = {1.0,       -1.0 / 2.0, 1.0 / 3.0,  -1.0 / 4.0, 1.0 / 5.0,
                                                      -1.0 / 6.0, 1.0 / 7.0,  -1.0 / 8.0, 1.0 / 9.0};

inline double poly_value(const Poly4& p, double xi) {
    return p[0] + xi * (p[1] + xi * (p[2] + xi * (p[3] + xi * p[4])));
}

inline double poly_deriv(const Poly4& p, double xi) {
    return p[1] + xi * (2.0 * p[2] + xi * (3.0 * p[3] + xi * 4.0 * p[4]));
}

}  // namespace detail

/// The three quadratic sub-stencil polynomials p0, p1, p2 and the quartic
/// large-stencil polynomial p3.
[[nodiscard]] inline std::array<Poly4, 4> candidate_polynomials(const std::array<double, 5>& q) {
    const double qm2 = q[0], qm1 = q[1], q0 = q[2], qp1 = q[3], qp2 = q[4];
    std::array<Poly4, 4> p{};
    p[0] = {qm2 / 3.0 - 7.0 / 6.0 * qm1 + 11.0 / 6.0 * q0, qm2 - 3.0 * qm1 + 2.0 * q0, 0.5 * qm2 - qm1 + 0.5 * q0, 0.0,
            0.0};
    p[1] = {-qm1 / 6.0 + 5.0 / 6.0 * q0 + qp1 / 3.0, qp1 - q0, 0.5 * qm1 - q0 + 0.5 * qp1, 0.0, 0.0};
    p[2] = {q0 / 3.0 + 5.0 / 6.0 * qp1 - qp2 / 6.0, qp1 - q0, 0.5 * q0 - qp1 + 0.5 * qp2, 0.0, 0.0};
    p[3] = {(2.0 * qm2 - 13.0 * qm1 + 47.0 * q0 + 27.0 * qp1 - 3.0 * qp2) / 60.0,
            (qm1 - 15.0 * q0 + 15.0 * qp1 - qp2) / 12.0,
            (-qm2 + 6.0 * qm1 - 8.0 * q0 + 2.0 * qp1 + qp2) / 8.0,
            (-qm1 + 3.0 * q0 - 3.0 * qp1 + qp2) / 6.0,
            (qm2 - 4.0 * qm1 + 6.0 * q0 - 4.0 * qp1 + qp2) / 24.0};
    return p;
}

namespace detail {

// Gram matrix of the smoothness functional on the monomials xi^1..xi^4:
// G[a][b] = sum_q integral_{-1}^{0} (d^q xi^a)(d^q xi^b).
consteval std::array<std::array<double, 4>, 4> smoothness_gram() {
    std::array<std::array<double, 4>, 4> g{};
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            double fa = 1.0, fb = 1.0, sum = 0.0;
            for (int q = 1; q <= std::min(a, b); ++q) {
                fa *= a - q + 1;
                fb *= b - q + 1;
                sum += fa * fb * kCellMoment[static_cast<std::size_t>(a + b - 2 * q)];
            }
            g[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] = sum;
        }
    }
    return g;
}

inline constexpr auto kSmoothnessGram = smoothness_gram();

}  // namespace detail

/// beta = sum_q dx^(2q-1) * integral over the cell of (d^q p / dx^q)^2, which in
/// xi units is sum_q integral_{-1}^{0} (d^q p / dxi^q)^2.
[[nodiscard]] inline double smoothness_of(const Poly4& p) {
    const auto& G = detail::kSmoothnessGram;
    double beta = 0.0;
    for (std::size_t a = 0; a < 4; ++a) {
        double row = 0.0;
        for (std::size_t b = 0; b < 4; ++b) row += G[a][b] * p[b + 1];
        beta += p[a + 1] * row;
    }
    return beta;
}

/// Quadratic-only shortcut: c1^2 - 2 c1 c2 + 16/3 c2^2.
[[nodiscard]] inline double smoothness_of_quadratic(const Poly4& p) {
    return p[1] * p[1] - 2.0 * p[1] * p[2] + 16.0 / 3.0 * p[2] * p[2];
}

struct SmoothnessIndicators {
    std::array<double, 4> beta{};
    double tau_z = 0.0;

    [[nodiscard]] double beta_min() const { return std::min({beta[0], beta[1], beta[2]}); }
    [[nodiscard]] double beta_max() const { return std::max({beta[0], beta[1], beta[2]}); }
};

[[nodiscard]] inline SmoothnessIndicators smoothness_from_polys(const std::array<Poly4, 4>& p) {
    SmoothnessIndicators s;
    for (int k = 0; k < 3; ++k) s.beta[k] = std::max(0.0, smoothness_of_quadratic(p[k]));
    s.beta[3] = std::max(0.0, smoothness_of(p[3]));
    s.tau_z = (std::abs(s.beta[3] - s.beta[0]) + std::abs(s.beta[3] - s.beta[1]) + std::abs(s.beta[3] - s.beta[2])) /
              3.0;
    return s;
}

[[nodiscard]] inline SmoothnessIndicators smoothness_indicators(const StencilValues& s) {
    return smoothness_from_polys(candidate_polynomials(s.q));
}

/// Blended WENO-AO polynomial over one cell.
struct WenoAoPolynomial {
    Poly4 coef{};
    double dx = 1.0;
    SmoothnessIndicators indicators{};

    /// Value at physical local coordinate x in [-dx, 0].
    [[nodiscard]] double value(double x) const { return detail::poly_value(coef, x / dx); }
    [[nodiscard]] double deriv(double x) const { return detail::poly_deriv(coef, x / dx) / dx; }
};

[[nodiscard]] inline WenoAoPolynomial weno_ao_polynomial(const StencilValues& s, const ReconConfig& cfg) {
    const auto p = candidate_polynomials(s.q);
    const auto ind = smoothness_from_polys(p);
    const auto lw = linear_weights(cfg.d_h, cfg.d_l);

    std::array<double, 4> w{};
    double wsum = 0.0;
    for (std::size_t k = 0; k < 4; ++k) {
        const double r = ind.tau_z / (ind.beta[k] + cfg.eps);
        w[k] = lw.d[k] * (1.0 + r * r);
        wsum += w[k];
    }
    const double inv = 1.0 / wsum;
    for (auto& x : w) x *= inv;

    WenoAoPolynomial out;
    out.dx = s.dx;
    out.indicators = ind;
    const double w3_over_d3 = w[3] / lw.d[3];
    const double c0 = w[0] - w3_over_d3 * lw.d[0];
    const double c1 = w[1] - w3_over_d3 * lw.d[1];
    const double c2 = w[2] - w3_over_d3 * lw.d[2];
    for (std::size_t n = 0; n < 3; ++n)
        out.coef[n] = w3_over_d3 * p[3][n] + c0 * p[0][n] + c1 * p[1][n] + c2 * p[2][n];
    out.coef[3] = w3_over_d3 * p[3][3];
    out.coef[4] = w3_over_d3 * p[3][4];
    return out;
}

/// Four independent stencils reconstructed at once (one per characteristic
/// field); lane c of every result belongs to stencil c. Same arithmetic as
/// weno_ao_polynomial, laid out so the lane loop vectorises.
struct WenoAoPolynomial4 {
    std::array<Vec4, 5> coef{};
};

[[nodiscard]] inline WenoAoPolynomial4 weno_ao_polynomial4(const std::array<Vec4, 5>& q, const ReconConfig& cfg) {
    const auto lw = linear_weights(cfg.d_h, cfg.d_l);
    const auto& G = detail::kSmoothnessGram;
    const double eps = cfg.eps;
    WenoAoPolynomial4 out;
    for (std::size_t c = 0; c < 4; ++c) {
        const double qm2 = q[0][c], qm1 = q[1][c], q0 = q[2][c], qp1 = q[3][c], qp2 = q[4][c];
        const double a00 = qm2 / 3.0 - 7.0 / 6.0 * qm1 + 11.0 / 6.0 * q0;
        const double a01 = qm2 - 3.0 * qm1 + 2.0 * q0;
        const double a02 = 0.5 * qm2 - qm1 + 0.5 * q0;
        const double a10 = -qm1 / 6.0 + 5.0 / 6.0 * q0 + qp1 / 3.0;
        const double a11 = qp1 - q0;
        const double a12 = 0.5 * qm1 - q0 + 0.5 * qp1;
        const double a20 = q0 / 3.0 + 5.0 / 6.0 * qp1 - qp2 / 6.0;
        const double a21 = qp1 - q0;
        const double a22 = 0.5 * q0 - qp1 + 0.5 * qp2;
        const double a30 = (2.0 * qm2 - 13.0 * qm1 + 47.0 * q0 + 27.0 * qp1 - 3.0 * qp2) / 60.0;
        const double a31 = (qm1 - 15.0 * q0 + 15.0 * qp1 - qp2) / 12.0;
        const double a32 = (-qm2 + 6.0 * qm1 - 8.0 * q0 + 2.0 * qp1 + qp2) / 8.0;
        const double a33 = (-qm1 + 3.0 * q0 - 3.0 * qp1 + qp2) / 6.0;
        const double a34 = (qm2 - 4.0 * qm1 + 6.0 * q0 - 4.0 * qp1 + qp2) / 24.0;

        const double b0 = std::max(0.0, a01 * a01 - 2.0 * a01 * a02 + 16.0 / 3.0 * a02 * a02);
        const double b1 = std::max(0.0, a11 * a11 - 2.0 * a11 * a12 + 16.0 / 3.0 * a12 * a12);
        const double b2 = std::max(0.0, a21 * a21 - 2.0 * a21 * a22 + 16.0 / 3.0 * a22 * a22);
        const double r0 = G[0][0] * a31 + G[0][1] * a32 + G[0][2] * a33 + G[0][3] * a34;
        const double r1 = G[1][0] * a31 + G[1][1] * a32 + G[1][2] * a33 + G[1][3] * a34;
        const double r2 = G[2][0] * a31 + G[2][1] * a32 + G[2][2] * a33 + G[2][3] * a34;
        const double r3 = G[3][0] * a31 + G[3][1] * a32 + G[3][2] * a33 + G[3][3] * a34;
        const double b3 = std::max(0.0, a31 * r0 + a32 * r1 + a33 * r2 + a34 * r3);
        const double tau = (std::abs(b3 - b0) + std::abs(b3 - b1) + std::abs(b3 - b2)) / 3.0;

        const double s0 = tau / (b0 + eps), s1 = tau / (b1 + eps), s2 = tau / (b2 + eps), s3 = tau / (b3 + eps);
        double w0 = lw.d[0] * (1.0 + s0 * s0);
        double w1 = lw.d[1] * (1.0 + s1 * s1);
        double w2 = lw.d[2] * (1.0 + s2 * s2);
        double w3 = lw.d[3] * (1.0 + s3 * s3);
        const double inv = 1.0 / (((w0 + w1) + w2) + w3);
        w0 *= inv;
        w1 *= inv;
        w2 *= inv;
        w3 *= inv;
        const double h = w3 / lw.d[3];
        const double c0 = w0 - h * lw.d[0];
        const double c1 = w1 - h * lw.d[1];
        const double c2 = w2 - h * lw.d[2];
        out.coef[0][c] = h * a30 + c0 * a00 + c1 * a10 + c2 * a20;
        out.coef[1][c] = h * a31 + c0 * a01 + c1 * a11 + c2 * a21;
        out.coef[2][c] = h * a32 + c0 * a02 + c1 * a12 + c2 * a22;
        out.coef[3][c] = h * a33;
        out.coef[4][c] = h * a34;
    }
    return out;
}

struct ReconResult {
    double value = 0.0;
    double deriv = 0.0;
    std::array<double, 4> betas{};
    double tau_z = 0.0;
};

[[nodiscard]] inline ReconResult weno_ao_reconstruct(const StencilValues& s, const ReconConfig& cfg, double x_eval) {
    const auto poly = weno_ao_polynomial(s, cfg);
    return {poly.value(x_eval), poly.deriv(x_eval), poly.indicators.beta, poly.indicators.tau_z};
}

}  // namespace hfv
