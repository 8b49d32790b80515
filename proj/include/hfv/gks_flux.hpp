#pragma once

// Second-order gas-kinetic (BGK) flux at an interface Gauss point.
//
// Everything here works in the interface-local frame: u is the particle
// velocity along the interface normal, v the tangential one, and xi collects
// the K internal degrees of freedom. The equilibrium distribution is
//   g = rho (lambda / pi)^((K+2)/2) exp(-lambda ((u-U)^2 + (v-V)^2 + xi^2)).
// Moments <...> are normalised by rho so that <1> = 1.

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "hfv/state.hpp"

namespace hfv {

struct MaxwellianState {
    double rho = 1.0;
    double U = 0.0;
    double V = 0.0;
    double lambda = 0.5;
};

struct MaxwellianResult {
    MaxwellianState state;
    bool physical = true;
};

/// lambda = (K + 2) rho / (4 (rho E - rho (U^2 + V^2) / 2)) = rho / (2 p).
[[nodiscard]] inline MaxwellianResult maxwellian_from_conserved(const ConservedState& w, const GammaModel& g) {
    MaxwellianResult r;
    const double rho = w[0];
    r.state.rho = rho;
    r.state.U = w[1] / rho;
    r.state.V = w[2] / rho;
    const double internal = w[3] - 0.5 * rho * (r.state.U * r.state.U + r.state.V * r.state.V);
    r.state.lambda = (g.K() + 2.0) * rho / (4.0 * internal);
    r.physical = rho > 0.0 && internal > 0.0 && std::isfinite(r.state.lambda) && std::isfinite(r.state.U) &&
                 std::isfinite(r.state.V);
    return r;
}

enum class HalfSpace { full, positive, negative };

/// Normalised velocity moments of a Maxwellian for powers 0..6.
struct MomentTable {
    std::array<double, 7> u_full{};
    std::array<double, 7> u_plus{};   // integral over u > 0
    std::array<double, 7> u_minus{};  // integral over u < 0
    std::array<double, 7> v_full{};
    std::array<double, 3> xi{};  // <xi^0>, <xi^2>, <xi^4>

    [[nodiscard]] const std::array<double, 7>& u(HalfSpace h) const {
        switch (h) {
            case HalfSpace::positive: return u_plus;
            case HalfSpace::negative: return u_minus;
            default: return u_full;
        }
    }
    [[nodiscard]] double xi2() const { return xi[1]; }
    [[nodiscard]] double xi4() const { return xi[2]; }
};

[[nodiscard]] inline MomentTable build_moment_table(const MaxwellianState& m, const GammaModel& g) {
    MomentTable t;
    const double lam = m.lambda;
    const double half_over_lam = 0.5 / lam;
    const double K = g.K();

    t.u_full[0] = 1.0;
    t.u_full[1] = m.U;
    t.v_full[0] = 1.0;
    t.v_full[1] = m.V;
    t.u_plus[0] = 0.5 * std::erfc(-std::sqrt(lam) * m.U);
    t.u_plus[1] = m.U * t.u_plus[0] + 0.5 * std::exp(-lam * m.U * m.U) / std::sqrt(std::numbers::pi * lam);
    t.u_minus[0] = 0.5 * std::erfc(std::sqrt(lam) * m.U);
    t.u_minus[1] = m.U * t.u_minus[0] - 0.5 * std::exp(-lam * m.U * m.U) / std::sqrt(std::numbers::pi * lam);
    for (int n = 2; n <= 6; ++n) {
        const double c = (n - 1) * half_over_lam;
        t.u_full[n] = m.U * t.u_full[n - 1] + c * t.u_full[n - 2];
        t.v_full[n] = m.V * t.v_full[n - 1] + c * t.v_full[n - 2];
        t.u_plus[n] = m.U * t.u_plus[n - 1] + c * t.u_plus[n - 2];
        t.u_minus[n] = m.U * t.u_minus[n - 1] + c * t.u_minus[n - 2];
    }
    t.xi[0] = 1.0;
    t.xi[1] = K * half_over_lam;
    t.xi[2] = K * (K + 2.0) * half_over_lam * half_over_lam;
    return t;
}

/// < psi * u^nu * v^nv * (a0 + a1 u + a2 v + a3 (u^2 + v^2 + xi^2) / 2) > over
/// the requested half space, with psi = (1, u, v, (u^2 + v^2 + xi^2) / 2).
/// Requires nu + 4 <= 6 and nv + 4 <= 6 on the combined powers.
[[nodiscard]] inline Vec4 psi_moment(const MomentTable& m, HalfSpace h, const Vec4& a, int nu, int nv) {
    const auto& U = m.u(h);
    const auto& V = m.v_full;
    const auto& X = m.xi;
    const double* Uo = U.data() + nu;
    const double* Vo = V.data() + nv;
    const double a0 = a[0], a1 = a[1], a2 = a[2], ha3 = 0.5 * a[3];
    // <u^pu v^pv xi^(2 px) (a . psi)>
    auto with = [&](int pu, int pv, int px) {
        const double uv = Uo[pu] * Vo[pv];
        return X[px] * (a0 * uv + a1 * Uo[pu + 1] * Vo[pv] + a2 * Uo[pu] * Vo[pv + 1] +
                        ha3 * (Uo[pu + 2] * Vo[pv] + Uo[pu] * Vo[pv + 2])) +
               ha3 * uv * X[px + 1];
    };
    Vec4 out;
    out[0] = with(0, 0, 0);
    out[1] = with(1, 0, 0);
    out[2] = with(0, 1, 0);
    out[3] = 0.5 * (with(2, 0, 0) + with(0, 2, 0) + with(0, 0, 1));
    return out;
}

/// Coefficients of a = a0 + a1 u + a2 v + a3 (u^2 + v^2 + xi^2) / 2.
using MicroSlope = Vec4;

/// Solves rho <a psi> = dW for a Maxwellian. The 4x4 moment matrix has a
/// closed-form inverse, applied directly.
class MicroSlopeSolver {
public:
    MicroSlopeSolver(const MomentTable& table, double rho)
        : rho_(rho), U_(table.u_full[1]), V_(table.v_full[1]) {
        // <u^2> - U^2 = 1 / (2 lambda)
        const double half_over_lam = table.u_full[2] - U_ * U_;
        lam2_ = 1.0 / half_over_lam;  // 2 lambda
        energy_ = U_ * U_ + V_ * V_ + half_over_lam * 2.0 + table.xi2();  // U^2 + V^2 + (K + 2) / (2 lambda)
        inv_ = 1.0 / (half_over_lam * (2.0 + table.xi2() / half_over_lam)) * lam2_;  // 4 lambda^2 / (K + 2)
        singular_ = !(half_over_lam > 0.0) || !std::isfinite(inv_) || !(rho > 0.0);
    }

    [[nodiscard]] bool singular() const { return singular_; }

    /// Returns a with rho * <a psi> = dW.
    [[nodiscard]] MicroSlope solve(const Vec4& dW) const {
        const double w0 = dW[0] / rho_, w1 = dW[1] / rho_, w2 = dW[2] / rho_, w3 = dW[3] / rho_;
        const double r2 = w1 - U_ * w0;
        const double r3 = w2 - V_ * w0;
        const double r4 = 2.0 * w3 - energy_ * w0;
        const double a3 = inv_ * (r4 - 2.0 * U_ * r2 - 2.0 * V_ * r3);
        const double a2 = lam2_ * r3 - V_ * a3;
        const double a1 = lam2_ * r2 - U_ * a3;
        const double a0 = w0 - U_ * a1 - V_ * a2 - 0.5 * a3 * energy_;
        return {{a0, a1, a2, a3}};
    }

private:
    double rho_ = 1.0;
    double U_ = 0.0, V_ = 0.0;
    double lam2_ = 2.0;
    double energy_ = 0.0;
    double inv_ = 0.0;
    bool singular_ = false;
};

[[nodiscard]] inline MicroSlope solve_micro_slope(const MaxwellianState& m, const Vec4& dW, const GammaModel& g) {
    return MicroSlopeSolver(build_moment_table(m, g), m.rho).solve(dW);
}

/// Kinetic-weighted interface equilibrium: u > 0 particles from the left
/// Maxwellian, u < 0 from the right one.
struct EquilibriumMerge {
    ConservedState w;
    Vec4 dw;
    bool physical = true;
};

[[nodiscard]] inline EquilibriumMerge merge_equilibrium(const ConservedState& wl, const ConservedState& wr,
                                                        const Vec4& dwl, const Vec4& dwr, const GammaModel& g) {
    EquilibriumMerge r;
    const auto ml = maxwellian_from_conserved(wl, g);
    const auto mr = maxwellian_from_conserved(wr, g);
    if (!ml.physical || !mr.physical) {
        r.physical = false;
        return r;
    }
    const auto tl = build_moment_table(ml.state, g);
    const auto tr = build_moment_table(mr.state, g);
    const Vec4 one{{1.0, 0.0, 0.0, 0.0}};
    r.w = ml.state.rho * psi_moment(tl, HalfSpace::positive, one, 0, 0) +
          mr.state.rho * psi_moment(tr, HalfSpace::negative, one, 0, 0);
    const auto al = MicroSlopeSolver(tl, ml.state.rho).solve(dwl);
    const auto ar = MicroSlopeSolver(tr, mr.state.rho).solve(dwr);
    r.dw = ml.state.rho * psi_moment(tl, HalfSpace::positive, al, 0, 0) +
           mr.state.rho * psi_moment(tr, HalfSpace::negative, ar, 0, 0);
    r.physical = maxwellian_from_conserved(r.w, g).physical;
    return r;
}

struct GksParams {
    double c1 = 0.01;
    double c2 = 5.0;
    /// Physical collision time in the non-exponential coefficients; zero for
    /// inviscid flow.
    double tau_physical = 0.0;
};

/// tau_n = C1 dt + C2 |p_l - p_r| / (p_l + p_r) dt.
[[nodiscard]] inline double collision_time(double p_l, double p_r, double dt, const GksParams& params) {
    return params.c1 * dt + params.c2 * std::abs(p_l - p_r) / (p_l + p_r) * dt;
}

/// Left/right states and their normal/tangential derivatives at one Gauss
/// point, all in the interface-local frame.
struct GaussPointRecon {
    ConservedState wl;
    Vec4 wl_n;
    Vec4 wl_t;
    ConservedState wr;
    Vec4 wr_n;
    Vec4 wr_t;
};

/// Velocity-space parts of the flux that multiply the scalar time functions of
/// the second-order distribution function.
struct GksFluxTerms {
    Vec4 noneq;          // <u psi g^l>_{u>0} + <u psi g^r>_{u<0}
    Vec4 noneq_slope;    // <u psi (a . u) g^{l,r}> on each half
    Vec4 noneq_time;     // <u psi A g^{l,r}> on each half
    Vec4 eq;             // <u psi g^c>
    Vec4 eq_slope;       // <u psi (a^c . u) g^c>
    Vec4 eq_time;        // <u psi A^c g^c>
    double p_l = 1.0;
    double p_r = 1.0;
    bool physical = true;
};

namespace detail {

inline Vec4 temporal_slope(const MomentTable& t, const MicroSlopeSolver& solver, double rho, const MicroSlope& an,
                           const MicroSlope& at) {
    // compatibility: <A + a_n u + a_t v> = 0
    const Vec4 rhs = -rho * (psi_moment(t, HalfSpace::full, an, 1, 0) + psi_moment(t, HalfSpace::full, at, 0, 1));
    return solver.solve(rhs);
}

}  // namespace detail

[[nodiscard]] inline GksFluxTerms gks_flux_terms(const GaussPointRecon& r, const GammaModel& g,
                                                 bool need_noneq_time = false) {
    GksFluxTerms out;
    const auto ml = maxwellian_from_conserved(r.wl, g);
    const auto mr = maxwellian_from_conserved(r.wr, g);
    if (!ml.physical || !mr.physical) {
        out.physical = false;
        return out;
    }
    const double rl = ml.state.rho;
    const double rr = mr.state.rho;
    out.p_l = 0.5 * rl / ml.state.lambda;
    out.p_r = 0.5 * rr / mr.state.lambda;

    const auto tl = build_moment_table(ml.state, g);
    const auto tr = build_moment_table(mr.state, g);
    const MicroSlopeSolver sl(tl, rl);
    const MicroSlopeSolver sr(tr, rr);
    const auto aln = sl.solve(r.wl_n);
    const auto alt = sl.solve(r.wl_t);
    const auto arn = sr.solve(r.wr_n);
    const auto art = sr.solve(r.wr_t);

    const Vec4 one{{1.0, 0.0, 0.0, 0.0}};
    constexpr auto P = HalfSpace::positive;
    constexpr auto N = HalfSpace::negative;
    constexpr auto F = HalfSpace::full;

    const Vec4 wc = rl * psi_moment(tl, P, one, 0, 0) + rr * psi_moment(tr, N, one, 0, 0);
    const Vec4 wc_n = rl * psi_moment(tl, P, aln, 0, 0) + rr * psi_moment(tr, N, arn, 0, 0);
    const Vec4 wc_t = rl * psi_moment(tl, P, alt, 0, 0) + rr * psi_moment(tr, N, art, 0, 0);

    const auto mc = maxwellian_from_conserved(wc, g);
    if (!mc.physical) {
        out.physical = false;
        return out;
    }
    const double rc = mc.state.rho;
    const auto tc = build_moment_table(mc.state, g);
    const MicroSlopeSolver sc(tc, rc);
    const auto acn = sc.solve(wc_n);
    const auto act = sc.solve(wc_t);
    const auto Ac = detail::temporal_slope(tc, sc, rc, acn, act);

    out.noneq = rl * psi_moment(tl, P, one, 1, 0) + rr * psi_moment(tr, N, one, 1, 0);
    out.noneq_slope = rl * (psi_moment(tl, P, aln, 2, 0) + psi_moment(tl, P, alt, 1, 1)) +
                      rr * (psi_moment(tr, N, arn, 2, 0) + psi_moment(tr, N, art, 1, 1));
    if (need_noneq_time) {
        const auto Al = detail::temporal_slope(tl, sl, rl, aln, alt);
        const auto Ar = detail::temporal_slope(tr, sr, rr, arn, art);
        out.noneq_time = rl * psi_moment(tl, P, Al, 1, 0) + rr * psi_moment(tr, N, Ar, 1, 0);
    }
    out.eq = rc * psi_moment(tc, F, one, 1, 0);
    out.eq_slope = rc * (psi_moment(tc, F, acn, 2, 0) + psi_moment(tc, F, act, 1, 1));
    out.eq_time = rc * psi_moment(tc, F, Ac, 1, 0);
    out.physical = is_finite(out.noneq) && is_finite(out.noneq_slope) && is_finite(out.eq) &&
                   is_finite(out.eq_slope) && is_finite(out.eq_time);
    return out;
}

/// Closed-form time integrals over [0, delta] of the six scalar time functions
/// of the distribution function, for collision times tau_n (exponentials) and
/// tau (everything else).
struct GksTimeCoefficients {
    std::array<double, 6> c{};
};

[[nodiscard]] inline GksTimeCoefficients gks_time_coefficients(double delta, double tau_n, double tau) {
    const double e = std::exp(-delta / tau_n);
    GksTimeCoefficients t;
    t.c[0] = tau_n * (1.0 - e);                                                         // e^{-t/tn}
    t.c[1] = tau_n * (e * (delta + tau_n) - tau_n) + tau * tau_n * (e - 1.0);           // -(t+tau) e^{-t/tn}
    t.c[2] = tau * tau_n * (e - 1.0);                                                   // -tau e^{-t/tn}
    t.c[3] = delta - tau_n * (1.0 - e);                                                 // 1 - e^{-t/tn}
    t.c[4] = tau_n * (tau_n - e * (delta + tau_n) - tau * (e - 1.0)) - delta * tau;     // (t+tau) e^{-t/tn} - tau
    t.c[5] = 0.5 * delta * delta - tau * delta + tau * tau_n * (1.0 - e);               // t - tau + tau e^{-t/tn}
    return t;
}

[[nodiscard]] inline Vec4 integrate_terms(const GksFluxTerms& terms, const GksTimeCoefficients& t) {
    return t.c[0] * terms.noneq + t.c[1] * terms.noneq_slope + t.c[2] * terms.noneq_time + t.c[3] * terms.eq +
           t.c[4] * terms.eq_slope + t.c[5] * terms.eq_time;
}

struct TimeIntegratedFlux {
    Vec4 transport;  // integral over [0, delta] of the flux
    bool physical = true;
};

/// Total flux transport over [0, delta]; the collision time is built from the
/// step size `dt`.
[[nodiscard]] inline TimeIntegratedFlux gks_time_integrated_flux(const GaussPointRecon& r, double delta, double dt,
                                                                 const GksParams& params, const GammaModel& g) {
    const auto terms = gks_flux_terms(r, g, params.tau_physical != 0.0);
    if (!terms.physical) return {Vec4{}, false};
    const double tau_n = collision_time(terms.p_l, terms.p_r, dt, params);
    return {integrate_terms(terms, gks_time_coefficients(delta, tau_n, params.tau_physical)), true};
}

struct FluxCoefficients {
    Vec4 flux;        // F at t_n
    Vec4 flux_rate;   // dF/dt at t_n
    bool physical = true;
};

/// Inverts F(delta) = F delta + dF delta^2 / 2 from the windows dt/2 and dt.
[[nodiscard]] inline FluxCoefficients s2o4_flux_coefficients(const Vec4& transport_half, const Vec4& transport_full,
                                                             double dt) {
    return {(4.0 * transport_half - transport_full) * (1.0 / dt),
            4.0 * (transport_full - 2.0 * transport_half) * (1.0 / (dt * dt)), true};
}

/// Flux and its time derivative at one Gauss point for a step of size dt.
[[nodiscard]] inline FluxCoefficients gks_flux(const GaussPointRecon& r, double dt, const GksParams& params,
                                               const GammaModel& g) {
    const auto terms = gks_flux_terms(r, g, params.tau_physical != 0.0);
    if (!terms.physical) return {Vec4{}, Vec4{}, false};
    const double tau_n = collision_time(terms.p_l, terms.p_r, dt, params);
    const Vec4 full = integrate_terms(terms, gks_time_coefficients(dt, tau_n, params.tau_physical));
    const Vec4 half = integrate_terms(terms, gks_time_coefficients(0.5 * dt, tau_n, params.tau_physical));
    auto out = s2o4_flux_coefficients(half, full, dt);
    out.physical = is_finite(out.flux) && is_finite(out.flux_rate);
    return out;
}

}  // namespace hfv
