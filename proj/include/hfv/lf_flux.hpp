#pragma once

// Local Lax-Friedrichs flux in the interface-local frame (normal along x).

#include <algorithm>
#include <cmath>

#include "hfv/state.hpp"

namespace hfv {

[[nodiscard]] inline FluxVector euler_physical_flux(const PrimitiveState& w, const GammaModel& g) {
    const double rhoE = w.p / (g.gamma - 1.0) + 0.5 * w.rho * (w.u * w.u + w.v * w.v);
    return {{w.rho * w.u, w.rho * w.u * w.u + w.p, w.rho * w.u * w.v, w.u * (rhoE + w.p)}};
}

struct FluxResult {
    FluxVector flux;
    bool physical = true;
};

[[nodiscard]] inline FluxResult lf_flux(const PrimitiveState& wl, const PrimitiveState& wr, const GammaModel& g) {
    FluxResult r;
    if (!(wl.rho > 0.0) || !(wl.p > 0.0) || !(wr.rho > 0.0) || !(wr.p > 0.0)) {
        r.physical = false;
        return r;
    }
    const double smax = std::max(std::abs(wl.u) + sound_speed(wl, g), std::abs(wr.u) + sound_speed(wr, g));
    const auto ul = primitive_to_conserved(wl, g);
    const auto ur = primitive_to_conserved(wr, g);
    r.flux = 0.5 * (euler_physical_flux(wl, g) + euler_physical_flux(wr, g)) - 0.5 * smax * (ur - ul);
    return r;
}

/// Conserved-input overload; states must already be in the local frame.
[[nodiscard]] inline FluxResult lf_flux(const ConservedState& wl, const ConservedState& wr, const GammaModel& g) {
    const auto pl = conserved_to_primitive(wl, g);
    const auto pr = conserved_to_primitive(wr, g);
    if (!pl.physical || !pr.physical) return {FluxVector{}, false};
    return lf_flux(pl.state, pr.state, g);
}

}  // namespace hfv
