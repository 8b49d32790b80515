#pragma once

// Run loop: step-size selection, the stage loop of the chosen integrator,
// failure detection, and the lagged DF update after each step.

#include <algorithm>
#include <functional>
#include <optional>

#include "hfv/scheme.hpp"
#include "hfv/timestep.hpp"

namespace hfv {

template <class Scheme>
class Solver {
public:
    using Field = typename Scheme::Field;
    using Df = typename Scheme::Df;

    Solver(Scheme scheme, Field initial) : scheme_(std::move(scheme)), w_(std::move(initial)) {
        alpha_ = scheme_.initial_df(w_);
    }

    [[nodiscard]] const Field& field() const { return w_; }
    [[nodiscard]] const Df& df() const { return alpha_; }
    [[nodiscard]] double time() const { return t_; }
    [[nodiscard]] long steps() const { return steps_; }
    [[nodiscard]] Scheme& scheme() { return scheme_; }
    [[nodiscard]] const GammaModel& gamma() const { return scheme_.options().gamma; }

    [[nodiscard]] double stable_dt(double cfl) const { return compute_dt(w_, cfl, gamma()); }

    /// Advances by dt. On failure the state is left at the start of the step.
    StepReport step(double dt) {
        StepReport rep;
        rep.dt = dt;
        const auto& g = gamma();
        const bool gks = scheme_.options().solver == SolverKind::gks_s2o4;
        const int last_stage = gks ? 1 : 2;

        // Stage inputs after the first are outputs of the previous stage.
        auto check_input = [&](const Field& s, int stage) {
            rep.stages = stage + 1;
            if (stage == 0) return true;
            if (auto bad = find_invalid_cell(s, g)) {
                fail(rep, stage - 1, *bad);
                return false;
            }
            return true;
        };
        auto eval = [&](const Field& s, int stage) -> std::optional<TimeDerivatives<Field>> {
            if (!check_input(s, stage)) return std::nullopt;
            auto d = scheme_.evaluate(s, alpha_, dt, stage == last_stage);
            if (!d) fail(rep, stage, *scheme_.failure());
            return d;
        };

        std::optional<Field> next;
        if (gks) {
            next = s2o4_step(w_, dt, eval);
        } else {
            next = ssp_rk3_step(w_, dt, [&](const Field& s, int stage) -> std::optional<Field> {
                auto d = eval(s, stage);
                if (!d) return std::nullopt;
                return std::move(d->l);
            });
        }
        if (!next) return rep;
        if (auto bad = find_invalid_cell(*next, g)) {
            fail(rep, last_stage, *bad);
            return rep;
        }
        w_ = std::move(*next);
        alpha_ = scheme_.recorded_df();
        t_ += dt;
        ++steps_;
        return rep;
    }

    struct RunLimits {
        double cfl = 0.5;
        double dt_fixed = 0.0;  // > 0: use instead of the CFL estimate
        double t_end = 0.0;   // <= 0: no time limit
        long max_steps = 0;   // <= 0: no step limit
    };

    /// Steps until t_end or max_steps, or the first failure. The callback, if
    /// any, sees every successful step.
    StepReport run(const RunLimits& lim, const std::function<void(const Solver&, const StepReport&)>& on_step = {}) {
        StepReport rep;
        while (true) {
            const bool time_done = lim.t_end > 0.0 && t_ >= lim.t_end * (1.0 - 1e-14);
            const bool steps_done = lim.max_steps > 0 && steps_ >= lim.max_steps;
            if (time_done || steps_done) break;
            if (lim.t_end <= 0.0 && lim.max_steps <= 0) break;
            double dt = lim.dt_fixed > 0.0 ? lim.dt_fixed : stable_dt(lim.cfl);
            if (!(dt > 0.0) || !std::isfinite(dt)) {
                rep = StepReport{};
                if (auto bad = find_invalid_cell(w_, gamma())) fail(rep, 0, *bad);
                rep.failed = true;
                return rep;
            }
            if (lim.t_end > 0.0) dt = std::min(dt, lim.t_end - t_);
            rep = step(dt);
            if (rep.failed) return rep;
            if (on_step) on_step(*this, rep);
        }
        return rep;
    }

private:
    static void fail(StepReport& rep, int stage, const CellFailure& c) {
        if (rep.failed) return;
        rep.failed = true;
        rep.stage = stage;
        rep.i = c.i;
        rep.j = c.j;
        rep.variable = c.variable;
    }

    Scheme scheme_;
    Field w_;
    Df alpha_;
    double t_ = 0.0;
    long steps_ = 0;
};

using Solver1D = Solver<Scheme1D>;
using Solver2D = Solver<Scheme2D>;

}  // namespace hfv
