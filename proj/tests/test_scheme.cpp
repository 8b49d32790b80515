#include <catch_amalgamated.hpp>

#include <cmath>

#include "hfv/cases.hpp"
#include "hfv/solver.hpp"

using Catch::Approx;
using namespace hfv;

namespace {

SchemeOptions options(SolverKind s, ReconMode m) {
    SchemeOptions o;
    o.solver = s;
    o.recon.mode = m;
    return o;
}

template <class Field>
Vec4 totals(const Field& f) {
    Vec4 t;
    if constexpr (std::is_same_v<Field, Field1D>) {
        for (int i = 0; i < f.nx(); ++i) t += f(i);
    } else {
        for (int j = 0; j < f.ny(); ++j)
            for (int i = 0; i < f.nx(); ++i) t += f(i, j);
    }
    return t;
}

}  // namespace

TEST_CASE("uniform flow is preserved") {
    const GammaModel g{};
    for (auto s : {SolverKind::gks_s2o4, SolverKind::lf_ssprk3}) {
        for (auto m : {ReconMode::weno_ao, ReconMode::hybrid, ReconMode::van_leer}) {
            const Mesh1D m1{50, 0.0, 0.02};
            const auto w1 = init_uniform_1d(m1, {1.0, 1.0, 0.0, 1.0}, g);
            Solver1D s1(Scheme1D(m1, options(s, m), {BoundaryKind::periodic, BoundaryKind::periodic}), w1);
            const auto r1 = s1.run({0.5, 0.0, 0.0, 100});
            REQUIRE_FALSE(r1.failed);
            for (int i = 0; i < m1.nx; ++i)
                for (std::size_t k = 0; k < 4; ++k) CHECK(s1.field()(i)[k] == Approx(w1(i)[k]).margin(1e-13));

            const Mesh2D m2{8, 8, 0.0, 0.0, 0.125, 0.125};
            const auto w2 = init_uniform_2d(m2, {1.0, 1.0, -0.5, 1.0}, g);
            Solver2D s2(Scheme2D(m2, options(s, m), BoundarySpec2D::all(BoundaryKind::periodic)), w2);
            const auto r2 = s2.run({0.5, 0.0, 0.0, 20});
            REQUIRE_FALSE(r2.failed);
            for (int j = 0; j < m2.ny; ++j)
                for (int i = 0; i < m2.nx; ++i)
                    for (std::size_t k = 0; k < 4; ++k) CHECK(s2.field()(i, j)[k] == Approx(w2(i, j)[k]).margin(1e-13));
        }
    }
}

TEST_CASE("periodic runs conserve the totals") {
    const GammaModel g{};
    for (auto s : {SolverKind::gks_s2o4, SolverKind::lf_ssprk3}) {
        const Mesh2D m{12, 12, -1.0, -1.0, 2.0 / 12, 2.0 / 12};
        const auto w = init_sine_2d(m, g);
        Solver2D solver(Scheme2D(m, options(s, ReconMode::hybrid), BoundarySpec2D::all(BoundaryKind::periodic)), w);
        const auto before = totals(w);
        REQUIRE_FALSE(solver.run({0.5, 0.0, 0.0, 10}).failed);
        const auto after = totals(solver.field());
        for (std::size_t k = 0; k < 4; ++k)
            CHECK(std::abs(after[k] - before[k]) <= 1e-12 * std::max(1.0, std::abs(before[k])));
    }
}

TEST_CASE("mirror-symmetric data stays symmetric") {
    const GammaModel g{};
    for (auto s : {SolverKind::gks_s2o4, SolverKind::lf_ssprk3}) {
        for (auto m : {ReconMode::weno_ao, ReconMode::hybrid}) {
            const Mesh1D mesh{40, 0.0, 1.0 / 40};
            Solver1D solver(Scheme1D(mesh, options(s, m), {}), init_123(mesh, p0_for_mach_123(1.5, g), g));
            REQUIRE_FALSE(solver.run({0.5, 0.0, 0.0, 20}).failed);
            const auto& f = solver.field();
            for (int i = 0; i < 20; ++i) {
                const auto& a = f(i);
                const auto& b = f(39 - i);
                CHECK(a[0] == Approx(b[0]).epsilon(1e-12));
                CHECK(a[1] == Approx(-b[1]).margin(1e-12));
                CHECK(a[3] == Approx(b[3]).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("initial DF comes from the cell-average jumps") {
    const GammaModel g{};
    const Mesh1D mesh{6, 0.0, 1.0};
    Field1D w(mesh);
    for (int i = 0; i < 6; ++i) w(i) = primitive_to_conserved({1.0, 0.0, 0.0, i < 3 ? 2.0 : 1.0}, g);
    Scheme1D scheme(mesh, SchemeOptions{}, {});
    const auto a = scheme.initial_df(w);
    CHECK(a(0) == 1.0);
    CHECK(a(2) == Approx(1.0 / 3.25).epsilon(1e-14));
    CHECK(a(3) == Approx(1.0 / 3.25).epsilon(1e-14));
    CHECK(a(5) == 1.0);
}

TEST_CASE("a blown-up step is reported with its location") {
    const GammaModel g{};
    const Mesh1D mesh{40, 0.0, 1.0 / 40};
    Solver1D solver(Scheme1D(mesh, options(SolverKind::lf_ssprk3, ReconMode::weno_ao), {}), init_123(mesh, 0.4, g));
    const auto before = solver.field();
    const auto rep = solver.step(1.0);
    REQUIRE(rep.failed);
    CHECK(rep.stage >= 0);
    CHECK(rep.stage <= 2);
    CHECK(rep.i >= 0);
    CHECK(rep.i < 40);
    CHECK_FALSE(rep.variable.empty());
    CHECK(solver.steps() == 0);
    CHECK(solver.field()(5) == before(5));
}

TEST_CASE("zero threshold hybrid runs bit-identically to WENO-AO") {
    const GammaModel g{};
    const Mesh1D mesh{60, 0.0, 1.0 / 60};
    for (auto s : {SolverKind::gks_s2o4, SolverKind::lf_ssprk3}) {
        auto o = options(s, ReconMode::hybrid);
        o.recon.alpha_thres = 0.0;
        Solver1D a(Scheme1D(mesh, o, {}), init_123(mesh, p0_for_mach_123(1.5, g), g));
        Solver1D b(Scheme1D(mesh, options(s, ReconMode::weno_ao), {}), init_123(mesh, p0_for_mach_123(1.5, g), g));
        REQUIRE_FALSE(a.run({0.5, 0.0, 0.0, 30}).failed);
        REQUIRE_FALSE(b.run({0.5, 0.0, 0.0, 30}).failed);
        for (int i = 0; i < 60; ++i) CHECK(a.field()(i) == b.field()(i));
    }
}
