#include <catch_amalgamated.hpp>

#include "hfv/config.hpp"

using namespace hfv;

TEST_CASE("parse a config with comments and spaces") {
    const auto c = parse_config(
        "# run\n"
        "case = 123\n"
        "solver = lf_ssprk3   # flux\n"
        "recon=van_leer\n"
        "\n"
        "nx = 200\n"
        "cfl = 0.4\n"
        "p0 = 0.01\n"
        "format = csv,vtk\n");
    CHECK(c.case_id == CaseId::problem123);
    CHECK(c.solver == SolverKind::lf_ssprk3);
    CHECK(c.recon == ReconMode::van_leer);
    CHECK(c.nx == 200);
    CHECK(c.cfl == 0.4);
    CHECK(c.params.p0 == 0.01);
    CHECK(c.format == OutputFormat::both);
    CHECK(c.resolved_t_end() == 0.14);
}

TEST_CASE("to_text round-trips every key") {
    RunConfig c;
    c.case_id = CaseId::hurricane;
    c.solver = SolverKind::lf_ssprk3;
    c.recon = ReconMode::weno_ao;
    c.nx = 123;
    c.ny = 45;
    c.cfl = 0.1 + 0.2;
    c.dt = 1e-3 / 3.0;
    c.dt_dx = 0.25;
    c.t_end = 1.0 / 7.0;
    c.max_steps = 77;
    c.alpha_thres = 0.3;
    c.d_h = 0.8;
    c.d_l = 0.7;
    c.gamma = 5.0 / 3.0;
    c.gks_c1 = 0.02;
    c.gks_c2 = 4.0;
    c.params = {0.1, 12.5, 0.33};
    c.out_dir = "some/dir";
    c.format = OutputFormat::vtk;
    c.snapshot_every = 10;
    const auto d = parse_config(to_text(c));
    CHECK(to_text(d) == to_text(c));
    CHECK(d.cfl == c.cfl);
    CHECK(d.dt == c.dt);
    CHECK(d.t_end == c.t_end);
    CHECK(d.gamma == c.gamma);
    CHECK(d.params.v0 == 12.5);
    CHECK(d.out_dir == "some/dir");
}

TEST_CASE("bad input is rejected") {
    CHECK_THROWS_AS(parse_config("bogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("nx = ten\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("cfl = 0.5x\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("solver = roe\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("case = nowhere\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("just a line\n"), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/path.cfg"), ConfigError);
}

TEST_CASE("case defaults resolve") {
    RunConfig c;
    c.case_id = CaseId::sine2d;
    CHECK(c.resolved_nx() == 40);
    CHECK(c.resolved_ny() == 40);
    c.nx = 10;
    CHECK(c.resolved_ny() == 10);
    c.case_id = CaseId::hurricane;
    CHECK(c.resolved_max_steps() == 50);
    const auto o = c.scheme_options();
    CHECK(o.recon.alpha_thres == 0.5);
    CHECK(o.gks.c1 == 0.01);
    CHECK(o.gks.c2 == 5.0);
}
