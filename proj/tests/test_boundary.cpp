#include <catch_amalgamated.hpp>

#include "hfv/boundary.hpp"

using namespace hfv;

TEST_CASE("periodic ghosts wrap around") {
    const Mesh1D m{6, 0.0, 1.0};
    CellArray1D<double> f(m, -1.0);
    for (int i = 0; i < 6; ++i) f(i) = i;
    apply_boundary(f, {BoundaryKind::periodic, BoundaryKind::periodic});
    CHECK(f(-1) == 5.0);
    CHECK(f(-3) == 3.0);
    CHECK(f(6) == 0.0);
    CHECK(f(8) == 2.0);
}

TEST_CASE("free ghosts copy the nearest interior cell") {
    const Mesh1D m{4, 0.0, 1.0};
    CellArray1D<double> f(m, -1.0);
    for (int i = 0; i < 4; ++i) f(i) = 10.0 + i;
    apply_boundary(f, {BoundaryKind::free, BoundaryKind::non_reflecting});
    for (int g = 1; g <= kGhost; ++g) {
        CHECK(f(-g) == 10.0);
        CHECK(f(3 + g) == 13.0);
    }
}

TEST_CASE("two-dimensional fill covers the corners") {
    const Mesh2D m{3, 4, 0.0, 0.0, 1.0, 1.0};
    CellArray2D<double> f(m, -1.0);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 3; ++i) f(i, j) = 10.0 * j + i;
    SECTION("periodic") {
        apply_boundary(f, BoundarySpec2D::all(BoundaryKind::periodic));
        CHECK(f(-1, 0) == 2.0);
        CHECK(f(3, 2) == 20.0);
        CHECK(f(1, -1) == 31.0);
        CHECK(f(1, 4) == 1.0);
        CHECK(f(-1, -1) == 32.0);
        CHECK(f(3, 4) == 0.0);
    }
    SECTION("free") {
        apply_boundary(f, BoundarySpec2D::all(BoundaryKind::free));
        CHECK(f(-2, 1) == 10.0);
        CHECK(f(5, 1) == 12.0);
        CHECK(f(-3, -3) == 0.0);
        CHECK(f(5, 6) == 32.0);
    }
    SECTION("mixed") {
        apply_boundary(f, {BoundaryKind::periodic, BoundaryKind::periodic, BoundaryKind::free, BoundaryKind::free});
        CHECK(f(-1, -2) == 2.0);
        CHECK(f(3, 5) == 30.0);
    }
}
