#pragma once

// Ghost-layer fill for the three boundary kinds used by the test cases.

#include "hfv/mesh.hpp"

namespace hfv {

// non_reflecting is realised as zero-gradient, same as free.
enum class BoundaryKind { periodic, free, non_reflecting };

struct BoundarySpec1D {
    BoundaryKind lo = BoundaryKind::free;
    BoundaryKind hi = BoundaryKind::free;
};

struct BoundarySpec2D {
    BoundaryKind x_lo = BoundaryKind::free;
    BoundaryKind x_hi = BoundaryKind::free;
    BoundaryKind y_lo = BoundaryKind::free;
    BoundaryKind y_hi = BoundaryKind::free;

    static constexpr BoundarySpec2D all(BoundaryKind k) { return {k, k, k, k}; }
};

namespace detail {

// Source index for ghost cell `g` (g < 0 or g >= n) along an axis of n cells.
constexpr int ghost_source(int g, int n, BoundaryKind lo, BoundaryKind hi) {
    if (g < 0) return lo == BoundaryKind::periodic ? g + n : 0;
    return hi == BoundaryKind::periodic ? g - n : n - 1;
}

}  // namespace detail

template <class T>
void apply_boundary(CellArray1D<T>& f, const BoundarySpec1D& bc) {
    const int n = f.nx();
    for (int g = 1; g <= kGhost; ++g) {
        f(-g) = f(detail::ghost_source(-g, n, bc.lo, bc.hi));
        f(n - 1 + g) = f(detail::ghost_source(n - 1 + g, n, bc.lo, bc.hi));
    }
}

/// x ghosts on interior rows first, then full y ghost rows (corners included).
template <class T>
void apply_boundary(CellArray2D<T>& f, const BoundarySpec2D& bc) {
    const int nx = f.nx();
    const int ny = f.ny();
    for (int j = 0; j < ny; ++j) {
        for (int g = 1; g <= kGhost; ++g) {
            f(-g, j) = f(detail::ghost_source(-g, nx, bc.x_lo, bc.x_hi), j);
            f(nx - 1 + g, j) = f(detail::ghost_source(nx - 1 + g, nx, bc.x_lo, bc.x_hi), j);
        }
    }
    for (int g = 1; g <= kGhost; ++g) {
        const int lo_src = detail::ghost_source(-g, ny, bc.y_lo, bc.y_hi);
        const int hi_src = detail::ghost_source(ny - 1 + g, ny, bc.y_lo, bc.y_hi);
        for (int i = -kGhost; i < nx + kGhost; ++i) {
            f(i, -g) = f(i, lo_src);
            f(i, ny - 1 + g) = f(i, hi_src);
        }
    }
}

}  // namespace hfv
