#pragma once

// Uniform structured meshes and cell-average containers with a 3-layer halo.

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hfv/state.hpp"

namespace hfv {

inline constexpr int kGhost = 3;

struct Mesh1D {
    int nx = 0;
    double x0 = 0.0;
    double dx = 1.0;

    [[nodiscard]] double xc(int i) const { return x0 + (i + 0.5) * dx; }
    [[nodiscard]] double xf(int i) const { return x0 + i * dx; }
};

struct Mesh2D {
    int nx = 0;
    int ny = 0;
    double x0 = 0.0;
    double y0 = 0.0;
    double dx = 1.0;
    double dy = 1.0;

    [[nodiscard]] double xc(int i) const { return x0 + (i + 0.5) * dx; }
    [[nodiscard]] double yc(int j) const { return y0 + (j + 0.5) * dy; }
    [[nodiscard]] double xf(int i) const { return x0 + i * dx; }
    [[nodiscard]] double yf(int j) const { return y0 + j * dy; }
};

inline void validate(const Mesh1D& m) {
    if (m.nx < 1 || !(m.dx > 0.0)) throw std::invalid_argument("Mesh1D: need nx >= 1 and dx > 0");
}

inline void validate(const Mesh2D& m) {
    if (m.nx < 1 || m.ny < 1 || !(m.dx > 0.0) || !(m.dy > 0.0))
        throw std::invalid_argument("Mesh2D: need nx, ny >= 1 and dx, dy > 0");
}

/// Generic per-cell array over a 1-D mesh plus halo. Index i runs from -kGhost
/// to nx + kGhost - 1; interior cells are 0..nx-1.
template <class T>
class CellArray1D {
public:
    CellArray1D() = default;
    explicit CellArray1D(const Mesh1D& mesh, T init = T{})
        : mesh_(mesh), data_(static_cast<std::size_t>(mesh.nx + 2 * kGhost), init) {}

    [[nodiscard]] const Mesh1D& mesh() const { return mesh_; }
    [[nodiscard]] int nx() const { return mesh_.nx; }

    T& operator()(int i) {
        assert(i >= -kGhost && i < mesh_.nx + kGhost);
        return data_[static_cast<std::size_t>(i + kGhost)];
    }
    const T& operator()(int i) const {
        assert(i >= -kGhost && i < mesh_.nx + kGhost);
        return data_[static_cast<std::size_t>(i + kGhost)];
    }

    [[nodiscard]] std::vector<T>& raw() { return data_; }
    [[nodiscard]] const std::vector<T>& raw() const { return data_; }

private:
    Mesh1D mesh_{};
    std::vector<T> data_;
};

/// Per-cell array over a 2-D mesh plus halo, x-fastest storage.
template <class T>
class CellArray2D {
public:
    CellArray2D() = default;
    explicit CellArray2D(const Mesh2D& mesh, T init = T{})
        : mesh_(mesh),
          stride_(mesh.nx + 2 * kGhost),
          data_(static_cast<std::size_t>((mesh.nx + 2 * kGhost) * (mesh.ny + 2 * kGhost)), init) {}

    [[nodiscard]] const Mesh2D& mesh() const { return mesh_; }
    [[nodiscard]] int nx() const { return mesh_.nx; }
    [[nodiscard]] int ny() const { return mesh_.ny; }

    T& operator()(int i, int j) {
        assert(i >= -kGhost && i < mesh_.nx + kGhost && j >= -kGhost && j < mesh_.ny + kGhost);
        return data_[index(i, j)];
    }
    const T& operator()(int i, int j) const {
        assert(i >= -kGhost && i < mesh_.nx + kGhost && j >= -kGhost && j < mesh_.ny + kGhost);
        return data_[index(i, j)];
    }

    [[nodiscard]] std::vector<T>& raw() { return data_; }
    [[nodiscard]] const std::vector<T>& raw() const { return data_; }

private:
    [[nodiscard]] std::size_t index(int i, int j) const {
        return static_cast<std::size_t>((j + kGhost) * stride_ + (i + kGhost));
    }

    Mesh2D mesh_{};
    int stride_ = 0;
    std::vector<T> data_;
};

/// Element-wise arithmetic over the whole storage (halo included), so the
/// time integrators can treat fields as plain vectors.
template <class A>
concept CellArray = requires(A a) {
    a.raw();
    a.mesh();
};

template <CellArray A>
A operator+(A a, const A& b) {
    auto& x = a.raw();
    const auto& y = b.raw();
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
    return a;
}

template <CellArray A>
A operator-(A a, const A& b) {
    auto& x = a.raw();
    const auto& y = b.raw();
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= y[k];
    return a;
}

template <CellArray A>
A operator*(double s, A a) {
    for (auto& x : a.raw()) x = s * x;
    return a;
}

using Field1D = CellArray1D<ConservedState>;
using Field2D = CellArray2D<ConservedState>;

/// Discontinuity-feedback factor per cell, alpha in (0, 1].
using DfField1D = CellArray1D<double>;
using DfField2D = CellArray2D<double>;

}  // namespace hfv
