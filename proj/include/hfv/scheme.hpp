#pragma once

// Spatial operators: boundary fill, hybrid reconstruction at every interface
// Gauss point, flux evaluation and the flux divergence, plus the
// discontinuity-feedback bookkeeping. One class per dimension with the same
// surface so the run loop in solver.hpp is written once.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hfv/boundary.hpp"
#include "hfv/df.hpp"
#include "hfv/gks_flux.hpp"
#include "hfv/lf_flux.hpp"
#include "hfv/mesh.hpp"
#include "hfv/recon.hpp"
#include "hfv/timestep.hpp"

namespace hfv {

enum class SolverKind { gks_s2o4, lf_ssprk3 };

struct SchemeOptions {
    SolverKind solver = SolverKind::gks_s2o4;
    ReconConfig recon{};
    GammaModel gamma{};
    GksParams gks{};
};

struct CellFailure {
    int i = 0;
    int j = 0;
    std::string variable;
};

/// First invalid interior cell in index order, if any.
[[nodiscard]] inline std::optional<CellFailure> find_invalid_cell(const Field1D& f, const GammaModel& g) {
    for (int i = 0; i < f.nx(); ++i) {
        auto v = invalid_variable(f(i), g);
        if (!v.empty()) return CellFailure{i, 0, std::move(v)};
    }
    return std::nullopt;
}

[[nodiscard]] inline std::optional<CellFailure> find_invalid_cell(const Field2D& f, const GammaModel& g) {
    for (int j = 0; j < f.ny(); ++j) {
        for (int i = 0; i < f.nx(); ++i) {
            auto v = invalid_variable(f(i, j), g);
            if (!v.empty()) return CellFailure{i, j, std::move(v)};
        }
    }
    return std::nullopt;
}

namespace detail {

// Flux and (GKS only) its time derivative at one Gauss point in the local
// frame. Returns false when a reconstructed state is non-physical.
inline bool gauss_point_flux(const GaussPointRecon& r, const SchemeOptions& opt, double dt, Vec4& f, Vec4& df) {
    if (opt.solver == SolverKind::lf_ssprk3) {
        const auto res = lf_flux(r.wl, r.wr, opt.gamma);
        f = res.flux;
        df = Vec4{};
        return res.physical && is_finite(f);
    }
    const auto res = gks_flux(r, dt, opt.gks, opt.gamma);
    f = res.flux;
    df = res.flux_rate;
    return res.physical;
}

}  // namespace detail

class Scheme1D {
public:
    using Field = Field1D;
    using Df = DfField1D;
    using Boundary = BoundarySpec1D;

    Scheme1D(const Mesh1D& mesh, SchemeOptions opt, BoundarySpec1D bc)
        : mesh_(mesh), opt_(opt), bc_(bc), work_(mesh), recorded_(mesh, 1.0) {
        validate(mesh);
    }

    [[nodiscard]] const SchemeOptions& options() const { return opt_; }
    [[nodiscard]] const Boundary& boundary() const { return bc_; }
    [[nodiscard]] const Mesh1D& mesh() const { return mesh_; }

    /// Cell DF from the jumps of the cell averages across each face.
    [[nodiscard]] Df initial_df(const Field& w_in) {
        work_ = w_in;
        apply_boundary(work_, bc_);
        Df a(mesh_, 1.0);
        std::vector<double> face(static_cast<std::size_t>(mesh_.nx + 1));
        for (int i = -1; i < mesh_.nx; ++i)
            face[static_cast<std::size_t>(i + 1)] = df_gauss_point(work_(i), work_(i + 1), kNormalX, opt_.gamma).alpha;
        for (int i = 0; i < mesh_.nx; ++i)
            a(i) = face[static_cast<std::size_t>(i)] * face[static_cast<std::size_t>(i + 1)];
        apply_boundary(a, bc_);
        return a;
    }

    /// DF recorded during the last evaluation with record_df set.
    [[nodiscard]] const Df& recorded_df() const { return recorded_; }
    [[nodiscard]] const std::optional<CellFailure>& failure() const { return failure_; }

    /// Flux divergence (and its time derivatives for GKS) of `w_in`.
    [[nodiscard]] std::optional<TimeDerivatives<Field>> evaluate(const Field& w_in, const Df& alpha_in, double dt,
                                                                 bool record_df) {
        failure_.reset();
        work_ = w_in;
        apply_boundary(work_, bc_);
        alpha_ = alpha_in;
        apply_boundary(alpha_, bc_);

        const int nx = mesh_.nx;
        const bool gks = opt_.solver == SolverKind::gks_s2o4;
        const std::size_t nf = static_cast<std::size_t>(nx + 1);
        flux_.assign(nf, Vec4{});
        rate_.assign(nf, Vec4{});
        face_df_.assign(nf, 1.0);

        for (int i = -1; i < nx; ++i) {
            const std::array<ConservedState, 6> s{work_(i - 2), work_(i - 1), work_(i),
                                                  work_(i + 1), work_(i + 2), work_(i + 3)};
            const std::array<double, 4> a{alpha_(i - 1), alpha_(i), alpha_(i + 1), alpha_(i + 2)};
            const auto line = reconstruct_interface_line(s, a, kNormalX, mesh_.dx, opt_.recon, opt_.gamma);
            const GaussPointRecon r{line.left.value, line.left.deriv, Vec4{},
                                    line.right.value, line.right.deriv, Vec4{}};
            const auto k = static_cast<std::size_t>(i + 1);
            if (!detail::gauss_point_flux(r, opt_, dt, flux_[k], rate_[k])) {
                failure_ = CellFailure{i < 0 ? 0 : i, 0, "interface"};
                return std::nullopt;
            }
            if (gks) {
                const auto ind = density_indicators(s);
                limited_.resize(nf);
                limited_[k] = time_limiter_weight(ind.left, ind.right) * rate_[k];
            }
            if (record_df) face_df_[k] = df_gauss_point(line.left.value, line.right.value, kNormalX, opt_.gamma).alpha;
        }

        TimeDerivatives<Field> out{Field(mesh_), Field(mesh_), Field(mesh_)};
        const double inv = 1.0 / mesh_.dx;
        for (int i = 0; i < nx; ++i) {
            const auto k = static_cast<std::size_t>(i);
            out.l(i) = -inv * (flux_[k + 1] - flux_[k]);
            if (gks) {
                out.dl(i) = -inv * (rate_[k + 1] - rate_[k]);
                out.dl_limited(i) = -inv * (limited_[k + 1] - limited_[k]);
            }
        }
        if (record_df) {
            for (int i = 0; i < nx; ++i)
                recorded_(i) = face_df_[static_cast<std::size_t>(i)] * face_df_[static_cast<std::size_t>(i + 1)];
            apply_boundary(recorded_, bc_);
        }
        return out;
    }

    /// Interface fluxes from the last evaluation; index i+1 holds face i+1/2.
    [[nodiscard]] const std::vector<Vec4>& last_fluxes() const { return flux_; }

private:
    Mesh1D mesh_;
    SchemeOptions opt_;
    BoundarySpec1D bc_;
    Field work_;
    Df alpha_;
    Df recorded_;
    std::vector<Vec4> flux_, rate_, limited_;
    std::vector<double> face_df_;
    std::optional<CellFailure> failure_;
};

class Scheme2D {
public:
    using Field = Field2D;
    using Df = DfField2D;
    using Boundary = BoundarySpec2D;

    Scheme2D(const Mesh2D& mesh, SchemeOptions opt, BoundarySpec2D bc)
        : mesh_(mesh), opt_(opt), bc_(bc), work_(mesh), recorded_(mesh, 1.0) {
        validate(mesh);
    }

    [[nodiscard]] const SchemeOptions& options() const { return opt_; }
    [[nodiscard]] const Boundary& boundary() const { return bc_; }
    [[nodiscard]] const Mesh2D& mesh() const { return mesh_; }

    /// Cell DF from cell-average jumps; each face counts once per Gauss point.
    [[nodiscard]] Df initial_df(const Field& w_in) {
        work_ = w_in;
        apply_boundary(work_, bc_);
        const int nx = mesh_.nx;
        const int ny = mesh_.ny;
        Df a(mesh_, 1.0);
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                double prod = 1.0;
                const auto face = [&](const ConservedState& l, const ConservedState& r, const Normal& n) {
                    const double f = df_gauss_point(l, r, n, opt_.gamma).alpha;
                    prod *= f * f;
                };
                face(work_(i - 1, j), work_(i, j), kNormalX);
                face(work_(i, j), work_(i + 1, j), kNormalX);
                face(work_(i, j - 1), work_(i, j), kNormalY);
                face(work_(i, j), work_(i, j + 1), kNormalY);
                a(i, j) = prod;
            }
        }
        apply_boundary(a, bc_);
        return a;
    }

    [[nodiscard]] const Df& recorded_df() const { return recorded_; }
    [[nodiscard]] const std::optional<CellFailure>& failure() const { return failure_; }

    [[nodiscard]] std::optional<TimeDerivatives<Field>> evaluate(const Field& w_in, const Df& alpha_in, double dt,
                                                                 bool record_df) {
        failure_.reset();
        work_ = w_in;
        apply_boundary(work_, bc_);
        alpha_ = alpha_in;
        apply_boundary(alpha_, bc_);

        const int nx = mesh_.nx;
        const int ny = mesh_.ny;
        const bool gks = opt_.solver == SolverKind::gks_s2o4;
        const auto& W = work_;
        const auto& A = alpha_;

        // x-normal interfaces: face (i+1/2, j) stored at fx(i+1, j).
        const int sx = nx + 1;
        fx_.assign(static_cast<std::size_t>(sx * ny), Vec4{});
        rx_.assign(fx_.size(), Vec4{});
        lx_.assign(fx_.size(), Vec4{});
        dfx_.assign(fx_.size(), 1.0);
        lines_.resize(static_cast<std::size_t>(sx * (ny + 4)));
        for (int j = -2; j < ny + 2; ++j) {
            for (int i = -1; i < nx; ++i) {
                const std::array<ConservedState, 6> s{W(i - 2, j), W(i - 1, j), W(i, j),
                                                      W(i + 1, j), W(i + 2, j), W(i + 3, j)};
                const std::array<double, 4> a{A(i - 1, j), A(i, j), A(i + 1, j), A(i + 2, j)};
                lines_[static_cast<std::size_t>((j + 2) * sx + i + 1)] =
                    reconstruct_interface_line(s, a, kNormalX, mesh_.dx, opt_.recon, opt_.gamma);
                if (gks && j >= 0 && j < ny) {
                    const auto ind = density_indicators(s);
                    omega_x(i, j) = time_limiter_weight(ind.left, ind.right);
                }
            }
        }
        for (int j = 0; j < ny; ++j) {
            for (int i = -1; i < nx; ++i) {
                const auto line = [&](int jj) -> const LineRecon& {
                    return lines_[static_cast<std::size_t>((jj + 2) * sx + i + 1)];
                };
                const std::array<Vec4, 5> lv{line(j - 2).left.value, line(j - 1).left.value, line(j).left.value,
                                             line(j + 1).left.value, line(j + 2).left.value};
                const std::array<Vec4, 5> rv{line(j - 2).right.value, line(j - 1).right.value, line(j).right.value,
                                             line(j + 1).right.value, line(j + 2).right.value};
                const auto basis = tangential_basis(W(i, j), W(i + 1, j), kNormalY);
                const auto gl = reconstruct_gauss_points(lv, line(j).left.deriv,
                                                         {A(i, j - 1), A(i, j), A(i, j + 1)}, basis, mesh_.dy,
                                                         opt_.recon);
                const auto gr = reconstruct_gauss_points(rv, line(j).right.deriv,
                                                         {A(i + 1, j - 1), A(i + 1, j), A(i + 1, j + 1)}, basis,
                                                         mesh_.dy, opt_.recon);
                const auto k = static_cast<std::size_t>(j * sx + i + 1);
                Vec4 f{}, df{};
                double face_df = 1.0;
                for (int m = 0; m < 2; ++m) {
                    const GaussPointRecon r{gl[m].value, gl[m].normal_deriv, gl[m].tangential_deriv,
                                            gr[m].value, gr[m].normal_deriv, gr[m].tangential_deriv};
                    Vec4 fm, dfm;
                    if (!detail::gauss_point_flux(r, opt_, dt, fm, dfm)) {
                        failure_ = CellFailure{i < 0 ? 0 : i, j, "interface"};
                        return std::nullopt;
                    }
                    f += kGaussWeights[m] * fm;
                    df += kGaussWeights[m] * dfm;
                    if (record_df) face_df *= df_gauss_point(gl[m].value, gr[m].value, kNormalX, opt_.gamma).alpha;
                }
                fx_[k] = f;
                rx_[k] = df;
                if (gks) lx_[k] = omega_x(i, j) * df;
                dfx_[k] = face_df;
            }
        }

        // y-normal interfaces: face (i, j+1/2) stored at fy(i, j+1).
        const int sy = nx + 4;  // line storage stride over columns -2..nx+1
        fy_.assign(static_cast<std::size_t>(nx * (ny + 1)), Vec4{});
        ry_.assign(fy_.size(), Vec4{});
        ly_.assign(fy_.size(), Vec4{});
        dfy_.assign(fy_.size(), 1.0);
        lines_.resize(static_cast<std::size_t>(sy * (ny + 1)));
        omega_.resize(std::max(omega_.size(), fy_.size()));
        for (int j = -1; j < ny; ++j) {
            for (int i = -2; i < nx + 2; ++i) {
                const std::array<ConservedState, 6> s{W(i, j - 2), W(i, j - 1), W(i, j),
                                                      W(i, j + 1), W(i, j + 2), W(i, j + 3)};
                const std::array<double, 4> a{A(i, j - 1), A(i, j), A(i, j + 1), A(i, j + 2)};
                lines_[static_cast<std::size_t>((j + 1) * sy + i + 2)] =
                    reconstruct_interface_line(s, a, kNormalY, mesh_.dy, opt_.recon, opt_.gamma);
                if (gks && i >= 0 && i < nx) {
                    const auto ind = density_indicators(s);
                    omega_[static_cast<std::size_t>((j + 1) * nx + i)] = time_limiter_weight(ind.left, ind.right);
                }
            }
        }
        for (int j = -1; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const auto line = [&](int ii) -> const LineRecon& {
                    return lines_[static_cast<std::size_t>((j + 1) * sy + ii + 2)];
                };
                const std::array<Vec4, 5> lv{line(i - 2).left.value, line(i - 1).left.value, line(i).left.value,
                                             line(i + 1).left.value, line(i + 2).left.value};
                const std::array<Vec4, 5> rv{line(i - 2).right.value, line(i - 1).right.value, line(i).right.value,
                                             line(i + 1).right.value, line(i + 2).right.value};
                const auto basis = tangential_basis(W(i, j), W(i, j + 1), kNormalX);
                const auto gl = reconstruct_gauss_points(lv, line(i).left.deriv,
                                                         {A(i - 1, j), A(i, j), A(i + 1, j)}, basis, mesh_.dx,
                                                         opt_.recon);
                const auto gr = reconstruct_gauss_points(rv, line(i).right.deriv,
                                                         {A(i - 1, j + 1), A(i, j + 1), A(i + 1, j + 1)}, basis,
                                                         mesh_.dx, opt_.recon);
                const auto k = static_cast<std::size_t>((j + 1) * nx + i);
                Vec4 f{}, df{};
                double face_df = 1.0;
                for (int m = 0; m < 2; ++m) {
                    // local tangential direction is -x
                    const GaussPointRecon r{rotate_to_local(gl[m].value, kNormalY),
                                            rotate_to_local(gl[m].normal_deriv, kNormalY),
                                            -1.0 * rotate_to_local(gl[m].tangential_deriv, kNormalY),
                                            rotate_to_local(gr[m].value, kNormalY),
                                            rotate_to_local(gr[m].normal_deriv, kNormalY),
                                            -1.0 * rotate_to_local(gr[m].tangential_deriv, kNormalY)};
                    Vec4 fm, dfm;
                    if (!detail::gauss_point_flux(r, opt_, dt, fm, dfm)) {
                        failure_ = CellFailure{i, j < 0 ? 0 : j, "interface"};
                        return std::nullopt;
                    }
                    f += kGaussWeights[m] * rotate_from_local(fm, kNormalY);
                    df += kGaussWeights[m] * rotate_from_local(dfm, kNormalY);
                    if (record_df) face_df *= df_gauss_point(gl[m].value, gr[m].value, kNormalY, opt_.gamma).alpha;
                }
                fy_[k] = f;
                ry_[k] = df;
                if (gks) ly_[k] = omega_[k] * df;
                dfy_[k] = face_df;
            }
        }

        TimeDerivatives<Field> out{Field(mesh_), Field(mesh_), Field(mesh_)};
        const double ix = 1.0 / mesh_.dx;
        const double iy = 1.0 / mesh_.dy;
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const auto xm = static_cast<std::size_t>(j * sx + i);
                const auto ym = static_cast<std::size_t>(j * nx + i);
                const auto yp = ym + static_cast<std::size_t>(nx);
                out.l(i, j) = -ix * (fx_[xm + 1] - fx_[xm]) - iy * (fy_[yp] - fy_[ym]);
                if (gks) {
                    out.dl(i, j) = -ix * (rx_[xm + 1] - rx_[xm]) - iy * (ry_[yp] - ry_[ym]);
                    out.dl_limited(i, j) = -ix * (lx_[xm + 1] - lx_[xm]) - iy * (ly_[yp] - ly_[ym]);
                }
                if (record_df) recorded_(i, j) = dfx_[xm] * dfx_[xm + 1] * dfy_[ym] * dfy_[yp];
            }
        }
        if (record_df) apply_boundary(recorded_, bc_);
        return out;
    }

private:
    // Only the WENO branch of the tangential pass uses the basis.
    [[nodiscard]] CharacteristicBasis tangential_basis(const ConservedState& a, const ConservedState& b,
                                                       const Normal& axis) const {
        if (opt_.recon.mode == ReconMode::van_leer) return {};
        return interface_basis(a, b, axis, opt_.gamma);
    }

    double& omega_x(int i, int j) {
        const auto k = static_cast<std::size_t>(j * (mesh_.nx + 1) + i + 1);
        if (omega_.size() < fx_.size()) omega_.resize(fx_.size());
        return omega_[k];
    }

    Mesh2D mesh_;
    SchemeOptions opt_;
    BoundarySpec2D bc_;
    Field work_;
    Df alpha_;
    Df recorded_;
    std::vector<LineRecon> lines_;
    std::vector<Vec4> fx_, rx_, lx_, fy_, ry_, ly_;
    std::vector<double> dfx_, dfy_, omega_;
    std::optional<CellFailure> failure_;
};

}  // namespace hfv
