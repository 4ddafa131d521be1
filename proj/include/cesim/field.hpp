// Cell-centered scalar fields with one ghost ring, face-centered (MAC)
// vector fields, and the ghost-cell boundary closures.
//
// Ghost values are meaningful only after an explicit fill; each field carries
// a tag saying which closure last filled it. Stencil operators that read
// ghosts check the tag and throw InvariantError when it is GhostFill::None.
//
// Closures are per boundary face maps  ghost = a*inner + b.  Corner ghost
// cells are filled by averaging the two adjacent edge closures.
#pragma once

#include "cesim/errors.hpp"
#include "cesim/grid.hpp"

#include <Eigen/Core>

#include <cmath>
#include <string>

namespace cesim {

enum class GhostFill { None, Neumann, Robin, DirichletZero, ChemotacticNoFlux };

template <class Scalar>
class Field2 {
public:
    using Storage = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    explicit Field2(const Grid& grid)
        : grid_(&grid), data_(Storage::Zero(grid.nx() + 2, grid.ny() + 2)) {}

    const Grid& grid() const { return *grid_; }

    // i in [-1, nx], j in [-1, ny]; -1 and nx/ny address the ghost ring.
    Scalar operator()(int i, int j) const { return data_(i + 1, j + 1); }
    Scalar& at(int i, int j) { return data_(i + 1, j + 1); }

    auto interior() { return data_.block(1, 1, grid_->nx(), grid_->ny()); }
    auto interior() const { return data_.block(1, 1, grid_->nx(), grid_->ny()); }

    Storage& raw() { return data_; }
    const Storage& raw() const { return data_; }

    GhostFill ghost_state() const { return ghosts_; }
    void set_ghost_state(GhostFill g) { ghosts_ = g; }

    /// Set interior values from a callable (x, y) -> Scalar; ghosts invalidated.
    template <class F>
    void sample(F&& fn) {
        for (int j = 0; j < grid_->ny(); ++j)
            for (int i = 0; i < grid_->nx(); ++i)
                at(i, j) = fn(grid_->xc(i), grid_->yc(j));
        ghosts_ = GhostFill::None;
    }

    Scalar max_interior() const { return interior().maxCoeff(); }
    Scalar min_interior() const { return interior().minCoeff(); }
    bool interior_finite() const { return interior().isFinite().all(); }

    void require_same_grid(const Grid& g, const char* what) const {
        if (!grid_->same_shape(g))
            throw InvariantError(std::string(what) + ": field/grid shape mismatch");
    }

private:
    const Grid* grid_;
    Storage data_;
    GhostFill ghosts_ = GhostFill::None;
};

/// Face-centered vector field on the MAC layout: u holds x-normal face values
/// ((nx+1) x ny), v holds y-normal face values (nx x (ny+1)).
template <class Scalar>
struct FaceField2 {
    using Storage = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    explicit FaceField2(const Grid& grid)
        : grid_(&grid),
          u(Storage::Zero(grid.nx() + 1, grid.ny())),
          v(Storage::Zero(grid.nx(), grid.ny() + 1)) {}

    const Grid& grid() const { return *grid_; }

    Scalar max_abs() const {
        Scalar mu = u.size() ? u.abs().maxCoeff() : Scalar(0);
        Scalar mv = v.size() ? v.abs().maxCoeff() : Scalar(0);
        return mu > mv ? mu : mv;
    }

    const Grid* grid_;
    Storage u, v;
};

using ScalarField = Field2<double>;
using FaceField = FaceField2<double>;

namespace detail {

// Applies ghost = a*inner + b on every edge ghost cell, then fills the four
// corner ghosts with the mean of the two adjacent edge closures. a and b are
// indexed like Grid::boundary_faces().
template <class Scalar>
void apply_edge_closures(Field2<Scalar>& f, const Eigen::ArrayXd& a, const Eigen::ArrayXd& b) {
    const Grid& g = f.grid();
    const int nx = g.nx(), ny = g.ny();
    const int W = 0, E = ny, S = 2 * ny, N = 2 * ny + nx;

    for (int j = 0; j < ny; ++j) {
        f.at(-1, j) = a[W + j] * f(0, j) + b[W + j];
        f.at(nx, j) = a[E + j] * f(nx - 1, j) + b[E + j];
    }
    for (int i = 0; i < nx; ++i) {
        f.at(i, -1) = a[S + i] * f(i, 0) + b[S + i];
        f.at(i, ny) = a[N + i] * f(i, ny - 1) + b[N + i];
    }
    // Corners: each edge closure extended through the already-filled edge
    // ghosts of the other side, then averaged.
    f.at(-1, -1) = 0.5 * ((a[W] * f(0, -1) + b[W]) + (a[S] * f(-1, 0) + b[S]));
    f.at(nx, -1) = 0.5 * ((a[E] * f(nx - 1, -1) + b[E]) + (a[S + nx - 1] * f(nx, 0) + b[S + nx - 1]));
    f.at(-1, ny) = 0.5 * ((a[W + ny - 1] * f(0, ny) + b[W + ny - 1]) + (a[N] * f(-1, ny - 1) + b[N]));
    f.at(nx, ny) = 0.5 * ((a[E + ny - 1] * f(nx - 1, ny) + b[E + ny - 1]) +
                          (a[N + nx - 1] * f(nx, ny - 1) + b[N + nx - 1]));
}

} // namespace detail

/// Homogeneous-Neumann reflection: ghost = inner (kappa = 0 limit of Robin).
template <class Scalar>
void fill_ghost_neumann_inplace(Field2<Scalar>& f) {
    const int m = f.grid().boundary_face_count();
    detail::apply_edge_closures(f, Eigen::ArrayXd::Ones(m), Eigen::ArrayXd::Zero(m));
    f.set_ghost_state(GhostFill::Neumann);
}

/// Zero face value: ghost = -inner. Used by the streamfunction (psi = 0 on the
/// boundary).
template <class Scalar>
void fill_ghost_dirichlet_zero_inplace(Field2<Scalar>& f) {
    const int m = f.grid().boundary_face_count();
    detail::apply_edge_closures(f, Eigen::ArrayXd::Constant(m, -1.0), Eigen::ArrayXd::Zero(m));
    f.set_ghost_state(GhostFill::DirichletZero);
}

/// Robin closure (c_g - c_i)/h = kappa*(gamma - (c_g + c_i)/2), i.e.
/// c_g = [c_i*(1/h - kappa/2) + kappa*gamma] / (1/h + kappa/2).
template <class Scalar>
void fill_ghost_robin_inplace(Field2<Scalar>& f, const BoundarySpec& bs) {
    const Grid& g = f.grid();
    bs.validate();
    const int m = g.boundary_face_count();
    if (bs.kappa.size() != m || bs.gamma.size() != m)
        throw InvariantError("fill_ghost_robin: BoundarySpec size does not match grid");
    Eigen::ArrayXd a(m), b(m);
    for (int k = 0; k < m; ++k) {
        const double h = g.boundary_faces()[k].h_perp;
        const double denom = 1.0 / h + 0.5 * bs.kappa[k];
        a[k] = (1.0 / h - 0.5 * bs.kappa[k]) / denom;
        b[k] = bs.kappa[k] * bs.gamma[k] / denom;
    }
    detail::apply_edge_closures(f, a, b);
    f.set_ghost_state(GhostFill::Robin);
}

/// Chemotactic-no-flux closure for n, driven by an already Robin-filled c:
/// with g = (c_g - c_i)/h the discrete normal oxygen gradient,
/// n_g = n_i * (1/h + g/2) / (1/h - g/2),
/// so the diffusive and chemotactic fluxes through the face cancel exactly.
template <class Scalar>
void fill_ghost_chemotactic_noflux_inplace(Field2<Scalar>& n, const Field2<Scalar>& c) {
    const Grid& g = n.grid();
    n.require_same_grid(c.grid(), "fill_ghost_chemotactic_noflux");
    if (c.ghost_state() != GhostFill::Robin)
        throw InvariantError("fill_ghost_chemotactic_noflux: c must carry Robin-filled ghosts");
    const int m = g.boundary_face_count();
    Eigen::ArrayXd a(m), b = Eigen::ArrayXd::Zero(m);
    for (int k = 0; k < m; ++k) {
        const auto& bf = g.boundary_faces()[k];
        const double h = bf.h_perp;
        double cg = 0.0;
        switch (bf.side) {
            case Side::West: cg = c(-1, bf.j); break;
            case Side::East: cg = c(g.nx(), bf.j); break;
            case Side::South: cg = c(bf.i, -1); break;
            case Side::North: cg = c(bf.i, g.ny()); break;
        }
        const double grad_nu = (cg - c(bf.i, bf.j)) / h;
        const double denom = 1.0 / h - 0.5 * grad_nu;
        if (denom <= 0.0)
            throw InvariantError(
                "fill_ghost_chemotactic_noflux: closure denominator 1/h - (grad c . nu)/2 "
                "is nonpositive; refine the mesh (boundary oxygen gradient too steep for h)");
        a[k] = (1.0 / h + 0.5 * grad_nu) / denom;
    }
    detail::apply_edge_closures(n, a, b);
    n.set_ghost_state(GhostFill::ChemotacticNoFlux);
}

// Pure variants returning a filled copy.
template <class Scalar>
Field2<Scalar> fill_ghost_robin(Field2<Scalar> f, const BoundarySpec& bs) {
    fill_ghost_robin_inplace(f, bs);
    return f;
}

template <class Scalar>
Field2<Scalar> fill_ghost_chemotactic_noflux(Field2<Scalar> n, const Field2<Scalar>& c) {
    fill_ghost_chemotactic_noflux_inplace(n, c);
    return n;
}

template <class Scalar>
Field2<Scalar> fill_ghost_neumann(Field2<Scalar> f) {
    fill_ghost_neumann_inplace(f);
    return f;
}

template <class Scalar>
Field2<Scalar> fill_ghost_dirichlet_zero(Field2<Scalar> f) {
    fill_ghost_dirichlet_zero_inplace(f);
    return f;
}

} // namespace cesim
