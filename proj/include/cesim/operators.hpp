// Discrete calculus on the cell-centered grid: face gradients, face-flux
// divergence, upwind fluxes, cell-centered derivatives, curls, and the
// discrete norms / boundary integrals used by the monitors.
//
// laplacian() is literally divergence_faces(gradient_faces(f)) so the two
// routes agree cell by cell, bit for bit.
#pragma once

#include "cesim/field.hpp"

#include <cmath>
#include <limits>

namespace cesim {

/// Two-point face differences of a ghost-filled cell field. Boundary faces use
/// the ghost ring, so the result encodes whichever closure filled the ghosts.
template <class Scalar>
FaceField2<Scalar> gradient_faces(const Field2<Scalar>& f) {
    if (f.ghost_state() == GhostFill::None)
        throw InvariantError("gradient_faces: ghosts not filled");
    const Grid& g = f.grid();
    FaceField2<Scalar> out(g);
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i <= g.nx(); ++i)
            out.u(i, j) = (f(i, j) - f(i - 1, j)) / g.hx();
    for (int j = 0; j <= g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            out.v(i, j) = (f(i, j) - f(i, j - 1)) / g.hy();
    return out;
}

/// Face differences on interior faces only; boundary faces set to zero.
/// Needs no ghosts. Used for the chemotactic drift in flux assemblies where
/// boundary faces carry no net flux by construction.
template <class Scalar>
FaceField2<Scalar> gradient_faces_interior(const Field2<Scalar>& f) {
    const Grid& g = f.grid();
    FaceField2<Scalar> out(g);
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 1; i < g.nx(); ++i)
            out.u(i, j) = (f(i, j) - f(i - 1, j)) / g.hx();
    for (int j = 1; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            out.v(i, j) = (f(i, j) - f(i, j - 1)) / g.hy();
    return out;
}

/// Cell-centered divergence of a face field. The cell sum telescopes to the
/// net boundary flux exactly.
template <class Scalar>
Field2<Scalar> divergence_faces(const FaceField2<Scalar>& F) {
    const Grid& g = F.grid();
    Field2<Scalar> out(g);
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            out.at(i, j) = (F.u(i + 1, j) - F.u(i, j)) / g.hx() +
                           (F.v(i, j + 1) - F.v(i, j)) / g.hy();
    return out;
}

/// Standard 5-point Laplacian, realized as div(grad(.)) on faces.
template <class Scalar>
Field2<Scalar> laplacian(const Field2<Scalar>& f) {
    if (f.ghost_state() == GhostFill::None)
        throw InvariantError("laplacian: ghosts not filled");
    return divergence_faces(gradient_faces(f));
}

/// First-order upwind face flux w*f_upwind. Interior faces only; boundary
/// faces carry zero flux (u.nu = 0 for advecting velocities; scalar-drift
/// boundary fluxes are handled by the steppers' closures).
template <class Scalar>
FaceField2<Scalar> upwind_flux(const FaceField2<Scalar>& w, const Field2<Scalar>& f) {
    const Grid& g = f.grid();
    f.require_same_grid(w.grid(), "upwind_flux");
    FaceField2<Scalar> flux(g);
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 1; i < g.nx(); ++i) {
            const Scalar wf = w.u(i, j);
            flux.u(i, j) = wf * (wf > Scalar(0) ? f(i - 1, j) : f(i, j));
        }
    for (int j = 1; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            const Scalar wf = w.v(i, j);
            flux.v(i, j) = wf * (wf > Scalar(0) ? f(i, j - 1) : f(i, j));
        }
    return flux;
}

// Cell-centered first derivatives: centered in the interior, second-order
// one-sided in the first/last row or column, so no ghosts are required and
// linear fields differentiate exactly everywhere.
template <class Scalar>
Field2<Scalar> dx_cell(const Field2<Scalar>& f) {
    const Grid& g = f.grid();
    const double h2 = 2.0 * g.hx();
    Field2<Scalar> out(g);
    for (int j = 0; j < g.ny(); ++j) {
        out.at(0, j) = (-3.0 * f(0, j) + 4.0 * f(1, j) - f(2, j)) / h2;
        for (int i = 1; i < g.nx() - 1; ++i)
            out.at(i, j) = (f(i + 1, j) - f(i - 1, j)) / h2;
        const int n = g.nx() - 1;
        out.at(n, j) = (3.0 * f(n, j) - 4.0 * f(n - 1, j) + f(n - 2, j)) / h2;
    }
    return out;
}

template <class Scalar>
Field2<Scalar> dy_cell(const Field2<Scalar>& f) {
    const Grid& g = f.grid();
    const double h2 = 2.0 * g.hy();
    Field2<Scalar> out(g);
    for (int i = 0; i < g.nx(); ++i) {
        out.at(i, 0) = (-3.0 * f(i, 0) + 4.0 * f(i, 1) - f(i, 2)) / h2;
        for (int j = 1; j < g.ny() - 1; ++j)
            out.at(i, j) = (f(i, j + 1) - f(i, j - 1)) / h2;
        const int n = g.ny() - 1;
        out.at(i, n) = (3.0 * f(i, n) - 4.0 * f(i, n - 1) + f(i, n - 2)) / h2;
    }
    return out;
}

/// Scalar curl dx(Fy) - dy(Fx) of a cell-centered vector field.
template <class Scalar>
Field2<Scalar> discrete_curl(const Field2<Scalar>& Fx, const Field2<Scalar>& Fy) {
    Fx.require_same_grid(Fy.grid(), "discrete_curl");
    Field2<Scalar> out = dx_cell(Fy);
    out.interior() -= dy_cell(Fx).interior();
    return out;
}

/// Midpoint-rule L^q norm over interior cells; q may be infinity.
/// Documented proxy: the q = infinity norm is the interior max; ghost values
/// are never consulted.
template <class Scalar>
double lq_norm(const Field2<Scalar>& f, double q) {
    if (q < 1.0) throw InvariantError("lq_norm: q must be >= 1");
    if (std::isinf(q)) return f.interior().abs().maxCoeff();
    const double V = f.grid().cell_area();
    if (q == 2.0) return std::sqrt((f.interior().square().sum()) * V);
    const double s = f.interior().abs().pow(q).sum() * V;
    return std::pow(s, 1.0 / q);
}

template <class Scalar>
double l2_norm(const Field2<Scalar>& f) { return lq_norm(f, 2.0); }

/// Sum over interior cells times cell area (the discrete mass).
template <class Scalar>
double integral(const Field2<Scalar>& f) { return f.interior().sum() * f.grid().cell_area(); }

/// Discrete H^1 seminorm from interior face differences (boundary faces
/// excluded; a declared discrete Sobolev proxy).
template <class Scalar>
double h1_seminorm(const Field2<Scalar>& f) {
    const Grid& g = f.grid();
    double s = 0.0;
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 1; i < g.nx(); ++i) {
            const double d = (f(i, j) - f(i - 1, j)) / g.hx();
            s += d * d;
        }
    for (int j = 1; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            const double d = (f(i, j) - f(i, j - 1)) / g.hy();
            s += d * d;
        }
    return std::sqrt(s * g.cell_area());
}

/// Sum of per-face values weighted by face length.
inline double boundary_integral(const Grid& g, const Eigen::ArrayXd& per_face) {
    if (per_face.size() != g.boundary_face_count())
        throw InvariantError("boundary_integral: per-face vector size mismatch");
    double s = 0.0;
    for (int k = 0; k < g.boundary_face_count(); ++k)
        s += per_face[k] * g.boundary_faces()[k].length;
    return s;
}

/// Ghost value adjacent to a boundary face.
template <class Scalar>
Scalar ghost_value(const Field2<Scalar>& f, const BoundaryFace& bf) {
    const Grid& g = f.grid();
    switch (bf.side) {
        case Side::West: return f(-1, bf.j);
        case Side::East: return f(g.nx(), bf.j);
        case Side::South: return f(bf.i, -1);
        case Side::North: return f(bf.i, g.ny());
    }
    return Scalar(0);
}

/// Cell-centered velocity from the MAC face field (component-wise average of
/// the two bracketing faces).
template <class Scalar>
void cell_velocity(const FaceField2<Scalar>& w, Field2<Scalar>& U, Field2<Scalar>& V) {
    const Grid& g = w.grid();
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i) {
            U.at(i, j) = 0.5 * (w.u(i, j) + w.u(i + 1, j));
            V.at(i, j) = 0.5 * (w.v(i, j) + w.v(i, j + 1));
        }
}

} // namespace cesim
