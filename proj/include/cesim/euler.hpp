// Incompressible 2D Euler in vorticity-streamfunction form with the
// chemotactic gravity forcing, plus diagnostic pressure recovery.
//
// The streamfunction is cell-centered with psi = 0 on the boundary. Face
// velocities are reconstructed from a node-averaged streamfunction, which
// makes the discrete divergence vanish identically and u.nu = 0 exact.
#pragma once

#include "cesim/field.hpp"
#include "cesim/linsolve.hpp"

namespace cesim {

struct FlowState {
    explicit FlowState(const Grid& g) : omega(g), psi(g), u(g) {}
    ScalarField omega;
    ScalarField psi; // Dirichlet-zero ghosts filled
    FaceField u;
    SolveStats psi_stats; // residual of the last streamfunction solve
};

/// Poisson solve -Lap(psi) = omega with psi = 0 on the boundary. The matrix is
/// fixed per grid, so the preconditioner is factored once and reused.
class StreamfunctionSolver {
public:
    explicit StreamfunctionSolver(const Grid& grid, SolverParams params = {});
    ~StreamfunctionSolver();
    StreamfunctionSolver(StreamfunctionSolver&&) noexcept;
    StreamfunctionSolver& operator=(StreamfunctionSolver&&) noexcept;

    /// Returns psi with Dirichlet-zero ghosts filled; residual in stats.
    ScalarField solve(const ScalarField& omega, SolveStats* stats = nullptr) const;

    const Grid& grid() const { return *grid_; }

private:
    struct Impl;
    const Grid* grid_;
    SolverParams params_;
    std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper around StreamfunctionSolver.
ScalarField solve_streamfunction(const ScalarField& omega, SolverParams params = {},
                                 SolveStats* stats = nullptr);

/// u = (d psi/dy, -d psi/dx) through the node-averaged streamfunction.
/// Boundary nodes are pinned to zero, so normal boundary velocities vanish
/// exactly and the discrete divergence is identically zero.
FaceField velocity_from_streamfunction(const ScalarField& psi);

/// MAC velocity built from streamfunction values given directly at grid nodes
/// (psi_node(x, y) evaluated at (i*hx, j*hy)). Exactly divergence-free; used
/// for prescribed test flows.
template <class F>
FaceField velocity_from_node_function(const Grid& g, F&& psi_node) {
    FaceField w(g);
    Eigen::ArrayXXd P(g.nx() + 1, g.ny() + 1);
    for (int j = 0; j <= g.ny(); ++j)
        for (int i = 0; i <= g.nx(); ++i)
            P(i, j) = psi_node(i * g.hx(), j * g.hy());
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i <= g.nx(); ++i)
            w.u(i, j) = (P(i, j + 1) - P(i, j)) / g.hy();
    for (int j = 0; j <= g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            w.v(i, j) = -(P(i + 1, j) - P(i, j)) / g.hx();
    return w;
}

/// Momentum forcing -n grad(phi) as cell-centered components.
void chemotactic_force(const ScalarField& n, const ScalarField& phi, ScalarField& Fx,
                       ScalarField& Fy);

/// Discrete curl of the momentum forcing -n grad(phi); shares stencils with
/// discrete_curl so the two agree cell by cell.
ScalarField vorticity_source(const ScalarField& n, const ScalarField& phi);

/// Explicit upwind advection of omega plus the gravity source, followed by a
/// fresh psi/u reconstruction. Boundary faces carry zero advective flux.
FlowState step_vorticity(const FlowState& state, const ScalarField& n, const ScalarField& phi,
                         double dt, const StreamfunctionSolver& solver);

/// Diagnostic pressure: Lap(p) = div(-u.grad(u) - n grad(phi)) with the
/// matching Neumann data, mean-zero normalized.
ScalarField recover_pressure(const FlowState& state, const ScalarField& n,
                             const ScalarField& phi, SolverParams params = {},
                             SolveStats* stats = nullptr);

} // namespace cesim
