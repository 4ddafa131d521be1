// Sparse SPD assembly of the diffusion operators (ghost closures folded in)
// and conjugate-gradient solves. Eigen supplies the matrix type and the
// iterative solvers; everything here is plumbing around it.
#pragma once

#include "cesim/field.hpp"
#include "cesim/grid.hpp"

#include <Eigen/Sparse>

namespace cesim {

struct SolveStats {
    int iterations = 0;
    double residual = 0.0; // relative residual |Ax-b|/|b| at exit
};

enum class DiffusionBc { Neumann, Robin, DirichletZeroFace };

/// Minus-Laplacian stencil matrix over interior cells with the boundary
/// closure eliminated into the stencil. Row/col index is Grid::cell_id.
Eigen::SparseMatrix<double> assemble_neg_laplacian(const Grid& grid, DiffusionBc bc,
                                                   const BoundarySpec* bs = nullptr);

/// Affine part of the Robin closure: -Lap(c) ~= K c - r with r[i] = sum of
/// s_f * gamma_f over the cell's boundary faces, s_f = kappa/(h (1 + kappa h/2)).
Eigen::VectorXd robin_rhs(const Grid& grid, const BoundarySpec& bs);

/// CG solve of an SPD system to relative residual <= tol. Throws SolverError
/// on non-convergence.
Eigen::VectorXd cg_solve(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& b,
                         const Eigen::VectorXd& x0, double tol, int max_iter,
                         SolveStats* stats = nullptr);

// Field <-> solver-vector copies (interior cells only).
Eigen::VectorXd to_vector(const ScalarField& f);
void from_vector(const Eigen::VectorXd& v, ScalarField& f);

/// Tolerances and iteration cap shared by every linear solve in a run.
struct SolverParams {
    double tol = 1e-12;
    int max_iter = 10000;
};

} // namespace cesim
