#include "cesim/linsolve.hpp"

#include "cesim/errors.hpp"

#include <Eigen/IterativeLinearSolvers>

#include <vector>

namespace cesim {

Eigen::SparseMatrix<double> assemble_neg_laplacian(const Grid& grid, DiffusionBc bc,
                                                   const BoundarySpec* bs) {
    const int nx = grid.nx(), ny = grid.ny(), n = grid.cell_count();
    const double ax = 1.0 / (grid.hx() * grid.hx());
    const double ay = 1.0 / (grid.hy() * grid.hy());
    if (bc == DiffusionBc::Robin && bs == nullptr)
        throw InvariantError("assemble_neg_laplacian: Robin closure needs a BoundarySpec");

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(5 * n);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const int id = grid.cell_id(i, j);
            double diag = 0.0;
            if (i > 0) { diag += ax; trip.emplace_back(id, grid.cell_id(i - 1, j), -ax); }
            if (i < nx - 1) { diag += ax; trip.emplace_back(id, grid.cell_id(i + 1, j), -ax); }
            if (j > 0) { diag += ay; trip.emplace_back(id, grid.cell_id(i, j - 1), -ay); }
            if (j < ny - 1) { diag += ay; trip.emplace_back(id, grid.cell_id(i, j + 1), -ay); }
            trip.emplace_back(id, id, diag);
        }

    if (bc != DiffusionBc::Neumann) {
        for (int k = 0; k < grid.boundary_face_count(); ++k) {
            const auto& bf = grid.boundary_faces()[k];
            const int id = grid.cell_id(bf.i, bf.j);
            const double h = bf.h_perp;
            if (bc == DiffusionBc::DirichletZeroFace) {
                trip.emplace_back(id, id, 2.0 / (h * h));
            } else { // Robin
                const double kap = bs->kappa[k];
                trip.emplace_back(id, id, kap / (h * (1.0 + 0.5 * kap * h)));
            }
        }
    }

    Eigen::SparseMatrix<double> K(n, n);
    K.setFromTriplets(trip.begin(), trip.end());
    K.makeCompressed();
    return K;
}

Eigen::VectorXd robin_rhs(const Grid& grid, const BoundarySpec& bs) {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(grid.cell_count());
    for (int k = 0; k < grid.boundary_face_count(); ++k) {
        const auto& bf = grid.boundary_faces()[k];
        const double h = bf.h_perp;
        const double s = bs.kappa[k] / (h * (1.0 + 0.5 * bs.kappa[k] * h));
        r[grid.cell_id(bf.i, bf.j)] += s * bs.gamma[k];
    }
    return r;
}

Eigen::VectorXd cg_solve(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& b,
                         const Eigen::VectorXd& x0, double tol, int max_iter,
                         SolveStats* stats) {
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg;
    cg.setTolerance(tol);
    cg.setMaxIterations(max_iter);
    cg.compute(A);
    Eigen::VectorXd x = cg.solveWithGuess(b, x0);
    if (stats) {
        stats->iterations = static_cast<int>(cg.iterations());
        stats->residual = cg.error();
    }
    if (cg.info() != Eigen::Success)
        throw SolverError("cg_solve: no convergence after " + std::to_string(cg.iterations()) +
                              " iterations (relative residual " + std::to_string(cg.error()) + ")",
                          cg.error(), static_cast<int>(cg.iterations()));
    return x;
}

Eigen::VectorXd to_vector(const ScalarField& f) {
    const Grid& g = f.grid();
    Eigen::VectorXd v(g.cell_count());
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            v[g.cell_id(i, j)] = f(i, j);
    return v;
}

void from_vector(const Eigen::VectorXd& v, ScalarField& f) {
    const Grid& g = f.grid();
    for (int j = 0; j < g.ny(); ++j)
        for (int i = 0; i < g.nx(); ++i)
            f.at(i, j) = v[g.cell_id(i, j)];
    f.set_ghost_state(GhostFill::None);
}

} // namespace cesim
