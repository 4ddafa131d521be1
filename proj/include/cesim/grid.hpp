// Uniform cell-centered rectangular grid with a one-cell ghost ring.
//
// Cell (i,j), i in [0,nx), j in [0,ny), has its center at
// ((i+0.5)hx, (j+0.5)hy). Boundary faces are enumerated in a fixed order
// (west, east, south, north); per-face boundary data (BoundarySpec) is
// stored in the same order.
#pragma once

#include "cesim/errors.hpp"

#include <Eigen/Core>

#include <array>
#include <string>
#include <vector>

namespace cesim {

enum class Side { West, East, South, North };

struct BoundaryFace {
    int i, j;                    // owning interior cell
    Side side;
    std::array<double, 2> normal;   // outward unit normal, one of (+-1,0),(0,+-1)
    std::array<double, 2> midpoint; // face midpoint on the boundary
    double length;               // face length (hy for W/E, hx for S/N)
    double h_perp;               // cell size normal to the face
};

class Grid {
public:
    Grid(int nx, int ny, double Lx, double Ly) : nx_(nx), ny_(ny), Lx_(Lx), Ly_(Ly) {
        if (nx < 4 || ny < 4)
            throw InvariantError("Grid: nx and ny must both be >= 4, got " +
                                 std::to_string(nx) + "x" + std::to_string(ny));
        if (!(Lx > 0.0) || !(Ly > 0.0))
            throw InvariantError("Grid: domain extents must be positive");
        hx_ = Lx / nx;
        hy_ = Ly / ny;
        build_boundary_faces();
    }

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double Lx() const { return Lx_; }
    double Ly() const { return Ly_; }
    double hx() const { return hx_; }
    double hy() const { return hy_; }
    double h_min() const { return hx_ < hy_ ? hx_ : hy_; }
    double cell_area() const { return hx_ * hy_; }
    int cell_count() const { return nx_ * ny_; }

    double xc(int i) const { return (i + 0.5) * hx_; }
    double yc(int j) const { return (j + 0.5) * hy_; }

    // Linear index of cell (i,j) used by the sparse solvers.
    int cell_id(int i, int j) const { return i + nx_ * j; }

    const std::vector<BoundaryFace>& boundary_faces() const { return faces_; }
    int boundary_face_count() const { return static_cast<int>(faces_.size()); }

    bool same_shape(const Grid& o) const {
        return nx_ == o.nx_ && ny_ == o.ny_ && Lx_ == o.Lx_ && Ly_ == o.Ly_;
    }

private:
    void build_boundary_faces() {
        faces_.reserve(2 * nx_ + 2 * ny_);
        for (int j = 0; j < ny_; ++j)
            faces_.push_back({0, j, Side::West, {-1.0, 0.0}, {0.0, yc(j)}, hy_, hx_});
        for (int j = 0; j < ny_; ++j)
            faces_.push_back({nx_ - 1, j, Side::East, {1.0, 0.0}, {Lx_, yc(j)}, hy_, hx_});
        for (int i = 0; i < nx_; ++i)
            faces_.push_back({i, 0, Side::South, {0.0, -1.0}, {xc(i), 0.0}, hx_, hy_});
        for (int i = 0; i < nx_; ++i)
            faces_.push_back({i, ny_ - 1, Side::North, {0.0, 1.0}, {xc(i), Ly_}, hx_, hy_});
    }

    int nx_, ny_;
    double Lx_, Ly_, hx_, hy_;
    std::vector<BoundaryFace> faces_;
};

/// Robin data (kappa, gamma) sampled at boundary-face midpoints, aligned with
/// Grid::boundary_faces() order. Both must be nonnegative everywhere.
struct BoundarySpec {
    Eigen::ArrayXd kappa;
    Eigen::ArrayXd gamma;

    static BoundarySpec constant(const Grid& g, double kappa, double gamma) {
        BoundarySpec bs;
        bs.kappa = Eigen::ArrayXd::Constant(g.boundary_face_count(), kappa);
        bs.gamma = Eigen::ArrayXd::Constant(g.boundary_face_count(), gamma);
        bs.validate();
        return bs;
    }

    template <class Fk, class Fg>
    static BoundarySpec from_functions(const Grid& g, Fk&& kappa_fn, Fg&& gamma_fn) {
        BoundarySpec bs;
        const int m = g.boundary_face_count();
        bs.kappa.resize(m);
        bs.gamma.resize(m);
        for (int f = 0; f < m; ++f) {
            const auto& bf = g.boundary_faces()[f];
            bs.kappa[f] = kappa_fn(bf.midpoint[0], bf.midpoint[1]);
            bs.gamma[f] = gamma_fn(bf.midpoint[0], bf.midpoint[1]);
        }
        bs.validate();
        return bs;
    }

    void validate() const {
        if ((kappa < 0.0).any())
            throw InvariantError("BoundarySpec: kappa must be nonnegative on every face");
        if ((gamma < 0.0).any())
            throw InvariantError("BoundarySpec: gamma must be nonnegative on every face");
    }

    bool all_kappa_zero() const { return (kappa == 0.0).all(); }
    double gamma_max() const { return gamma.size() ? gamma.maxCoeff() : 0.0; }
};

} // namespace cesim
