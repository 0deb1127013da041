#pragma once

#include <Eigen/Sparse>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Finite elements for hyperbolic fundamental polygons in the Poincare disk:
// polygon construction from the embedded boundary data, conforming Delaunay
// meshing with index-matched periodic sides, P1/P2 assembly of the
// conformally-flat weak form, and a shift-invert Lanczos eigensolver.

namespace hyplace::fem {

enum class SurfaceId { Bolza, Klein, Fermat, M3, Z10, TwelveGon, Bring, Triangle238, Triangle237, Pentagon };

SurfaceId surface_from_string(const std::string& name);
std::string to_string(SurfaceId id);

struct Vec2 {
    double x = 0, y = 0;
};

struct Side {
    std::function<Vec2(double)> at;   // parametric point
    std::function<Vec2(double)> dat;  // exact parametric derivative
    double t0 = 0, t1 = 1;
    std::string label;
};

struct Pairing {
    int side_a, side_b;
    bool reversed = true;  // node k of a matches node (n-k) of b
};

struct FundamentalPolygon {
    SurfaceId id;
    std::vector<Side> sides;
    std::vector<Pairing> pairings;
    double expected_area;  // hyperbolic
    int genus = 0;         // 0 for the open domains

    // exact-boundary quantities (adaptive quadrature along the true arcs)
    double hyperbolic_area() const;
    double side_hyperbolic_length(int side) const;
    double corner_closure_residual() const;  // max endpoint mismatch
};

FundamentalPolygon build_polygon(SurfaceId id);

struct Mesh {
    std::vector<Vec2> verts;
    std::vector<std::array<int, 3>> tris;      // positively oriented
    std::vector<int> vert_rep;                 // union-find representative per vertex
    std::vector<std::vector<int>> side_chains;  // per side: ordered boundary node ids
    std::vector<int> boundary_side_of_vert;    // -1 for interior
    double min_angle_deg = 0;
    double pairing_residual = 0;               // isometry mismatch across pairings

    int rep(int v) const { return vert_rep[v]; }
};

struct mesh_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Mesh generate_mesh(const FundamentalPolygon& poly, int n_per_side);

// Sparse symmetric stiffness/mass for element_order 1 or 2.  Periodic pairs
// are merged into shared degrees of freedom; Dirichlet sides eliminated.
struct Assembled {
    Eigen::SparseMatrix<double> K, M;
    int ndof;
    std::vector<int> dof_of_vert;                    // -1 when eliminated
    std::map<std::pair<int, int>, int> dof_of_edge;  // P2 midpoints by vertex reps
};

Assembled assemble(const Mesh& mesh, const FundamentalPolygon& poly, int element_order = 2,
                   const std::vector<bool>& dirichlet_sides = {});

struct EigenResult {
    std::vector<double> eigenvalues;  // ascending
    struct Cluster {
        double value;
        int multiplicity;
    };
    std::vector<Cluster> clusters;
    double shift;
    int mesh_n;
    int element_order;
    double max_residual;
};

std::vector<double> solve_eigs(const Eigen::SparseMatrix<double>& K,
                               const Eigen::SparseMatrix<double>& M, int nev,
                               double shift = 1e-5, double* max_residual = nullptr);

std::vector<EigenResult::Cluster> cluster(const std::vector<double>& eigs, double rel_tol = 0.01);

// Closed-surface or boundary-problem spectrum driver.
struct SpectrumOptions {
    int n_per_side = 30;
    int nev = 100;
    int element_order = 2;
    double shift = 1e-5;
    std::vector<bool> dirichlet_sides;  // empty = all Neumann / closed
};

EigenResult surface_spectrum(SurfaceId id, const SpectrumOptions& opt);

struct SwapReport {
    std::vector<double> original, swapped;
    std::vector<double> rel_diff;  // first min(10, n) eigenvalues
    double max_rel_diff;
};
SwapReport swap_isospectral_check(SurfaceId id, const SpectrumOptions& opt);

// Pentagon conditions from the appendix code: Dirichlet on G2 and G4.
std::vector<bool> pentagon_mixed_chi11_bc();

// ---- file formats ----
std::string mesh_file(const Mesh& mesh);                       // "hyplace-mesh/1"
std::string spectrum_file(const EigenResult& r);               // "hyplace-spec/1"
Mesh read_mesh_file(const std::string& text);

}  // namespace hyplace::fem
