#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

// The annulus / half-cylinder analyses behind the pentagon conjecture: the
// Section 3.4.1 maximum-principle test function and its nodal line, the
// annulus symmetrization inequality as a numerical property, and the
// Appendix G Pade/Ferrari eigenvalue bound.

namespace hyplace::cylinder {

// Boundary data for the glued annulus: circles in the half plane traced in
// Fermi coordinates (theta = log|z|, rho = arcsinh(x/y)).
struct AnnulusSpec {
    double core_length;
    struct Circle {
        double center;  // on the positive real axis
        double radius;
    };
    std::vector<Circle> arcs;        // the three bounding geodesics
    double period_marker[2];         // |z| = 1 and |z| = e^l verticals
};
AnnulusSpec bolza_annulus();

// w(rho, t) = phi0 - 0.038 sin(2 pi t / l - pi/2) phi1 - 0.0002 cos(4 pi t / l) phi2
// built from the first three odd cylinder eigenfunctions at lambda.
double w(double rho, double t, double lambda = 5.0);

// Root of w(., t) bracketed in rho within [0.5, 1.9].
double nodal_line(double t, double lambda = 5.0);

// Fermi rho of each bounding circle at position t along the core (branches
// that exist at this t, including the period-shifted copies).
std::vector<double> annulus_boundary_fermi(double t);
// The outer boundary of the annulus: the lower envelope over the branches.
double boundary_envelope(double t);

struct PositivityReport {
    double min_value;
    double at_rho, at_t;
    double boundary_rho_at_t;  // envelope at the minimizing t
};
PositivityReport positivity_margin(int grid_density, double lambda = 5.0);

struct SymmetrizationSample {
    double boundary_length;
    double symmetrized_length;
    double area;
    bool holds;  // boundary_length >= symmetrized_length - 1e-8
};
// Random smooth graph-over-core annuli r1(t) > 0 > r2(t); checks
// l(boundary) >= 2 k cosh(rho0) with sinh(rho0) = Area / (2k).
std::vector<SymmetrizationSample> symmetrization_check(int samples, unsigned seed = 12345);

struct AppendixGBound {
    double bound;            // 24 / (5 htilde(x1 - dx1)), the published arithmetic
    double htilde_max;       // htilde(x1)
    double x1;
    double dx1;              // 59 phi^10 / 297675
    double phi;              // interval end
    bool hypothesis_at_bound;        // Theorem G.3 grid check at `bound`
    double hypothesis_margin;        // min over the grid of 24/(5-4x^2) - lambda sec^2 x
    double grid_certified_bound;     // largest lambda passing the same grid
    std::optional<double> failure_x; // first grid violation, if any
};
AppendixGBound appendix_g_bound(int grid_points = 1000);

// Grid check of -g''/g - lambda / cos^2 x >= 0 on (0, phi) for g = x - 4x^3/5.
struct HypothesisCheck {
    bool holds;
    double margin;
    std::optional<double> failure_x;
};
HypothesisCheck thm_g3_hypothesis(double lambda, int grid_points = 1000);

std::string nodal_line_csv(int grid_points = 200);

}  // namespace hyplace::cylinder
