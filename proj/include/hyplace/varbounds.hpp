#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

// Eigenvalue bounds: Faber-Krahn lower bounds through disk eigenvalues,
// Rayleigh-quotient upper bounds with Simpson error control, the
// Gram-Schmidt second-eigenvalue bound, irrep screening and the closed-form
// genus bounds.

namespace hyplace::varbounds {

enum class Direction { Upper, Lower };
enum class Method { FaberKrahn, Rayleigh, MinMax, TraceFormula, ClosedForm };

struct SpectralBound {
    double value;
    Direction direction;
    std::string target;
    Method method;
    double error_budget = 0;
    std::optional<std::pair<long, long>> rational;  // value as p/q when available
};

// Domain bounded below by c1 and above by c2 over [x_lo, x_hi] in the half
// plane; c1 carries the Dirichlet condition for the test functions here.
struct PlanarDomain {
    double x_lo, x_hi;
    std::function<double(double)> lower_curve;  // c1 / gamma1
    std::function<double(double)> upper_curve;  // c2 / gamma2
};

enum class TestFunctionId { BolzaPhi1, BolzaPhi2, KleinPhi1 };

struct TestFunction {
    TestFunctionId id;
    std::function<double(double, double)> value;
    std::function<std::pair<double, double>(double, double)> gradient;
};

PlanarDomain bolza_domain();   // Omega_T, x in [0, 2^(1/4)-1]
PlanarDomain klein_domain();   // Omega_K, x in [0, p]
TestFunction test_function(TestFunctionId id);

// Composite Simpson and the Section 3.3 n-selection rule.
double simpson(const std::function<double(double)>& f, double a, double b, int n);
int simpson_n(double max_f4, double a, double b, double tol);
double estimate_max_f4(const std::function<double(double)>& f, double a, double b);

struct Bracket {
    double lower, upper, value;
};

// Inner y-integral by adaptive quadrature, outer composite Simpson with the
// given n (the paper's committed values by default); bracket half-width tol.
Bracket l2_norm_sq(const TestFunction& f, const PlanarDomain& dom, double tol = 1e-6,
                   int outer_n = 0);
SpectralBound dirichlet_energy(const TestFunction& f, const PlanarDomain& dom,
                               double tol = 1e-6, int outer_n = 0);

struct RayleighResult {
    SpectralBound bound;
    Bracket norm;
    double energy;
    int n_norm, n_energy;  // Simpson subdivisions used
};
RayleighResult rayleigh_upper_bolza();
RayleighResult rayleigh_upper_klein();

struct SecondEigenvalueResult {
    SpectralBound bound;           // lambda_2 upper
    double inner_product;          // <phi1, phi2> Simpson value
    double norm_tilde_lower;       // paper bracket 252552/1e6
    double energy_tilde_upper;     // paper bracket 1408244/1e6
};
SecondEigenvalueResult rayleigh_upper_second();

// First Dirichlet eigenvalue of the hyperbolic disk of area x, by bisection
// on the first zero of the Legendre function in t.
double nu(double x_area, double tol = 1e-10);

enum class Verdict { RuledOut, Candidate, TrivialSpace, ConjectureDependent };

struct ScreeningRow {
    std::string irrep;
    Verdict verdict;
    double closure_area = 0;
    double nu_lower = 0;
};

std::vector<ScreeningRow> screen_irreps(const std::string& surface, double lambda1_upper,
                                        bool assume_conjecture = true);

struct NodalArgument {
    Verdict verdict;
    double region_area;  // 2 pi / 3 for Bolza, pi / 3 for Klein
    double nu_lower;
};
NodalArgument trivial_rep_nodal_argument(const std::string& surface, double lambda1_upper);

std::vector<SpectralBound> genus_closed_bounds(int genus, double area = 0);

std::string bounds_csv(const std::vector<SpectralBound>& bounds);

}  // namespace hyplace::varbounds
