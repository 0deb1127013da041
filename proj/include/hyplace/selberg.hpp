#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyplace/lengths.hpp"

// Trace-formula machinery: the sinc^4 test-function family, its Fourier
// transform, geometric-side evaluation, multiplicity bounds, L-optimization
// and a Weyl-law consistency check.

namespace hyplace::selberg {

struct TraceTestFunction {
    double L;  // support half-width parameter; g lives on [-4L, 4L]
};

// h(t) = (sin(tL)/(tL))^4 for real t.
double h(const TraceTestFunction& tf, double t);
// h at t = i tau (purely imaginary argument), |tau| <= 1/2.
double h_imag(const TraceTestFunction& tf, double tau);

double g(const TraceTestFunction& tf, double xi);
double g_prime(const TraceTestFunction& tf, double xi);

enum class IdentityMethod { TanhForm, TransformForm };

// (Area/4pi) int h(t) tanh(pi t) t dt, or the equivalent
// -(Area/2pi) int_0^{4L} g'(t)/sinh(t/2) dt.
double identity_term(const TraceTestFunction& tf, double area,
                     IdentityMethod method = IdentityMethod::TanhForm);

// Closed-form identity term via dilogarithms/trilogarithms (exact up to
// series truncation); cross-checks the quadrature.
double identity_term_closed(const TraceTestFunction& tf, double area);

// Identity term plus the winding sum over the length spectrum, truncated by
// the support of g.
double geometric_side(const TraceTestFunction& tf,
                      const std::vector<lengths::LengthSpectrumEntry>& spectrum, double area);

// The certified upper bound F-tilde for the Bolza E1 computation: the closed
// form with the trilogarithm/zeta constants replaced by their directional
// tail bounds.  Also returns the four substituted constants.
struct CertifiedGeometricSide {
    double value;          // F-tilde
    double li3_e4L_upper;  // 1/(e^{4L} - 1)
    double li3_eL_upper;   // hybrid bound, 8 exact terms
    double li3_e2L_lower;  // 5-term partial sum
    double zeta3_lower;    // 30-term rational partial sum
};
CertifiedGeometricSide geometric_side_certified(const TraceTestFunction& tf,
                                                const std::vector<lengths::LengthSpectrumEntry>& spectrum,
                                                double area);

struct KnownTerm {
    double lambda_upper;  // upper bound on the eigenvalue
    int multiplicity;
};

struct MultiplicityBound {
    std::string surface;
    int eigenspace_index;
    double bound;
    int implied_max_multiplicity;
    double L;
    double geometric_side_value;
};

// bound = (geometric_side - h(i/2) - sum m_j h(t_j)) / h(t_target) with
// t = sqrt(lambda - 1/4); requires h decreasing at the substituted argument.
MultiplicityBound multiplicity_bound(const TraceTestFunction& tf, double geometric_side_value,
                                     const std::vector<KnownTerm>& known,
                                     double target_lambda_upper);

struct SweepPoint {
    double L;
    double bound;
};
struct SweepResult {
    double best_L;
    std::vector<SweepPoint> table;
};
// Discrete sweep of a bound function over L in [lo, hi] with the given step.
SweepResult optimize_L(double lo, double hi, double step,
                       const std::function<double(double)>& bound_fn);

struct WeylReport {
    double slope;      // least-squares slope of N(lambda) vs lambda, upper half
    double expected;   // Area / 4 pi
    double rel_error;
};
WeylReport weyl_check(const std::vector<double>& eigenvalues, double area);

std::string sweep_csv(const SweepResult& sweep);

}  // namespace hyplace::selberg
