#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

// Special functions with tracked truncation error: the Gauss hypergeometric
// series, Legendre functions, hyperbolic-cylinder eigenfunctions,
// polylogarithms, zeta tail bounds, a Pade approximant of sec^2, and real
// root formulas for cubics and quartics.

namespace hyplace::specfun {

using complexd = std::complex<double>;

// lambda = s(1-s) with s = 1/2 + it, t real or purely imaginary.
struct SpectralParameter {
    complexd s;
    double lambda;

    static SpectralParameter from_lambda(double lambda);
    void validate() const;
};

struct SeriesResult {
    complexd value;
    double truncation_bound = 0;  // proven bound on |true - value|
    int terms_used = 0;

    double real() const { return value.real(); }
};

struct series_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Gauss hypergeometric power series, |z| < 1.  When `alternating` holds for
// the actual term sequence the bound uses the alternating-series estimate,
// otherwise a geometric tail argument.
SeriesResult hyp2f1(complexd a, complexd b, complexd c, complexd z, double tol = 1e-14);

// 2F1 continued past |z| >= 1 for real z < 0 via the Pfaff map
// z -> z/(z-1).  Used by the cylinder eigenfunctions where z = -sinh^2(rho).
complexd hyp2f1_pfaff(complexd a, complexd b, complexd c, complexd z, double tol = 1e-14);

// P_{-s}(cosh r) = 2F1(s, 1-s; 1; (1 - cosh r)/2).
double legendre_pms(complexd s, double r, double tol = 1e-14);

// As a function of t with s = 1/2 + it and cosh r = 1 + x/(2 pi):
// the disk eigenvalue generator used by varbounds::nu.
double legendre_disk_f(double t, double x_area, double tol = 1e-14);

// Lower bound on nu_x from the first positive zero of the odd partial sum
// f3 of the series in t^2; for x = pi the zero is t^2 = 23/4 exactly.
double legendre_partial_lower_zero(double x_area);

// Exact rational check that f3(sqrt(23)/2) = 0 (numerator of the sum).
bool f3_vanishes_at_23_over_4();

enum class Parity { Even, Odd };

// phi_k(even/odd) of Section 2.3.2 with the Fourier index convention of the
// plotting code: parameter shifts i pi k / l, prefactor cosh^{2 pi i k / l}.
// Returns the real part.
double cylinder_eigenfunction(Parity parity, int k, const SpectralParameter& s,
                              double core_length, double rho);

// Li_n(z) for |z| < 1 with geometric tail bound.
SeriesResult polylog(int n, double z, double tol = 1e-15);

// Paper-grade directional bounds for the trace-formula constants.
double li3_upper_hybrid(double z, int k_exact);  // z/(1-z) - sum_{k=2}^{K}(1-k^-3) z^k
double li3_lower_partial(double z, int terms);

struct DuplicationResidual {
    double dilog;   // Li2(z) + Li2(-z) - Li2(z^2)/2
    double trilog;  // Li3(z) + Li3(-z) - Li3(z^2)/4
};
DuplicationResidual dilog_duplication_check(double z);

// Exact-rational partial sum of sum k^-3 over the first `terms` terms.
struct Rational128 {
    __int128 num = 0;
    __int128 den = 1;
    double to_double() const;
};
Rational128 zeta3_lower(int terms);

struct PadeSec2 {
    double value;
    double error_bound;  // 59 x^10 / 297675
};
PadeSec2 pade_sec2(double x);
double pade_sec2_interval_end();  // phi ~ 1.11795903

double cardano_real_root(double a, double b, double c, double d);

struct QuarticRoot {
    complexd root;
    bool is_real;
};
std::vector<QuarticRoot> ferrari_roots(double a, double b, double c, double d, double e);

}  // namespace hyplace::specfun
