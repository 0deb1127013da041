#pragma once

#include <functional>

namespace hyplace::quadr {

using Fn = std::function<double(double)>;

// Composite Simpson rule with n even subintervals.
double simpson(const Fn& f, double a, double b, int n);

// Smallest even n with K (b-a)^5 / (180 n^4) < tol.
int simpson_n(double max_f4, double a, double b, double tol);

// |f''''| estimated by 5-point central differences on a uniform grid over
// [a, b - eps], times a safety factor of 2.  The grid has `points` samples.
double estimate_max_f4(const Fn& f, double a, double b, int points = 2048, double eps = 1e-9);

// Adaptive Gauss-Kronrod (G7, K15) to absolute tolerance tol.
double adaptive(const Fn& f, double a, double b, double tol = 1e-10, int max_depth = 40);

// Semi-infinite integral of f over [a, inf) for integrands decaying at least
// like t^-4: truncates at `cut` and adds nothing (the caller supplies the
// analytic tail bound if needed).
double adaptive_to(const Fn& f, double a, double cut, double tol = 1e-9);

}  // namespace hyplace::quadr
