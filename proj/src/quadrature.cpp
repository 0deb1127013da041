#include "hyplace/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hyplace::quadr {

double simpson(const Fn& f, double a, double b, int n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("simpson needs even n >= 2");
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

int simpson_n(double max_f4, double a, double b, double tol) {
    if (max_f4 < 0 || tol <= 0) throw std::invalid_argument("simpson_n: bad arguments");
    if (max_f4 == 0) return 2;
    const double len = std::abs(b - a);
    const double threshold = std::pow(max_f4 * std::pow(len, 5) / (180.0 * tol), 0.25);
    int n = static_cast<int>(std::ceil(threshold));
    if (n < 2) n = 2;
    if (n % 2) ++n;
    return n;
}

double estimate_max_f4(const Fn& f, double a, double b, int points, double eps) {
    const double hi = b - eps;
    const double h = (hi - a) / (points - 1);
    std::vector<double> v(points);
    for (int i = 0; i < points; ++i) v[i] = f(a + i * h);
    double best = 0;
    const double h4 = h * h * h * h;
    for (int i = 2; i + 2 < points; ++i) {
        const double d4 = (v[i - 2] - 4 * v[i - 1] + 6 * v[i] - 4 * v[i + 1] + v[i + 2]) / h4;
        best = std::max(best, std::abs(d4));
    }
    return 2.0 * best;  // safety factor
}

namespace {

// Kronrod 15 nodes/weights on [-1, 1]; Gauss 7 weights on the odd nodes.
constexpr double xk[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769, -0.741531185599394,
    -0.586087235467691, -0.405845151377397, -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,  0.741531185599394,
    0.864864423359769,  0.949107912342759,  0.991455371120813};
constexpr double wk[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267, 0.140653259715525,
    0.104790010322250, 0.063092092629979, 0.022935322010529};
constexpr double wg[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
    0.381830050505119, 0.279705391489277, 0.129484966168870};

struct GK {
    double value;
    double err;
};

GK gk15(const Fn& f, double a, double b) {
    const double c = 0.5 * (a + b), hl = 0.5 * (b - a);
    double k = 0, g = 0;
    for (int i = 0; i < 15; ++i) {
        const double fx = f(c + hl * xk[i]);
        k += wk[i] * fx;
        if (i % 2 == 1) g += wg[i / 2] * fx;
    }
    return {k * hl, std::abs((k - g) * hl)};
}

double adapt(const Fn& f, double a, double b, double tol, int depth, int max_depth) {
    const GK r = gk15(f, a, b);
    // the floor on tol keeps integrands with a roundoff noise floor from
    // exploding the recursion; tol halving stops mattering below it
    if (r.err <= std::max(tol, 1e-15 * (1 + std::abs(r.value))) || depth >= max_depth)
        return r.value;
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, tol / 2, depth + 1, max_depth) +
           adapt(f, c, b, tol / 2, depth + 1, max_depth);
}

}  // namespace

double adaptive(const Fn& f, double a, double b, double tol, int max_depth) {
    if (a == b) return 0.0;
    if (max_depth > 26) max_depth = 26;
    return adapt(f, a, b, tol, 0, max_depth);
}

double adaptive_to(const Fn& f, double a, double cut, double tol) {
    // Split into unit-ish panels so oscillatory integrands converge cleanly.
    double total = 0;
    double lo = a;
    const double step = std::max(1.0, (cut - a) / 64.0);
    while (lo < cut) {
        const double hi = std::min(cut, lo + step);
        total += adaptive(f, lo, hi, tol / 64.0);
        lo = hi;
    }
    return total;
}

}  // namespace hyplace::quadr
