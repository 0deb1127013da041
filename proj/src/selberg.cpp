#include "hyplace/selberg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "hyplace/quadrature.hpp"
#include "hyplace/specfun.hpp"

namespace hyplace::selberg {

namespace {
double sinc(double x) { return x == 0 ? 1.0 : std::sin(x) / x; }
double sgn(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }
}  // namespace

double h(const TraceTestFunction& tf, double t) {
    const double s = sinc(t * tf.L);
    return s * s * s * s;
}

double h_imag(const TraceTestFunction& tf, double tau) {
    if (std::abs(tau) > 0.5 + 1e-12)
        throw std::invalid_argument("h_imag: |tau| must not exceed 1/2");
    const double x = tau * tf.L;
    const double s = x == 0 ? 1.0 : std::sinh(x) / x;
    return s * s * s * s;
}

double g(const TraceTestFunction& tf, double xi) {
    // evaluate on |xi|: g is even and this keeps the symmetry bit-exact
    const double L = tf.L, x = std::abs(xi);
    auto cube = [](double v) { return v * v * v; };
    const double val = cube(x - 4 * L) * sgn(x - 4 * L) - 4 * cube(x - 2 * L) * sgn(x - 2 * L) -
                       4 * cube(2 * L + x) * sgn(2 * L + x) + cube(4 * L + x) * sgn(4 * L + x) +
                       6 * cube(x) * sgn(x);
    return val / (192 * L * L * L * L);
}

double g_prime(const TraceTestFunction& tf, double xi) {
    // sgn treated as piecewise-constant (Sign' -> 0); odd in xi
    const double L = tf.L, x = std::abs(xi);
    auto sq = [](double v) { return v * v; };
    const double val = 3 * sq(x - 4 * L) * sgn(x - 4 * L) - 12 * sq(x - 2 * L) * sgn(x - 2 * L) -
                       12 * sq(2 * L + x) * sgn(2 * L + x) + 3 * sq(4 * L + x) * sgn(4 * L + x) +
                       18 * sq(x) * sgn(x);
    return sgn(xi) * val / (192 * L * L * L * L);
}

double identity_term(const TraceTestFunction& tf, double area, IdentityMethod method) {
    if (!(area > 0)) return 0.0;
    if (method == IdentityMethod::TanhForm) {
        // (Area/4pi) * 2 int_0^inf h(t) tanh(pi t) t dt, integrated over
        // half-periods of the sinc^4 oscillation.  Beyond the cut tanh = 1 to
        // machine precision and the mean of sin^4 gives the tail
        // 3/(16 L^4 T^2); the oscillatory remainder is O((LT)^-3).
        const double L = tf.L;
        const double T = 400.0;
        const double panel = 0.5 * M_PI / L;
        double integral = 0;
        auto f = [&](double t) { return h(tf, t) * std::tanh(M_PI * t) * t; };
        for (double lo = 0; lo < T; lo += panel)
            integral += quadr::adaptive(f, lo, std::min(lo + panel, T), 1e-13);
        const double tail = 3.0 / (16.0 * L * L * L * L * T * T);
        return area / (4 * M_PI) * 2.0 * (integral + tail);
    }
    // -(Area/2pi) int_0^{4L} g'(t)/sinh(t/2) dt.  g'(t) ~ O(t) at 0, so the
    // integrand is finite; start a hair above zero.
    const double integral =
        quadr::adaptive([&](double t) { return g_prime(tf, t) / std::sinh(t / 2); }, 1e-12,
                        4 * tf.L, 1e-12) ;
    return -area / (2 * M_PI) * integral;
}

namespace {

// Antiderivatives of t^k / sinh(t/2) in terms of q = e^{-t/2}:
//   P0 = 2 log tanh(t/4)
//   P1 = 4 [ log q log((1+q)/(1-q)) - Li2(q) + Li2(-q) ]
//   P2 = -8 [ log^2 q log((1+q)/(1-q)) - 2 log q (Li2(q) - Li2(-q))
//             + 2 (Li3(q) - Li3(-q)) ]
// with limits P1(0) = -pi^2, P2(0) = -28 zeta(3).
double li(int n, double z) { return specfun::polylog(n, z).real(); }

double P0(double t) { return 2.0 * std::log(std::tanh(t / 4)); }
double P1(double t) {
    const double q = std::exp(-t / 2);
    return 4.0 * (std::log(q) * std::log((1 + q) / (1 - q)) - li(2, q) + li(2, -q));
}
double P2(double t) {
    const double q = std::exp(-t / 2);
    const double lq = std::log(q);
    return -8.0 * (lq * lq * std::log((1 + q) / (1 - q)) - 2 * lq * (li(2, q) - li(2, -q)) +
                   2 * (li(3, q) - li(3, -q)));
}
constexpr double kZeta3 = 1.2020569031595942854;

// I(L) = -2 int_0^{4L} g'(t)/sinh(t/2) dt in closed form; the identity term
// is (Area/4pi) I(L).
double closed_I(double L, double li3_block) {
    const double P1_0 = -M_PI * M_PI;
    const double L4 = L * L * L * L;
    const double b1 = 3 * (P2(2 * L) - (-28.0 * kZeta3)) - 8 * L * (P1(2 * L) - P1_0);
    const double b2 = -(P2(4 * L) - P2(2 * L)) + 8 * L * (P1(4 * L) - P1(2 * L)) -
                      16 * L * L * (P0(4 * L) - P0(2 * L));
    // Split out the trilogarithm aggregate so certified bounds can replace it:
    // I = rest + (32 Li3(e^-L) - 12 Li3(e^-2L) + Li3(e^-4L) - 21 zeta3) / (4 L^4).
    const double full = -(b1 + b2) / (16 * L4);
    const double exact_block = (32 * li(3, std::exp(-L)) - 12 * li(3, std::exp(-2 * L)) +
                                li(3, std::exp(-4 * L)) - 21 * kZeta3) /
                               (4 * L4);
    return full - exact_block + li3_block;
}

double exact_li3_block(double L) {
    const double L4 = L * L * L * L;
    return (32 * li(3, std::exp(-L)) - 12 * li(3, std::exp(-2 * L)) +
            li(3, std::exp(-4 * L)) - 21 * kZeta3) /
           (4 * L4);
}

double length_sum(const TraceTestFunction& tf,
                  const std::vector<lengths::LengthSpectrumEntry>& spectrum) {
    double sum = 0;
    for (const auto& e : spectrum) {
        for (int k = 1; k <= 10; ++k) {
            const double kl = k * e.length;
            if (kl >= 4 * tf.L) break;  // outside the support of g
            sum += e.multiplicity * e.length * g(tf, kl) / (2 * std::sinh(kl / 2));
        }
    }
    return sum;
}

}  // namespace

double identity_term_closed(const TraceTestFunction& tf, double area) {
    return area / (4 * M_PI) * closed_I(tf.L, exact_li3_block(tf.L));
}

double geometric_side(const TraceTestFunction& tf,
                      const std::vector<lengths::LengthSpectrumEntry>& spectrum, double area) {
    return identity_term(tf, area, IdentityMethod::TanhForm) + length_sum(tf, spectrum);
}

CertifiedGeometricSide geometric_side_certified(
    const TraceTestFunction& tf, const std::vector<lengths::LengthSpectrumEntry>& spectrum,
    double area) {
    const double L = tf.L;
    CertifiedGeometricSide out;
    out.li3_e4L_upper = 1.0 / (std::exp(4 * L) - 1.0);
    out.li3_eL_upper = specfun::li3_upper_hybrid(std::exp(-L), 8);
    out.li3_e2L_lower = specfun::li3_lower_partial(std::exp(-2 * L), 5);
    out.zeta3_lower = specfun::zeta3_lower(30).to_double();
    const double L4 = L * L * L * L;
    // Coefficients +32, -12, +1, -21: upper bounds enter positively, lower
    // bounds negatively, so the substituted block dominates the true one.
    const double block = (32 * out.li3_eL_upper - 12 * out.li3_e2L_lower + out.li3_e4L_upper -
                          21 * out.zeta3_lower) /
                         (4 * L4);
    out.value = area / (4 * M_PI) * closed_I(L, block) + length_sum(tf, spectrum);
    return out;
}

MultiplicityBound multiplicity_bound(const TraceTestFunction& tf, double geometric_side_value,
                                     const std::vector<KnownTerm>& known,
                                     double target_lambda_upper) {
    const double t_target = std::sqrt(target_lambda_upper - 0.25);
    const double ht = h(tf, t_target);
    if (ht <= 1e-12) throw std::invalid_argument("multiplicity_bound: h(t_target) vanishes; pick smaller L");
    // h must be decreasing at the substituted argument for the bound logic.
    if (h(tf, t_target * (1 + 1e-6)) > ht)
        throw std::invalid_argument("multiplicity_bound: h not decreasing at the target");
    double numer = geometric_side_value - h_imag(tf, 0.5);
    for (const auto& kt : known)
        numer -= kt.multiplicity * h(tf, std::sqrt(kt.lambda_upper - 0.25));
    MultiplicityBound mb;
    mb.bound = numer / ht;
    mb.implied_max_multiplicity = static_cast<int>(std::floor(mb.bound));
    if (std::abs(mb.bound - std::round(mb.bound)) < 1e-12)
        mb.implied_max_multiplicity = static_cast<int>(std::round(mb.bound)) - 1;
    mb.L = tf.L;
    mb.geometric_side_value = geometric_side_value;
    mb.eigenspace_index = 0;
    return mb;
}

SweepResult optimize_L(double lo, double hi, double step,
                       const std::function<double(double)>& bound_fn) {
    if (!(step > 0)) throw std::invalid_argument("optimize_L: step must be positive");
    SweepResult out;
    double best = std::numeric_limits<double>::infinity();
    const int count = static_cast<int>(std::floor((hi - lo) / step + 0.5)) + 1;
    for (int i = 0; i < count; ++i) {
        const double L = lo + i * step;
        const double b = bound_fn(L);
        out.table.push_back({L, b});
        if (b < best) {
            best = b;
            out.best_L = L;
        }
    }
    return out;
}

WeylReport weyl_check(const std::vector<double>& eigenvalues, double area) {
    if (eigenvalues.size() < 30) throw std::invalid_argument("weyl_check: need at least 30 eigenvalues");
    std::vector<double> sorted = eigenvalues;
    std::sort(sorted.begin(), sorted.end());
    // N(lambda_k) = k+1; slope through the origin fitted on the upper half.
    double num = 0, den = 0;
    for (size_t k = sorted.size() / 2; k < sorted.size(); ++k) {
        const double N = double(k + 1);
        num += N * sorted[k];
        den += sorted[k] * sorted[k];
    }
    WeylReport rep;
    rep.slope = num / den;
    rep.expected = area / (4 * M_PI);
    rep.rel_error = std::abs(rep.slope - rep.expected) / rep.expected;
    return rep;
}

std::string sweep_csv(const SweepResult& sweep) {
    std::ostringstream os;
    os << "L,bound\n";
    char buf[96];
    for (const auto& p : sweep.table) {
        std::snprintf(buf, sizeof buf, "%.6g,%.12g\n", p.L, p.bound);
        os << buf;
    }
    return os.str();
}

}  // namespace hyplace::selberg
