#include "hyplace/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hyplace::specfun {

namespace {
constexpr int kMaxTerms = 1000000;

bool near_nonpositive_integer(complexd c) {
    if (std::abs(c.imag()) > 1e-13) return false;
    const double r = c.real();
    return r < 0.5 && std::abs(r - std::round(r)) < 1e-13;
}
}  // namespace

SpectralParameter SpectralParameter::from_lambda(double lambda) {
    SpectralParameter p;
    p.lambda = lambda;
    if (lambda >= 0.25)
        p.s = complexd(0.5, std::sqrt(lambda - 0.25));
    else
        p.s = complexd(0.5 + std::sqrt(0.25 - lambda), 0.0);
    return p;
}

void SpectralParameter::validate() const {
    const complexd prod = s * (1.0 - s);
    if (std::abs(prod - complexd(lambda, 0)) > 1e-12)
        throw series_error("spectral parameter violates lambda = s(1-s)");
}

SeriesResult hyp2f1(complexd a, complexd b, complexd c, complexd z, double tol) {
    if (std::abs(z) >= 1.0) throw series_error("hyp2f1: series needs |z| < 1");
    if (near_nonpositive_integer(c)) throw series_error("hyp2f1: c is a nonpositive integer");

    // Symmetric accumulation in (a, b): the term recursion multiplies by
    // (a+k)(b+k) whose product is symmetric, so 2F1(a,b;c;z) == 2F1(b,a;c;z)
    // bit for bit.
    complexd term(1.0, 0.0);
    complexd sum = term;
    double accum_mag = 1.0;
    int consecutive_small = 0;
    int k = 0;
    double prev_real = 1.0;
    bool alternating = true;
    double last_abs = 1.0;
    for (; k < kMaxTerms; ++k) {
        const complexd factor = (a + complexd(k)) * (b + complexd(k)) /
                                ((c + complexd(k)) * complexd(k + 1));
        term *= factor * z;
        sum += term;
        accum_mag = std::max(accum_mag, std::abs(sum));
        const double tmag = std::abs(term);
        if (std::abs(term.imag()) > 1e-13 * (1.0 + tmag) ||
            prev_real * term.real() > 0 || tmag > last_abs)
            alternating = false;
        prev_real = term.real();
        last_abs = tmag;
        if (tmag < tol * accum_mag) {
            if (++consecutive_small >= 2) break;
        } else {
            consecutive_small = 0;
        }
    }
    if (k >= kMaxTerms) throw series_error("hyp2f1: no convergence within the term cap");

    SeriesResult out;
    out.value = sum;
    out.terms_used = k + 1;
    const double r = std::abs(z);
    if (alternating) {
        out.truncation_bound = std::abs(term);
    } else {
        // Geometric tail once the term ratio has settled near |z|.
        out.truncation_bound = std::abs(term) * r / std::max(1e-300, 1.0 - r);
    }
    return out;
}

complexd hyp2f1_pfaff(complexd a, complexd b, complexd c, complexd z, double tol) {
    if (std::abs(z) < 0.5) return hyp2f1(a, b, c, z, tol).value;
    // Pfaff: 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)).
    const complexd w = z / (z - 1.0);
    const complexd pref = std::exp(-a * std::log(1.0 - z));
    return pref * hyp2f1(a, c - b, c, w, tol).value;
}

double legendre_pms(complexd s, double r, double tol) {
    // Pfaff continuation keeps the argument tanh^2(r/2) inside (0, 1) for
    // every radius, not just the disk areas with |z| < 1.
    const complexd z(0.5 * (1.0 - std::cosh(r)), 0.0);
    return hyp2f1_pfaff(s, 1.0 - s, complexd(1.0), z, tol).real();
}

double legendre_disk_f(double t, double x_area, double tol) {
    const complexd z(-x_area / (4.0 * M_PI), 0.0);
    return hyp2f1(complexd(0.5, -t), complexd(0.5, t), complexd(1.0), z, tol).value.real();
}

namespace {

// All real roots of a cubic via Cardano with the three cube-root branches.
std::vector<double> cardano_all_real(double a, double b, double c, double d) {
    const complexd D0(b * b - 3 * a * c, 0);
    const complexd D1(2 * b * b * b - 9 * a * b * c + 27 * a * a * d, 0);
    const complexd inner = std::sqrt(D1 * D1 - 4.0 * D0 * D0 * D0);
    complexd base = (D1 + inner) / 2.0;
    if (std::abs(base) < 1e-300) base = (D1 - inner) / 2.0;
    const complexd C0 = std::pow(base, 1.0 / 3.0);
    const complexd omega(-0.5, std::sqrt(3.0) / 2.0);
    std::vector<double> roots;
    for (int j = 0; j < 3; ++j) {
        complexd C = C0;
        for (int i = 0; i < j; ++i) C *= omega;
        if (std::abs(C) < 1e-300) continue;
        const complexd x = -(complexd(b) + C + D0 / C) / (3.0 * a);
        if (std::abs(x.imag()) < 1e-8 * (1.0 + std::abs(x.real()))) roots.push_back(x.real());
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

double legendre_partial_lower_zero(double x_area) {
    if (!(x_area > 0) || x_area >= 4 * M_PI)
        throw series_error("legendre_partial_lower_zero: need 0 < x < 4 pi");
    const double z = -x_area / (4.0 * M_PI);
    // f3(u) = 1 + (1/4+u) z + (1/4+u)(9/4+u) z^2/4 + (1/4+u)(9/4+u)(25/4+u) z^3/36
    // as a cubic in u = t^2.  Coefficients by expansion.
    const double z2 = z * z / 4.0, z3 = z * z * z / 36.0;
    // (1/4+u)(9/4+u) = u^2 + 10/4 u + 9/16
    // (1/4+u)(9/4+u)(25/4+u) = u^3 + 35/4 u^2 + 259/16 u + 225/64
    const double c3 = z3;
    const double c2 = z2 + (35.0 / 4.0) * z3;
    const double c1 = z + (10.0 / 4.0) * z2 + (259.0 / 16.0) * z3;
    const double c0 = 1.0 + 0.25 * z + (9.0 / 16.0) * z2 + (225.0 / 64.0) * z3;
    double first = std::numeric_limits<double>::infinity();
    for (double u : cardano_all_real(c3, c2, c1, c0))
        if (u > 0 && u < first) first = u;
    if (!std::isfinite(first)) throw series_error("legendre_partial_lower_zero: no positive root");
    return first + 0.25;
}

bool f3_vanishes_at_23_over_4() {
    // f3(u) at u = 23/4 with z = -1/4, over the common denominator 2304:
    //   1 - 6/4 + 6*8/64 - 6*8*12/2304  ->  2304 - 3456 + 1728 - 576.
    const std::int64_t num = 2304 - 3456 + 1728 - 576;
    return num == 0;
}

double cylinder_eigenfunction(Parity parity, int k, const SpectralParameter& s,
                              double core_length, double rho) {
    if (!(core_length > 0)) throw series_error("cylinder_eigenfunction: core length must be positive");
    const double sh = std::sinh(rho);
    const complexd z(-sh * sh, 0.0);
    const complexd shift(0.0, M_PI * k / core_length);
    const complexd logch(std::log(std::cosh(rho)), 0.0);
    const complexd pref = std::exp(2.0 * shift * logch);  // cosh^(2 pi i k / l)
    if (parity == Parity::Odd) {
        const complexd a = (1.0 + s.s) / 2.0 + shift;
        const complexd b = (2.0 - s.s) / 2.0 + shift;
        const complexd f = hyp2f1_pfaff(a, b, complexd(1.5), z);
        return (sh * pref * f).real();
    }
    const complexd a = s.s / 2.0 + shift;
    const complexd b = (1.0 - s.s) / 2.0 + shift;
    const complexd f = hyp2f1_pfaff(a, b, complexd(0.5), z);
    return (pref * f).real();
}

SeriesResult polylog(int n, double z, double tol) {
    if (n < 2) throw series_error("polylog: need n >= 2");
    if (!(std::abs(z) < 1)) throw series_error("polylog: need |z| < 1");
    SeriesResult out;
    if (z == 0) {
        out.value = 0;
        out.terms_used = 0;
        return out;
    }
    double sum = 0, p = 1;
    int k = 1;
    for (; k < kMaxTerms; ++k) {
        p *= z;
        const double term = p / std::pow(double(k), n);
        sum += term;
        if (std::abs(p) / (1.0 - std::abs(z)) < tol * std::max(1.0, std::abs(sum))) break;
    }
    out.value = sum;
    out.terms_used = k;
    out.truncation_bound = std::pow(std::abs(z), k + 1) / (1.0 - std::abs(z));
    return out;
}

double li3_upper_hybrid(double z, int k_exact) {
    if (!(z > 0 && z < 1)) throw series_error("li3_upper_hybrid: need z in (0,1)");
    double bound = z / (1.0 - z);
    double p = z;
    for (int k = 2; k <= k_exact; ++k) {
        p *= z;
        bound -= (1.0 - 1.0 / (double(k) * k * k)) * p;
    }
    return bound;
}

double li3_lower_partial(double z, int terms) {
    if (!(z > 0 && z < 1)) throw series_error("li3_lower_partial: need z in (0,1)");
    double sum = 0, p = 1;
    for (int k = 1; k <= terms; ++k) {
        p *= z;
        sum += p / (double(k) * k * k);
    }
    return sum;
}

DuplicationResidual dilog_duplication_check(double z) {
    if (!(std::abs(z) < 1)) throw series_error("dilog_duplication_check: need |z| < 1");
    DuplicationResidual r;
    const double z2 = z * z;
    r.dilog = polylog(2, z).real() + polylog(2, -z).real() - 0.5 * polylog(2, z2).real();
    r.trilog = polylog(3, z).real() + polylog(3, -z).real() - 0.25 * polylog(3, z2).real();
    return r;
}

double Rational128::to_double() const {
    return static_cast<double>(num) / static_cast<double>(den);
}

namespace {
__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        const __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}
}  // namespace

Rational128 zeta3_lower(int terms) {
    if (terms < 1) throw series_error("zeta3_lower: need at least one term");
    if (terms > 30)
        throw series_error(
            "zeta3_lower: exact 128-bit rationals hold up to 30 terms (lcm(1..30)^3)");
    // common denominator D = lcm(1..terms)^3; every D/k^3 is an exact integer
    // and the numerator stays below ~1.21 D < 2^127.
    __int128 lcm = 1;
    for (int k = 2; k <= terms; ++k) {
        const __int128 g = gcd128(lcm, k);
        lcm = lcm / g * k;
    }
    const __int128 D = lcm * lcm * lcm;
    __int128 num = 0;
    for (int k = 1; k <= terms; ++k) {
        const __int128 k3 = static_cast<__int128>(k) * k * k;
        num += D / k3;
    }
    const __int128 g = gcd128(num, D);
    Rational128 r;
    r.num = num / g;
    r.den = D / g;
    return r;
}

double pade_sec2_interval_end() {
    const double l = 2.0 * std::acosh(0.5 / std::sin(M_PI / 8));
    return 2.0 * std::atan(std::tanh(0.5 * std::asinh(M_PI / l)));
}

PadeSec2 pade_sec2(double x) {
    if (x < 0 || x > pade_sec2_interval_end() + 1e-12)
        throw series_error("pade_sec2: x outside [0, phi]");
    const double x2 = x * x, x4 = x2 * x2;
    const double num = 13.0 * x4 / 945.0 + 11.0 * x2 / 63.0 + 1.0;
    const double den = 163.0 * x4 / 945.0 - 52.0 * x2 / 63.0 + 1.0;
    PadeSec2 out;
    out.value = num / den;
    out.error_bound = 59.0 * std::pow(x, 10) / 297675.0;
    return out;
}

double cardano_real_root(double a, double b, double c, double d) {
    if (a == 0) throw series_error("cardano_real_root: degree must be 3");
    const auto roots = cardano_all_real(a, b, c, d);
    if (roots.empty()) throw series_error("cardano_real_root: no real root found");
    // Return the root with smallest cubic residual.
    auto res = [&](double x) {
        return std::abs(((a * x + b) * x + c) * x + d) /
               (std::abs(a * x * x * x) + std::abs(b * x * x) + std::abs(c * x) + std::abs(d) + 1e-300);
    };
    double best = roots[0];
    for (double r : roots)
        if (res(r) < res(best)) best = r;
    return best;
}

std::vector<QuarticRoot> ferrari_roots(double a, double b, double c, double d, double e) {
    if (a == 0) throw series_error("ferrari_roots: degree must be 4");
    const double p = (8 * a * c - 3 * b * b) / (8 * a * a);
    const double q = (8 * a * a * d - 4 * a * b * c + b * b * b) / (8 * a * a * a);
    const complexd D0(12 * a * e - 3 * b * d + c * c, 0);
    const complexd D1(-72 * a * c * e + 27 * a * d * d + 27 * b * b * e - 9 * b * c * d + 2 * c * c * c, 0);
    const complexd omega(-0.5, std::sqrt(3.0) / 2.0);
    const complexd inner = std::sqrt(D1 * D1 - 4.0 * D0 * D0 * D0);
    complexd base = (D1 + inner) / 2.0;
    if (std::abs(base) < 1e-300) base = (D1 - inner) / 2.0;

    // Pick the cube-root branch that avoids a degenerate resolvent S = 0.
    complexd S(0, 0);
    complexd Q0 = std::pow(base, 1.0 / 3.0);
    for (int j = 0; j < 3; ++j) {
        complexd Q = Q0;
        for (int i = 0; i < j; ++i) Q *= omega;
        if (std::abs(Q) < 1e-300) continue;
        const complexd cand = 0.5 * std::sqrt((D0 / Q + Q) / (3.0 * a) - complexd(2.0 * p / 3.0));
        if (std::abs(cand) > std::abs(S)) S = cand;
    }
    std::vector<QuarticRoot> out;
    const double shift = -b / (4 * a);
    if (std::abs(S) < 1e-12) {
        // Degenerate resolvent: the depressed quartic is biquadratic-like;
        // factor x^4 + p x^2 + r0 directly.
        const double r0 = e / a + shift * (d / a + shift * (c / a + shift * (b / a + shift)));
        const complexd disc = std::sqrt(complexd(p * p - 4 * r0, 0));
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1}) {
                const complexd y2 = (-p + double(s1) * disc) / 2.0;
                const complexd r = double(s2) * std::sqrt(y2) + shift;
                out.push_back({r, std::abs(r.imag()) < 1e-8 * (1 + std::abs(r))});
            }
        return out;
    }
    for (int s1 : {-1, 1}) {
        // x = shift - S +- sqrt(-4S^2 - 2p + q/S)/2 and the +S branch with -q/S.
        const complexd inner2 = -4.0 * S * S - 2.0 * p - double(s1) * complexd(q) / S;
        const complexd sq = std::sqrt(inner2);
        for (int s2 : {-1, 1}) {
            const complexd r = shift + double(s1) * S + 0.5 * double(s2) * sq;
            out.push_back({r, std::abs(r.imag()) < 1e-8 * (1 + std::abs(r))});
        }
    }
    return out;
}

}  // namespace hyplace::specfun
