#include "hyplace/cylinder.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hyplace/quadrature.hpp"
#include "hyplace/specfun.hpp"

namespace hyplace::cylinder {

namespace {
double core_length() { return 2.0 * std::acosh(0.5 / std::sin(M_PI / 8)); }
}  // namespace

AnnulusSpec bolza_annulus() {
    AnnulusSpec a;
    a.core_length = core_length();
    // Appendix F parametric plot constants, verbatim.
    a.arcs = {{1.0986840182524393, 0.4550896306919397},
              {2.5537741953480246, 1.3820929243421862},
              {5.066671210777469, 2.0986830534021754}};
    a.period_marker[0] = 1.0;
    a.period_marker[1] = 4.61158;
    return a;
}

double w(double rho, double t, double lambda) {
    const double l = core_length();
    const auto sp = specfun::SpectralParameter::from_lambda(lambda);
    const double p0 = specfun::cylinder_eigenfunction(specfun::Parity::Odd, 0, sp, l, rho);
    const double p1 = specfun::cylinder_eigenfunction(specfun::Parity::Odd, 1, sp, l, rho);
    const double p2 = specfun::cylinder_eigenfunction(specfun::Parity::Odd, 2, sp, l, rho);
    return p0 - 0.038 * std::sin(2 * M_PI * t / l - M_PI / 2) * p1 -
           0.0002 * std::cos(4 * M_PI * t / l) * p2;
}

double nodal_line(double t, double lambda) {
    double lo = 0.5, hi = 1.9;
    double flo = w(lo, t, lambda), fhi = w(hi, t, lambda);
    if (flo * fhi > 0) throw std::runtime_error("nodal_line: no sign change in [0.5, 1.9] at t=" + std::to_string(t));
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        const double fm = w(mid, t, lambda);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> annulus_boundary_fermi(double t) {
    const auto spec = bolza_annulus();
    const double l = spec.core_length;
    std::vector<double> out;
    for (double shift : {0.0, l, -l}) {
        const double et = std::exp(t + shift);
        for (const auto& c : spec.arcs) {
            // circle (x-c)^2 + y^2 = r^2 intersected with |z| = e^(t+shift)
            const double x = (et * et + c.center * c.center - c.radius * c.radius) / (2 * c.center);
            const double y2 = et * et - x * x;
            if (y2 > 0) out.push_back(std::asinh(x / std::sqrt(y2)));
        }
    }
    return out;
}

double boundary_envelope(double t) {
    const auto rhos = annulus_boundary_fermi(t);
    if (rhos.empty()) throw std::runtime_error("boundary_envelope: no arc at t");
    double best = rhos[0];
    for (double r : rhos) best = std::min(best, r);
    return best;
}

PositivityReport positivity_margin(int grid_density, double lambda) {
    const double l = core_length();
    PositivityReport rep;
    rep.min_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_density; ++i) {
        const double t = l * (i + 0.5) / grid_density;
        const double outer = boundary_envelope(t);
        for (int j = 1; j <= grid_density; ++j) {
            const double rho = outer * j / (grid_density + 1);
            const double v = w(rho, t, lambda);
            if (v < rep.min_value) {
                rep.min_value = v;
                rep.at_rho = rho;
                rep.at_t = t;
                rep.boundary_rho_at_t = outer;
            }
        }
    }
    return rep;
}

std::vector<SymmetrizationSample> symmetrization_check(int samples, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> amp(0.0, 0.25);
    std::uniform_real_distribution<double> base(0.4, 1.2);
    std::uniform_int_distribution<int> mode(1, 3);
    const double k = core_length();
    std::vector<SymmetrizationSample> out;
    for (int s = 0; s < samples; ++s) {
        double b1 = base(rng), b2 = base(rng);
        const double a1 = s == 0 ? 0.0 : amp(rng), a2 = s == 0 ? 0.0 : amp(rng);
        if (s == 0) b2 = b1;  // the symmetric constant annulus is the fixed point
        const int m1 = mode(rng), m2 = mode(rng);
        const double ph1 = amp(rng) * 8, ph2 = amp(rng) * 8;
        auto r1 = [&](double t) { return b1 + a1 * std::sin(2 * M_PI * m1 * t / k + ph1); };
        auto r2 = [&](double t) { return -(b2 + a2 * std::sin(2 * M_PI * m2 * t / k + ph2)); };
        auto dr1 = [&](double t) { return a1 * (2 * M_PI * m1 / k) * std::cos(2 * M_PI * m1 * t / k + ph1); };
        auto dr2 = [&](double t) { return -a2 * (2 * M_PI * m2 / k) * std::cos(2 * M_PI * m2 * t / k + ph2); };
        SymmetrizationSample smp;
        smp.area = quadr::adaptive(
            [&](double t) { return std::sinh(r1(t)) - std::sinh(r2(t)); }, 0, k, 1e-12);
        smp.boundary_length = quadr::adaptive(
            [&](double t) {
                const double c1 = std::cosh(r1(t)), c2 = std::cosh(r2(t));
                return std::sqrt(dr1(t) * dr1(t) + c1 * c1) + std::sqrt(dr2(t) * dr2(t) + c2 * c2);
            },
            0, k, 1e-12);
        const double rho0 = std::asinh(smp.area / (2 * k));
        smp.symmetrized_length = 2 * k * std::cosh(rho0);
        smp.holds = smp.boundary_length >= smp.symmetrized_length - 1e-8;
        out.push_back(smp);
    }
    return out;
}

HypothesisCheck thm_g3_hypothesis(double lambda, int grid_points) {
    const double phi = specfun::pade_sec2_interval_end();
    HypothesisCheck out;
    out.holds = true;
    out.margin = std::numeric_limits<double>::infinity();
    for (int i = 1; i < grid_points; ++i) {
        const double x = phi * i / grid_points;
        // -g''/g = 24/(5 - 4x^2) for g = x - 4x^3/5
        const double c = std::cos(x);
        const double m = 24.0 / (5.0 - 4.0 * x * x) - lambda / (c * c);
        if (m < out.margin) out.margin = m;
        if (m < 0 && !out.failure_x) {
            out.holds = false;
            out.failure_x = x;
        }
    }
    return out;
}

AppendixGBound appendix_g_bound(int grid_points) {
    AppendixGBound out;
    out.phi = specfun::pade_sec2_interval_end();

    // turning point of htilde: the positive real root of the even-degree
    // polynomial, quartic in x^2, found with Ferrari's method
    const auto roots = specfun::ferrari_roots(8476, -81120, -798345, 2664900, -893025);
    out.x1 = 0;
    for (const auto& r : roots) {
        if (!r.is_real || r.root.real() <= 0) continue;
        const double x = std::sqrt(r.root.real());
        if (x <= out.phi) out.x1 = x;
    }
    if (out.x1 == 0) throw std::runtime_error("appendix_g_bound: no admissible Ferrari root");

    auto htilde = [](double x) {
        return specfun::pade_sec2(x).value * (1.0 - 4.0 * x * x / 5.0);
    };
    out.htilde_max = htilde(out.x1);
    out.dx1 = 59.0 * std::pow(out.phi, 10) / 297675.0;
    out.bound = 24.0 / (5.0 * htilde(out.x1 - out.dx1));

    const auto check = thm_g3_hypothesis(out.bound, grid_points);
    out.hypothesis_at_bound = check.holds;
    out.hypothesis_margin = check.margin;
    out.failure_x = check.failure_x;

    // largest lambda passing the same grid: 24/(5-4x^2) >= lambda sec^2 x
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i < grid_points; ++i) {
        const double x = out.phi * i / grid_points;
        const double c = std::cos(x);
        best = std::min(best, 24.0 * c * c / (5.0 - 4.0 * x * x));
    }
    out.grid_certified_bound = best;
    return out;
}

std::string nodal_line_csv(int grid_points) {
    const double l = core_length();
    std::ostringstream os;
    os << "t,rho_nodal,rho_boundary\n";
    char buf[96];
    for (int i = 0; i < grid_points; ++i) {
        const double t = l * (i + 0.5) / grid_points;
        std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.10g\n", t, nodal_line(t),
                      boundary_envelope(t));
        os << buf;
    }
    return os.str();
}

}  // namespace hyplace::cylinder
