#include "hyplace/varbounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hyplace/grouprep.hpp"
#include "hyplace/quadrature.hpp"
#include "hyplace/specfun.hpp"

namespace hyplace::varbounds {

namespace {

double sq(double v) { return v * v; }

// Bolza domain constants (Section 3.3).
const double kQ = std::sqrt(3 + 2 * std::sqrt(2.0) - 2 * std::sqrt(4 + 3 * std::sqrt(2.0)));
const double kB = std::pow(2.0, 0.25) - 1.0;
const double kCsc8 = 1.0 / std::sin(M_PI / 8);
const double kCot8 = 1.0 / std::tan(M_PI / 8);

// Klein domain constants (Section 4.3).
double klein_exp() {
    const double s3 = std::sqrt(3.0);
    const double e = std::acosh(2 * std::cos(M_PI / 7) / s3) +
                     std::acosh((1.0 / std::tan(M_PI / 7)) / s3) +
                     std::acosh(0.5 / std::sin(M_PI / 7));
    return std::exp(4 * e);
}
const double kE = klein_exp();
const double kR = std::sqrt((-(std::cos(M_PI / 14) - 1) * kE + 1 + std::cos(M_PI / 14)) /
                            ((1 + std::cos(M_PI / 14)) * kE + 1 - std::cos(M_PI / 14)));
const double kP = std::sin(M_PI / 14) * (kE - 1) /
                  ((1 + std::cos(M_PI / 14)) * kE + 1 - std::cos(M_PI / 14));
const double kCsc14 = 1.0 / std::sin(M_PI / 14);
const double kCot14 = 1.0 / std::tan(M_PI / 14);

// published bracket: value known to 1e-6, printed as trunc(value 1e6) -+ 1
std::pair<long, long> paper_bracket(double v) {
    const long r = static_cast<long>(std::trunc(v * 1e6));
    return {r - 1, r + 1};
}

}  // namespace

PlanarDomain bolza_domain() {
    PlanarDomain d;
    d.x_lo = 0;
    d.x_hi = kB;
    d.lower_curve = [](double x) { return std::sqrt(kQ * kQ - x * x); };
    d.upper_curve = [](double x) { return std::sqrt(kCsc8 * kCsc8 - sq(x + kCot8)); };
    return d;
}

PlanarDomain klein_domain() {
    PlanarDomain d;
    d.x_lo = 0;
    d.x_hi = kP;
    d.lower_curve = [](double x) { return std::sqrt(kR * kR - x * x); };
    d.upper_curve = [](double x) { return std::sqrt(kCsc14 * kCsc14 - sq(x + kCot14)); };
    return d;
}

TestFunction test_function(TestFunctionId id) {
    TestFunction f;
    f.id = id;
    switch (id) {
        case TestFunctionId::BolzaPhi1:
            f.value = [](double x, double y) {
                return (y - std::sqrt(1 - 22 * x * x) - 1) * (y - std::sqrt(kQ * kQ - x * x));
            };
            f.gradient = [](double x, double y) {
                const double A = 1 + std::sqrt(1 - 22 * x * x);
                const double B = std::sqrt(kQ * kQ - x * x);
                const double dA = -22 * x / std::sqrt(1 - 22 * x * x);
                const double dB = -x / B;
                return std::pair<double, double>{-dA * (y - B) - dB * (y - A),
                                                 (y - A) + (y - B)};
            };
            break;
        case TestFunctionId::BolzaPhi2:
            f.value = [](double x, double y) {
                const double u = 11 * y / 2;
                const double t = u - std::pow(u, 3) / 6 + std::pow(u, 5) / 120 -
                                 std::pow(u, 7) / 5040 + std::pow(u, 9) / 362880 -
                                 std::pow(u, 11) / 39916800;
                return t * (1 - x * x / 100);
            };
            f.gradient = [](double x, double y) {
                const double u = 11 * y / 2;
                const double t = u - std::pow(u, 3) / 6 + std::pow(u, 5) / 120 -
                                 std::pow(u, 7) / 5040 + std::pow(u, 9) / 362880 -
                                 std::pow(u, 11) / 39916800;
                const double dt = 1 - u * u / 2 + std::pow(u, 4) / 24 - std::pow(u, 6) / 720 +
                                  std::pow(u, 8) / 40320 - std::pow(u, 10) / 3628800;
                return std::pair<double, double>{-2 * x / 100 * t, (1 - x * x / 100) * dt * 11 / 2};
            };
            break;
        case TestFunctionId::KleinPhi1:
            f.value = [](double x, double y) { return y - std::sqrt(kR * kR - x * x); };
            f.gradient = [](double x, double y) {
                (void)y;
                return std::pair<double, double>{x / std::sqrt(kR * kR - x * x), 1.0};
            };
            break;
    }
    return f;
}

double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    return quadr::simpson(f, a, b, n);
}

int simpson_n(double max_f4, double a, double b, double tol) {
    return quadr::simpson_n(max_f4, a, b, tol);
}

double estimate_max_f4(const std::function<double(double)>& f, double a, double b) {
    return quadr::estimate_max_f4(f, a, b);
}

namespace {

// integrand of the inner y-integral, divided by y^2 for norms
double inner_norm(const TestFunction& f, const PlanarDomain& dom, double x) {
    const double lo = dom.lower_curve(x);
    const double hi = dom.upper_curve(x);
    if (!(hi > lo)) return 0.0;
    return quadr::adaptive(
        [&](double y) {
            const double v = f.value(x, y);
            return v * v / (y * y);
        },
        lo, hi, 1e-12);
}

double inner_energy(const TestFunction& f, const PlanarDomain& dom, double x) {
    const double lo = dom.lower_curve(x);
    const double hi = dom.upper_curve(x);
    if (!(hi > lo)) return 0.0;
    return quadr::adaptive(
        [&](double y) {
            const auto [gx, gy] = f.gradient(x, y);
            return gx * gx + gy * gy;
        },
        lo, hi, 1e-12);
}

double inner_cross_norm(const TestFunction& f, const TestFunction& g, const PlanarDomain& dom,
                        double x) {
    const double lo = dom.lower_curve(x);
    const double hi = dom.upper_curve(x);
    if (!(hi > lo)) return 0.0;
    return quadr::adaptive(
        [&](double y) { return f.value(x, y) * g.value(x, y) / (y * y); }, lo, hi, 1e-12);
}

double inner_cross_energy(const TestFunction& f, const TestFunction& g, const PlanarDomain& dom,
                          double x) {
    const double lo = dom.lower_curve(x);
    const double hi = dom.upper_curve(x);
    if (!(hi > lo)) return 0.0;
    return quadr::adaptive(
        [&](double y) {
            const auto [fx, fy] = f.gradient(x, y);
            const auto [gx, gy] = g.gradient(x, y);
            return fx * gx + fy * gy;
        },
        lo, hi, 1e-12);
}

int default_n(const std::function<double(double)>& fx, double a, double b, double tol,
              int committed) {
    if (committed > 0) return committed;
    return quadr::simpson_n(quadr::estimate_max_f4(fx, a, b), a, b, tol);
}

}  // namespace

Bracket l2_norm_sq(const TestFunction& f, const PlanarDomain& dom, double tol, int outer_n) {
    auto fx = [&](double x) { return inner_norm(f, dom, x); };
    const int n = default_n(fx, dom.x_lo, dom.x_hi, tol, outer_n);
    const double v = quadr::simpson(fx, dom.x_lo, dom.x_hi, n);
    return {v - tol, v + tol, v};
}

SpectralBound dirichlet_energy(const TestFunction& f, const PlanarDomain& dom, double tol,
                               int outer_n) {
    auto fx = [&](double x) { return inner_energy(f, dom, x); };
    const int n = default_n(fx, dom.x_lo, dom.x_hi, tol, outer_n);
    const double v = quadr::simpson(fx, dom.x_lo, dom.x_hi, n);
    SpectralBound b;
    b.value = v + tol;
    b.direction = Direction::Upper;
    b.target = "dirichlet energy";
    b.method = Method::Rayleigh;
    b.error_budget = tol;
    return b;
}

namespace {

RayleighResult rayleigh_pipeline(const TestFunction& phi, const PlanarDomain& dom,
                                 const std::string& target, int n_norm, int n_energy) {
    RayleighResult r;
    r.n_norm = n_norm;
    r.n_energy = n_energy;
    r.norm = l2_norm_sq(phi, dom, 1e-6, n_norm);
    const auto energy = dirichlet_energy(phi, dom, 1e-6, n_energy);
    r.energy = energy.value - energy.error_budget;  // the Simpson value itself
    if (r.norm.lower <= 0) throw std::runtime_error("rayleigh: degenerate norm");
    SpectralBound b;
    // committed bound: the outward-rounded rationals at 1e-6 granularity,
    // matching the published brackets
    const auto num = paper_bracket(r.energy);
    const auto den = paper_bracket(r.norm.value);
    b.rational = std::make_pair(num.second, den.first);
    b.value = double(num.second) / double(den.first);
    b.direction = Direction::Upper;
    b.target = target;
    b.method = Method::Rayleigh;
    b.error_budget = 1e-6;
    r.bound = b;
    return r;
}

}  // namespace

RayleighResult rayleigh_upper_bolza() {
    return rayleigh_pipeline(test_function(TestFunctionId::BolzaPhi1), bolza_domain(),
                             "bolza lambda1", 90, 150);
}

RayleighResult rayleigh_upper_klein() {
    return rayleigh_pipeline(test_function(TestFunctionId::KleinPhi1), klein_domain(),
                             "klein lambda1", 1648, 2252);
}

SecondEigenvalueResult rayleigh_upper_second() {
    const auto dom = bolza_domain();
    const auto phi1 = test_function(TestFunctionId::BolzaPhi1);
    const auto phi2 = test_function(TestFunctionId::BolzaPhi2);

    // P = <phi1, phi2> with Simpson n = 146; paper bracket (-9662, -9660)e-6.
    auto px = [&](double x) { return inner_cross_norm(phi1, phi2, dom, x); };
    const double P = quadr::simpson(px, dom.x_lo, dom.x_hi, 146);
    const auto pb = paper_bracket(P);
    if (pb.first >= pb.second) throw std::runtime_error("rayleigh_upper_second: bracket inversion");

    // projection-coefficient brackets from the paper's explicit rationals
    const double c_lo = double(pb.first) / 28089.0;   // most negative
    const double c_hi = double(pb.second) / 28091.0;  // least negative
    if (!(c_lo < c_hi)) throw std::runtime_error("rayleigh_upper_second: coefficient bracket inversion");

    // norm of the Gram-Schmidt combination, bounded below (Equation 3.1 shape)
    auto v2 = [&](double x) {
        return inner_norm(phi2, dom, x) + 2 * (-c_hi) * px(x) + c_hi * c_hi * inner_norm(phi1, dom, x);
    };
    const double V = quadr::simpson(v2, dom.x_lo, dom.x_hi, 194);
    // gradient, bounded above with the other bracket end
    auto gv2 = [&](double x) {
        return inner_energy(phi2, dom, x) + 2 * (-c_lo) * inner_cross_energy(phi1, phi2, dom, x) +
               c_lo * c_lo * inner_energy(phi1, dom, x);
    };
    const double GV = quadr::simpson(gv2, dom.x_lo, dom.x_hi, 192);

    SecondEigenvalueResult out;
    out.inner_product = P;
    out.norm_tilde_lower = double(paper_bracket(V).first) / 1e6;
    out.energy_tilde_upper = double(paper_bracket(GV).second) / 1e6;
    SpectralBound b;
    b.value = out.energy_tilde_upper / out.norm_tilde_lower;
    b.direction = Direction::Upper;
    b.target = "bolza lambda2";
    b.method = Method::MinMax;
    b.error_budget = 1e-6;
    b.rational = std::make_pair(paper_bracket(GV).second, paper_bracket(V).first);
    out.bound = b;
    return out;
}

double nu(double x_area, double tol) {
    if (!(x_area > 0) || !(x_area < 4 * M_PI))
        throw std::invalid_argument("nu: need area in (0, 4 pi)");
    auto f = [&](double t) { return specfun::legendre_disk_f(t, x_area); };
    // scan t in [0, 50] for the first sign change, then bisect
    const int panels = 10000;
    double lo = 0, hi = -1;
    double prev = f(0);
    for (int i = 1; i <= panels; ++i) {
        const double t = 50.0 * i / panels;
        const double v = f(t);
        if (prev > 0 && v <= 0) {
            lo = 50.0 * (i - 1) / panels;
            hi = t;
            break;
        }
        prev = v;
    }
    if (hi < 0) throw std::runtime_error("nu: no sign change in the scan window");
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    const double t = 0.5 * (lo + hi);
    return t * t + 0.25;
}

std::vector<ScreeningRow> screen_irreps(const std::string& surface, double lambda1_upper,
                                        bool assume_conjecture) {
    std::vector<ScreeningRow> rows;
    const double nu_pi_lower = specfun::legendre_partial_lower_zero(M_PI);  // = 6
    if (surface == "bolza") {
        const auto& tbl = grouprep::bolza_irreps();
        for (int i = 0; i < static_cast<int>(tbl.irreps.size()); ++i) {
            ScreeningRow row;
            row.irrep = tbl.irreps[i].name;
            const int dim = tbl.irreps[i].dimension;
            if (i == 0) {
                row.verdict = Verdict::TrivialSpace;  // handled by the nodal argument
                rows.push_back(row);
                continue;
            }
            if (dim == 4) {
                if (assume_conjecture) {
                    // Conjecture 3.12: lambda_1(pentagon problem) > 4.15
                    row.verdict = 4.15 > lambda1_upper ? Verdict::RuledOut : Verdict::ConjectureDependent;
                    row.nu_lower = 4.15;
                } else {
                    row.verdict = Verdict::ConjectureDependent;
                }
                rows.push_back(row);
                continue;
            }
            const std::string domain = dim == 1 ? "triangle238" : "half444";
            double area = 0;
            for (const auto& ba : grouprep::boundary_assignment("bolza", i, domain))
                if (ba.closed_dirichlet_area) area = std::max(area, *ba.closed_dirichlet_area);
            row.closure_area = area;
            row.nu_lower = area <= M_PI + 1e-12 ? nu_pi_lower : nu(area, 1e-8);
            row.verdict = row.nu_lower > lambda1_upper ? Verdict::RuledOut : Verdict::Candidate;
            rows.push_back(row);
        }
        return rows;
    }
    if (surface == "klein") {
        const auto& tbl = grouprep::klein_irreps();
        for (int i = 0; i < static_cast<int>(tbl.irreps.size()); ++i) {
            ScreeningRow row;
            row.irrep = tbl.irreps[i].name;
            if (i == 0) {
                row.verdict = Verdict::TrivialSpace;
            } else if (tbl.irreps[i].dimension == 1) {
                const auto bas = grouprep::boundary_assignment("klein", i, "triangle237");
                row.closure_area = *bas[0].closed_dirichlet_area;
                row.nu_lower = nu_pi_lower;  // area pi/42 << pi
                row.verdict = row.nu_lower > lambda1_upper ? Verdict::RuledOut : Verdict::Candidate;
            } else {
                row.verdict = Verdict::Candidate;  // no boundary analysis in the paper
            }
            rows.push_back(row);
        }
        return rows;
    }
    throw std::invalid_argument("screen_irreps: unknown surface");
}

NodalArgument trivial_rep_nodal_argument(const std::string& surface, double lambda1_upper) {
    NodalArgument na;
    na.region_area = surface == "bolza" ? 2 * M_PI / 3 : M_PI / 3;
    na.nu_lower = specfun::legendre_partial_lower_zero(M_PI);  // nu_area >= nu_pi > 6
    na.verdict = na.nu_lower > lambda1_upper ? Verdict::RuledOut : Verdict::Candidate;
    return na;
}

std::vector<SpectralBound> genus_closed_bounds(int genus, double area) {
    if (genus < 2) throw std::invalid_argument("genus_closed_bounds: need genus >= 2");
    if (area <= 0) area = 4 * M_PI * (genus - 1);
    std::vector<SpectralBound> out;
    {
        SpectralBound b;  // lambda_1 Area <= 8 pi d with d = 2 holomorphic degree
        b.value = 8 * M_PI * 2 / area;
        b.direction = Direction::Upper;
        b.target = "lambda1 (degree-2 cover bound)";
        b.method = Method::ClosedForm;
        out.push_back(b);
    }
    {
        SpectralBound b;  // lambda_1 Area <= 8 pi floor((genus + 3)/2)
        b.value = 8 * M_PI * ((genus + 3) / 2) / area;
        b.direction = Direction::Upper;
        b.target = "lambda1 (immersion bound)";
        b.method = Method::ClosedForm;
        out.push_back(b);
    }
    return out;
}

std::string bounds_csv(const std::vector<SpectralBound>& bounds) {
    std::ostringstream os;
    os << "target,direction,value,rational,method,error_budget\n";
    char buf[160];
    for (const auto& b : bounds) {
        std::string rat;
        if (b.rational) rat = std::to_string(b.rational->first) + "/" + std::to_string(b.rational->second) + "e-6";
        const char* dir = b.direction == Direction::Upper ? "upper" : "lower";
        const char* m = b.method == Method::FaberKrahn   ? "faber-krahn"
                        : b.method == Method::Rayleigh   ? "rayleigh"
                        : b.method == Method::MinMax     ? "min-max"
                        : b.method == Method::TraceFormula ? "trace-formula"
                                                           : "closed-form";
        std::snprintf(buf, sizeof buf, "%s,%s,%.12g,%s,%s,%.3g\n", b.target.c_str(), dir, b.value,
                      rat.c_str(), m, b.error_budget);
        os << buf;
    }
    return os.str();
}

}  // namespace hyplace::varbounds
