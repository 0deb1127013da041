#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hyplace/lengths.hpp"
#include "hyplace/quadrature.hpp"
#include "hyplace/selberg.hpp"

using namespace hyplace::selberg;
using hyplace::lengths::bolza_trace_spectrum;

TEST_CASE("h basics") {
    const TraceTestFunction tf{0.93};
    CHECK(h(tf, 0.0) == 1.0);
    CHECK(h(tf, 1.3) == h(tf, -1.3));
    for (double t = 0; t < 30; t += 0.37) {
        CHECK(h(tf, t) >= 0);
        CHECK(h(tf, t) <= 1.0);
    }
    // h(i/2) at L = 93/100 equals the displayed rational multiple of sinh^4
    const double expect = 1.6e9 * std::pow(std::sinh(93.0 / 200.0), 4) / 74805201.0;
    CHECK(h_imag(tf, 0.5) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("g support, parity, Fourier inversion") {
    for (double L : {0.75, 0.87, 0.93}) {
        const TraceTestFunction tf{L};
        for (double xi : {4 * L + 0.01, 5.0, 7.3}) {
            CHECK(std::abs(g(tf, xi)) < 1e-14);
            CHECK(std::abs(g(tf, -xi)) < 1e-14);
        }
        for (double xi : {0.3, 1.1, 2.9}) {
            CHECK(g(tf, xi) == g(tf, -xi));               // even, exactly
            CHECK(g_prime(tf, xi) == -g_prime(tf, -xi));  // odd derivative
        }
        // g(0) = 1/(3L) for the sinc^4 pair
        CHECK(g(tf, 0.0) == doctest::Approx(1.0 / (3 * L)).epsilon(1e-13));

        // numerical Fourier inversion reproduces h at sample points
        for (double t : {0.4, 1.7, 3.1}) {
            const double inv = hyplace::quadr::adaptive(
                [&](double xi) { return g(tf, xi) * std::cos(xi * t); }, 0.0, 4 * L, 1e-12);
            CHECK(std::abs(2 * inv - h(tf, t)) < 1e-8);
        }

        // int_0^inf h t dt = log 2 / L^2; half-period panels plus the
        // mean-of-sin^4 tail past the cut
        const double T = 4000.0;
        const double panel = 0.5 * M_PI / L;
        double integral = 3.0 / (16.0 * L * L * L * L * T * T);
        for (double lo = 0; lo < T; lo += panel)
            integral += hyplace::quadr::adaptive([&](double t) { return h(tf, t) * t; }, lo,
                                                 std::min(lo + panel, T), 5e-15);
        CHECK(std::abs(integral - std::log(2.0) / (L * L)) < 1e-10);
    }
}

TEST_CASE("identity term: two quadrature methods and the closed form") {
    for (double L : {0.75, 0.87, 0.93}) {
        const TraceTestFunction tf{L};
        const double a = identity_term(tf, 4 * M_PI, IdentityMethod::TanhForm);
        const double b = identity_term(tf, 4 * M_PI, IdentityMethod::TransformForm);
        const double c = identity_term_closed(tf, 4 * M_PI);
        CHECK(std::abs(a - b) < 1e-6);
        CHECK(std::abs(b - c) < 1e-9);
        CHECK(identity_term(tf, 1e-12) < 1e-10);  // linear in area
    }
    // the tanh < 1 relaxation at L = 3/4 equals 32 log 2 / 9 and upper-bounds
    // the tanh form
    const TraceTestFunction tf{0.75};
    const double relaxed = 2 * std::log(2.0) / (0.75 * 0.75);
    CHECK(relaxed == doctest::Approx(32 * std::log(2.0) / 9).epsilon(1e-15));
    CHECK(identity_term(tf, 4 * M_PI) < relaxed);
    // Klein area and L = 87/100: 40000 log 2 / 7569
    const TraceTestFunction tk{0.87};
    const double relaxed_k = 2 * (40000.0 / 20000.0) * std::log(2.0) / (0.87 * 0.87) * 1.0;
    CHECK(4 * std::log(2.0) / (0.87 * 0.87) ==
          doctest::Approx(40000.0 * std::log(2.0) / 7569.0).epsilon(1e-15));
    CHECK(identity_term(tk, 8 * M_PI) < 40000.0 * std::log(2.0) / 7569.0);
    (void)relaxed_k;
}

TEST_CASE("geometric side") {
    const auto spectrum = bolza_trace_spectrum();
    const TraceTestFunction tf{0.93};
    const double F = geometric_side(tf, spectrum, 4 * M_PI);
    CHECK(F == doctest::Approx(1.5946347).epsilon(2e-6));  // quadrature value

    // with 4L below the systole the length sum vanishes
    const TraceTestFunction small{0.75};
    CHECK(geometric_side(small, spectrum, 4 * M_PI) ==
          doctest::Approx(identity_term(small, 4 * M_PI)).epsilon(1e-12));
    CHECK(geometric_side(small, {}, 4 * M_PI) ==
          doctest::Approx(identity_term(small, 4 * M_PI)).epsilon(1e-12));

    // the certified upper bound regenerates the paper constants
    const auto cert = geometric_side_certified(tf, spectrum, 4 * M_PI);
    CHECK(cert.value == doctest::Approx(1.60267).epsilon(5e-4 / 1.60267));
    CHECK(cert.value > F);
    CHECK(cert.li3_e4L_upper == doctest::Approx(0.0248358).epsilon(1e-5));
    CHECK(cert.li3_eL_upper == doctest::Approx(0.417148).epsilon(1e-5));
    CHECK(cert.li3_e2L_lower == doctest::Approx(0.158852).epsilon(1e-5));
    CHECK(cert.zeta3_lower == doctest::Approx(1.20152).epsilon(1e-5));
}

TEST_CASE("multiplicity bounds") {
    const auto spectrum = bolza_trace_spectrum();
    const double lam1 = 116469.0 / 28089.0;
    const double lam2 = 1408244.0 / 252552.0;

    // Bolza E1 with the certified geometric side at L = 93/100
    const TraceTestFunction tf{0.93};
    const auto cert = geometric_side_certified(tf, spectrum, 4 * M_PI);
    const auto mb1 = multiplicity_bound(tf, cert.value, {}, lam1);
    CHECK(mb1.bound == doctest::Approx(5.87519).epsilon(5e-3 / 5.87519));
    CHECK(mb1.implied_max_multiplicity == 5);

    // Bolza E2 at L = 3/4 with the tanh < 1 relaxation
    const TraceTestFunction tf2{0.75};
    const double relaxed = 32 * std::log(2.0) / 9;
    const auto mb2 = multiplicity_bound(tf2, relaxed, {{lam1, 3}}, lam2);
    CHECK(mb2.bound == doctest::Approx(7.1091).epsilon(5e-3 / 7.1091));
    CHECK(mb2.implied_max_multiplicity == 7);

    // Klein at L = 87/100
    const TraceTestFunction tfk{0.87};
    const double relaxed_k = 40000.0 * std::log(2.0) / 7569.0;
    const auto mbk = multiplicity_bound(tfk, relaxed_k, {}, 84077.0 / 29997.0);
    CHECK(mbk.bound == doctest::Approx(10.0855).epsilon(1e-2 / 10.0855));
    CHECK(mbk.implied_max_multiplicity == 10);

    // monotone in the lambda upper bound (h decreasing there)
    const auto loose = multiplicity_bound(tf, cert.value, {}, lam1 + 0.1);
    CHECK(loose.bound >= mb1.bound);
}

TEST_CASE("L sweep finds 0.93") {
    const auto spectrum = bolza_trace_spectrum();
    auto bound_at = [&](double L) {
        const TraceTestFunction tf{L};
        const double F = geometric_side(tf, spectrum, 4 * M_PI);
        return multiplicity_bound(tf, F, {}, 116469.0 / 28089.0).bound;
    };
    const auto sweep = optimize_L(0.40, 1.00, 0.01, bound_at);
    CHECK(sweep.table.size() == 61);
    CHECK(sweep.best_L == doctest::Approx(0.93).epsilon(1e-12));

    // single-point range
    const auto single = optimize_L(0.8, 0.8, 0.01, bound_at);
    CHECK(single.table.size() == 1);
    CHECK(single.best_L == 0.8);

    // sweep values agree with direct calls
    for (const auto& p : sweep.table)
        if (std::abs(p.L - 0.75) < 1e-9 || std::abs(p.L - 0.93) < 1e-9)
            CHECK(p.bound == doctest::Approx(bound_at(p.L)).epsilon(1e-12));
}

TEST_CASE("weyl check") {
    // synthetic eigenvalues lambda_k = 4 pi k / Area give slope Area/(4 pi)
    std::vector<double> synth;
    const double area = 4 * M_PI;
    for (int k = 1; k <= 60; ++k) synth.push_back(4 * M_PI * k / area);
    const auto rep = weyl_check(synth, area);
    CHECK(rep.slope == doctest::Approx(rep.expected).epsilon(1e-12));

    CHECK_THROWS(weyl_check(std::vector<double>(10, 1.0), area));
}
