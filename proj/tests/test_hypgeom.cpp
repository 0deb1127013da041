#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hyplace/hypgeom.hpp"

using namespace hyplace::hypgeom;
using complexd = std::complex<double>;

namespace {
std::mt19937 rng(7);
HyperbolicPoint random_half_plane() {
    std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(0.1, 3.0);
    return HyperbolicPoint::half_plane({ux(rng), uy(rng)});
}
HyperbolicPoint random_disk() {
    std::uniform_real_distribution<double> ur(0.0, 0.95), ua(0.0, 2 * M_PI);
    const double r = ur(rng), a = ua(rng);
    return HyperbolicPoint::disk({r * std::cos(a), r * std::sin(a)});
}
}  // namespace

TEST_CASE("distance identities") {
    const auto i = HyperbolicPoint::half_plane({0, 1});
    CHECK(dist(i, i) == doctest::Approx(0.0).epsilon(1e-15));
    const auto i2 = HyperbolicPoint::half_plane({0, 2});
    CHECK(dist(i, i2) == doctest::Approx(std::log(2.0)).epsilon(1e-14));

    // cosh(rho) = 1 + 2u cross-check on random pairs
    for (int k = 0; k < 100; ++k) {
        const auto p = random_half_plane(), q = random_half_plane();
        const double rho = dist(p, q);
        const double u = std::norm(p.coord - q.coord) /
                         (4 * p.coord.imag() * q.coord.imag());
        CHECK(std::abs(std::cosh(rho) - (1 + 2 * u)) < 1e-12 * (1 + 2 * u));
    }
}

TEST_CASE("distance is a metric") {
    for (int k = 0; k < 1000; ++k) {
        const auto a = random_half_plane(), b = random_half_plane(), c = random_half_plane();
        const double ab = dist(a, b), ba = dist(b, a), ac = dist(a, c), cb = dist(c, b);
        CHECK(ab >= 0);
        CHECK(std::abs(ab - ba) < 1e-10);
        CHECK(ab <= ac + cb + 1e-10);
    }
}

TEST_CASE("cayley transform") {
    const auto origin = HyperbolicPoint::disk({0, 0});
    CHECK(std::abs(cayley(origin).coord - complexd(0, 1)) < 1e-15);

    for (int k = 0; k < 50; ++k) {
        const auto p = random_disk();
        const auto back = cayley_inverse(cayley(p));
        CHECK(std::abs(back.coord - p.coord) < 1e-14);
    }
    // isometry: disk distances computed through the half plane agree
    for (int k = 0; k < 50; ++k) {
        const auto p = random_disk(), q = random_disk();
        CHECK(std::abs(dist(p, q) - dist(cayley(p), cayley(q))) < 1e-12);
    }
}

TEST_CASE("mobius classification") {
    MobiusTransform hyp{2 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0), Orientation::Preserving};
    CHECK(classify(hyp) == IsometryClass::Hyperbolic);

    MobiusTransform id{1, 0, 0, 1, Orientation::Preserving};
    CHECK(classify(id) == IsometryClass::Identity);

    const double th = M_PI / 4;
    MobiusTransform ell{std::cos(th), -std::sin(th), std::sin(th), std::cos(th),
                        Orientation::Preserving};
    CHECK(classify(ell) == IsometryClass::Elliptic);

    MobiusTransform par{1, 1, 0, 1, Orientation::Preserving};
    CHECK(classify(par) == IsometryClass::Parabolic);

    MobiusTransform refl{-1, 0, 0, 1, Orientation::Reversing};
    CHECK(classify(refl) == IsometryClass::Reflection);

    MobiusTransform glide{-2 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0), Orientation::Reversing};
    CHECK(classify(glide) == IsometryClass::GlideReflection);
}

TEST_CASE("isometries preserve the distance") {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int k = 0; k < 200; ++k) {
        double a = 1 + std::abs(u(rng)), b = u(rng), c = u(rng) * 0.2;
        double d = (1 + b * c) / a;  // det 1
        MobiusTransform t{a, b, c, d, Orientation::Preserving};
        const auto p = random_half_plane(), q = random_half_plane();
        const auto tp = HyperbolicPoint::half_plane(t.apply(p.coord));
        const auto tq = HyperbolicPoint::half_plane(t.apply(q.coord));
        CHECK(std::abs(dist(p, q) - dist(tp, tq)) < 1e-10);
    }
    // a reversing isometry also preserves distances
    MobiusTransform s{-1, 0, 0, 1, Orientation::Reversing};
    for (int k = 0; k < 100; ++k) {
        const auto p = random_half_plane(), q = random_half_plane();
        const auto sp = HyperbolicPoint::half_plane(s.apply(p.coord));
        const auto sq = HyperbolicPoint::half_plane(s.apply(q.coord));
        CHECK(std::abs(dist(p, q) - dist(sp, sq)) < 1e-10);
    }
}

TEST_CASE("right-angled triangle sides") {
    const auto [a8, b8, c8] = triangle_sides({2, 3, 8});
    CHECK(a8 == doctest::Approx(0.7642).epsilon(5e-5 / 0.7642));
    CHECK(b8 == doctest::Approx(0.3635).epsilon(5e-5 / 0.3635));
    CHECK(c8 == doctest::Approx(0.8607).epsilon(5e-5 / 0.8607));

    const auto [a7, b7, c7] = triangle_sides({2, 3, 7});
    CHECK(a7 == doctest::Approx(0.545).epsilon(1e-3));
    CHECK(b7 == doctest::Approx(0.283).epsilon(2e-3));
    CHECK(c7 == doctest::Approx(0.621).epsilon(1e-3));

    // both Theorem 2.30 identities hold simultaneously
    for (int n : {7, 8, 12}) {
        const auto [a, b, c] = triangle_sides({2, 3, n});
        const double alpha = M_PI / 3, beta = M_PI / n;
        CHECK(std::abs(std::cosh(c) - 1 / (std::tan(alpha) * std::tan(beta))) < 1e-12);
        CHECK(std::abs(std::cos(alpha) - std::cosh(a) * std::sin(beta)) < 1e-12);
        CHECK(std::abs(std::cos(beta) - std::cosh(b) * std::sin(alpha)) < 1e-12);
    }

    CHECK_THROWS_AS(triangle_sides({3, 3, 4}), domain_error);
    CHECK_THROWS_AS(triangle_sides({2, 3, 6}), domain_error);  // flat, not hyperbolic
}

TEST_CASE("triangle areas and Gauss-Bonnet tilings") {
    CHECK(triangle_area({2, 3, 7}) == doctest::Approx(M_PI / 42).epsilon(1e-15));
    CHECK(triangle_area({2, 3, 8}) == doctest::Approx(M_PI / 24).epsilon(1e-15));
    CHECK(triangle_area({2, 3, 12}) == doctest::Approx(M_PI / 12).epsilon(1e-15));

    CHECK(std::abs(96 * triangle_area({2, 3, 8}) - 4 * M_PI) < 1e-12);
    CHECK(std::abs(336 * triangle_area({2, 3, 7}) - 8 * M_PI) < 1e-12);
    CHECK(std::abs(240 * triangle_area({2, 4, 5}) - 12 * M_PI) < 1e-12);
}

TEST_CASE("disk geometry") {
    // disk of area pi has circumference 2 pi sinh(2 arcsinh(1/2))
    const double r = disk_radius_from_area(M_PI);
    const auto g = disk_geometry(r);
    CHECK(g.area == doctest::Approx(M_PI).epsilon(1e-14));
    CHECK(g.circumference == doctest::Approx(7.02481).epsilon(1e-5));

    // Euclidean limit
    CHECK(disk_geometry(1e-6).area / (M_PI * 1e-12) == doctest::Approx(1.0).epsilon(1e-9));

    for (double rr = 0.1; rr < 3.0; rr += 0.17)
        CHECK(disk_radius_from_area(disk_geometry(rr).area) == doctest::Approx(rr).epsilon(1e-12));
}

TEST_CASE("annulus geometry") {
    for (double l : {0.5, 1.5286, 2.0})
        for (double w : {0.3, 1.0, 2.0}) {
            const auto g = annulus_geometry(l, w);
            CHECK(std::abs(g.boundary_length * g.boundary_length - g.area * g.area - 4 * l * l) <
                  1e-9 * (1 + g.boundary_length * g.boundary_length));
        }
    // the glued annulus boundary of Section 3.4
    const double boundary = 2 * std::acosh(2 * std::cos(M_PI / 8) / std::sqrt(3.0)) +
                            2 * std::acosh((1 / std::tan(M_PI / 8)) / std::sqrt(3.0)) +
                            4 * std::acosh(0.5 / std::sin(M_PI / 8));
    CHECK(boundary == doctest::Approx(5.50559).epsilon(1e-5));
    // symmetrized annulus of area pi over the Bolza core geodesic
    const double l = 2 * std::acosh(0.5 / std::sin(M_PI / 8));
    const double rho = std::asinh(M_PI / (2 * l));
    CHECK(annulus_geometry(l, rho).area == doctest::Approx(M_PI).epsilon(1e-12));
}

TEST_CASE("fermi coordinates") {
    const auto base = fermi_to_halfplane({0, 0, 1.5});
    CHECK(std::abs(base.coord - complexd(0, 1)) < 1e-14);

    std::uniform_real_distribution<double> ur(-1.5, 1.5), ut(0.0, 1.0);
    const double l = 2 * std::acosh(0.5 / std::sin(M_PI / 8));
    for (int k = 0; k < 100; ++k) {
        FermiPoint f{ur(rng), ut(rng) * l, l};
        const auto z = fermi_to_halfplane(f);
        const auto back = halfplane_to_fermi(z, l);
        CHECK(std::abs(back.rho - f.rho) < 1e-12);
        CHECK(std::abs(back.theta - f.theta) < 1e-12);

        // rho is the signed distance to the imaginary axis: minimize over it
        double best = 1e9, at = 0;
        for (double s = -4; s < 4; s += 0.02) {
            const double d = dist(z, HyperbolicPoint::half_plane({0, std::exp(s)}));
            if (d < best) {
                best = d;
                at = s;
            }
        }
        double lo = at - 0.03, hi = at + 0.03;  // ternary refinement
        for (int it = 0; it < 80; ++it) {
            const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            const double d1 = dist(z, HyperbolicPoint::half_plane({0, std::exp(m1)}));
            const double d2 = dist(z, HyperbolicPoint::half_plane({0, std::exp(m2)}));
            if (d1 < d2)
                hi = m2;
            else
                lo = m1;
        }
        best = dist(z, HyperbolicPoint::half_plane({0, std::exp(0.5 * (lo + hi))}));
        CHECK(std::abs(best - std::abs(f.rho)) < 1e-10);
    }

    // periodicity: theta and theta + l map to points identified by the generator
    FermiPoint f{0.7, 0.3, l};
    FermiPoint g{0.7, 0.3 + l, l};
    const auto zf = fermi_to_halfplane(f), zg = fermi_to_halfplane(g);
    CHECK(std::abs(zg.coord - std::exp(l) * zf.coord) < 1e-12 * std::abs(zg.coord));
}
