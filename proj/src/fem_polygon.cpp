#include <cmath>
#include <stdexcept>

#include "hyplace/fem.hpp"
#include "hyplace/quadrature.hpp"

namespace hyplace::fem {

SurfaceId surface_from_string(const std::string& name) {
    if (name == "bolza") return SurfaceId::Bolza;
    if (name == "klein") return SurfaceId::Klein;
    if (name == "fermat") return SurfaceId::Fermat;
    if (name == "m3") return SurfaceId::M3;
    if (name == "z10") return SurfaceId::Z10;
    if (name == "12gon" || name == "twelvegon") return SurfaceId::TwelveGon;
    if (name == "bring") return SurfaceId::Bring;
    if (name == "triangle238" || name == "238") return SurfaceId::Triangle238;
    if (name == "triangle237" || name == "237") return SurfaceId::Triangle237;
    if (name == "pentagon") return SurfaceId::Pentagon;
    throw std::invalid_argument("unknown surface: " + name);
}

std::string to_string(SurfaceId id) {
    switch (id) {
        case SurfaceId::Bolza: return "bolza";
        case SurfaceId::Klein: return "klein";
        case SurfaceId::Fermat: return "fermat";
        case SurfaceId::M3: return "m3";
        case SurfaceId::Z10: return "z10";
        case SurfaceId::TwelveGon: return "12gon";
        case SurfaceId::Bring: return "bring";
        case SurfaceId::Triangle238: return "triangle238";
        case SurfaceId::Triangle237: return "triangle237";
        case SurfaceId::Pentagon: return "pentagon";
    }
    return "?";
}

namespace {

Vec2 rot(double phi, Vec2 p) {
    const double c = std::cos(phi), s = std::sin(phi);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Rotated circle side shared by all the closed-surface polygons:
// point(t) = Rot(phi) . (cx + r cos t, cy + sigma r sin t).
Side circle_side(double phi, double cx, double cy, double sigma, double r, double t0, double t1,
                 const std::string& label) {
    Side s;
    s.t0 = t0;
    s.t1 = t1;
    s.label = label;
    s.at = [=](double t) { return rot(phi, {cx + r * std::cos(t), cy + sigma * r * std::sin(t)}); };
    s.dat = [=](double t) { return rot(phi, {-r * std::sin(t), sigma * r * std::cos(t)}); };
    return s;
}

Side segment_side(Vec2 a, Vec2 b, const std::string& label) {
    Side s;
    s.t0 = 0;
    s.t1 = 1;
    s.label = label;
    s.at = [=](double t) { return Vec2{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; };
    s.dat = [=](double) { return Vec2{b.x - a.x, b.y - a.y}; };
    return s;
}

// regular polygons: n copies of the base arc rotated by k * step
void regular_sides(FundamentalPolygon& p, int n, double step, double c, double r, double t0,
                   double t1) {
    for (int k = 0; k < n; ++k)
        p.sides.push_back(circle_side(k * step, c, 0.0, 1.0, r, t0, t1, "G" + std::to_string(k + 1)));
}

// alternating reflected polygons (M3, Fermat, Bring, 12-gon):
// odd 1-based sides use +cy with t decreasing, even use the mirrored copy.
void alternating_sides(FundamentalPolygon& p, int n, double step, double cx, double cy, double r,
                       double ta, double tb) {
    for (int k = 1; k <= n; ++k) {
        const std::string label = "G" + std::to_string(k);
        if (k % 2 == 1)
            p.sides.push_back(circle_side((k - 1) / 2 * step, cx, cy, 1.0, r, ta, tb, label));
        else
            p.sides.push_back(circle_side(k / 2 * step, cx, -cy, -1.0, r, tb, ta, label));
    }
}

void add_pairings(FundamentalPolygon& p, std::initializer_list<std::pair<int, int>> pairs1based) {
    for (auto [a, b] : pairs1based) p.pairings.push_back({a - 1, b - 1, true});
}

}  // namespace

FundamentalPolygon build_polygon(SurfaceId id) {
    FundamentalPolygon p;
    p.id = id;
    switch (id) {
        case SurfaceId::Bolza: {
            const double r = 0.4550898605622276, c = 1.09868411346781;
            regular_sides(p, 8, M_PI / 4, c, r, 5 * M_PI / 4, 3 * M_PI / 4);
            add_pairings(p, {{1, 5}, {2, 6}, {3, 7}, {4, 8}});
            p.expected_area = 4 * M_PI;
            p.genus = 2;
            break;
        }
        case SurfaceId::Klein: {
            const double r = 0.254875473, c = 1.031969722;
            regular_sides(p, 14, M_PI / 7, c, r, 9 * M_PI / 7, 5 * M_PI / 7);
            // sides 2n+1 and 2n+6 (mod 14)
            add_pairings(p, {{1, 6}, {3, 8}, {5, 10}, {7, 12}, {9, 14}, {11, 2}, {13, 4}});
            p.expected_area = 8 * M_PI;
            p.genus = 3;
            break;
        }
        case SurfaceId::Z10: {
            const double r = 0.4133042381223985, c = 1.082044543098821;
            regular_sides(p, 10, M_PI / 5, c, r, 6 * M_PI / 5, 4 * M_PI / 5);
            add_pairings(p, {{1, 4}, {3, 6}, {5, 8}, {7, 10}, {9, 2}});
            p.expected_area = 4 * M_PI;
            p.genus = 2;
            break;
        }
        case SurfaceId::TwelveGon: {
            const double cx = 1.0206207261596574, cy = 0.3535533905932733, r = 0.4082482904638626;
            alternating_sides(p, 12, M_PI / 3, cx, cy, r, 4 * M_PI / 3, M_PI);
            add_pairings(p, {{2, 5}, {4, 7}, {6, 9}, {8, 11}, {10, 1}, {12, 3}});
            p.expected_area = 4 * M_PI;
            p.genus = 2;
            break;
        }
        case SurfaceId::M3: {
            const double cx = 1.0122, cy = 0.1566, r = 0.2214;
            alternating_sides(p, 24, M_PI / 6, cx, cy, r, 15 * M_PI / 12, 11 * M_PI / 12);
            add_pairings(p, {{2, 9}, {4, 11}, {6, 13}, {8, 15}, {10, 17}, {12, 19},
                             {14, 21}, {16, 23}, {18, 1}, {20, 3}, {22, 5}, {24, 7}});
            p.expected_area = 8 * M_PI;
            p.genus = 3;
            break;
        }
        case SurfaceId::Fermat: {
            const double cx = 1.0044, cy = 0.2275, r = 0.2463;
            alternating_sides(p, 16, M_PI / 4, cx, cy, r, 11 * M_PI / 8, 7 * M_PI / 8);
            add_pairings(p, {{1, 6}, {3, 8}, {5, 10}, {7, 12}, {9, 14}, {11, 16}, {13, 2}, {15, 4}});
            p.expected_area = 8 * M_PI;
            p.genus = 3;
            break;
        }
        case SurfaceId::Bring: {
            const double cx = 1.00156, cy = 0.17178, r = 0.180621;
            alternating_sides(p, 20, M_PI / 5, cx, cy, r, 7 * M_PI / 5, 4 * M_PI / 5);
            add_pairings(p, {{1, 14}, {3, 12}, {5, 18}, {7, 16}, {9, 2},
                             {11, 20}, {13, 6}, {15, 4}, {17, 10}, {19, 8}});
            p.expected_area = 12 * M_PI;
            p.genus = 4;
            break;
        }
        case SurfaceId::Triangle238: {
            const double x1 = 0.4056163087774724, x2 = 0.33681578765748216;
            const double yc = 0.5946036542842016, rr = 1.189207445439991, xc = 1.435500206409523;
            p.sides.push_back(segment_side({0, 0}, {x1, 0}, "G1"));
            {
                Side s;  // the arc, a graph over x from x1 to x2
                s.t0 = x1;
                s.t1 = x2;
                s.label = "G3";
                s.at = [=](double t) {
                    return Vec2{t, yc - std::sqrt(rr * rr - (t - xc) * (t - xc))};
                };
                s.dat = [=](double t) {
                    return Vec2{1.0, (t - xc) / std::sqrt(rr * rr - (t - xc) * (t - xc))};
                };
                p.sides.push_back(s);
            }
            p.sides.push_back(
                segment_side({x2, x2 * std::tan(M_PI / 8)}, {0, 0}, "G2"));
            p.expected_area = M_PI / 24;
            break;
        }
        case SurfaceId::Triangle237: {
            const double x1 = 0.2660772452600879, t2 = 0.3007426187463789;
            const double c = 2.012192172612278, rr = 1.74611492735219;
            p.sides.push_back(segment_side({0, 0}, {x1, 0}, "G1"));
            {
                Side s;
                s.t0 = M_PI;
                s.t1 = 3.066792828504322;
                s.label = "G3";
                s.at = [=](double t) { return Vec2{c + rr * std::cos(t), rr * std::sin(t)}; };
                s.dat = [=](double t) { return Vec2{-rr * std::sin(t), rr * std::cos(t)}; };
                p.sides.push_back(s);
            }
            p.sides.push_back(
                segment_side({t2 * std::cos(M_PI / 7), t2 * std::sin(M_PI / 7)}, {0, 0}, "G2"));
            p.expected_area = M_PI / 42;
            break;
        }
        case SurfaceId::Pentagon: {
            const double r = 0.643594;
            const double cx = 2 * r * std::cos(M_PI / 8);
            // the printed 0.545613 is this corner abscissa rounded
            const double seg = cx - r;
            auto angle = [](double t) { return (9 - 2 * t) * M_PI / 8; };
            {
                Side s;  // G1: circle at (cx, 0), t in [0.5, 1]
                s.t0 = 0.5;
                s.t1 = 1;
                s.label = "G1";
                s.at = [=](double t) {
                    return Vec2{cx + r * std::cos(angle(t)), r * std::sin(angle(t))};
                };
                s.dat = [=](double t) {
                    const double da = -M_PI / 4;
                    return Vec2{-r * std::sin(angle(t)) * da, r * std::cos(angle(t)) * da};
                };
                p.sides.push_back(s);
            }
            {
                Side s;  // G2: the rotated copy, t in [-1, 0]
                s.t0 = -1;
                s.t1 = 0;
                s.label = "G2";
                s.at = [=](double t) {
                    const Vec2 c0 = rot(M_PI / 4, {cx, 0});
                    return Vec2{c0.x + r * std::cos(angle(t)), c0.y + r * std::sin(angle(t))};
                };
                s.dat = [=](double t) {
                    const double da = -M_PI / 4;
                    return Vec2{-r * std::sin(angle(t)) * da, r * std::cos(angle(t)) * da};
                };
                p.sides.push_back(s);
            }
            {
                Side s;  // G3: mirror of G1 across y = x, t in [1, 0.5]
                s.t0 = 1;
                s.t1 = 0.5;
                s.label = "G3";
                s.at = [=](double t) {
                    return Vec2{r * std::sin(angle(t)), cx + r * std::cos(angle(t))};
                };
                s.dat = [=](double t) {
                    const double da = -M_PI / 4;
                    return Vec2{r * std::cos(angle(t)) * da, -r * std::sin(angle(t)) * da};
                };
                p.sides.push_back(s);
            }
            p.sides.push_back(segment_side({0, seg}, {0, 0}, "G4"));
            p.sides.push_back(segment_side({0, 0}, {seg, 0}, "G5"));
            p.expected_area = M_PI / 2;
            break;
        }
    }
    return p;
}

double FundamentalPolygon::hyperbolic_area() const {
    // Green's theorem with F = 2(-y, x)/(1 - x^2 - y^2):
    // area = contour integral of 2 (x dy - y dx) / (1 - |z|^2).
    double area = 0;
    for (const auto& s : sides) {
        area += quadr::adaptive(
            [&](double t) {
                const Vec2 p = s.at(t);
                const Vec2 d = s.dat(t);
                return 2 * (p.x * d.y - p.y * d.x) / (1 - p.x * p.x - p.y * p.y);
            },
            s.t0, s.t1, 1e-11);
    }
    return std::abs(area);
}

double FundamentalPolygon::side_hyperbolic_length(int side) const {
    const auto& s = sides.at(side);
    return std::abs(quadr::adaptive(
        [&](double t) {
            const Vec2 p = s.at(t);
            const Vec2 d = s.dat(t);
            return 2 * std::hypot(d.x, d.y) / (1 - p.x * p.x - p.y * p.y);
        },
        s.t0, s.t1, 1e-11));
}

double FundamentalPolygon::corner_closure_residual() const {
    double worst = 0;
    const int n = static_cast<int>(sides.size());
    for (int i = 0; i < n; ++i) {
        const Vec2 a = sides[i].at(sides[i].t1);
        const Vec2 b = sides[(i + 1) % n].at(sides[(i + 1) % n].t0);
        worst = std::max(worst, std::hypot(a.x - b.x, a.y - b.y));
    }
    return worst;
}

}  // namespace hyplace::fem
