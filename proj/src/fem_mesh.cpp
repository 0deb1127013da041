#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "hyplace/fem.hpp"
#include "hyplace/hypgeom.hpp"

namespace hyplace::fem {

namespace {

double dist2(Vec2 a, Vec2 b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

double hyp_dist(Vec2 a, Vec2 b) {
    using namespace hyplace::hypgeom;
    return dist(HyperbolicPoint::disk({a.x, a.y}), HyperbolicPoint::disk({b.x, b.y}));
}

// ---------------- incremental Delaunay with walking location ----------------

struct Delaunay {
    struct Tri {
        int v[3];
        int n[3];  // neighbor opposite v[i], -1 if none
        bool alive = true;
    };
    std::vector<Vec2> pts;
    std::vector<Tri> tris;
    int hint = 0;

    static double orient(Vec2 a, Vec2 b, Vec2 c) {
        return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    }

    static bool in_circumcircle(Vec2 a, Vec2 b, Vec2 c, Vec2 p) {
        const double ax = a.x - p.x, ay = a.y - p.y;
        const double bx = b.x - p.x, by = b.y - p.y;
        const double cx = c.x - p.x, cy = c.y - p.y;
        const double det = (ax * ax + ay * ay) * (bx * cy - cx * by) -
                           (bx * bx + by * by) * (ax * cy - cx * ay) +
                           (cx * cx + cy * cy) * (ax * by - bx * ay);
        return det > 0;  // strict, CCW triangles
    }

    int locate(Vec2 p) const {
        int cur = hint;
        if (cur < 0 || cur >= static_cast<int>(tris.size()) || !tris[cur].alive) {
            cur = -1;
            for (int i = static_cast<int>(tris.size()) - 1; i >= 0; --i)
                if (tris[i].alive) {
                    cur = i;
                    break;
                }
        }
        for (int steps = 0; steps < static_cast<int>(tris.size()) + 8; ++steps) {
            const Tri& t = tris[cur];
            int next = -1;
            for (int e = 0; e < 3; ++e) {
                const Vec2 a = pts[t.v[(e + 1) % 3]], b = pts[t.v[(e + 2) % 3]];
                if (orient(a, b, p) < 0) {
                    next = t.n[e];
                    break;
                }
            }
            if (next == -1) return cur;
            cur = next;
        }
        // fallback: linear scan
        for (int i = 0; i < static_cast<int>(tris.size()); ++i) {
            if (!tris[i].alive) continue;
            const Tri& t = tris[i];
            bool in = true;
            for (int e = 0; e < 3 && in; ++e)
                if (orient(pts[t.v[(e + 1) % 3]], pts[t.v[(e + 2) % 3]], p) < -1e-14) in = false;
            if (in) return i;
        }
        return -1;
    }

    void build(const std::vector<Vec2>& input) {
        pts = input;
        tris.clear();
        const int n = static_cast<int>(pts.size());
        double lo = 1e30, hi = -1e30;
        for (const auto& p : pts) {
            lo = std::min({lo, p.x, p.y});
            hi = std::max({hi, p.x, p.y});
        }
        const double d = (hi - lo) * 30 + 1;
        const double cx = 0.5 * (lo + hi);
        pts.push_back({cx - d, cx - d / 2});
        pts.push_back({cx + d, cx - d / 2});
        pts.push_back({cx, cx + d});
        Tri t0;
        t0.v[0] = n;
        t0.v[1] = n + 1;
        t0.v[2] = n + 2;
        t0.n[0] = t0.n[1] = t0.n[2] = -1;
        if (orient(pts[n], pts[n + 1], pts[n + 2]) < 0) std::swap(t0.v[1], t0.v[2]);
        tris.push_back(t0);
        hint = 0;
        for (int i = 0; i < n; ++i) insert(i);
        // drop triangles touching the super-triangle
        std::vector<std::array<int, 3>> keep;
        for (const auto& t : tris)
            if (t.alive && t.v[0] < n && t.v[1] < n && t.v[2] < n)
                keep.push_back({t.v[0], t.v[1], t.v[2]});
        pts.resize(n);
        final_tris = std::move(keep);
    }

    std::vector<std::array<int, 3>> final_tris;

    void insert(int ip) {
        const Vec2 p = pts[ip];
        const int start = locate(p);
        if (start < 0) return;  // should not happen inside the super-triangle
        // BFS the cavity
        std::vector<int> bad{start};
        std::set<int> inbad{start};
        for (size_t q = 0; q < bad.size(); ++q) {
            const Tri& t = tris[bad[q]];
            for (int e = 0; e < 3; ++e) {
                const int nb = t.n[e];
                if (nb < 0 || inbad.count(nb)) continue;
                const Tri& tn = tris[nb];
                if (in_circumcircle(pts[tn.v[0]], pts[tn.v[1]], pts[tn.v[2]], p)) {
                    inbad.insert(nb);
                    bad.push_back(nb);
                }
            }
        }
        // cavity boundary: directed edges of bad triangles facing good/none
        struct BEdge {
            int u, v, outer;
        };
        std::vector<BEdge> bound;
        for (int bi : bad) {
            const Tri& t = tris[bi];
            for (int e = 0; e < 3; ++e) {
                const int nb = t.n[e];
                if (nb >= 0 && inbad.count(nb)) continue;
                bound.push_back({t.v[(e + 1) % 3], t.v[(e + 2) % 3], nb});
            }
        }
        for (int bi : bad) tris[bi].alive = false;
        std::map<std::pair<int, int>, int> half;  // directed edge (a,b) -> new tri id
        std::vector<int> created;
        for (const auto& be : bound) {
            Tri t;
            t.v[0] = be.u;
            t.v[1] = be.v;
            t.v[2] = ip;
            t.n[2] = be.outer;  // opposite ip is the (u, v) edge
            t.n[0] = t.n[1] = -1;
            const int id = static_cast<int>(tris.size());
            tris.push_back(t);
            created.push_back(id);
            if (be.outer >= 0) {
                Tri& out = tris[be.outer];
                for (int e = 0; e < 3; ++e) {
                    const int a = out.v[(e + 1) % 3], b = out.v[(e + 2) % 3];
                    if ((a == be.v && b == be.u) || (a == be.u && b == be.v)) out.n[e] = id;
                }
            }
            half[{be.u, be.v}] = id;
        }
        // link new triangles around ip: edge (v, ip) of tri (u,v,ip) meets
        // edge (ip, v) of the neighbor whose boundary edge starts at v
        for (int id : created) {
            Tri& t = tris[id];
            const int u = t.v[0], v = t.v[1];
            // neighbor across (v, ip) is the new tri whose u' == v
            for (int jd : created)
                if (tris[jd].v[0] == v) t.n[0] = jd;  // opposite u
            for (int jd : created)
                if (tris[jd].v[1] == u) t.n[1] = jd;  // opposite v
        }
        hint = created.empty() ? hint : created.back();
    }
};

struct BoundaryLoop {
    std::vector<Vec2> nodes;
    std::vector<std::vector<int>> side_nodes;
};

BoundaryLoop sample_boundary(const FundamentalPolygon& poly, int n_per_side) {
    BoundaryLoop loop;
    const int ns = static_cast<int>(poly.sides.size());
    for (int s = 0; s < ns; ++s) {
        const auto& side = poly.sides[s];
        std::vector<int> ids;
        for (int k = 0; k <= n_per_side; ++k) {
            const double t = side.t0 + (side.t1 - side.t0) * k / n_per_side;
            const Vec2 p = side.at(t);
            if (k == 0 && s > 0) {
                ids.push_back(loop.side_nodes[s - 1].back());
                continue;
            }
            if (k == n_per_side && s == ns - 1) {
                ids.push_back(loop.side_nodes[0].front());
                continue;
            }
            loop.nodes.push_back(p);
            ids.push_back(static_cast<int>(loop.nodes.size()) - 1);
        }
        loop.side_nodes.push_back(std::move(ids));
    }
    return loop;
}

bool point_in_loop(const std::vector<Vec2>& loop_pts, Vec2 p) {
    bool in = false;
    const int n = static_cast<int>(loop_pts.size());
    for (int i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = loop_pts[i];
        const Vec2& b = loop_pts[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xint = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
            if (p.x < xint) in = !in;
        }
    }
    return in;
}

double seg_dist2(Vec2 a, Vec2 b, Vec2 p) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double l2 = vx * vx + vy * vy;
    double t = l2 > 0 ? ((p.x - a.x) * vx + (p.y - a.y) * vy) / l2 : 0;
    t = std::clamp(t, 0.0, 1.0);
    return dist2({a.x + t * vx, a.y + t * vy}, p);
}

double min_angle_of(const std::vector<Vec2>& pts, const std::array<int, 3>& t) {
    double worst = M_PI;
    for (int e = 0; e < 3; ++e) {
        const Vec2 a = pts[t[e]], b = pts[t[(e + 1) % 3]], c = pts[t[(e + 2) % 3]];
        const double ux = b.x - a.x, uy = b.y - a.y, vx = c.x - a.x, vy = c.y - a.y;
        const double ang = std::acos(std::clamp(
            (ux * vx + uy * vy) / (std::hypot(ux, uy) * std::hypot(vx, vy)), -1.0, 1.0));
        worst = std::min(worst, ang);
    }
    return worst;
}

Vec2 circumcenter(Vec2 a, Vec2 b, Vec2 c) {
    const double d = 2 * (a.x * (b.y - c.y) + b.x * (c.y - a.y) + c.x * (a.y - b.y));
    const double a2 = a.x * a.x + a.y * a.y, b2 = b.x * b.x + b.y * b.y,
                 c2 = c.x * c.x + c.y * c.y;
    return {(a2 * (b.y - c.y) + b2 * (c.y - a.y) + c2 * (a.y - b.y)) / d,
            (a2 * (c.x - b.x) + b2 * (a.x - c.x) + c2 * (b.x - a.x)) / d};
}

// deterministic tiny jitter to break cocircular lattice ties
double jitter(int i, int axis) {
    unsigned h = static_cast<unsigned>(i) * 2654435761u + static_cast<unsigned>(axis) * 97u;
    h ^= h >> 16;
    h *= 2246822519u;
    h ^= h >> 13;
    return (double(h % 20011u) / 20011.0 - 0.5);
}

}  // namespace

Mesh generate_mesh(const FundamentalPolygon& poly, int n_per_side) {
    if (n_per_side < 4) throw mesh_error("generate_mesh: need n_per_side >= 4");

    const BoundaryLoop loop = sample_boundary(poly, n_per_side);
    const int nb = static_cast<int>(loop.nodes.size());

    std::vector<double> seglen;
    for (const auto& sn : loop.side_nodes)
        for (size_t k = 0; k + 1 < sn.size(); ++k)
            seglen.push_back(std::sqrt(dist2(loop.nodes[sn[k]], loop.nodes[sn[k + 1]])));
    std::nth_element(seglen.begin(), seglen.begin() + seglen.size() / 2, seglen.end());
    const double h = seglen[seglen.size() / 2];

    std::vector<Vec2> all = loop.nodes;
    double lox = 1e30, hix = -1e30, loy = 1e30, hiy = -1e30;
    for (const auto& p : loop.nodes) {
        lox = std::min(lox, p.x);
        hix = std::max(hix, p.x);
        loy = std::min(loy, p.y);
        hiy = std::max(hiy, p.y);
    }
    auto clearance_ok = [&](Vec2 p, double clear) {
        const double c2 = clear * clear;
        for (const auto& sn : loop.side_nodes)
            for (size_t k = 0; k + 1 < sn.size(); ++k)
                if (seg_dist2(loop.nodes[sn[k]], loop.nodes[sn[k + 1]], p) < c2) return false;
        return true;
    };
    const double dy = h * std::sqrt(3.0) / 2;
    int row = 0, gi = 0;
    for (double y = loy + 0.4 * h; y < hiy; y += dy, ++row) {
        const double off = (row % 2) ? 0.5 * h : 0.0;
        for (double x = lox + 0.4 * h + off; x < hix; x += h, ++gi) {
            const Vec2 p{x + 2e-3 * h * jitter(gi, 0), y + 2e-3 * h * jitter(gi, 1)};
            if (point_in_loop(loop.nodes, p) && clearance_ok(p, 0.62 * h)) all.push_back(p);
        }
    }

    Delaunay dt;
    auto inside = [&](Vec2 p) { return point_in_loop(loop.nodes, p); };
    auto rebuild_and_cull = [&](std::vector<Vec2>& points) {
        dt.build(points);
        std::vector<std::array<int, 3>> keep;
        for (const auto& t : dt.final_tris) {
            const Vec2 g{(dt.pts[t[0]].x + dt.pts[t[1]].x + dt.pts[t[2]].x) / 3,
                         (dt.pts[t[0]].y + dt.pts[t[1]].y + dt.pts[t[2]].y) / 3};
            if (inside(g)) keep.push_back(t);
        }
        dt.final_tris.swap(keep);
    };
    rebuild_and_cull(all);

    // Laplacian smoothing of interior nodes
    for (int pass = 0; pass < 3; ++pass) {
        std::vector<Vec2> acc(dt.pts.size(), {0, 0});
        std::vector<int> cnt(dt.pts.size(), 0);
        for (const auto& t : dt.final_tris)
            for (int e = 0; e < 3; ++e) {
                const int u = t[e], v = t[(e + 1) % 3];
                acc[u].x += dt.pts[v].x;
                acc[u].y += dt.pts[v].y;
                cnt[u]++;
                acc[v].x += dt.pts[u].x;
                acc[v].y += dt.pts[u].y;
                cnt[v]++;
            }
        std::vector<Vec2> np = dt.pts;
        for (size_t i = nb; i < dt.pts.size(); ++i)
            if (cnt[i] > 0) {
                const Vec2 cand{acc[i].x / cnt[i], acc[i].y / cnt[i]};
                if (inside(cand) && clearance_ok(cand, 0.55 * h)) np[i] = cand;
            }
        rebuild_and_cull(np);
    }

    std::set<int> corner_nodes;
    for (const auto& sn : loop.side_nodes) corner_nodes.insert(sn.front());

    for (int round = 0; round < 8; ++round) {
        bool changed = false;
        std::vector<Vec2> np = dt.pts;
        for (const auto& t : dt.final_tris) {
            if (min_angle_of(dt.pts, t) >= 20.0 * M_PI / 180) continue;
            if (corner_nodes.count(t[0]) || corner_nodes.count(t[1]) || corner_nodes.count(t[2]))
                continue;
            const Vec2 cc = circumcenter(dt.pts[t[0]], dt.pts[t[1]], dt.pts[t[2]]);
            if (inside(cc) && clearance_ok(cc, 0.55 * h)) {
                np.push_back(cc);
                changed = true;
            }
        }
        if (!changed) break;
        rebuild_and_cull(np);
    }

    Mesh mesh;
    mesh.verts = dt.pts;
    mesh.tris = dt.final_tris;
    for (auto& t : mesh.tris)
        if (Delaunay::orient(mesh.verts[t[0]], mesh.verts[t[1]], mesh.verts[t[2]]) < 0)
            std::swap(t[1], t[2]);

    std::set<std::pair<int, int>> edges;
    for (const auto& t : mesh.tris)
        for (int e = 0; e < 3; ++e)
            edges.insert({std::min(t[e], t[(e + 1) % 3]), std::max(t[e], t[(e + 1) % 3])});
    for (const auto& sn : loop.side_nodes)
        for (size_t k = 0; k + 1 < sn.size(); ++k)
            if (!edges.count({std::min(sn[k], sn[k + 1]), std::max(sn[k], sn[k + 1])}))
                throw mesh_error("generate_mesh: boundary segment missing from the triangulation");

    mesh.boundary_side_of_vert.assign(mesh.verts.size(), -1);
    for (size_t s = 0; s < loop.side_nodes.size(); ++s)
        for (int v : loop.side_nodes[s])
            if (mesh.boundary_side_of_vert[v] == -1)
                mesh.boundary_side_of_vert[v] = static_cast<int>(s);
    mesh.side_chains = loop.side_nodes;

    // ---- periodic identification by matched boundary indices ----
    std::vector<int> uf(mesh.verts.size());
    std::iota(uf.begin(), uf.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
    };

    // Orientation-preserving side pairings of a CCW boundary always match the
    // two sides in opposite traversal order: node k of A to node (m - k) of B.
    // The identified samples must realize an isometry, checked by comparing
    // pairwise hyperbolic distances along the matched chains.
    double worst_residual = 0;
    for (const auto& pr : poly.pairings) {
        const auto& A = loop.side_nodes[pr.side_a];
        const auto& B = loop.side_nodes[pr.side_b];
        const int m = static_cast<int>(A.size()) - 1;
        double worst = 0;
        for (int k = 1; k <= m; ++k)
            worst = std::max(worst, std::abs(hyp_dist(mesh.verts[A[0]], mesh.verts[A[k]]) -
                                             hyp_dist(mesh.verts[B[m]], mesh.verts[B[m - k]])));
        worst_residual = std::max(worst_residual, worst);
        if (worst > 1e-8) throw mesh_error("generate_mesh: paired sides are not isometric samplings");
        for (int k = 0; k <= m; ++k) unite(A[k], B[pr.reversed ? m - k : k]);
    }
    mesh.pairing_residual = worst_residual;
    for (size_t i = 0; i < uf.size(); ++i) uf[i] = find(static_cast<int>(i));
    mesh.vert_rep = uf;

    double worst_angle = M_PI;
    for (const auto& t : mesh.tris) worst_angle = std::min(worst_angle, min_angle_of(mesh.verts, t));
    mesh.min_angle_deg = worst_angle * 180 / M_PI;
    return mesh;
}

}  // namespace hyplace::fem
