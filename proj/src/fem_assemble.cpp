#include <array>
#include <cmath>
#include <set>
#include <vector>

#include "hyplace/fem.hpp"

namespace hyplace::fem {

namespace {

// 7-point degree-5 triangle quadrature in barycentric coordinates.
struct QPoint {
    double l1, l2, l3, w;
};
const QPoint kQuad7[7] = {
    {1.0 / 3, 1.0 / 3, 1.0 / 3, 0.225},
    {0.059715871789770, 0.470142064105115, 0.470142064105115, 0.132394152788506},
    {0.470142064105115, 0.059715871789770, 0.470142064105115, 0.132394152788506},
    {0.470142064105115, 0.470142064105115, 0.059715871789770, 0.132394152788506},
    {0.797426985353087, 0.101286507323456, 0.101286507323456, 0.125939180544827},
    {0.101286507323456, 0.797426985353087, 0.101286507323456, 0.125939180544827},
    {0.101286507323456, 0.101286507323456, 0.797426985353087, 0.125939180544827},
};

double weight(double x, double y) {
    const double d = 1.0 - x * x - y * y;
    return 4.0 / (d * d);
}

}  // namespace

Assembled assemble(const Mesh& mesh, const FundamentalPolygon& poly, int element_order,
                   const std::vector<bool>& dirichlet_sides) {
    if (element_order != 1 && element_order != 2)
        throw mesh_error("assemble: element order must be 1 or 2");

    const int nv = static_cast<int>(mesh.verts.size());
    std::vector<bool> dirichlet_vert(nv, false);
    std::set<std::pair<int, int>> dirichlet_edges;  // by vertex reps
    if (!dirichlet_sides.empty()) {
        for (size_t s = 0; s < mesh.side_chains.size(); ++s) {
            if (s >= dirichlet_sides.size() || !dirichlet_sides[s]) continue;
            const auto& chain = mesh.side_chains[s];
            for (int v : chain) dirichlet_vert[v] = true;
            for (size_t k = 0; k + 1 < chain.size(); ++k) {
                const int a = mesh.rep(chain[k]), b = mesh.rep(chain[k + 1]);
                dirichlet_edges.insert({std::min(a, b), std::max(a, b)});
            }
        }
    }

    Assembled out;
    out.dof_of_vert.assign(nv, -1);
    int ndof = 0;
    // vertex dofs per union-find representative
    std::vector<int> dof_of_rep(nv, -2);
    for (int v = 0; v < nv; ++v) {
        const int r = mesh.rep(v);
        if (dirichlet_vert[v]) dof_of_rep[r] = -1;  // any Dirichlet wins on the class
    }
    for (int v = 0; v < nv; ++v) {
        const int r = mesh.rep(v);
        if (dof_of_rep[r] == -2) dof_of_rep[r] = ndof++;
    }
    for (int v = 0; v < nv; ++v) out.dof_of_vert[v] = dof_of_rep[mesh.rep(v)];

    // P2 midpoint dofs by unified edge key
    if (element_order == 2) {
        for (const auto& t : mesh.tris)
            for (int e = 0; e < 3; ++e) {
                const int a = mesh.rep(t[(e + 1) % 3]), b = mesh.rep(t[(e + 2) % 3]);
                const std::pair<int, int> key{std::min(a, b), std::max(a, b)};
                if (out.dof_of_edge.count(key)) continue;
                out.dof_of_edge[key] = dirichlet_edges.count(key) ? -1 : ndof++;
            }
    }
    out.ndof = ndof;

    std::vector<Eigen::Triplet<double>> tk, tm;
    tk.reserve(mesh.tris.size() * 36);
    tm.reserve(mesh.tris.size() * 36);

    for (const auto& t : mesh.tris) {
        const Vec2 p0 = mesh.verts[t[0]], p1 = mesh.verts[t[1]], p2 = mesh.verts[t[2]];
        const double ax = p1.x - p0.x, ay = p1.y - p0.y;
        const double bx = p2.x - p0.x, by = p2.y - p0.y;
        const double det = ax * by - ay * bx;  // 2 * area, positive
        const double area = 0.5 * det;
        // gradients of barycentric coordinates
        const double gl[3][2] = {{(ay - by) / det, (bx - ax) / det},
                                 {by / det, -bx / det},
                                 {-ay / det, ax / det}};

        const int nloc = element_order == 1 ? 3 : 6;
        int dofs[6];
        for (int i = 0; i < 3; ++i) dofs[i] = out.dof_of_vert[t[i]];
        if (element_order == 2)
            for (int e = 0; e < 3; ++e) {
                const int a = mesh.rep(t[(e + 1) % 3]), b = mesh.rep(t[(e + 2) % 3]);
                dofs[3 + e] = out.dof_of_edge.at({std::min(a, b), std::max(a, b)});
            }

        double ke[6][6] = {}, me[6][6] = {};
        for (const auto& q : kQuad7) {
            const double L[3] = {q.l1, q.l2, q.l3};
            double N[6], Gx[6], Gy[6];
            if (element_order == 1) {
                for (int i = 0; i < 3; ++i) {
                    N[i] = L[i];
                    Gx[i] = gl[i][0];
                    Gy[i] = gl[i][1];
                }
            } else {
                for (int i = 0; i < 3; ++i) {
                    N[i] = L[i] * (2 * L[i] - 1);
                    Gx[i] = (4 * L[i] - 1) * gl[i][0];
                    Gy[i] = (4 * L[i] - 1) * gl[i][1];
                }
                for (int e = 0; e < 3; ++e) {
                    const int i = (e + 1) % 3, j = (e + 2) % 3;
                    N[3 + e] = 4 * L[i] * L[j];
                    Gx[3 + e] = 4 * (L[i] * gl[j][0] + L[j] * gl[i][0]);
                    Gy[3 + e] = 4 * (L[i] * gl[j][1] + L[j] * gl[i][1]);
                }
            }
            const double x = q.l1 * p0.x + q.l2 * p1.x + q.l3 * p2.x;
            const double y = q.l1 * p0.y + q.l2 * p1.y + q.l3 * p2.y;
            const double wK = q.w * area;
            const double wM = wK * weight(x, y);
            for (int i = 0; i < nloc; ++i)
                for (int j = 0; j < nloc; ++j) {
                    ke[i][j] += wK * (Gx[i] * Gx[j] + Gy[i] * Gy[j]);
                    me[i][j] += wM * N[i] * N[j];
                }
        }
        for (int i = 0; i < nloc; ++i) {
            if (dofs[i] < 0) continue;
            for (int j = 0; j < nloc; ++j) {
                if (dofs[j] < 0) continue;
                tk.emplace_back(dofs[i], dofs[j], ke[i][j]);
                tm.emplace_back(dofs[i], dofs[j], me[i][j]);
            }
        }
    }

    out.K.resize(ndof, ndof);
    out.M.resize(ndof, ndof);
    out.K.setFromTriplets(tk.begin(), tk.end());
    out.M.setFromTriplets(tm.begin(), tm.end());
    (void)poly;
    return out;
}

}  // namespace hyplace::fem
