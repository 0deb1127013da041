#include <cmath>
#include <cstdio>
#include <sstream>

#include "hyplace/fem.hpp"

namespace hyplace::fem {

EigenResult surface_spectrum(SurfaceId id, const SpectrumOptions& opt) {
    const auto poly = build_polygon(id);
    const auto mesh = generate_mesh(poly, opt.n_per_side);
    const auto sys = assemble(mesh, poly, opt.element_order, opt.dirichlet_sides);
    EigenResult r;
    r.shift = opt.shift;
    r.mesh_n = opt.n_per_side;
    r.element_order = opt.element_order;
    r.eigenvalues = solve_eigs(sys.K, sys.M, opt.nev, opt.shift, &r.max_residual);
    std::vector<double> positive;
    for (double v : r.eigenvalues)
        if (v > 1e-6) positive.push_back(v);
    r.clusters = cluster(positive);
    return r;
}

std::vector<bool> pentagon_mixed_chi11_bc() {
    // Appendix C pentagon code: Dirichlet on G2 and G4.
    return {false, true, false, true, false};
}

SwapReport swap_isospectral_check(SurfaceId id, const SpectrumOptions& opt) {
    if (opt.dirichlet_sides.empty())
        throw mesh_error("swap_isospectral_check: need a mixed condition set");
    SpectrumOptions swapped = opt;
    for (size_t i = 0; i < swapped.dirichlet_sides.size(); ++i)
        swapped.dirichlet_sides[i] = !swapped.dirichlet_sides[i];
    const auto a = surface_spectrum(id, opt);
    const auto b = surface_spectrum(id, swapped);
    SwapReport rep;
    rep.original = a.eigenvalues;
    rep.swapped = b.eigenvalues;
    const size_t n = std::min<size_t>({10, a.eigenvalues.size(), b.eigenvalues.size()});
    rep.max_rel_diff = 0;
    for (size_t i = 0; i < n; ++i) {
        const double d = std::abs(a.eigenvalues[i] - b.eigenvalues[i]) /
                         std::max(1e-12, std::abs(a.eigenvalues[i]));
        rep.rel_diff.push_back(d);
        rep.max_rel_diff = std::max(rep.max_rel_diff, d);
    }
    return rep;
}

std::string mesh_file(const Mesh& mesh) {
    std::ostringstream os;
    os << "hyplace-mesh/1\n";
    os << "vertices " << mesh.verts.size() << " triangles " << mesh.tris.size() << "\n";
    char buf[128];
    for (size_t i = 0; i < mesh.verts.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g %.17g %d\n", mesh.verts[i].x, mesh.verts[i].y,
                      mesh.boundary_side_of_vert[i]);
        os << buf;
    }
    for (const auto& t : mesh.tris) os << t[0] << ' ' << t[1] << ' ' << t[2] << "\n";
    return os.str();
}

Mesh read_mesh_file(const std::string& text) {
    std::istringstream is(text);
    std::string tag;
    std::getline(is, tag);
    if (tag != "hyplace-mesh/1") throw mesh_error("read_mesh_file: unknown format tag");
    std::string word;
    size_t nv = 0, nt = 0;
    is >> word >> nv >> word >> nt;
    Mesh mesh;
    mesh.verts.resize(nv);
    mesh.boundary_side_of_vert.resize(nv);
    for (size_t i = 0; i < nv; ++i)
        is >> mesh.verts[i].x >> mesh.verts[i].y >> mesh.boundary_side_of_vert[i];
    mesh.tris.resize(nt);
    for (size_t i = 0; i < nt; ++i) is >> mesh.tris[i][0] >> mesh.tris[i][1] >> mesh.tris[i][2];
    mesh.vert_rep.resize(nv);
    for (size_t i = 0; i < nv; ++i) mesh.vert_rep[i] = static_cast<int>(i);
    return mesh;
}

std::string spectrum_file(const EigenResult& r) {
    std::ostringstream os;
    os << "hyplace-spec/1\n";
    os << "index,eigenvalue,cluster_id,multiplicity\n";
    // map each eigenvalue to its cluster over the positive part
    char buf[128];
    size_t ci = 0;
    int within = 0;
    for (size_t i = 0; i < r.eigenvalues.size(); ++i) {
        const double v = r.eigenvalues[i];
        int cid = -1, mult = 1;
        if (v > 1e-6 && ci < r.clusters.size()) {
            cid = static_cast<int>(ci);
            mult = r.clusters[ci].multiplicity;
            if (++within >= r.clusters[ci].multiplicity) {
                ++ci;
                within = 0;
            }
        }
        std::snprintf(buf, sizeof buf, "%zu,%.12g,%d,%d\n", i, v, cid, mult);
        os << buf;
    }
    return os.str();
}

}  // namespace hyplace::fem
