#pragma once

#include <complex>
#include <stdexcept>
#include <tuple>

// Exact-formula hyperbolic geometry on the upper half plane and the
// Poincare disk: distances, isometries, triangle trigonometry, Fermi
// coordinates and the standard area/length formulas.

namespace hyplace::hypgeom {

using complexd = std::complex<double>;

enum class Model { UpperHalfPlane, PoincareDisk };

struct HyperbolicPoint {
    Model model = Model::UpperHalfPlane;
    complexd coord{0.0, 1.0};

    static HyperbolicPoint half_plane(complexd z);
    static HyperbolicPoint disk(complexd z);
};

enum class Orientation { Preserving, Reversing };

// Real 2x2 Mobius transform acting on the half plane.  Reversing
// transforms act on the conjugate of the argument first.
struct MobiusTransform {
    double a = 1, b = 0, c = 0, d = 1;
    Orientation orientation = Orientation::Preserving;

    double det() const { return a * d - b * c; }
    void validate() const;
    complexd apply(complexd z) const;
    MobiusTransform compose(const MobiusTransform& rhs) const;  // this after rhs
};

enum class IsometryClass { Hyperbolic, Elliptic, Parabolic, Identity, Reflection, GlideReflection };

IsometryClass classify(const MobiusTransform& t);

struct TriangleSignature {
    int l = 2, m = 3, n = 8;
    void validate() const;  // hyperbolic: 1/l + 1/m + 1/n < 1
};

// Fermi coordinates on the cylinder H / <diag(e^{l/2}, e^{-l/2})>, core
// geodesic the imaginary axis.  rho is the signed distance from the core,
// theta the arc-length position along it.
struct FermiPoint {
    double rho = 0;
    double theta = 0;
    double core_length = 1;
};

double dist(const HyperbolicPoint& p, const HyperbolicPoint& q);

// f(z) = (z + i)/(iz + 1): disk -> half plane, and its inverse.
HyperbolicPoint cayley(const HyperbolicPoint& p);
HyperbolicPoint cayley_inverse(const HyperbolicPoint& p);

// Right-angled triangle (2, m, n): side lengths (a, b, c) with c the
// hypotenuse, a opposite the angle pi/m, b opposite pi/n.
std::tuple<double, double, double> triangle_sides(const TriangleSignature& sig);
double triangle_area(const TriangleSignature& sig);

struct DiskGeometry {
    double area;
    double circumference;
};
DiskGeometry disk_geometry(double r);
double disk_radius_from_area(double area);

struct AnnulusGeometry {
    double area;
    double boundary_length;
};
AnnulusGeometry annulus_geometry(double core_length, double half_width);

HyperbolicPoint fermi_to_halfplane(const FermiPoint& p);
FermiPoint halfplane_to_fermi(const HyperbolicPoint& p, double core_length);

struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hyplace::hypgeom
