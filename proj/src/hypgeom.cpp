#include "hyplace/hypgeom.hpp"

#include <cmath>

namespace hyplace::hypgeom {

namespace {
constexpr double kDetTol = 1e-12;
constexpr double kTraceTol = 1e-9;  // parabolic band for classify
}  // namespace

HyperbolicPoint HyperbolicPoint::half_plane(complexd z) {
    if (!(z.imag() > 0)) throw domain_error("half-plane point needs Im z > 0");
    return {Model::UpperHalfPlane, z};
}

HyperbolicPoint HyperbolicPoint::disk(complexd z) {
    if (!(std::abs(z) < 1)) throw domain_error("disk point needs |z| < 1");
    return {Model::PoincareDisk, z};
}

void MobiusTransform::validate() const {
    const double want = orientation == Orientation::Preserving ? 1.0 : -1.0;
    if (std::abs(det() - want) > kDetTol)
        throw domain_error("Mobius transform determinant violates orientation convention");
}

complexd MobiusTransform::apply(complexd z) const {
    if (orientation == Orientation::Reversing) z = std::conj(z);
    return (a * z + b) / (c * z + d);
}

MobiusTransform MobiusTransform::compose(const MobiusTransform& rhs) const {
    // Matrix product, with the left factor's entries conjugated by nothing:
    // both are real, so a reversing right factor only flips the composite
    // orientation.  (a b; c d) * (a' b'; c' d').
    MobiusTransform out;
    out.a = a * rhs.a + b * rhs.c;
    out.b = a * rhs.b + b * rhs.d;
    out.c = c * rhs.a + d * rhs.c;
    out.d = c * rhs.b + d * rhs.d;
    out.orientation = (orientation == rhs.orientation) ? Orientation::Preserving
                                                       : Orientation::Reversing;
    return out;
}

IsometryClass classify(const MobiusTransform& t) {
    t.validate();
    if (t.orientation == Orientation::Preserving) {
        const double tr = std::abs(t.a + t.d);
        if (std::abs(t.b) < kTraceTol && std::abs(t.c) < kTraceTol &&
            std::abs(std::abs(t.a) - 1) < kTraceTol && std::abs(std::abs(t.d) - 1) < kTraceTol &&
            t.a * t.d > 0)
            return IsometryClass::Identity;
        if (tr > 2 + kTraceTol) return IsometryClass::Hyperbolic;
        if (tr < 2 - kTraceTol) return IsometryClass::Elliptic;
        return IsometryClass::Parabolic;
    }
    // Reversing: conjugate to diag(gamma, 1) with gamma < -1 (glide) or
    // diag(-1, 1) (reflection).  After normalizing det to -1 the trace of a
    // reflection is 0; a glide reflection has |trace| > 0.
    const double tr = std::abs(t.a + t.d);
    if (tr < kTraceTol) return IsometryClass::Reflection;
    return IsometryClass::GlideReflection;
}

void TriangleSignature::validate() const {
    if (l <= 0 || m <= 0 || n <= 0) throw domain_error("triangle signature needs positive entries");
    // 1/l + 1/m + 1/n < 1, checked in integers
    const long lhs = static_cast<long>(m) * n + static_cast<long>(l) * n + static_cast<long>(l) * m;
    if (lhs >= static_cast<long>(l) * m * n) throw domain_error("triangle signature is not hyperbolic");
}

namespace {
complexd to_half_plane(const HyperbolicPoint& p) {
    if (p.model == Model::UpperHalfPlane) {
        if (!(p.coord.imag() > 0)) throw domain_error("point outside the half plane");
        return p.coord;
    }
    return cayley(p).coord;
}
}  // namespace

double dist(const HyperbolicPoint& p, const HyperbolicPoint& q) {
    const complexd z = to_half_plane(p);
    const complexd w = to_half_plane(q);
    // cosh(rho) = 1 + |z-w|^2 / (2 Im z Im w); use acosh via log1p form for
    // stability near coincident points.
    const double u = std::norm(z - w) / (4.0 * z.imag() * w.imag());
    // rho = arccosh(1 + 2u) = log(1 + 2u + 2 sqrt(u(u+1)))
    return std::log1p(2.0 * (u + std::sqrt(u * (u + 1.0))));
}

HyperbolicPoint cayley(const HyperbolicPoint& p) {
    if (p.model == Model::UpperHalfPlane) return p;
    if (!(std::abs(p.coord) < 1)) throw domain_error("point outside the disk");
    const complexd i(0, 1);
    return HyperbolicPoint{Model::UpperHalfPlane, (p.coord + i) / (i * p.coord + 1.0)};
}

HyperbolicPoint cayley_inverse(const HyperbolicPoint& p) {
    if (p.model == Model::PoincareDisk) return p;
    if (!(p.coord.imag() > 0)) throw domain_error("point outside the half plane");
    const complexd i(0, 1);
    return HyperbolicPoint{Model::PoincareDisk, (p.coord - i) / (-i * p.coord + 1.0)};
}

std::tuple<double, double, double> triangle_sides(const TriangleSignature& sig) {
    sig.validate();
    if (sig.l != 2) throw domain_error("only right-angled (2, m, n) triangles are supported");
    const double alpha = M_PI / sig.m;
    const double beta = M_PI / sig.n;
    const double c = std::acosh(1.0 / (std::tan(alpha) * std::tan(beta)));
    const double a = std::acosh(std::cos(alpha) / std::sin(beta));
    const double b = std::acosh(std::cos(beta) / std::sin(alpha));
    return {a, b, c};
}

double triangle_area(const TriangleSignature& sig) {
    sig.validate();
    return M_PI * (1.0 - 1.0 / sig.l - 1.0 / sig.m - 1.0 / sig.n);
}

DiskGeometry disk_geometry(double r) {
    if (!(r > 0)) throw domain_error("disk radius must be positive");
    const double s = std::sinh(r / 2);
    return {4 * M_PI * s * s, 2 * M_PI * std::sinh(r)};
}

double disk_radius_from_area(double area) {
    if (!(area > 0)) throw domain_error("disk area must be positive");
    return 2 * std::asinh(std::sqrt(area / (4 * M_PI)));
}

AnnulusGeometry annulus_geometry(double core_length, double half_width) {
    if (!(core_length > 0) || !(half_width > 0)) throw domain_error("annulus parameters must be positive");
    return {2 * core_length * std::sinh(half_width), 2 * core_length * std::cosh(half_width)};
}

HyperbolicPoint fermi_to_halfplane(const FermiPoint& p) {
    if (!(p.core_length > 0)) throw domain_error("core length must be positive");
    // The geodesic perpendicular to the core through i e^theta is the circle
    // |z| = e^theta; on it, signed distance rho from the axis lands at
    // z = e^theta (tanh(rho) + i sech(rho)), since sinh(rho) = x/y.
    const double scale = std::exp(p.theta);
    return HyperbolicPoint::half_plane(
        complexd(scale * std::tanh(p.rho), scale / std::cosh(p.rho)));
}

FermiPoint halfplane_to_fermi(const HyperbolicPoint& p, double core_length) {
    if (!(core_length > 0)) throw domain_error("core length must be positive");
    const complexd z = to_half_plane(p);
    FermiPoint out;
    out.core_length = core_length;
    out.rho = std::asinh(z.real() / z.imag());
    double theta = std::log(std::abs(z));
    theta = std::fmod(theta, core_length);
    if (theta < 0) theta += core_length;
    out.theta = theta;
    return out;
}

}  // namespace hyplace::hypgeom
