#pragma once

#include <cmath>

#include "spaceform/error.hpp"

namespace spaceform {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
inline Vec3 operator*(double s, const Vec3& a) { return a * s; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

inline double euclidean_dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 euclidean_cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

enum class ModelKind { Spherical, Flat, Hyperbolic };

// The model surface M^2_lambda: the sphere of radius 1/sqrt(lambda) in R^3
// for lambda > 0, the plane for lambda = 0, and the upper sheet of the
// Minkowski quadric <p,p> = 1/lambda (signature -,+,+; coordinate 0 timelike)
// for lambda < 0.
class SpaceForm {
public:
    explicit SpaceForm(double lambda);

    double lambda() const { return lambda_; }
    ModelKind kind() const { return kind_; }
    // 0 for the flat model.
    double sqrt_abs_lambda() const { return sqrt_abs_; }
    bool flat() const { return kind_ == ModelKind::Flat; }

private:
    double lambda_;
    ModelKind kind_;
    double sqrt_abs_;
};

// Embedded model coordinates. Flat points use (x, y) with z fixed at 0.
struct Point {
    Vec3 coords;
};

struct TangentVector {
    Point base;
    Vec3 dir;
};

// Orthonormal tangent frame for geodesic polar coordinates around `center`.
struct PolarFrame {
    Point center;
    Vec3 e1;
    Vec3 e2;
};

struct Circumcircle {
    Point center;
    double radius = 0.0;
};

// Bilinear form of the model: Euclidean for lambda >= 0, Minkowski (-,+,+)
// for lambda < 0.
double model_dot(const SpaceForm& sf, const Vec3& a, const Vec3& b);

// Norm of a tangent vector (the form is positive definite on tangent planes).
double tangent_norm(const SpaceForm& sf, const Vec3& v);

// Rescales a vector onto the quadric <p,p> = 1/lambda (upper sheet for
// lambda < 0); identity for the flat model.
Point project_to_model(const SpaceForm& sf, const Vec3& v);

// Checks the quadric constraint (and the upper-sheet condition for
// lambda < 0); throws InvalidPoint beyond `tol`.
void validate_point(const SpaceForm& sf, const Point& p, double tol = 1e-8);

// Canonical base point: (1/sqrt(|lambda|), 0, 0) for curved models, the
// origin for the flat one.
Point base_point(const SpaceForm& sf);

// Frame at the canonical base point with e1, e2 along the coordinate axes.
PolarFrame canonical_frame(const SpaceForm& sf);

// Builds an orthonormal frame at `center` by projecting u (then v) onto the
// tangent plane and Gram-Schmidt orthogonalization. DegenerateError when the
// projections are (near) linearly dependent.
PolarFrame make_frame(const SpaceForm& sf, const Point& center, const Vec3& u, const Vec3& v);

// Geodesic distance. Validates both points.
double distance(const SpaceForm& sf, const Point& p, const Point& q);

// Point at arc length |v.dir| from v.base along the geodesic with initial
// direction v.dir. For lambda > 0 lengths >= pi/sqrt(lambda) wrap around.
Point exp_map(const SpaceForm& sf, const TangentVector& v);

// Inverse of exp_map: tangent vector at p pointing to q with |dir| equal to
// distance(p, q). AntipodalError when lambda > 0 and q is antipodal to p.
TangentVector log_map(const SpaceForm& sf, const Point& p, const Point& q);

// Angle in [0, pi] between two tangent vectors at the same base point.
double angle_between(const SpaceForm& sf, const Vec3& u, const Vec3& v);

// Interior angle at q of the geodesic wedge p-q-r. DegenerateError when one
// of the log maps vanishes.
double angle_at(const SpaceForm& sf, const Point& q, const Point& p, const Point& r);

// Angle opposite side a in a geodesic triangle with sides a, b, c. Computed
// in a lambda-uniform product form, so the flat case is the exact Euclidean
// law of cosines. NotATriangle when the cosine lands outside [-1, 1] by more
// than 1e-9.
double cosine_law_angle(const SpaceForm& sf, double a, double b, double c);

Point midpoint(const SpaceForm& sf, const Point& p, const Point& q);

// Circumcircle through three pairwise distinct points. For lambda > 0 the
// representative with radius < pi/(2 sqrt(lambda)) is preferred. For
// lambda < 0 the dual vector must be timelike, otherwise the points lie on a
// horocycle or equidistant curve and NoCircumcircle is raised.
Circumcircle circumcircle3(const SpaceForm& sf, const Point& p, const Point& q, const Point& r);

// Geodesic polar coordinates (r, phi) around frame.center.
Point polar_point(const SpaceForm& sf, const PolarFrame& frame, double r, double phi);

// Unit radial direction d/dr of the polar chart at (r, phi), as an embedding
// vector at polar_point(frame, r, phi).
Vec3 polar_radial_dir(const SpaceForm& sf, const PolarFrame& frame, double r, double phi);

// Embedding tangent d/dphi of the curve phi -> (r(phi), phi), given r and
// r' = dr/dphi at phi.
Vec3 polar_curve_tangent(const SpaceForm& sf, const PolarFrame& frame, double r, double dr,
                         double phi);

// Signed orientation of an ordered triple: the flat model uses the standard
// 2D cross product, curved models the 3x3 determinant of the embedding
// coordinates. Positive for counterclockwise triples.
double orientation(const SpaceForm& sf, const Point& a, const Point& b, const Point& c);

} // namespace spaceform
