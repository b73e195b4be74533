#include "spaceform/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spaceform/lambda_trig.hpp"

namespace spaceform {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Minkowski dual of a Euclidean cross product: orthogonal to both arguments
// under the (-,+,+) form.
Vec3 minkowski_cross(const Vec3& a, const Vec3& b) {
    const Vec3 c = euclidean_cross(a, b);
    return {-c.x, c.y, c.z};
}

std::string point_str(const Point& p) {
    return "(" + std::to_string(p.coords.x) + ", " + std::to_string(p.coords.y) + ", " +
           std::to_string(p.coords.z) + ")";
}

} // namespace

SpaceForm::SpaceForm(double lambda) : lambda_(lambda) {
    if (!std::isfinite(lambda))
        fail(ErrorKind::DomainError, "curvature must be finite");
    if (lambda > 0.0)
        kind_ = ModelKind::Spherical;
    else if (lambda < 0.0)
        kind_ = ModelKind::Hyperbolic;
    else
        kind_ = ModelKind::Flat;
    sqrt_abs_ = std::sqrt(std::abs(lambda));
}

double model_dot(const SpaceForm& sf, const Vec3& a, const Vec3& b) {
    if (sf.kind() == ModelKind::Hyperbolic)
        return -a.x * b.x + a.y * b.y + a.z * b.z;
    return euclidean_dot(a, b);
}

double tangent_norm(const SpaceForm& sf, const Vec3& v) {
    return std::sqrt(std::max(0.0, model_dot(sf, v, v)));
}

Point project_to_model(const SpaceForm& sf, const Vec3& v) {
    if (sf.flat())
        return {{v.x, v.y, 0.0}};
    const double q = sf.lambda() * model_dot(sf, v, v);
    if (q <= 0.0)
        fail(ErrorKind::InvalidPoint, "cannot project " + point_str({v}) + " onto the quadric");
    Vec3 p = v * (1.0 / std::sqrt(q));
    if (sf.kind() == ModelKind::Hyperbolic && p.x < 0.0)
        p = -p;
    return {p};
}

void validate_point(const SpaceForm& sf, const Point& p, double tol) {
    const Vec3& v = p.coords;
    if (!std::isfinite(v.x) || !std::isfinite(v.y) || !std::isfinite(v.z))
        fail(ErrorKind::InvalidPoint, "non-finite coordinates");
    if (sf.flat()) {
        if (v.z != 0.0)
            fail(ErrorKind::InvalidPoint, "flat point with nonzero third coordinate");
        return;
    }
    const double q = sf.lambda() * model_dot(sf, v, v);
    if (std::abs(q - 1.0) > tol)
        fail(ErrorKind::InvalidPoint,
             "point " + point_str(p) + " off the quadric by " + std::to_string(q - 1.0));
    if (sf.kind() == ModelKind::Hyperbolic && v.x <= 0.0)
        fail(ErrorKind::InvalidPoint, "hyperboloid point on the lower sheet");
}

Point base_point(const SpaceForm& sf) {
    if (sf.flat())
        return {{0.0, 0.0, 0.0}};
    return {{1.0 / sf.sqrt_abs_lambda(), 0.0, 0.0}};
}

PolarFrame canonical_frame(const SpaceForm& sf) {
    if (sf.flat())
        return {base_point(sf), {1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    return {base_point(sf), {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
}

PolarFrame make_frame(const SpaceForm& sf, const Point& center, const Vec3& u, const Vec3& v) {
    validate_point(sf, center);
    auto project = [&](const Vec3& w) -> Vec3 {
        if (sf.flat())
            return {w.x, w.y, 0.0};
        // Remove the component along the position vector: <c,c> = 1/lambda.
        const double coeff = sf.lambda() * model_dot(sf, w, center.coords);
        return w - center.coords * coeff;
    };
    Vec3 e1 = project(u);
    const double n1 = tangent_norm(sf, e1);
    if (n1 <= 1e-14)
        fail(ErrorKind::DegenerateError, "frame direction u projects to zero");
    e1 = e1 * (1.0 / n1);
    Vec3 e2 = project(v);
    e2 = e2 - e1 * model_dot(sf, e2, e1);
    const double n2 = tangent_norm(sf, e2);
    if (n2 <= 1e-14)
        fail(ErrorKind::DegenerateError, "frame directions are linearly dependent");
    e2 = e2 * (1.0 / n2);
    return {center, e1, e2};
}

double distance(const SpaceForm& sf, const Point& p, const Point& q) {
    validate_point(sf, p);
    validate_point(sf, q);
    const Vec3 d = q.coords - p.coords;
    switch (sf.kind()) {
    case ModelKind::Flat:
        return std::sqrt(euclidean_dot(d, d));
    case ModelKind::Spherical: {
        const double lam = sf.lambda();
        const double c = lam * euclidean_dot(p.coords, q.coords);
        if (std::abs(c) > 1.0 + 1e-9)
            fail(ErrorKind::InvalidPoint, "spherical distance argument out of range");
        // atan2 of the chordal sine against the cosine is stable at both ends.
        const Vec3 cr = euclidean_cross(p.coords, q.coords);
        const double s = lam * std::sqrt(euclidean_dot(cr, cr));
        return std::atan2(s, c) / sf.sqrt_abs_lambda();
    }
    case ModelKind::Hyperbolic: {
        const double c = sf.lambda() * model_dot(sf, p.coords, q.coords);
        if (c < 1.0 - 1e-9)
            fail(ErrorKind::InvalidPoint, "hyperbolic distance argument out of range");
        // sinh(sqrt(-lambda) d) = -lambda |p x q|; asinh is well conditioned
        // for small separations where acosh is not.
        const Vec3 cr = minkowski_cross(p.coords, q.coords);
        const double s2 = std::max(0.0, model_dot(sf, cr, cr));
        return std::asinh(-sf.lambda() * std::sqrt(s2)) / sf.sqrt_abs_lambda();
    }
    }
    return 0.0;
}

Point exp_map(const SpaceForm& sf, const TangentVector& v) {
    validate_point(sf, v.base);
    const double t = tangent_norm(sf, v.dir);
    if (t == 0.0)
        return v.base;
    if (sf.flat())
        return {{v.base.coords.x + v.dir.x, v.base.coords.y + v.dir.y, 0.0}};
    const double lam = sf.lambda();
    const Vec3 unit = v.dir * (1.0 / t);
    const Vec3 out = v.base.coords * gcos(lam, t) + unit * gsin(lam, t);
    return project_to_model(sf, out);
}

TangentVector log_map(const SpaceForm& sf, const Point& p, const Point& q) {
    const double d = distance(sf, p, q);
    if (d <= 1e-15)
        return {p, {0.0, 0.0, 0.0}};
    if (sf.flat())
        return {p, q.coords - p.coords};
    const double lam = sf.lambda();
    if (sf.kind() == ModelKind::Spherical) {
        const double cut = kPi / sf.sqrt_abs_lambda();
        if (cut - d < 1e-9)
            fail(ErrorKind::AntipodalError,
                 "log_map undefined: points are antipodal within tolerance");
    }
    const double s = gsin(lam, d);
    Vec3 u = (q.coords - p.coords * gcos(lam, d)) * (1.0 / s);
    const double n = tangent_norm(sf, u);
    if (n <= 0.0)
        fail(ErrorKind::DegenerateError, "log_map direction vanished");
    return {p, u * (d / n)};
}

double angle_between(const SpaceForm& sf, const Vec3& u, const Vec3& v) {
    const double nu = tangent_norm(sf, u);
    const double nv = tangent_norm(sf, v);
    if (nu <= 1e-15 || nv <= 1e-15)
        fail(ErrorKind::DegenerateError, "angle of a zero tangent vector");
    const Vec3 a = u * (1.0 / nu);
    const Vec3 b = v * (1.0 / nv);
    // 2 atan2(|a-b|, |a+b|) is accurate near both 0 and pi.
    const double dm = tangent_norm(sf, a - b);
    const double dp = tangent_norm(sf, a + b);
    return 2.0 * std::atan2(dm, dp);
}

double angle_at(const SpaceForm& sf, const Point& q, const Point& p, const Point& r) {
    const TangentVector u = log_map(sf, q, p);
    const TangentVector v = log_map(sf, q, r);
    if (tangent_norm(sf, u.dir) <= 1e-15 || tangent_norm(sf, v.dir) <= 1e-15)
        fail(ErrorKind::DegenerateError, "angle at coincident points");
    return angle_between(sf, u.dir, v.dir);
}

double cosine_law_angle(const SpaceForm& sf, double a, double b, double c) {
    if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        fail(ErrorKind::DomainError, "triangle sides must be positive");
    const double lam = sf.lambda();
    if (lam > 0.0) {
        const double cut = kPi / sf.sqrt_abs_lambda();
        if (a >= cut || b >= cut || c >= cut)
            fail(ErrorKind::DomainError, "triangle side exceeds pi/sqrt(lambda)");
    }
    // Half-angle form of the law of cosines,
    //   tan^2(A/2) = s((a+b-c)/2) s((a-b+c)/2) / (s((a+b+c)/2) s((b+c-a)/2)),
    // equivalent to cos A = (c(a) - c(b) c(c)) / (lambda s(b) s(c)) by the
    // product identities but with lambda cancelled (the flat case is the
    // exact Euclidean law, not a 0/0 limit) and absolutely accurate near
    // both A = 0 and A = pi where the acos form loses sqrt(eps).
    const double num = gsin(lam, 0.5 * (a + b - c)) * gsin(lam, 0.5 * (a - b + c));
    const double den = gsin(lam, 0.5 * (a + b + c)) * gsin(lam, 0.5 * (b + c - a));
    const double scale = std::abs(num) + std::abs(den);
    if (num < -1e-9 * scale || den < -1e-9 * scale)
        fail(ErrorKind::NotATriangle,
             "sides (" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) +
                 ") violate the triangle inequality");
    return 2.0 * std::atan2(std::sqrt(std::max(0.0, num)), std::sqrt(std::max(0.0, den)));
}

Point midpoint(const SpaceForm& sf, const Point& p, const Point& q) {
    TangentVector v = log_map(sf, p, q);
    v.dir = v.dir * 0.5;
    return exp_map(sf, v);
}

Circumcircle circumcircle3(const SpaceForm& sf, const Point& p, const Point& q, const Point& r) {
    validate_point(sf, p);
    validate_point(sf, q);
    validate_point(sf, r);

    if (sf.flat()) {
        const Vec3 u = q.coords - p.coords;
        const Vec3 v = r.coords - q.coords;
        const double det = u.x * v.y - u.y * v.x; // twice the signed area
        const double scale = std::sqrt(euclidean_dot(u, u) * euclidean_dot(v, v));
        if (std::abs(det) <= 1e-14 * scale || scale == 0.0)
            fail(ErrorKind::CollinearError, "collinear points have no circumcircle");
        const double pu = 0.5 * (euclidean_dot(q.coords, q.coords) - euclidean_dot(p.coords, p.coords));
        const double pv = 0.5 * (euclidean_dot(r.coords, r.coords) - euclidean_dot(q.coords, q.coords));
        Point center{{(pu * v.y - pv * u.y) / det, (u.x * pv - v.x * pu) / det, 0.0}};
        const double radius = std::max({distance(sf, center, p), distance(sf, center, q),
                                        distance(sf, center, r)});
        return {center, radius};
    }

    // The center is the model-metric dual of the plane spanned by the
    // difference vectors, rescaled onto the quadric.
    const Vec3 u = p.coords - q.coords;
    const Vec3 v = q.coords - r.coords;
    if (sf.kind() == ModelKind::Spherical) {
        const Vec3 n = euclidean_cross(u, v);
        const double nn = euclidean_dot(n, n);
        const double scale = std::sqrt(euclidean_dot(u, u) * euclidean_dot(v, v));
        if (nn <= 1e-28 * scale * scale || scale == 0.0)
            fail(ErrorKind::AntipodalError, "degenerate spherical triple (coincident or antipodal)");
        Point center = project_to_model(sf, n);
        // Prefer the representative with radius below pi/(2 sqrt(lambda)).
        if (sf.lambda() * euclidean_dot(center.coords, p.coords) < 0.0)
            center.coords = -center.coords;
        const double radius = std::max({distance(sf, center, p), distance(sf, center, q),
                                        distance(sf, center, r)});
        return {center, radius};
    }

    const Vec3 n = minkowski_cross(u, v);
    const double qn = model_dot(sf, n, n);
    const double en = euclidean_dot(n, n);
    if (en <= 1e-28)
        fail(ErrorKind::DegenerateError, "degenerate hyperbolic triple");
    if (qn >= -1e-12 * en)
        fail(ErrorKind::NoCircumcircle,
             "dual vector is not timelike: the points lie on a horocycle or equidistant curve");
    const Point center = project_to_model(sf, n);
    const double radius = std::max({distance(sf, center, p), distance(sf, center, q),
                                    distance(sf, center, r)});
    return {center, radius};
}

Point polar_point(const SpaceForm& sf, const PolarFrame& frame, double r, double phi) {
    if (r < 0.0)
        fail(ErrorKind::DomainError, "polar radius must be nonnegative");
    const Vec3 dir = frame.e1 * std::cos(phi) + frame.e2 * std::sin(phi);
    return exp_map(sf, {frame.center, dir * r});
}

Vec3 polar_radial_dir(const SpaceForm& sf, const PolarFrame& frame, double r, double phi) {
    const Vec3 u = frame.e1 * std::cos(phi) + frame.e2 * std::sin(phi);
    if (sf.flat())
        return u;
    const double lam = sf.lambda();
    return frame.center.coords * (-lam * gsin(lam, r)) + u * gcos(lam, r);
}

Vec3 polar_curve_tangent(const SpaceForm& sf, const PolarFrame& frame, double r, double dr,
                         double phi) {
    const Vec3 uphi = frame.e1 * (-std::sin(phi)) + frame.e2 * std::cos(phi);
    return polar_radial_dir(sf, frame, r, phi) * dr + uphi * gsin(sf.lambda(), r);
}

double orientation(const SpaceForm& sf, const Point& a, const Point& b, const Point& c) {
    if (sf.flat()) {
        const Vec3 u = b.coords - a.coords;
        const Vec3 v = c.coords - a.coords;
        return u.x * v.y - u.y * v.x;
    }
    return euclidean_dot(a.coords, euclidean_cross(b.coords, c.coords));
}

} // namespace spaceform
