#include "spaceform/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>
#include <string>

#include "spaceform/lambda_trig.hpp"

namespace spaceform {

namespace {

constexpr double kPi = 3.14159265358979323846;

// splitmix64; used to fold generator arguments into one engine seed.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fold(std::uint64_t h, std::uint64_t v) { return mix(h ^ mix(v)); }

std::uint64_t double_bits(double x) {
    std::uint64_t u;
    static_assert(sizeof(u) == sizeof(x));
    std::memcpy(&u, &x, sizeof(u));
    return u;
}

// Uniform double in [0, 1) from the engine's top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution.
double unit_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * unit_uniform(rng);
}

} // namespace

ConvexPolygon::ConvexPolygon(SpaceForm sf, std::vector<Point> vertices)
    : sf_(sf), vertices_(std::move(vertices)) {}

ConvexPolygon ConvexPolygon::from_vertices(const SpaceForm& sf, std::vector<Point> verts) {
    const std::size_t n = verts.size();
    if (n < 2)
        fail(ErrorKind::TooFewVertices,
             "need at least 3 vertices (2 for the degenerate digon), got " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
        validate_point(sf, verts[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (distance(sf, verts[i], verts[j]) < 1e-12)
                fail(ErrorKind::DuplicateVertex,
                     "vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");

    const double lam = sf.lambda();
    const double side_cut = lam > 0.0 ? kPi / sf.sqrt_abs_lambda() : 0.0;

    ConvexPolygon poly(sf, std::move(verts));
    auto& v = poly.vertices_;

    if (n == 2) {
        const double len = distance(sf, v[0], v[1]);
        if (lam > 0.0 && len >= side_cut * (1.0 - 1e-12))
            fail(ErrorKind::SideTooLong, "digon side reaches pi/sqrt(lambda)");
        poly.side_lengths_ = {len, len};
        poly.interior_angles_ = {0.0, 0.0};
        poly.circumdisk_ = min_disk(sf, v);
        return poly;
    }

    for (std::size_t i = 0; i < n; ++i) {
        const double len = distance(sf, v[(i + n - 1) % n], v[i]);
        if (lam > 0.0 && len >= side_cut * (1.0 - 1e-12))
            fail(ErrorKind::SideTooLong, "side " + std::to_string(i) + " reaches pi/sqrt(lambda)");
    }

    // Hemisphere condition: the vertex set must fit well inside an open
    // half-sphere, which is exactly where enclosing disks are unique and
    // geodesically convex. min_disk raises NotInHemisphere itself when the
    // precheck or the radius bound fails.
    poly.circumdisk_ = min_disk(sf, v);

    // Orientation: all consecutive triples must turn the same way.
    double sign = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % n];
        const Point& c = v[(i + 2) % n];
        const double det = orientation(sf, a, b, c);
        const double scale = distance(sf, a, b) * distance(sf, b, c);
        if (std::abs(det) <= 1e-14 * std::max(scale, 1e-30))
            fail(ErrorKind::NotConvex, "vertices " + std::to_string(i) + ".." +
                                           std::to_string((i + 2) % n) + " are collinear");
        if (sign == 0.0)
            sign = det > 0.0 ? 1.0 : -1.0;
        else if (det * sign < 0.0)
            fail(ErrorKind::NotConvex, "inconsistent turning at vertex " +
                                           std::to_string((i + 1) % n));
    }
    if (sign < 0.0)
        std::reverse(v.begin() + 1, v.end()); // keep vertex 0 first, flip to counterclockwise

    // Convex position: every vertex strictly left of every directed side.
    // Rules out consistently-turning but self-overlapping cycles.
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = v[(i + n - 1) % n];
        const Point& b = v[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || j == (i + n - 1) % n)
                continue;
            if (orientation(sf, a, b, v[j]) <= 0.0)
                fail(ErrorKind::NotConvex, "vertex " + std::to_string(j) +
                                               " lies right of side " + std::to_string(i));
        }
    }

    poly.side_lengths_.resize(n);
    poly.interior_angles_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        poly.side_lengths_[i] = distance(sf, v[(i + n - 1) % n], v[i]);
    for (std::size_t i = 0; i < n; ++i) {
        const double ang = angle_at(sf, v[i], v[(i + n - 1) % n], v[(i + 1) % n]);
        if (ang <= 1e-12 || ang >= kPi - 1e-12)
            fail(ErrorKind::NotConvex, "interior angle at vertex " + std::to_string(i) +
                                           " is degenerate");
        poly.interior_angles_[i] = ang;
    }
    return poly;
}

double vertex_curvature(const ConvexPolygon& poly, std::size_t i) {
    if (i >= poly.size())
        fail(ErrorKind::DomainError, "vertex index out of range");
    const std::size_t n = poly.size();
    const double lam = poly.space().lambda();
    const double t1 = gtan(lam, 0.5 * poly.side_length(i));
    const double t2 = gtan(lam, 0.5 * poly.side_length((i + 1) % n));
    return (kPi - poly.interior_angle(i)) / (t1 + t2);
}

double vertex_curvature_flat(const ConvexPolygon& poly, std::size_t i) {
    if (i >= poly.size())
        fail(ErrorKind::DomainError, "vertex index out of range");
    const std::size_t n = poly.size();
    const double l1 = poly.side_length(i);
    const double l2 = poly.side_length((i + 1) % n);
    return 2.0 * (kPi - poly.interior_angle(i)) / (l1 + l2);
}

VertexCurvatureReport curvature_report(const ConvexPolygon& poly) {
    VertexCurvatureReport report;
    const std::size_t n = poly.size();
    report.rows.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& row = report.rows[i];
        row.interior_angle = poly.interior_angle(i);
        row.side_before = poly.side_length(i);
        row.side_after = poly.side_length((i + 1) % n);
        row.kappa = vertex_curvature(poly, i);
        row.kappa_flat = vertex_curvature_flat(poly, i);
    }
    report.kappa0 = report.rows[0].kappa;
    report.kappa0_flat = report.rows[0].kappa_flat;
    for (const auto& row : report.rows) {
        report.kappa0 = std::min(report.kappa0, row.kappa);
        report.kappa0_flat = std::min(report.kappa0_flat, row.kappa_flat);
    }
    return report;
}

ConvexPolygon regular_inscribed(const SpaceForm& sf, double radius, int n) {
    if (n < 3)
        fail(ErrorKind::TooFewVertices, "regular polygon needs n >= 3");
    if (!(radius > 0.0))
        fail(ErrorKind::DomainError, "radius must be positive");
    if (sf.lambda() > 0.0 && radius >= 0.5 * kPi / sf.sqrt_abs_lambda())
        fail(ErrorKind::RadiusTooLarge, "inscribed radius must stay below pi/(2 sqrt(lambda))");
    const PolarFrame frame = canonical_frame(sf);
    std::vector<Point> verts;
    verts.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        verts.push_back(polar_point(sf, frame, radius, 2.0 * kPi * k / n));
    return ConvexPolygon::from_vertices(sf, std::move(verts));
}

ConvexPolygon digon(const SpaceForm& sf, double length) {
    if (!(length > 0.0))
        fail(ErrorKind::DomainError, "digon length must be positive");
    if (sf.lambda() > 0.0 && length >= kPi / sf.sqrt_abs_lambda())
        fail(ErrorKind::SideTooLong, "digon side reaches pi/sqrt(lambda)");
    const PolarFrame frame = canonical_frame(sf);
    std::vector<Point> verts{frame.center, polar_point(sf, frame, length, 0.0)};
    return ConvexPolygon::from_vertices(sf, std::move(verts));
}

ConvexPolygon random_convex(const SpaceForm& sf, int n, std::uint64_t seed, double r_max) {
    if (n < 3)
        fail(ErrorKind::TooFewVertices, "random polygon needs n >= 3");
    if (!(r_max > 0.0))
        fail(ErrorKind::DomainError, "r_max must be positive");
    if (sf.lambda() > 0.0 && r_max >= 0.5 * kPi / sf.sqrt_abs_lambda())
        fail(ErrorKind::RadiusTooLarge, "r_max must stay below pi/(2 sqrt(lambda))");

    std::uint64_t h = fold(seed, static_cast<std::uint64_t>(n));
    h = fold(h, double_bits(sf.lambda()));
    h = fold(h, double_bits(r_max));

    const PolarFrame frame = canonical_frame(sf);
    const int budget = 256;
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::mt19937_64 rng(fold(h, static_cast<std::uint64_t>(attempt)));

        // Jittered regular angles, sorted by construction after a global
        // rotation; independent uniform angles make convex draws vanishingly
        // rare for n >= 8.
        const double rot = uniform(rng, 0.0, 2.0 * kPi);
        std::vector<double> angles(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            angles[static_cast<std::size_t>(k)] =
                std::fmod(2.0 * kPi * (k + uniform(rng, -0.4, 0.4)) / n + rot, 2.0 * kPi);
        std::sort(angles.begin(), angles.end());

        // Correlated radii inside (0.2 r_max, r_max]; the admissible radial
        // perturbation for convexity shrinks like the squared angular gap.
        const double base = uniform(rng, 0.55, 0.85) * r_max;
        const double amp = 0.3 * base * (2.0 * kPi / n) * (2.0 * kPi / n);
        std::vector<Point> verts;
        verts.reserve(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            const double r =
                std::clamp(base + uniform(rng, -amp, amp), 0.2 * r_max + 1e-9, r_max);
            verts.push_back(polar_point(sf, frame, r, angles[static_cast<std::size_t>(k)]));
        }
        try {
            return ConvexPolygon::from_vertices(sf, std::move(verts));
        } catch (const Error&) {
            // resample
        }
    }
    fail(ErrorKind::GenerationFailed,
         "no convex draw after " + std::to_string(budget) + " attempts (seed " +
             std::to_string(seed) + ", n " + std::to_string(n) + ")");
}

} // namespace spaceform
