#include "spaceform/enclosing_disk.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <string>

namespace spaceform {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Containment slack used inside the recursion; keeps the recursion stable
// without moving the result beyond the 1e-8 oracle agreement budget.
double welzl_slack(double radius) { return 1e-12 * (1.0 + radius); }

GeodesicDisk two_point_disk(const SpaceForm& sf, const Point& p, const Point& q) {
    const Point c = midpoint(sf, p, q);
    const double r = std::max(distance(sf, c, p), distance(sf, c, q));
    return {c, r};
}

struct Boundary {
    std::array<Point, 3> pts;
    int count = 0;
};

// Disk determined by the boundary set alone. count == 0 yields the sentinel
// with radius -1 (covers nothing).
GeodesicDisk boundary_disk(const SpaceForm& sf, const Boundary& b) {
    switch (b.count) {
    case 0:
        return {base_point(sf), -1.0};
    case 1:
        return {b.pts[0], 0.0};
    case 2:
        return two_point_disk(sf, b.pts[0], b.pts[1]);
    default: {
        // One of the two-point disks may already cover the third point; the
        // circumcircle is only minimal when all three lie on the boundary.
        for (int skip = 0; skip < 3; ++skip) {
            const GeodesicDisk d =
                two_point_disk(sf, b.pts[(skip + 1) % 3], b.pts[(skip + 2) % 3]);
            if (distance(sf, d.center, b.pts[skip]) <= d.radius + welzl_slack(d.radius))
                return d;
        }
        const Circumcircle c = circumcircle3(sf, b.pts[0], b.pts[1], b.pts[2]);
        return {c.center, c.radius};
    }
    }
}

GeodesicDisk welzl(const SpaceForm& sf, std::vector<Point>& pts, std::size_t n, Boundary& b) {
    if (n == 0 || b.count == 3)
        return boundary_disk(sf, b);
    const Point p = pts[n - 1];
    GeodesicDisk d = welzl(sf, pts, n - 1, b);
    if (d.radius >= 0.0 && distance(sf, d.center, p) <= d.radius + welzl_slack(d.radius))
        return d;
    b.pts[b.count++] = p;
    d = welzl(sf, pts, n - 1, b);
    b.count--;
    // Move-to-front: points that forced a recomputation are checked early on
    // subsequent passes.
    std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(n - 1),
                pts.begin() + static_cast<std::ptrdiff_t>(n));
    return d;
}

void check_hemisphere_pre(const SpaceForm& sf, std::span<const Point> points) {
    // Extrinsic rejection of clearly ill-posed spherical inputs: every point
    // must stay on the centroid's side of the equator.
    Vec3 sum{0.0, 0.0, 0.0};
    for (const Point& p : points)
        sum = sum + p.coords;
    const double norm = std::sqrt(euclidean_dot(sum, sum));
    if (norm <= 1e-12)
        fail(ErrorKind::NotInHemisphere, "point set has no dominant direction");
    const Vec3 axis = sum * (1.0 / norm);
    for (const Point& p : points) {
        if (sf.sqrt_abs_lambda() * euclidean_dot(axis, p.coords) <= 1e-9)
            fail(ErrorKind::NotInHemisphere,
                 "point set does not fit in an open hemisphere around its centroid");
    }
}

void check_hemisphere_post(const SpaceForm& sf, const GeodesicDisk& disk) {
    const double cap = 0.5 * kPi / sf.sqrt_abs_lambda();
    if (disk.radius >= cap - 1e-9)
        fail(ErrorKind::NotInHemisphere,
             "enclosing radius " + std::to_string(disk.radius) +
                 " reaches the hemisphere bound " + std::to_string(cap));
}

bool center_less(const Point& a, const Point& b) {
    if (a.coords.x != b.coords.x)
        return a.coords.x < b.coords.x;
    if (a.coords.y != b.coords.y)
        return a.coords.y < b.coords.y;
    return a.coords.z < b.coords.z;
}

} // namespace

GeodesicDisk min_disk(const SpaceForm& sf, std::span<const Point> points) {
    if (points.empty())
        fail(ErrorKind::EmptyInput, "min_disk of an empty set");
    for (const Point& p : points)
        validate_point(sf, p);
    if (points.size() == 1)
        return {points[0], 0.0};
    if (sf.kind() == ModelKind::Spherical)
        check_hemisphere_pre(sf, points);

    std::vector<Point> pts(points.begin(), points.end());
    // Deterministic shuffle, seeded from the input size only.
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (0x2545f4914f6cdd1dULL * pts.size()));
    std::shuffle(pts.begin(), pts.end(), rng);

    Boundary b;
    GeodesicDisk disk = welzl(sf, pts, pts.size(), b);
    if (sf.kind() == ModelKind::Spherical)
        check_hemisphere_post(sf, disk);
    return disk;
}

GeodesicDisk min_disk_oracle(const SpaceForm& sf, std::span<const Point> points) {
    if (points.empty())
        fail(ErrorKind::EmptyInput, "min_disk_oracle of an empty set");
    for (const Point& p : points)
        validate_point(sf, p);
    if (points.size() == 1)
        return {points[0], 0.0};
    if (sf.kind() == ModelKind::Spherical)
        check_hemisphere_pre(sf, points);

    const double cover_tol = 1e-9;
    bool found = false;
    GeodesicDisk best;

    auto consider = [&](const GeodesicDisk& cand) {
        for (const Point& p : points) {
            if (distance(sf, cand.center, p) > cand.radius + cover_tol)
                return;
        }
        if (!found || cand.radius < best.radius - 1e-12 ||
            (std::abs(cand.radius - best.radius) <= 1e-12 && center_less(cand.center, best.center))) {
            best = cand;
            found = true;
        }
    };

    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            consider(two_point_disk(sf, points[i], points[j]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                try {
                    const Circumcircle c = circumcircle3(sf, points[i], points[j], points[k]);
                    consider({c.center, c.radius});
                } catch (const Error&) {
                    // Degenerate triples cannot be a support set; a pair disk
                    // covers them.
                }
            }

    if (!found)
        fail(ErrorKind::NoCircumcircle, "no candidate disk covers the input");
    if (sf.kind() == ModelKind::Spherical)
        check_hemisphere_post(sf, best);
    return best;
}

bool disk_contains(const SpaceForm& sf, const GeodesicDisk& disk, const Point& p, double tol) {
    return distance(sf, disk.center, p) <= disk.radius + tol;
}

} // namespace spaceform
