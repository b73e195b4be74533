#pragma once

#include <span>
#include <vector>

#include "spaceform/geometry.hpp"

namespace spaceform {

struct GeodesicDisk {
    Point center;
    double radius = 0.0;
};

// Smallest enclosing geodesic disk of a finite point set, Welzl-style
// randomized recursion with 1/2/3-point boundary bases. Deterministic: the
// internal shuffle is seeded from the input size. For lambda > 0 the set
// must fit in an open hemisphere (extrinsic precheck, then the solved radius
// must stay below pi/(2 sqrt(lambda)) - 1e-9).
GeodesicDisk min_disk(const SpaceForm& sf, std::span<const Point> points);

// Independent brute-force oracle: tries every pair midpoint disk and every
// triple circumcircle, returns the smallest candidate covering all points.
// O(n^4); intended for n up to ~50. Ties are broken by lexicographically
// smallest center.
GeodesicDisk min_disk_oracle(const SpaceForm& sf, std::span<const Point> points);

bool disk_contains(const SpaceForm& sf, const GeodesicDisk& disk, const Point& p, double tol);

} // namespace spaceform
