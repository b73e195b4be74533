#pragma once

#include <cstdint>
#include <vector>

#include "spaceform/enclosing_disk.hpp"
#include "spaceform/geometry.hpp"

namespace spaceform {

// Convex polygon in M^2_lambda with cached side lengths and interior angles.
// Vertices are normalized to counterclockwise order. Side i joins vertex i-1
// to vertex i (mod n), so the two sides meeting at vertex i are i and i+1.
//
// n = 2 is admitted as the degenerate digon (a 2-covered geodesic segment,
// both interior angles 0); it is the equality case of the circumradius bound.
class ConvexPolygon {
public:
    static ConvexPolygon from_vertices(const SpaceForm& sf, std::vector<Point> vertices);

    const SpaceForm& space() const { return sf_; }
    std::size_t size() const { return vertices_.size(); }
    bool is_digon() const { return vertices_.size() == 2; }

    const Point& vertex(std::size_t i) const { return vertices_[i]; }
    const std::vector<Point>& vertices() const { return vertices_; }

    // Length of side i (joining vertex i-1 to vertex i).
    double side_length(std::size_t i) const { return side_lengths_[i]; }
    const std::vector<double>& side_lengths() const { return side_lengths_; }

    double interior_angle(std::size_t i) const { return interior_angles_[i]; }
    const std::vector<double>& interior_angles() const { return interior_angles_; }

    // Smallest enclosing disk of the vertex set; by geodesic convexity of
    // disks in the working regime it covers the whole polygon.
    const GeodesicDisk& circumdisk() const { return circumdisk_; }
    double circumradius() const { return circumdisk_.radius; }

private:
    ConvexPolygon(SpaceForm sf, std::vector<Point> vertices);

    SpaceForm sf_;
    std::vector<Point> vertices_;
    std::vector<double> side_lengths_;
    std::vector<double> interior_angles_;
    GeodesicDisk circumdisk_;
};

// Vertex curvature (pi - A_i) / (ta(l_i/2) + ta(l_{i+1}/2)).
double vertex_curvature(const ConvexPolygon& poly, std::size_t i);

// Flat-normalized variant 2 (pi - A_i) / (l_i + l_{i+1}), applied for every
// lambda. Coincides with vertex_curvature exactly when lambda = 0.
double vertex_curvature_flat(const ConvexPolygon& poly, std::size_t i);

struct VertexCurvatureReport {
    struct Row {
        double interior_angle = 0.0;
        double side_before = 0.0; // l_i
        double side_after = 0.0;  // l_{i+1}
        double kappa = 0.0;
        double kappa_flat = 0.0;
    };
    std::vector<Row> rows;
    double kappa0 = 0.0;      // min kappa
    double kappa0_flat = 0.0; // min kappa_flat
};

VertexCurvatureReport curvature_report(const ConvexPolygon& poly);

// Regular n-gon inscribed in the circle of radius `radius` about the
// canonical base point. RadiusTooLarge when lambda > 0 and
// radius >= pi/(2 sqrt(lambda)).
ConvexPolygon regular_inscribed(const SpaceForm& sf, double radius, int n);

// Degenerate 2-gon covering a geodesic segment of length `length` twice.
ConvexPolygon digon(const SpaceForm& sf, double length);

// Deterministic random convex polygon: jittered sorted angles and a
// correlated radius sequence within (0.2 r_max, r_max], placed in polar
// coordinates around the canonical base point; resampled (bounded) until the
// result validates. Identical arguments give bit-identical vertices.
ConvexPolygon random_convex(const SpaceForm& sf, int n, std::uint64_t seed, double r_max);

} // namespace spaceform
