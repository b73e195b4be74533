#pragma once

#include <span>
#include <variant>
#include <vector>

#include "spaceform/polygon.hpp"

namespace spaceform {

// One circular arc, stored as a polar graph of constant radius around its
// center: point(t) = polar_point(frame, radius, t) for t in [t_begin, t_end],
// traversed with increasing t (counterclockwise around the enclosed region).
struct ArcSegment {
    Point center;
    double radius = 0.0;
    PolarFrame frame; // at `center`
    double t_begin = 0.0;
    double t_end = 0.0;
    Point start;
    Point end;
    // Angle between the chord and the radius at each chord endpoint.
    double beta_begin = 0.0;
    double beta_end = 0.0;
};

// Per-vertex junction data of the support-arc union: the beta angles of the
// two arcs meeting at the vertex, delta = pi/2 - beta, and the turning
// half-angle theta = (beta_in + beta_out - interior_angle)/2. theta >= 0 is
// exactly the convexity condition delta_in + delta_out <= pi - interior.
struct VertexJoint {
    double beta_in = 0.0;
    double beta_out = 0.0;
    double delta_in = 0.0;
    double delta_out = 0.0;
    double theta = 0.0;
};

struct SupportArcs {
    double kappa0 = 0.0;
    double radius = 0.0; // R with ta(R) = pi/(2 kappa0)
    std::vector<ArcSegment> arcs;    // arcs[i] spans side i
    std::vector<VertexJoint> joints; // joints[i] at vertex i
};

// Support arc of radius R = arc_gtan(lambda, pi/(2 kappa0)) through each
// side's endpoints, center on the inward perpendicular bisector. Requires
// kappa0 <= min vertex curvature and ta(l_i/2) <= ta(R) for every side
// (ChordTooLong otherwise). ConvexityViolated if some theta < -1e-9.
SupportArcs build_support_arcs(const ConvexPolygon& poly, double kappa0);

// Concentric arcs of radius R + eps; endpoints move outward along the radial
// rays. RadiusOverflow when lambda > 0 and R + eps >= pi/(2 sqrt(lambda)).
std::vector<ArcSegment> offset_arcs(const SpaceForm& sf, const SupportArcs& support, double eps);

// Quartic connector r(phi) = r0 + a phi^2 + b phi^4 on phi in [-theta, theta]
// in geodesic polar coordinates around a vertex. The coefficients solve
// r(+-theta) = eps, r'(+-theta) = 0, and curvature(+-theta) = co(R + eps):
// with r''(+-theta) = 8 b theta^2 that forces
//   b = (s(eps) c(eps) - co(R+eps) s(eps)^2) / (8 theta^2)  (> 0 for small eps).
struct ConnectorCoefficients {
    double r0 = 0.0;
    double a = 0.0;
    double b = 0.0;
};

// DegenerateTheta for theta <= 1e-9 (the arcs already meet tangentially).
ConnectorCoefficients connector_coefficients(double lambda, double R, double eps, double theta);

// Signed geodesic curvature of the polar graph phi -> (r(phi), phi) at a
// state (r, r', r''), normal pointing toward the pole:
//   k = s(r) (-r'' + s(r) c(r) + 2 r'^2 co(r)) / (s(r)^2 + r'^2)^(3/2).
// At lambda = 0 this is the classical planar polar-curvature formula.
double polar_curvature(double lambda, double r, double dr, double ddr);

// Scaled connector curvature profile lim eps->0 of eps * k(phi), the planar
// polar curvature of Rt(phi) = 1 + (theta^2 - phi^2)^2 / (8 theta^2).
// Positive on (-theta, theta), zero at the endpoints where the connector
// matches the bounded arc curvature.
double limit_profile(double phi, double theta);

struct ConnectorCurve {
    Point vertex;
    PolarFrame frame; // e1 = exterior bisector; phi = -theta meets the incoming arc
    double theta = 0.0;
    double eps = 0.0;
    ConnectorCoefficients coeffs;

    double r(double phi) const;
    double dr(double phi) const;
    double ddr(double phi) const;
};

struct CurvePiece {
    enum class Kind { Arc, Connector };
    Kind kind = Kind::Arc;
    std::size_t index = 0; // side index for arcs, vertex index for connectors
    std::variant<ArcSegment, ConnectorCurve> geometry;
};

struct PiecewiseCurve {
    SpaceForm sf;
    double kappa0 = 0.0;
    double support_radius = 0.0;
    double eps = 0.0;
    bool closed = true;
    std::vector<CurvePiece> pieces;
};

struct AssembleDiagnostics {
    double eps_used = 0.0;          // after adaptive halving, if any
    double arc_curvature = 0.0;     // co(R + eps)
    double max_gap = 0.0;           // C0 junction mismatch
    double max_tangent_mismatch = 0.0; // C1, radians
    double max_curvature_jump = 0.0;   // C2
    double min_curvature = 0.0;     // over the sampling grid
    bool vertices_enclosed = false;
};

struct SmoothedCurve {
    PiecewiseCurve curve;
    AssembleDiagnostics diagnostics;
};

// Closed alternating arc/connector curve around the polygon at offset eps.
// If the minimum connector curvature does not clear the arc curvature at the
// requested eps, eps is halved (down to 1e-8) before giving up. Junction
// diagnostics beyond 1e-6 raise ToleranceExceeded.
SmoothedCurve assemble(const ConvexPolygon& poly, double kappa0, double eps);

struct BlowupVertexRow {
    std::size_t vertex = 0;
    double theta = 0.0;
    double min_interior_curvature = 0.0;
    // max over the interior grid (5% endpoint margin) of
    // |eps * k(phi) - limit_profile(phi, theta)| / limit_profile(phi, theta)
    double max_profile_deviation = 0.0;
};

struct BlowupRow {
    double eps = 0.0;
    std::vector<BlowupVertexRow> vertices;
    double min_curvature = 0.0;     // over the whole sampled curve
    double enclosing_radius = 0.0;  // min_disk radius of the sampled curve
    double rolling_margin = 0.0;    // 1/min_curvature - ta(enclosing_radius)
};

// Connector blow-up diagnostics for a decreasing list of offsets: interior
// curvature minima (which scale like 1/eps), convergence of eps * k to the
// limit profile, the enclosing radius of the sampled curve (decreasing
// toward the polygon circumradius), and the smooth rolling bound
// ta(R(C_eps)) <= 1/min-curvature evaluated on the measured minimum.
std::vector<BlowupRow> blowup_sweep(const ConvexPolygon& poly, double kappa0,
                                    std::span<const double> eps_list);

struct CurveSample {
    CurvePiece::Kind kind = CurvePiece::Kind::Arc;
    std::size_t piece_index = 0;
    double param = 0.0;
    Point point;
    double curvature = 0.0;
};

// Evenly sampled points with analytic curvature, `per_piece` samples on each
// arc and connector.
std::vector<CurveSample> sample_curve(const PiecewiseCurve& curve, int per_piece);

} // namespace spaceform
