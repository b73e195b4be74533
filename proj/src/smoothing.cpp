#include "spaceform/smoothing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spaceform/lambda_trig.hpp"

namespace spaceform {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kThetaTol = 1e-9;
constexpr double kMinEps = 1e-8;
constexpr int kConnectorGrid = 101;

// Depth of the arc center below the chord midpoint, from the right triangle
// (center, midpoint, endpoint): c(R) = c(d) c(l/2).
double center_depth(double lambda, double R, double half) {
    if (lambda == 0.0)
        return std::sqrt(std::max(0.0, R * R - half * half));
    const double ratio = gcos(lambda, R) / gcos(lambda, half);
    if (lambda > 0.0)
        return std::acos(std::clamp(ratio, -1.0, 1.0)) / std::sqrt(lambda);
    return std::acosh(std::max(1.0, ratio)) / std::sqrt(-lambda);
}

Vec3 unit_tangent(const SpaceForm& sf, const Vec3& v) {
    const double n = tangent_norm(sf, v);
    if (n <= 1e-15)
        fail(ErrorKind::DegenerateError, "zero tangent vector");
    return v * (1.0 / n);
}

ConnectorCurve make_connector(const SpaceForm& sf, const ConvexPolygon& poly,
                              const SupportArcs& support, std::size_t vertex, double eps) {
    const std::size_t n = poly.size();
    const Point& a = poly.vertex(vertex);
    const ArcSegment& arc_in = support.arcs[vertex];
    const ArcSegment& arc_out = support.arcs[(vertex + 1) % n];

    // Outward radial directions of the two arcs at the vertex.
    const Vec3 u_prev = unit_tangent(sf, -log_map(sf, a, arc_in.center).dir);
    const Vec3 u_next = unit_tangent(sf, -log_map(sf, a, arc_out.center).dir);

    const double theta = support.joints[vertex].theta;
    ConnectorCurve conn;
    conn.vertex = a;
    // e1 along the exterior bisector; phi = -theta lands on the incoming
    // side's radial ray (u_prev = cos(theta) e1 - sin(theta) e2).
    conn.frame = make_frame(sf, a, u_prev + u_next, u_next - u_prev);
    conn.theta = theta;
    conn.eps = eps;
    conn.coeffs = connector_coefficients(sf.lambda(), support.radius, eps, theta);
    return conn;
}

struct ConnectorScan {
    double min_curvature;
    double min_interior_curvature;
    double min_radius;
};

ConnectorScan scan_connector(double lambda, const ConnectorCurve& conn) {
    ConnectorScan scan{0.0, 0.0, 0.0};
    bool first = true;
    for (int j = 0; j < kConnectorGrid; ++j) {
        const double phi = -conn.theta + 2.0 * conn.theta * j / (kConnectorGrid - 1);
        const double r = conn.r(phi);
        const double k = polar_curvature(lambda, r, conn.dr(phi), conn.ddr(phi));
        if (first) {
            scan.min_curvature = k;
            scan.min_interior_curvature = std::numeric_limits<double>::infinity();
            scan.min_radius = r;
            first = false;
        } else {
            scan.min_curvature = std::min(scan.min_curvature, k);
            scan.min_radius = std::min(scan.min_radius, r);
        }
        if (j > 0 && j < kConnectorGrid - 1)
            scan.min_interior_curvature = std::min(scan.min_interior_curvature, k);
    }
    return scan;
}

} // namespace

double ConnectorCurve::r(double phi) const {
    const double p2 = phi * phi;
    return coeffs.r0 + coeffs.a * p2 + coeffs.b * p2 * p2;
}

double ConnectorCurve::dr(double phi) const {
    return 2.0 * coeffs.a * phi + 4.0 * coeffs.b * phi * phi * phi;
}

double ConnectorCurve::ddr(double phi) const {
    return 2.0 * coeffs.a + 12.0 * coeffs.b * phi * phi;
}

SupportArcs build_support_arcs(const ConvexPolygon& poly, double kappa0) {
    const SpaceForm& sf = poly.space();
    const double lam = sf.lambda();
    if (!(kappa0 > 0.0))
        fail(ErrorKind::DomainError, "kappa0 must be positive");
    const VertexCurvatureReport report = curvature_report(poly);
    if (kappa0 > report.kappa0 + 1e-12)
        fail(ErrorKind::DomainError,
             "kappa0 = " + std::to_string(kappa0) + " exceeds the minimum vertex curvature " +
                 std::to_string(report.kappa0));

    SupportArcs support;
    support.kappa0 = kappa0;
    const double ta_R = 0.5 * kPi / kappa0;
    if (lam < 0.0 && ta_R * sf.sqrt_abs_lambda() >= 1.0)
        fail(ErrorKind::DomainError,
             "pi/(2 kappa0) = " + std::to_string(ta_R) +
                 " is outside the range of ta; circular support arcs need kappa0 > (pi/2) "
                 "sqrt(-lambda)");
    support.radius = arc_gtan(lam, ta_R);
    const double R = support.radius;

    const std::size_t n = poly.size();
    support.arcs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Point& start = poly.vertex((i + n - 1) % n);
        const Point& end = poly.vertex(i);
        const double half = 0.5 * poly.side_length(i);
        const double ta_half = gtan(lam, half);
        if (ta_half > ta_R * (1.0 + 1e-12))
            fail(ErrorKind::ChordTooLong,
                 "side " + std::to_string(i) + ": ta(l/2) = " + std::to_string(ta_half) +
                     " exceeds ta(R) = " + std::to_string(ta_R));

        const double beta = std::acos(std::clamp(ta_half / ta_R, 0.0, 1.0));
        const Point mid = midpoint(sf, start, end);

        // Inward unit normal of the side at its midpoint: take any tangent
        // direction orthogonal to the chord and orient it by the polygon's
        // counterclockwise sense.
        const Vec3 chord = log_map(sf, mid, end).dir;
        Vec3 pick{1.0, 0.0, 0.0};
        const Vec3 cu = unit_tangent(sf, chord);
        if (std::abs(cu.x) > 0.7)
            pick = {0.0, 1.0, 0.0};
        PolarFrame mid_frame = make_frame(sf, mid, chord, pick);
        Vec3 inward = mid_frame.e2;
        const Point probe = exp_map(sf, {mid, inward * std::max(1e-6, 0.1 * half)});
        if (orientation(sf, start, end, probe) < 0.0)
            inward = -inward;

        const double depth = center_depth(lam, R, half);
        const Point center = exp_map(sf, {mid, inward * depth});

        // Parallel transport of the inward normal along the geodesic from the
        // chord midpoint to the center; its negative points along the arc's
        // symmetry axis, which keeps the frame well defined even for
        // half-circle arcs (digon boundary) where start and end radial
        // directions are antiparallel.
        Vec3 axis = -inward;
        if (!sf.flat())
            axis = inward * (-gcos(lam, depth)) + mid.coords * (lam * gsin(lam, depth));

        ArcSegment arc;
        arc.center = center;
        arc.radius = R;
        arc.frame = make_frame(sf, center, log_map(sf, center, start).dir, axis);
        const double sigma =
            std::asin(std::clamp(gsin(lam, half) / gsin(lam, R), -1.0, 1.0));
        arc.t_begin = 0.0;
        arc.t_end = 2.0 * sigma;
        arc.start = start;
        arc.end = end;
        arc.beta_begin = beta;
        arc.beta_end = beta;
        support.arcs.push_back(arc);
    }

    support.joints.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        VertexJoint& joint = support.joints[i];
        joint.beta_in = support.arcs[i].beta_end;
        joint.beta_out = support.arcs[(i + 1) % n].beta_begin;
        joint.delta_in = 0.5 * kPi - joint.beta_in;
        joint.delta_out = 0.5 * kPi - joint.beta_out;
        const double theta =
            0.5 * (joint.beta_in + joint.beta_out - poly.interior_angle(i));
        if (theta < -kThetaTol)
            fail(ErrorKind::ConvexityViolated,
                 "negative turning half-angle " + std::to_string(theta) + " at vertex " +
                     std::to_string(i));
        joint.theta = std::max(theta, 0.0);
    }
    return support;
}

std::vector<ArcSegment> offset_arcs(const SpaceForm& sf, const SupportArcs& support, double eps) {
    if (!(eps > 0.0))
        fail(ErrorKind::DomainError, "offset distance must be positive");
    const double radius = support.radius + eps;
    if (sf.lambda() > 0.0 && radius >= 0.5 * kPi / sf.sqrt_abs_lambda())
        fail(ErrorKind::RadiusOverflow,
             "offset radius " + std::to_string(radius) + " reaches pi/(2 sqrt(lambda))");
    std::vector<ArcSegment> out;
    out.reserve(support.arcs.size());
    for (const ArcSegment& arc : support.arcs) {
        ArcSegment off = arc;
        off.radius = radius;
        off.start = polar_point(sf, arc.frame, radius, arc.t_begin);
        off.end = polar_point(sf, arc.frame, radius, arc.t_end);
        out.push_back(off);
    }
    return out;
}

ConnectorCoefficients connector_coefficients(double lambda, double R, double eps, double theta) {
    if (!(eps > 0.0))
        fail(ErrorKind::DomainError, "eps must be positive");
    if (theta <= kThetaTol)
        fail(ErrorKind::DegenerateTheta,
             "theta = " + std::to_string(theta) + ": the arcs meet tangentially");
    if (theta > 0.5 * kPi + 1e-12)
        fail(ErrorKind::DomainError, "theta must lie in (0, pi/2]");

    const double co = gcot(lambda, R + eps);
    const double s = gsin(lambda, eps);
    const double c = gcos(lambda, eps);
    // Junction curvature condition k(+-theta) = co(R+eps) at r = eps,
    // r' = 0 pins the second derivative; with r''(+-theta) = 8 b theta^2:
    const double ddr_target = s * c - co * s * s;
    ConnectorCoefficients coeffs;
    coeffs.b = ddr_target / (8.0 * theta * theta);
    coeffs.a = -2.0 * coeffs.b * theta * theta;
    coeffs.r0 = eps + coeffs.b * theta * theta * theta * theta;
    return coeffs;
}

double polar_curvature(double lambda, double r, double dr, double ddr) {
    if (!(r > 0.0))
        fail(ErrorKind::DomainError, "polar radius must be positive");
    if (lambda > 0.0 && r >= kPi / std::sqrt(lambda))
        fail(ErrorKind::DomainError, "polar radius beyond the cut locus");
    const double s = gsin(lambda, r);
    const double c = gcos(lambda, r);
    const double speed2 = s * s + dr * dr;
    return (-s * ddr + s * s * c + 2.0 * dr * dr * c) / (speed2 * std::sqrt(speed2));
}

double limit_profile(double phi, double theta) {
    const double q = theta * theta - phi * phi;
    const double rt = 1.0 + q * q / (8.0 * theta * theta);
    const double drt = -phi * q / (2.0 * theta * theta);
    const double ddrt = -0.5 + 1.5 * phi * phi / (theta * theta);
    const double speed2 = rt * rt + drt * drt;
    return (rt * rt + 2.0 * drt * drt - rt * ddrt) / (speed2 * std::sqrt(speed2));
}

SmoothedCurve assemble(const ConvexPolygon& poly, double kappa0, double eps) {
    if (!(eps > 0.0))
        fail(ErrorKind::DomainError, "eps must be positive");
    const SpaceForm& sf = poly.space();
    const double lam = sf.lambda();
    const SupportArcs support = build_support_arcs(poly, kappa0);
    const std::size_t n = poly.size();

    // The connector curvature only dominates the arc curvature for small
    // enough offsets; halve until it does.
    for (double e = eps; e >= kMinEps; e *= 0.5) {
        std::vector<ArcSegment> offs;
        try {
            offs = offset_arcs(sf, support, e);
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::RadiusOverflow)
                continue; // a smaller offset may fit
            throw;
        }

        std::vector<ConnectorCurve> conns;
        std::vector<bool> has_conn(n, false);
        conns.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (support.joints[i].theta <= kThetaTol) {
                conns.emplace_back(); // placeholder, never used
                continue;
            }
            has_conn[i] = true;
            conns.push_back(make_connector(sf, poly, support, i, e));
        }

        AssembleDiagnostics diag;
        diag.eps_used = e;
        diag.arc_curvature = gcot(lam, support.radius + e);
        diag.min_curvature = diag.arc_curvature;
        diag.vertices_enclosed = true;

        for (std::size_t i = 0; i < n; ++i) {
            const ArcSegment& in = offs[i];
            const ArcSegment& out = offs[(i + 1) % n];
            const Vec3 t_in = unit_tangent(
                sf, polar_curve_tangent(sf, in.frame, in.radius, 0.0, in.t_end));
            const Vec3 t_out = unit_tangent(
                sf, polar_curve_tangent(sf, out.frame, out.radius, 0.0, out.t_begin));

            if (!has_conn[i]) {
                diag.max_gap = std::max(diag.max_gap, distance(sf, in.end, out.start));
                diag.max_tangent_mismatch =
                    std::max(diag.max_tangent_mismatch, angle_between(sf, t_in, t_out));
                continue;
            }
            const ConnectorCurve& conn = conns[i];
            const double th = conn.theta;
            const Point c_begin = polar_point(sf, conn.frame, conn.r(-th), -th);
            const Point c_end = polar_point(sf, conn.frame, conn.r(th), th);
            diag.max_gap = std::max({diag.max_gap, distance(sf, in.end, c_begin),
                                     distance(sf, c_end, out.start)});

            const Vec3 tc_begin = unit_tangent(
                sf, polar_curve_tangent(sf, conn.frame, conn.r(-th), conn.dr(-th), -th));
            const Vec3 tc_end = unit_tangent(
                sf, polar_curve_tangent(sf, conn.frame, conn.r(th), conn.dr(th), th));
            diag.max_tangent_mismatch =
                std::max({diag.max_tangent_mismatch, angle_between(sf, t_in, tc_begin),
                          angle_between(sf, tc_end, t_out)});

            const double k_begin = polar_curvature(lam, conn.r(-th), conn.dr(-th), conn.ddr(-th));
            const double k_end = polar_curvature(lam, conn.r(th), conn.dr(th), conn.ddr(th));
            diag.max_curvature_jump =
                std::max({diag.max_curvature_jump, std::abs(k_begin - diag.arc_curvature),
                          std::abs(k_end - diag.arc_curvature)});

            const ConnectorScan scan = scan_connector(lam, conn);
            diag.min_curvature = std::min(diag.min_curvature, scan.min_curvature);
            if (!(scan.min_radius > 1e-12))
                diag.vertices_enclosed = false;
        }

        // Each vertex sits one offset inside its adjacent arcs.
        for (std::size_t i = 0; i < n; ++i) {
            const double d_in = distance(sf, offs[i].center, poly.vertex(i));
            const double d_out = distance(sf, offs[(i + 1) % n].center, poly.vertex(i));
            if (d_in >= offs[i].radius - 1e-12 || d_out >= offs[(i + 1) % n].radius - 1e-12)
                diag.vertices_enclosed = false;
        }

        if (diag.min_curvature < diag.arc_curvature - 1e-8)
            continue; // connectors too flat at this offset

        if (diag.max_gap > 1e-6 || diag.max_tangent_mismatch > 1e-6 ||
            diag.max_curvature_jump > 1e-6)
            fail(ErrorKind::ToleranceExceeded,
                 "junction diagnostics out of tolerance (gap " + std::to_string(diag.max_gap) +
                     ", tangent " + std::to_string(diag.max_tangent_mismatch) + ", curvature " +
                     std::to_string(diag.max_curvature_jump) + ")");

        SmoothedCurve result{{sf, kappa0, support.radius, e, true, {}}, diag};
        result.curve.pieces.reserve(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            result.curve.pieces.push_back({CurvePiece::Kind::Arc, i, offs[i]});
            if (has_conn[i])
                result.curve.pieces.push_back({CurvePiece::Kind::Connector, i, conns[i]});
        }
        return result;
    }
    fail(ErrorKind::ToleranceExceeded,
         "no offset above " + std::to_string(kMinEps) +
             " gives connectors at least as curved as the arcs");
}

std::vector<BlowupRow> blowup_sweep(const ConvexPolygon& poly, double kappa0,
                                    std::span<const double> eps_list) {
    if (eps_list.empty())
        fail(ErrorKind::EmptyInput, "empty eps list");
    for (std::size_t i = 0; i < eps_list.size(); ++i) {
        if (!(eps_list[i] > 0.0))
            fail(ErrorKind::DomainError, "offsets must be positive");
        if (i > 0 && eps_list[i] >= eps_list[i - 1])
            fail(ErrorKind::DomainError, "offsets must decrease");
    }

    const SpaceForm& sf = poly.space();
    const double lam = sf.lambda();
    const SupportArcs support = build_support_arcs(poly, kappa0);
    const std::size_t n = poly.size();

    std::vector<BlowupRow> rows;
    rows.reserve(eps_list.size());
    for (double eps : eps_list) {
        BlowupRow row;
        row.eps = eps;
        const std::vector<ArcSegment> offs = offset_arcs(sf, support, eps);
        row.min_curvature = gcot(lam, support.radius + eps);

        std::vector<Point> samples;
        for (const ArcSegment& arc : offs) {
            const double span = arc.t_end - arc.t_begin;
            const int m = std::max(2, static_cast<int>(std::ceil(span / 1e-2)) + 1);
            for (int j = 0; j < m; ++j)
                samples.push_back(polar_point(sf, arc.frame, arc.radius,
                                              arc.t_begin + span * j / (m - 1)));
        }

        for (std::size_t i = 0; i < n; ++i) {
            if (support.joints[i].theta <= kThetaTol)
                continue;
            const ConnectorCurve conn = make_connector(sf, poly, support, i, eps);
            BlowupVertexRow vrow;
            vrow.vertex = i;
            vrow.theta = conn.theta;
            vrow.min_interior_curvature = std::numeric_limits<double>::infinity();
            vrow.max_profile_deviation = 0.0;
            const int margin = (kConnectorGrid - 1) / 20; // 5% of the grid per end
            for (int j = 0; j < kConnectorGrid; ++j) {
                const double phi = -conn.theta + 2.0 * conn.theta * j / (kConnectorGrid - 1);
                const double k =
                    polar_curvature(lam, conn.r(phi), conn.dr(phi), conn.ddr(phi));
                samples.push_back(polar_point(sf, conn.frame, conn.r(phi), phi));
                row.min_curvature = std::min(row.min_curvature, k);
                if (j > 0 && j < kConnectorGrid - 1)
                    vrow.min_interior_curvature = std::min(vrow.min_interior_curvature, k);
                if (j >= margin && j <= kConnectorGrid - 1 - margin) {
                    const double profile = limit_profile(phi, conn.theta);
                    vrow.max_profile_deviation = std::max(
                        vrow.max_profile_deviation, std::abs(eps * k - profile) / profile);
                }
            }
            row.vertices.push_back(vrow);
        }

        row.enclosing_radius = min_disk(sf, samples).radius;
        row.rolling_margin = 1.0 / row.min_curvature - gtan(lam, row.enclosing_radius);
        rows.push_back(row);
    }
    return rows;
}

std::vector<CurveSample> sample_curve(const PiecewiseCurve& curve, int per_piece) {
    if (per_piece < 2)
        fail(ErrorKind::DomainError, "need at least 2 samples per piece");
    const SpaceForm& sf = curve.sf;
    const double lam = sf.lambda();
    std::vector<CurveSample> out;
    out.reserve(curve.pieces.size() * static_cast<std::size_t>(per_piece));
    for (const CurvePiece& piece : curve.pieces) {
        if (piece.kind == CurvePiece::Kind::Arc) {
            const auto& arc = std::get<ArcSegment>(piece.geometry);
            const double k = gcot(lam, arc.radius);
            for (int j = 0; j < per_piece; ++j) {
                const double t =
                    arc.t_begin + (arc.t_end - arc.t_begin) * j / (per_piece - 1);
                out.push_back({piece.kind, piece.index, t,
                               polar_point(sf, arc.frame, arc.radius, t), k});
            }
        } else {
            const auto& conn = std::get<ConnectorCurve>(piece.geometry);
            for (int j = 0; j < per_piece; ++j) {
                const double phi = -conn.theta + 2.0 * conn.theta * j / (per_piece - 1);
                const double r = conn.r(phi);
                out.push_back({piece.kind, piece.index, phi,
                               polar_point(sf, conn.frame, r, phi),
                               polar_curvature(lam, r, conn.dr(phi), conn.ddr(phi))});
            }
        }
    }
    return out;
}

} // namespace spaceform
