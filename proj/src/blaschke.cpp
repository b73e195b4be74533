#include "spaceform/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spaceform/lambda_trig.hpp"

namespace spaceform {

namespace {

constexpr double kPi = 3.14159265358979323846;

} // namespace

double bound_radius(double lambda, double kappa0) {
    if (!(kappa0 > 0.0))
        fail(ErrorKind::DomainError, "kappa0 must be positive");
    const double x = 0.5 * kPi / kappa0;
    if (lambda < 0.0 && x * std::sqrt(-lambda) >= 1.0)
        fail(ErrorKind::DomainError,
             "pi/(2 kappa0) = " + std::to_string(x) +
                 " is outside the range of ta for lambda = " + std::to_string(lambda) +
                 "; no finite bound radius (requires kappa0 > (pi/2) sqrt(-lambda))");
    return arc_gtan(lambda, x);
}

double bound_radius_flat(double lambda, double kappa0, double frak_e) {
    if (!(kappa0 > 0.0))
        fail(ErrorKind::DomainError, "kappa0 must be positive");
    if (lambda == 0.0)
        return 0.5 * kPi / kappa0;
    if (!(frak_e > 0.0))
        fail(ErrorKind::InvalidFrakE, "frak_e must be positive");
    if (lambda > 0.0 && 2.0 * frak_e >= kPi / std::sqrt(lambda))
        fail(ErrorKind::InvalidFrakE, "2 frak_e must stay below pi/sqrt(lambda)");
    const double x = gtan(lambda, frak_e) / frak_e * 0.5 * kPi / kappa0;
    if (lambda < 0.0 && x * std::sqrt(-lambda) >= 1.0)
        fail(ErrorKind::DomainError,
             "flat bound argument " + std::to_string(x) + " is outside the range of ta");
    return arc_gtan(lambda, x);
}

BlaschkeReport verify(const ConvexPolygon& poly, CurvatureDefinition definition,
                      std::optional<double> frak_e, double tol) {
    const double lam = poly.space().lambda();
    const VertexCurvatureReport report = curvature_report(poly);

    BlaschkeReport out;
    out.lambda = lam;
    out.definition = definition;
    out.circumradius = poly.circumradius();
    out.frak_e = frak_e;

    if (definition == CurvatureDefinition::TaDef) {
        out.kappa0 = report.kappa0;
        out.bound = 0.5 * kPi / out.kappa0;
        out.margin = out.bound - gtan(lam, out.circumradius);
    } else {
        out.kappa0 = report.kappa0_flat;
        if (lam == 0.0) {
            out.bound = 0.5 * kPi / out.kappa0;
            out.margin = out.bound - out.circumradius;
        } else {
            if (!frak_e)
                fail(ErrorKind::InvalidFrakE,
                     "the flat definition needs frak_e when lambda != 0");
            const double e = *frak_e;
            if (!(e > 0.0))
                fail(ErrorKind::InvalidFrakE, "frak_e must be positive");
            for (std::size_t i = 0; i < poly.size(); ++i) {
                const double l = poly.side_length(i);
                if (lam > 0.0 && l > 2.0 * e + 1e-12)
                    fail(ErrorKind::FrakEInconsistent,
                         "side " + std::to_string(i) + " exceeds the half-side bound 2 frak_e");
                if (lam < 0.0 && l < 2.0 * e - 1e-12)
                    fail(ErrorKind::FrakEInconsistent,
                         "side " + std::to_string(i) + " is below the half-side bound 2 frak_e");
            }
            if (lam > 0.0 && 2.0 * e >= kPi / poly.space().sqrt_abs_lambda())
                fail(ErrorKind::InvalidFrakE, "2 frak_e must stay below pi/sqrt(lambda)");
            out.bound = gtan(lam, e) / e * 0.5 * kPi / out.kappa0;
            out.margin = out.bound - gtan(lam, out.circumradius);
        }
    }

    out.holds = out.margin >= -tol;
    out.near_equality = out.margin < 1e-6;
    if (out.near_equality) {
        // The bound is attained exactly by 2-covered segments; flag whether
        // the polygon is numerically one.
        bool digon_like = poly.is_digon();
        if (!digon_like) {
            digon_like = true;
            for (std::size_t i = 0; i < poly.size(); ++i)
                digon_like = digon_like && poly.interior_angle(i) < 1e-6;
        }
        out.degenerate_digon = digon_like;
    }
    return out;
}

std::vector<ConvergenceRow> convergence_table(double lambda, double radius,
                                              std::span<const int> n_list) {
    if (!(radius > 0.0))
        fail(ErrorKind::DomainError, "radius must be positive");
    if (lambda > 0.0 && radius >= 0.5 * kPi / std::sqrt(lambda))
        fail(ErrorKind::RadiusTooLarge, "radius must stay below pi/(2 sqrt(lambda))");

    const SpaceForm sf(lambda);
    const double limit = gcot(lambda, radius);
    const double ta_R = gtan(lambda, radius);

    std::vector<ConvergenceRow> rows;
    rows.reserve(n_list.size());
    for (int n : n_list) {
        ConvergenceRow row;
        row.n = n;
        row.limit = limit;

        const ConvexPolygon poly = regular_inscribed(sf, radius, n);
        double kmin = vertex_curvature(poly, 0);
        for (std::size_t i = 1; i < poly.size(); ++i)
            kmin = std::min(kmin, vertex_curvature(poly, i));
        row.kappa_vertex = kmin;

        // Scalar route: half-side from the right triangle (center, side
        // midpoint, vertex), half-angle from ta(l/2) = ta(R) cos(B/2).
        const double s_half = gsin(lambda, radius) * std::sin(kPi / n);
        const double c_half = std::sqrt(1.0 - lambda * s_half * s_half);
        const double ta_half = s_half / c_half;
        const double gamma = std::asin(std::clamp(ta_half / ta_R, -1.0, 1.0));
        row.kappa_closed_form = gamma / ta_half;

        row.error = std::abs(row.kappa_vertex - limit);
        rows.push_back(row);
    }
    return rows;
}

} // namespace spaceform
