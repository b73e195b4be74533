#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spaceform/polygon.hpp"

namespace spaceform {

enum class CurvatureDefinition { TaDef, FlatDef };

// Quantitative circumradius bound report for one polygon.
//
// TaDef compares in the ta scale: bound = pi/(2 kappa0), margin =
// bound - ta_lambda(R). FlatDef uses the flat-normalized kappa0 and compares
// R <= pi/(2 kappa0) when lambda = 0, and ta_lambda(R) <=
// (ta_lambda(e)/e) * pi/(2 kappa0) otherwise, with e the half-side bound.
struct BlaschkeReport {
    double lambda = 0.0;
    CurvatureDefinition definition = CurvatureDefinition::TaDef;
    double kappa0 = 0.0;
    double circumradius = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    bool holds = false;
    bool near_equality = false;    // margin below 1e-6
    bool degenerate_digon = false; // checked when near_equality fires
    std::optional<double> frak_e;
};

// Largest circumradius permitted by the bound: arc_gtan(lambda, pi/(2 kappa0)).
// DomainError when kappa0 <= 0 or, for lambda < 0, pi/(2 kappa0) is outside
// the range of ta (no finite radius; requires kappa0 > (pi/2) sqrt(-lambda)).
double bound_radius(double lambda, double kappa0);

// Flat-definition variant. lambda = 0 ignores frak_e and returns
// pi/(2 kappa0); otherwise arc_gtan(lambda, (ta(frak_e)/frak_e) pi/(2 kappa0)).
double bound_radius_flat(double lambda, double kappa0, double frak_e);

// Evaluates the circumradius bound on a polygon, kappa0 taken as the minimum
// vertex curvature under the chosen definition. For FlatDef with lambda != 0
// frak_e is required and must be consistent with the sides (upper half-side
// bound for lambda > 0, lower for lambda < 0).
BlaschkeReport verify(const ConvexPolygon& poly, CurvatureDefinition definition,
                      std::optional<double> frak_e = std::nullopt, double tol = 1e-9);

struct ConvergenceRow {
    int n = 0;
    double kappa_vertex = 0.0;      // from the constructed polygon
    double kappa_closed_form = 0.0; // scalar closed form, no polygon involved
    double limit = 0.0;             // co_lambda(R), the circle's curvature
    double error = 0.0;             // |kappa_vertex - limit|
};

// Vertex curvature of regular inscribed n-gons against the circle curvature
// co_lambda(R), for each n in n_list. The two computation paths must agree;
// callers assert the tolerance.
std::vector<ConvergenceRow> convergence_table(double lambda, double radius,
                                              std::span<const int> n_list);

} // namespace spaceform
