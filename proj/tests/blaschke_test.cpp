#include <doctest.h>

#include <cmath>
#include <vector>

#include "spaceform/blaschke.hpp"
#include "spaceform/error.hpp"
#include "spaceform/lambda_trig.hpp"

#include "test_support.hpp"

using namespace spaceform;
using testsupport::kPi;

namespace {

Point pt(double x, double y, double z = 0.0) { return {{x, y, z}}; }

} // namespace

TEST_CASE("bound_radius examples") {
    CHECK(bound_radius(0.0, 1.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    CHECK(bound_radius(1.0, kPi / 2) == doctest::Approx(kPi / 4).epsilon(1e-14));
    // root-finding oracle on gtan
    const double ref =
        testsupport::bisect([](double t) { return gtan(-1.0, t); }, kPi / 4, 0.0, 5.0);
    CHECK(bound_radius(-1.0, 2.0) == doctest::Approx(ref).epsilon(1e-12));
}

TEST_CASE("bound_radius domain wall in the hyperbolic plane") {
    // pi/(2 kappa0) must stay below 1/sqrt(-lambda); kappa0 = 1.5 violates it
    try {
        bound_radius(-1.0, 1.5);
        FAIL("expected DomainError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DomainError);
    }
    CHECK_NOTHROW(bound_radius(-1.0, 1.6));
    CHECK_THROWS_AS(bound_radius(0.0, 0.0), Error);
}

TEST_CASE("bound_radius_flat examples") {
    CHECK(bound_radius_flat(0.0, 1.0, 123.0) == doctest::Approx(kPi / 2).epsilon(1e-15));
    // flat limit: ta(e)/e -> 1
    CHECK(std::abs(bound_radius_flat(1e-10, 1.0, 0.5) - kPi / 2) <= 1e-6);
    CHECK(std::abs(bound_radius_flat(-1e-10, 1.0, 0.5) - kPi / 2) <= 1e-6);
    // hyperbolic bound is strictly tighter than the ta-definition bound
    const double flat_bound = gtan(-1.0, 0.4) / 0.4 * kPi / (2.0 * 2.0);
    CHECK(flat_bound < kPi / 4);
    CHECK(bound_radius_flat(-1.0, 2.0, 0.4) < bound_radius(-1.0, 2.0));
    CHECK_THROWS_AS(bound_radius_flat(1.0, 1.0, 2.0), Error); // 2e beyond pi/sqrt(lambda)
}

TEST_CASE("verify on the flat square side 2") {
    const SpaceForm flat(0.0);
    const ConvexPolygon sq =
        ConvexPolygon::from_vertices(flat, {pt(-1, -1), pt(1, -1), pt(1, 1), pt(-1, 1)});
    const BlaschkeReport rep = verify(sq, CurvatureDefinition::TaDef);
    CHECK(rep.kappa0 == doctest::Approx(kPi / 4).epsilon(1e-13));
    CHECK(rep.circumradius == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rep.bound == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(rep.margin == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-11));
    CHECK(rep.holds);
    CHECK(!rep.near_equality);
}

TEST_CASE("digon attains the bound exactly") {
    for (double lam : {1.0, 0.0, -1.0}) {
        const SpaceForm sf(lam);
        for (double kappa0 : {0.5, 1.0, 2.0}) {
            if (lam < 0.0 && 0.5 * kPi / kappa0 >= 1.0)
                continue; // no such digon below the curvature floor
            const double len = 2.0 * bound_radius(lam, kappa0);
            const ConvexPolygon d = digon(sf, len);
            const BlaschkeReport rep = verify(d, CurvatureDefinition::TaDef);
            CHECK(std::abs(rep.kappa0 - kappa0) <= 1e-12);
            CHECK(std::abs(rep.margin) <= 1e-9);
            CHECK(rep.holds);
            CHECK(rep.near_equality);
            CHECK(rep.degenerate_digon);
        }
    }
    const SpaceForm flat(0.0);
    const BlaschkeReport rep = verify(digon(flat, kPi), CurvatureDefinition::TaDef);
    CHECK(rep.kappa0 == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(rep.circumradius == doctest::Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("flat-definition verify needs a consistent frak_e") {
    const SpaceForm sphere(1.0);
    const ConvexPolygon poly = regular_inscribed(sphere, 0.7, 5);
    const double hi = poly.side_length(0);
    CHECK_NOTHROW(verify(poly, CurvatureDefinition::FlatDef, 0.5 * hi));
    try {
        verify(poly, CurvatureDefinition::FlatDef, 0.4 * hi);
        FAIL("expected FrakEInconsistent");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FrakEInconsistent);
    }
    try {
        verify(poly, CurvatureDefinition::FlatDef);
        FAIL("expected InvalidFrakE");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidFrakE);
    }
    const SpaceForm hyper(-1.0);
    const ConvexPolygon hpoly = regular_inscribed(hyper, 0.7, 5);
    const double lo = hpoly.side_length(0);
    CHECK_NOTHROW(verify(hpoly, CurvatureDefinition::FlatDef, 0.5 * lo));
    CHECK_THROWS_AS(verify(hpoly, CurvatureDefinition::FlatDef, 0.6 * lo), Error);
}

TEST_CASE("flat scaling: kappa0 R is scale invariant") {
    const SpaceForm flat(0.0);
    const std::vector<Point> base{pt(-1, -0.4), pt(0.9, -0.8), pt(1.2, 0.5), pt(-0.3, 1.0)};
    const ConvexPolygon p1 = ConvexPolygon::from_vertices(flat, base);
    std::vector<Point> scaled;
    const double s = 3.7;
    for (const Point& p : base)
        scaled.push_back(pt(s * p.coords.x, s * p.coords.y));
    const ConvexPolygon p2 = ConvexPolygon::from_vertices(flat, scaled);
    const BlaschkeReport r1 = verify(p1, CurvatureDefinition::TaDef);
    const BlaschkeReport r2 = verify(p2, CurvatureDefinition::TaDef);
    CHECK(r2.circumradius == doctest::Approx(s * r1.circumradius).epsilon(1e-11));
    CHECK(r2.kappa0 == doctest::Approx(r1.kappa0 / s).epsilon(1e-11));
    const double product1 = r1.kappa0 * r1.circumradius * 2.0 / kPi;
    const double product2 = r2.kappa0 * r2.circumradius * 2.0 / kPi;
    CHECK(product1 == doctest::Approx(product2).epsilon(1e-11));
    CHECK(product1 <= 1.0);
}

TEST_CASE("convergence table flat radius 1") {
    const std::vector<int> ns{4, 6};
    const auto rows = convergence_table(0.0, 1.0, ns);
    CHECK(rows[0].kappa_vertex == doctest::Approx(kPi / (2 * std::sqrt(2.0))).epsilon(1e-12));
    CHECK(rows[1].kappa_vertex == doctest::Approx(kPi / 3).epsilon(1e-12));
    CHECK(rows[0].limit == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("convergence table: monotone second-order approach to co(R)") {
    std::vector<int> ns;
    for (int n = 4; n <= 1024; n *= 2)
        ns.push_back(n);
    struct Case {
        double lam, R;
    };
    for (const Case c : {Case{1.0, 0.7}, Case{0.0, 0.7}, Case{-1.0, 0.7}, Case{0.0, 1.2},
                         Case{-1.0, 1.2}}) {
        const auto rows = convergence_table(c.lam, c.R, ns);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            CHECK(std::abs(rows[i].kappa_vertex - rows[i].kappa_closed_form) <= 1e-9);
            if (i > 0) {
                CHECK(rows[i].error < rows[i - 1].error);
                if (rows[i].error > 1e-9) {
                    const double ratio = rows[i - 1].error / rows[i].error;
                    CHECK(ratio > 3.0);
                    CHECK(ratio < 5.0);
                }
            }
        }
        CHECK(rows.back().error < 1e-4);
    }
}

TEST_CASE("convergence table rejects oversized spherical radii") {
    const std::vector<int> ns{4};
    CHECK_THROWS_AS(convergence_table(1.0, 1.6, ns), Error);
}
