#pragma once

namespace spaceform {

// Generalized trigonometric functions of a 2D space form with curvature
// lambda: circular for lambda > 0, linear for lambda = 0, hyperbolic for
// lambda < 0. All of them are smooth in lambda; near lambda = 0 they are
// evaluated by truncated power series so the flat limit is continuous to
// machine precision.
//
//   gsin(lambda, t) = sin(sqrt(lambda) t)/sqrt(lambda) | t | sinh(sqrt(-lambda) t)/sqrt(-lambda)
//   gcos(lambda, t) = cos(sqrt(lambda) t)              | 1 | cosh(sqrt(-lambda) t)
//   gtan = gsin/gcos,  gcot = gcos/gsin

double gsin(double lambda, double t);
double gcos(double lambda, double t);

// Throws PoleError when gcos(lambda, t) vanishes (odd multiples of
// pi/(2 sqrt(lambda)) for lambda > 0).
double gtan(double lambda, double t);

// Reciprocal of gtan; t = 0 is a pole and raises PoleError.
double gcot(double lambda, double t);

// Inverse of gtan on the principal branch: the unique t with
// gtan(lambda, t) = x, |t| < pi/(2 sqrt(lambda)) when lambda > 0.
// For lambda < 0 the range of gtan is (-1/sqrt(-lambda), 1/sqrt(-lambda));
// arguments outside it raise DomainError.
double arc_gtan(double lambda, double x);

} // namespace spaceform
