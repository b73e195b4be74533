#pragma once

#include <cmath>
#include <random>

#include "spaceform/geometry.hpp"
#include "spaceform/lambda_trig.hpp"

// Oracles and samplers shared by the test suites. Everything here is kept
// independent of the library code paths it checks: plain <cmath> calls,
// central differences, root bisection, and the three-sample circumcircle.

namespace testsupport {

inline constexpr double kPi = 3.14159265358979323846;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

// Central-difference derivative.
template <typename F>
double derivative(F f, double t, double h = 1e-5) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

// Monotone bisection solve of f(t) = x on [lo, hi].
template <typename F>
double bisect(F f, double x, double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < x)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// Curvature of the circle through three nearby curve samples: the
// osculating-circle estimate co(radius of circumcircle3).
inline double osculating_curvature(const spaceform::SpaceForm& sf, const spaceform::Point& a,
                                   const spaceform::Point& b, const spaceform::Point& c) {
    const spaceform::Circumcircle circle = spaceform::circumcircle3(sf, a, b, c);
    return spaceform::gcot(sf.lambda(), circle.radius);
}

// Random point within geodesic radius r_max of the canonical base point.
inline spaceform::Point random_point(const spaceform::SpaceForm& sf, std::mt19937_64& rng,
                                     double r_max) {
    const spaceform::PolarFrame frame = spaceform::canonical_frame(sf);
    const double r = r_max * std::sqrt(uniform(rng, 0.0, 1.0));
    const double phi = uniform(rng, 0.0, 2.0 * kPi);
    return spaceform::polar_point(sf, frame, r, phi);
}

} // namespace testsupport
