#include "spaceform/lambda_trig.hpp"

#include <cmath>
#include <string>

#include "spaceform/error.hpp"

namespace spaceform {

namespace {

// Below this value of |lambda| t^2 the closed forms lose digits to the
// division by sqrt(lambda); the truncated series is exact to well under one
// ulp there (next omitted term < 1e-33 relative).
constexpr double kSeriesThreshold = 1e-8;

void require_finite(double lambda, double t) {
    if (!std::isfinite(lambda) || !std::isfinite(t))
        fail(ErrorKind::DomainError,
             "non-finite argument (lambda=" + std::to_string(lambda) +
                 ", t=" + std::to_string(t) + ")");
}

} // namespace

double gsin(double lambda, double t) {
    require_finite(lambda, t);
    const double u = lambda * t * t;
    if (std::abs(u) < kSeriesThreshold) {
        // t (1 - u/6 + u^2/120 - u^3/5040)
        return t * (1.0 - u / 6.0 * (1.0 - u / 20.0 * (1.0 - u / 42.0)));
    }
    if (lambda > 0.0) {
        const double rt = std::sqrt(lambda);
        return std::sin(rt * t) / rt;
    }
    const double rt = std::sqrt(-lambda);
    return std::sinh(rt * t) / rt;
}

double gcos(double lambda, double t) {
    require_finite(lambda, t);
    const double u = lambda * t * t;
    if (std::abs(u) < kSeriesThreshold) {
        // 1 - u/2 + u^2/24 - u^3/720
        return 1.0 - u / 2.0 * (1.0 - u / 12.0 * (1.0 - u / 30.0));
    }
    if (lambda > 0.0)
        return std::cos(std::sqrt(lambda) * t);
    return std::cosh(std::sqrt(-lambda) * t);
}

double gtan(double lambda, double t) {
    const double c = gcos(lambda, t);
    if (std::abs(c) <= 1e-12)
        fail(ErrorKind::PoleError,
             "gtan pole near t=" + std::to_string(t) + " (lambda=" + std::to_string(lambda) + ")");
    return gsin(lambda, t) / c;
}

double gcot(double lambda, double t) {
    const double s = gsin(lambda, t);
    if (std::abs(s) <= 1e-12)
        fail(ErrorKind::PoleError,
             "gcot pole near t=" + std::to_string(t) + " (lambda=" + std::to_string(lambda) + ")");
    return gcos(lambda, t) / s;
}

double arc_gtan(double lambda, double x) {
    require_finite(lambda, x);
    const double u = lambda * x * x;
    if (std::abs(u) < kSeriesThreshold) {
        // x (1 - u/3 + u^2/5)
        return x * (1.0 - u / 3.0 * (1.0 - 0.6 * u));
    }
    if (lambda > 0.0) {
        const double rt = std::sqrt(lambda);
        return std::atan(rt * x) / rt;
    }
    const double rt = std::sqrt(-lambda);
    if (std::abs(x) * rt >= 1.0)
        fail(ErrorKind::DomainError,
             "arc_gtan: |x| = " + std::to_string(std::abs(x)) +
                 " is outside the range of ta for lambda = " + std::to_string(lambda) +
                 " (bound 1/sqrt(-lambda) = " + std::to_string(1.0 / rt) + ")");
    return std::atanh(rt * x) / rt;
}

} // namespace spaceform
