#pragma once

#include <functional>

#include "hypersing/chebyshev.hpp"

namespace hypersing {

/// Density f on [-1, 1]. derivative_evaluator(s, k) returns the k-th
/// derivative; when absent, central differences are used. extended_evaluator
/// is an optional long double evaluation used by the quadrature oracles.
struct SmoothDensity {
    std::function<double(double)> evaluator;
    std::function<double(double, int)> derivative_evaluator;
    std::function<long double(long double)> extended_evaluator;

    double derivative(double s, int order) const;
    long double extended(long double s) const;
};

SmoothDensity chebyshev_density(ChebKind kind, int n);

/// Default absolute/relative quadrature tolerance; HYPERSING_QUAD_TOL
/// overrides the built-in 1e-10.
double quad_tolerance();

struct OracleOptions {
    double tolerance = quad_tolerance();
    double step = 1e-2;   // initial finite-difference step for alpha >= 2
    int max_levels = 8;   // Richardson halvings
};

/// Principal value of int f(s) (1-s^2)^{m-1/2} / (s - r) ds, |r| < 1.
double oracle_cauchy(const SmoothDensity& f, int m, double r, const OracleOptions& opt = {});

/// Finite part of int f(s) (1-s^2)^{m-1/2} / (s - r)^alpha ds, alpha in 2..4,
/// as the (alpha-1)-th r-derivative of the principal value over (alpha-1)!.
double oracle_hfp(const SmoothDensity& f, int alpha, int m, double r, const OracleOptions& opt = {});

/// Regular integral for |r| > 1, any alpha >= 1.
double oracle_exterior(const SmoothDensity& f, int alpha, int m, double r, const OracleOptions& opt = {});

}  // namespace hypersing
