#include "hypersing/finite_part_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hypersing/errors.hpp"

namespace hypersing {

namespace {

using boost::math::quadrature::gauss_kronrod;
using real = long double;

constexpr real kPi = std::numbers::pi_v<long double>;
constexpr real kRemovableBand = 1e-8L;
constexpr unsigned kMaxDepth = 15;
constexpr double kToleranceFloor = 1e-13;

std::string to_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

real sin_power(real theta, int k) {
    real s = std::sin(theta);
    real p = 1.0L;
    for (int i = 0; i < k; ++i) p *= s;
    return p;
}

real integrate(const std::function<real(real)>& g, real a, real b, double tolerance, const char* what) {
    real error = 0.0L;
    real value = gauss_kronrod<real, 31>::integrate(g, a, b, kMaxDepth, static_cast<real>(tolerance) * 1e-2L, &error);
    real scale = 1.0L + std::abs(value);
    if (!(error <= static_cast<real>(std::max(tolerance, kToleranceFloor)) * scale))
        throw ConvergenceFailure(std::string(what) + ": quadrature error estimate " +
                                 to_sci(static_cast<double>(error)) + " above tolerance");
    return value;
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Central difference of order k (1..3) with O(h^2) error series.
real central_difference(const std::function<real(real)>& g, real r, real h, int k) {
    switch (k) {
    case 1: return (g(r + h) - g(r - h)) / (2 * h);
    case 2: return (g(r + h) - 2 * g(r) + g(r - h)) / (h * h);
    default: return (g(r + 2 * h) - 2 * g(r + h) + 2 * g(r - h) - g(r - 2 * h)) / (2 * h * h * h);
    }
}

}  // namespace

double SmoothDensity::derivative(double s, int order) const {
    if (derivative_evaluator) return derivative_evaluator(s, order);
    double h = 1e-4;
    if (order == 1) return (evaluator(s + h) - evaluator(s - h)) / (2 * h);
    return (evaluator(s + h) - 2 * evaluator(s) + evaluator(s - h)) / (h * h);
}

long double SmoothDensity::extended(long double s) const {
    if (extended_evaluator) return extended_evaluator(s);
    return evaluator(static_cast<double>(s));
}

SmoothDensity chebyshev_density(ChebKind kind, int n) {
    SmoothDensity f;
    f.extended_evaluator = [kind, n](long double s) {
        long double p0 = 1.0L;
        if (n == 0) return p0;
        long double p1 = kind == ChebKind::First ? s : 2 * s;
        for (int k = 1; k < n; ++k) {
            long double p2 = 2 * s * p1 - p0;
            p0 = p1;
            p1 = p2;
        }
        return p1;
    };
    f.evaluator = [kind, n](double s) { return eval_cheb(kind, n, s); };
    f.derivative_evaluator = [kind, n](double s, int order) {
        if (order != 1) throw std::invalid_argument("only first derivatives are provided");
        if (n == 0) return 0.0;
        if (kind == ChebKind::First) return n * eval_cheb(ChebKind::Second, n - 1, s);
        if (std::abs(s) < 1.0) return eval_cheb_derivative(kind, n, s);
        double sign = (s > 0 || n % 2 == 1) ? 1.0 : -1.0;
        return sign * n * (n + 1.0) * (n + 2.0) / 3.0;
    };
    return f;
}

double quad_tolerance() {
    static const double tol = [] {
        if (const char* env = std::getenv("HYPERSING_QUAD_TOL")) {
            char* end = nullptr;
            double v = std::strtod(env, &end);
            if (end != env && v > 0.0) return v;
        }
        return 1e-10;
    }();
    return tol;
}

double oracle_cauchy(const SmoothDensity& f, int m, double r, const OracleOptions& opt) {
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    if (!(std::abs(r) < 1.0)) throw DomainError("oracle_cauchy needs |r| < 1");
    const real rr = r;
    const real theta_r = std::acos(rr);
    const real weight_r = std::pow(1.0L - rr * rr, static_cast<real>(m) - 0.5L);
    const real fr = f.extended(rr);
    const real c = fr * weight_r;
    auto g = [&](real theta) -> real {
        real s = std::cos(theta);
        if (std::abs(theta - theta_r) < kRemovableBand) {
            // Limit of the subtracted integrand at theta_r.
            real st = std::sin(theta_r);
            real dnum = -static_cast<real>(f.derivative(r, 1)) * st * sin_power(theta_r, 2 * m) +
                        (m > 0 ? fr * 2 * m * sin_power(theta_r, 2 * m - 1) * rr : 0.0L) - c * rr;
            return dnum / (-st);
        }
        real num = f.extended(s) * sin_power(theta, 2 * m) -
                   c * std::sin(theta);
        return num / (s - rr);
    };
    real value = integrate(g, 0.0L, theta_r, opt.tolerance, "oracle_cauchy") +
                 integrate(g, theta_r, kPi, opt.tolerance, "oracle_cauchy");
    value += c * std::log((1.0L - rr) / (1.0L + rr));
    return static_cast<double>(value);
}

double oracle_hfp(const SmoothDensity& f, int alpha, int m, double r, const OracleOptions& opt) {
    if (alpha < 2 || alpha > 4) throw std::invalid_argument("oracle_hfp needs alpha in 2..4");
    if (!(std::abs(r) < 1.0)) throw DomainError("oracle_hfp needs |r| < 1");
    if (std::abs(r) > 1.0 - 5.0 * opt.step)
        throw NearEndpointError("r = " + std::to_string(r) + " is within 5h of a crack tip");
    OracleOptions inner = opt;
    inner.tolerance = std::min(opt.tolerance, kToleranceFloor);
    auto g = [&](real x) -> real { return oracle_cauchy(f, m, static_cast<double>(x), inner); };
    const int k = alpha - 1;
    const double target = alpha == 2 ? 1e-10 : 1e-8;
    std::vector<std::vector<real>> table;
    real h = opt.step;
    real best = 0.0L;
    real best_change = INFINITY;
    for (int level = 0; level < opt.max_levels; ++level, h /= 2) {
        std::vector<real> row{central_difference(g, r, h, k)};
        for (int j = 1; j <= level; ++j) {
            real factor = std::pow(4.0L, static_cast<real>(j)) - 1.0L;
            row.push_back(row[j - 1] + (row[j - 1] - table[level - 1][j - 1]) / factor);
        }
        if (level > 0) {
            real change = std::abs(row.back() - table.back().back());
            if (change < best_change) {
                best_change = change;
                best = row.back();
            }
            table.push_back(std::move(row));
            if (level >= 2 && best_change < target * (1.0L + std::abs(best))) break;
        } else {
            best = row.back();
            table.push_back(std::move(row));
        }
    }
    if (!(best_change < 1e-4L * (1.0L + std::abs(best))))
        throw ConvergenceFailure("oracle_hfp: Richardson extrapolation did not settle");
    return static_cast<double>(best) / factorial(k);
}

double oracle_exterior(const SmoothDensity& f, int alpha, int m, double r, const OracleOptions& opt) {
    if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
    if (m < 0) throw std::invalid_argument("m must be >= 0");
    if (!(std::abs(r) > 1.0)) throw DomainError("oracle_exterior needs |r| > 1");
    const real rr = r;
    auto g = [&](real theta) -> real {
        real s = std::cos(theta);
        return f.extended(s) * sin_power(theta, 2 * m) /
               std::pow(s - rr, alpha);
    };
    return static_cast<double>(integrate(g, 0.0L, kPi, opt.tolerance, "oracle_exterior"));
}

}  // namespace hypersing
