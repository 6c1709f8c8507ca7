#include "hypersing/crack_models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Dense>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/ooura_fourier_integrals.hpp>

#include "hypersing/errors.hpp"
#include "hypersing/exterior_integrals.hpp"
#include "hypersing/finite_part_oracle.hpp"

namespace hypersing {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kFourierTolerance = 1e-10;

boost::math::quadrature::ooura_fourier_cos<double>& cosine_transform() {
    thread_local boost::math::quadrature::ooura_fourier_cos<double> integrator(kFourierTolerance, 8);
    return integrator;
}

boost::math::quadrature::ooura_fourier_sin<double>& sine_transform() {
    thread_local boost::math::quadrature::ooura_fourier_sin<double> integrator(kFourierTolerance, 8);
    return integrator;
}

double sign(double v) {
    return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0);
}

// Re lambda + xi for xi >= 0, without cancellation.
double fgm_even_part(double xi, double beta) {
    if (xi == 0.0) return 0.0;
    double q = std::hypot(xi, beta);
    double half_sum = 0.5 * (xi * q + xi * xi);
    double diff = -xi * beta * beta / (xi + q);  // xi^2 - xi q
    return 0.5 * diff / (xi + std::sqrt(half_sum));
}

// Im lambda + (beta/2) for xi > 0, without cancellation.
double fgm_odd_part(double xi, double beta) {
    if (beta == 0.0) return 0.0;
    if (xi == 0.0) return 0.5 * beta;
    double q = std::hypot(xi, beta);
    double root = std::sqrt(xi / (2.0 * (q + xi)));
    return beta * (beta * beta / (q + xi)) / (4.0 * (q + xi) * (0.5 + root));
}

double mode3_tip_scale(double G_tip, double a) {
    return G_tip * std::sqrt(kPi / a);
}

std::function<double(int, double)> fgm_log_column(ChebKind family, double scale) {
    if (family == ChebKind::Second)
        return [scale](int n, double r) { return scale * log_moment_second_kind(n, r); };
    return [scale](int n, double r) { return scale * log_moment_first_kind(n, r); };
}

}  // namespace

double mode1_halfplane_kernel(double r, double s, const IntervalMap& interval) {
    const double lambda = interval.ratio();
    const double D = (r + s) + 2.0 * lambda;
    if (!(D > 0.0)) throw DomainError("half-plane kernel pole: (r + s) + 2(d+c)/(d-c) <= 0");
    const double X = r + lambda;
    const double D2 = D * D;
    return -1.0 / D2 + 12.0 * X / (D2 * D) - 12.0 * X * X / (D2 * D2);
}

ModeIHalfPlaneProblem mode1_from_ratio(double ratio) {
    ModeIHalfPlaneProblem p;
    p.c = ratio - 1.0;
    p.d = ratio + 1.0;
    return p;
}

NormalizedProblem mode1_problem(const ModeIHalfPlaneProblem& p, ChebKind family, int quadrature_points) {
    if (!(p.c > 0.0)) throw DomainError("mode I half-plane crack needs c > 0");
    IntervalMap interval = make_interval(p.c, p.d);
    if (!(p.kappa > 1.0 && p.kappa < 3.0)) throw DomainError("kappa must lie in (1, 3)");
    if (!(p.mu > 0.0)) throw DomainError("mu must be positive");
    const double a = interval.half_length();
    NormalizedProblem problem;
    problem.singular_terms = {{2, 1.0}};
    problem.regular_kernel = [interval](double r, double s) { return mode1_halfplane_kernel(r, s, interval); };
    problem.load = [interval, a, p](double r) {
        return -kPi * (1.0 + p.kappa) * a * p.load(interval.to_physical(r)) / (2.0 * p.mu);
    };
    problem.m = 1;
    problem.family = family;
    problem.quadrature_points = quadrature_points;
    return problem;
}

SifResult mode1_solve(const ModeIHalfPlaneProblem& p, int N, ChebKind family, int quadrature_points) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    NormalizedProblem problem = mode1_problem(p, family, quadrature_points);
    IntervalMap interval = make_interval(p.c, p.d);
    const double a = interval.half_length();
    SifResult out;
    out.interval = interval;
    out.report = solve(problem, N);
    out.N_used = N;
    const auto& e = out.report.coefficients;
    const double scale = (2.0 * p.mu / (1.0 + p.kappa)) * std::sqrt(kPi / a);
    out.k_left = scale * e.series(-1.0);
    out.k_right = scale * e.series(1.0);
    const double p0 = p.load(interval.midpoint());
    out.normalization = "p(mid) sqrt(pi (d-c)/2)";
    out.normalization_value = p0 * std::sqrt(kPi * a);
    out.normalized_left = out.k_left / out.normalization_value;
    out.normalized_right = out.k_right / out.normalization_value;
    return out;
}

std::complex<double> fgm_lambda(double xi, double beta) {
    const double ax = std::abs(xi);
    if (ax == 0.0) return {0.0, 0.0};
    const double q = std::hypot(ax, beta);
    const double A = ax * q;
    const double re = -std::sqrt(0.5 * (A + ax * ax));
    const double im = -sign(beta * xi) * std::sqrt(0.5 * ax * beta * beta / (q + ax));
    return {re, im};
}

double fgm_smooth_kernel(double u, double beta) {
    if (beta == 0.0) return 0.0;
    const double c = std::abs(beta);
    const double b2 = beta * beta;
    auto even = [beta, b2, c](double xi) {
        double reg = xi == 0.0 ? c : -std::expm1(-c * xi) / xi;
        return fgm_even_part(xi, beta) + 0.125 * b2 * reg;
    };
    auto odd = [beta](double xi) { return fgm_odd_part(xi, beta); };
    double cos_part;
    double sin_part = 0.0;
    if (u == 0.0) {
        boost::math::quadrature::exp_sinh<double> integrator;
        cos_part = integrator.integrate(even, 0.0, std::numeric_limits<double>::infinity(), 1e-12);
    } else {
        const double w = std::abs(u);
        cos_part = cosine_transform().integrate(even, w).first;
        sin_part = sign(u) * sine_transform().integrate(odd, w).first;
    }
    return 2.0 * cos_part - 2.0 * sin_part - 0.125 * b2 * std::log(u * u + c * c);
}

double fgm_regular_kernel(double x, double t, double beta) {
    if (beta == 0.0) return 0.0;
    const double u = t - x;
    if (u == 0.0) throw DomainError("fgm kernel is logarithmically singular at t = x");
    return 0.25 * beta * beta * std::log(std::abs(u)) + fgm_smooth_kernel(u, beta);
}

NormalizedProblem fgm_problem(const FgmModeIIIProblem& p, ChebKind family, int quadrature_points) {
    IntervalMap interval = make_interval(p.c, p.d);
    if (!(p.G0 > 0.0)) throw DomainError("G0 must be positive");
    const double a = interval.half_length();
    const double beta = p.beta;
    NormalizedProblem problem;
    problem.singular_terms = {{2, 1.0}};
    if (beta != 0.0) {
        problem.singular_terms.push_back({1, 0.5 * beta * a});
        const double log_a = std::log(a);
        problem.regular_kernel = [a, beta, log_a](double r, double s) {
            return 0.5 * a * a * (fgm_smooth_kernel(a * (s - r), beta) + 0.25 * beta * beta * log_a);
        };
        problem.free_term = fgm_log_column(family, 0.125 * a * a * beta * beta);
    }
    problem.load = [interval, a, p](double r) {
        double x = interval.to_physical(r);
        return kPi * a * p.load(x) / (p.G0 * std::exp(p.beta * x));
    };
    problem.m = 1;
    problem.family = family;
    problem.quadrature_points = quadrature_points;
    return problem;
}

SifResult fgm_solve(const FgmModeIIIProblem& p, int N, ChebKind family, int quadrature_points) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    NormalizedProblem problem = fgm_problem(p, family, quadrature_points);
    IntervalMap interval = make_interval(p.c, p.d);
    const double a = interval.half_length();
    SifResult out;
    out.interval = interval;
    out.report = solve(problem, N);
    out.N_used = N;
    const auto& e = out.report.coefficients;
    out.k_left = mode3_tip_scale(p.G0 * std::exp(p.beta * p.c), a) * e.series(-1.0);
    out.k_right = mode3_tip_scale(p.G0 * std::exp(p.beta * p.d), a) * e.series(1.0);
    out.normalization = "|p(mid)| sqrt(pi (d-c)/2)";
    out.normalization_value = std::abs(p.load(interval.midpoint())) * std::sqrt(kPi * a);
    if (out.normalization_value == 0.0) out.normalization_value = 1.0;
    out.normalized_left = out.k_left / out.normalization_value;
    out.normalized_right = out.k_right / out.normalization_value;
    return out;
}

double fgm_stress_outside(const FgmModeIIIProblem& p, const DensityExpansion& e, double x, int quadrature_points) {
    IntervalMap interval = make_interval(p.c, p.d);
    const double a = interval.half_length();
    const double r = interval.to_normalized(x);
    if (!(std::abs(r) > 1.0)) throw DomainError("fgm_stress_outside needs x outside the crack");
    double s2 = 0.0, s1 = 0.0;
    for (int n = 0; n <= e.N(); ++n) {
        s2 += e.coefficients[n] * exterior_integral({e.family, 2, e.m, n, r});
        if (p.beta != 0.0) s1 += e.coefficients[n] * exterior_integral({e.family, 1, e.m, n, r});
    }
    double regular = 0.0;
    if (p.beta != 0.0) {
        for (const auto& q : gauss_chebyshev_nodes_weights(ChebKind::Second, quadrature_points)) {
            double u = a * (q.node - r);
            double kernel = 0.25 * p.beta * p.beta * std::log(std::abs(u)) + fgm_smooth_kernel(u, p.beta);
            regular += q.weight * kernel * e.series(q.node);
        }
    }
    const double G = p.G0 * std::exp(p.beta * x);
    return G / (kPi * a) * (s2 + 0.5 * p.beta * a * s1 + 0.5 * a * a * regular);
}

LimitFit extract_sif_mode3(const FgmModeIIIProblem& p, const DensityExpansion& e, CrackTip tip,
                           int quadrature_points) {
    IntervalMap interval = make_interval(p.c, p.d);
    const double a = interval.half_length();
    constexpr int samples = 10;
    constexpr int order = 4;
    Eigen::MatrixXd A(samples, order);
    Eigen::VectorXd b(samples);
    for (int k = 0; k < samples; ++k) {
        const double eps = 1e-2 * std::pow(0.5, k);
        const double x = tip == CrackTip::Right ? p.d + a * eps : p.c - a * eps;
        const double root = std::sqrt(eps);
        for (int j = 0; j < order; ++j) A(k, j) = std::pow(root, j);
        b(k) = std::sqrt(2.0 * kPi * a * eps) * fgm_stress_outside(p, e, x, quadrature_points);
    }
    Eigen::VectorXd c = A.colPivHouseholderQr().solve(b);
    double residual = (A.lazyProduct(c) - b).norm() / std::sqrt(static_cast<double>(samples));
    return {c(0), residual};
}

double profile_tilt(const DensityExpansion& e) {
    double moment = 0.0, mass = 0.0;
    for (const auto& q : gauss_chebyshev_nodes_weights(ChebKind::Second, 256)) {
        double w = e.series(q.node) * std::pow(1.0 - q.node * q.node, e.m - 1);
        moment += q.weight * q.node * w;
        mass += q.weight * std::abs(w);
    }
    return mass > 0.0 ? moment / mass : 0.0;
}

double gradient_regular_kernel(double x, double t, double ell, double ellprime) {
    if (!(ell > 0.0)) throw DomainError("ell must be positive");
    if (!(ellprime >= 0.0)) throw DomainError("ellprime must be non-negative");
    if (ellprime == 0.0) return 0.0;
    if (!(ellprime < ell)) throw DomainError("gradient kernel has a pole for ellprime >= ell");
    const double u = t - x;
    if (u == 0.0) return 0.0;
    const double lp = ellprime;
    auto f = [ell, lp](double xi) {
        double Q = std::sqrt(xi * xi + 1.0 / (lp * lp));
        double gap = 1.0 / (lp * lp * (Q + xi));  // Q - xi
        double num = 0.5 * lp * xi * gap - 0.25 * (lp / ell) * (lp / ell) * gap +
                     0.25 * lp * lp * lp / (ell * ell * ell * ell);
        double den = lp / (ell * ell) - (Q + xi);
        return num / den;
    };
    return sign(u) * sine_transform().integrate(f, std::abs(u)).first;
}

NormalizedProblem gradient_problem(const GradientModeIIIProblem& p, int quadrature_points) {
    if (!(p.ell > 0.0)) throw DomainError("ell must be positive");
    if (!(p.ellprime >= 0.0)) throw DomainError("ellprime must be non-negative");
    if (!(p.a > 0.0)) throw DomainError("a must be positive");
    if (!(p.G > 0.0)) throw DomainError("G must be positive");
    const double a = p.a;
    const double ratio = p.ell / a;
    NormalizedProblem problem;
    problem.singular_terms = {{3, -2.0 * ratio * ratio}, {1, 1.0 - std::pow(p.ellprime / (2.0 * p.ell), 2)}};
    if (p.ellprime > 0.0) {
        if (!(p.ellprime < p.ell)) throw DomainError("gradient kernel has a pole for ellprime >= ell");
        problem.regular_kernel = [p, a](double r, double s) {
            return a * gradient_regular_kernel(a * r, a * s, p.ell, p.ellprime);
        };
        const double slope = kPi * p.ellprime / (2.0 * a);
        problem.free_term = [slope](int n, double r) {
            double w = 1.0 - r * r;
            double dT = n == 0 ? 0.0 : n * eval_cheb(ChebKind::Second, n - 1, r);
            return slope * (dT * w * std::sqrt(w) - 3.0 * r * eval_cheb(ChebKind::First, n, r) * std::sqrt(w));
        };
    }
    problem.load = [p, a](double r) { return kPi * p.load(a * r) / p.G; };
    problem.m = 2;
    problem.family = ChebKind::First;
    problem.quadrature_points = quadrature_points;
    return problem;
}

SifResult gradient_solve(const GradientModeIIIProblem& p, int N, ConstraintMode constraint, int quadrature_points) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    NormalizedProblem problem = gradient_problem(p, quadrature_points);
    SifResult out;
    out.interval = make_interval(-p.a, p.a);
    try {
        out.report = solve(problem, N, constraint);
    } catch (const SingularMatrixError& err) {
        if (constraint != ConstraintMode::ReplaceRow) throw;
        out.report = solve(problem, N, ConstraintMode::AppendLeastSquares);
        out.report.warnings.insert(out.report.warnings.begin(),
                                   std::string(err.what()) + "; fell back to appended least squares");
    }
    out.N_used = N;
    double sum = 0.0;
    for (double c : out.report.coefficients.coefficients) sum += c;
    const double ratio = p.ell / p.a;
    out.k_right = 3.0 * std::sqrt(kPi * p.a) * ratio * ratio * p.G * sum;
    out.k_left = -3.0 * std::sqrt(kPi * p.a) * ratio * ratio * p.G * out.report.coefficients.series(-1.0);
    out.normalization = "3 sqrt(pi a) (ell/a)^2 G sum a_n";
    out.normalization_value = 1.0;
    out.normalized_left = out.k_left;
    out.normalized_right = out.k_right;
    return out;
}

double gradient_displacement(const DensityExpansion& e, double a, double x) {
    if (e.family != ChebKind::First || e.m != 2)
        throw std::invalid_argument("gradient_displacement needs a first-kind m = 2 expansion");
    const double s = std::clamp(x / a, -1.0, 1.0);
    const double theta = std::acos(s);
    auto J = [theta](int j) {
        j = std::abs(j);
        return j == 0 ? kPi - theta : -std::sin(j * theta) / j;
    };
    double total = 0.0;
    for (int n = 0; n <= e.N(); ++n) {
        double integral = 0.375 * J(n) - 0.25 * (J(n - 2) + J(n + 2)) + 0.0625 * (J(n - 4) + J(n + 4));
        total += e.coefficients[n] * integral;
    }
    return a * total;
}

std::vector<ProfileSample> sample_profile(const IntervalMap& interval, int count,
                                          const std::function<double(double)>& value) {
    if (count < 2) throw std::invalid_argument("profile needs at least two samples");
    std::vector<ProfileSample> out;
    out.reserve(count);
    for (int k = 0; k < count; ++k) {
        double s = -1.0 + 2.0 * k / (count - 1);
        out.push_back({interval.to_physical(s), value(s)});
    }
    return out;
}

}  // namespace hypersing
