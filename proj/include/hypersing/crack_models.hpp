#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "hypersing/collocation_solver.hpp"

namespace hypersing {

struct ProfileSample {
    double x;
    double value;
};

struct SifResult {
    double k_left = 0.0;
    double k_right = 0.0;
    double normalized_left = 0.0;
    double normalized_right = 0.0;
    std::string normalization;
    double normalization_value = 1.0;
    int N_used = 0;
    IntervalMap interval;
    SolveReport report;
    std::vector<ProfileSample> profile;
};

// Mode I crack (c, d), c > 0, parallel to the free edge of a half plane.

struct ModeIHalfPlaneProblem {
    double c = 1.0;
    double d = 3.0;
    double kappa = 2.0;
    double mu = 1.0;
    /// Crack-face pressure p(x).
    std::function<double(double)> load = [](double) { return 1.0; };
};

/// -1/D^2 + 12 X/D^3 - 12 X^2/D^4, D = r + s + 2(d+c)/(d-c), X = r + (d+c)/(d-c).
double mode1_halfplane_kernel(double r, double s, const IntervalMap& interval);

NormalizedProblem mode1_problem(const ModeIHalfPlaneProblem& problem, ChebKind family, int quadrature_points = 512);

/// Physical SIFs (2 mu/(1+kappa)) sqrt(pi/a) R(+-1); normalized by the
/// Griffith value p(mid) sqrt(pi a). Profile samples are the crack opening.
SifResult mode1_solve(const ModeIHalfPlaneProblem& problem, int N, ChebKind family, int quadrature_points = 512);

/// Crack (-1 + ratio, 1 + ratio), unit half-length, unit pressure.
ModeIHalfPlaneProblem mode1_from_ratio(double ratio);

// Antiplane crack in G(x) = G0 exp(beta x).

struct FgmModeIIIProblem {
    double beta = 0.0;
    double G0 = 1.0;
    double c = -1.0;
    double d = 1.0;
    /// Crack-face traction sigma_yz(x, 0).
    std::function<double(double)> load = [](double) { return -1.0; };
};

/// Root of lambda^2 = xi^2 + i beta xi with non-positive real part.
std::complex<double> fgm_lambda(double xi, double beta);

/// N(x, t) as a function of u = t - x with the (beta^2/4) ln|u| part removed.
double fgm_smooth_kernel(double u, double beta);

/// Full nonsingular kernel N(x, t); logarithmically singular at t = x when beta != 0.
double fgm_regular_kernel(double x, double t, double beta);

NormalizedProblem fgm_problem(const FgmModeIIIProblem& problem, ChebKind family, int quadrature_points = 128);

/// SIFs G(tip) sqrt(pi/a) R(+-1); normalized by sigma0 sqrt(pi a), sigma0 = |p(mid)|.
SifResult fgm_solve(const FgmModeIIIProblem& problem, int N, ChebKind family = ChebKind::Second,
                    int quadrature_points = 128);

/// sigma_yz(x, 0) for x outside [c, d] from the exterior integrals.
double fgm_stress_outside(const FgmModeIIIProblem& problem, const DensityExpansion& expansion, double x,
                          int quadrature_points = 128);

enum class CrackTip { Left, Right };

struct LimitFit {
    double value;
    double fit_residual;
};

/// lim sqrt(2 pi |x - tip|) sigma_yz(x, 0) from outside, fitted in sqrt(distance).
LimitFit extract_sif_mode3(const FgmModeIIIProblem& problem, const DensityExpansion& expansion, CrackTip tip,
                           int quadrature_points = 128);

/// Signed asymmetry int s w(s) ds / int |w(s)| ds of the crack-face displacement.
double profile_tilt(const DensityExpansion& expansion);

// Antiplane crack (-a, a) in gradient elasticity.

struct GradientModeIIIProblem {
    double ell = 0.5;
    double ellprime = 0.0;
    double G = 1.0;
    double a = 1.0;
    std::function<double(double)> load = [](double) { return -1.0; };
};

/// Sine-transform kernel k(x, t); identically zero for ellprime = 0.
double gradient_regular_kernel(double x, double t, double ell, double ellprime);

NormalizedProblem gradient_problem(const GradientModeIIIProblem& problem, int quadrature_points = 128);

/// K_III(a) = 3 sqrt(pi a) (ell/a)^2 G sum a_n. Falls back to appended least
/// squares with a warning when row replacement leaves a singular matrix.
SifResult gradient_solve(const GradientModeIIIProblem& problem, int N,
                         ConstraintMode constraint = ConstraintMode::ReplaceRow, int quadrature_points = 128);

/// w(x) = int_{-a}^{x} phi(t) dt for phi = sum a_n T_n(t/a)(1 - t^2/a^2)^{3/2}.
double gradient_displacement(const DensityExpansion& expansion, double a, double x);

/// Samples (x, value) at count points across the crack, tips included.
std::vector<ProfileSample> sample_profile(const IntervalMap& interval, int count,
                                          const std::function<double(double)>& value);

}  // namespace hypersing
