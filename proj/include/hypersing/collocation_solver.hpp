#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hypersing/chebyshev.hpp"

namespace hypersing {

/// Maps the crack (c, d) onto (-1, 1): x = midpoint + half_length * s.
struct IntervalMap {
    double c = -1.0;
    double d = 1.0;

    double half_length() const { return 0.5 * (d - c); }
    double midpoint() const { return 0.5 * (d + c); }
    double to_physical(double s) const { return midpoint() + half_length() * s; }
    double to_normalized(double x) const { return (x - midpoint()) / half_length(); }
    /// (d + c) / (d - c).
    double ratio() const { return (d + c) / (d - c); }
};

IntervalMap make_interval(double c, double d);

struct SingularTerm {
    int alpha;
    double coefficient;
};

/// Linear contribution of the n-th basis function evaluated at r that is not
/// a singular integral or a quadrature of the regular kernel.
using ColumnOperator = std::function<double(int n, double r)>;

/// sum_alpha c_alpha I_alpha(D, r) + int K(r, s) D(s) ds + F[D](r) = P(r),
/// D(s) = sum a_n P_n(s) (1 - s^2)^{m - 1/2}.
struct NormalizedProblem {
    std::vector<SingularTerm> singular_terms;
    std::function<double(double r, double s)> regular_kernel;
    ColumnOperator free_term;
    std::function<double(double r)> load;
    int m = 1;
    ChebKind family = ChebKind::Second;
    int quadrature_points = 256;
};

/// Physical equation sum_alpha c_alpha int D(t)/(t-x)^alpha dt + int k(x,t) D(t) dt = p(x)
/// rewritten on (-1, 1); D keeps its physical values.
NormalizedProblem normalize(const IntervalMap& interval, const std::vector<SingularTerm>& physical_terms,
                            std::function<double(double x, double t)> physical_kernel,
                            std::function<double(double x)> physical_load);

struct DensityExpansion {
    ChebKind family = ChebKind::Second;
    int m = 1;
    std::vector<double> coefficients;

    int N() const { return static_cast<int>(coefficients.size()) - 1; }
    /// R(s) = sum a_n P_n(s).
    double series(double s) const;
};

/// D(s) = R(s) (1 - s^2)^{m - 1/2}; 0 at s = +-1 for m >= 1, R(+-1) for m = 0.
double reconstruct_density(const DensityExpansion& expansion, double s);

enum class ConstraintMode { None, ReplaceRow, AppendLeastSquares };

struct LinearSystem {
    Eigen::MatrixXd matrix;
    Eigen::VectorXd rhs;
    std::vector<double> nodes;
};

struct SolveReport {
    DensityExpansion coefficients;
    double residual_norm = 0.0;
    double condition_estimate = 0.0;
    int quadrature_points_used = 0;
    std::vector<std::string> warnings;
};

std::vector<double> collocation_nodes(ChebKind family, int count);

/// Value of the equation operator applied to basis function n at r.
double operator_entry(const NormalizedProblem& problem, int n, double r,
                      const std::vector<QuadratureNode>& rule);

std::vector<QuadratureNode> regular_rule(const NormalizedProblem& problem);

LinearSystem assemble(const NormalizedProblem& problem, int N, const std::vector<double>& nodes);

/// Imposes sum a_n int P_n(s)(1-s^2)^{m-1/2} ds = 0.
void apply_constraint(LinearSystem& system, ChebKind family, int m, ConstraintMode mode);

struct LinearSolution {
    Eigen::VectorXd x;
    double condition_estimate = 0.0;
    bool rank_deficient = false;
};

/// Square systems: LU with partial pivoting, SingularMatrixError when singular.
/// Overdetermined: minimum-norm least squares, singular values below 1e-11
/// of the largest treated as zero.
LinearSolution solve_linear(const LinearSystem& system);

SolveReport solve(const NormalizedProblem& problem, int N, ConstraintMode constraint = ConstraintMode::None);

/// max |equation residual| at the midpoints between consecutive collocation nodes.
double residual_norm(const NormalizedProblem& problem, const DensityExpansion& expansion);

/// int_{-1}^{1} ln|s - r| U_n(s) sqrt(1 - s^2) ds.
double log_moment_second_kind(int n, double r);

/// int_{-1}^{1} ln|s - r| T_n(s) sqrt(1 - s^2) ds.
double log_moment_first_kind(int n, double r);

constexpr double kConditionWarning = 1e12;

}  // namespace hypersing
