#include "hypersing/collocation_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "hypersing/errors.hpp"
#include "hypersing/interior_integrals.hpp"

namespace hypersing {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLeastSquaresRankTolerance = 1e-11;

double chebyshev_log_moment(int k, double r) {
    if (k == 0) return -kPi * std::numbers::ln2;
    return -kPi * eval_cheb(ChebKind::First, k, r) / k;
}

std::string format_condition(double c) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << c;
    return out.str();
}

}  // namespace

IntervalMap make_interval(double c, double d) {
    if (!(d > c) || !std::isfinite(c) || !std::isfinite(d))
        throw DomainError("degenerate interval: need d > c");
    return {c, d};
}

NormalizedProblem normalize(const IntervalMap& interval, const std::vector<SingularTerm>& physical_terms,
                            std::function<double(double, double)> physical_kernel,
                            std::function<double(double)> physical_load) {
    make_interval(interval.c, interval.d);
    const double a = interval.half_length();
    NormalizedProblem problem;
    for (const auto& term : physical_terms)
        problem.singular_terms.push_back({term.alpha, term.coefficient * std::pow(a, 1 - term.alpha)});
    if (physical_kernel)
        problem.regular_kernel = [interval, a, k = std::move(physical_kernel)](double r, double s) {
            return a * k(interval.to_physical(r), interval.to_physical(s));
        };
    if (physical_load)
        problem.load = [interval, p = std::move(physical_load)](double r) { return p(interval.to_physical(r)); };
    return problem;
}

double DensityExpansion::series(double s) const {
    return eval_cheb_series(family, coefficients, s);
}

double reconstruct_density(const DensityExpansion& expansion, double s) {
    if (!(std::abs(s) <= 1.0)) throw DomainError("reconstruct_density needs |s| <= 1");
    double R = expansion.series(s);
    if (expansion.m == 0) {
        if (std::abs(s) == 1.0) return R;
        return R / std::sqrt(1.0 - s * s);
    }
    double w = std::pow(1.0 - s * s, expansion.m - 0.5);
    return R * w;
}

std::vector<double> collocation_nodes(ChebKind family, int count) {
    if (count < 1) throw std::invalid_argument("collocation_nodes needs count >= 1");
    std::vector<double> nodes(count);
    for (int j = 1; j <= count; ++j) {
        double angle = family == ChebKind::Second ? (2.0 * j - 1.0) * kPi / (2.0 * count)
                                                  : j * kPi / (count + 1.0);
        nodes[j - 1] = std::cos(angle);
    }
    return nodes;
}

std::vector<QuadratureNode> regular_rule(const NormalizedProblem& problem) {
    ChebKind kind = problem.m == 0 ? ChebKind::First : ChebKind::Second;
    auto rule = gauss_chebyshev_nodes_weights(kind, problem.quadrature_points);
    if (problem.m >= 2)
        for (auto& q : rule) q.weight *= std::pow(1.0 - q.node * q.node, problem.m - 1);
    return rule;
}

double operator_entry(const NormalizedProblem& problem, int n, double r, const std::vector<QuadratureNode>& rule) {
    double value = 0.0;
    for (const auto& term : problem.singular_terms)
        value += term.coefficient * interior_integral({problem.family, term.alpha, problem.m, n, r});
    if (problem.regular_kernel) {
        double sum = 0.0;
        for (const auto& q : rule) sum += q.weight * problem.regular_kernel(r, q.node) * eval_cheb(problem.family, n, q.node);
        value += sum;
    }
    if (problem.free_term) value += problem.free_term(n, r);
    return value;
}

LinearSystem assemble(const NormalizedProblem& problem, int N, const std::vector<double>& nodes) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    if (problem.singular_terms.empty()) throw std::invalid_argument("at least one singular term is required");
    const auto rule = regular_rule(problem);
    const int rows = static_cast<int>(nodes.size());
    LinearSystem system{Eigen::MatrixXd(rows, N + 1), Eigen::VectorXd(rows), nodes};
    for (int j = 0; j < rows; ++j) {
        for (int n = 0; n <= N; ++n) system.matrix(j, n) = operator_entry(problem, n, nodes[j], rule);
        system.rhs(j) = problem.load ? problem.load(nodes[j]) : 0.0;
    }
    return system;
}

void apply_constraint(LinearSystem& system, ChebKind family, int m, ConstraintMode mode) {
    if (mode == ConstraintMode::None) return;
    const Eigen::Index cols = system.matrix.cols();
    Eigen::RowVectorXd row(cols);
    for (Eigen::Index n = 0; n < cols; ++n) row(n) = basis_moment(family, m, static_cast<int>(n));
    if (mode == ConstraintMode::ReplaceRow) {
        auto nearest = std::min_element(system.nodes.begin(), system.nodes.end(),
                                        [](double x, double y) { return std::abs(x) < std::abs(y); });
        Eigen::Index j = nearest - system.nodes.begin();
        system.matrix.row(j) = row;
        system.rhs(j) = 0.0;
        return;
    }
    system.matrix.conservativeResize(system.matrix.rows() + 1, Eigen::NoChange);
    system.matrix.row(system.matrix.rows() - 1) = row;
    system.rhs.conservativeResize(system.rhs.size() + 1);
    system.rhs(system.rhs.size() - 1) = 0.0;
}

LinearSolution solve_linear(const LinearSystem& system) {
    const auto& A = system.matrix;
    if (!A.allFinite() || !system.rhs.allFinite()) throw std::invalid_argument("system has non-finite entries");
    LinearSolution out;
    if (A.rows() == A.cols()) {
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
        double rcond = lu.rcond();
        out.condition_estimate = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
        if (!(rcond > std::numeric_limits<double>::epsilon()))
            throw SingularMatrixError("collocation matrix is singular (condition estimate " +
                                          format_condition(out.condition_estimate) + ")",
                                      out.condition_estimate);
        out.x = lu.solve(system.rhs);
    } else {
        if (A.rows() < A.cols()) throw std::invalid_argument("underdetermined system");
        Eigen::BDCSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
        svd.setThreshold(kLeastSquaresRankTolerance);
        const auto& sv = svd.singularValues();
        double smin = sv(sv.size() - 1);
        out.condition_estimate = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
        out.rank_deficient = svd.rank() < A.cols();
        out.x = svd.solve(system.rhs);
    }
    if (!out.x.allFinite())
        throw SingularMatrixError("solution is not finite", out.condition_estimate);
    return out;
}

double residual_norm(const NormalizedProblem& problem, const DensityExpansion& expansion) {
    const int count = expansion.N() + 1;
    auto nodes = collocation_nodes(problem.family, count);
    std::vector<double> checkpoints;
    if (count == 1) {
        checkpoints = {0.5 * (nodes[0] + 1.0), 0.5 * (nodes[0] - 1.0)};
    } else {
        for (int j = 0; j + 1 < count; ++j) checkpoints.push_back(0.5 * (nodes[j] + nodes[j + 1]));
    }
    const auto rule = regular_rule(problem);
    double worst = 0.0;
    for (double r : checkpoints) {
        double lhs = 0.0;
        for (int n = 0; n < count; ++n) lhs += expansion.coefficients[n] * operator_entry(problem, n, r, rule);
        double rhs = problem.load ? problem.load(r) : 0.0;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

SolveReport solve(const NormalizedProblem& problem, int N, ConstraintMode constraint) {
    if (N < 0) throw std::invalid_argument("N must be >= 0");
    auto nodes = collocation_nodes(problem.family, N + 1);
    LinearSystem system = assemble(problem, N, nodes);
    apply_constraint(system, problem.family, problem.m, constraint);
    LinearSolution solution = solve_linear(system);
    SolveReport report;
    report.coefficients.family = problem.family;
    report.coefficients.m = problem.m;
    report.coefficients.coefficients.assign(solution.x.data(), solution.x.data() + solution.x.size());
    report.condition_estimate = solution.condition_estimate;
    report.quadrature_points_used = problem.regular_kernel ? problem.quadrature_points : 0;
    report.residual_norm = residual_norm(problem, report.coefficients);
    if (solution.rank_deficient)
        report.warnings.push_back("least-squares system is rank deficient; minimum-norm solution returned");
    if (solution.condition_estimate > kConditionWarning)
        report.warnings.push_back("condition estimate " + format_condition(solution.condition_estimate) +
                                  " exceeds 1e12");
    return report;
}

double log_moment_second_kind(int n, double r) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    return 0.5 * (chebyshev_log_moment(n, r) - chebyshev_log_moment(n + 2, r));
}

double log_moment_first_kind(int n, double r) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    return 0.5 * chebyshev_log_moment(n, r) - 0.25 * chebyshev_log_moment(n + 2, r) -
           0.25 * chebyshev_log_moment(std::abs(n - 2), r);
}

}  // namespace hypersing
