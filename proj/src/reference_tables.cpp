#include "hypersing/reference_tables.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <thread>

#include "hypersing/crack_models.hpp"

namespace hypersing {

namespace {

/// Runs tasks on up to hardware_concurrency threads; results keep task order.
template <typename T>
std::vector<T> run_ordered(const std::vector<std::function<T()>>& tasks) {
    std::vector<T> out(tasks.size());
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < tasks.size(); start += width) {
        std::vector<std::future<T>> batch;
        const std::size_t stop = std::min(tasks.size(), start + width);
        for (std::size_t i = start; i < stop; ++i) batch.push_back(std::async(std::launch::async, tasks[i]));
        for (std::size_t i = start; i < stop; ++i) out[i] = batch[i - start].get();
    }
    return out;
}

HalfPlaneCell solve_cell(ChebKind family, double ratio, int terms, double left, double right) {
    SifResult r = mode1_solve(mode1_from_ratio(ratio), terms - 1, family);
    return {family, ratio, terms, left, right, r.normalized_left, r.normalized_right};
}

}  // namespace

const std::vector<HalfPlaneRow>& halfplane_reference() {
    static const std::vector<HalfPlaneRow> rows = {
        {1.01, 15, 3.6437, 1.3292, 3.8037, 1.3313}, {1.05, 10, 2.1541, 1.2535, 2.1920, 1.2543},
        {1.1, 10, 1.7583, 1.2108, 1.7655, 1.2111},  {1.2, 6, 1.4637, 1.1625, 1.4728, 1.1632},
        {1.3, 6, 1.3316, 1.1331, 1.3346, 1.1335},   {1.4, 6, 1.2544, 1.1123, 1.2556, 1.1125},
        {1.5, 4, 1.2036, 1.0966, 1.2066, 1.0969},   {2.0, 4, 1.0913, 1.0539, 1.0916, 1.0540},
        {3.0, 4, 1.0345, 1.0246, 1.0346, 1.0246},   {4.0, 4, 1.0182, 1.0141, 1.0182, 1.0141},
        {5.0, 4, 1.0112, 1.0092, 1.0112, 1.0092},   {10.0, 4, 1.0026, 1.0024, 1.0026, 1.0024},
        {20.0, 4, 1.0006, 1.0006, 1.0006, 1.0006},
    };
    return rows;
}

HalfPlaneRow halfplane_edge_reference() {
    return {1.01, 42, 0.0, 0.0, 3.6437, 1.3302};
}

double HalfPlaneCell::max_delta() const {
    return std::max(std::abs(left - expected_left), std::abs(right - expected_right));
}

std::vector<HalfPlaneCell> sweep_halfplane() {
    std::vector<std::function<HalfPlaneCell()>> tasks;
    for (const auto& row : halfplane_reference())
        tasks.push_back([row] {
            return solve_cell(ChebKind::Second, row.ratio, row.terms, row.second_left, row.second_right);
        });
    for (const auto& row : halfplane_reference())
        tasks.push_back([row] {
            return solve_cell(ChebKind::First, row.ratio, row.terms, row.first_left, row.first_right);
        });
    HalfPlaneRow edge = halfplane_edge_reference();
    tasks.push_back(
        [edge] { return solve_cell(ChebKind::First, edge.ratio, edge.terms, edge.first_left, edge.first_right); });
    return run_ordered(tasks);
}

const GradientReference& gradient_reference() {
    static const GradientReference table = {
        {0.8, 0.5, 0.2, 0.1, 0.05, 0.01, 0.005},
        {11, 21, 31, 41, 51, 61, 71, 81, 91, 101},
        {
            {20.3131, 15.8292, 7.4396, 4.5116, 2.6342, 0.1282, 0.0319},
            {11.8757, 9.5632, 4.4791, 2.1538, 0.9541, 0.0898, 0.1602},
            {11.6607, 9.3937, 4.3878, 2.0856, 0.9204, 0.1649, 0.0404},
            {11.6665, 9.3983, 4.3902, 2.0878, 0.9246, 0.1378, 0.0682},
            {11.6667, 9.3984, 4.3903, 2.0878, 0.9247, 0.1399, 0.0658},
            {11.6667, 9.3984, 4.3903, 2.0878, 0.9247, 0.1400, 0.0653},
            {11.6667, 9.3984, 4.3903, 2.0878, 0.9247, 0.1399, 0.0654},
            {11.6667, 9.3984, 4.3903, 2.0878, 0.9247, 0.1399, 0.0654},
            {11.6667, 9.3984, 4.3903, 2.0878, 0.9247, 0.1399, 0.0654},
            {11.6667, 9.3984, 4.3903, 2.0878, 0.9247, 0.1399, 0.0654},
        },
    };
    return table;
}

std::vector<GradientCell> sweep_gradient() {
    const auto& ref = gradient_reference();
    std::vector<std::function<GradientCell()>> tasks;
    for (std::size_t i = 0; i < ref.ladder.size(); ++i)
        for (std::size_t j = 0; j < ref.ells.size(); ++j) {
            const double ell = ref.ells[j];
            const int N = ref.ladder[i];
            const double expected = ref.values[i][j];
            tasks.push_back([ell, N, expected] {
                GradientModeIIIProblem problem;
                problem.ell = ell;
                SifResult r = gradient_solve(problem, N);
                return GradientCell{ell, N, expected, r.k_right, r.report.condition_estimate, r.report.warnings};
            });
        }
    return run_ordered(tasks);
}

}  // namespace hypersing
