#pragma once

#include <string>
#include <vector>

#include "hypersing/chebyshev.hpp"

namespace hypersing {

/// Published normalized SIFs for a crack near the edge of a half plane.
struct HalfPlaneRow {
    double ratio;  // (d + c) / (d - c)
    int terms;     // N + 1
    double second_left, second_right;
    double first_left, first_right;
};

const std::vector<HalfPlaneRow>& halfplane_reference();

/// Published first-kind value at ratio 1.01 with 42 terms.
HalfPlaneRow halfplane_edge_reference();

struct HalfPlaneCell {
    ChebKind family;
    double ratio;
    int terms;
    double expected_left, expected_right;
    double left, right;

    double max_delta() const;
};

/// Every row in both representations plus the 42-term edge row, ordered as
/// the reference; rows are solved in parallel and merged in order.
std::vector<HalfPlaneCell> sweep_halfplane();

/// Published gradient-elasticity SIF ladder (ell' = 0, a = 1).
struct GradientReference {
    std::vector<double> ells;
    std::vector<int> ladder;
    std::vector<std::vector<double>> values;  // values[i][j] at ladder[i], ells[j]
};

const GradientReference& gradient_reference();

struct GradientCell {
    double ell;
    int N;
    double expected;
    double value;
    double condition_estimate;
    std::vector<std::string> warnings;
};

/// Solves every (ell, N) pair of the reference ladder in parallel.
std::vector<GradientCell> sweep_gradient();

}  // namespace hypersing
