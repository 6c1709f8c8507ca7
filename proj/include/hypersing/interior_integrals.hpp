#pragma once

#include <vector>

#include "hypersing/chebyshev.hpp"
#include "hypersing/coefficient_table.hpp"

namespace hypersing {

/// One integral  int_{-1}^{1} P_n(s) (1 - s^2)^{m - 1/2} / (s - r)^alpha ds,
/// principal value for alpha = 1 and finite part for alpha >= 2.
struct SingularIntegralQuery {
    ChebKind family;
    int alpha;
    int m;
    int n;
    double r;
};

enum class EvaluationPath { GeneralFormula, LowOrderPolynomial };

/// Dense polynomial in r, lowest degree first; evaluate returns pi times its value.
struct LowOrderPolynomial {
    std::vector<Rational> coefficients;
    double evaluate(double r) const;
};

/// Smallest n for which the general formula of (family, alpha, m) holds.
int general_threshold(ChebKind family, int alpha, int m);

/// Which representation interior_integral uses; throws UnsupportedCombination.
EvaluationPath evaluation_path(ChebKind family, int alpha, int m, int n);

double interior_integral(const SingularIntegralQuery& q);

/// General-m closed form as a table. Throws BelowThresholdError when
/// n < general_threshold(family, alpha, m).
CoefficientTable coefficient_table(ChebKind family, int alpha, int m, int n);

/// Table produced by the exact first-order reduction followed by repeated
/// derive_next_order; valid for every n.
CoefficientTable derived_table(ChebKind family, int alpha, int m, int n);

/// Dense polynomial form of the integral (exact), for the low-n range.
LowOrderPolynomial low_order_polynomial(ChebKind family, int alpha, int m, int n);

/// Closed-form table used by interior_integral for this query (general
/// formula or low-order polynomial written as a table).
CoefficientTable dispatch_table(ChebKind family, int alpha, int m, int n);

}  // namespace hypersing
