#pragma once

#include <map>

#include "hypersing/chebyshev.hpp"
#include "hypersing/coefficient_table.hpp"
#include "hypersing/finite_part_oracle.hpp"

namespace hypersing {

/// int_{-1}^{1} P_n(s) (1 - s^2)^{m - 1/2} / (s - r)^alpha ds for |r| > 1.
struct ExteriorQuery {
    ChebKind family;
    int alpha;
    int m;
    int n;
    double r;
};

/// z = r - sign(r) sqrt(r^2 - 1); 0 < |z| < 1 with the sign of r.
double exterior_base(double r);

/// pi * prefactor * sum_e c_e z^e / (1 - z^2)^denominator_power, exact.
struct ExteriorTable {
    Rational prefactor{1};
    int denominator_power = 0;
    std::map<int, Rational> terms;

    double evaluate(double r) const;
};

/// Exact form for alpha in 1..3; throws UnsupportedCombination otherwise.
ExteriorTable exterior_table(ChebKind family, int alpha, int m, int n);

/// (1/alpha) d/dr of an exterior table.
ExteriorTable derive_next_order(const ExteriorTable& table, int alpha);

double exterior_integral(const ExteriorQuery& q);

double exterior_oracle(const ExteriorQuery& q, const OracleOptions& opt = {});

}  // namespace hypersing
