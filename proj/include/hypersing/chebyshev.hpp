#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hypersing {

enum class ChebKind { First, Second };

/// "T" or "U".
std::string kind_symbol(ChebKind kind);
ChebKind parse_kind(const std::string& text);

/// T_n(x) or U_n(x) by the three-term recurrence; valid for any real x.
double eval_cheb(ChebKind kind, int n, double x);

/// dT_n/dx = n U_{n-1}(x); dU_n/dx = [(n+2)/2 U_{n-1} - n/2 U_{n+1}] / (1 - x^2).
/// Throws DomainError for the second kind when |x| >= 1.
double eval_cheb_derivative(ChebKind kind, int n, double x);

/// Sum_k c[k] P_k(x) with P = T or U (Clenshaw).
double eval_cheb_series(ChebKind kind, std::span<const double> c, double x);

/// Integral of (1 - t^2)^{3/2} T_n(t) over [-1, 1].
double weight_moment(int n);

/// Integral of P_n(s) (1 - s^2)^{m - 1/2} over [-1, 1], P = T or U.
double basis_moment(ChebKind kind, int m, int n);

struct QuadratureNode {
    double node;
    double weight;
};

/// First kind: integrates p(s)/sqrt(1-s^2); second kind: p(s) sqrt(1-s^2).
/// Exact for polynomial p of degree <= 2 count - 1.
std::vector<QuadratureNode> gauss_chebyshev_nodes_weights(ChebKind kind, int count);

}  // namespace hypersing
