#include "hypersing/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hypersing/errors.hpp"

namespace hypersing {

std::string kind_symbol(ChebKind kind) {
    return kind == ChebKind::First ? "T" : "U";
}

ChebKind parse_kind(const std::string& text) {
    if (text == "T" || text == "t" || text == "First" || text == "first") return ChebKind::First;
    if (text == "U" || text == "u" || text == "Second" || text == "second") return ChebKind::Second;
    throw std::invalid_argument("unknown Chebyshev kind '" + text + "' (expected T or U)");
}

double eval_cheb(ChebKind kind, int n, double x) {
    if (n < 0) throw std::invalid_argument("Chebyshev degree must be >= 0");
    double p0 = 1.0;
    if (n == 0) return p0;
    double p1 = kind == ChebKind::First ? x : 2.0 * x;
    for (int k = 1; k < n; ++k) {
        double p2 = 2.0 * x * p1 - p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

double eval_cheb_derivative(ChebKind kind, int n, double x) {
    if (n < 0) throw std::invalid_argument("derivative requires n >= 0");
    if (n == 0) return 0.0;
    if (kind == ChebKind::First) return n * eval_cheb(ChebKind::Second, n - 1, x);
    if (std::abs(x) >= 1.0)
        throw DomainError("dU_n/dx formula is singular for |x| >= 1");
    double um1 = eval_cheb(ChebKind::Second, n - 1, x);
    double up1 = eval_cheb(ChebKind::Second, n + 1, x);
    return (0.5 * (n + 2) * um1 - 0.5 * n * up1) / (1.0 - x * x);
}

double eval_cheb_series(ChebKind kind, std::span<const double> c, double x) {
    double b1 = 0.0, b2 = 0.0;
    for (std::size_t k = c.size(); k-- > 1;) {
        double b0 = c[k] + 2.0 * x * b1 - b2;
        b2 = b1;
        b1 = b0;
    }
    double c0 = c.empty() ? 0.0 : c[0];
    if (kind == ChebKind::First) return c0 + x * b1 - b2;
    return c0 + 2.0 * x * b1 - b2;
}

double weight_moment(int n) {
    constexpr double pi = std::numbers::pi;
    switch (n) {
    case 0: return 3.0 * pi / 8.0;
    case 2: return -pi / 4.0;
    case 4: return pi / 16.0;
    default: return 0.0;
    }
}

double basis_moment(ChebKind kind, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("basis_moment needs m, n >= 0");
    if (kind == ChebKind::First && m == 2) return weight_moment(n);
    if (n % 2 == 1) return 0.0;
    int count = (n + 2 * m) / 2 + 2;
    double sum = 0.0;
    if (m == 0) {
        for (auto [s, w] : gauss_chebyshev_nodes_weights(ChebKind::First, count))
            sum += w * eval_cheb(kind, n, s);
    } else {
        for (auto [s, w] : gauss_chebyshev_nodes_weights(ChebKind::Second, count))
            sum += w * eval_cheb(kind, n, s) * std::pow(1.0 - s * s, m - 1);
    }
    return sum;
}

std::vector<QuadratureNode> gauss_chebyshev_nodes_weights(ChebKind kind, int count) {
    if (count < 1) throw std::invalid_argument("quadrature count must be >= 1");
    constexpr double pi = std::numbers::pi;
    std::vector<QuadratureNode> rule(count);
    for (int i = 1; i <= count; ++i) {
        if (kind == ChebKind::First) {
            double node = std::cos((2.0 * i - 1.0) * pi / (2.0 * count));
            if (2 * i - 1 == count) node = 0.0;
            rule[i - 1] = {node, pi / count};
        } else {
            double theta = i * pi / (count + 1.0);
            double node = 2 * i == count + 1 ? 0.0 : std::cos(theta);
            double s = std::sin(theta);
            rule[i - 1] = {node, pi / (count + 1.0) * s * s};
        }
    }
    return rule;
}

}  // namespace hypersing
