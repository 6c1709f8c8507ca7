#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypersing/chebyshev.hpp"

namespace hypersing {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);
double to_double(const Rational& q);

struct ChebTerm {
    ChebKind kind;
    int degree;
    Rational coefficient;
};

/// Exact mixed T/U combination. Negative indices are folded on insertion
/// with U_{-1} = 0, U_{-k-2} = -U_k and T_{-k} = T_k.
class ChebSum {
public:
    using Key = std::pair<int, int>;  // (0 = T / 1 = U, degree)

    void add(ChebKind kind, int degree, const Rational& c);
    ChebSum& operator+=(const ChebSum& other);
    ChebSum& operator*=(const Rational& c);

    bool empty() const { return terms_.empty(); }
    bool has_kind(ChebKind kind) const;
    int max_degree() const;
    const std::map<Key, Rational>& terms() const { return terms_; }

private:
    std::map<Key, Rational> terms_;
};

ChebSum operator+(ChebSum a, const ChebSum& b);
ChebSum operator-(ChebSum a, ChebSum b);
ChebSum operator*(const Rational& c, ChebSum a);

/// pi * prefactor * sum_k coeff_k P_k(r) / (1 - r^2)^denominator_power
struct CoefficientTable {
    Rational prefactor{1};
    int denominator_power = 0;
    std::vector<ChebTerm> terms;

    double evaluate(double r) const;
};

CoefficientTable make_table(const Rational& prefactor, int denominator_power, const ChebSum& sum);
/// Sum with the prefactor multiplied in.
ChebSum table_sum(const CoefficientTable& table);

/// Dense monomial coefficients (lowest degree first) of a Chebyshev sum.
std::vector<Rational> to_monomial(const ChebSum& sum);
/// Second-kind expansion of a dense monomial polynomial.
ChebSum monomial_to_second_kind(const std::vector<Rational>& poly);

/// Reduced rational function: numerator / (1 - r^2)^p with no common
/// (1 - r^2) factor; the unique form used for symbolic comparison.
struct CanonicalForm {
    std::vector<Rational> numerator;
    int denominator_power = 0;
    bool operator==(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const CoefficientTable& table);
bool symbolically_equal(const CoefficientTable& a, const CoefficientTable& b);

/// Table with every removable (1 - r^2) factor cancelled; the numerator is
/// rewritten in second-kind polynomials whenever a factor was cancelled.
CoefficientTable simplify(const CoefficientTable& table);

/// (1/alpha) d/dr of the table, exact.
CoefficientTable derive_next_order(const CoefficientTable& table, int alpha);

/// Double-precision form of a table for fast repeated evaluation.
struct CompiledTable {
    double scale = 0.0;  // pi * prefactor
    int denominator_power = 0;
    std::vector<double> first;
    std::vector<double> second;

    explicit CompiledTable(const CoefficientTable& table);
    CompiledTable() = default;
    double operator()(double r) const;
};

}  // namespace hypersing
