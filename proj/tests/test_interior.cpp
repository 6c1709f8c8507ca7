#include <cmath>
#include <numbers>
#include <set>

#include "low_order_fixtures.hpp"
#include "doctest.h"
#include "hypersing/coefficient_table.hpp"
#include "hypersing/errors.hpp"
#include "hypersing/finite_part_oracle.hpp"
#include "hypersing/interior_integrals.hpp"
#include "hypersing/printed_formulas.hpp"

using namespace hypersing;

namespace {

constexpr double kPi = std::numbers::pi;

double I(ChebKind f, int alpha, int m, int n, double r) {
    return interior_integral({f, alpha, m, n, r});
}

CoefficientTable table_of(const Rational& prefactor, std::initializer_list<std::pair<int, int>> t_terms) {
    ChebSum sum;
    for (auto [degree, coeff] : t_terms) sum.add(ChebKind::First, degree, Rational(coeff));
    return make_table(prefactor, 0, sum);
}

double polynomial(const LowOrderPolynomial& p, double r) {
    return p.evaluate(r) / kPi;
}

}  // namespace

TEST_CASE("interior integral reference values") {
    CHECK(I(ChebKind::First, 1, 0, 1, 0.3) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(I(ChebKind::Second, 2, 1, 0, 0.7) == doctest::Approx(-kPi).epsilon(1e-14));
    CHECK(I(ChebKind::First, 1, 1, 0, 0.5) == doctest::Approx(-kPi * 0.5).epsilon(1e-14));
    CHECK(I(ChebKind::First, 3, 2, 0, 0.25) == doctest::Approx(kPi * 0.75).epsilon(1e-14));
    CHECK(I(ChebKind::First, 4, 3, 0, 0.2) == doctest::Approx(2.1 * kPi).epsilon(1e-14));
    CHECK(I(ChebKind::First, 2, 0, 2, 0.0) == doctest::Approx(2 * kPi).epsilon(1e-14));
    CHECK(oracle_hfp(chebyshev_density(ChebKind::First, 2), 2, 0, 0.0) == doctest::Approx(2 * kPi).epsilon(1e-8));
}

TEST_CASE("interior domain errors") {
    CHECK_THROWS_AS(I(ChebKind::First, 1, 0, 1, 1.0), DomainError);
    CHECK_THROWS_AS(I(ChebKind::First, 1, 0, 1, -1.5), DomainError);
    CHECK_THROWS_AS(I(ChebKind::Second, 1, 0, 1, 0.2), UnsupportedCombination);
}

TEST_CASE("general coefficient tables") {
    CHECK(symbolically_equal(coefficient_table(ChebKind::First, 1, 1, 2), table_of(Rational(1, 2), {{1, 1}, {3, -1}})));
    CHECK(symbolically_equal(coefficient_table(ChebKind::Second, 1, 2, 2),
                             table_of(Rational(1, 4), {{1, 1}, {3, -2}, {5, 1}})));
    for (const auto& f : printed_interior_formulas())
        if (f.family == ChebKind::First && f.alpha == 3 && f.m == 1) {
            CHECK(symbolically_equal(dispatch_table(ChebKind::First, 3, 1, 3), f.trusted().table(3)));
            CHECK(symbolically_equal(coefficient_table(ChebKind::First, 3, 1, 4), f.trusted().table(4)));
        }
    CHECK_THROWS_AS(coefficient_table(ChebKind::First, 1, 2, 0), BelowThresholdError);
}

TEST_CASE("derivative step maps one order to the next") {
    CoefficientTable first = derived_table(ChebKind::Second, 1, 1, 4);
    CoefficientTable second = derive_next_order(first, 1);
    ChebSum expected;
    expected.add(ChebKind::Second, 4, Rational(-5));
    CHECK(symbolically_equal(second, make_table(Rational(1), 0, expected)));
    for (int n = 2; n <= 8; ++n) {
        CoefficientTable next = derive_next_order(coefficient_table(ChebKind::First, 1, 1, n), 1);
        for (double r : {-0.4, 0.35})
            CHECK(next.evaluate(r) == doctest::Approx(I(ChebKind::First, 2, 1, n, r)).epsilon(1e-12));
    }
    LowOrderPolynomial p = low_order_polynomial(ChebKind::First, 2, 2, 0);
    double r = 0.3;
    CHECK(polynomial(p, r) == doctest::Approx(3 * r * r - 1.5).epsilon(1e-14));
    CHECK(polynomial(p, r) == doctest::Approx(oracle_hfp(chebyshev_density(ChebKind::First, 0), 2, 2, r) / kPi)
                                  .epsilon(1e-8));
}

TEST_CASE("low-order polynomials") {
    LowOrderPolynomial a = low_order_polynomial(ChebKind::First, 1, 2, 5);
    LowOrderPolynomial b = low_order_polynomial(ChebKind::Second, 3, 3, 0);
    LowOrderPolynomial c = low_order_polynomial(ChebKind::First, 2, 1, 0);
    for (double r : {-0.6, 0.1, 0.45}) {
        double r2 = r * r;
        CHECK(polynomial(a, r) == doctest::Approx(16 * r2 * r2 * r2 * r2 - 44 * r2 * r2 * r2 + 41 * r2 * r2 - 14 * r2 + 1));
        CHECK(polynomial(b, r) == doctest::Approx(-10 * r2 * r + 7.5 * r));
        CHECK(polynomial(c, r) == doctest::Approx(-1.0));
    }
}

TEST_CASE("parity of the interior integrals") {
    for (ChebKind f : {ChebKind::First, ChebKind::Second})
        for (int alpha = 1; alpha <= 4; ++alpha)
            for (int m = f == ChebKind::First ? 0 : 1; m <= 3; ++m)
                for (int n = 0; n <= 9; ++n) {
                    double sign = (n + alpha) % 2 == 0 ? 1.0 : -1.0;
                    CHECK(std::abs(I(f, alpha, m, n, -0.45) - sign * I(f, alpha, m, n, 0.45)) <=
                          1e-12 * (1 + std::abs(I(f, alpha, m, n, 0.45))));
                }
}

TEST_CASE("typeset low-order table") {
    std::set<std::string> ledger;
    for (const auto& e : formula_errata()) ledger.insert(e.id);
    CHECK(ledger.count("low-order-first-order-first-kind-m3-n2") == 1);
    for (const auto& entry : fixtures::low_order_entries()) {
        const auto* poly = &entry.printed;
        for (const auto& c : fixtures::low_order_corrections())
            if (c.family == entry.family && c.alpha == entry.alpha && c.m == entry.m && c.n == entry.n)
                poly = &c.corrected;
        for (double r : {0.5, -0.5, 0.2}) {
            double expected = 0.0;
            for (const auto& t : *poly) expected += double(t.num) / double(t.den) * std::pow(r, t.degree);
            expected *= kPi;
            double v = I(entry.family, entry.alpha, entry.m, entry.n, r);
            CHECK(std::abs(v - expected) <= 1e-12 * (1 + std::abs(v)));
        }
    }
}

TEST_CASE("typeset closed forms and their corrections") {
    std::set<std::string> ledger;
    for (const auto& e : formula_errata()) ledger.insert(e.id);
    for (const auto& f : printed_interior_formulas()) {
        CAPTURE(f.address);
        for (int n = f.n_min; n <= f.n_min + 5; ++n)
            CHECK(symbolically_equal(f.trusted().table(n), derived_table(f.family, f.alpha, f.m, n)));
        if (f.corrected) {
            CHECK(ledger.count(f.erratum) == 1);
            CHECK_FALSE(symbolically_equal(f.printed.table(f.n_min), f.corrected->table(f.n_min)));
        }
    }
    for (int m = 2; m <= 4; ++m) {
        int n = general_threshold(ChebKind::Second, 4, m) + 1;
        CHECK_FALSE(symbolically_equal(printed_general_fourth_order_second_kind(m, n),
                                       coefficient_table(ChebKind::Second, 4, m, n)));
    }
}

TEST_CASE("evaluation path selection") {
    CHECK(evaluation_path(ChebKind::First, 1, 2, 0) == EvaluationPath::LowOrderPolynomial);
    CHECK(evaluation_path(ChebKind::First, 1, 2, 12) == EvaluationPath::GeneralFormula);
}
