#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "hypersing/chebyshev.hpp"
#include "hypersing/errors.hpp"

using namespace hypersing;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("polynomial values at reference points") {
    CHECK(eval_cheb(ChebKind::First, 3, 0.5) == doctest::Approx(-1.0).epsilon(1e-15));
    for (int n = 0; n <= 20; ++n) CHECK(eval_cheb(ChebKind::First, n, 1.0) == doctest::Approx(1.0));
    CHECK(eval_cheb(ChebKind::Second, 4, 0.0) == doctest::Approx(1.0));
}

TEST_CASE("recurrence agrees with the trigonometric definitions") {
    for (int n = 0; n <= 30; ++n)
        for (double x : {-0.95, -0.4, 0.0, 0.3, 0.77}) {
            double theta = std::acos(x);
            CHECK(std::abs(eval_cheb(ChebKind::First, n, x) - std::cos(n * theta)) < 1e-12);
            CHECK(std::abs(eval_cheb(ChebKind::Second, n, x) - std::sin((n + 1) * theta) / std::sin(theta)) < 1e-11);
        }
}

TEST_CASE("derivatives") {
    CHECK(std::abs(eval_cheb_derivative(ChebKind::First, 3, 0.5)) < 1e-14);
    CHECK(eval_cheb_derivative(ChebKind::First, 1, 0.123) == doctest::Approx(1.0));
    CHECK(eval_cheb_derivative(ChebKind::Second, 1, 0.3) == doctest::Approx(2.0));
    const double h = 1e-5;
    for (ChebKind k : {ChebKind::First, ChebKind::Second})
        for (int n = 0; n <= 10; ++n)
            for (double x : {-0.6, 0.1, 0.8}) {
                double fd = (eval_cheb(k, n, x + h) - eval_cheb(k, n, x - h)) / (2 * h);
                CHECK(eval_cheb_derivative(k, n, x) == doctest::Approx(fd).epsilon(1e-7));
            }
    CHECK_THROWS_AS(eval_cheb_derivative(ChebKind::Second, 2, 1.0), DomainError);
}

TEST_CASE("bridge between the two kinds") {
    for (int n = 2; n <= 15; ++n)
        for (double x : {-0.7, 0.2, 0.9}) {
            double t = eval_cheb(ChebKind::First, n, x);
            double u = 0.5 * (eval_cheb(ChebKind::Second, n, x) - eval_cheb(ChebKind::Second, n - 2, x));
            CHECK(std::abs(t - u) < 1e-13);
        }
}

TEST_CASE("series evaluation") {
    std::vector<double> c = {0.5, -1.0, 2.0, 0.25};
    for (ChebKind k : {ChebKind::First, ChebKind::Second}) {
        double direct = 0.0;
        for (int i = 0; i < 4; ++i) direct += c[i] * eval_cheb(k, i, 0.37);
        CHECK(eval_cheb_series(k, c, 0.37) == doctest::Approx(direct).epsilon(1e-14));
    }
}

TEST_CASE("weight moments") {
    CHECK(std::abs(weight_moment(0) - 3 * kPi / 8) < 1e-14);
    CHECK(std::abs(weight_moment(2) + kPi / 4) < 1e-14);
    CHECK(std::abs(weight_moment(4) - kPi / 16) < 1e-14);
    for (int n : {1, 3, 5, 6, 7, 10}) CHECK(std::abs(weight_moment(n)) < 1e-14);
    for (int n = 0; n <= 6; ++n) CHECK(basis_moment(ChebKind::First, 2, n) == doctest::Approx(weight_moment(n)));
}

TEST_CASE("Gauss-Chebyshev rules") {
    auto one = gauss_chebyshev_nodes_weights(ChebKind::First, 1);
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one[0].node) < 1e-15);
    CHECK(one[0].weight == doctest::Approx(kPi));

    double tt = 0.0;
    for (const auto& q : gauss_chebyshev_nodes_weights(ChebKind::First, 200))
        tt += q.weight * std::pow(eval_cheb(ChebKind::First, 3, q.node), 2);
    CHECK(std::abs(tt - kPi / 2) < 1e-12);

    double uu = 0.0;
    for (const auto& q : gauss_chebyshev_nodes_weights(ChebKind::Second, 200))
        uu += q.weight * eval_cheb(ChebKind::Second, 2, q.node) * eval_cheb(ChebKind::Second, 5, q.node);
    CHECK(std::abs(uu) < 1e-12);
}

TEST_CASE("kind parsing round trip") {
    CHECK(parse_kind(kind_symbol(ChebKind::First)) == ChebKind::First);
    CHECK(parse_kind(kind_symbol(ChebKind::Second)) == ChebKind::Second);
    CHECK_THROWS(parse_kind("V"));
}
