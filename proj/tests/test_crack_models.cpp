#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hypersing/crack_models.hpp"

using namespace hypersing;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("half-plane kernel") {
    IntervalMap iv = make_interval(1.0, 3.0);
    CHECK(mode1_halfplane_kernel(0.0, 0.0, iv) == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(std::abs(mode1_halfplane_kernel(0.3, -0.2, make_interval(1e6, 1e6 + 2))) < 1e-10);
    CHECK(mode1_halfplane_kernel(0.5, -0.3, iv) == doctest::Approx(mode1_halfplane_kernel(-0.3, 0.5, iv)).epsilon(1e-14));
}

TEST_CASE("half-plane normalized SIFs") {
    SifResult u = mode1_solve(mode1_from_ratio(2.0), 3, ChebKind::Second);
    CHECK(std::abs(u.normalized_left - 1.0913) <= 2e-3);
    CHECK(std::abs(u.normalized_right - 1.0539) <= 2e-3);
    SifResult t = mode1_solve(mode1_from_ratio(2.0), 3, ChebKind::First);
    CHECK(std::abs(t.normalized_left - 1.0916) <= 2e-3);
    CHECK(std::abs(t.normalized_right - 1.0540) <= 2e-3);
    SifResult far = mode1_solve(mode1_from_ratio(20.0), 3, ChebKind::Second);
    CHECK(std::abs(far.normalized_left - 1.0006) <= 2e-3);
    CHECK(std::abs(far.normalized_right - 1.0006) <= 2e-3);
}

TEST_CASE("half-plane representations agree away from the edge") {
    for (double ratio : {1.1, 1.2, 1.5, 3.0, 10.0}) {
        int N = ratio < 1.2 ? 9 : 5;
        SifResult u = mode1_solve(mode1_from_ratio(ratio), N, ChebKind::Second);
        SifResult t = mode1_solve(mode1_from_ratio(ratio), N, ChebKind::First);
        CHECK(std::abs(u.normalized_left - t.normalized_left) <= 0.01);
        CHECK(std::abs(u.normalized_right - t.normalized_right) <= 0.01);
    }
}

TEST_CASE("half-plane quadrature independence") {
    SifResult a = mode1_solve(mode1_from_ratio(2.0), 3, ChebKind::Second, 512);
    SifResult b = mode1_solve(mode1_from_ratio(2.0), 3, ChebKind::Second, 1024);
    CHECK(std::abs(a.normalized_left - b.normalized_left) <= 1e-8);
    CHECK(std::abs(a.normalized_right - b.normalized_right) <= 1e-8);
}

TEST_CASE("graded-material branch function") {
    auto l = fgm_lambda(3.0, 0.0);
    CHECK(l.real() == doctest::Approx(-3.0));
    CHECK(std::abs(l.imag()) < 1e-15);
    CHECK(std::abs(fgm_lambda(0.0, 0.7)) == 0.0);
    for (double xi : {-5.0, -0.3, 0.8, 40.0}) {
        auto v = fgm_lambda(xi, 0.7);
        CHECK(v.real() <= 0.0);
        auto d = v * v - std::complex<double>(xi * xi, 0.7 * xi);
        CHECK(std::abs(d) <= 1e-12 * (1 + xi * xi));
    }
    double xi = 1e4;
    auto far = fgm_lambda(xi, 0.7);
    CHECK(std::abs(far + xi + std::complex<double>(0.0, 0.35)) < 1e-3);
}

TEST_CASE("graded-material regular kernel") {
    CHECK(fgm_regular_kernel(0.2, -0.4, 0.0) == 0.0);
    for (double x : {-0.5, 0.1})
        for (double t : {-0.8, 0.6})
            CHECK(fgm_regular_kernel(x, t, 0.6) == doctest::Approx(fgm_regular_kernel(t, x, -0.6)).epsilon(1e-8));
    CHECK(std::isfinite(fgm_smooth_kernel(0.0, 0.6)));
}

TEST_CASE("homogeneous antiplane crack") {
    FgmModeIIIProblem p;
    p.c = -2.0;
    p.d = 2.0;
    SifResult r = fgm_solve(p, 6);
    double expected = std::sqrt(kPi * 2.0);
    CHECK(std::abs(r.k_left - expected) <= 1e-3 * expected);
    CHECK(std::abs(r.k_right - expected) <= 1e-3 * expected);
    for (double s : {0.1, 0.45, 0.9})
        CHECK(std::abs(reconstruct_density(r.report.coefficients, s) - reconstruct_density(r.report.coefficients, -s)) <=
              1e-10);
    LimitFit right = extract_sif_mode3(p, r.report.coefficients, CrackTip::Right);
    CHECK(std::abs(right.value - r.k_right) <= 5e-3 * r.k_right);
}

TEST_CASE("graded crack tilts and varies continuously") {
    FgmModeIIIProblem base;
    SifResult flat = fgm_solve(base, 9);
    FgmModeIIIProblem tiny;
    tiny.beta = 1e-4;
    SifResult near = fgm_solve(tiny, 9);
    CHECK(std::abs(near.k_right - flat.k_right) <= 5e-3 * flat.k_right);
    FgmModeIIIProblem graded;
    graded.beta = 0.5;
    double t1 = profile_tilt(fgm_solve(graded, 9).report.coefficients);
    double t2 = profile_tilt(fgm_solve(graded, 15).report.coefficients);
    CHECK(std::abs(t1) > 1e-3);
    CHECK(std::signbit(t1) == std::signbit(t2));
    CHECK(std::abs(profile_tilt(flat.report.coefficients)) < 1e-12);
}

TEST_CASE("gradient kernel") {
    CHECK(gradient_regular_kernel(0.3, -0.2, 0.5, 0.0) == 0.0);
    CHECK(gradient_regular_kernel(0.4, 0.4, 0.5, 0.1) == 0.0);
    for (double x : {-0.7, 0.2})
        for (double t : {-0.1, 0.9}) {
            double a = gradient_regular_kernel(x, t, 0.5, 0.1);
            double b = gradient_regular_kernel(t, x, 0.5, 0.1);
            CHECK(a == doctest::Approx(-b).epsilon(1e-9));
        }
}

TEST_CASE("gradient solution is cusped and single valued") {
    GradientModeIIIProblem p;
    SifResult r = gradient_solve(p, 21);
    CHECK(reconstruct_density(r.report.coefficients, 1.0) == 0.0);
    CHECK(reconstruct_density(r.report.coefficients, -1.0) == 0.0);
    CHECK(std::abs(gradient_displacement(r.report.coefficients, 1.0, -1.0)) < 1e-14);
    double scale = 0.0;
    for (double x : {-0.5, 0.0, 0.5}) scale = std::max(scale, std::abs(gradient_displacement(r.report.coefficients, 1.0, x)));
    CHECK(std::abs(gradient_displacement(r.report.coefficients, 1.0, 1.0)) <= 1e-8 * (1 + scale));
}

TEST_CASE("load linearity in all models") {
    ModeIHalfPlaneProblem m1 = mode1_from_ratio(2.0);
    ModeIHalfPlaneProblem m2 = m1;
    m2.load = [](double) { return 2.0; };
    SifResult a = mode1_solve(m1, 3, ChebKind::Second);
    SifResult b = mode1_solve(m2, 3, ChebKind::Second);
    CHECK(b.k_left == doctest::Approx(2 * a.k_left).epsilon(1e-12));
    CHECK(b.k_right == doctest::Approx(2 * a.k_right).epsilon(1e-12));

    FgmModeIIIProblem f1;
    f1.beta = 0.3;
    FgmModeIIIProblem f2 = f1;
    f2.load = [](double) { return -2.0; };
    SifResult c = fgm_solve(f1, 7);
    SifResult d = fgm_solve(f2, 7);
    CHECK(d.k_right == doctest::Approx(2 * c.k_right).epsilon(1e-12));
    CHECK(reconstruct_density(d.report.coefficients, 0.3) ==
          doctest::Approx(2 * reconstruct_density(c.report.coefficients, 0.3)).epsilon(1e-12));

    GradientModeIIIProblem g1;
    GradientModeIIIProblem g2 = g1;
    g2.load = [](double) { return -2.0; };
    SifResult e = gradient_solve(g1, 11);
    SifResult g = gradient_solve(g2, 11);
    CHECK(g.k_right == doctest::Approx(2 * e.k_right).epsilon(1e-10));
}

TEST_CASE("profile sampling spans the crack") {
    auto samples = sample_profile(make_interval(1.0, 3.0), 5, [](double x) { return x; });
    REQUIRE(samples.size() == 5);
    CHECK(samples.front().x == doctest::Approx(1.0));
    CHECK(samples.back().x == doctest::Approx(3.0));
}
