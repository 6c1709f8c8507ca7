#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <numbers>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "low_order_fixtures.hpp"
#include "hypersing/chebyshev.hpp"
#include "hypersing/coefficient_table.hpp"
#include "hypersing/crack_models.hpp"
#include "hypersing/exterior_integrals.hpp"
#include "hypersing/finite_part_oracle.hpp"
#include "hypersing/interior_integrals.hpp"
#include "hypersing/printed_formulas.hpp"
#include "hypersing/reference_tables.hpp"
#include "property_checks.hpp"

using namespace hypersing;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool passed = false;
    bool known_deviation = false;
    std::string detail;
};

template <typename T>
std::vector<T> parallel_map(const std::vector<std::function<T()>>& tasks) {
    std::vector<std::future<T>> futures;
    std::vector<T> out(tasks.size());
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t start = 0; start < tasks.size(); start += width) {
        futures.clear();
        const std::size_t stop = std::min(tasks.size(), start + width);
        for (std::size_t i = start; i < stop; ++i) futures.push_back(std::async(std::launch::async, tasks[i]));
        for (std::size_t i = start; i < stop; ++i) out[i] = futures[i - start].get();
    }
    return out;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

double oracle(ChebKind f, int alpha, int m, int n, double r) {
    SmoothDensity density = chebyshev_density(f, n);
    return alpha == 1 ? oracle_cauchy(density, m, r) : oracle_hfp(density, alpha, m, r);
}

bool oracle_agrees(double value, double reference, int alpha) {
    double tol = alpha <= 2 ? 1e-8 * (1.0 + std::abs(reference)) : 1e-6 * (1.0 + std::abs(reference));
    return std::abs(value - reference) <= tol;
}

Outcome closed_form_vs_oracle() {
    struct Cell {
        double excess = 0.0;
        int cases = 0;
    };
    std::vector<std::function<Cell()>> tasks;
    for (ChebKind f : {ChebKind::First, ChebKind::Second})
        for (int alpha = 1; alpha <= 4; ++alpha)
            for (int m = 0; m <= 3; ++m) {
                if (f == ChebKind::Second && m == 0) continue;
                for (int n = 0; n <= 12; ++n)
                    tasks.push_back([f, alpha, m, n] {
                        Cell c;
                        for (double r : {0.9, -0.9, 0.5, -0.5, 0.25, -0.25, 0.1}) {
                            double o = oracle(f, alpha, m, n, r);
                            double v = interior_integral({f, alpha, m, n, r});
                            double tol = alpha <= 2 ? 1e-8 * (1.0 + std::abs(o)) : 1e-6 * (1.0 + std::abs(o));
                            c.excess = std::max(c.excess, std::abs(v - o) / tol);
                            ++c.cases;
                        }
                        return c;
                    });
            }
    double worst = 0.0;
    int cases = 0;
    for (const auto& c : parallel_map(tasks)) {
        worst = std::max(worst, c.excess);
        cases += c.cases;
    }
    return {worst <= 1.0, false, fmt("%.0f queries, worst error/tolerance %.3g", cases, worst)};
}

Outcome general_vs_specific() {
    std::set<std::string> ledger;
    for (const auto& e : formula_errata()) ledger.insert(e.id);
    int unresolved = 0, compared = 0, errata = 0;
    std::string first_problem;
    auto flag = [&](const std::string& what) {
        if (first_problem.empty()) first_problem = what;
        ++unresolved;
    };
    const double points[] = {0.3, -0.55};
    for (const auto& f : printed_interior_formulas()) {
        for (int n = f.n_min; n <= f.n_min + 6; ++n) {
            CoefficientTable derived = derived_table(f.family, f.alpha, f.m, n);
            bool printed_ok = symbolically_equal(f.printed.table(n), derived);
            if (!symbolically_equal(f.trusted().table(n), derived)) flag(f.address + " trusted form");
            if (!printed_ok && (f.erratum.empty() || !ledger.count(f.erratum))) flag(f.address + " unlogged");
            if (f.corrected && n == f.n_min) {
                bool printed_refuted = false;
                for (double r : points) {
                    double o = oracle(f.family, f.alpha, f.m, n, r);
                    if (!oracle_agrees(f.corrected->table(n).evaluate(r), o, f.alpha)) flag(f.address + " oracle");
                    if (!oracle_agrees(f.printed.table(n).evaluate(r), o, f.alpha)) printed_refuted = true;
                }
                if (!printed_refuted) flag(f.address + " printed not refuted");
                ++errata;
            }
            bool general_applies = f.family == ChebKind::First ? f.m >= 1 : f.m >= 2;
            if (general_applies && n >= general_threshold(f.family, f.alpha, f.m)) {
                ++compared;
                if (!symbolically_equal(coefficient_table(f.family, f.alpha, f.m, n), f.trusted().table(n)))
                    flag(f.address + " general");
            }
        }
    }
    if (!ledger.count("fourth-order-second-kind-general")) flag("boxed bracket unlogged");
    for (int m = 2; m <= 3; ++m) {
        int n = general_threshold(ChebKind::Second, 4, m);
        double o = oracle(ChebKind::Second, 4, m, n, 0.3);
        if (!oracle_agrees(coefficient_table(ChebKind::Second, 4, m, n).evaluate(0.3), o, 4)) flag("boxed oracle");
        if (oracle_agrees(printed_general_fourth_order_second_kind(m, n).evaluate(0.3), o, 4))
            flag("boxed printed not refuted");
        ++errata;
    }
    for (const auto& x : printed_exterior_formulas()) {
        if (!x.erratum.empty() && !ledger.count(x.erratum)) flag(x.address + " unlogged");
        for (int n : x.valid_n)
            for (double r : {1.3, -2.5}) {
                double o = exterior_oracle({x.family, x.alpha, x.m, n, r});
                double v = x.corrected ? x.corrected(n, r) : x.printed(n, r);
                if (std::abs(v - o) > 1e-9 * (1.0 + std::abs(o))) flag(x.address + " exterior oracle");
            }
    }
    std::string detail = std::to_string(compared) + " general/specific table pairs, " + std::to_string(errata) +
                         " oracle-confirmed corrections, " + std::to_string(ledger.size()) + " ledger entries, " +
                         std::to_string(unresolved) + " unresolved";
    if (!first_problem.empty()) detail += " (first: " + first_problem + ")";
    return {unresolved == 0, false, detail};
}

double poly_value(const std::vector<fixtures::Monomial>& p, double r) {
    double v = 0.0;
    for (const auto& t : p) v += static_cast<double>(t.num) / static_cast<double>(t.den) * std::pow(r, t.degree);
    return kPi * v;
}

Outcome low_order_regression() {
    std::set<std::string> ledger;
    for (const auto& e : formula_errata()) ledger.insert(e.id);
    double worst = 0.0;
    int matched = 0, corrected = 0;
    bool ok = true;
    for (const auto& entry : fixtures::low_order_entries()) {
        const std::vector<fixtures::Monomial>* poly = &entry.printed;
        for (const auto& c : fixtures::low_order_corrections())
            if (c.family == entry.family && c.alpha == entry.alpha && c.m == entry.m && c.n == entry.n) {
                poly = &c.corrected;
                ++corrected;
            }
        bool printed_holds = true;
        for (double r : {0.5, -0.5, 0.2}) {
            double v = interior_integral({entry.family, entry.alpha, entry.m, entry.n, r});
            worst = std::max(worst, std::abs(v - poly_value(*poly, r)) / (1.0 + std::abs(v)));
            if (std::abs(v - poly_value(entry.printed, r)) > 1e-12 * (1.0 + std::abs(v))) printed_holds = false;
        }
        if (printed_holds) ++matched;
    }
    if (corrected > 0 && !ledger.count("low-order-first-order-first-kind-m3-n2")) ok = false;
    double moment_error = 0.0;
    for (int n = 0; n <= 12; ++n) {
        double expected = n == 0 ? 3.0 * kPi / 8.0 : n == 2 ? -kPi / 4.0 : n == 4 ? kPi / 16.0 : 0.0;
        moment_error = std::max(moment_error, std::abs(weight_moment(n) - expected));
    }
    ok = ok && worst <= 1e-12 && moment_error <= 1e-14 &&
         matched + corrected == static_cast<int>(fixtures::low_order_entries().size());
    return {ok, false,
            fmt("%.0f/%.0f typeset polynomials reproduced, %.0f logged correction", matched,
                fixtures::low_order_entries().size(), corrected) +
                fmt(", worst %.2e, moments worst %.2e", worst, moment_error)};
}

bool halfplane_required(const HalfPlaneCell& c) {
    return c.family == ChebKind::Second || c.ratio >= 1.05 || c.terms == 42;
}

Outcome halfplane_table() {
    auto cells = sweep_halfplane();
    std::string misses;
    bool only_known = true;
    int checked = 0;
    for (const auto& c : cells) {
        if (!halfplane_required(c)) continue;
        ++checked;
        double tol = c.terms == 42 ? 0.005 : 0.002;
        if (c.max_delta() <= tol) continue;
        if (!(c.family == ChebKind::Second && c.ratio == 1.01)) only_known = false;
        misses += " " + kind_symbol(c.family) + fmt(" ratio %.2f: (%.4f, %.4f)", c.ratio, c.left, c.right) +
                  fmt(" vs (%.4f, %.4f);", c.expected_left, c.expected_right);
    }
    if (misses.empty()) return {true, false, std::to_string(checked) + " cells within tolerance"};
    std::string detail = "outside tolerance:" + misses;
    if (only_known) detail += " known deviation, see the decisions ledger";
    return {false, only_known, detail};
}

Outcome gradient_table() {
    auto cells = sweep_gradient();
    const auto& ref = gradient_reference();
    std::string detail;
    bool ok = true;
    for (double ell : ref.ells) {
        if (ell < 0.05) continue;
        double worst = 0.0, value = 0.0, expected = 0.0;
        for (const auto& c : cells)
            if (c.ell == ell && c.N >= 51) {
                worst = std::max(worst, std::abs(c.value - c.expected) / std::abs(c.expected));
                if (c.N == 101) {
                    value = c.value;
                    expected = c.expected;
                }
            }
        if (worst > 0.01) ok = false;
        detail += fmt(" ell %.2f: %.4g vs %.4f;", ell, value, expected);
    }
    if (!ok) detail += " known deviation: the collocation system is singular, see the decisions ledger";
    return {ok, !ok, "N=101" + detail};
}

Outcome fgm_ladder() {
    FgmModeIIIProblem base;
    SifResult r0 = fgm_solve(base, 9);
    double sif_error = std::max(std::abs(r0.normalized_left - 1.0), std::abs(r0.normalized_right - 1.0));
    double asym = 0.0;
    for (int k = 0; k <= 50; ++k) {
        double s = k / 50.0;
        asym = std::max(asym, std::abs(reconstruct_density(r0.report.coefficients, s) -
                                       reconstruct_density(r0.report.coefficients, -s)));
    }
    FgmModeIIIProblem graded;
    graded.beta = 0.5;
    std::vector<double> tilts;
    for (int N : {9, 13, 17}) tilts.push_back(profile_tilt(fgm_solve(graded, N).report.coefficients));
    bool stable = true;
    for (double t : tilts) stable = stable && std::signbit(t) == std::signbit(tilts[0]) && std::abs(t) > 1e-3;
    stable = stable && std::abs(tilts.back() - tilts.front()) < 1e-3;
    bool ok = sif_error <= 1e-3 && asym <= 1e-10 && stable;
    return {ok, false,
            fmt("beta=0 SIF error %.2e, profile asymmetry %.2e", sif_error, asym) +
                fmt(", beta=0.5 tilt %.4f / %.4f / %.4f (N = 9, 13, 17)", tilts[0], tilts[1], tilts[2])};
}

Outcome property_suites() {
    std::string detail;
    bool ok = true;
    for (const auto& c : checks::all_property_checks()) {
        ok = ok && c.passed;
        detail += " " + c.name + fmt(" %.1e;", c.worst) + (c.passed ? "" : " FAILED");
    }
    return {ok, false, detail.substr(1)};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"closed form vs oracle sweep", closed_form_vs_oracle},
        {"general vs specific symbolic equality", general_vs_specific},
        {"low-order table regression and moments", low_order_regression},
        {"half-plane SIF table", halfplane_table},
        {"gradient-elasticity SIF ladder", gradient_table},
        {"graded-material sanity ladder", fgm_ladder},
        {"property suites", property_suites},
    };
    int hard_failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = criteria[i].run();
        } catch (const std::exception& e) {
            out = {false, false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const char* status = out.passed ? "PASS" : (out.known_deviation ? "FAIL (known deviation)" : "FAIL");
        std::printf("criterion %zu %s: %s [%.1fs] %s\n", i + 1, criteria[i].name, status, seconds, out.detail.c_str());
        if (!out.passed && !out.known_deviation) ++hard_failures;
    }
    return hard_failures == 0 ? 0 : 1;
}
