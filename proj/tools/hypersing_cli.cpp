#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hypersing/chebyshev.hpp"
#include "hypersing/coefficient_table.hpp"
#include "hypersing/collocation_solver.hpp"
#include "hypersing/crack_models.hpp"
#include "hypersing/errors.hpp"
#include "hypersing/exterior_integrals.hpp"
#include "hypersing/finite_part_oracle.hpp"
#include "hypersing/interior_integrals.hpp"
#include "hypersing/printed_formulas.hpp"
#include "hypersing/reference_tables.hpp"

using json = nlohmann::json;
using namespace hypersing;

namespace {

constexpr const char* kSchemaVersion = "1.0";
constexpr int kUsageError = 2;
constexpr int kNumericalError = 1;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

void emit(const std::string& command, const json& inputs, const json& results,
          const std::vector<std::string>& warnings = {}) {
    json record = {{"schema_version", kSchemaVersion},
                   {"command", command},
                   {"inputs", inputs},
                   {"results", results},
                   {"warnings", warnings}};
    std::cout << record.dump(2) << "\n";
}

void emit_plain(double value) {
    std::printf("%.17g\n", value);
}

ChebKind kind_flag(const std::string& text, const std::string& flag) {
    try {
        return parse_kind(text);
    } catch (const std::exception&) {
        throw UsageError(flag + ": expected T or U, got '" + text + "'");
    }
}

json table_json(const CoefficientTable& t) {
    json terms = json::array();
    for (const auto& term : t.terms)
        terms.push_back({{"kind", kind_symbol(term.kind)}, {"degree", term.degree}, {"coeff", to_string(term.coefficient)}});
    return {{"prefactor", to_string(t.prefactor)}, {"denominator_power", t.denominator_power}, {"terms", terms}};
}

json exterior_table_json(const ExteriorTable& t) {
    json terms = json::array();
    for (const auto& [power, c] : t.terms) terms.push_back({{"power", power}, {"coeff", to_string(c)}});
    return {{"prefactor", to_string(t.prefactor)},
            {"denominator_power", t.denominator_power},
            {"variable", "z = r - sgn(r) sqrt(r^2 - 1)"},
            {"terms", terms}};
}

json report_json(const SolveReport& report) {
    return {{"family", kind_symbol(report.coefficients.family)},
            {"m", report.coefficients.m},
            {"coefficients", report.coefficients.coefficients},
            {"residual_norm", report.residual_norm},
            {"condition_estimate", report.condition_estimate},
            {"quadrature_points_used", report.quadrature_points_used}};
}

json sif_json(const SifResult& r) {
    return {{"k_left", r.k_left},
            {"k_right", r.k_right},
            {"normalized_left", r.normalized_left},
            {"normalized_right", r.normalized_right},
            {"normalization", r.normalization},
            {"normalization_value", r.normalization_value},
            {"N_used", r.N_used},
            {"interval", {{"c", r.interval.c}, {"d", r.interval.d}}},
            {"report", report_json(r.report)}};
}

void write_profile(const std::string& path, const std::string& column, const std::vector<ProfileSample>& samples) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("--profile: cannot open '" + path + "'");
    out << "x," << column << "\n";
    char line[64];
    for (const auto& s : samples) {
        std::snprintf(line, sizeof line, "%.12g,%.12g\n", s.x, s.value);
        out << line;
    }
}

struct Address {
    std::string family = "T";
    int alpha = 1;
    int m = 0;
    int n = 0;
    double r = 0.0;
    bool exterior = false;
    bool plain = false;
    bool compare = false;
};

void add_address(CLI::App* cmd, Address& a) {
    cmd->add_option("--family", a.family, "T or U")->required();
    cmd->add_option("--alpha", a.alpha, "singularity order")->required()->check(CLI::Range(1, 4));
    cmd->add_option("--m", a.m, "weight exponent index")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--n", a.n, "polynomial degree")->required()->check(CLI::NonNegativeNumber);
    cmd->add_option("--r", a.r, "evaluation point")->required();
    cmd->add_flag("--exterior", a.exterior, "|r| > 1 regular integral");
    cmd->add_flag("--plain", a.plain, "print a bare number");
    cmd->add_flag("--compare", a.compare, "print closed form, oracle and difference");
}

json address_json(const Address& a) {
    return {{"family", a.family}, {"alpha", a.alpha}, {"m", a.m}, {"n", a.n}, {"r", a.r}, {"exterior", a.exterior}};
}

void check_point(const Address& a) {
    if (a.exterior && !(std::abs(a.r) > 1.0)) throw UsageError("--r: exterior integrals need |r| > 1");
    if (!a.exterior && !(std::abs(a.r) < 1.0)) throw UsageError("--r: interior integrals need |r| < 1");
}

double closed_form(const Address& a) {
    ChebKind k = kind_flag(a.family, "--family");
    if (a.exterior) return exterior_integral({k, a.alpha, a.m, a.n, a.r});
    return interior_integral({k, a.alpha, a.m, a.n, a.r});
}

double oracle_value(const Address& a) {
    ChebKind k = kind_flag(a.family, "--family");
    if (a.exterior) return exterior_oracle({k, a.alpha, a.m, a.n, a.r});
    SmoothDensity f = chebyshev_density(k, a.n);
    return a.alpha == 1 ? oracle_cauchy(f, a.m, a.r) : oracle_hfp(f, a.alpha, a.m, a.r);
}

void run_address(const std::string& command, const Address& a, bool table, bool closed_primary) {
    check_point(a);
    if (table) {
        ChebKind k = kind_flag(a.family, "--family");
        json t = a.exterior ? exterior_table_json(exterior_table(k, a.alpha, a.m, a.n))
                            : table_json(dispatch_table(k, a.alpha, a.m, a.n));
        emit(command, address_json(a), {{"table", t}});
        return;
    }
    if (a.compare) {
        double c = closed_form(a);
        double o = oracle_value(a);
        if (a.plain) {
            emit_plain(c - o);
            return;
        }
        emit(command, address_json(a), {{"closed_form", c}, {"oracle", o}, {"difference", c - o}});
        return;
    }
    double v = closed_primary ? closed_form(a) : oracle_value(a);
    if (a.plain) {
        emit_plain(v);
        return;
    }
    json results = {{"value", v}, {"over_pi", v / std::numbers::pi}};
    if (!closed_primary) results["tolerance"] = quad_tolerance();
    emit(command, address_json(a), results);
}

// Load p(x) from a config entry.
std::function<double(double)> parse_load(const json& spec, const IntervalMap& interval) {
    if (spec.is_number()) {
        double v = spec.get<double>();
        return [v](double) { return v; };
    }
    std::string type = spec.value("type", "constant");
    if (type == "constant") {
        double v = spec.at("value").get<double>();
        return [v](double) { return v; };
    }
    if (type == "polynomial") {
        auto c = spec.at("coefficients").get<std::vector<double>>();
        return [c](double x) {
            double v = 0.0;
            for (std::size_t i = c.size(); i-- > 0;) v = v * x + c[i];
            return v;
        };
    }
    if (type == "chebyshev") {
        ChebKind k = kind_flag(spec.at("kind").get<std::string>(), "load.kind");
        auto c = spec.at("coefficients").get<std::vector<double>>();
        return [k, c, interval](double x) { return eval_cheb_series(k, c, interval.to_normalized(x)); };
    }
    throw UsageError("--config: unknown load type '" + type + "'");
}

ConstraintMode parse_constraint(const json& spec) {
    if (spec.is_boolean()) return spec.get<bool>() ? ConstraintMode::ReplaceRow : ConstraintMode::None;
    std::string s = spec.get<std::string>();
    if (s == "none" || s == "off") return ConstraintMode::None;
    if (s == "replace" || s == "on") return ConstraintMode::ReplaceRow;
    if (s == "append") return ConstraintMode::AppendLeastSquares;
    throw UsageError("--config: unknown constraint '" + s + "'");
}

void run_solve(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("--config: cannot open '" + path + "'");
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError(std::string("--config: ") + e.what());
    }
    try {
        IntervalMap interval = make_interval(cfg.at("interval").at("c").get<double>(), cfg.at("interval").at("d").get<double>());
        std::vector<SingularTerm> terms;
        for (const auto& t : cfg.at("singular_terms"))
            terms.push_back({t.at("alpha").get<int>(), t.at("coefficient").get<double>()});
        auto load = parse_load(cfg.at("load"), interval);
        NormalizedProblem problem = normalize(interval, terms, nullptr, load);
        std::string kernel = cfg.value("kernel", "zero");
        if (cfg.contains("kernel") && cfg["kernel"].is_object()) kernel = cfg["kernel"].at("name").get<std::string>();
        if (kernel == "mode1_halfplane") {
            problem.regular_kernel = [interval](double r, double s) { return mode1_halfplane_kernel(r, s, interval); };
        } else if (kernel != "zero") {
            throw UsageError("--config: unknown kernel '" + kernel + "'");
        }
        problem.family = kind_flag(cfg.value("family", "U"), "family");
        problem.m = cfg.value("m", 1);
        problem.quadrature_points = cfg.value("quadrature_points", 256);
        int N = cfg.at("N").get<int>();
        if (N < 0) throw UsageError("--config: N must be >= 0");
        ConstraintMode mode = cfg.contains("constraint") ? parse_constraint(cfg["constraint"]) : ConstraintMode::None;
        SolveReport report = solve(problem, N, mode);
        emit("solve", cfg, report_json(report), report.warnings);
    } catch (const json::exception& e) {
        throw UsageError(std::string("--config: ") + e.what());
    }
}

json halfplane_json(const std::vector<HalfPlaneCell>& cells, double& worst) {
    json rows = json::array();
    worst = 0.0;
    for (const auto& c : cells) {
        rows.push_back({{"family", kind_symbol(c.family)},
                        {"ratio", c.ratio},
                        {"terms", c.terms},
                        {"left", c.left},
                        {"right", c.right},
                        {"expected_left", c.expected_left},
                        {"expected_right", c.expected_right},
                        {"delta_left", c.left - c.expected_left},
                        {"delta_right", c.right - c.expected_right}});
        worst = std::max(worst, c.max_delta());
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Singular and hypersingular integrals of Chebyshev densities and crack solvers"};
    app.require_subcommand(1);

    auto* cheb = app.add_subcommand("cheb", "Chebyshev polynomials");
    cheb->require_subcommand(1);
    auto* cheb_eval = cheb->add_subcommand("eval", "evaluate T_n(x) or U_n(x)");
    std::string cheb_kind = "T";
    int cheb_n = 0;
    double cheb_x = 0.0;
    bool cheb_derivative = false, cheb_plain = false;
    cheb_eval->add_option("--kind", cheb_kind, "T or U")->required();
    cheb_eval->add_option("--n", cheb_n, "degree")->required()->check(CLI::NonNegativeNumber);
    cheb_eval->add_option("--x", cheb_x, "argument")->required();
    cheb_eval->add_flag("--derivative", cheb_derivative, "first derivative");
    cheb_eval->add_flag("--plain", cheb_plain, "print a bare number");

    auto* integral = app.add_subcommand("integral", "closed-form singular integral");
    Address integral_addr;
    bool integral_table = false;
    add_address(integral, integral_addr);
    integral->add_flag("--table", integral_table, "print the exact coefficient table");

    auto* oracle = app.add_subcommand("oracle", "adaptive-quadrature reference value");
    Address oracle_addr;
    add_address(oracle, oracle_addr);

    auto* solve_cmd = app.add_subcommand("solve", "collocation solve from a JSON config");
    std::string config_path;
    solve_cmd->add_option("--config", config_path, "JSON problem file")->required();

    auto* example = app.add_subcommand("example", "crack models");
    example->require_subcommand(1);
    std::string profile_path;
    auto* ex_mode1 = example->add_subcommand("mode1", "mode I crack near a half-plane edge");
    double ratio = 2.0;
    int mode1_terms = 4;
    std::string mode1_family = "U";
    ex_mode1->add_option("--ratio", ratio, "(d + c)/(d - c) > 1");
    ex_mode1->add_option("--terms", mode1_terms, "N + 1")->check(CLI::PositiveNumber);
    ex_mode1->add_option("--family", mode1_family, "T or U");
    ex_mode1->add_option("--profile", profile_path, "CSV of the crack opening");

    auto* ex_fgm = example->add_subcommand("fgm", "mode III crack in an exponentially graded material");
    double beta = 0.0, fgm_c = -1.0, fgm_d = 1.0;
    int fgm_terms = 10;
    std::string fgm_family = "U";
    ex_fgm->add_option("--beta", beta, "gradient exponent");
    ex_fgm->add_option("--c", fgm_c, "left tip");
    ex_fgm->add_option("--d", fgm_d, "right tip");
    ex_fgm->add_option("--terms", fgm_terms, "N + 1")->check(CLI::PositiveNumber);
    ex_fgm->add_option("--family", fgm_family, "T or U");
    ex_fgm->add_option("--profile", profile_path, "CSV of the crack-face displacement");

    auto* ex_grad = example->add_subcommand("gradient", "mode III crack in gradient elasticity");
    double ell = 0.5, ellp = 0.0, grad_a = 1.0;
    int grad_terms = 52;
    ex_grad->add_option("--ell", ell, "volumetric length")->check(CLI::PositiveNumber);
    ex_grad->add_option("--ellp", ellp, "surface length")->check(CLI::NonNegativeNumber);
    ex_grad->add_option("--a", grad_a, "crack half-length")->check(CLI::PositiveNumber);
    ex_grad->add_option("--terms", grad_terms, "N + 1")->check(CLI::PositiveNumber);
    ex_grad->add_option("--profile", profile_path, "CSV of the crack-face displacement");

    auto* table2 = app.add_subcommand("table2", "half-plane SIF table against the reference values");
    auto* table3 = app.add_subcommand("table3", "gradient-elasticity SIF ladder against the reference values");
    auto* errata = app.add_subcommand("errata", "printed-versus-derived formula discrepancies");
    bool errata_json = false;
    errata->add_flag("--json", errata_json, "JSON record instead of markdown");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*cheb_eval) {
            ChebKind k = kind_flag(cheb_kind, "--kind");
            double v = cheb_derivative ? eval_cheb_derivative(k, cheb_n, cheb_x) : eval_cheb(k, cheb_n, cheb_x);
            if (cheb_plain) {
                emit_plain(v);
            } else {
                emit("cheb eval",
                     {{"kind", cheb_kind}, {"n", cheb_n}, {"x", cheb_x}, {"derivative", cheb_derivative}},
                     {{"value", v}});
            }
        } else if (*integral) {
            run_address("integral", integral_addr, integral_table, true);
        } else if (*oracle) {
            run_address("oracle", oracle_addr, false, false);
        } else if (*solve_cmd) {
            run_solve(config_path);
        } else if (*ex_mode1) {
            if (!(ratio > 1.0)) throw UsageError("--ratio: must exceed 1");
            ChebKind k = kind_flag(mode1_family, "--family");
            SifResult r = mode1_solve(mode1_from_ratio(ratio), mode1_terms - 1, k);
            const auto& e = r.report.coefficients;
            r.profile = sample_profile(r.interval, 101, [&](double s) { return reconstruct_density(e, s); });
            if (!profile_path.empty()) write_profile(profile_path, "opening", r.profile);
            emit("example mode1", {{"ratio", ratio}, {"terms", mode1_terms}, {"family", mode1_family}}, sif_json(r),
                 r.report.warnings);
        } else if (*ex_fgm) {
            if (!(fgm_d > fgm_c)) throw UsageError("--d: must exceed --c");
            FgmModeIIIProblem p;
            p.beta = beta;
            p.c = fgm_c;
            p.d = fgm_d;
            SifResult r = fgm_solve(p, fgm_terms - 1, kind_flag(fgm_family, "--family"));
            const auto& e = r.report.coefficients;
            r.profile = sample_profile(r.interval, 101, [&](double s) { return reconstruct_density(e, s); });
            if (!profile_path.empty()) write_profile(profile_path, "displacement", r.profile);
            json out = sif_json(r);
            LimitFit left = extract_sif_mode3(p, e, CrackTip::Left);
            LimitFit right = extract_sif_mode3(p, e, CrackTip::Right);
            out["limit_left"] = {{"value", left.value},
                                 {"normalized", left.value / r.normalization_value},
                                 {"fit_residual", left.fit_residual}};
            out["limit_right"] = {{"value", right.value},
                                  {"normalized", right.value / r.normalization_value},
                                  {"fit_residual", right.fit_residual}};
            out["tilt"] = profile_tilt(e);
            emit("example fgm",
                 {{"beta", beta}, {"c", fgm_c}, {"d", fgm_d}, {"terms", fgm_terms}, {"family", fgm_family}}, out,
                 r.report.warnings);
        } else if (*ex_grad) {
            GradientModeIIIProblem p;
            p.ell = ell;
            p.ellprime = ellp;
            p.a = grad_a;
            SifResult r = gradient_solve(p, grad_terms - 1);
            const auto& e = r.report.coefficients;
            r.profile =
                sample_profile(r.interval, 101, [&](double s) { return gradient_displacement(e, grad_a, grad_a * s); });
            if (!profile_path.empty()) write_profile(profile_path, "displacement", r.profile);
            emit("example gradient", {{"ell", ell}, {"ellp", ellp}, {"a", grad_a}, {"terms", grad_terms}},
                 sif_json(r), r.report.warnings);
        } else if (*table2) {
            double worst = 0.0;
            json rows = halfplane_json(sweep_halfplane(), worst);
            emit("table2", json::object(), {{"rows", rows}, {"max_abs_delta", worst}});
        } else if (*table3) {
            json rows = json::array();
            std::vector<std::string> warnings;
            for (const auto& c : sweep_gradient()) {
                rows.push_back({{"ell", c.ell},
                                {"N", c.N},
                                {"value", c.value},
                                {"expected", c.expected},
                                {"delta", c.value - c.expected},
                                {"condition_estimate", c.condition_estimate}});
                for (const auto& w : c.warnings)
                    warnings.push_back("ell=" + std::to_string(c.ell) + " N=" + std::to_string(c.N) + ": " + w);
            }
            emit("table3", json::object(), {{"rows", rows}}, warnings);
        } else if (*errata) {
            if (errata_json) {
                json list = json::array();
                for (const auto& e : formula_errata())
                    list.push_back({{"id", e.id},
                                    {"address", e.address},
                                    {"printed", e.printed},
                                    {"corrected", e.corrected},
                                    {"evidence", e.evidence}});
                emit("errata", json::object(), {{"errata", list}});
            } else {
                std::cout << errata_markdown();
            }
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kUsageError;
    } catch (const UnsupportedCombination& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUsageError;
    } catch (const BelowThresholdError& e) {
        std::cerr << "below threshold: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kNumericalError;
    }
    return 0;
}
