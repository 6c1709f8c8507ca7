#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hypersing/chebyshev.hpp"
#include "hypersing/coefficient_table.hpp"
#include "hypersing/crack_models.hpp"
#include "hypersing/errors.hpp"
#include "hypersing/exterior_integrals.hpp"
#include "hypersing/finite_part_oracle.hpp"
#include "hypersing/interior_integrals.hpp"
#include "hypersing/printed_formulas.hpp"

namespace py = pybind11;
using namespace hypersing;

namespace {

py::dict table_dict(const CoefficientTable& t) {
    py::list terms;
    for (const auto& term : t.terms)
        terms.append(py::dict(py::arg("kind") = kind_symbol(term.kind), py::arg("degree") = term.degree,
                              py::arg("coeff") = to_string(term.coefficient)));
    return py::dict(py::arg("prefactor") = to_string(t.prefactor),
                    py::arg("denominator_power") = t.denominator_power, py::arg("terms") = terms);
}

py::dict sif_dict(const SifResult& r) {
    return py::dict(py::arg("k_left") = r.k_left, py::arg("k_right") = r.k_right,
                    py::arg("normalized_left") = r.normalized_left, py::arg("normalized_right") = r.normalized_right,
                    py::arg("coefficients") = r.report.coefficients.coefficients,
                    py::arg("condition_estimate") = r.report.condition_estimate,
                    py::arg("warnings") = r.report.warnings);
}

}  // namespace

PYBIND11_MODULE(_hypersing, m) {
    m.doc() = "Closed-form Cauchy and hypersingular integrals of Chebyshev densities";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<UnsupportedCombination>(m, "UnsupportedCombination", PyExc_ValueError);
    py::register_exception<BelowThresholdError>(m, "BelowThresholdError", PyExc_ValueError);
    py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", PyExc_RuntimeError);

    py::enum_<ChebKind>(m, "ChebKind").value("T", ChebKind::First).value("U", ChebKind::Second);

    m.def("cheb", &eval_cheb, py::arg("kind"), py::arg("n"), py::arg("x"));
    m.def("cheb_derivative", &eval_cheb_derivative, py::arg("kind"), py::arg("n"), py::arg("x"));
    m.def("weight_moment", &weight_moment, py::arg("n"));

    m.def(
        "interior",
        [](ChebKind f, int alpha, int mm, int n, double r) { return interior_integral({f, alpha, mm, n, r}); },
        py::arg("family"), py::arg("alpha"), py::arg("m"), py::arg("n"), py::arg("r"));
    m.def(
        "exterior",
        [](ChebKind f, int alpha, int mm, int n, double r) { return exterior_integral({f, alpha, mm, n, r}); },
        py::arg("family"), py::arg("alpha"), py::arg("m"), py::arg("n"), py::arg("r"));
    m.def(
        "oracle",
        [](ChebKind f, int alpha, int mm, int n, double r) {
            SmoothDensity d = chebyshev_density(f, n);
            if (std::abs(r) > 1.0) return oracle_exterior(d, alpha, mm, r);
            return alpha == 1 ? oracle_cauchy(d, mm, r) : oracle_hfp(d, alpha, mm, r);
        },
        py::arg("family"), py::arg("alpha"), py::arg("m"), py::arg("n"), py::arg("r"));
    m.def(
        "table",
        [](ChebKind f, int alpha, int mm, int n) { return table_dict(dispatch_table(f, alpha, mm, n)); },
        py::arg("family"), py::arg("alpha"), py::arg("m"), py::arg("n"));

    m.def(
        "mode1",
        [](double ratio, int terms, ChebKind f) { return sif_dict(mode1_solve(mode1_from_ratio(ratio), terms - 1, f)); },
        py::arg("ratio"), py::arg("terms"), py::arg("family") = ChebKind::Second);
    m.def(
        "fgm",
        [](double beta, double c, double d, int terms) {
            FgmModeIIIProblem p;
            p.beta = beta;
            p.c = c;
            p.d = d;
            return sif_dict(fgm_solve(p, terms - 1));
        },
        py::arg("beta"), py::arg("c") = -1.0, py::arg("d") = 1.0, py::arg("terms") = 10);
    m.def(
        "gradient",
        [](double ell, double ellprime, double a, int terms) {
            GradientModeIIIProblem p;
            p.ell = ell;
            p.ellprime = ellprime;
            p.a = a;
            return sif_dict(gradient_solve(p, terms - 1));
        },
        py::arg("ell"), py::arg("ellprime") = 0.0, py::arg("a") = 1.0, py::arg("terms") = 52);

    m.def("errata_markdown", &errata_markdown);
}
