#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypersing/chebyshev.hpp"
#include "hypersing/coefficient_table.hpp"

namespace hypersing {

/// Coefficient of one Chebyshev term as a polynomial in n.
struct PrintedTerm {
    ChebKind kind;
    int offset;  // degree n + offset
    std::function<Rational(int n)> coefficient;
};

struct PrintedForm {
    Rational prefactor;
    int denominator_power = 0;
    std::vector<PrintedTerm> terms;

    CoefficientTable table(int n) const;
};

/// Closed form for one interior integral family I_alpha(P_n, m, r) as typeset,
/// with the corrected form when the typeset one disagrees with the derivation.
struct PrintedInteriorFormula {
    std::string address;
    ChebKind family;
    int alpha;
    int m;
    int n_min;
    PrintedForm printed;
    std::optional<PrintedForm> corrected;
    std::string erratum;  // id into formula_errata(), empty when none

    const PrintedForm& trusted() const { return corrected ? *corrected : printed; }
};

const std::vector<PrintedInteriorFormula>& printed_interior_formulas();

/// Boxed general-m bracket for I_4(U_n, m) exactly as typeset.
CoefficientTable printed_general_fourth_order_second_kind(int m, int n);

/// Exterior closed form as typeset, evaluated numerically.
struct PrintedExteriorFormula {
    std::string address;
    ChebKind family;
    int alpha;
    int m;
    std::vector<int> printed_n;  // indices the typeset form claims
    std::function<double(int n, double r)> printed;
    std::function<double(int n, double r)> corrected;  // empty when printed is right
    std::vector<int> valid_n;                           // indices where the trusted form holds
    std::string erratum;
};

const std::vector<PrintedExteriorFormula>& printed_exterior_formulas();

struct Erratum {
    std::string id;
    std::string address;
    std::string printed;
    std::string corrected;
    std::string evidence;
};

const std::vector<Erratum>& formula_errata();

/// Markdown rendering of formula_errata().
std::string errata_markdown();

}  // namespace hypersing
