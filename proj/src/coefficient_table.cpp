#include "hypersing/coefficient_table.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace hypersing {

std::string to_string(const Rational& q) {
    return q.str();
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

namespace {

int kind_index(ChebKind kind) {
    return kind == ChebKind::First ? 0 : 1;
}

ChebKind kind_of(int index) {
    return index == 0 ? ChebKind::First : ChebKind::Second;
}

// Monomial coefficients of P_0..P_maxdeg.
std::vector<std::vector<Rational>> monomial_basis(ChebKind kind, int maxdeg) {
    std::vector<std::vector<Rational>> basis;
    basis.push_back({Rational(1)});
    if (maxdeg >= 1) basis.push_back({Rational(0), Rational(kind == ChebKind::First ? 1 : 2)});
    for (int k = 2; k <= maxdeg; ++k) {
        std::vector<Rational> next(k + 1);
        const auto& p1 = basis[k - 1];
        const auto& p0 = basis[k - 2];
        for (std::size_t i = 0; i < p1.size(); ++i) next[i + 1] += 2 * p1[i];
        for (std::size_t i = 0; i < p0.size(); ++i) next[i] -= p0[i];
        basis.push_back(std::move(next));
    }
    return basis;
}

void trim(std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Divides by (1 - r^2) if exact; returns false and leaves p untouched otherwise.
bool divide_one_minus_r2(std::vector<Rational>& p) {
    if (p.size() < 3) return false;
    // Synthetic division by (r - 1), then (r + 1).
    auto divide_linear = [](const std::vector<Rational>& a, const Rational& root,
                            std::vector<Rational>& q) {
        std::size_t n = a.size();
        q.assign(n - 1, Rational(0));
        Rational carry = 0;
        for (std::size_t i = n; i-- > 0;) {
            carry = a[i] + carry * root;
            if (i > 0) q[i - 1] = carry;
        }
        return carry == 0;
    };
    std::vector<Rational> q1, q2;
    if (!divide_linear(p, Rational(1), q1)) return false;
    if (!divide_linear(q1, Rational(-1), q2)) return false;
    for (auto& c : q2) c = -c;
    p = std::move(q2);
    return true;
}

}  // namespace

void ChebSum::add(ChebKind kind, int degree, const Rational& c) {
    if (c == 0) return;
    Rational coeff = c;
    if (degree < 0) {
        if (kind == ChebKind::First) {
            degree = -degree;
        } else {
            if (degree == -1) return;
            degree = -degree - 2;
            coeff = -coeff;
        }
    }
    Key key{kind_index(kind), degree};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ChebSum& ChebSum::operator+=(const ChebSum& other) {
    for (const auto& [key, c] : other.terms_) add(kind_of(key.first), key.second, c);
    return *this;
}

ChebSum& ChebSum::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, v] : terms_) v *= c;
    return *this;
}

bool ChebSum::has_kind(ChebKind kind) const {
    int idx = kind_index(kind);
    return std::any_of(terms_.begin(), terms_.end(),
                       [idx](const auto& kv) { return kv.first.first == idx; });
}

int ChebSum::max_degree() const {
    int d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.second);
    return d;
}

ChebSum operator+(ChebSum a, const ChebSum& b) {
    a += b;
    return a;
}

ChebSum operator-(ChebSum a, ChebSum b) {
    b *= Rational(-1);
    a += b;
    return a;
}

ChebSum operator*(const Rational& c, ChebSum a) {
    a *= c;
    return a;
}

double CoefficientTable::evaluate(double r) const {
    return CompiledTable(*this)(r);
}

CoefficientTable make_table(const Rational& prefactor, int denominator_power, const ChebSum& sum) {
    CoefficientTable table;
    table.prefactor = prefactor;
    table.denominator_power = denominator_power;
    for (const auto& [key, c] : sum.terms())
        table.terms.push_back({kind_of(key.first), key.second, c});
    return table;
}

ChebSum table_sum(const CoefficientTable& table) {
    ChebSum sum;
    for (const auto& t : table.terms) sum.add(t.kind, t.degree, t.coefficient * table.prefactor);
    return sum;
}

std::vector<Rational> to_monomial(const ChebSum& sum) {
    int maxdeg = sum.max_degree();
    std::vector<Rational> poly(std::max(maxdeg + 1, 0));
    if (maxdeg < 0) return poly;
    bool need_t = sum.has_kind(ChebKind::First);
    bool need_u = sum.has_kind(ChebKind::Second);
    auto tb = need_t ? monomial_basis(ChebKind::First, maxdeg) : decltype(monomial_basis(ChebKind::First, 0)){};
    auto ub = need_u ? monomial_basis(ChebKind::Second, maxdeg) : decltype(tb){};
    for (const auto& [key, c] : sum.terms()) {
        const auto& b = key.first == 0 ? tb[key.second] : ub[key.second];
        for (std::size_t i = 0; i < b.size(); ++i) poly[i] += c * b[i];
    }
    trim(poly);
    return poly;
}

ChebSum monomial_to_second_kind(const std::vector<Rational>& poly) {
    std::vector<Rational> rest = poly;
    trim(rest);
    ChebSum sum;
    if (rest.empty()) return sum;
    int maxdeg = static_cast<int>(rest.size()) - 1;
    auto ub = monomial_basis(ChebKind::Second, maxdeg);
    for (int d = maxdeg; d >= 0; --d) {
        if (rest[d] == 0) continue;
        Rational q = rest[d] / ub[d][d];
        sum.add(ChebKind::Second, d, q);
        for (int i = 0; i <= d; ++i) rest[i] -= q * ub[d][i];
    }
    return sum;
}

CanonicalForm canonical_form(const CoefficientTable& table) {
    CanonicalForm form;
    form.numerator = to_monomial(table_sum(table));
    form.denominator_power = table.denominator_power;
    if (form.numerator.empty()) {
        form.denominator_power = 0;
        return form;
    }
    while (form.denominator_power > 0 && divide_one_minus_r2(form.numerator)) --form.denominator_power;
    return form;
}

bool symbolically_equal(const CoefficientTable& a, const CoefficientTable& b) {
    return canonical_form(a) == canonical_form(b);
}

CoefficientTable simplify(const CoefficientTable& table) {
    CanonicalForm form = canonical_form(table);
    if (form.denominator_power == table.denominator_power) return table;
    return make_table(Rational(1), form.denominator_power, monomial_to_second_kind(form.numerator));
}

CoefficientTable derive_next_order(const CoefficientTable& table, int alpha) {
    if (alpha < 1) throw std::invalid_argument("derive_next_order needs alpha >= 1");
    ChebSum s = table_sum(table);
    int p = table.denominator_power;
    ChebSum out;
    const Rational half(1, 2);
    if (p == 0 && !s.has_kind(ChebKind::Second)) {
        for (const auto& [key, c] : s.terms())
            out.add(ChebKind::Second, key.second - 1, c * key.second);
        out *= Rational(1, alpha);
        return make_table(Rational(1), 0, out);
    }
    for (const auto& [key, c] : s.terms()) {
        int k = key.second;
        if (key.first == 0) {
            // k (1 - r^2) U_{k-1} = -(k/4) [U_{k+1} - 2 U_{k-1} + U_{k-3}]
            Rational f = -c * k / 4;
            out.add(ChebKind::Second, k + 1, f);
            out.add(ChebKind::Second, k - 1, -2 * f);
            out.add(ChebKind::Second, k - 3, f);
            out.add(ChebKind::First, k + 1, c * p);
            out.add(ChebKind::First, k - 1, c * p);
        } else {
            out.add(ChebKind::Second, k - 1, c * (k + 2) * half);
            out.add(ChebKind::Second, k + 1, -c * k * half);
            out.add(ChebKind::Second, k + 1, c * p);
            out.add(ChebKind::Second, k - 1, c * p);
        }
    }
    out *= Rational(1, alpha);
    return simplify(make_table(Rational(1), p + 1, out));
}

CompiledTable::CompiledTable(const CoefficientTable& table)
    : scale(std::numbers::pi * to_double(table.prefactor)),
      denominator_power(table.denominator_power) {
    for (const auto& t : table.terms) {
        auto& v = t.kind == ChebKind::First ? first : second;
        if (static_cast<int>(v.size()) <= t.degree) v.resize(t.degree + 1, 0.0);
        v[t.degree] += to_double(t.coefficient);
    }
}

double CompiledTable::operator()(double r) const {
    double value = 0.0;
    if (!first.empty()) value += eval_cheb_series(ChebKind::First, first, r);
    if (!second.empty()) value += eval_cheb_series(ChebKind::Second, second, r);
    double denom = 1.0;
    for (int i = 0; i < denominator_power; ++i) denom *= 1.0 - r * r;
    return scale * value / denom;
}

}  // namespace hypersing
