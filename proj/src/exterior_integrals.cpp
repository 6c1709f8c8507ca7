#include "hypersing/exterior_integrals.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "hypersing/errors.hpp"

namespace hypersing {

namespace {

using Laurent = std::map<int, Rational>;

void add_term(Laurent& l, int e, const Rational& c) {
    if (c == 0) return;
    auto& v = l[e];
    v += c;
    if (v == 0) l.erase(e);
}

Laurent times_one_minus_z2(const Laurent& l) {
    Laurent out;
    for (const auto& [e, c] : l) {
        add_term(out, e, c);
        add_term(out, e + 2, -c);
    }
    return out;
}

ExteriorTable raise_to(const ExteriorTable& t, int q) {
    ExteriorTable out{Rational(1), t.denominator_power, {}};
    for (const auto& [e, c] : t.terms) add_term(out.terms, e, c * t.prefactor);
    while (out.denominator_power < q) {
        out.terms = times_one_minus_z2(out.terms);
        ++out.denominator_power;
    }
    return out;
}

// Cancels common (1 - z^2) factors.
ExteriorTable reduce(ExteriorTable t) {
    while (t.denominator_power > 0 && !t.terms.empty()) {
        int lo = t.terms.begin()->first;
        int hi = t.terms.rbegin()->first;
        std::vector<Rational> p(hi - lo + 1);
        for (const auto& [e, c] : t.terms) p[e - lo] = c;
        // Divide p(z) by (1 - z^2): q_k = q_{k-2} + p_k from the low end.
        std::vector<Rational> q(p.size() >= 2 ? p.size() - 2 : 0);
        bool exact = p.size() >= 3;
        if (exact) {
            for (std::size_t k = 0; k < q.size(); ++k) q[k] = p[k] + (k >= 2 ? q[k - 2] : Rational(0));
            for (std::size_t k = q.size(); k < p.size(); ++k)
                if (p[k] != (k >= 2 ? -q[k - 2] : Rational(0))) exact = false;
        }
        if (!exact) break;
        Laurent next;
        for (std::size_t k = 0; k < q.size(); ++k) add_term(next, lo + static_cast<int>(k), q[k]);
        t.terms = std::move(next);
        --t.denominator_power;
    }
    if (t.terms.empty()) t.denominator_power = 0;
    return t;
}

ExteriorTable combine(const ExteriorTable& a, const Rational& ca, const ExteriorTable& b, const Rational& cb) {
    int q = std::max(a.denominator_power, b.denominator_power);
    ExteriorTable ra = raise_to(a, q), rb = raise_to(b, q);
    ExteriorTable out{Rational(1), q, {}};
    for (const auto& [e, c] : ra.terms) add_term(out.terms, e, c * ca);
    for (const auto& [e, c] : rb.terms) add_term(out.terms, e, c * cb);
    return reduce(out);
}

class FirstOrderExteriorCache {
public:
    ExteriorTable get(ChebKind family, int m, int n) {
        Key key{family == ChebKind::First ? 0 : 1, m, n};
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        ExteriorTable value = compute(family, m, n);
        std::unique_lock lock(mutex_);
        cache_.emplace(key, value);
        return value;
    }

private:
    using Key = std::tuple<int, int, int>;

    ExteriorTable compute(ChebKind family, int m, int n) {
        const Rational half(1, 2);
        if (family == ChebKind::First) {
            if (m == 0) {
                ExteriorTable t{Rational(1), 1, {}};
                add_term(t.terms, n + 1, Rational(-2));
                return t;
            }
            if (n >= 2) return combine(get(ChebKind::Second, m, n), half, get(ChebKind::Second, m, n - 2), -half);
            if (n == 1) return combine(get(ChebKind::Second, m, 1), half, ExteriorTable{}, Rational(0));
            return get(ChebKind::Second, m, 0);
        }
        return combine(get(ChebKind::First, m - 1, n), half, get(ChebKind::First, m - 1, n + 2), -half);
    }

    std::shared_mutex mutex_;
    std::map<Key, ExteriorTable> cache_;
};

FirstOrderExteriorCache& first_order_exterior_cache() {
    static FirstOrderExteriorCache cache;
    return cache;
}

}  // namespace

double exterior_base(double r) {
    if (!(std::abs(r) > 1.0)) throw DomainError("exterior_base needs |r| > 1");
    double root = std::sqrt((r - 1.0) * (r + 1.0));
    // r - sign(r) sqrt(r^2 - 1) written without cancellation.
    return 1.0 / (r + std::copysign(root, r));
}

double ExteriorTable::evaluate(double r) const {
    double z = exterior_base(r);
    double sum = 0.0;
    for (const auto& [e, c] : terms) sum += to_double(c) * std::pow(z, e);
    double denom = std::pow(1.0 - z * z, denominator_power);
    return std::numbers::pi * to_double(prefactor) * sum / denom;
}

ExteriorTable derive_next_order(const ExteriorTable& table, int alpha) {
    if (alpha < 1) throw std::invalid_argument("derive_next_order needs alpha >= 1");
    // d/dr [L / (1-z^2)^q] = -2 z^2 [L'(1-z^2) + 2 q z L] / (1-z^2)^{q+2}
    const int q = table.denominator_power;
    Laurent dl;
    for (const auto& [e, c] : table.terms) add_term(dl, e - 1, c * e);
    Laurent inner = times_one_minus_z2(dl);
    for (const auto& [e, c] : table.terms) add_term(inner, e + 1, c * 2 * q);
    ExteriorTable out{table.prefactor / alpha, q + 2, {}};
    for (const auto& [e, c] : inner) add_term(out.terms, e + 2, -2 * c);
    return reduce(raise_to(out, out.denominator_power));
}

ExteriorTable exterior_table(ChebKind family, int alpha, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("m and n must be >= 0");
    if (alpha == 4)
        throw UnsupportedCombination(
            "exterior alpha = 4 is not provided; it follows from one more derive_next_order step "
            "applied to the alpha = 3 exterior table");
    if (alpha < 1 || alpha > 4) throw UnsupportedCombination("exterior alpha must be in 1..3");
    if (family == ChebKind::Second && m == 0)
        throw UnsupportedCombination("second-kind densities need weight exponent m >= 1");
    ExteriorTable t = first_order_exterior_cache().get(family, m, n);
    for (int a = 1; a < alpha; ++a) t = derive_next_order(t, a);
    return t;
}

double exterior_integral(const ExteriorQuery& q) {
    if (!(std::abs(q.r) > 1.0))
        throw DomainError("exterior integral needs |r| > 1 (got r = " + std::to_string(q.r) + ")");
    return exterior_table(q.family, q.alpha, q.m, q.n).evaluate(q.r);
}

double exterior_oracle(const ExteriorQuery& q, const OracleOptions& opt) {
    if (q.family == ChebKind::Second && q.m == 0)
        throw UnsupportedCombination("second-kind densities need weight exponent m >= 1");
    return oracle_exterior(chebyshev_density(q.family, q.n), q.alpha, q.m, q.r, opt);
}

}  // namespace hypersing
