#include "hypersing/interior_integrals.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <tuple>

#include "hypersing/errors.hpp"

namespace hypersing {

namespace {

constexpr double kEndpointGuard = 1e-8;

std::string describe(ChebKind family, int alpha, int m, int n) {
    return "I_" + std::to_string(alpha) + "(" + kind_symbol(family) + "_" + std::to_string(n) +
           ", m=" + std::to_string(m) + ")";
}

void validate(ChebKind family, int alpha, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("m and n must be >= 0");
    if (alpha < 1 || alpha > 4)
        throw UnsupportedCombination(describe(family, alpha, m, n) + ": alpha must be in 1..4");
    if (family == ChebKind::Second && m == 0)
        throw UnsupportedCombination(describe(family, alpha, m, n) +
                                     ": second-kind densities need weight exponent m >= 1");
}

Rational binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Rational b = 1;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

Rational half_power(int e) {
    Rational x = 1;
    for (int i = 0; i < e; ++i) x /= 2;
    return x;
}

Rational sign_power(int e) {
    return e % 2 == 0 ? Rational(1) : Rational(-1);
}

// First-order integral as an exact sum (times pi), by reduction to the
// unweighted first-kind case.
class FirstOrderCache {
public:
    ChebSum get(ChebKind family, int m, int n) {
        Key key{family == ChebKind::First ? 0 : 1, m, n};
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        ChebSum value = compute(family, m, n);
        std::unique_lock lock(mutex_);
        cache_.emplace(key, value);
        return value;
    }

private:
    using Key = std::tuple<int, int, int>;

    ChebSum compute(ChebKind family, int m, int n) {
        const Rational half(1, 2);
        if (family == ChebKind::First) {
            if (m == 0) {
                ChebSum s;
                s.add(ChebKind::Second, n - 1, Rational(1));
                return s;
            }
            if (n >= 2) return half * (get(ChebKind::Second, m, n) - get(ChebKind::Second, m, n - 2));
            if (n == 1) return half * get(ChebKind::Second, m, 1);
            return get(ChebKind::Second, m, 0);
        }
        return half * (get(ChebKind::First, m - 1, n) - get(ChebKind::First, m - 1, n + 2));
    }

    std::shared_mutex mutex_;
    std::map<Key, ChebSum> cache_;
};

FirstOrderCache& first_order_cache() {
    static FirstOrderCache cache;
    return cache;
}

// General-m closed forms, first kind.
CoefficientTable general_first_kind(int alpha, int m, int n) {
    ChebSum s;
    switch (alpha) {
    case 1:
        for (int j = 0; j <= 2 * m - 1; ++j)
            s.add(ChebKind::First, n + 1 - 2 * m + 2 * j, sign_power(j) * binom(2 * m - 1, j));
        return make_table(sign_power(m + 1) * half_power(2 * m - 1), 0, s);
    case 2:
        for (int j = 0; j <= 2 * m - 1; ++j)
            s.add(ChebKind::Second, n - 2 * m + 2 * j,
                  sign_power(j) * binom(2 * m - 1, j) * (n + 1 - 2 * m + 2 * j));
        return make_table(sign_power(m + 1) * half_power(2 * m - 1), 0, s);
    case 3:
        for (int j = 0; j <= 2 * m - 1; ++j) {
            int k = n - 2 * m + 2 * j;
            Rational c = sign_power(j) * binom(2 * m - 1, j) * (k + 1);
            s.add(ChebKind::Second, k - 1, c * (k + 2));
            s.add(ChebKind::Second, k + 1, -c * k);
        }
        return make_table(sign_power(m + 1) * half_power(2 * m + 1), 1, s);
    default:
        for (int j = 0; j <= 2 * m - 1; ++j) {
            int k = n - 2 * m + 2 * j;
            Rational c = sign_power(j) * binom(2 * m - 1, j) * (k + 1);
            s.add(ChebKind::Second, k - 2, c * (k + 2) * (k + 3));
            s.add(ChebKind::Second, k, -c * (2 * k * k + 4 * k - 6));
            s.add(ChebKind::Second, k + 2, c * k * (k - 1));
        }
        return make_table(sign_power(m + 1) * half_power(2 * m + 2) / 3, 2, s);
    }
}

// General-m closed forms, second kind.
CoefficientTable general_second_kind(int alpha, int m, int n) {
    ChebSum s;
    switch (alpha) {
    case 1:
        for (int j = 0; j <= 2 * m - 2; ++j)
            s.add(ChebKind::First, n + 3 - 2 * m + 2 * j, sign_power(j) * binom(2 * m - 2, j));
        return make_table(sign_power(m) * half_power(2 * m - 2), 0, s);
    case 2:
        for (int j = 0; j <= 2 * m - 2; ++j)
            s.add(ChebKind::Second, n + 2 - 2 * m + 2 * j,
                  sign_power(j) * binom(2 * m - 2, j) * (n + 3 - 2 * m + 2 * j));
        return make_table(sign_power(m) * half_power(2 * m - 2), 0, s);
    case 3:
        for (int j = 0; j <= 2 * m - 2; ++j) {
            int k = n - 2 * m + 2 * j;
            Rational c = sign_power(j) * binom(2 * m - 2, j) * (k + 3);
            s.add(ChebKind::Second, k + 1, c * (k + 4));
            s.add(ChebKind::Second, k + 3, -c * (k + 2));
        }
        return make_table(sign_power(m) * half_power(2 * m), 1, s);
    default:
        for (int j = 0; j <= 2 * m - 2; ++j) {
            int k = n - 2 * m + 2 * j;
            Rational c = sign_power(j) * binom(2 * m - 2, j) * (k + 3);
            s.add(ChebKind::Second, k, c * (k + 4) * (k + 5));
            s.add(ChebKind::Second, k + 2, -c * (2 * k * k + 12 * k + 10));
            s.add(ChebKind::Second, k + 4, c * (k + 2) * (k + 1));
        }
        return make_table(sign_power(m) * half_power(2 * m + 1) / 3, 2, s);
    }
}

using CacheKey = std::tuple<int, int, int, int>;

class CompiledCache {
public:
    std::shared_ptr<const CompiledTable> get(ChebKind family, int alpha, int m, int n) {
        CacheKey key{family == ChebKind::First ? 0 : 1, alpha, m, n};
        {
            std::shared_lock lock(mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        auto compiled = std::make_shared<const CompiledTable>(dispatch_table(family, alpha, m, n));
        std::unique_lock lock(mutex_);
        auto [it, inserted] = cache_.emplace(key, compiled);
        return it->second;
    }

private:
    std::shared_mutex mutex_;
    std::map<CacheKey, std::shared_ptr<const CompiledTable>> cache_;
};

CompiledCache& compiled_cache() {
    static CompiledCache cache;
    return cache;
}

}  // namespace

double LowOrderPolynomial::evaluate(double r) const {
    double v = 0.0;
    for (std::size_t i = coefficients.size(); i-- > 0;) v = v * r + to_double(coefficients[i]);
    return std::numbers::pi * v;
}

int general_threshold(ChebKind family, int alpha, int m) {
    if (family == ChebKind::First) {
        if (m == 0) return alpha;
        return 2 * m + alpha - 1;
    }
    if (m == 1) {
        static constexpr int low[] = {0, 0, 1, 2};
        return low[alpha - 1];
    }
    return 2 * m - 2 + alpha - 1;
}

EvaluationPath evaluation_path(ChebKind family, int alpha, int m, int n) {
    validate(family, alpha, m, n);
    if (n >= general_threshold(family, alpha, m)) return EvaluationPath::GeneralFormula;
    if (m <= 3) return EvaluationPath::LowOrderPolynomial;
    throw UnsupportedCombination(describe(family, alpha, m, n) +
                                 ": below the general-formula threshold and m > 3");
}

CoefficientTable derived_table(ChebKind family, int alpha, int m, int n) {
    validate(family, alpha, m, n);
    CoefficientTable table = make_table(Rational(1), 0, first_order_cache().get(family, m, n));
    for (int a = 1; a < alpha; ++a) table = derive_next_order(table, a);
    return table;
}

CoefficientTable coefficient_table(ChebKind family, int alpha, int m, int n) {
    validate(family, alpha, m, n);
    int threshold = general_threshold(family, alpha, m);
    if (n < threshold)
        throw BelowThresholdError(describe(family, alpha, m, n) + ": general formula needs n >= " +
                                  std::to_string(threshold) + "; use low_order_polynomial");
    if (family == ChebKind::First) {
        if (m == 0) return derived_table(family, alpha, m, n);
        return general_first_kind(alpha, m, n);
    }
    if (m == 1) return derived_table(family, alpha, m, n);
    return general_second_kind(alpha, m, n);
}

LowOrderPolynomial low_order_polynomial(ChebKind family, int alpha, int m, int n) {
    validate(family, alpha, m, n);
    if (m > 3)
        throw UnsupportedCombination(describe(family, alpha, m, n) +
                                     ": low-order polynomials are provided for m <= 3");
    CanonicalForm form = canonical_form(derived_table(family, alpha, m, n));
    if (form.denominator_power != 0)
        throw std::logic_error(describe(family, alpha, m, n) + " did not reduce to a polynomial");
    return {form.numerator};
}

CoefficientTable dispatch_table(ChebKind family, int alpha, int m, int n) {
    if (evaluation_path(family, alpha, m, n) == EvaluationPath::GeneralFormula)
        return coefficient_table(family, alpha, m, n);
    auto poly = low_order_polynomial(family, alpha, m, n);
    return make_table(Rational(1), 0, monomial_to_second_kind(poly.coefficients));
}

double interior_integral(const SingularIntegralQuery& q) {
    validate(q.family, q.alpha, q.m, q.n);
    if (!(std::abs(q.r) < 1.0))
        throw DomainError("interior integral needs |r| < 1 (got r = " + std::to_string(q.r) + ")");
    if (std::abs(q.r) > 1.0 - kEndpointGuard)
        throw NearEndpointError("r = " + std::to_string(q.r) + " is within 1e-8 of a crack tip");
    return (*compiled_cache().get(q.family, q.alpha, q.m, q.n))(q.r);
}

}  // namespace hypersing
