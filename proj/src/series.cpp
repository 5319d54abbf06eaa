#include "dhn/series.hpp"

#include <algorithm>
#include <mutex>

namespace dhn {

UnivariateSeries UnivariateSeries::constant(const Rational& v, int order) {
    UnivariateSeries s(order);
    s.c_[0] = v;
    return s;
}

UnivariateSeries UnivariateSeries::truncated(int order) const {
    std::vector<Rational> out(static_cast<size_t>(order) + 1);
    for (size_t i = 0; i < out.size() && i < c_.size(); ++i) out[i] = c_[i];
    return UnivariateSeries(std::move(out));
}

UnivariateSeries UnivariateSeries::operator+(const UnivariateSeries& o) const {
    int n = std::min(order(), o.order());
    UnivariateSeries out(n);
    for (int i = 0; i <= n; ++i) out.c_[i] = coeff(i) + o.coeff(i);
    return out;
}

UnivariateSeries UnivariateSeries::operator-(const UnivariateSeries& o) const {
    int n = std::min(order(), o.order());
    UnivariateSeries out(n);
    for (int i = 0; i <= n; ++i) out.c_[i] = coeff(i) - o.coeff(i);
    return out;
}

UnivariateSeries UnivariateSeries::operator*(const UnivariateSeries& o) const {
    int n = std::min(order(), o.order());
    UnivariateSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (o.coeff(j).is_zero()) continue;
            out.c_[static_cast<size_t>(i + j)] += coeff(i) * o.coeff(j);
        }
    }
    return out;
}

UnivariateSeries UnivariateSeries::operator/(const UnivariateSeries& o) const {
    if (o.coeff(0).is_zero())
        throw precondition_error("UnivariateSeries: division requires a unit");
    int n = std::min(order(), o.order());
    UnivariateSeries out(n);
    for (int i = 0; i <= n; ++i) {
        Rational acc = coeff(i);
        for (int j = 1; j <= i; ++j) acc -= o.coeff(j) * out.c_[static_cast<size_t>(i - j)];
        out.c_[static_cast<size_t>(i)] = acc / o.coeff(0);
    }
    return out;
}

UnivariateSeries UnivariateSeries::operator*(const Rational& s) const {
    UnivariateSeries out(order());
    for (int i = 0; i <= order(); ++i) out.c_[static_cast<size_t>(i)] = coeff(i) * s;
    return out;
}

UnivariateSeries UnivariateSeries::pow(int e) const {
    if (e < 0) return constant(1, order()) / pow(-e);
    UnivariateSeries out = constant(1, order());
    UnivariateSeries base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

UnivariateSeries UnivariateSeries::exp() const {
    if (!coeff(0).is_zero())
        throw precondition_error("UnivariateSeries::exp: constant term must be 0");
    UnivariateSeries out = constant(1, order());
    UnivariateSeries term = constant(1, order());
    for (int k = 1; k <= order(); ++k) {
        term = term * *this * Rational(1, k);
        out = out + term;
    }
    return out;
}

UnivariateSeries UnivariateSeries::log() const {
    if (coeff(0) != Rational(1))
        throw precondition_error("UnivariateSeries::log: constant term must be 1");
    UnivariateSeries u = *this - constant(1, order());
    UnivariateSeries out(order());
    UnivariateSeries term = constant(1, order());
    for (int k = 1; k <= order(); ++k) {
        term = term * u;
        out = out + term * Rational(k % 2 == 1 ? 1 : -1, k);
    }
    return out;
}

namespace {
std::mutex cache_mutex;
}

Rational bernoulli(int two_j) {
    if (two_j < 0 || two_j % 2 != 0)
        throw precondition_error("bernoulli: index must be even and non-negative");
    std::lock_guard<std::mutex> lock(cache_mutex);
    // B_m over all m (B_1 = -1/2 in the x/(e^x - 1) convention); only even
    // indices are exposed.
    static std::vector<Rational> cache{Rational(1)};
    for (size_t m = cache.size(); m <= static_cast<size_t>(two_j); ++m) {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        Rational acc;
        for (size_t k = 0; k < m; ++k)
            acc += Rational(binomial(Integer(m + 1), static_cast<long>(k))) * cache[k];
        cache.push_back(-acc / Rational(Integer(m + 1)));
    }
    return cache[static_cast<size_t>(two_j)];
}

Rational xi_coeff(int two_j) {
    if (two_j < 2 || two_j % 2 != 0)
        throw precondition_error("xi_coeff: index must be even and positive");
    std::lock_guard<std::mutex> lock(cache_mutex);
    static std::vector<Rational> cache;  // cache[j] = xi_{2j}
    size_t j = static_cast<size_t>(two_j) / 2;
    if (j >= cache.size()) {
        int order = 2 * static_cast<int>(j) + 2;
        UnivariateSeries l = sinh_x_over_x(order).log();
        cache.resize(j + 1);
        for (size_t i = 1; i <= j; ++i) cache[i] = l.coeff(2 * static_cast<int>(i));
    }
    return cache[j];
}

Rational v_coeff(int two_j) {
    if (two_j < 0 || two_j % 2 != 0)
        throw precondition_error("v_coeff: index must be even and non-negative");
    return Rational(1, pow(Integer(2), static_cast<unsigned long>(two_j)) *
                           factorial(static_cast<unsigned long>(two_j) + 1));
}

Rational f_coeff(int two_j) {
    if (two_j < 0 || two_j % 2 != 0)
        throw precondition_error("f_coeff: index must be even and non-negative");
    if (two_j == 0) return Rational(1);
    Integer half = pow(Integer(2), static_cast<unsigned long>(two_j) - 1);
    return Rational(1 - half, half * factorial(static_cast<unsigned long>(two_j))) *
           bernoulli(two_j);
}

UnivariateSeries sinh_x_over_x(int order) {
    UnivariateSeries s(order);
    for (int i = 0; 2 * i <= order; ++i)
        s.set_coeff(2 * i, Rational(1, factorial(2 * static_cast<unsigned long>(i) + 1)));
    return s;
}

UnivariateSeries sinh_ratio(int k, int order) {
    UnivariateSeries s(order);
    for (int i = 0; 2 * i <= order; ++i)
        s.set_coeff(2 * i, v_coeff(2 * i) * Rational(pow(Integer(k), 2 * static_cast<unsigned long>(i))));
    return s;
}

UnivariateSeries v_series(int order) { return sinh_ratio(1, order); }

UnivariateSeries f_series(int order) {
    return UnivariateSeries::constant(1, order) / v_series(order);
}

}  // namespace dhn
