#include "dhn/lagrange.hpp"

#include <sstream>

#include "dhn/series.hpp"

namespace dhn {

// ---------------------------------------------------------------------------
// QUExpr

void QUExpr::add(const std::pair<Partition, int>& key, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QUExpr QUExpr::constant(const Rational& c) {
    QUExpr e;
    e.add({Partition(), 0}, c);
    return e;
}

QUExpr QUExpr::term(const Partition& kappa, int u_exp, const Rational& c) {
    QUExpr e;
    e.add({kappa, u_exp}, c);
    return e;
}

Rational QUExpr::constant_part() const {
    auto it = terms_.find({Partition(), 0});
    return it == terms_.end() ? Rational() : it->second;
}

QUExpr QUExpr::operator+(const QUExpr& o) const {
    QUExpr out = *this;
    for (const auto& [k, c] : o.terms_) out.add(k, c);
    return out;
}

QUExpr& QUExpr::operator+=(const QUExpr& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

QUExpr QUExpr::operator-(const QUExpr& o) const {
    QUExpr out = *this;
    for (const auto& [k, c] : o.terms_) out.add(k, -c);
    return out;
}

QUExpr QUExpr::operator*(const QUExpr& o) const {
    QUExpr out;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_)
            out.add({k1.first.merged(k2.first), k1.second + k2.second}, c1 * c2);
    return out;
}

QUExpr QUExpr::operator*(const Rational& s) const {
    QUExpr out;
    for (const auto& [k, c] : terms_) out.add(k, c * s);
    return out;
}

QUExpr QUExpr::specialize_u1() const {
    QUExpr out;
    for (const auto& [k, c] : terms_) out.add({k.first, 0}, c);
    return out;
}

std::string QUExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str_plain();
        if (!k.first.empty()) os << "*q[" << k.first.str() << "]";
        if (k.second > 0) os << "*u^" << k.second;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// XSeries

XSeries XSeries::x(int order) {
    XSeries s(order);
    if (order >= 1) s.set_coeff(1, QUExpr::constant(Rational(1)));
    return s;
}

XSeries XSeries::operator+(const XSeries& o) const {
    int n = std::min(order(), o.order());
    XSeries out(n);
    for (int i = 0; i <= n; ++i) out.c_[static_cast<size_t>(i)] = coeff(i) + o.coeff(i);
    return out;
}

XSeries XSeries::operator-(const XSeries& o) const {
    int n = std::min(order(), o.order());
    XSeries out(n);
    for (int i = 0; i <= n; ++i) out.c_[static_cast<size_t>(i)] = coeff(i) - o.coeff(i);
    return out;
}

XSeries XSeries::operator*(const XSeries& o) const {
    int n = std::min(order(), o.order());
    XSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (coeff(i).is_zero()) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (o.coeff(j).is_zero()) continue;
            out.c_[static_cast<size_t>(i + j)] += coeff(i) * o.coeff(j);
        }
    }
    return out;
}

XSeries XSeries::operator*(const Rational& s) const {
    XSeries out(order());
    for (int i = 0; i <= order(); ++i) out.c_[static_cast<size_t>(i)] = coeff(i) * s;
    return out;
}

XSeries XSeries::operator*(const QUExpr& s) const {
    XSeries out(order());
    for (int i = 0; i <= order(); ++i) out.c_[static_cast<size_t>(i)] = coeff(i) * s;
    return out;
}

XSeries XSeries::reciprocal() const {
    if (coeff(0) != QUExpr::constant(Rational(1)))
        throw precondition_error("XSeries::reciprocal: constant term must be 1");
    XSeries out(order());
    out.set_coeff(0, QUExpr::constant(Rational(1)));
    for (int i = 1; i <= order(); ++i) {
        QUExpr acc;
        for (int j = 1; j <= i; ++j) acc += coeff(j) * out.coeff(i - j);
        out.c_[static_cast<size_t>(i)] = QUExpr() - acc;
    }
    return out;
}

XSeries XSeries::exp() const {
    if (!coeff(0).is_zero())
        throw precondition_error("XSeries::exp: constant term must be 0");
    XSeries out(order());
    out.set_coeff(0, QUExpr::constant(Rational(1)));
    XSeries term = out;
    for (int k = 1; k <= order(); ++k) {
        term = term * *this * Rational(1, k);
        out = out + term;
    }
    return out;
}

XSeries XSeries::x_ddx(int e) const {
    if (e < 0 && !coeff(0).is_zero())
        throw precondition_error("XSeries::x_ddx: negative power needs zero constant term");
    XSeries out(order());
    for (int d = 0; d <= order(); ++d) {
        if (coeff(d).is_zero()) continue;
        out.c_[static_cast<size_t>(d)] = coeff(d) * pow(Rational(d), e);
    }
    return out;
}

XSeries XSeries::specialize_u1() const {
    XSeries out(order());
    for (int d = 0; d <= order(); ++d) out.c_[static_cast<size_t>(d)] = coeff(d).specialize_u1();
    return out;
}

// ---------------------------------------------------------------------------
// Series constructions

XSeries q_power_series(int i, int D) {
    XSeries s(D);
    for (int j = 1; j <= D; ++j)
        s.set_coeff(j, QUExpr::term(Partition({j}), 0,
                                    Rational(pow(Integer(j), static_cast<unsigned long>(i)))));
    return s;
}

XSeries substitute(const std::vector<QUExpr>& f_lambda, const XSeries& inner) {
    if (!inner.coeff(0).is_zero())
        throw precondition_error("substitute: inner constant term must be 0");
    const int D = inner.order();
    XSeries out(D);
    out.set_coeff(0, f_lambda.empty() ? QUExpr() : f_lambda[0]);
    XSeries power(D);
    power.set_coeff(0, QUExpr::constant(Rational(1)));
    for (size_t k = 1; k < f_lambda.size() && static_cast<int>(k) <= D; ++k) {
        power = power * inner;
        out = out + power * f_lambda[k];
    }
    return out;
}

namespace {

// u * Q(t) with q_j carrying u: coefficients of the exponent in w = x e^{uQ(w)}
XSeries u_q_of(const XSeries& w) {
    const int D = w.order();
    std::vector<QUExpr> f(static_cast<size_t>(D) + 1);
    for (int j = 1; j <= D; ++j) f[static_cast<size_t>(j)] = QUExpr::term(Partition({j}), 1, Rational(1));
    return substitute(f, w);
}

}  // namespace

XSeries solve_w(int D) {
    if (D < 1) throw precondition_error("solve_w: D >= 1 required");
    XSeries w = XSeries::x(D);
    for (int iter = 0; iter < D; ++iter) w = XSeries::x(D) * u_q_of(w).exp();
    if (w != XSeries::x(D) * u_q_of(w).exp())
        throw inconsistency_error("solve_w: fixed point did not converge");
    return w;
}

XSeries mu_of(const XSeries& w) {
    const int D = w.order();
    std::vector<QUExpr> q1(static_cast<size_t>(D) + 1);
    for (int j = 1; j <= D; ++j)
        q1[static_cast<size_t>(j)] = QUExpr::term(Partition({j}), 1, Rational(-j));
    // 1 - u Q^{(1)}(w), then invert
    XSeries denom = substitute(q1, w);
    denom.set_coeff(0, QUExpr::constant(Rational(1)));
    return denom.reciprocal();
}

// ---------------------------------------------------------------------------
// Lagrange coefficient checks

LagrangeCheck lagrange_coefficient(const std::vector<QUExpr>& f_lambda, int n) {
    if (n < 0) throw precondition_error("lagrange_coefficient: n >= 0 required");
    LagrangeCheck out;
    XSeries w = solve_w(std::max(n, 1));
    out.direct_fw = substitute(f_lambda, w).coeff(n);
    out.direct_fw_mu = (substitute(f_lambda, w) * mu_of(w)).coeff(n);

    if (n == 0) {
        out.via_thm1 = f_lambda.empty() ? QUExpr() : f_lambda[0];
        out.via_thm2 = out.via_thm1;
    } else {
        // phi(lambda)^n = e^{n u Q(lambda)} as a series in lambda
        XSeries lam = XSeries::x(n);
        XSeries phi_n = (u_q_of(lam) * Rational(n)).exp();
        // f'(lambda)
        XSeries fprime(n);
        for (size_t k = 1; k < f_lambda.size() && static_cast<int>(k) <= n + 1; ++k)
            if (static_cast<int>(k) - 1 <= n)
                fprime.set_coeff(static_cast<int>(k) - 1, f_lambda[k] * Rational(static_cast<long>(k)));
        out.via_thm1 = (fprime * phi_n).coeff(n - 1) * Rational(1, n);
        XSeries f_series(n);
        for (size_t k = 0; k < f_lambda.size() && static_cast<int>(k) <= n; ++k)
            f_series.set_coeff(static_cast<int>(k), f_lambda[k]);
        out.via_thm2 = (f_series * phi_n).coeff(n);
    }
    out.ok = out.via_thm1 == out.direct_fw && out.via_thm2 == out.direct_fw_mu;
    return out;
}

// ---------------------------------------------------------------------------
// Ansatz verification against Hurwitz data

XSeries one_part_series(int g, int D, const OnePartProvider& provider, bool keep_u,
                        int x_ddx_power) {
    XSeries s(D);
    for (int d = 1; d <= D; ++d) {
        QUExpr acc;
        for (const Partition& beta : partitions_of(d)) {
            int r = beta.length() - 1 + 2 * g;
            Rational v = provider(g, beta) /
                         Rational(factorial(static_cast<unsigned long>(r)) * aut_order(beta));
            if (v.is_zero()) continue;
            acc += QUExpr::term(beta, keep_u ? beta.length() : 0, v);
        }
        s.set_coeff(d, std::move(acc));
    }
    return s.x_ddx(x_ddx_power);
}

namespace {

AnsatzReport compare_series(const XSeries& lhs, const XSeries& rhs, const std::string& what) {
    AnsatzReport rep;
    rep.ok = true;
    for (int d = 0; d <= std::min(lhs.order(), rhs.order()); ++d) {
        ++rep.orders_checked;
        if (lhs.coeff(d) == rhs.coeff(d)) continue;
        rep.ok = false;
        rep.first_failure = what + " mismatch at x^" + std::to_string(d) + ": lhs = " +
                            lhs.coeff(d).str() + " vs rhs = " + rhs.coeff(d).str();
        break;
    }
    return rep;
}

}  // namespace

AnsatzReport verify_ansatz_with(int g, int D, const OnePartProvider& provider) {
    if (D < 4) throw precondition_error("verify_ansatz: D >= 4 required");
    XSeries w = solve_w(D).specialize_u1();
    if (g == 0) {
        XSeries lhs = one_part_series(0, D, provider, false, 1);
        std::vector<QUExpr> q(static_cast<size_t>(D) + 1);
        for (int j = 1; j <= D; ++j) q[static_cast<size_t>(j)] = QUExpr::term(Partition({j}), 0, Rational(1));
        return compare_series(lhs, substitute(q, w), "genus-0 ansatz");
    }
    if (g == 1) {
        XSeries lhs = one_part_series(1, D, provider, false, 0);
        XSeries mu = mu_of(w).specialize_u1();
        std::vector<QUExpr> q2(static_cast<size_t>(D) + 1), q3(static_cast<size_t>(D) + 1);
        for (int j = 1; j <= D; ++j) {
            q2[static_cast<size_t>(j)] = QUExpr::term(Partition({j}), 0, Rational(Integer(j) * j));
            q3[static_cast<size_t>(j)] = QUExpr::term(Partition({j}), 0, Rational(Integer(j) * j * j));
        }
        XSeries rhs = substitute(q3, w) * mu + substitute(q2, w) * substitute(q2, w) * mu * mu;
        // the "- mu + 1" constant correction
        XSeries one(D);
        one.set_coeff(0, QUExpr::constant(Rational(1)));
        rhs = (rhs - mu + one) * Rational(1, 24);
        return compare_series(lhs, rhs, "genus-1 ansatz");
    }
    throw precondition_error("verify_ansatz: only g in {0,1}");
}

AnsatzReport verify_ansatz(int g, int D, HurwitzEngine& engine) {
    return verify_ansatz_with(g, D, [&engine](int gg, const Partition& beta) {
        return engine.one_part(gg, beta);
    });
}

AnsatzReport verify_wittansx(int g, int D, HurwitzEngine& engine) {
    if (D < 4) throw precondition_error("verify_wittansx: D >= 4 required");
    if (g < 0) throw precondition_error("verify_wittansx: g >= 0 required");
    XSeries lhs = one_part_series(
        g, D, [&engine](int gg, const Partition& beta) { return engine.one_part(gg, beta); },
        false, 0);

    XSeries rhs(D);
    for (int k = 0; k <= g; ++k) {
        Rational fk = f_coeff(2 * k);
        for (int n = 1; n <= D; ++n) {
            for (const PaddedPartition& theta : padded_partitions(g - k, n)) {
                XSeries prod(D);
                prod.set_coeff(0, QUExpr::constant(Rational(1)));
                for (int t : theta.parts()) prod = prod * q_power_series(2 * t, D);
                Rational v(1);
                for (int t : theta.parts()) v *= v_coeff(2 * t);
                rhs = rhs + prod.x_ddx(2 * g - 2 + n) * (fk * v / Rational(aut_order(theta)));
            }
        }
    }
    return compare_series(lhs, rhs, "sinh-coefficient expansion (g=" + std::to_string(g) + ")");
}

AnsatzReport verify_onepart_u_graded(int D, HurwitzEngine& engine) {
    XSeries lhs = one_part_series(
        0, D, [&engine](int gg, const Partition& beta) { return engine.one_part(gg, beta); },
        true, 1);
    XSeries w = solve_w(D);
    std::vector<QUExpr> uq(static_cast<size_t>(D) + 1);
    for (int j = 1; j <= D; ++j) uq[static_cast<size_t>(j)] = QUExpr::term(Partition({j}), 1, Rational(1));
    return compare_series(lhs, substitute(uq, w), "u-graded genus-0 base case");
}

}  // namespace dhn
