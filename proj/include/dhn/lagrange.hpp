#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dhn/hurwitz.hpp"
#include "dhn/partition.hpp"
#include "dhn/rational.hpp"

namespace dhn {

/// Polynomial in the formal variables q_1, q_2, ... and u with rational
/// coefficients, keyed by (q-index multiset, u-exponent).
class QUExpr {
  public:
    QUExpr() = default;
    static QUExpr constant(const Rational& c);
    /// c * q_kappa * u^e
    static QUExpr term(const Partition& kappa, int u_exp, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Partition, int>, Rational>& terms() const { return terms_; }
    /// The purely constant part (empty monomial, u^0).
    Rational constant_part() const;

    QUExpr operator+(const QUExpr& o) const;
    QUExpr operator-(const QUExpr& o) const;
    QUExpr operator*(const QUExpr& o) const;
    QUExpr operator*(const Rational& s) const;
    QUExpr& operator+=(const QUExpr& o);

    /// Sets u = 1 (folds the u-grading away).
    QUExpr specialize_u1() const;

    std::string str() const;

    friend bool operator==(const QUExpr&, const QUExpr&) = default;

  private:
    void add(const std::pair<Partition, int>& key, const Rational& c);
    std::map<std::pair<Partition, int>, Rational> terms_;
};

/// Truncated power series in x whose coefficients are QUExpr polynomials.
class XSeries {
  public:
    explicit XSeries(int order) : c_(static_cast<size_t>(order) + 1) {}
    static XSeries x(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const QUExpr& coeff(int d) const { return c_[static_cast<size_t>(d)]; }
    void set_coeff(int d, QUExpr v) { c_[static_cast<size_t>(d)] = std::move(v); }

    XSeries operator+(const XSeries& o) const;
    XSeries operator-(const XSeries& o) const;
    XSeries operator*(const XSeries& o) const;
    XSeries operator*(const Rational& s) const;
    XSeries operator*(const QUExpr& s) const;

    /// 1 / *this; the constant term must be the rational 1.
    XSeries reciprocal() const;
    /// exp of a series with zero constant term.
    XSeries exp() const;
    /// (x d/dx)^e; negative e requires zero constant term.
    XSeries x_ddx(int e) const;

    XSeries specialize_u1() const;

    friend bool operator==(const XSeries&, const XSeries&) = default;

  private:
    std::vector<QUExpr> c_;
};

/// Q^{(i)}(x) = sum_{j>=1} q_j j^i x^j, truncated at x^D.
XSeries q_power_series(int i, int D);

/// Composition f(inner) for f given by its lambda-coefficients; inner must
/// have zero constant term.
XSeries substitute(const std::vector<QUExpr>& f_lambda, const XSeries& inner);

/// The unique solution of w = x e^{u Q(w)} with [x^1] w = 1, by fixed-point
/// iteration; the functional equation is re-checked before returning.
XSeries solve_w(int D);

/// mu(w) = 1/(1 - u Q^{(1)}(w)).
XSeries mu_of(const XSeries& w);

struct LagrangeCheck {
    QUExpr via_thm1, direct_fw;       // [x^n] f(w), two routes
    QUExpr via_thm2, direct_fw_mu;    // [x^n] f(w) mu(w), two routes
    bool ok = false;
};

/// Evaluates both Lagrange coefficient formulas for phi = e^{uQ} against
/// direct substitution into solve_w.
LagrangeCheck lagrange_coefficient(const std::vector<QUExpr>& f_lambda, int n);

struct AnsatzReport {
    bool ok = false;
    int orders_checked = 0;
    std::string first_failure;
};

using OnePartProvider = std::function<Rational(int, const Partition&)>;

/// The symmetrized one-part series at u = 1: [x^d] is
/// sum over beta of H^g_{(d),beta} q_beta / (r! |Aut beta|), optionally with
/// the u^{l(beta)} grading kept and optionally with x d/dx applied.
XSeries one_part_series(int g, int D, const OnePartProvider& provider, bool keep_u,
                        int x_ddx_power);

/// Genus expansion ansatz at u = 1: g = 0 checks x d/dx H_1^(0) = Q(w);
/// g = 1 checks H_1^(1) = (Q^(3)(w) mu + Q^(2)(w)^2 mu^2 - mu + 1)/24.
AnsatzReport verify_ansatz(int g, int D, HurwitzEngine& engine);
AnsatzReport verify_ansatz_with(int g, int D, const OnePartProvider& provider);

/// The sinh-coefficient expansion of the one-part series:
/// H_1^(g)|_{u=1} = sum_k f_{2k} sum over padded theta of
/// (v_{2 theta}/|Aut theta|) (x d/dx)^{2g-2+l(theta)} Q^{(2 theta)}(x).
AnsatzReport verify_wittansx(int g, int D, HurwitzEngine& engine);

/// Full u-graded form of the genus-0 base case: x d/dx H_1^(0) = u Q(w).
AnsatzReport verify_onepart_u_graded(int D, HurwitzEngine& engine);

}  // namespace dhn
