#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dhn/lagrange.hpp"

using namespace dhn;

namespace {

QUExpr q_term(std::vector<int> kappa, int u, long num, long den = 1) {
    return QUExpr::term(Partition(std::move(kappa)), u, Rational(num, den));
}

}  // namespace

TEST_CASE("functional equation solution") {
    XSeries w = solve_w(5);
    CHECK(w.coeff(0).is_zero());
    CHECK(w.coeff(1) == QUExpr::constant(Rational(1)));
    CHECK(w.coeff(2) == q_term({1}, 1, 1));
    CHECK(w.coeff(3) == q_term({2}, 1, 1) + q_term({1, 1}, 2, 3, 2));
}

TEST_CASE("solve_w with Q = 0 degenerates to x") {
    // setting every q_j to zero in the solution leaves w = x; equivalently
    // the only u^0 part of w is x itself
    XSeries w = solve_w(6);
    for (int d = 2; d <= 6; ++d)
        for (const auto& [key, c] : w.coeff(d).terms()) CHECK(key.second > 0);
}

TEST_CASE("partial differential identities of w") {
    const int D = 6;
    XSeries w = solve_w(D);
    XSeries mu = mu_of(w);

    // x dw/dx = w mu(w)
    CHECK(w.x_ddx(1) == w * mu);

    // dw/du = w Q(w) mu(w): check via the u-grading (coefficient-wise
    // derivative in u multiplies each term by its u-exponent)
    XSeries dw_du(D);
    for (int d = 0; d <= D; ++d) {
        QUExpr acc;
        for (const auto& [key, c] : w.coeff(d).terms()) {
            if (key.second == 0) continue;
            acc += QUExpr::term(key.first, key.second - 1, c * Rational(key.second));
        }
        dw_du.set_coeff(d, acc);
    }
    std::vector<QUExpr> q(static_cast<size_t>(D) + 1);
    for (int j = 1; j <= D; ++j) q[static_cast<size_t>(j)] = q_term({j}, 0, 1);
    CHECK(dw_du == w * substitute(q, w) * mu);
}

TEST_CASE("lagrange coefficient forms agree with direct substitution") {
    std::vector<QUExpr> identity{QUExpr(), QUExpr::constant(Rational(1))};
    auto c2 = lagrange_coefficient(identity, 2);
    CHECK(c2.ok);
    CHECK(c2.direct_fw == q_term({1}, 1, 1));

    for (int n = 0; n <= 5; ++n) CHECK(lagrange_coefficient(identity, n).ok);

    std::vector<QUExpr> constant{QUExpr::constant(Rational(3))};
    auto c0 = lagrange_coefficient(constant, 0);
    CHECK(c0.ok);
    CHECK(c0.direct_fw == QUExpr::constant(Rational(3)));

    std::vector<QUExpr> q_poly(5);
    for (int j = 1; j <= 4; ++j) q_poly[static_cast<size_t>(j)] = q_term({j}, 0, 1);
    for (int n = 1; n <= 4; ++n) CHECK(lagrange_coefficient(q_poly, n).ok);
}

TEST_CASE("genus expansion ansatz against one-part data") {
    HurwitzEngine e;
    CHECK(verify_ansatz(0, 6, e).ok);
    CHECK(verify_ansatz(1, 6, e).ok);
    CHECK_THROWS_AS(verify_ansatz(2, 6, e), precondition_error);
}

TEST_CASE("a wrong Hurwitz value breaks the ansatz") {
    HurwitzEngine e;
    auto corrupted = [&e](int g, const Partition& beta) {
        Rational v = e.one_part(g, beta);
        if (beta == Partition({2, 1})) v += Rational(1);
        return v;
    };
    CHECK_FALSE(verify_ansatz_with(0, 6, corrupted).ok);
}

TEST_CASE("sinh-coefficient expansion of the one-part series") {
    HurwitzEngine e;
    for (int g = 0; g <= 2; ++g) CHECK(verify_wittansx(g, 5, e).ok);
}

TEST_CASE("u-graded genus-0 base case") {
    HurwitzEngine e;
    CHECK(verify_onepart_u_graded(5, e).ok);
}
