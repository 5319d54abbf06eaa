#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dhn/series.hpp"

using namespace dhn;

namespace {

// deterministic pseudo-random rationals for the property checks
struct Lcg {
    unsigned long state = 0x9e3779b9UL;
    long next(long lo, long hi) {
        state = state * 6364136223846793005UL + 1442695040888963407UL;
        return lo + static_cast<long>((state >> 33) % static_cast<unsigned long>(hi - lo + 1));
    }
};

UnivariateSeries random_unit_series(Lcg& rng, int order) {
    UnivariateSeries s = UnivariateSeries::constant(1, order);
    for (int i = 1; i <= order; ++i)
        s.set_coeff(i, Rational(rng.next(-9, 9), rng.next(1, 7)));
    return s;
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(12) == Rational(-691, 2730));
    CHECK_THROWS_AS(bernoulli(3), precondition_error);
}

TEST_CASE("xi coefficients of log(sinh x / x)") {
    CHECK(xi_coeff(2) == Rational(1, 6));
    CHECK(xi_coeff(4) == Rational(-1, 180));
    CHECK(xi_coeff(6) == Rational(1, 2835));
}

TEST_CASE("v and f closed forms") {
    CHECK(v_coeff(0) == Rational(1));
    CHECK(f_coeff(0) == Rational(1));
    CHECK(v_coeff(2) == Rational(1, 24));
    CHECK(f_coeff(2) == Rational(-1, 24));

    // closed forms equal the series coefficients of (2/x)sinh(x/2) and
    // (x/2)cosech(x/2)
    const int order = 26;
    UnivariateSeries v = v_series(order), f = f_series(order);
    for (int j = 0; 2 * j <= order; ++j) {
        CHECK(v_coeff(2 * j) == v.coeff(2 * j));
        CHECK(f_coeff(2 * j) == f.coeff(2 * j));
    }
    for (int j = 0; j <= 12; ++j)
        CHECK(f_coeff(2 * j).sign() == (j % 2 == 0 ? 1 : -1));
}

TEST_CASE("series arithmetic basics") {
    UnivariateSeries s = sinh_x_over_x(8);
    CHECK(s.coeff(0) == Rational(1));
    CHECK(s.coeff(2) == Rational(1, 6));
    CHECK(s.coeff(3) == Rational(0));

    // division undoes multiplication
    UnivariateSeries t = sinh_ratio(3, 8);
    CHECK((s * t) / t == s);
    CHECK_THROWS_AS(s / UnivariateSeries(8), precondition_error);

    // pow with negative exponent
    CHECK(t.pow(-2) * t.pow(2) == UnivariateSeries::constant(1, 8));
}

TEST_CASE("exp and log preconditions") {
    UnivariateSeries one = UnivariateSeries::constant(1, 6);
    CHECK_THROWS_AS(one.exp(), precondition_error);
    CHECK_THROWS_AS(UnivariateSeries(6).log(), precondition_error);
}

TEST_CASE("exp(log(S)) == S for unit series") {
    Lcg rng;
    for (int trial = 0; trial < 24; ++trial) {
        UnivariateSeries s = random_unit_series(rng, 10);
        CHECK(s.log().exp() == s);
    }
}

TEST_CASE("log(exp(T)) == T for series with zero constant term") {
    Lcg rng;
    for (int trial = 0; trial < 24; ++trial) {
        UnivariateSeries s = random_unit_series(rng, 9);
        s.set_coeff(0, Rational(0));
        CHECK(s.exp().log() == s);
    }
}
