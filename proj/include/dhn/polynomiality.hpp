#pragma once

#include <string>
#include <vector>

#include "dhn/hurwitz.hpp"

namespace dhn {

enum class Method { automatic, brute, character, closed };

Method method_from_string(const std::string& name);

/// Values of H^g_{t alpha, t beta} for t = 1..T, all computed by one method.
struct RaySample {
    int g = 0;
    Partition alpha, beta;
    Method method = Method::automatic;
    std::vector<Rational> values;  // index t-1 holds the value at t
};

RaySample ray_samples(HurwitzEngine& engine, int g, const Partition& alpha,
                      const Partition& beta, int t_max, Method method = Method::character);

/// Exact Newton forward-difference fit of a rational sequence sampled at
/// t = 1, 2, ...
struct FitResult {
    int degree = -1;            // -1 for the zero polynomial
    Rational leading;           // degree-th coefficient
    std::vector<Rational> monomial_coefficients;  // index = exponent
};

/// Smallest D whose (D+1)-st differences vanish identically; throws a
/// precondition error ("inconclusive") when no difference row vanishes
/// within the sample.
FitResult fit_degree(const RaySample& sample);

struct ChamberRow {
    Partition alpha, beta;
    Rational h_canonical;   // transitive-factorization convention
    Rational h_aut_divided; // divided by |Aut alpha| |Aut beta|
    Rational expected;      // 2 max(alpha_1, alpha_2, beta_1, beta_2)
    bool canonical_match = false;
    bool aut_divided_match = false;
};

struct ChamberReport {
    bool ok = false;  // the canonical convention matches on every input
    std::vector<ChamberRow> rows;
};

/// Checks the genus-0 (2,2)-chamber value 2 max(...) on the full grid of
/// pairs with common degree <= range, reporting which normalization
/// convention matches for each input class.
ChamberReport check_chamber_formula_022(HurwitzEngine& engine, int range);

struct DegreeBoundsReport {
    int g = 0;
    Partition alpha, beta;
    FitResult fit;
    int window_lo = 0, window_hi = 0;
    std::vector<int> exponents_present;
    bool degrees_in_window = false;
    bool leading_nonzero = false;
    bool top_degree_attained = false;  // fitted degree == 4g-3+m+n
    bool ok = false;
};

DegreeBoundsReport check_degree_bounds(HurwitzEngine& engine, int g, const Partition& alpha,
                                       const Partition& beta, int t_max,
                                       Method method = Method::character);

}  // namespace dhn
