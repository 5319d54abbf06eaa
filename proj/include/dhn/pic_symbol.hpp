#pragma once

#include <map>
#include <string>
#include <vector>

#include "dhn/partition.hpp"
#include "dhn/rational.hpp"

namespace dhn {

/// Exact multivariate polynomial in beta_1 .. beta_n.
class BetaPolynomial {
  public:
    explicit BetaPolynomial(int nvars) : nvars_(nvars) {}
    static BetaPolynomial constant(int nvars, const Rational& c);
    /// sum_i beta_i^e  (e >= 0; e = 0 gives the constant n)
    static BetaPolynomial power_sum(int nvars, int e);

    int nvars() const { return nvars_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    Rational coefficient(const std::vector<int>& exponents) const;
    Rational eval(const Partition& beta) const;

    BetaPolynomial operator+(const BetaPolynomial& o) const;
    BetaPolynomial operator*(const BetaPolynomial& o) const;
    BetaPolynomial operator*(const Rational& s) const;
    BetaPolynomial pow(int e) const;

  private:
    void add_term(std::vector<int> exps, const Rational& c);

    int nvars_;
    std::map<std::vector<int>, Rational> terms_;
};

/// Element of the free commutative algebra on symbols Q^(0), Q^(1), ...;
/// monomials are multisets of indices.  Carries the derivation
/// Delta_{-1}: Q^(i) -> Q^(i+1) extended by Leibniz.
class QPolynomial {
  public:
    QPolynomial() = default;
    static QPolynomial monomial(std::vector<int> indices, const Rational& c);

    QPolynomial derivation() const;
    Rational coefficient(std::vector<int> indices) const;
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  private:
    std::map<std::vector<int>, Rational> terms_;  // sorted index multiset -> coeff
};

/// Index of the bracket symbol <<tau_{b_1}..tau_{b_n} Lambda_{2k}>>_g.
/// The symbol vanishes unless sum b_i + 2k = 4g - 3 + n.
struct PicIndex {
    int g = 0;
    int k = 0;
    std::vector<int> b;  // stored sorted decreasingly

    PicIndex(int g_, int k_, std::vector<int> b_);
    int n() const { return static_cast<int>(b.size()); }
    bool dimension_ok() const;
};

/// H^g_{(d),beta} / (r! d) as an exact polynomial in beta_1..beta_n.
/// The cases (g,n) = (0,1), (0,2) are excluded.
BetaPolynomial one_part_polynomial(int g, int n);

/// (-1)^k [beta^b] of one_part_polynomial; 0 when the dimension constraint
/// fails.
Rational symbol_def(const PicIndex& idx);

/// Coefficient of prod Q^(b_i) in Delta_{-1}^N applied to prod Q^(2 theta_i).
Rational q_operator_coefficient(int N, const PaddedPartition& theta,
                                const std::vector<int>& b);

/// Explicit formula: |Aut b| f_{2k} (-1)^k sum over theta of
/// (v_{2 theta}/|Aut theta|) q_operator_coefficient(2g-3+n, theta, b).
Rational symbol_wittcor(const PicIndex& idx);
/// Totalized variant: returns 0 for any out-of-support b (negative entries
/// allowed).  Used by the string/dilaton checks.
Rational symbol_wittcor_or_zero(int g, int k, const std::vector<int>& b);

enum class SymbolFamily { one_point, two_point, tau2, tau2_tau3, tau2_tau3sq, lambda_top };

SymbolFamily symbol_family_from_string(const std::string& name);

/// Closed forms for the listed families.  b is required for two_point and
/// lambda_top, must be empty for the tau families (the tau multiset is
/// implied by g and k) and may be empty for one_point (b_1 = 4g-2-2k).
/// The excluded (k,g) pairs of the tau families raise a precondition error.
Rational closed_form_symbol(SymbolFamily family, int g, int k,
                            const std::vector<int>& b = {});

struct IdentityReport {
    bool ok = false;
    Rational lhs, rhs;
    std::string description;
};

enum class SymbolIdentity { string_eq, dilaton_eq };

/// Verifies the string or dilaton identity for the symbol at (g, k, b),
/// including the exceptional case g = k = 1, n = 0 with value 1/24.
IdentityReport check_string_dilaton(int g, int k, const std::vector<int>& b,
                                    SymbolIdentity which);

}  // namespace dhn
