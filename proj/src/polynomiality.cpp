#include "dhn/polynomiality.hpp"

#include <algorithm>

namespace dhn {

Method method_from_string(const std::string& name) {
    if (name == "auto") return Method::automatic;
    if (name == "brute") return Method::brute;
    if (name == "character") return Method::character;
    if (name == "closed") return Method::closed;
    throw precondition_error("unknown method '" + name + "'");
}

namespace {

Rational closed_route(HurwitzEngine& engine, int g, const Partition& alpha,
                      const Partition& beta) {
    if (alpha.length() == 1) return engine.one_part(g, beta);
    if (g == 0 && (alpha.length() == 2 || alpha.length() == 3))
        return engine.genus0_mparts(alpha, beta);
    if (alpha.length() == 2 && beta.length() == 2) return engine.two_two(g, alpha, beta);
    throw precondition_error("no closed form covers this profile shape");
}

}  // namespace

RaySample ray_samples(HurwitzEngine& engine, int g, const Partition& alpha,
                      const Partition& beta, int t_max, Method method) {
    if (alpha.sum() != beta.sum())
        throw precondition_error("ray_samples: |alpha| != |beta|");
    if (t_max < 1) throw precondition_error("ray_samples: t_max >= 1 required");
    RaySample s;
    s.g = g;
    s.alpha = alpha;
    s.beta = beta;
    s.method = method;
    for (int t = 1; t <= t_max; ++t) {
        Partition a = alpha.scaled(t), b = beta.scaled(t);
        switch (method) {
            case Method::brute:
                s.values.push_back(engine.brute_force(g, a, b, true));
                break;
            case Method::closed:
                s.values.push_back(closed_route(engine, g, a, b));
                break;
            case Method::automatic:
                if (a.length() == 1 || (g == 0 && a.length() <= 3))
                    s.values.push_back(closed_route(engine, g, a, b));
                else
                    s.values.push_back(engine.connected_single(g, a, b));
                break;
            case Method::character:
                s.values.push_back(engine.connected_single(g, a, b));
                break;
        }
    }
    return s;
}

FitResult fit_degree(const RaySample& sample) {
    const auto& v = sample.values;
    const int T = static_cast<int>(v.size());
    std::vector<std::vector<Rational>> rows{v};
    auto all_zero = [](const std::vector<Rational>& row) {
        return std::all_of(row.begin(), row.end(),
                           [](const Rational& x) { return x.is_zero(); });
    };

    int degree = -2;
    for (int k = 0; k < T; ++k) {
        // a vanishing row needs at least two entries to count as conclusive,
        // hence the T >= degree + 3 requirement
        if (all_zero(rows.back()) && rows.back().size() >= 2) {
            degree = k - 1;
            break;
        }
        if (rows.back().size() < 2) break;
        std::vector<Rational> next;
        for (size_t i = 0; i + 1 < rows.back().size(); ++i)
            next.push_back(rows.back()[i + 1] - rows.back()[i]);
        rows.push_back(std::move(next));
    }
    if (degree == -2)
        throw precondition_error("fit_degree: inconclusive, differences never vanish "
                                 "within the sample (t_max too small)");

    FitResult fit;
    fit.degree = degree;
    if (degree < 0) return fit;  // zero polynomial

    fit.leading = rows[static_cast<size_t>(degree)][0] /
                  Rational(factorial(static_cast<unsigned long>(degree)));

    // Newton form at nodes t = 1, 2, ...: p(t) = sum_k D_k binom(t - 1, k);
    // expand into the monomial basis.
    std::vector<Rational> coeffs(static_cast<size_t>(degree) + 1);
    std::vector<Rational> basis{Rational(1)};  // binom(t-1, 0) = 1
    for (int k = 0; k <= degree; ++k) {
        for (size_t i = 0; i < basis.size(); ++i)
            coeffs[i] += rows[static_cast<size_t>(k)][0] * basis[i];
        // basis *= (t - 1 - k) / (k + 1)
        std::vector<Rational> next(basis.size() + 1);
        for (size_t i = 0; i < basis.size(); ++i) {
            next[i + 1] += basis[i];
            next[i] += basis[i] * Rational(-(k + 1));
        }
        for (auto& c : next) c = c * Rational(1, k + 1);
        basis = std::move(next);
    }
    fit.monomial_coefficients = std::move(coeffs);
    return fit;
}

ChamberReport check_chamber_formula_022(HurwitzEngine& engine, int range) {
    ChamberReport report;
    report.ok = true;
    for (int d = 2; d <= range; ++d) {
        for (int a2 = 1; 2 * a2 <= d; ++a2) {
            for (int b2 = 1; 2 * b2 <= d; ++b2) {
                ChamberRow row;
                row.alpha = Partition({d - a2, a2});
                row.beta = Partition({d - b2, b2});
                row.h_canonical = engine.connected_single(0, row.alpha, row.beta);
                row.h_aut_divided =
                    row.h_canonical /
                    Rational(aut_order(row.alpha) * aut_order(row.beta));
                row.expected = Rational(2 * std::max(d - a2, d - b2));
                row.canonical_match = row.h_canonical == row.expected;
                row.aut_divided_match = row.h_aut_divided == row.expected;
                report.ok = report.ok && row.canonical_match;
                report.rows.push_back(std::move(row));
            }
        }
    }
    return report;
}

DegreeBoundsReport check_degree_bounds(HurwitzEngine& engine, int g, const Partition& alpha,
                                       const Partition& beta, int t_max, Method method) {
    DegreeBoundsReport rep;
    rep.g = g;
    rep.alpha = alpha;
    rep.beta = beta;
    const int m = alpha.length(), n = beta.length();
    rep.window_hi = 4 * g - 3 + m + n;
    rep.window_lo = std::max(0, 2 * g - 3 + m + n);

    RaySample sample = ray_samples(engine, g, alpha, beta, t_max, method);
    rep.fit = fit_degree(sample);
    for (size_t e = 0; e < rep.fit.monomial_coefficients.size(); ++e)
        if (!rep.fit.monomial_coefficients[e].is_zero())
            rep.exponents_present.push_back(static_cast<int>(e));

    rep.degrees_in_window =
        std::all_of(rep.exponents_present.begin(), rep.exponents_present.end(),
                    [&](int e) { return rep.window_lo <= e && e <= rep.window_hi; });
    rep.leading_nonzero = rep.fit.degree >= 0 && !rep.fit.leading.is_zero();
    rep.top_degree_attained = rep.fit.degree == rep.window_hi;
    rep.ok = rep.degrees_in_window && rep.leading_nonzero && rep.top_degree_attained;
    return rep;
}

}  // namespace dhn
