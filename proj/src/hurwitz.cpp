#include "dhn/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>

#include "dhn/series.hpp"
#include "json.hpp"

namespace dhn {

int r_value(int g, const Partition& alpha, const Partition& beta) {
    if (alpha.sum() != beta.sum())
        throw precondition_error("r_value: |alpha| != |beta|");
    return -2 + 2 * g + alpha.length() + beta.length();
}

std::optional<int> genus_of(const HurwitzKey& k) {
    int num = k.r - k.alpha.length() - k.beta.length() + 2;
    if (num % 2 != 0) return std::nullopt;
    return num / 2;
}

// ---------------------------------------------------------------------------
// SeriesTable

SeriesTable::SeriesTable(int d_max, int r_max, bool connected)
    : d_max_(d_max), r_max_(r_max), connected_(connected) {
    if (d_max < 1 || r_max < 0) throw precondition_error("SeriesTable: bad bounds");
    for (int d = 1; d <= d_max_; ++d) {
        auto parts = partitions_of(d);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (int r = 0; r <= r_max_; ++r)
                    coeffs_[HurwitzKey{a, b, r}] = Rational();
    }
}

const Rational& SeriesTable::coefficient(const HurwitzKey& k) const {
    auto it = coeffs_.find(k);
    if (it == coeffs_.end())
        throw precondition_error("SeriesTable: key (" + k.alpha.str() + ")x(" +
                                 k.beta.str() + "),r=" + std::to_string(k.r) +
                                 " outside table bounds");
    return it->second;
}

Rational SeriesTable::coefficient(const Partition& alpha, const Partition& beta,
                                  int r) const {
    return coefficient(HurwitzKey{alpha, beta, r});
}

void SeriesTable::set(const HurwitzKey& k, Rational v) {
    auto it = coeffs_.find(k);
    if (it == coeffs_.end())
        throw precondition_error("SeriesTable::set: key outside table bounds");
    it->second = std::move(v);
}

SeriesTable SeriesTable::multiply(const SeriesTable& o) const {
    SeriesTable out(d_max_, r_max_, connected_);
    for (const auto& [k1, v1] : coeffs_) {
        if (v1.is_zero()) continue;
        for (const auto& [k2, v2] : o.coeffs_) {
            if (v2.is_zero()) continue;
            if (k1.alpha.sum() + k2.alpha.sum() > d_max_) continue;
            if (k1.r + k2.r > r_max_) continue;
            HurwitzKey k{k1.alpha.merged(k2.alpha), k1.beta.merged(k2.beta),
                         k1.r + k2.r};
            out.coeffs_[std::move(k)] += v1 * v2;
        }
    }
    return out;
}

SeriesTable SeriesTable::log() const {
    // log(1 + X) = sum (-1)^{k-1} X^k / k; X^k vanishes beyond degree d_max.
    SeriesTable out(d_max_, r_max_, true);
    SeriesTable power = *this;
    for (int k = 1; k <= d_max_; ++k) {
        if (k > 1) power = power.multiply(*this);
        Rational scale(k % 2 == 1 ? 1 : -1, k);
        for (const auto& [key, v] : power.coeffs_)
            if (!v.is_zero()) out.coeffs_[key] += v * scale;
    }
    return out;
}

SeriesTable SeriesTable::exp() const {
    SeriesTable out(d_max_, r_max_, false);
    SeriesTable power = *this;
    Rational kfact(1);
    for (int k = 1; k <= d_max_; ++k) {
        if (k > 1) power = power.multiply(*this);
        kfact = kfact * Rational(1, k);
        for (const auto& [key, v] : power.coeffs_)
            if (!v.is_zero()) out.coeffs_[key] += v * kfact;
    }
    return out;
}

void SeriesTable::export_json(std::ostream& os) const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, v] : coeffs_)
        arr.push_back({{"alpha", k.alpha.str()},
                       {"beta", k.beta.str()},
                       {"r", k.r},
                       {"coeff", v.str()}});
    os << arr.dump(1) << "\n";
}

// ---------------------------------------------------------------------------
// Brute-force enumeration (Hurwitz axioms verbatim)

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

// Canonical representative of C_beta: cycles on consecutive blocks.
std::vector<int> class_representative(const Partition& beta) {
    std::vector<int> sigma(static_cast<size_t>(beta.sum()));
    int base = 0;
    for (int part : beta.parts()) {
        for (int i = 0; i < part; ++i)
            sigma[static_cast<size_t>(base + i)] = base + (i + 1) % part;
        base += part;
    }
    return sigma;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
    int d = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<size_t>(d), false);
    std::vector<int> type;
    for (int i = 0; i < d; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        int len = 0, j = i;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            j = perm[static_cast<size_t>(j)];
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

}  // namespace

const HurwitzEngine::Sweep& HurwitzEngine::brute_sweep(const Partition& beta, int r) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto memo_key = std::make_pair(beta, r);
    auto it = sweeps_.find(memo_key);
    if (it != sweeps_.end()) return it->second;

    const int d = static_cast<int>(beta.sum());
    std::vector<std::pair<int, int>> transpositions;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) transpositions.emplace_back(a, b);
    const size_t nt = transpositions.size();

    double est = static_cast<double>(r + d);
    for (int i = 0; i < r; ++i) est *= static_cast<double>(nt);
    if (est > static_cast<double>(work_limit_))
        throw resource_error("brute_force: enumeration exceeds the work limit");

    auto alphas = partitions_of(d);
    std::map<std::vector<int>, size_t> type_index;
    for (size_t i = 0; i < alphas.size(); ++i) type_index[alphas[i].parts()] = i;

    Sweep sweep;
    sweep.connected_counts.assign(alphas.size(), 0);
    sweep.disconnected_counts.assign(alphas.size(), 0);

    std::vector<int> sigma = class_representative(beta);
    // prods[k] = tau_k ... tau_1 sigma
    std::vector<std::vector<int>> prods(static_cast<size_t>(r) + 1, sigma);
    std::vector<std::pair<int, int>> taus(static_cast<size_t>(r));

    std::function<void(int)> recurse = [&](int depth) {
        if (depth == r) {
            size_t idx = type_index.at(cycle_type(prods[static_cast<size_t>(r)]));
            ++sweep.disconnected_counts[idx];
            UnionFind uf(d);
            for (int i = 0; i < d; ++i) uf.unite(i, sigma[static_cast<size_t>(i)]);
            for (const auto& [a, b] : taus) uf.unite(a, b);
            int roots = 0;
            for (int i = 0; i < d; ++i) roots += (uf.find(i) == i);
            if (roots == 1) ++sweep.connected_counts[idx];
            return;
        }
        const auto& cur = prods[static_cast<size_t>(depth)];
        auto& next = prods[static_cast<size_t>(depth) + 1];
        for (const auto& t : transpositions) {
            // next = (a b) o cur
            next = cur;
            for (int x = 0; x < d; ++x) {
                if (next[static_cast<size_t>(x)] == t.first) next[static_cast<size_t>(x)] = t.second;
                else if (next[static_cast<size_t>(x)] == t.second) next[static_cast<size_t>(x)] = t.first;
            }
            taus[static_cast<size_t>(depth)] = t;
            recurse(depth + 1);
        }
    };
    recurse(0);

    return sweeps_.emplace(std::move(memo_key), std::move(sweep)).first->second;
}

Rational HurwitzEngine::brute_force(int g, const Partition& alpha, const Partition& beta,
                                    bool connected) {
    if (alpha.sum() != beta.sum())
        throw precondition_error("brute_force: |alpha| != |beta|");
    const int d = static_cast<int>(alpha.sum());
    if (d < 1) throw precondition_error("brute_force: d >= 1 required");
    if (d > brute_d_limit_)
        throw precondition_error("brute_force: degree exceeds the configured limit");
    int r = r_value(g, alpha, beta);
    if (r < 0) return Rational();

    const Sweep& sweep = brute_sweep(beta, r);
    auto alphas = partitions_of(d);
    size_t idx = 0;
    while (alphas[idx] != alpha) ++idx;
    long long count = connected ? sweep.connected_counts[idx]
                                : sweep.disconnected_counts[idx];
    // one sigma representative was enumerated; the count is a class function
    Rational value(aut_order(alpha) * aut_order(beta) * conjugacy_class_size(beta) *
                       Integer(static_cast<long>(count)),
                   factorial(static_cast<unsigned long>(d)));
    return value;
}

// ---------------------------------------------------------------------------
// Character route

Rational HurwitzEngine::disconnected_character(const Partition& alpha,
                                               const Partition& beta, int r) {
    if (alpha.sum() != beta.sum())
        throw precondition_error("disconnected_character: |alpha| != |beta|");
    const long d = alpha.sum();
    if (d < 1) throw precondition_error("disconnected_character: d >= 1 required");
    if (r < 0) throw precondition_error("disconnected_character: r >= 0 required");
    if ((r + alpha.length() + beta.length()) % 2 != 0) return Rational();

    Integer sum = 0;
    for (const Partition& lambda : partitions_of(static_cast<int>(d))) {
        Integer chi_a = chars_.character(lambda, alpha);
        if (chi_a == 0) continue;
        Integer chi_b = chars_.character(lambda, beta);
        if (chi_b == 0) continue;
        Integer e = eta(lambda);
        Integer epow;
        mpz_pow_ui(epow.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(r));
        sum += epow * chi_a * chi_b;
    }
    Integer dfact = factorial(static_cast<unsigned long>(d));
    return Rational(aut_order(alpha) * aut_order(beta) * conjugacy_class_size(alpha) *
                        conjugacy_class_size(beta) * sum,
                    dfact * dfact);
}

Rational HurwitzEngine::disconnected_key(const HurwitzKey& k) {
    if (k.alpha.empty() && k.beta.empty()) return Rational(k.r == 0 ? 1 : 0);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = disc_memo_.find(k);
        if (it != disc_memo_.end()) return it->second;
    }
    Rational v = disconnected_character(k.alpha, k.beta, k.r) /
                 Rational(factorial(static_cast<unsigned long>(k.r)) *
                          aut_order(k.alpha) * aut_order(k.beta));
    std::lock_guard<std::mutex> lock(mutex_);
    return disc_memo_.emplace(k, std::move(v)).first->second;
}

SeriesTable HurwitzEngine::build_series_table(int d_max, int r_max) {
    SeriesTable t(d_max, r_max, false);
    for (int d = 1; d <= d_max; ++d) {
        auto parts = partitions_of(d);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (int r = 0; r <= r_max; ++r) {
                    if ((r + a.length() + b.length()) % 2 != 0) continue;
                    HurwitzKey k{a, b, r};
                    t.set(k, disconnected_key(k));
                }
    }
    return t;
}

void HurwitzEngine::set_table_bounds(int d_max, int r_max) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (d_max != table_d_max_ || r_max != table_r_max_) {
        table_d_max_ = d_max;
        table_r_max_ = r_max;
        conn_table_.reset();
    }
}

const SeriesTable& HurwitzEngine::connected_table() {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (conn_table_) return *conn_table_;
    }
    SeriesTable conn = build_series_table(table_d_max_, table_r_max_).log();
    std::lock_guard<std::mutex> lock(mutex_);
    if (!conn_table_) conn_table_ = std::move(conn);
    return *conn_table_;
}

Rational HurwitzEngine::connected(int g, const Partition& alpha, const Partition& beta) {
    int r = r_value(g, alpha, beta);
    if (r < 0) return Rational();
    const SeriesTable& t = connected_table();
    return t.coefficient(alpha, beta, r) *
           Rational(factorial(static_cast<unsigned long>(r)) * aut_order(alpha) *
                    aut_order(beta));
}

namespace {

// All sub-multisets of p (by multiplicity choices), paired with complements.
void submultisets(const Partition& p,
                  std::vector<std::pair<Partition, Partition>>& out) {
    auto mults = p.multiplicities();
    std::vector<std::pair<int, int>> values(mults.begin(), mults.end());
    std::vector<int> take(values.size(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == values.size()) {
            std::vector<int> sub, rest;
            for (size_t j = 0; j < values.size(); ++j) {
                for (int c = 0; c < take[j]; ++c) sub.push_back(values[j].first);
                for (int c = take[j]; c < values[j].second; ++c)
                    rest.push_back(values[j].first);
            }
            out.emplace_back(Partition(std::move(sub)), Partition(std::move(rest)));
            return;
        }
        for (take[i] = 0; take[i] <= values[i].second; ++take[i]) rec(i + 1);
        take[i] = 0;
    };
    rec(0);
}

int multiplicity_of(const Partition& p, int value) {
    int c = 0;
    for (int x : p.parts()) c += (x == value);
    return c;
}

}  // namespace

Rational HurwitzEngine::connected_single_key(const HurwitzKey& key) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = conn_memo_.find(key);
        if (it != conn_memo_.end()) return it->second;
    }
    Rational value;
    if (key.alpha.length() <= 1) {
        // A single part over 0 forces transitivity (gamma is a d-cycle), so
        // connected and disconnected coincide.
        value = disconnected_key(key);
    } else {
        // Inclusion-exclusion over the connected component that contains a
        // marked copy of the largest part of alpha:
        //   a_s(alpha) ctilde(K) = sum a_s(alpha_1) c(K_1) ctilde(K_2).
        value = disconnected_key(key);
        const int s = key.alpha.part(0);
        const int a_s_total = multiplicity_of(key.alpha, s);

        std::vector<std::pair<Partition, Partition>> alpha_splits, beta_splits;
        submultisets(key.alpha, alpha_splits);
        submultisets(key.beta, beta_splits);

        for (const auto& [a1, a2] : alpha_splits) {
            if (a2.empty()) continue;  // proper components only
            const int a_s = multiplicity_of(a1, s);
            if (a_s == 0) continue;
            for (const auto& [b1, b2] : beta_splits) {
                if (b1.sum() != a1.sum()) continue;
                for (int r1 = 0; r1 <= key.r; ++r1) {
                    Rational c1 = connected_single_key(HurwitzKey{a1, b1, r1});
                    if (c1.is_zero()) continue;
                    Rational c2 = disconnected_key(HurwitzKey{a2, b2, key.r - r1});
                    if (c2.is_zero()) continue;
                    value -= Rational(a_s, a_s_total) * c1 * c2;
                }
            }
        }
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return conn_memo_.emplace(key, std::move(value)).first->second;
}

Rational HurwitzEngine::connected_single(int g, const Partition& alpha,
                                         const Partition& beta) {
    int r = r_value(g, alpha, beta);
    if (r < 0) return Rational();
    return connected_single_key(HurwitzKey{alpha, beta, r}) *
           Rational(factorial(static_cast<unsigned long>(r)) * aut_order(alpha) *
                    aut_order(beta));
}

// ---------------------------------------------------------------------------
// One-part formulas

Rational HurwitzEngine::one_part(int g, const Partition& beta) {
    if (g < 0) throw precondition_error("one_part: g >= 0 required");
    const long d = beta.sum();
    if (d < 1) throw precondition_error("one_part: |beta| >= 1 required");
    const int n = beta.length();
    const int r = n - 1 + 2 * g;
    Rational prefactor = Rational(factorial(static_cast<unsigned long>(r))) *
                         pow(Rational(Integer(d)), r - 1);

    // sinh-product form
    UnivariateSeries prod = UnivariateSeries::constant(1, 2 * g);
    for (const auto& [k, ck] : hook_content_counts(beta)) {
        if (ck == 0) continue;
        prod = prod * sinh_ratio(k, 2 * g).pow(ck);
    }
    Rational via_product = prefactor * prod.coeff(2 * g);

    // xi / shifted-power-sum form
    Rational sum;
    for (const Partition& lambda : partitions_of(g)) {
        Rational term(1);
        for (int part : lambda.parts())
            term *= xi_coeff(2 * part) * Rational(shifted_power_sum(beta, 2 * part));
        sum += term / Rational(aut_order(lambda));
    }
    Rational via_powersum =
        prefactor * sum / Rational(pow(Integer(2), 2 * static_cast<unsigned long>(g)));

    if (via_product != via_powersum)
        throw inconsistency_error("one_part: the sinh-product and power-sum forms disagree");
    return via_product;
}

Rational HurwitzEngine::one_part_closed(int g, const Partition& beta) {
    const long d = beta.sum();
    if (d < 1) throw precondition_error("one_part_closed: |beta| >= 1 required");
    const long n = beta.length();
    auto S = [&](int two_j) { return Rational(shifted_power_sum(beta, two_j)); };
    auto dpow = [&](long e) { return pow(Rational(Integer(d)), e); };
    auto fact = [](long m) { return Rational(factorial(static_cast<unsigned long>(m))); };
    switch (g) {
        case 0:
            return fact(n - 1) * dpow(n - 2);
        case 1:
            return fact(n + 1) * Rational(1, 24) * dpow(n) * S(2);
        case 2:
            return fact(n + 3) * dpow(n + 2) * Rational(1, 5760) *
                   (Rational(5) * S(2) * S(2) - Rational(2) * S(4));
        case 3:
            return fact(n + 5) * dpow(n + 4) * Rational(1, 1024L * 81 * 5 * 7) *
                   (Rational(16) * S(6) - Rational(42) * S(2) * S(4) +
                    Rational(35) * S(2) * S(2) * S(2));
        case 4:
            return fact(n + 7) * dpow(n + 6) * Rational(1, 256) *
                   (Rational(-1, 37800) * S(8) + Rational(1, 17010) * S(2) * S(6) +
                    Rational(1, 64800) * S(4) * S(4) -
                    Rational(1, 12960) * S(2) * S(2) * S(4) +
                    Rational(1, 31104) * S(2) * S(2) * S(2) * S(2));
        case 5:
            return fact(n + 9) * dpow(n + 8) * Rational(1, 1024) *
                   (Rational(1, 467775) * S(10) - Rational(1, 226800) * S(2) * S(8) -
                    Rational(1, 510300) * S(4) * S(6) +
                    Rational(1, 204120) * S(2) * S(2) * S(6) +
                    Rational(1, 388800) * S(2) * S(4) * S(4) -
                    Rational(1, 233280) * S(2) * S(2) * S(2) * S(4) +
                    Rational(1, 933120) * S(2) * S(2) * S(2) * S(2) * S(2));
        default:
            throw precondition_error("one_part_closed: only g <= 5 is tabulated");
    }
}

Rational HurwitzEngine::diagonal(int g, int d) {
    if (g < 0 || d < 1) throw precondition_error("diagonal: need g >= 0, d >= 1");
    Rational sum;
    for (int j = 0; j < d; ++j)
        sum += pow(Rational(2 * j - d + 1, 2), 2L * g);
    return pow(Rational(d), 2L * g - 2) * sum;
}

// ---------------------------------------------------------------------------
// Fixed-shape closed forms

Rational HurwitzEngine::two_two(int g, const Partition& alpha, const Partition& beta) {
    if (g < 0) throw precondition_error("two_two: g >= 0 required");
    if (alpha.length() != 2 || beta.length() != 2)
        throw precondition_error("two_two: both profiles need exactly two parts");
    if (alpha.sum() != beta.sum()) throw precondition_error("two_two: |alpha| != |beta|");
    long a1 = alpha.part(1), a2 = alpha.part(0);  // ascending
    long b1 = beta.part(1), b2 = beta.part(0);
    if (a1 == a2 || b1 == b2 || a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2)
        throw precondition_error("two_two: the four parts must be distinct");
    if (b1 < a1) {
        std::swap(a1, b1);  // H is symmetric in alpha <-> beta
        std::swap(a2, b2);
    }
    const Integer d = alpha.sum();
    const Integer top = binomial(d + 1, 2);
    const unsigned long e = 2 * static_cast<unsigned long>(g) + 2;
    Integer sum = 0;
    for (long i = 1; i <= a1; ++i) {
        sum += pow(top - d * i, e);
        sum -= pow(top - d * i - a2 * b1, e);
    }
    return Rational(2 * sum, Integer(a1) * a2 * b1 * b2);
}

Rational HurwitzEngine::genus0_mparts(const Partition& alpha, const Partition& beta) {
    const int m = alpha.length();
    if (m != 2 && m != 3)
        throw precondition_error("genus0_mparts: l(alpha) must be 2 or 3");
    if (alpha.sum() != beta.sum())
        throw precondition_error("genus0_mparts: |alpha| != |beta|");
    const int r = r_value(0, alpha, beta);

    auto mults = beta.multiplicities();
    std::vector<std::pair<int, int>> values(mults.begin(), mults.end());
    const int bins = m + 1;  // rho, gamma_1 .. gamma_m
    std::vector<std::vector<int>> bin_parts(static_cast<size_t>(bins));
    Rational total;

    std::function<void(size_t)> assign = [&](size_t vi) {
        if (vi == values.size()) {
            if (bin_parts[0].empty()) return;  // rho must be non-empty
            Partition rho(bin_parts[0]);
            Rational term(Integer(1));
            for (int p : rho.parts()) term *= Rational(p);
            term *= Rational(factorial(static_cast<unsigned long>(rho.length())),
                             aut_order(rho));
            for (int j = 0; j < m; ++j) {
                Partition gamma(bin_parts[static_cast<size_t>(j) + 1]);
                long aj = alpha.part(j);
                if (gamma.sum() >= aj) return;
                term *= Rational(aj - gamma.sum()) *
                        pow(Rational(aj), gamma.length() - 1) /
                        Rational(aut_order(gamma));
            }
            total += term;
            return;
        }
        auto [value, count] = values[vi];
        std::function<void(int, int)> distribute = [&](int bin, int left) {
            if (bin == bins - 1) {
                for (int c = 0; c < left; ++c) bin_parts[static_cast<size_t>(bin)].push_back(value);
                assign(vi + 1);
                for (int c = 0; c < left; ++c) bin_parts[static_cast<size_t>(bin)].pop_back();
                return;
            }
            for (int take = 0; take <= left; ++take) {
                for (int c = 0; c < take; ++c) bin_parts[static_cast<size_t>(bin)].push_back(value);
                distribute(bin + 1, left - take);
                for (int c = 0; c < take; ++c) bin_parts[static_cast<size_t>(bin)].pop_back();
            }
        };
        distribute(0, count);
    };
    assign(0);

    Rational scale = Rational(aut_order(beta) * factorial(static_cast<unsigned long>(r)));
    if (m == 2) scale /= Rational(Integer(alpha.sum()));
    return scale * total;
}

// ---------------------------------------------------------------------------
// Join-cut verification

JoinCutReport HurwitzEngine::verify_join_cut(int d_max, int r_max) {
    SeriesTable conn = build_series_table(d_max, r_max).log();
    return verify_join_cut_on(conn);
}

JoinCutReport HurwitzEngine::verify_join_cut_on(const SeriesTable& t) {
    const int d_max = t.d_max(), r_max = t.r_max();
    using Table = std::map<HurwitzKey, Rational>;

    // First and second p-derivative tables (nonzero entries only).
    std::map<int, Table> d1;          // i -> coefficients of dH/dp_i
    std::map<std::pair<int, int>, Table> d2;  // (i,j), i <= j
    for (const auto& [k, v] : t.entries()) {
        if (v.is_zero()) continue;
        auto mults = k.alpha.multiplicities();
        for (const auto& [i, ai] : mults) {
            std::vector<int> rest;
            for (int p : k.alpha.parts()) rest.push_back(p);
            rest.erase(std::find(rest.begin(), rest.end(), i));
            Partition ai_removed(rest);
            d1[i][HurwitzKey{ai_removed, k.beta, k.r}] += Rational(ai) * v;
            for (const auto& [j, aj] : mults) {
                if (j < i) continue;
                Integer weight = (i == j) ? Integer(ai) * (ai - 1) : Integer(ai) * aj;
                if (weight == 0) continue;
                std::vector<int> rest2 = rest;
                rest2.erase(std::find(rest2.begin(), rest2.end(), j));
                d2[{i, j}][HurwitzKey{Partition(rest2), k.beta, k.r}] +=
                    Rational(weight) * v;
            }
        }
    }
    auto second_derivative = [&](int i, int j) -> const Table& {
        static const Table empty;
        auto it = d2.find({std::min(i, j), std::max(i, j)});
        return it == d2.end() ? empty : it->second;
    };

    // Right side, assembled per target key; every term raises r by one.
    Table rhs;
    auto add_shifted = [&](const Table& src, int new_part_a, int new_part_b,
                           const Rational& scale) {
        for (const auto& [k, v] : src) {
            if (v.is_zero()) continue;
            std::vector<int> parts = k.alpha.parts();
            parts.push_back(new_part_a);
            if (new_part_b > 0) parts.push_back(new_part_b);
            Partition alpha(std::move(parts));
            if (alpha.sum() > d_max || k.r + 1 > r_max) continue;
            rhs[HurwitzKey{std::move(alpha), k.beta, k.r + 1}] += scale * v;
        }
    };

    for (int i = 1; i < d_max; ++i) {
        for (int j = 1; i + j <= d_max; ++j) {
            Rational ij(Integer(i) * j);
            // join: i j p_{i+j} (dH/dp_i)(dH/dp_j)
            auto it_i = d1.find(i), it_j = d1.find(j);
            if (it_i != d1.end() && it_j != d1.end()) {
                Table prod;
                for (const auto& [k1, v1] : it_i->second)
                    for (const auto& [k2, v2] : it_j->second) {
                        if (k1.alpha.sum() + k2.alpha.sum() + i + j > d_max) continue;
                        if (k1.r + k2.r + 1 > r_max) continue;
                        prod[HurwitzKey{k1.alpha.merged(k2.alpha),
                                        k1.beta.merged(k2.beta), k1.r + k2.r}] += v1 * v2;
                    }
                add_shifted(prod, i + j, 0, ij);
            }
            // cut: (i+j) p_i p_j dH/dp_{i+j}
            auto it_s = d1.find(i + j);
            if (it_s != d1.end()) add_shifted(it_s->second, i, j, Rational(i + j));
            // genus-lowering join: i j p_{i+j} y d^2 H / dp_i dp_j
            add_shifted(second_derivative(i, j), i + j, 0, ij);
        }
    }

    JoinCutReport report;
    report.equation_ok = true;
    for (const auto& [k, v] : t.entries()) {
        if (k.alpha.sum() > d_max - 1 || k.r < 1 || k.r > r_max - 1) continue;
        Rational left = Rational(k.r) * v;
        auto it = rhs.find(k);
        Rational right = (it == rhs.end()) ? Rational() : it->second * Rational(1, 2);
        ++report.keys_checked;
        if (left != right) {
            report.equation_ok = false;
            report.first_failure = "key (" + k.alpha.str() + ")x(" + k.beta.str() +
                                   "),r=" + std::to_string(k.r) + ": lhs=" + left.str() +
                                   " rhs=" + right.str();
            break;
        }
    }

    report.initial_conditions_ok = true;
    for (int i = 1; i <= d_max; ++i) {
        Partition p({i});
        if (t.coefficient(p, p, 0) != Rational(1, i)) {
            report.initial_conditions_ok = false;
            if (report.first_failure.empty())
                report.first_failure = "initial condition [z^i p_i q_i u]H != 1/i at i=" +
                                       std::to_string(i);
            break;
        }
    }
    report.ok = report.equation_ok && report.initial_conditions_ok;
    return report;
}

}  // namespace dhn
