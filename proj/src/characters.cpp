#include "dhn/characters.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>

#include "dhn/series.hpp"
#include "json.hpp"

namespace dhn {

Integer CharacterCache::character(const Partition& lambda, const Partition& mu) {
    if (lambda.sum() != mu.sum())
        throw precondition_error("character: |lambda| != |mu|");
    if (lambda.sum() < 1)
        throw precondition_error("character: |lambda| >= 1 required");
    return compute(lambda, mu);
}

Integer CharacterCache::compute(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) return 1;
    auto key = std::make_pair(lambda, mu);
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }

    // Strip a border strip of size mu_1 from lambda, via beta-numbers
    // b_i = lambda_i + (L - 1 - i): removing the strip replaces some b by
    // b - t, with sign (-1)^{number of beta-numbers jumped over}.
    const int t = mu.part(0);
    std::vector<int> mu_rest(mu.parts().begin() + 1, mu.parts().end());
    Partition mu_next(std::move(mu_rest));

    const auto& lam = lambda.parts();
    const int L = lambda.length();
    std::vector<int> b(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) b[static_cast<size_t>(i)] = lam[static_cast<size_t>(i)] + (L - 1 - i);

    Integer total = 0;
    for (int i = 0; i < L; ++i) {
        int target = b[static_cast<size_t>(i)] - t;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (b[static_cast<size_t>(j)] == target) { occupied = true; break; }
            if (target < b[static_cast<size_t>(j)] && b[static_cast<size_t>(j)] < b[static_cast<size_t>(i)]) ++jumped;
        }
        if (occupied) continue;

        std::vector<int> nb = b;
        nb[static_cast<size_t>(i)] = target;
        std::sort(nb.rbegin(), nb.rend());
        std::vector<int> nl;
        for (int j = 0; j < L; ++j) {
            int part = nb[static_cast<size_t>(j)] - (L - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        Integer sub = compute(Partition(std::move(nl)), mu_next);
        total += (jumped % 2 == 0) ? sub : -sub;
    }

    {
        std::unique_lock lock(mutex_);
        memo_.emplace(std::move(key), total);
    }
    return total;
}

size_t CharacterCache::size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
}

void CharacterCache::save(const std::string& path, int d) const {
    nlohmann::json entries = nlohmann::json::array();
    {
        std::shared_lock lock(mutex_);
        for (const auto& [key, chi] : memo_) {
            if (key.first.sum() != d) continue;
            if (!chi.fits_slong_p())
                throw resource_error("CharacterCache::save: value exceeds the cache int range");
            entries.push_back({{"lambda", key.first.str()},
                               {"mu", key.second.str()},
                               {"chi", chi.get_si()}});
        }
    }
    nlohmann::json doc{{"version", 1}, {"d", d}, {"entries", entries}};
    std::ofstream out(path);
    if (!out) throw resource_error("CharacterCache::save: cannot open " + path);
    out << doc.dump(1) << "\n";
}

int CharacterCache::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return 0;
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded() || doc.value("version", 0) != 1) return 0;
    int n = 0;
    std::unique_lock lock(mutex_);
    for (const auto& e : doc["entries"]) {
        Partition lambda = Partition::parse(e.at("lambda").get<std::string>());
        Partition mu = Partition::parse(e.at("mu").get<std::string>());
        memo_[{std::move(lambda), std::move(mu)}] = Integer(e.at("chi").get<long>());
        ++n;
    }
    return n;
}

Integer eta(const Partition& lambda) {
    Integer s = 0;
    for (int p : lambda.parts()) s += binomial(Integer(p), 2);
    const Partition conj = lambda.conjugate();
    for (int p : conj.parts()) s -= binomial(Integer(p), 2);
    return s;
}

std::vector<Integer> hook_character_polynomial(const Partition& beta) {
    const int d = static_cast<int>(beta.sum());
    if (d < 1) throw precondition_error("hook_character_polynomial: |beta| >= 1 required");
    const int order = d - 1;
    UnivariateSeries prod = UnivariateSeries::constant(1, order);
    for (const auto& [i, ci] : hook_content_counts(beta)) {
        if (ci == 0) continue;
        UnivariateSeries factor = UnivariateSeries::constant(1, order);
        if (i <= order) {
            // 1 - (-y)^i
            factor.set_coeff(i, Rational(i % 2 == 0 ? -1 : 1));
        }
        prod = prod * factor.pow(ci);
    }
    std::vector<Integer> out(static_cast<size_t>(d));
    for (int k = 0; k <= order; ++k) {
        const Rational& c = prod.coeff(k);
        if (!c.is_integer())
            throw inconsistency_error("hook_character_polynomial: non-integer coefficient");
        out[static_cast<size_t>(k)] = c.num();
    }
    return out;
}

}  // namespace dhn
