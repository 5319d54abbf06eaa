#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "dhn/characters.hpp"

using namespace dhn;

TEST_CASE("hand-checked character values") {
    CharacterCache cache;
    // trivial representation
    for (int d = 1; d <= 6; ++d)
        for (const auto& mu : partitions_of(d))
            CHECK(cache.character(Partition({d}), mu) == 1);

    // sign character on an odd permutation
    CHECK(cache.character(Partition({1, 1, 1}), Partition({2, 1})) == -1);
    // dimension of the standard representation of S_3
    CHECK(cache.character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    // a classical S_5 value
    CHECK(cache.character(Partition({3, 1, 1}), Partition({1, 1, 1, 1, 1})) == 6);
    CHECK(cache.character(Partition({3, 2}), Partition({2, 2, 1})) == 1);

    CHECK_THROWS_AS(cache.character(Partition({2}), Partition({3})), precondition_error);
}

TEST_CASE("column orthogonality for d <= 6") {
    CharacterCache cache;
    for (int d = 1; d <= 6; ++d) {
        auto classes = partitions_of(d);
        for (const auto& mu : classes) {
            for (const auto& nu : classes) {
                Integer acc = 0;
                for (const auto& lambda : classes)
                    acc += cache.character(lambda, mu) * cache.character(lambda, nu);
                if (mu == nu)
                    CHECK(acc == factorial(static_cast<unsigned long>(d)) /
                                     conjugacy_class_size(mu));
                else
                    CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("eta values and antisymmetry under conjugation") {
    CHECK(eta(Partition({3})) == 3);
    CHECK(eta(Partition({2, 1})) == 0);
    for (int d = 2; d <= 8; ++d) {
        for (const auto& lambda : partitions_of(d)) {
            CHECK(eta(lambda.conjugate()) == -eta(lambda));
            // hooks: eta((d-k, 1^k)) = C(d,2) - d k
            if (lambda.length() >= 1 && lambda.part(0) + lambda.length() - 1 == d) {
                bool is_hook = true;
                for (int i = 1; i < lambda.length(); ++i) is_hook &= lambda.part(i) == 1;
                if (is_hook) {
                    int k = lambda.length() - 1;
                    CHECK(eta(lambda) == binomial(Integer(d), 2) - Integer(d) * k);
                }
            }
        }
    }
}

TEST_CASE("eta equals the normalized transposition character") {
    CharacterCache cache;
    for (int d = 2; d <= 7; ++d) {
        std::vector<int> transposition_class{2};
        for (int i = 0; i < d - 2; ++i) transposition_class.push_back(1);
        Partition mu(transposition_class);
        Partition identity(std::vector<int>(static_cast<size_t>(d), 1));
        for (const auto& lambda : partitions_of(d)) {
            Rational expected(conjugacy_class_size(mu) * cache.character(lambda, mu),
                              cache.character(lambda, identity));
            CHECK(Rational(eta(lambda)) == expected);
        }
    }
}

TEST_CASE("hook character polynomial") {
    auto ones = hook_character_polynomial(Partition({1, 1, 1}));
    CHECK(ones == std::vector<Integer>{1, 2, 1});

    auto single = hook_character_polynomial(Partition({4}));
    CHECK(single == std::vector<Integer>{1, -1, 1, -1});

    auto mixed = hook_character_polynomial(Partition({2, 1}));
    CHECK(mixed == std::vector<Integer>{1, 0, -1});

    // entry k equals chi^{(d-k,1^k)}_beta for all beta of d <= 8
    CharacterCache cache;
    for (int d = 1; d <= 8; ++d) {
        for (const auto& beta : partitions_of(d)) {
            auto coeffs = hook_character_polynomial(beta);
            for (int k = 0; k < d; ++k) {
                std::vector<int> hook{d - k};
                for (int i = 0; i < k; ++i) hook.push_back(1);
                CHECK(coeffs[static_cast<size_t>(k)] == cache.character(Partition(hook), beta));
            }
        }
    }
}

TEST_CASE("cache persistence round-trip") {
    CharacterCache cache;
    for (const auto& lambda : partitions_of(5))
        for (const auto& mu : partitions_of(5)) cache.character(lambda, mu);
    size_t populated = cache.size();
    CHECK(populated > 0);

    std::string path = "dhn_test_cache_d5.json";
    cache.save(path, 5);

    CharacterCache reloaded;
    int loaded = reloaded.load(path);
    CHECK(loaded > 0);
    for (const auto& lambda : partitions_of(5))
        for (const auto& mu : partitions_of(5))
            CHECK(reloaded.character(lambda, mu) == cache.character(lambda, mu));

    CharacterCache fresh;
    CHECK(fresh.load("does_not_exist.json") == 0);
    std::remove(path.c_str());
}
