#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dhn/partition.hpp"
#include "dhn/rational.hpp"

using namespace dhn;

TEST_CASE("rational canonical form and parsing") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-1, 2).den() == 2);
    CHECK(Rational(6).str() == "6/1");
    CHECK(Rational(6).str_plain() == "6");
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational(1, 0), precondition_error);
    CHECK_THROWS_AS(Rational::parse("x/y"), precondition_error);
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(pow(Rational(5), 0) == Rational(1));
}

TEST_CASE("partitions_of enumerates in reverse-lexicographic order") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));

    CHECK(partitions_of(5).size() == 7);

    // every listed sequence is a partition of d, each exactly once
    auto p8 = partitions_of(8);
    CHECK(p8.size() == 22);
    for (const auto& p : p8) CHECK(p.sum() == 8);
}

TEST_CASE("padded partitions") {
    auto z = padded_partitions(0, 3);
    REQUIRE(z.size() == 1);
    CHECK(z[0].parts() == std::vector<int>{0, 0, 0});

    auto one = padded_partitions(1, 2);
    REQUIRE(one.size() == 1);
    CHECK(one[0].parts() == std::vector<int>{1, 0});

    auto two = padded_partitions(2, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].parts() == std::vector<int>{2, 0});
    CHECK(two[1].parts() == std::vector<int>{1, 1});
}

TEST_CASE("aut order") {
    CHECK(aut_order(Partition({2, 1})) == 1);
    CHECK(aut_order(Partition({1, 1, 1})) == 6);
    CHECK(aut_order(PaddedPartition({0, 0, 0})) == 6);
    CHECK(aut_order(PaddedPartition({2, 1, 0, 0})) == 2);
}

TEST_CASE("conjugacy class sizes") {
    CHECK(conjugacy_class_size(Partition({3})) == 2);
    CHECK(conjugacy_class_size(Partition({1, 1, 1})) == 1);
    CHECK(conjugacy_class_size(Partition({2, 1})) == 3);

    // sum over partitions of d of |C_alpha| = d!
    for (int d = 1; d <= 7; ++d) {
        Integer total = 0;
        for (const auto& p : partitions_of(d)) total += conjugacy_class_size(p);
        CHECK(total == factorial(static_cast<unsigned long>(d)));
    }
}

TEST_CASE("conjugate") {
    CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
    CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
    CHECK(Partition({4, 2}).conjugate() == Partition({2, 2, 1, 1}));
    for (const auto& p : partitions_of(9)) CHECK(p.conjugate().conjugate() == p);
}

TEST_CASE("shifted power sums") {
    CHECK(shifted_power_sum(Partition({1, 1}), 2) == 1);
    CHECK(shifted_power_sum(Partition({7}), 2) == 48);
    CHECK(shifted_power_sum(Partition({2, 1, 1}), 4) == 17);
}

TEST_CASE("hook content counts") {
    auto ones = hook_content_counts(Partition({1, 1, 1}));
    CHECK(ones == std::map<int, int>{{1, 2}});

    auto single = hook_content_counts(Partition({4}));
    CHECK(single == std::map<int, int>{{1, -1}, {4, 1}});

    auto mixed = hook_content_counts(Partition({2, 1}));
    CHECK(mixed == std::map<int, int>{{1, 0}, {2, 1}});
}

TEST_CASE("multiplicity and content-count invariants") {
    for (int d = 1; d <= 8; ++d) {
        for (const auto& beta : partitions_of(d)) {
            long weighted = 0, count = 0;
            for (const auto& [v, n] : beta.multiplicities()) {
                weighted += static_cast<long>(v) * n;
                count += n;
            }
            CHECK(weighted == beta.sum());
            CHECK(count == beta.length());

            long c_weighted = 0, c_count = 0;
            for (const auto& [h, c] : hook_content_counts(beta)) {
                c_weighted += static_cast<long>(h) * c;
                c_count += c;
            }
            CHECK(c_weighted == beta.sum() - 1);
            CHECK(c_count == beta.length() - 1);
        }
    }
}

TEST_CASE("partition parsing and serialization") {
    CHECK(Partition::parse("3,8") == Partition({8, 3}));
    CHECK(Partition({8, 3}).str() == "8,3");
    CHECK(Partition::parse("") == Partition());
    CHECK_THROWS_AS(Partition::parse("2,0"), precondition_error);
    CHECK_THROWS_AS(Partition({-1}), precondition_error);
}

TEST_CASE("scaled and merged profiles") {
    CHECK(Partition({2, 1}).scaled(3) == Partition({6, 3}));
    CHECK(Partition({2, 1}).merged(Partition({3, 1})) == Partition({3, 2, 1, 1}));
}
