#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "dhn/hurwitz.hpp"
#include "json.hpp"

using namespace dhn;

TEST_CASE("r_value and genus bookkeeping") {
    CHECK(r_value(0, Partition({4}), Partition({4})) == 0);
    CHECK(r_value(0, Partition({3}), Partition({1, 1, 1})) == 2);
    CHECK(r_value(1, Partition({2}), Partition({2})) == 2);
    CHECK(r_value(0, Partition({1}), Partition({1})) == -1 + 1 - 0);  // = 0
    CHECK_THROWS_AS(r_value(0, Partition({2}), Partition({3})), precondition_error);

    CHECK(genus_of(HurwitzKey{Partition({1, 1}), Partition({1, 1}), 0}) == -1);
    CHECK(genus_of(HurwitzKey{Partition({2}), Partition({2}), 2}) == 1);
    CHECK(!genus_of(HurwitzKey{Partition({2}), Partition({1, 1}), 2}).has_value());
}

TEST_CASE("brute force reproduces hand counts") {
    HurwitzEngine e;
    // complete branching over both points: H^0 = 1/d
    for (int d = 1; d <= 5; ++d)
        CHECK(e.brute_force(0, Partition({d}), Partition({d}), true) == Rational(1, d));

    CHECK(e.brute_force(0, Partition({3}), Partition({1, 1, 1}), true) == Rational(6));
    CHECK(e.brute_force(1, Partition({2}), Partition({2}), true) == Rational(1, 2));
    CHECK(e.brute_force(0, Partition({1, 1}), Partition({2}), true) == Rational(1));
    // an unbranched (r = 0, derived genus -1) degree-2 cover of the sphere
    // cannot be connected
    CHECK(e.brute_force(-1, Partition({1, 1}), Partition({1, 1}), true) == Rational(0));
    CHECK(e.brute_force(0, Partition({1, 1}), Partition({1, 1}), true) == Rational(2));
    CHECK(e.brute_force(0, Partition({1}), Partition({1}), false) == Rational(1));

    // disconnected count at r = 0 (derived genus -1): two trivial sheets
    CHECK(e.brute_force(-1, Partition({1, 1}), Partition({1, 1}), false) == Rational(2));
}

TEST_CASE("disconnected character sum equals brute-force disconnected counts") {
    HurwitzEngine e;
    CHECK(e.disconnected_character(Partition({1, 1}), Partition({1, 1}), 0) == Rational(2));
    for (int d = 1; d <= 4; ++d) {
        auto parts = partitions_of(d);
        for (const auto& a : parts) {
            for (const auto& b : parts) {
                for (int r = 0; r <= 4; ++r) {
                    auto key = HurwitzKey{a, b, r};
                    auto g = genus_of(key);
                    if (!g) {
                        CHECK(e.disconnected_character(a, b, r) == Rational(0));
                        continue;
                    }
                    Rational brute = e.brute_force(*g, a, b, false);
                    CHECK(e.disconnected_character(a, b, r) == brute);
                }
            }
        }
    }
}

TEST_CASE("series table closure, parity and spot values") {
    HurwitzEngine e;
    SeriesTable t = e.build_series_table(3, 4);
    long keys = 0;
    for (const auto& [k, v] : t.entries()) {
        ++keys;
        if ((k.r + k.alpha.length() + k.beta.length()) % 2 != 0) CHECK(v.is_zero());
    }
    CHECK(keys == (1 + 4 + 9) * 5);

    CHECK(t.coefficient(Partition({3}), Partition({3}), 0) == Rational(1, 3));
    CHECK(t.coefficient(Partition({1, 1}), Partition({1, 1}), 0) == Rational(1, 2));
    CHECK_THROWS_AS(t.coefficient(Partition({4}), Partition({4}), 0), precondition_error);
}

TEST_CASE("log of the disconnected table gives connected values") {
    HurwitzEngine e;
    e.set_table_bounds(4, 5);
    CHECK(e.connected(0, Partition({3}), Partition({1, 1, 1})) == Rational(6));
    CHECK(e.connected(0, Partition({1, 1}), Partition({2})) == Rational(1));
    // a connected unbranched degree-2 cover of the sphere does not exist:
    // the log of the table must vanish at the key with r = 0
    CHECK(e.connected_table().coefficient(Partition({1, 1}), Partition({1, 1}), 0) ==
          Rational(0));
    CHECK(e.connected(2, Partition({1}), Partition({1})) == Rational(0));

    // exhaustive against brute force within small bounds
    for (int d = 1; d <= 4; ++d) {
        auto parts = partitions_of(d);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (int g = 0; r_value(g, a, b) <= 5; ++g)
                    CHECK(e.connected(g, a, b) == e.brute_force(g, a, b, true));
    }
}

TEST_CASE("connected_single matches the table route") {
    HurwitzEngine e;
    e.set_table_bounds(5, 6);
    for (int d = 1; d <= 5; ++d) {
        auto parts = partitions_of(d);
        for (const auto& a : parts)
            for (const auto& b : parts)
                for (int g = 0; r_value(g, a, b) <= 6; ++g)
                    CHECK(e.connected_single(g, a, b) == e.connected(g, a, b));
    }
    // beyond brute-force reach: degree 9 one-part against the closed form
    CHECK(e.connected_single(0, Partition({9}), Partition({3, 3, 3})) ==
          e.one_part(0, Partition({3, 3, 3})));
}

TEST_CASE("baseline connected values and trivial degree") {
    HurwitzEngine e;
    CHECK(e.connected_single(0, Partition({2, 1}), Partition({2, 1})) == Rational(4));
    CHECK(e.connected_single(0, Partition({1}), Partition({1})) == Rational(1));
}

TEST_CASE("one-part values and both internal forms") {
    HurwitzEngine e;
    CHECK(e.one_part(0, Partition({1, 1, 1})) == Rational(6));
    CHECK(e.one_part(1, Partition({1, 1})) == Rational(1));
    CHECK(e.one_part(1, Partition({2})) == Rational(1, 2));
    CHECK(e.one_part(0, Partition({5})) == Rational(1, 5));
    // larger sweep: both forms agree internally (one_part throws otherwise)
    for (int g = 0; g <= 4; ++g)
        for (int d = 1; d <= 7; ++d)
            for (const auto& beta : partitions_of(d)) e.one_part(g, beta);
}

TEST_CASE("tabulated closed forms for g <= 5") {
    HurwitzEngine e;
    CHECK(e.one_part_closed(2, Partition({1, 1})) == Rational(1));
    CHECK(e.one_part_closed(0, Partition({2, 1})) == Rational(1));
    CHECK(e.one_part_closed(1, Partition({1, 1})) == Rational(1));
    for (int g = 0; g <= 5; ++g)
        for (int d = 1; d <= 6; ++d)
            for (const auto& beta : partitions_of(d))
                CHECK(e.one_part_closed(g, beta) == e.one_part(g, beta));
    CHECK_THROWS_AS(e.one_part_closed(6, Partition({2})), precondition_error);
}

TEST_CASE("diagonal closed form") {
    HurwitzEngine e;
    for (int d = 1; d <= 8; ++d) CHECK(e.diagonal(0, d) == Rational(1, d));
    CHECK(e.diagonal(1, 2) == Rational(1, 2));
    CHECK(e.diagonal(2, 3) == Rational(18));
    for (int g = 0; g <= 4; ++g)
        for (int d = 1; d <= 8; ++d)
            CHECK(e.diagonal(g, d) == e.one_part(g, Partition({d})));
}

TEST_CASE("two-part with two-part closed form") {
    HurwitzEngine e;
    Partition alpha({3, 8}), beta({4, 7});
    CHECK(e.two_two(0, alpha, beta) == Rational(16));
    // orientation canonicalization: swapping the roles changes nothing
    CHECK(e.two_two(1, beta, alpha) == e.two_two(1, alpha, beta));
    CHECK_THROWS_AS(e.two_two(0, Partition({2, 1}), Partition({1, 1, 1})),
                    precondition_error);
    // repeated part across the profiles invalidates the formula
    CHECK_THROWS_AS(e.two_two(0, Partition({2, 1}), Partition({2, 1})), precondition_error);
    CHECK_THROWS_AS(e.two_two(0, Partition({3, 3}), Partition({4, 2})), precondition_error);

    // small instances against brute force
    CHECK(e.two_two(0, Partition({4, 1}), Partition({3, 2})) ==
          e.brute_force(0, Partition({4, 1}), Partition({3, 2}), true));
    CHECK(e.two_two(1, Partition({4, 1}), Partition({3, 2})) ==
          e.brute_force(1, Partition({4, 1}), Partition({3, 2}), true));
}

TEST_CASE("genus-0 two- and three-part closed forms") {
    HurwitzEngine e;
    CHECK(e.genus0_mparts(Partition({1, 1}), Partition({2})) == Rational(1));
    CHECK(e.genus0_mparts(Partition({2, 1}), Partition({2, 1})) == Rational(4));
    CHECK(e.genus0_mparts(Partition({1, 1, 1}), Partition({3})) ==
          e.connected_single(0, Partition({1, 1, 1}), Partition({3})));
    CHECK_THROWS_AS(e.genus0_mparts(Partition({1, 1, 1, 1}), Partition({4})),
                    precondition_error);

    for (int d = 2; d <= 5; ++d) {
        auto parts = partitions_of(d);
        for (const auto& a : parts) {
            if (a.length() != 2 && a.length() != 3) continue;
            for (const auto& b : parts)
                CHECK(e.genus0_mparts(a, b) == e.brute_force(0, a, b, true));
        }
    }
}

TEST_CASE("join-cut equation holds and detects perturbations") {
    HurwitzEngine e;
    JoinCutReport ok = e.verify_join_cut(4, 4);
    CHECK(ok.ok);
    CHECK(ok.keys_checked > 0);

    SeriesTable conn = e.build_series_table(4, 4).log();
    SeriesTable bumped = conn;
    HurwitzKey key{Partition({2}), Partition({2}), 2};
    bumped.set(key, bumped.coefficient(key) + Rational(1));
    CHECK_FALSE(HurwitzEngine::verify_join_cut_on(bumped).ok);
}

TEST_CASE("round trip exp(log) on the disconnected table") {
    HurwitzEngine e;
    SeriesTable disc = e.build_series_table(4, 4);
    CHECK(disc.log().exp() == disc);
}

TEST_CASE("table JSON export contains every in-range key") {
    HurwitzEngine e;
    SeriesTable t = e.build_series_table(3, 4);
    std::ostringstream os;
    t.export_json(os);
    auto doc = nlohmann::json::parse(os.str());
    CHECK(doc.size() == (1 + 4 + 9) * 5);
    bool found = false;
    for (const auto& row : doc)
        if (row["alpha"] == "3" && row["beta"] == "3" && row["r"] == 0) {
            CHECK(row["coeff"] == "1/3");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("resource and precondition errors") {
    HurwitzEngine e;
    e.set_work_limit(1000);
    CHECK_THROWS_AS(e.brute_force(2, Partition({6}), Partition({6}), true), resource_error);
    e.set_work_limit(100000000);
    e.set_brute_degree_limit(4);
    CHECK_THROWS_AS(e.brute_force(0, Partition({5}), Partition({5}), true),
                    precondition_error);
}
