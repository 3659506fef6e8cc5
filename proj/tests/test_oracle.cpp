#include "hermes/counting.hpp"
#include "hermes/error.hpp"
#include "hermes/oracle.hpp"

#include <doctest.h>

#include <map>

using namespace hermes;

namespace {
std::vector<Count> counts_of(std::initializer_list<std::uint64_t> xs) {
    std::vector<Count> v;
    for (auto x : xs) v.emplace_back(x);
    return v;
}
} // namespace

TEST_CASE("rank census golden rows") {
    CHECK(rank_census(2, 2).counts == counts_of({1, 5, 10}));
    CHECK(rank_census(3, 2).counts == counts_of({1, 20, 60}));
    CHECK(rank_census(2, 3).counts == counts_of({1, 21, 210, 280}));
    CHECK(rank_census(2, 3).total == 512);
    CHECK(rank_census(5, 2).total == ambient_size(5, 2));
}

TEST_CASE("census agrees with the Carlitz formula") {
    for (auto [q, n] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {3, 3}, {4, 2}, {5, 2}}) {
        const auto cmp = census_vs_formula(q, n);
        CHECK(cmp.pass);
        CHECK(cmp.first_mismatch == -1);
    }
}

TEST_CASE("partitioned census merges to the serial tally") {
    const auto serial = rank_census(3, 2, kDefaultEnumCap, 1);
    const auto parallel = rank_census(3, 2, kDefaultEnumCap, 3);
    CHECK(serial.counts == parallel.counts);
    const auto serial23 = rank_census(2, 3, kDefaultEnumCap, 1);
    const auto parallel23 = rank_census(2, 3, kDefaultEnumCap, 2);
    CHECK(serial23.counts == parallel23.counts);
}

TEST_CASE("census input guards") {
    CHECK_THROWS_AS(rank_census(6, 2), Error);       // not a prime power
    CHECK_THROWS_AS(rank_census(2, 3, 100), Error);  // 512 > cap
}

TEST_CASE("perfect scan finds only the trivial full-space parameters") {
    const std::vector<std::uint64_t> qs{2, 3, 4, 5, 7, 8, 9, 11, 13, 16};
    for (auto mode : {ScanMode::power_of_q, ScanMode::any_integer}) {
        const auto result = perfect_scan(qs, 12, mode);
        CHECK(result.nontrivial_count() == 0);
        CHECK(result.findings.size() == qs.size() * 11); // one per (q, n)
        std::map<std::pair<std::uint64_t, std::uint32_t>, int> per_point;
        for (const auto& f : result.findings) {
            CHECK(f.trivial);
            CHECK(f.d == 1);
            CHECK(f.size == ambient_size(f.q, f.n));
            ++per_point[{f.q, f.n}];
        }
        for (const auto& [point, count] : per_point) CHECK(count == 1);
        CHECK(per_point.size() == qs.size() * 11);
    }

    // (q=2, n=2): B_1 = 6 does not divide 16, so no d >= 2 candidate at all.
    const auto small = perfect_scan({2}, 2);
    REQUIRE(small.findings.size() == 1);
    CHECK(small.findings[0].d == 1);
    CHECK(ambient_size(2, 2) % ball_size(2, 2, 1) != 0);

    CHECK_THROWS_AS(perfect_scan({2}, 1), Error);
    CHECK_THROWS_AS(perfect_scan({1}, 4), Error);
}

TEST_CASE("the packing mass at the Singleton cap stays strictly short") {
    // The numeric shadow of the t = 1 and t = 2 contradictions: even the
    // largest admissible M cannot fill the space.
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
        for (std::uint32_t n = 3; n <= 12; ++n) CHECK(capped_packing_mass(q, n, 1) < ambient_size(q, n));
        for (std::uint32_t n = 5; n <= 12; ++n) CHECK(capped_packing_mass(q, n, 2) < ambient_size(q, n));
    }
    CHECK_THROWS_AS(capped_packing_mass(2, 3, 2), Error); // 2t > n
}

TEST_CASE("bound sweep is clean over the full grid") {
    const auto report = bound_sweep({2, 3, 4, 5, 7, 8, 9}, 12);
    CHECK(report.violations.empty());
    CHECK(report.checks > 0);

    // Spot checks at the edges.
    CHECK(sphere_bounds(2, 2, 2).contains(sphere_size(2, 2, 2))); // 10 in [4, 256]
    CHECK(sphere_bounds(2, 2, 2).lower == 4);
    CHECK(sphere_bounds(2, 2, 2).upper == 256);
    for (std::uint32_t n = 1; n <= 6; ++n) {
        CHECK(ball_bounds(3, n, n).contains(ambient_size(3, n))); // t = n holds the whole space
    }
}
