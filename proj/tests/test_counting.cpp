#include "eqbilliards/counting.hpp"

#include <doctest.h>

using namespace eqbilliards;

namespace {

// Moebius by brute factor counting, for cross-checking.
int naive_mobius(std::int64_t n) {
    int primes = 0;
    for (std::int64_t p = 2; p <= n; ++p) {
        bool prime = true;
        for (std::int64_t q = 2; q * q <= p; ++q) {
            if (p % q == 0) {
                prime = false;
                break;
            }
        }
        if (!prime || n % p != 0) continue;
        if (n % (p * p) == 0) return 0;
        ++primes;
    }
    return primes % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("count_classes examples") {
    CHECK(count_classes(1) == 0);
    CHECK(count_classes(6) == 2);
    CHECK(count_classes(60) == 11);
    CHECK(count_classes_mod6(7) == 1);
    CHECK(count_classes_mod6(12) == 3);
    CHECK(count_classes_mod6(1) == 0);
    CHECK_THROWS_AS(count_classes(0), std::invalid_argument);
}

TEST_CASE("count_partitions examples") {
    CHECK(count_partitions(6) == 2);
    CHECK(partitions_2_3(6) == std::vector<PartitionPair>{{3, 0}, {0, 2}});
    CHECK(count_partitions(0) == 1);
    CHECK(count_partitions(11) == 2);
    CHECK(count_partitions(1) == 0);
}

TEST_CASE("generating function coefficients") {
    CHECK(gf_coefficients(6) == std::vector<std::int64_t>{1, 0, 1, 1, 1, 1, 2});
    CHECK(gf_coefficients(0) == std::vector<std::int64_t>{1});
    const auto c = gf_coefficients(500);
    CHECK(c[1] == 0);
    CHECK(c[60] == 11);
    for (std::int64_t n = 0; n <= 500; ++n) {
        CHECK(c[static_cast<std::size_t>(n)] == count_partitions(n));
    }
}

TEST_CASE("the class counts agree up to 500") {
    for (std::int64_t n = 1; n <= 500; ++n) {
        CAPTURE(n);
        CHECK(count_classes(n) == count_classes_mod6(n));
        CHECK(count_classes(n) == count_partitions(n));
        CHECK(count_classes(n) == static_cast<std::int64_t>(enumerate_classes(n).size()));
    }
}

TEST_CASE("mobius") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(2) == -1);
    CHECK(mobius(30) == -1);
    CHECK(mobius(97) == -1);
    for (std::int64_t n = 1; n <= 400; ++n) {
        CHECK(mobius(n) == naive_mobius(n));
        std::int64_t sum = 0;
        for (auto d : divisors(n)) sum += mobius(d);
        CHECK(sum == (n == 1 ? 1 : 0));
    }
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
}

TEST_CASE("count_primitive") {
    CHECK(count_primitive(12) == 1);
    CHECK(count_primitive(11) == 2);
    CHECK(count_primitive(10) == 0);
    CHECK(count_primitive_oracle(9) == 1);
    CHECK(count_primitive_oracle(11) == 2);
    CHECK(count_primitive_oracle(1) == 0);
    for (std::int64_t n = 1; n <= 300; ++n) {
        CAPTURE(n);
        CHECK(count_primitive(n) == count_primitive_oracle(n));
        std::int64_t sum = 0;
        for (auto d : divisors(n)) sum += count_primitive(d);
        CHECK(sum == count_classes(n));
    }
}

TEST_CASE("partition bijection") {
    CHECK(partition_to_class({0, 2}) == OrbitClass(0, 6));
    CHECK(partition_to_class({3, 0}) == OrbitClass(3, 3));
    CHECK(class_to_partition({1, 10}) == PartitionPair{1, 3});
    CHECK(PartitionPair{1, 3}.total() == 11);
    CHECK_THROWS_AS(partition_to_class({0, 0}), InvalidClass);
    CHECK_THROWS_AS(partition_to_class({-1, 2}), std::invalid_argument);

    for (std::int64_t n = 2; n <= 300; ++n) {
        const auto parts = partitions_2_3(n);
        const auto classes = enumerate_classes(n);
        REQUIRE(parts.size() == classes.size());
        for (const auto& p : parts) {
            const auto c = partition_to_class(p);
            CHECK(c.half_period() == n);
            CHECK(class_to_partition(c) == p);
        }
        for (const auto& c : classes) {
            const auto p = class_to_partition(c);
            CHECK(p.total() == n);
            CHECK(partition_to_class(p) == c);
        }
    }
}

TEST_CASE("table rows") {
    const auto rows = table(60);
    REQUIRE(rows.size() == 60);
    CHECK(rows[1] == CountRow{2, 4, 1, 1});
    CHECK(rows[29] == CountRow{30, 60, 6, 2});
    CHECK(rows[58] == CountRow{59, 118, 10, 10});
    CHECK(table(1) == std::vector<CountRow>{{1, 2, 0, 0}});
    for (const auto& r : rows) CHECK(r.p <= r.o);
}
