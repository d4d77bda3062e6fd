// Counting classes of period 2n.
//
// O(n) counts all classes of period 2n, P(n) the primitive ones. O(n) is
// also the number of partitions of n into parts 2 and 3, and
// O(n) = sum_{d | n} P(d), so P follows by Moebius inversion.

#pragma once

#include "eqbilliards/orbits.hpp"

#include <cstdint>
#include <vector>

namespace eqbilliards {

/// n = 2a + 3b: a parts equal to 2 and b parts equal to 3.
struct PartitionPair {
    std::int64_t a = 0;
    std::int64_t b = 0;

    std::int64_t total() const { return 2 * a + 3 * b; }
    friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

struct CountRow {
    std::int64_t n;
    std::int64_t period;
    std::int64_t o;
    std::int64_t p;

    friend bool operator==(const CountRow&, const CountRow&) = default;
};

/// floor((n+2)/2) - floor((n+2)/3).
std::int64_t count_classes(std::int64_t n);

/// floor(n/6), plus one unless n = 1 (mod 6).
std::int64_t count_classes_mod6(std::int64_t n);

/// Brute-force count of (a, b) with 2a + 3b = n. count_partitions(0) == 1.
std::int64_t count_partitions(std::int64_t n);

/// Coefficients c_0..c_N of 1/((1-x^2)(1-x^3)), from the recurrence
/// c_n = c_{n-2} + c_{n-3} - c_{n-5}.
std::vector<std::int64_t> gf_coefficients(std::int64_t max_n);

int mobius(std::int64_t d);

/// Positive divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

/// P(n) = sum_{d | n} mu(d) O(n/d).
std::int64_t count_primitive(std::int64_t n);

/// P(n) by enumerating the classes and testing each for primitivity.
std::int64_t count_primitive_oracle(std::int64_t n);

OrbitClass partition_to_class(const PartitionPair& p);
/// Throws InvalidClass if (x, y) is not a class (via OrbitClass).
PartitionPair class_to_partition(const OrbitClass& c);

/// All pairs (a, b) with 2a + 3b = n, ascending in b.
std::vector<PartitionPair> partitions_2_3(std::int64_t n);

std::vector<CountRow> table(std::int64_t max_n);

}  // namespace eqbilliards
