#include "eqbilliards/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqbilliards {

namespace {

void require_positive(std::int64_t n, const char* what) {
    if (n < 1) {
        throw std::invalid_argument(std::string(what) + " needs n >= 1");
    }
}

}  // namespace

std::int64_t count_classes(std::int64_t n) {
    require_positive(n, "count_classes");
    return (n + 2) / 2 - (n + 2) / 3;
}

std::int64_t count_classes_mod6(std::int64_t n) {
    require_positive(n, "count_classes_mod6");
    return n % 6 == 1 ? n / 6 : n / 6 + 1;
}

std::int64_t count_partitions(std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("count_partitions needs n >= 0");
    }
    std::int64_t count = 0;
    for (std::int64_t b = 0; 3 * b <= n; ++b) {
        if ((n - 3 * b) % 2 == 0) ++count;
    }
    return count;
}

std::vector<std::int64_t> gf_coefficients(std::int64_t max_n) {
    if (max_n < 0) {
        throw std::invalid_argument("gf_coefficients needs N >= 0");
    }
    std::vector<std::int64_t> c(static_cast<std::size_t>(max_n) + 1, 0);
    const auto at = [&c](std::int64_t i) -> std::int64_t {
        return i < 0 ? 0 : c[static_cast<std::size_t>(i)];
    };
    // Denominator expands to 1 - x^2 - x^3 + x^5.
    for (std::int64_t n = 0; n <= max_n; ++n) {
        c[static_cast<std::size_t>(n)] = (n == 0 ? 1 : 0) + at(n - 2) + at(n - 3) - at(n - 5);
    }
    return c;
}

int mobius(std::int64_t d) {
    require_positive(d, "mobius");
    int sign = 1;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % p != 0) continue;
        d /= p;
        if (d % p == 0) return 0;
        sign = -sign;
    }
    if (d > 1) sign = -sign;
    return sign;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    require_positive(n, "divisors");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t count_primitive(std::int64_t n) {
    std::int64_t total = 0;
    for (std::int64_t d : divisors(n)) {
        total += mobius(d) * count_classes(n / d);
    }
    return total;
}

std::int64_t count_primitive_oracle(std::int64_t n) {
    const auto classes = enumerate_classes(n);
    return std::count_if(classes.begin(), classes.end(),
                         [](const OrbitClass& c) { return is_primitive(c); });
}

OrbitClass partition_to_class(const PartitionPair& p) {
    if (p.a < 0 || p.b < 0) {
        throw std::invalid_argument("partition counts must be nonnegative");
    }
    return {p.a, p.a + 3 * p.b};
}

PartitionPair class_to_partition(const OrbitClass& c) {
    return {c.x(), (c.y() - c.x()) / 3};
}

std::vector<PartitionPair> partitions_2_3(std::int64_t n) {
    if (n < 0) {
        throw std::invalid_argument("partitions_2_3 needs n >= 0");
    }
    std::vector<PartitionPair> out;
    for (std::int64_t b = 0; 3 * b <= n; ++b) {
        if ((n - 3 * b) % 2 == 0) out.push_back({(n - 3 * b) / 2, b});
    }
    return out;
}

std::vector<CountRow> table(std::int64_t max_n) {
    require_positive(max_n, "table");
    std::vector<CountRow> rows;
    rows.reserve(static_cast<std::size_t>(max_n));
    for (std::int64_t n = 1; n <= max_n; ++n) {
        rows.push_back({n, 2 * n, count_classes(n), count_primitive(n)});
    }
    return rows;
}

}  // namespace eqbilliards
