#include <doctest.h>

#include "rouquier/cyclotomic.hpp"
#include "rouquier/errors.hpp"
#include "rouquier/oracles.hpp"

using namespace rouquier;

TEST_CASE("prime divisors of root differences") {
    CHECK(prime_divisors_of_root_difference({2, 0, 1}) == std::set<int>{2});
    CHECK(prime_divisors_of_root_difference({6, 0, 1}).empty());
    CHECK(prime_divisors_of_root_difference({6, 0, 2}) == std::set<int>{3});
    CHECK(prime_divisors_of_root_difference({9, 0, 1}) == std::set<int>{3});
    CHECK_THROWS_AS(prime_divisors_of_root_difference({4, 1, 1}), ValidationError);
}

TEST_CASE("essential pairs") {
    CHECK(is_essential_pair(2, 0, 1));
    CHECK_FALSE(is_essential_pair(6, 0, 1));
    CHECK(is_essential_pair(4, 1, 3));
    CHECK_THROWS_AS(is_essential_pair(4, 3, 1), ValidationError);
}

TEST_CASE("prime power base") {
    CHECK(prime_power_base(1) == std::nullopt);
    CHECK(prime_power_base(8) == 2);
    CHECK(prime_power_base(27) == 3);
    CHECK(prime_power_base(12) == std::nullopt);
}

TEST_CASE("oracle: cyclotomic polynomials and norms") {
    CHECK(oracle::cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(oracle::cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
    CHECK(oracle::cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    CHECK(oracle::norm_one_minus_root_power(2, 1) == 2);
    CHECK(oracle::norm_one_minus_root_power(6, 1) == 1);
    CHECK(oracle::norm_one_minus_root_power(6, 2) == 3);
    CHECK(oracle::norm_one_minus_root_power(8, 1) == 2);
    CHECK(oracle::norm_one_minus_root_power(4, 2) == 4);  // 1 - ζ_4^2 = 2 in a degree-2 field
    CHECK(oracle::prime_divisors(oracle::BigInt(360)) == std::set<int>{2, 3, 5});
}

TEST_CASE("criterion agrees with the norm for d <= 24") {
    for (int d = 2; d <= 24; ++d)
        for (int k = 1; k < d; ++k)
            CHECK(prime_divisors_of_root_difference({d, 0, k}) ==
                  oracle::prime_divisors(oracle::norm_one_minus_root_power(d, k)));
}
