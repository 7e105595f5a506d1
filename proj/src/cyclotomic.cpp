#include "rouquier/cyclotomic.hpp"

#include <numeric>

#include "rouquier/errors.hpp"

namespace rouquier {

namespace {

void validate(const RootDifference& rd) {
    require(rd.d >= 1, "root order d must be positive");
    require(rd.s >= 0 && rd.s < rd.d && rd.t >= 0 && rd.t < rd.d, "residues must lie in [0, d)");
    require(rd.s != rd.t, "root difference with s == t is zero");
}

}  // namespace

int root_difference_order(const RootDifference& rd) {
    validate(rd);
    const int diff = rd.t > rd.s ? rd.t - rd.s : rd.s - rd.t;
    return rd.d / std::gcd(rd.d, diff);
}

std::optional<int> prime_power_base(int n) {
    if (n < 2) return std::nullopt;
    int p = 2;
    while (p * p <= n && n % p != 0) ++p;
    if (n % p != 0) return n;  // n itself is prime
    while (n % p == 0) n /= p;
    if (n == 1) return p;
    return std::nullopt;
}

std::set<int> prime_divisors_of_root_difference(const RootDifference& rd) {
    if (auto p = prime_power_base(root_difference_order(rd))) return {*p};
    return {};
}

bool is_essential_pair(int d, int s, int t) {
    require(0 <= s && s < t && t < d, "essential pair needs 0 <= s < t < d");
    return !prime_divisors_of_root_difference({d, s, t}).empty();
}

}  // namespace rouquier
