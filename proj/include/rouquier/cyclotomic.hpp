#pragma once

#include <optional>
#include <set>

namespace rouquier {

/// ζ_d^s - ζ_d^t for residues s != t mod d.
struct RootDifference {
    int d;
    int s;
    int t;
};

/// Order of ζ_d^(t-s), i.e. d / gcd(d, t-s).
int root_difference_order(const RootDifference& rd);

/// If n = p^a with a >= 1 returns p, otherwise nullopt.
std::optional<int> prime_power_base(int n);

/// Rational primes p such that ζ_d^s - ζ_d^t lies in a prime ideal above p.
/// The set has at most one element: 1 - ζ_n is a non-unit exactly when n is
/// a prime power p^a, and then only primes above p contain it.
std::set<int> prime_divisors_of_root_difference(const RootDifference& rd);

/// Requires 0 <= s < t < d.
bool is_essential_pair(int d, int s, int t);

}  // namespace rouquier
