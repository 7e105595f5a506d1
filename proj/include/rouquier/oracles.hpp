#pragma once

// Brute-force reference computations. Nothing in the core library depends
// on these; they exist to cross-check it from an independent route.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rouquier/ariki_koike.hpp"
#include "rouquier/block_partition.hpp"

namespace rouquier::oracle {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients of Φ_n, constant term first, by exact division of x^n - 1.
std::vector<std::int64_t> cyclotomic_polynomial(int n);

/// Field norm N_{Q(ζ_d)/Q}(1 - ζ_d^k) as the resultant of Φ_d and 1 - x^k,
/// i.e. the determinant of multiplication by 1 - x^k on Z[x]/Φ_d.
BigInt norm_one_minus_root_power(int d, int k);

/// Primes dividing |n| (empty for n = ±1).
std::set<int> prime_divisors(const BigInt& n);

/// Rouquier blocks by breadth-first search over the pairwise relations of
/// every contained hyperplane, with pairwise content comparison.
BlockPartition bfs_ak_blocks(const ak::Specialization& spec);

/// Number of d-partitions of n by the partition-number convolution.
std::int64_t count_multipartitions(int d, int n);

/// Σ_λ |Stab(λ)|^2 / e over de-partitions of r, stabilisers counted by
/// applying every power of τ_d. Equals |Irr(G(de,e,r))|.
std::int64_t clifford_character_count(int de, int e, int r);

/// Stuttering de-partitions of r found by testing every label against the
/// fixed-point condition (first d components repeated e times).
std::int64_t count_stuttering(int d, int e, int r);

/// Expected blocks of G(2d,2,2) associated with one hyperplane, built from
/// the case-by-case description and expressed with label strings. `kind`
/// is one of "none", "A", "B", "C", "Q".
std::set<std::set<std::string>> rank2_expected_blocks(int d, const std::string& kind, int i = 0, int j = 0, int k = 0,
                                                      int l = 0);

}  // namespace rouquier::oracle
