#pragma once

// Property checks over bounded parameter ranges. Each returns a single
// pass/fail verdict with the number of cases examined and, on failure, a
// description of the first counterexample.

#include <cstdint>
#include <string>
#include <vector>

#include "rouquier/report.hpp"

namespace rouquier::verify {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::int64_t cases = 0;
    std::string detail;
};

// combinatorics
CheckResult beta_round_trip(int max_size);
CheckResult shift_composition(int max_size);
/// Content equality of 2-partitions under weights (0,k) does not depend on
/// the floor once it reaches the charged height.
CheckResult floor_stability(int max_size, int max_k);
/// contents_equal is reflexive, symmetric and transitive, and invariant
/// under relabelling components together with their weights.
CheckResult content_equivalence(int max_size, int max_k);

// cyclotomic
/// Prime-power criterion against the exact norm of 1 - ζ_d^(t-s).
CheckResult cyclotomic_oracle(int max_d);
CheckResult root_difference_symmetry(int max_d);

// schur / rank2
CheckResult schur_consistency(int max_d, int per_d, int range, std::uint64_t seed);
CheckResult schur_structure(int max_d);
CheckResult rank2_golden(const std::vector<int>& ds);
CheckResult rank2_aA_constancy(int max_d, int per_d, int range, std::uint64_t seed);
CheckResult rank2_a_A_constancy(int max_d, int per_d, int range, std::uint64_t seed);
CheckResult rank2_two_pairs(int max_d, int per_d, int range, std::uint64_t seed);

// ariki_koike
CheckResult ak_oracle(int max_d, int max_r, int samples, std::uint64_t seed);
/// Blocks unchanged by translating all m_j, and by scaling (m, n).
CheckResult ak_invariance(int max_d, int max_r, int samples, std::uint64_t seed);

// descent
/// Repeated-weight parent blocks are stable under τ_d and under every
/// transposition of components (j, j+kd).
CheckResult tau_exchange(int max_de, int max_r);
CheckResult descent_counts(int max_de, int max_r);
CheckResult stuttering_count(int max_de, int max_r);
/// Non-singleton parent blocks meeting a non-stuttering label contain, for
/// each prime p | e, a member whose stabiliser order is prime to p.
CheckResult stabiliser_coprimality(int max_de, int max_r);
/// C_k1=C_k2 and C_k2=C_k3 essential => the C_k1=C_k3 description refines
/// the parent blocks.
CheckResult three_hyperplanes(int max_p, int max_d, int samples, std::uint64_t seed);
/// a/A constant along dual-group orbits and on descended blocks.
CheckResult descended_aa(int max_p, int max_d, int samples, std::uint64_t seed);

struct Bounds {
    int max_d = 4;
    int max_r = 4;
    std::uint64_t seed = 7;
};

/// combinatorics, cyclotomic, schur, ariki_koike, rank2, descent.
const std::vector<std::string>& suite_names();
/// `suite` is one of suite_names() or "all".
std::vector<CheckResult> run_suite(const std::string& suite, const Bounds& bounds);

report::Json to_json(const std::vector<CheckResult>& results, const Bounds& bounds, const std::string& suite);

}  // namespace rouquier::verify
