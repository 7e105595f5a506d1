// One line per acceptance criterion; exit status is non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "rouquier/verify.hpp"

using rouquier::verify::CheckResult;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::function<std::vector<CheckResult>()> run;
};

constexpr std::uint64_t kSeed = 20240607;

}  // namespace

int main() {
    namespace v = rouquier::verify;
    const std::vector<Criterion> criteria{
        {1, "rank-two per-hyperplane blocks match the case descriptions (d = 2,3,4)", 1.0,
         [] { return std::vector{v::rank2_golden({2, 3, 4})}; }},
        {2, "a+A constant on rank-two blocks (d <= 5, 200 specs per d)", 10.0,
         [] { return std::vector{v::rank2_aA_constancy(5, 200, 5, kSeed)}; }},
        {3, "a and A separately constant; closed forms match Schur valuation/degree", 30.0,
         [] {
             return std::vector{v::rank2_a_A_constancy(5, 200, 5, kSeed + 1),
                                v::schur_consistency(5, 200, 5, kSeed + 2)};
         }},
        {4, "Ariki-Koike union-find blocks equal the BFS oracle (d <= 3, r <= 5, 100 specs)", 60.0,
         [] { return std::vector{v::ak_oracle(3, 5, 100, kSeed + 3)}; }},
        {5, "parent blocks stable under tau_d and (j, j+kd) exchanges (de <= 4, r <= 4)", 60.0,
         [] { return std::vector{v::tau_exchange(4, 4)}; }},
        {6, "descended character counts (de <= 6, r <= 4)", 60.0,
         [] { return std::vector{v::descent_counts(6, 4)}; }},
        {7, "prime-power criterion equals exact norm (d <= 24)", 5.0,
         [] { return std::vector{v::cyclotomic_oracle(24)}; }},
        {8, "combinatorics: beta round trip, floor stability, equivalence relation", 30.0,
         [] {
             return std::vector{v::beta_round_trip(12), v::floor_stability(6, 3), v::content_equivalence(6, 3)};
         }},
        {9, "stuttering count identity (de <= 6, r <= 6)", 5.0,
         [] { return std::vector{v::stuttering_count(6, 6)}; }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const auto results = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = secs <= c.budget_seconds;
        std::int64_t cases = 0;
        std::string detail;
        for (const auto& r : results) {
            cases += r.cases;
            if (!r.passed) {
                ok = false;
                if (detail.empty()) detail = r.name + ": " + r.detail;
            }
        }
        if (secs > c.budget_seconds && detail.empty()) detail = "over the time budget";
        std::printf("criterion %d: %s  %s  (%lld cases, %.2fs / %.0fs)%s%s\n", c.id, ok ? "PASS" : "FAIL",
                    c.title.c_str(), static_cast<long long>(cases), secs, c.budget_seconds, detail.empty() ? "" : "  ",
                    detail.c_str());
        if (!ok) ++failed;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
