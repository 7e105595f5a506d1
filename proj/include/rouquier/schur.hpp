#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace rouquier {

/// Integer exponents of a Laurent monomial in the algebra's parameters.
using ExponentVector = std::vector<std::int64_t>;

/// Images 𝒱_i -> y^{n_i} of the parameters under a cyclotomic specialization.
using Specialization = std::vector<std::int64_t>;

/// One factor Ψ(M)^n of a generic Schur element. Ψ itself is kept only
/// through its degree and the rational prime (if any) for which Ψ(1) lies
/// in a prime ideal above it.
struct CycloFactor {
    ExponentVector monomial;  // primitive: gcd of entries is 1
    int degree = 1;
    std::optional<int> psi_at_one_prime;
    int multiplicity = 1;

    bool operator==(const CycloFactor&) const = default;
};

/// s_χ = ξ_χ N_χ ∏ Ψ_i(M_i)^{n_i}. ξ_χ is recorded by its prime divisors.
struct FactoredSchurElement {
    std::set<int> leading_primes;
    ExponentVector leading_monomial;
    std::vector<CycloFactor> factors;

    /// Throws ValidationError if a factor is not primitive, lengths disagree,
    /// or degree/multiplicity are non-positive.
    void validate() const;
    /// Checks that leading and factor monomials have zero exponent sum on
    /// every block of consecutive variables. `blocks` lists block lengths.
    bool zero_sum_on_blocks(const std::vector<std::size_t>& blocks) const;
};

constexpr std::int64_t pos_part(std::int64_t n) noexcept { return n > 0 ? n : 0; }
constexpr std::int64_t neg_part(std::int64_t n) noexcept { return n < 0 ? n : 0; }

std::int64_t specialize_monomial(const ExponentVector& m, const Specialization& s);

struct ValuationDegree {
    std::int64_t valuation;
    std::int64_t degree;
    bool operator==(const ValuationDegree&) const = default;
};

/// (val_y, deg_y) of the specialized Schur element. Callers convert to
/// q-units by dividing by the y-per-q ratio of their parametrisation.
ValuationDegree valuation_and_degree(const FactoredSchurElement& f, const Specialization& s);

/// True iff some factor has monomial ±m and Ψ(1) above prime p.
bool is_essential_for(const FactoredSchurElement& f, const ExponentVector& m, int p);

bool is_primitive(const ExponentVector& m);

}  // namespace rouquier
