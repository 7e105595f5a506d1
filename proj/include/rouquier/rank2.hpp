#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rouquier/block_partition.hpp"
#include "rouquier/schur.hpp"

// The rank-two family G(2d,2,2): 4d linear characters χ_{ijk} and d(d-1)
// characters χ^{1,2}_{kl} of degree two.
namespace rouquier::rank2 {

using Rational = boost::rational<std::int64_t>;

/// χ_{ijk}, i, j in {0,1}, 0 <= k < d.
struct Lin {
    int i;
    int j;
    int k;
    auto operator<=>(const Lin&) const = default;
};

/// χ^{sup}_{kl}, k < l, sup in {1,2}.
struct Two {
    int k;
    int l;
    int sup;
    auto operator<=>(const Two&) const = default;
};

using Label = std::variant<Lin, Two>;

/// "chi[i,j,k]" or "chi2[k,l,sup]".
std::string to_string(const Label& lbl);

/// Lin before Two, each lexicographic.
std::vector<Label> labels(int d);
std::size_t index_of(const Label& lbl, int d);

struct AEq {
    auto operator<=>(const AEq&) const = default;
};
struct BEq {
    auto operator<=>(const BEq&) const = default;
};
/// C_k = C_l.
struct CEq {
    int k;
    int l;
    auto operator<=>(const CEq&) const = default;
};
/// A_i - A_{1-i} + B_j - B_{1-j} + C_k - C_l = 0.
struct Quad {
    int i;
    int j;
    int k;
    int l;
    auto operator<=>(const Quad&) const = default;
};

using Hyperplane = std::variant<AEq, BEq, CEq, Quad>;

std::string to_string(const Hyperplane& h);

/// x_i -> (-1)^i q^{a_i}, y_j -> (-1)^j q^{b_j}, z_k -> ζ_d^k q^{c_k}.
struct Spec {
    int d = 1;
    std::int64_t a[2] = {0, 0};
    std::int64_t b[2] = {0, 0};
    std::vector<std::int64_t> c;

    void validate() const;
    /// Exponents of the square-root parameters X_i, Y_j, Z_k in t = q^{1/2},
    /// ordered (a0, a1, b0, b1, c0, ..., c_{d-1}).
    Specialization as_specialization() const;
};

/// Variables are X_0, X_1, Y_0, Y_1, Z_0..Z_{d-1} (square roots of the
/// generic parameters). Linear-type factors carry degree 2 (they are
/// polynomials in the square of the monomial), so val_t / 2 is the q-valuation.
FactoredSchurElement schur_element(const Label& lbl, int d);

/// Number of t-units per q-unit in `Spec::as_specialization` coordinates.
inline constexpr std::int64_t kTPerQ = 2;

/// Closed forms for the valuation (a) and degree (A) in q-units.
Rational a_value(const Label& lbl, const Spec& spec);
Rational A_value(const Label& lbl, const Spec& spec);
/// a + A; always an integer.
std::int64_t aA_sum(const Label& lbl, const Spec& spec);

/// Essential hyperplanes: AEq, BEq, then for each essential k < l:
/// CEq{k,l} and the four Quad{i,j,k,l}.
std::vector<Hyperplane> hyperplanes(int d);
bool contains(const Hyperplane& h, const Spec& spec);
std::vector<Hyperplane> hyperplanes_containing(const Spec& spec);

/// Blocks associated with no essential hyperplane.
BlockPartition generic_blocks(int d);
/// Blocks associated with h alone. Accepts CEq/Quad for any k < l (also
/// non-essential ones) so the case descriptions can be applied to any pair.
BlockPartition blocks_for_hyperplane(const Hyperplane& h, int d);
BlockPartition rouquier_blocks(const Spec& spec);

}  // namespace rouquier::rank2
