#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rouquier/block_partition.hpp"
#include "rouquier/combinatorics.hpp"

namespace rouquier::ak {

/// N = 0.
struct NZero {
    auto operator<=>(const NZero&) const = default;
};

/// kN + M_s - M_t = 0 with s < t.
struct Linear {
    int k;
    int s;
    int t;
    auto operator<=>(const Linear&) const = default;
};

using Hyperplane = std::variant<NZero, Linear>;

std::string to_string(const Hyperplane& h);

/// u_j -> ζ_d^j q^{m_j}, x -> q^n for the Ariki-Koike algebra of G(d,1,r).
struct Specialization {
    int d;
    int r;
    std::vector<int> m;
    int n;

    void validate() const;
};

/// Essential hyperplanes of G(d,1,r): N = 0 first, then Linear ordered by
/// (s, t, k).
std::vector<Hyperplane> enumerate_hyperplanes(int d, int r);

std::vector<Hyperplane> hyperplanes_containing(const Specialization& spec);

/// Characters of G(d,1,r): d-partitions of r in canonical order.
inline std::vector<MultiPartition> labels(int d, int r) { return multipartitions_of(d, r); }

/// Rouquier blocks of a specialization lying on `h` and on no other
/// essential hyperplane, over `labels(d, r)`.
BlockPartition blocks_for_hyperplane(const Hyperplane& h, int d, int r);

/// Same, over an explicit label list (all d-partitions of one size).
BlockPartition blocks_for_hyperplane(const Hyperplane& h, const std::vector<MultiPartition>& labels);

/// Join of the per-hyperplane partitions of every hyperplane containing
/// the specialization; singletons when there is none.
BlockPartition rouquier_blocks(const Specialization& spec);

}  // namespace rouquier::ak
