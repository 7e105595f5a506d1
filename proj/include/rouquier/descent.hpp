#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rouquier/ariki_koike.hpp"
#include "rouquier/block_partition.hpp"
#include "rouquier/combinatorics.hpp"
#include "rouquier/rank2.hpp"

namespace rouquier::descent {

/// G(de,e,r) with d = de/e.
struct GroupParams {
    int de;
    int e;
    int r;

    int d() const { return de / e; }
    void validate() const;
    std::string to_string() const;
};

/// An orbit of the dual cyclic group on parent characters (indices into the
/// parent label list, ascending). |members| * stabilizer_order = group order.
struct Orbit {
    std::vector<std::size_t> members;
    int stabilizer_order;

    bool operator==(const Orbit&) const = default;
};

/// Character of the subalgebra lying over an orbit. Copies are nominal:
/// 0 .. stabilizer_order-1.
struct DescLabel {
    std::size_t orbit_id;
    int copy;

    bool operator==(const DescLabel&) const = default;
};

/// Cyclic rotation by d-packages: the last package of d components moves
/// to the front. Throws if d does not divide the number of components.
MultiPartition tau(const MultiPartition& mp, int d);

/// Fixed points of `tau`: the first d components repeated e times.
bool is_d_stuttering(const MultiPartition& mp, int d, int e);

/// Orbit decomposition of 0..n-1 under a bijection of order dividing
/// `group_order`. Orbits are ordered by least member. Throws InvariantError
/// if an orbit fails to close within group_order steps or its size does not
/// divide group_order.
std::vector<Orbit> orbits(std::size_t n, const std::function<std::size_t(std::size_t)>& action, int group_order);

struct Descended {
    std::vector<Orbit> orbits;
    std::vector<DescLabel> labels;  // ordered by (orbit_id, copy)
    BlockPartition blocks;          // over `labels`
};

/// Index permutation induced by `tau` on a sorted label list.
std::vector<std::size_t> tau_permutation(const std::vector<MultiPartition>& labels, int d);

/// Blocks of G(de,e,r) from the blocks of the repeated-weight Ariki-Koike
/// algebra of G(de,1,r) over `parent_labels` (all de-partitions of r).
/// Throws InvariantError if `parent` is not τ_d-stable.
Descended descend_ak(const BlockPartition& parent, const std::vector<MultiPartition>& parent_labels, int d, int e);

/// Action of the dual cyclic group of order p on labels of G(2pd,2,2):
/// indices shift by d modulo pd. For even p the pair {k, k + pd/2} is
/// rotated onto itself, so its superscripts are exchanged whenever the
/// normalised order k < l flips.
rank2::Label rank2_action(const rank2::Label& lbl, int p, int d);

/// Blocks of G(2pd,2p,2) from those of G(2pd,2,2) (parent over
/// rank2::labels(p*d)). Every orbit has size p and carries one character.
Descended descend_rank2(const BlockPartition& parent, int p, int d);

/// Characters and blocks of one group for one specialization.
struct GroupBlocks {
    enum class Path { ArikiKoike, ArikiKoikeDescent, Rank2, Rank2Descent };

    Path path;
    std::string group;
    std::vector<std::string> labels;
    BlockPartition blocks;
    /// Hyperplanes of the algebra whose blocks were computed (the parent
    /// algebra when descending) that contain its specialization.
    std::vector<std::string> hyperplanes;
    std::size_t parent_label_count = 0;
    /// Present on the rank-two paths, per label, in the units of the input
    /// specialization.
    struct AA {
        rank2::Rational a;
        rank2::Rational A;
    };
    std::optional<std::vector<AA>> aa;
};

std::string path_name(GroupBlocks::Path p);

/// Dispatcher for G(de,e,r), r >= 2, specialised by x_j -> ζ_d^j q^{m_j},
/// z -> q^n. e = 1 is the Ariki-Koike case; r > 2 or odd e descends from
/// G(de,1,r); r = 2 with even e descends from G(de,2,2), where the two
/// non-conjugate generators both receive the parameters (q^n, -1).
GroupBlocks blocks_for_group(const GroupParams& params, const std::vector<int>& m, int n);

/// G(2pd,2p,2) with independent parameters for all three generator classes
/// (`spec.d` is the small d). p = 1 is G(2d,2,2) itself.
GroupBlocks blocks_for_rank2_group(int p, const rank2::Spec& spec);

}  // namespace rouquier::descent
