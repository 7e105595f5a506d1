#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rouquier {

/// A weakly decreasing sequence of positive integers. The empty partition is
/// allowed and has height 0.
class Partition {
public:
    Partition() = default;
    /// Throws ValidationError unless `parts` is weakly decreasing and positive.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int height() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }

    std::string to_string() const;

    bool operator==(const Partition&) const = default;

    /// Reverse-lexicographic order: (2) < (1,1) < (1) < ().
    /// "Less" means "comes first" in enumeration.
    friend bool precedes(const Partition& a, const Partition& b);

private:
    std::vector<int> parts_;
};

/// All partitions of n, in reverse-lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);

/// Strictly decreasing non-negative integers.
using BetaNumber = std::vector<int>;

BetaNumber beta_number(const Partition& p);

/// Appends the m-shift: (b_1+m, ..., b_h+m, m-1, ..., 0). Throws on m < 0.
BetaNumber shift(const BetaNumber& b, int m);

/// Recovers the partition from a beta number (inverse of beta_number).
Partition partition_from_beta(const BetaNumber& b);

/// A d-indexed family of partitions.
class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> components);

    const std::vector<Partition>& components() const noexcept { return comps_; }
    const Partition& operator[](std::size_t a) const { return comps_.at(a); }
    std::size_t d() const noexcept { return comps_.size(); }
    int size() const noexcept;

    /// Rendered as nested arrays, e.g. [[2,1],[]].
    std::string to_string() const;

    bool operator==(const MultiPartition&) const = default;

    /// Component-wise reverse-lex, component 0 most significant.
    friend bool precedes(const MultiPartition& a, const MultiPartition& b);

private:
    std::vector<Partition> comps_;
};

struct MultiPartitionOrder {
    bool operator()(const MultiPartition& a, const MultiPartition& b) const { return precedes(a, b); }
};

/// All d-partitions of r in canonical order (see `precedes`).
std::vector<MultiPartition> multipartitions_of(int d, int r);

/// Integer charges m^(0..d-1).
using WeightSystem = std::vector<int>;

/// Shifted beta numbers of each component, all aligned on a common base.
struct Symbol {
    std::vector<BetaNumber> rows;
    int shift_base = 0;

    bool operator==(const Symbol&) const = default;
};

/// hc_λ = max_a (h^(a) - m^(a)). Zero weights give the ordinary height.
int charged_height(const MultiPartition& mp, const WeightSystem& w);

/// Row a = shift(beta(λ^(a)), B - (h^(a) - m^(a))), B = floor or hc_λ.
Symbol charged_symbol(const MultiPartition& mp, const WeightSystem& w,
                      std::optional<int> floor = std::nullopt);

inline Symbol ordinary_symbol(const MultiPartition& mp) {
    return charged_symbol(mp, WeightSystem(mp.d(), 0));
}

/// Multiset of non-negative integers (value -> multiplicity).
struct ContentMultiset {
    std::map<int, int> counts;

    int total() const noexcept;
    bool operator==(const ContentMultiset&) const = default;
    auto operator<=>(const ContentMultiset&) const = default;
};

ContentMultiset content(const Symbol& s);

/// Compares charged contents after rebuilding both symbols on the common
/// floor max(hc_mp1, hc_mp2).
bool contents_equal(const MultiPartition& mp1, const MultiPartition& mp2, const WeightSystem& w);

}  // namespace rouquier
