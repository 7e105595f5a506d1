#pragma once

#include <cstddef>
#include <map>
#include <vector>

namespace rouquier {

/// Disjoint-set forest over 0..n-1 with path compression and union by size.
class UnionFind {
public:
    explicit UnionFind(std::size_t n);

    std::size_t find(std::size_t i);
    /// Returns true if the two classes were distinct.
    bool unite(std::size_t a, std::size_t b);
    std::size_t size() const noexcept { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> rank_size_;
};

/// A partition of the index set {0, ..., n-1} into non-empty blocks.
///
/// Canonical form: every block sorted ascending, blocks ordered by their
/// least element. Since labels are indexed in enumeration order, the least
/// index is the least label. Two partitions compare equal iff they are the
/// same set partition.
class BlockPartition {
public:
    BlockPartition() = default;
    /// Canonicalises; throws ValidationError if `blocks` is not a disjoint
    /// cover of 0..n-1 by non-empty sets.
    BlockPartition(std::size_t n, std::vector<std::vector<std::size_t>> blocks);

    static BlockPartition singletons(std::size_t n);
    static BlockPartition from_union_find(UnionFind& uf);
    /// Groups indices sharing the same key; keys need operator<.
    template <class Key>
    static BlockPartition from_keys(const std::vector<Key>& keys);

    std::size_t universe_size() const noexcept { return block_of_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const noexcept { return blocks_; }
    std::size_t block_of(std::size_t i) const { return block_of_.at(i); }
    bool same_block(std::size_t a, std::size_t b) const { return block_of(a) == block_of(b); }
    bool is_singleton(std::size_t i) const { return blocks_[block_of(i)].size() == 1; }

    /// Finest common coarsening (transitive closure of the union).
    BlockPartition join(const BlockPartition& other) const;
    /// True iff every block of *this lies inside a block of `coarser`.
    bool refines(const BlockPartition& coarser) const;

    bool operator==(const BlockPartition& o) const { return blocks_ == o.blocks_; }

private:
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> block_of_;
};

BlockPartition join_all(std::size_t n, const std::vector<BlockPartition>& parts);

template <class Key>
BlockPartition BlockPartition::from_keys(const std::vector<Key>& keys) {
    std::map<Key, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < keys.size(); ++i) groups[keys[i]].push_back(i);
    std::vector<std::vector<std::size_t>> blocks;
    blocks.reserve(groups.size());
    for (auto& [k, members] : groups) blocks.push_back(std::move(members));
    return BlockPartition(keys.size(), std::move(blocks));
}

}  // namespace rouquier
