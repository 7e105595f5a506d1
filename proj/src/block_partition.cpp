#include "rouquier/block_partition.hpp"

#include <algorithm>
#include <numeric>

#include "rouquier/errors.hpp"

namespace rouquier {

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t UnionFind::find(std::size_t i) {
    std::size_t root = i;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[i] != root) {
        std::size_t next = parent_[i];
        parent_[i] = root;
        i = next;
    }
    return root;
}

bool UnionFind::unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_size_[a] < rank_size_[b]) std::swap(a, b);
    parent_[b] = a;
    rank_size_[a] += rank_size_[b];
    return true;
}

BlockPartition::BlockPartition(std::size_t n, std::vector<std::vector<std::size_t>> blocks)
    : blocks_(std::move(blocks)), block_of_(n, n) {
    std::size_t covered = 0;
    for (auto& b : blocks_) {
        require(!b.empty(), "block partition contains an empty block");
        std::sort(b.begin(), b.end());
        covered += b.size();
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& x, const auto& y) { return x.front() < y.front(); });
    for (std::size_t bi = 0; bi < blocks_.size(); ++bi) {
        for (auto i : blocks_[bi]) {
            require(i < n, "block member out of range");
            require(block_of_[i] == n, "blocks are not disjoint");
            block_of_[i] = bi;
        }
    }
    require(covered == n, "blocks do not cover the label set");
}

BlockPartition BlockPartition::singletons(std::size_t n) {
    std::vector<std::vector<std::size_t>> blocks(n);
    for (std::size_t i = 0; i < n; ++i) blocks[i] = {i};
    return BlockPartition(n, std::move(blocks));
}

BlockPartition BlockPartition::from_union_find(UnionFind& uf) {
    const std::size_t n = uf.size();
    std::vector<std::size_t> keys(n);
    for (std::size_t i = 0; i < n; ++i) keys[i] = uf.find(i);
    return from_keys(keys);
}

BlockPartition BlockPartition::join(const BlockPartition& other) const {
    require(universe_size() == other.universe_size(), "cannot join partitions of different sets");
    UnionFind uf(universe_size());
    for (const auto* p : {this, &other})
        for (const auto& b : p->blocks_)
            for (std::size_t i = 1; i < b.size(); ++i) uf.unite(b[0], b[i]);
    return from_union_find(uf);
}

bool BlockPartition::refines(const BlockPartition& coarser) const {
    if (universe_size() != coarser.universe_size()) return false;
    return std::all_of(blocks_.begin(), blocks_.end(), [&](const auto& b) {
        return std::all_of(b.begin(), b.end(), [&](auto i) { return coarser.same_block(i, b[0]); });
    });
}

BlockPartition join_all(std::size_t n, const std::vector<BlockPartition>& parts) {
    UnionFind uf(n);
    for (const auto& p : parts) {
        require(p.universe_size() == n, "cannot join partitions of different sets");
        for (const auto& b : p.blocks())
            for (std::size_t i = 1; i < b.size(); ++i) uf.unite(b[0], b[i]);
    }
    return BlockPartition::from_union_find(uf);
}

}  // namespace rouquier
