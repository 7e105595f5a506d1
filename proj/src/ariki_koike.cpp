#include "rouquier/ariki_koike.hpp"

#include <algorithm>
#include <tuple>

#include "rouquier/cyclotomic.hpp"
#include "rouquier/errors.hpp"

namespace rouquier::ak {

std::string to_string(const Hyperplane& h) {
    if (std::holds_alternative<NZero>(h)) return "N=0";
    const auto& l = std::get<Linear>(h);
    return std::to_string(l.k) + "N+M" + std::to_string(l.s) + "-M" + std::to_string(l.t) + "=0";
}

void Specialization::validate() const {
    require(d >= 1, "d must be positive");
    require(r >= 1, "r must be positive");
    require(static_cast<int>(m.size()) == d, "weights m must have length d");
}

std::vector<Hyperplane> enumerate_hyperplanes(int d, int r) {
    require(d >= 1 && r >= 1, "enumerate_hyperplanes needs d >= 1 and r >= 1");
    std::vector<Hyperplane> out{NZero{}};
    for (int s = 0; s < d; ++s)
        for (int t = s + 1; t < d; ++t) {
            if (!is_essential_pair(d, s, t)) continue;
            for (int k = -r + 1; k < r; ++k) out.emplace_back(Linear{k, s, t});
        }
    return out;
}

std::vector<Hyperplane> hyperplanes_containing(const Specialization& spec) {
    spec.validate();
    std::vector<Hyperplane> out;
    for (const auto& h : enumerate_hyperplanes(spec.d, spec.r)) {
        if (std::holds_alternative<NZero>(h)) {
            if (spec.n == 0) out.push_back(h);
            continue;
        }
        const auto& l = std::get<Linear>(h);
        if (static_cast<long long>(l.k) * spec.n + spec.m[l.s] - spec.m[l.t] == 0) out.push_back(h);
    }
    return out;
}

namespace {

// Sizes of every component.
std::vector<int> size_vector(const MultiPartition& mp) {
    std::vector<int> v;
    v.reserve(mp.d());
    for (const auto& p : mp.components()) v.push_back(p.size());
    return v;
}

// Grouping key for kN + M_s - M_t = 0: the untouched components plus the
// (0,k)-charged content of (λ^(s), λ^(t)) computed on a floor shared by the
// whole label set. Floor stability makes equality of these keys coincide
// with the pairwise contents_equal relation.
using LinearKey = std::tuple<std::vector<Partition>, ContentMultiset>;

struct PartitionVectorLess {
    bool operator()(const std::vector<Partition>& a, const std::vector<Partition>& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                            [](const Partition& x, const Partition& y) { return precedes(x, y); });
    }
};

struct LinearKeyLess {
    bool operator()(const LinearKey& a, const LinearKey& b) const {
        PartitionVectorLess pl;
        if (pl(std::get<0>(a), std::get<0>(b))) return true;
        if (pl(std::get<0>(b), std::get<0>(a))) return false;
        return std::get<1>(a) < std::get<1>(b);
    }
};

BlockPartition linear_blocks(const Linear& h, const std::vector<MultiPartition>& labels) {
    const WeightSystem w{0, h.k};
    std::vector<MultiPartition> pairs;
    pairs.reserve(labels.size());
    int floor = 0;
    for (const auto& mp : labels) {
        require(static_cast<std::size_t>(h.t) < mp.d(), "hyperplane index exceeds number of components");
        pairs.emplace_back(std::vector<Partition>{mp[h.s], mp[h.t]});
        floor = std::max(floor, charged_height(pairs.back(), w));
    }

    std::map<LinearKey, std::vector<std::size_t>, LinearKeyLess> groups;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::vector<Partition> rest;
        for (std::size_t a = 0; a < labels[i].d(); ++a)
            if (static_cast<int>(a) != h.s && static_cast<int>(a) != h.t) rest.push_back(labels[i][a]);
        groups[{std::move(rest), content(charged_symbol(pairs[i], w, floor))}].push_back(i);
    }
    std::vector<std::vector<std::size_t>> blocks;
    for (auto& [key, members] : groups) blocks.push_back(std::move(members));
    return BlockPartition(labels.size(), std::move(blocks));
}

}  // namespace

BlockPartition blocks_for_hyperplane(const Hyperplane& h, const std::vector<MultiPartition>& labels) {
    if (std::holds_alternative<NZero>(h)) {
        std::vector<std::vector<int>> keys;
        keys.reserve(labels.size());
        for (const auto& mp : labels) keys.push_back(size_vector(mp));
        return BlockPartition::from_keys(keys);
    }
    return linear_blocks(std::get<Linear>(h), labels);
}

BlockPartition blocks_for_hyperplane(const Hyperplane& h, int d, int r) {
    return blocks_for_hyperplane(h, labels(d, r));
}

BlockPartition rouquier_blocks(const Specialization& spec) {
    const auto contained = hyperplanes_containing(spec);
    const auto lbls = labels(spec.d, spec.r);
    if (contained.empty()) return BlockPartition::singletons(lbls.size());
    std::vector<BlockPartition> parts;
    parts.reserve(contained.size());
    for (const auto& h : contained) parts.push_back(blocks_for_hyperplane(h, lbls));
    return join_all(lbls.size(), parts);
}

}  // namespace rouquier::ak
