#include "rouquier/descent.hpp"

#include <algorithm>

#include "rouquier/errors.hpp"

namespace rouquier::descent {

void GroupParams::validate() const {
    require(de >= 1, "de must be positive");
    require(e >= 1, "e must be positive");
    require(de % e == 0, "e must divide de");
    require(r >= 2, "rank r must be at least 2");
}

std::string GroupParams::to_string() const {
    return "G(" + std::to_string(de) + "," + std::to_string(e) + "," + std::to_string(r) + ")";
}

MultiPartition tau(const MultiPartition& mp, int d) {
    const int total = static_cast<int>(mp.d());
    require(d >= 1 && total % d == 0, "tau: d must divide the number of components");
    std::vector<Partition> out(total);
    for (int j = 0; j < total; ++j) out[(j + d) % total] = mp[j];
    return MultiPartition(std::move(out));
}

bool is_d_stuttering(const MultiPartition& mp, int d, int e) {
    require(static_cast<int>(mp.d()) == d * e, "stuttering test needs d*e components");
    return tau(mp, d) == mp;
}

std::vector<Orbit> orbits(std::size_t n, const std::function<std::size_t(std::size_t)>& action, int group_order) {
    require(group_order >= 1, "group order must be positive");
    std::vector<bool> seen(n, false);
    std::vector<Orbit> out;
    for (std::size_t start = 0; start < n; ++start) {
        if (seen[start]) continue;
        Orbit o;
        std::size_t x = start;
        do {
            ensure(x < n, "action maps outside the label set");
            ensure(!seen[x], "action is not a bijection");
            seen[x] = true;
            o.members.push_back(x);
            ensure(static_cast<int>(o.members.size()) <= group_order, "orbit does not close within the group order");
            x = action(x);
        } while (x != start);
        const int size = static_cast<int>(o.members.size());
        ensure(group_order % size == 0, "orbit size does not divide the group order");
        o.stabilizer_order = group_order / size;
        std::sort(o.members.begin(), o.members.end());
        out.push_back(std::move(o));
    }
    return out;
}

std::vector<std::size_t> tau_permutation(const std::vector<MultiPartition>& labels, int d) {
    std::vector<std::size_t> perm(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const auto img = tau(labels[i], d);
        auto it = std::lower_bound(labels.begin(), labels.end(), img, MultiPartitionOrder{});
        ensure(it != labels.end() && *it == img, "tau image missing from the label set");
        perm[i] = static_cast<std::size_t>(it - labels.begin());
    }
    return perm;
}

namespace {

void check_stable(const BlockPartition& parent, const std::vector<std::size_t>& image) {
    for (std::size_t i = 0; i < image.size(); ++i)
        ensure(parent.same_block(i, image[i]), "parent blocks are not stable under the dual group action");
}

// Lays out descended labels orbit by orbit and returns the offset of each.
std::vector<std::size_t> layout(const std::vector<Orbit>& orbs, std::vector<DescLabel>& labels) {
    std::vector<std::size_t> offset(orbs.size());
    for (std::size_t o = 0; o < orbs.size(); ++o) {
        offset[o] = labels.size();
        for (int c = 0; c < orbs[o].stabilizer_order; ++c) labels.push_back({o, c});
    }
    return offset;
}

std::vector<std::size_t> orbit_index(const std::vector<Orbit>& orbs, std::size_t n) {
    std::vector<std::size_t> of(n);
    for (std::size_t o = 0; o < orbs.size(); ++o)
        for (auto m : orbs[o].members) of[m] = o;
    return of;
}

}  // namespace

Descended descend_ak(const BlockPartition& parent, const std::vector<MultiPartition>& parent_labels, int d, int e) {
    require(d >= 1 && e >= 1, "descent needs d, e >= 1");
    require(parent.universe_size() == parent_labels.size(), "parent blocks and labels disagree in size");
    const auto perm = tau_permutation(parent_labels, d);
    check_stable(parent, perm);

    Descended out;
    out.orbits = orbits(parent_labels.size(), [&](std::size_t i) { return perm[i]; }, e);
    const auto offset = layout(out.orbits, out.labels);
    const auto orbit_of = orbit_index(out.orbits, parent_labels.size());

    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& b : parent.blocks()) {
        if (b.size() == 1 && is_d_stuttering(parent_labels[b[0]], d, e)) {
            const auto o = orbit_of[b[0]];
            for (int c = 0; c < out.orbits[o].stabilizer_order; ++c) blocks.push_back({offset[o] + c});
            continue;
        }
        std::vector<std::size_t> merged;
        std::vector<std::size_t> orbs;
        for (auto i : b) orbs.push_back(orbit_of[i]);
        std::sort(orbs.begin(), orbs.end());
        orbs.erase(std::unique(orbs.begin(), orbs.end()), orbs.end());
        for (auto o : orbs)
            for (int c = 0; c < out.orbits[o].stabilizer_order; ++c) merged.push_back(offset[o] + c);
        blocks.push_back(std::move(merged));
    }
    out.blocks = BlockPartition(out.labels.size(), std::move(blocks));
    return out;
}

rank2::Label rank2_action(const rank2::Label& lbl, int p, int d) {
    require(p >= 1 && d >= 1, "rank-two action needs p, d >= 1");
    const int pd = p * d;
    if (const auto* x = std::get_if<rank2::Lin>(&lbl)) return rank2::Lin{x->i, x->j, (x->k + d) % pd};
    const auto& y = std::get<rank2::Two>(lbl);
    const int k = (y.k + d) % pd;
    const int l = (y.l + d) % pd;
    if (k < l) return rank2::Two{k, l, y.sup};
    const bool self_paired = p % 2 == 0 && y.l - y.k == (p / 2) * d;
    return rank2::Two{l, k, self_paired ? 3 - y.sup : y.sup};
}

Descended descend_rank2(const BlockPartition& parent, int p, int d) {
    require(p >= 1 && d >= 1, "rank-two descent needs p, d >= 1");
    const int pd = p * d;
    const auto lbls = rank2::labels(pd);
    require(parent.universe_size() == lbls.size(), "parent blocks do not match G(2pd,2,2) labels");
    std::vector<std::size_t> perm(lbls.size());
    for (std::size_t i = 0; i < lbls.size(); ++i) perm[i] = rank2::index_of(rank2_action(lbls[i], p, d), pd);
    check_stable(parent, perm);

    Descended out;
    out.orbits = orbits(lbls.size(), [&](std::size_t i) { return perm[i]; }, p);
    for (const auto& o : out.orbits)
        ensure(o.stabilizer_order == 1, "dual group orbit of size smaller than p on G(2pd,2,2) characters");
    layout(out.orbits, out.labels);
    const auto orbit_of = orbit_index(out.orbits, lbls.size());

    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& b : parent.blocks()) {
        std::vector<std::size_t> img;
        for (auto i : b) img.push_back(orbit_of[i]);
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        blocks.push_back(std::move(img));
    }
    out.blocks = BlockPartition(out.labels.size(), std::move(blocks));
    return out;
}

std::string path_name(GroupBlocks::Path p) {
    switch (p) {
        case GroupBlocks::Path::ArikiKoike: return "ariki-koike";
        case GroupBlocks::Path::ArikiKoikeDescent: return "ariki-koike-descent";
        case GroupBlocks::Path::Rank2: return "rank2";
        case GroupBlocks::Path::Rank2Descent: return "rank2-descent";
    }
    return "unknown";
}

namespace {

std::string desc_name(const std::string& representative, int copy) {
    return "orb" + representative + "#" + std::to_string(copy);
}

template <class H, class F>
auto names_of(const std::vector<H>& hs, F&& fmt) {
    std::vector<std::decay_t<decltype(fmt(hs.front()))>> out;
    out.reserve(hs.size());
    for (const auto& h : hs) out.push_back(fmt(h));
    return out;
}

}  // namespace

GroupBlocks blocks_for_group(const GroupParams& params, const std::vector<int>& m, int n) {
    params.validate();
    const int d = params.d();
    require(static_cast<int>(m.size()) == d, "weights m must have length de/e");

    GroupBlocks out;
    out.group = params.to_string();

    if (params.e == 1) {
        ak::Specialization spec{d, params.r, m, n};
        const auto lbls = ak::labels(d, params.r);
        out.path = GroupBlocks::Path::ArikiKoike;
        out.labels = names_of(lbls, [](const auto& mp) { return mp.to_string(); });
        out.blocks = ak::rouquier_blocks(spec);
        out.hyperplanes = names_of(ak::hyperplanes_containing(spec), [](const auto& h) { return ak::to_string(h); });
        out.parent_label_count = lbls.size();
        return out;
    }

    if (params.r > 2 || params.e % 2 == 1) {
        std::vector<int> repeated(params.de);
        for (int j = 0; j < params.de; ++j) repeated[j] = m[j % d];
        ak::Specialization parent{params.de, params.r, repeated, params.e * n};
        const auto lbls = ak::labels(params.de, params.r);
        const auto parent_blocks = ak::rouquier_blocks(parent);
        const auto desc = descend_ak(parent_blocks, lbls, d, params.e);
        out.path = GroupBlocks::Path::ArikiKoikeDescent;
        for (const auto& dl : desc.labels)
            out.labels.push_back(desc_name(lbls[desc.orbits[dl.orbit_id].members.front()].to_string(), dl.copy));
        out.blocks = desc.blocks;
        out.hyperplanes = names_of(ak::hyperplanes_containing(parent), [](const auto& h) { return ak::to_string(h); });
        out.parent_label_count = lbls.size();
        return out;
    }

    rank2::Spec spec;
    spec.d = d;
    spec.a[0] = n;
    spec.a[1] = 0;
    spec.b[0] = n;
    spec.b[1] = 0;
    spec.c.assign(m.begin(), m.end());
    auto res = blocks_for_rank2_group(params.e / 2, spec);
    res.group = out.group;
    return res;
}

GroupBlocks blocks_for_rank2_group(int p, const rank2::Spec& spec) {
    require(p >= 1, "p must be positive");
    spec.validate();
    const int pd = p * spec.d;

    rank2::Spec parent;
    parent.d = pd;
    for (int i = 0; i < 2; ++i) {
        parent.a[i] = p * spec.a[i];
        parent.b[i] = p * spec.b[i];
    }
    parent.c.resize(pd);
    for (int k = 0; k < pd; ++k) parent.c[k] = spec.c[k % spec.d];

    const auto lbls = rank2::labels(pd);
    const auto parent_blocks = rank2::rouquier_blocks(parent);

    GroupBlocks out;
    out.group = "G(" + std::to_string(2 * pd) + "," + std::to_string(2 * p) + ",2)";
    out.hyperplanes = names_of(rank2::hyperplanes_containing(parent), [](const auto& h) { return rank2::to_string(h); });
    out.parent_label_count = lbls.size();

    auto aa_of = [&](const rank2::Label& l) {
        // Parent values are measured in q^p; rescale to the input's q.
        return GroupBlocks::AA{rank2::a_value(l, parent) / p, rank2::A_value(l, parent) / p};
    };

    if (p == 1) {
        out.path = GroupBlocks::Path::Rank2;
        out.labels = names_of(lbls, [](const auto& l) { return rank2::to_string(l); });
        out.blocks = parent_blocks;
        out.aa = names_of(lbls, aa_of);
        return out;
    }

    const auto desc = descend_rank2(parent_blocks, p, spec.d);
    out.path = GroupBlocks::Path::Rank2Descent;
    out.blocks = desc.blocks;
    out.aa.emplace();
    for (const auto& dl : desc.labels) {
        const auto& rep = lbls[desc.orbits[dl.orbit_id].members.front()];
        out.labels.push_back(desc_name("[" + rank2::to_string(rep) + "]", dl.copy));
        out.aa->push_back(aa_of(rep));
    }
    return out;
}

}  // namespace rouquier::descent
