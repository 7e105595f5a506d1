#include <doctest.h>

#include "rouquier/descent.hpp"
#include "rouquier/errors.hpp"
#include "rouquier/oracles.hpp"
#include "rouquier/verify.hpp"

using namespace rouquier;
using namespace rouquier::descent;

namespace {

MultiPartition MP(std::vector<std::vector<int>> v) {
    std::vector<Partition> comps;
    for (auto& x : v) comps.emplace_back(std::move(x));
    return MultiPartition(std::move(comps));
}

std::set<std::set<std::string>> named(const GroupBlocks& g) {
    std::set<std::set<std::string>> out;
    for (const auto& b : g.blocks.blocks()) {
        std::set<std::string> one;
        for (auto i : b) one.insert(g.labels[i]);
        out.insert(one);
    }
    return out;
}

}  // namespace

TEST_CASE("tau rotates packages") {
    CHECK(tau(MP({{1}, {}}), 1) == MP({{}, {1}}));
    CHECK(tau(MP({{2}, {}, {}}), 1) == MP({{}, {2}, {}}));
    CHECK(tau(MP({{1}, {}, {1}, {}}), 2) == MP({{1}, {}, {1}, {}}));
    CHECK_THROWS_AS(tau(MP({{1}, {}, {}}), 2), ValidationError);
}

TEST_CASE("stuttering") {
    CHECK(is_d_stuttering(MP({{1}, {1}}), 1, 2));
    CHECK_FALSE(is_d_stuttering(MP({{1}, {}}), 1, 2));
    CHECK(is_d_stuttering(MP({{1}, {}, {1}, {}}), 2, 2));
}

TEST_CASE("orbits") {
    const auto labels = ak::labels(2, 2);
    const auto perm = tau_permutation(labels, 1);
    const auto orbs = orbits(labels.size(), [&](std::size_t i) { return perm[i]; }, 2);
    REQUIRE(orbs.size() == 3);
    std::map<std::string, int> stab;
    for (const auto& o : orbs) {
        std::string key;
        for (auto m : o.members) key += labels[m].to_string();
        stab[key] = o.stabilizer_order;
    }
    CHECK(stab["[[2],[]][[],[2]]"] == 1);
    CHECK(stab["[[1,1],[]][[],[1,1]]"] == 1);
    CHECK(stab["[[1],[1]]"] == 2);

    const auto single = orbits(1, [](std::size_t i) { return i; }, 5);
    REQUIRE(single.size() == 1);
    CHECK(single[0].stabilizer_order == 5);

    CHECK_THROWS_AS(orbits(3, [](std::size_t i) { return (i + 1) % 3; }, 2), InvariantError);
}

TEST_CASE("rank-two action has orbits of size p") {
    for (int p = 1; p <= 4; ++p)
        for (int d = 1; d <= 3; ++d) {
            const auto lbls = rank2::labels(p * d);
            for (const auto& l : lbls) {
                auto x = l;
                int size = 0;
                do {
                    x = rank2_action(x, p, d);
                    ++size;
                } while (!(x == l) && size <= p);
                CHECK(size == p);
            }
        }
    CHECK(rank2_action(rank2::Lin{0, 1, 0}, 2, 1) == rank2::Label{rank2::Lin{0, 1, 1}});
    CHECK(rank2_action(rank2::Two{0, 1, 1}, 2, 1) == rank2::Label{rank2::Two{0, 1, 2}});
}

TEST_CASE("descend_ak on G(2,2,2)") {
    const auto labels = ak::labels(2, 2);
    const auto parent = ak::rouquier_blocks({2, 2, {0, 0}, 2});
    CHECK(parent.blocks().size() == 3);
    const auto desc = descend_ak(parent, labels, 1, 2);
    CHECK(desc.labels.size() == 4);
    CHECK(desc.blocks == BlockPartition::singletons(4));

    // e = 1 leaves blocks untouched.
    const auto same = descend_ak(parent, labels, 2, 1);
    CHECK(same.blocks == parent);
    for (const auto& o : same.orbits) CHECK(o.stabilizer_order == 1);
}

TEST_CASE("descend_ak rejects unstable parents") {
    const auto labels = ak::labels(2, 2);
    const BlockPartition lopsided(5, {{0, 1}, {2}, {3}, {4}});
    CHECK_THROWS_AS(descend_ak(lopsided, labels, 1, 2), InvariantError);
}

TEST_CASE("G(2,2,2) through the dispatcher") {
    const auto g = blocks_for_group({2, 2, 2}, {0}, 1);
    CHECK(g.path == GroupBlocks::Path::Rank2);
    CHECK(g.labels.size() == 4);
    CHECK(g.blocks == BlockPartition::singletons(4));

    // n = 0: both generator classes sit on their equal-parameter hyperplane.
    const auto z = blocks_for_group({2, 2, 2}, {0}, 0);
    CHECK(z.blocks.blocks().size() == 1);
}

TEST_CASE("G(2,2,3) through the Ariki-Koike descent") {
    const auto g = blocks_for_group({2, 2, 3}, {0}, 1);
    CHECK(g.path == GroupBlocks::Path::ArikiKoikeDescent);
    CHECK(static_cast<std::int64_t>(g.labels.size()) == oracle::clifford_character_count(2, 2, 3));
    // n = 0 fuses by size vectors: the stuttering-free parent lets every orbit into one block per class.
    const auto z = blocks_for_group({2, 2, 3}, {0}, 0);
    CHECK(z.blocks.blocks().size() < z.labels.size());
}

TEST_CASE("dispatch paths and counts") {
    CHECK(blocks_for_group({2, 1, 2}, {0, 0}, 1).path == GroupBlocks::Path::ArikiKoike);
    const auto s3 = blocks_for_group({3, 3, 2}, {0}, 1);
    CHECK(s3.path == GroupBlocks::Path::ArikiKoikeDescent);
    CHECK(s3.labels.size() == 3);
    const auto d8 = blocks_for_group({4, 4, 2}, {0}, 1);
    CHECK(d8.path == GroupBlocks::Path::Rank2Descent);
    CHECK(d8.labels.size() == 5);
    CHECK(blocks_for_group({6, 6, 2}, {0}, 1).labels.size() == 6);
    CHECK_THROWS_AS(blocks_for_group({4, 3, 2}, {0}, 1), ValidationError);
    CHECK_THROWS_AS(blocks_for_group({4, 2, 1}, {0, 0}, 1), ValidationError);
    CHECK_THROWS_AS(blocks_for_group({4, 2, 2}, {0}, 1), ValidationError);
}

TEST_CASE("direct G(2pd,2p,2) mode") {
    rank2::Spec s;
    s.d = 1;
    s.c = {0};
    const auto g = blocks_for_rank2_group(2, s);
    CHECK(g.group == "G(4,4,2)");
    CHECK(g.labels.size() == 5);
    REQUIRE(g.aa.has_value());
    CHECK(g.aa->size() == 5);
    CHECK(std::find(g.labels.begin(), g.labels.end(), "orb[chi[0,0,0]]#0") != g.labels.end());

    // Away from A0=A1 and B0=B1 the parent only meets C0=C1 (forced by repetition),
    // whose blocks pair chi[i,j,0] with chi[i,j,1]: one orbit each, so all singletons.
    s.a[0] = 3;
    s.b[0] = 7;
    const auto generic = blocks_for_rank2_group(2, s);
    CHECK(generic.hyperplanes == std::vector<std::string>{"C0=C1"});
    CHECK(generic.blocks == BlockPartition::singletons(5));
    CHECK(named(generic).count({"orb[chi2[0,1,1]]#0"}) == 1);
}

TEST_CASE("descent properties") {
    CHECK(verify::tau_exchange(4, 3).passed);
    CHECK(verify::descent_counts(5, 3).passed);
    CHECK(verify::stuttering_count(4, 4).passed);
    CHECK(verify::stabiliser_coprimality(4, 3).passed);
    CHECK(verify::three_hyperplanes(3, 2, 15, 9).passed);
    CHECK(verify::descended_aa(3, 2, 15, 10).passed);
}
