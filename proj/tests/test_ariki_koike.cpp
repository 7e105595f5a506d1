#include <doctest.h>

#include <algorithm>

#include "rouquier/ariki_koike.hpp"
#include "rouquier/oracles.hpp"
#include "rouquier/verify.hpp"

using namespace rouquier;
using ak::Linear;
using ak::NZero;

namespace {

std::set<std::set<std::string>> named(const BlockPartition& bp, const std::vector<MultiPartition>& labels) {
    std::set<std::set<std::string>> out;
    for (const auto& b : bp.blocks()) {
        std::set<std::string> one;
        for (auto i : b) one.insert(labels[i].to_string());
        out.insert(one);
    }
    return out;
}

}  // namespace

TEST_CASE("enumerate hyperplanes") {
    CHECK(ak::enumerate_hyperplanes(1, 3) == std::vector<ak::Hyperplane>{NZero{}});
    CHECK(ak::enumerate_hyperplanes(2, 2) ==
          std::vector<ak::Hyperplane>{NZero{}, Linear{-1, 0, 1}, Linear{0, 0, 1}, Linear{1, 0, 1}});
    for (const auto& h : ak::enumerate_hyperplanes(6, 2))
        if (const auto* l = std::get_if<Linear>(&h)) CHECK_FALSE((l->s == 0 && l->t == 1));
    CHECK(ak::to_string(Linear{-1, 0, 2}) == "-1N+M0-M2=0");
    CHECK(ak::to_string(NZero{}) == "N=0");
}

TEST_CASE("hyperplanes containing a specialization") {
    CHECK(ak::hyperplanes_containing({2, 2, {0, 0}, 1}) == std::vector<ak::Hyperplane>{Linear{0, 0, 1}});
    // k*1 + 0 - 1 = 0 forces k = 1.
    CHECK(ak::hyperplanes_containing({2, 2, {0, 1}, 1}) == std::vector<ak::Hyperplane>{Linear{1, 0, 1}});
    CHECK(ak::hyperplanes_containing({2, 2, {0, 5}, 1}).empty());
    CHECK(ak::hyperplanes_containing({2, 2, {0, 0}, 0}) ==
          std::vector<ak::Hyperplane>{NZero{}, Linear{-1, 0, 1}, Linear{0, 0, 1}, Linear{1, 0, 1}});
}

TEST_CASE("per-hyperplane blocks, d=2 r=2") {
    const auto labels = ak::labels(2, 2);
    CHECK(named(ak::blocks_for_hyperplane(NZero{}, 2, 2), labels) ==
          std::set<std::set<std::string>>{{"[[2],[]]", "[[1,1],[]]"}, {"[[],[2]]", "[[],[1,1]]"}, {"[[1],[1]]"}});
    CHECK(named(ak::blocks_for_hyperplane(Linear{0, 0, 1}, 2, 2), labels) ==
          std::set<std::set<std::string>>{{"[[2],[]]", "[[],[2]]"}, {"[[1,1],[]]", "[[],[1,1]]"}, {"[[1],[1]]"}});
    const auto lin1 = named(ak::blocks_for_hyperplane(Linear{1, 0, 1}, 2, 2), labels);
    CHECK(lin1.count({"[[2],[]]", "[[1],[1]]", "[[],[1,1]]"}) == 1);
}

TEST_CASE("rouquier blocks") {
    CHECK(ak::rouquier_blocks({2, 2, {0, 5}, 1}) == BlockPartition::singletons(5));
    CHECK(ak::rouquier_blocks({2, 2, {0, 0}, 1}) == ak::blocks_for_hyperplane(Linear{0, 0, 1}, 2, 2));
    for (int r = 1; r <= 5; ++r) CHECK(ak::rouquier_blocks({1, r, {7}, 0}).blocks().size() == 1);
}

TEST_CASE("linear blocks keep the other components fixed") {
    const auto labels = ak::labels(3, 3);
    for (const auto& h : ak::enumerate_hyperplanes(3, 3)) {
        const auto* l = std::get_if<Linear>(&h);
        if (!l) continue;
        const int other = 3 - l->s - l->t;
        const auto bp = ak::blocks_for_hyperplane(h, labels);
        for (const auto& b : bp.blocks())
            for (auto i : b) CHECK(labels[i][other] == labels[b.front()][other]);
    }
}

TEST_CASE("blocks are unions of per-hyperplane blocks") {
    const ak::Specialization spec{3, 3, {0, 1, 1}, 1};
    const auto all = ak::rouquier_blocks(spec);
    for (const auto& h : ak::hyperplanes_containing(spec)) CHECK(ak::blocks_for_hyperplane(h, 3, 3).refines(all));
}

TEST_CASE("exchange of equal-weight components") {
    // m_0 = m_1 with (0,1) essential: swapping components preserves blocks.
    const ak::Specialization spec{2, 3, {1, 1}, 2};
    const auto labels = ak::labels(2, 3);
    const auto bp = ak::rouquier_blocks(spec);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const MultiPartition sw({labels[i][1], labels[i][0]});
        const auto j = std::find(labels.begin(), labels.end(), sw) - labels.begin();
        CHECK(bp.same_block(i, static_cast<std::size_t>(j)));
    }
}

TEST_CASE("union-find agrees with the breadth-first oracle") {
    CHECK(verify::ak_oracle(3, 4, 15, 3).passed);
    CHECK(verify::ak_invariance(2, 4, 10, 5).passed);
}
