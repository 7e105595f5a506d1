#include <doctest.h>

#include "rouquier/combinatorics.hpp"
#include "rouquier/errors.hpp"
#include "rouquier/verify.hpp"

using namespace rouquier;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }
MultiPartition MP(std::vector<std::vector<int>> v) {
    std::vector<Partition> comps;
    for (auto& x : v) comps.emplace_back(std::move(x));
    return MultiPartition(std::move(comps));
}

}  // namespace

TEST_CASE("partitions validate their parts") {
    CHECK_THROWS_AS(P({1, 2}), ValidationError);
    CHECK_THROWS_AS(P({2, 0}), ValidationError);
    CHECK(P({3, 1, 1}).size() == 5);
    CHECK(P({}).height() == 0);
}

TEST_CASE("beta numbers") {
    CHECK(beta_number(P({})).empty());
    CHECK(beta_number(P({1})) == BetaNumber{1});
    CHECK(beta_number(P({3, 2})) == BetaNumber{4, 2});
    CHECK(partition_from_beta({4, 2}) == P({3, 2}));
}

TEST_CASE("shift") {
    CHECK(shift({}, 2) == BetaNumber{1, 0});
    CHECK(shift({1}, 0) == BetaNumber{1});
    CHECK(shift({4, 2}, 1) == BetaNumber{5, 3, 0});
    CHECK_THROWS_AS(shift({1}, -1), ValidationError);
}

TEST_CASE("partition enumeration") {
    const std::vector<int> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int n = 0; n < static_cast<int>(counts.size()); ++n) CHECK(partitions_of(n).size() == counts[n]);
    const auto four = partitions_of(4);
    CHECK(four.front() == P({4}));
    CHECK(four.back() == P({1, 1, 1, 1}));
}

TEST_CASE("multipartition order puts component 0 first") {
    const auto labels = multipartitions_of(2, 2);
    REQUIRE(labels.size() == 5);
    CHECK(labels[0].to_string() == "[[2],[]]");
    CHECK(labels[1].to_string() == "[[1,1],[]]");
    CHECK(labels[2].to_string() == "[[1],[1]]");
    CHECK(labels[3].to_string() == "[[],[2]]");
    CHECK(labels[4].to_string() == "[[],[1,1]]");
}

TEST_CASE("charged symbols") {
    auto s = charged_symbol(MP({{1}, {1}}), {0, 0});
    CHECK(s.rows == std::vector<BetaNumber>{{1}, {1}});
    CHECK(s.shift_base == 1);

    s = charged_symbol(MP({{2}, {}}), {0, 1});
    CHECK(s.rows == std::vector<BetaNumber>{{2}, {1, 0}});
    CHECK(s.shift_base == 1);

    s = ordinary_symbol(MP({{}, {}, {}}));
    CHECK(s.rows == std::vector<BetaNumber>{{}, {}, {}});
    CHECK(s.shift_base == 0);

    CHECK_THROWS_AS(charged_symbol(MP({{2}, {}}), {0, 1}, 0), ValidationError);
}

TEST_CASE("contents") {
    CHECK(content(Symbol{{{1}, {1}}, 1}).counts == std::map<int, int>{{1, 2}});
    CHECK(content(Symbol{{{2}, {1, 0}}, 1}).counts == std::map<int, int>{{0, 1}, {1, 1}, {2, 1}});
    CHECK(content(Symbol{{{0}, {2, 0}}, 0}).counts == std::map<int, int>{{0, 2}, {2, 1}});
}

TEST_CASE("contents_equal at the common floor") {
    CHECK(contents_equal(MP({{2}, {}}), MP({{1}, {1}}), {0, 1}));
    CHECK(contents_equal(MP({{2}, {}}), MP({{}, {1, 1}}), {0, 1}));
    CHECK_FALSE(contents_equal(MP({{1}, {}}), MP({{}, {1}}), {0, 1}));
    CHECK_THROWS_AS(contents_equal(MP({{1}, {}}), MP({{2}, {}}), {0, 1}), ValidationError);
    CHECK_THROWS_AS(contents_equal(MP({{1}}), MP({{1}, {}}), {0}), ValidationError);
}

TEST_CASE("zero weights: contents ignore component order") {
    for (const auto& mp : multipartitions_of(3, 3)) {
        auto c = mp.components();
        std::rotate(c.begin(), c.begin() + 1, c.end());
        CHECK(contents_equal(mp, MultiPartition(c), {0, 0, 0}));
    }
}

TEST_CASE("property suite") {
    CHECK(verify::beta_round_trip(12).passed);
    CHECK(verify::shift_composition(8).passed);
    CHECK(verify::floor_stability(6, 3).passed);
    CHECK(verify::content_equivalence(5, 3).passed);
}
