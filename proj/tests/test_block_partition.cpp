#include <doctest.h>

#include "rouquier/block_partition.hpp"
#include "rouquier/errors.hpp"

using namespace rouquier;

TEST_CASE("canonical form sorts blocks by least member") {
    BlockPartition bp(5, {{4, 2}, {3}, {1, 0}});
    REQUIRE(bp.blocks().size() == 3);
    CHECK(bp.blocks()[0] == std::vector<std::size_t>{0, 1});
    CHECK(bp.blocks()[1] == std::vector<std::size_t>{2, 4});
    CHECK(bp.blocks()[2] == std::vector<std::size_t>{3});
    CHECK(bp.same_block(2, 4));
    CHECK(bp.is_singleton(3));
}

TEST_CASE("rejects non-partitions") {
    CHECK_THROWS_AS(BlockPartition(3, {{0, 1}}), ValidationError);
    CHECK_THROWS_AS(BlockPartition(3, {{0, 1}, {1, 2}}), ValidationError);
    CHECK_THROWS_AS(BlockPartition(2, {{0}, {}, {1}}), ValidationError);
    CHECK_THROWS_AS(BlockPartition(2, {{0}, {2}}), ValidationError);
}

TEST_CASE("join is commutative, associative and idempotent") {
    BlockPartition x(6, {{0, 1}, {2}, {3}, {4, 5}});
    BlockPartition y(6, {{0}, {1, 2}, {3}, {4}, {5}});
    BlockPartition z(6, {{0}, {1}, {2}, {3, 5}, {4}});
    CHECK(x.join(y) == y.join(x));
    CHECK(x.join(y).join(z) == x.join(y.join(z)));
    CHECK(x.join(x) == x);
    CHECK(x.join(y) == BlockPartition(6, {{0, 1, 2}, {3}, {4, 5}}));
    CHECK(x.refines(x.join(y)));
    CHECK_FALSE(x.join(y).refines(x));
    CHECK(join_all(6, {x, y, z}) == BlockPartition(6, {{0, 1, 2}, {3, 4, 5}}));
    CHECK(join_all(3, {}) == BlockPartition::singletons(3));
}

TEST_CASE("from_keys groups equal keys") {
    const std::vector<int> keys{3, 1, 3, 2, 1};
    CHECK(BlockPartition::from_keys(keys) == BlockPartition(5, {{0, 2}, {1, 4}, {3}}));
}
