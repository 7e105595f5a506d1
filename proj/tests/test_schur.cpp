#include <doctest.h>

#include <random>

#include "rouquier/errors.hpp"
#include "rouquier/schur.hpp"

using namespace rouquier;

TEST_CASE("positive and negative parts") {
    CHECK(pos_part(0) == 0);
    CHECK(neg_part(0) == 0);
    CHECK(pos_part(5) == 5);
    CHECK(neg_part(5) == 0);
    CHECK(pos_part(-3) == 0);
    CHECK(neg_part(-3) == -3);
}

TEST_CASE("specialize_monomial") {
    CHECK(specialize_monomial({1, -1}, {3, 3}) == 0);
    CHECK(specialize_monomial({1, -1}, {5, 2}) == 3);
    CHECK(specialize_monomial({2, -1, -1}, {1, 1, 1}) == 0);
    CHECK_THROWS_AS(specialize_monomial({1, -1}, {1}), ValidationError);
}

TEST_CASE("valuation and degree") {
    FactoredSchurElement unit{{}, {0, 0}, {}};
    CHECK(valuation_and_degree(unit, {4, 1}) == ValuationDegree{0, 0});

    FactoredSchurElement f{{}, {0, 0}, {CycloFactor{{1, -1}, 1, 2, 1}}};
    CHECK(valuation_and_degree(f, {2, 5}) == ValuationDegree{-3, 0});
    CHECK(valuation_and_degree(f, {5, 2}) == ValuationDegree{0, 3});
}

TEST_CASE("essential monomials match up to inversion") {
    FactoredSchurElement f{{}, {0, 0}, {CycloFactor{{1, -1}, 1, 2, 1}}};
    CHECK(is_essential_for(f, {1, -1}, 2));
    CHECK_FALSE(is_essential_for(f, {1, -1}, 3));
    CHECK(is_essential_for(f, {-1, 1}, 2));
}

TEST_CASE("validation rejects malformed elements") {
    FactoredSchurElement bad{{}, {0, 0}, {CycloFactor{{2, -2}, 1, 2, 1}}};
    CHECK_THROWS_AS(bad.validate(), ValidationError);
    FactoredSchurElement zero_deg{{}, {0, 0}, {CycloFactor{{1, -1}, 0, 2, 1}}};
    CHECK_THROWS_AS(zero_deg.validate(), ValidationError);
    CHECK(is_primitive({2, -3}));
    CHECK_FALSE(is_primitive({0, 0}));
}

TEST_CASE("sum identity, scaling and zero-sum invariance on random instances") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int it = 0; it < 200; ++it) {
        FactoredSchurElement f;
        f.leading_monomial = {coef(rng), 0, 0};
        f.leading_monomial[1] = -f.leading_monomial[0];
        for (int k = 0; k < 3; ++k) {
            ExponentVector m{1, -1, 0};
            if (k == 1) m = {0, 1, -1};
            if (k == 2) m = {1, 0, -1};
            f.factors.push_back({m, 1 + k, std::nullopt, 1 + (it + k) % 2});
        }
        Specialization s{coef(rng), coef(rng), coef(rng)};
        const auto vd = valuation_and_degree(f, s);
        std::int64_t rhs = 2 * specialize_monomial(f.leading_monomial, s);
        for (const auto& x : f.factors) rhs += x.multiplicity * x.degree * specialize_monomial(x.monomial, s);
        CHECK(vd.valuation + vd.degree == rhs);

        Specialization s3{3 * s[0], 3 * s[1], 3 * s[2]};
        CHECK(valuation_and_degree(f, s3) == ValuationDegree{3 * vd.valuation, 3 * vd.degree});

        CHECK(f.zero_sum_on_blocks({3}));
        const std::int64_t c = coef(rng);
        CHECK(valuation_and_degree(f, {c, c, c}) == ValuationDegree{0, 0});
    }
}
