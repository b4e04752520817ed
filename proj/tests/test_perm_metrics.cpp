#include "doctest.h"

#include "chanspace/errors.hpp"
#include "chanspace/oracle.hpp"
#include "chanspace/perm_metrics.hpp"
#include "chanspace/ranking.hpp"
#include "chanspace/rng.hpp"
#include "chanspace/sampling.hpp"

#include <algorithm>
#include <numeric>

using namespace chanspace;

namespace {

Ranking from_ranks1(std::vector<int> one_based) {
    for (int& r : one_based) --r;
    return Ranking::from_ranks(std::move(one_based));
}

std::vector<Ranking> symmetric_group(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<Ranking> out;
    do {
        out.push_back(Ranking::from_rank_order(order));
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

}  // namespace

TEST_CASE("agreement exponents") {
    Ranking id4 = Ranking::identity(4);
    for (int i = 0; i < 4; ++i) CHECK(agreement_exponent(id4, i) == 3 - i);

    // adjacent swap of inputs r, r+1: the swapped lower input keeps
    // everything past r+1 below it
    for (int n = 2; n <= 12; ++n)
        for (int r = 0; r + 1 < n; ++r)
            CHECK(agreement_exponent(adjacent_transposition(n, r), r) == n - r - 2);

    Ranking sigma = from_ranks1({1, 3, 2});
    CHECK(agreement_exponents(sigma) == std::vector<int>{2, 0, 0});

    CHECK_THROWS_AS(agreement_exponent(id4, 4), IndexOutOfRange);
    CHECK_THROWS_AS(agreement_exponent(id4, -1), IndexOutOfRange);
}

TEST_CASE("agreement count of a single ranking") {
    for (int n : {1, 2, 3, 6}) {
        AgreementCount s = agreement_count(Ranking::identity(n));
        CHECK(s.value == nonempty_code_count(n));
    }
    CHECK(agreement_count(from_ranks1({2, 1, 3})).value == 5);
    CHECK(agreement_count(from_ranks1({3, 2, 1})).value == 3);
}

TEST_CASE("agreement counts stay exact far past 64 bits") {
    AgreementCount s = agreement_count(Ranking::identity(70));
    CHECK(s.value == pow2(70) - 1);
    CHECK(s.probability() == 1);
}

TEST_CASE("pairwise agreement count") {
    auto s4 = symmetric_group(4);
    for (const auto& sigma : s4)
        CHECK(agreement_count(sigma, sigma).value == 15);

    CHECK(agreement_count(from_ranks1({2, 3, 1}), from_ranks1({3, 2, 1})).value == 6);

    // composing two transpositions gives the 3-cycle
    Ranking product = compose(Ranking::from_rank_order({1, 0, 2}),
                              Ranking::from_rank_order({2, 1, 0}));
    CHECK(product.rank_order() == std::vector<int>{2, 0, 1});
    CHECK(agreement_count(product).value == 4);
}

TEST_CASE("left invariance and symmetry") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        int n = static_cast<int>(rng.between(2, 8));
        Ranking sigma = random_ranking(n, rng);
        Ranking phi = random_ranking(n, rng);
        Ranking tau = random_ranking(n, rng);
        Int base = agreement_count(sigma, phi).value;
        CHECK(agreement_count(compose(tau, sigma), compose(tau, phi)).value == base);
        CHECK(agreement_count(phi, sigma).value == base);
        CHECK(agreement_count(sigma.inverse()).value == agreement_count(sigma).value);
    }
}

TEST_CASE("agreement bounds with equality only on the diagonal") {
    auto s3 = symmetric_group(3);
    for (const auto& sigma : s3)
        for (const auto& phi : s3) {
            Int s = agreement_count(sigma, phi).value;
            CHECK(s >= 3);
            CHECK(s <= 7);
            CHECK((s == 7) == (sigma == phi));
        }
}

TEST_CASE("agreement probability") {
    Ranking id2 = Ranking::identity(2);
    Ranking swap2 = Ranking::from_rank_order({1, 0});
    CHECK(agreement_probability(id2, id2) == 1);
    CHECK(agreement_probability(id2, swap2) == Rat(2, 3));
    CHECK(agreement_probability(Ranking::identity(3), from_ranks1({2, 1, 3})) == Rat(5, 7));
}

TEST_CASE("decoding distance between rankings") {
    Ranking id3 = Ranking::identity(3);
    CHECK(decoding_distance(id3, id3) == 0);
    CHECK(decoding_distance(Ranking::identity(2), Ranking::from_rank_order({1, 0})) ==
          Rat(1, 3));
    CHECK(decoding_distance(id3, from_ranks1({3, 2, 1})) == Rat(4, 7));

    // identity of indiscernibles and symmetry, exhaustively for n = 3
    auto s3 = symmetric_group(3);
    for (const auto& sigma : s3)
        for (const auto& phi : s3) {
            Rat d = decoding_distance(sigma, phi);
            CHECK((d == 0) == (sigma == phi));
            CHECK(decoding_distance(phi, sigma) == d);
        }
}

TEST_CASE("adjacent swap delta") {
    Ranking id3 = Ranking::identity(3);
    CHECK(agreement_count(id3).value == 7);
    CHECK(adjacent_swap_delta(id3, 0) == -2);
    CHECK(agreement_count(compose(adjacent_transposition(3, 0), id3)).value == 5);

    // applying the same swap twice restores the count
    for (int n = 2; n <= 5; ++n)
        for (int r = 0; r + 1 < n; ++r) {
            Ranking tau = adjacent_transposition(n, r);
            CHECK(adjacent_swap_delta(tau, r) ==
                  nonempty_code_count(n) - agreement_count(tau).value);
        }

    // formula equals the direct difference, exhaustively for n = 4
    for (const auto& sigma : symmetric_group(4))
        for (int r = 0; r + 1 < 4; ++r) {
            Ranking swapped = compose(adjacent_transposition(4, r), sigma);
            Int direct = agreement_count(swapped).value - agreement_count(sigma).value;
            CHECK(adjacent_swap_delta(sigma, r) == direct);
            bool ascending = sigma.ranks()[r] < sigma.ranks()[r + 1];
            CHECK((adjacent_swap_delta(sigma, r) < 0) == ascending);
        }

    CHECK_THROWS_AS(adjacent_swap_delta(id3, 2), IndexOutOfRange);
}

TEST_CASE("kendall tau") {
    Ranking id3 = Ranking::identity(3);
    CHECK(kendall_tau(id3, id3) == 0);
    CHECK(kendall_tau(id3, from_ranks1({3, 2, 1})) == 3);
    CHECK(kendall_tau(id3, from_ranks1({2, 1, 3})) == 1);

    // minimum adjacent-swap count obeys the +/-1 recurrence
    SplitMix64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int n = static_cast<int>(rng.between(2, 7));
        Ranking sigma = random_ranking(n, rng);
        int r = static_cast<int>(rng.below(n - 1));
        Ranking id = Ranking::identity(n);
        long long before = static_cast<long long>(kendall_tau(id, sigma));
        long long after =
            static_cast<long long>(kendall_tau(id, compose(adjacent_transposition(n, r), sigma)));
        CHECK(after - before == (sigma.ranks()[r] < sigma.ranks()[r + 1] ? 1 : -1));
    }

    CHECK_THROWS_AS(kendall_tau(id3, Ranking::identity(4)), DimensionMismatch);
}

TEST_CASE("closed-form size cap") {
    CHECK_THROWS_AS(agreement_count(Ranking::identity(kMaxClosedFormSize + 1)), TooLarge);
    // the cap itself is fine (quadratic, a few ms)
    AgreementCount s = agreement_count(Ranking::identity(1024));
    CHECK(s.value == pow2(1024) - 1);
}

TEST_CASE("agreement count matches the enumeration oracle on random pairs") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        int n = static_cast<int>(rng.between(2, 10));
        Ranking sigma = random_ranking(n, rng);
        Ranking phi = random_ranking(n, rng);
        CHECK(agreement_count(sigma, phi).value == oracle_agreement_count(sigma, phi).value);
    }
}
