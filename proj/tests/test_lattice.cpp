#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "treelab/lattice.hpp"
#include "treelab/model.hpp"

using namespace treelab;

TEST_CASE("refines") {
    SetPartition sigma = parse_partition("8/7/6/5,9/3/2,4", 9);
    SetPartition pi = parse_partition("8/5,6,9/3,7/2,4", 9);
    CHECK(refines(sigma, pi));
    CHECK_FALSE(refines(pi, sigma));
    CHECK(refines(pi, pi));
    CHECK_FALSE(refines(parse_partition("2,3/4", 4), parse_partition("2/3,4", 4)));
    CHECK_THROWS_AS(refines(SetPartition::finest(4), SetPartition::finest(5)),
                    GroundSetMismatch);
}

TEST_CASE("all_partitions matches Bell numbers and the placement oracle") {
    auto bell = oracles::bell_numbers(9);
    for (int n = 1; n <= 9; ++n) {
        long long count = 0;
        std::set<SetPartition> seen;
        for (const SetPartition& pi : all_partitions(n)) {
            ++count;
            CHECK(seen.insert(pi).second);  // no repeats
        }
        CHECK(count == bell[n - 1]);
    }
    // Same sets as recursive element placement, for small n.
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ground;
        for (int e = 2; e <= n; ++e) ground.push_back(e);
        std::set<SetPartition> expected;
        for (auto& blocks : oracles::partitions_of(ground))
            expected.insert(SetPartition(n, blocks));
        std::set<SetPartition> got;
        for (const SetPartition& pi : all_partitions(n)) got.insert(pi);
        CHECK(got == expected);
    }
}

TEST_CASE("coarsenings") {
    SetPartition one_block = SetPartition::coarsest(6);
    CHECK(coarsenings(one_block).to_vector() == std::vector<SetPartition>{one_block});

    CHECK(coarsenings(SetPartition::finest(4)).to_vector().size() == 5);  // Bell(3)

    auto bell = oracles::bell_numbers(8);
    for (int n = 1; n <= 7; ++n) {
        for (const SetPartition& sigma : all_partitions(n)) {
            auto ups = coarsenings(sigma).to_vector();
            CHECK(static_cast<long long>(ups.size()) == bell[sigma.block_count()]);
            if (n <= 6) {
                std::set<SetPartition> expected;
                for (const SetPartition& pi : all_partitions(n))
                    if (refines(sigma, pi)) expected.insert(pi);
                CHECK(std::set<SetPartition>(ups.begin(), ups.end()) == expected);
            }
        }
    }
}

TEST_CASE("covers") {
    SetPartition sigma = parse_partition("4,5/3/2", 5);
    auto cov = covers(sigma);
    std::set<SetPartition> got(cov.begin(), cov.end());
    std::set<SetPartition> expected{parse_partition("3,4,5/2", 5),
                                    parse_partition("2,4,5/3", 5),
                                    parse_partition("4,5/2,3", 5)};
    CHECK(got == expected);

    CHECK(covers(SetPartition::coarsest(5)).empty());
    CHECK(covers(parse_partition("4,5/2,3", 5)) ==
          std::vector<SetPartition>{SetPartition::coarsest(5)});

    for (const SetPartition& sigma6 : all_partitions(6)) {
        int k = sigma6.block_count();
        CHECK(static_cast<int>(covers(sigma6).size()) == k * (k - 1) / 2);
    }
}

TEST_CASE("refinement is a partial order on the whole lattice") {
    for (int n = 1; n <= 6; ++n) {
        auto all = all_partitions(n).to_vector();
        const int m = static_cast<int>(all.size());
        std::vector<std::vector<bool>> le(m, std::vector<bool>(m));
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) le[a][b] = refines(all[a], all[b]);
        for (int a = 0; a < m; ++a) {
            CHECK(le[a][a]);  // reflexive
            for (int b = 0; b < m; ++b) {
                if (a != b) CHECK_FALSE((le[a][b] && le[b][a]));  // antisymmetric
                if (!le[a][b]) continue;
                for (int c = 0; c < m; ++c)
                    if (le[b][c]) CHECK(le[a][c]);  // transitive
            }
        }
    }
}

TEST_CASE("mobius values") {
    SetPartition pi = parse_partition("8/5,6,9/3,7/2,4", 9);
    CHECK(mobius(pi, pi) == 1);

    // Interval of height one.
    SetPartition sigma = parse_partition("4,5/3/2", 5);
    for (const SetPartition& cover : covers(sigma)) CHECK(mobius(sigma, cover) == -1);

    CHECK(mobius(SetPartition::finest(4), SetPartition::coarsest(4)) == 2);
    CHECK(mobius(SetPartition::finest(5), SetPartition::coarsest(5)) == -6);

    CHECK_THROWS_AS(mobius(SetPartition::coarsest(4), SetPartition::finest(4)), OrderError);
}

TEST_CASE("mobius interval sums vanish") {
    for (int n = 1; n <= 6; ++n) {
        SetPartition top = SetPartition::coarsest(n);
        for (const SetPartition& sigma : all_partitions(n)) {
            if (sigma == top) continue;
            BigInt sum = 0;
            for (const SetPartition& pi : coarsenings(sigma)) sum += mobius(sigma, pi);
            CHECK(sum == 0);
        }
    }
}

TEST_CASE("stirling numbers") {
    for (int k = 1; k <= 8; ++k) {
        CHECK(stirling2(k, 1) == 1);
        CHECK(stirling2(k, k) == 1);
    }
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(3, 0) == 0);
    CHECK(stirling2(2, 5) == 0);
    CHECK(stirling2(4, 2) == 7);

    // Against the placement oracle.
    for (int k = 1; k <= 6; ++k) {
        std::vector<int> ground(k);
        for (int i = 0; i < k; ++i) ground[i] = i + 1;
        std::vector<long long> by_blocks(k + 1, 0);
        for (auto& blocks : oracles::partitions_of(ground)) ++by_blocks[blocks.size()];
        for (int j = 1; j <= k; ++j) CHECK(stirling2(k, j) == by_blocks[j]);
    }
}

TEST_CASE("stirling identity") {
    for (int n = 1; n <= 12; ++n) {
        auto [lhs, rhs] = stirling_identity_check(1, n);
        CHECK(lhs == n);
        CHECK(rhs == n);
    }
    auto [lhs45, rhs45] = stirling_identity_check(4, 5);
    CHECK(lhs45 == 625);
    CHECK(rhs45 == 625);
    for (int k = 1; k <= 8; ++k)
        for (int n = 1; n <= 12; ++n) {
            auto [lhs, rhs] = stirling_identity_check(k, n);
            CHECK(lhs == rhs);
        }
}
