#include "doctest.h"

#include <random>

#include "reeslift/rational.hpp"
#include "reeslift/schur.hpp"

using namespace reeslift;

TEST_CASE("transpose") {
    CHECK(Partition{4, 3, 1}.transpose() == Partition{3, 2, 2, 1});
    CHECK(Partition{5}.transpose() == Partition{1, 1, 1, 1, 1});
    CHECK(Partition{}.transpose() == Partition{});
    for (int size = 0; size <= 10; ++size)
        for (const Partition& lam : partitions_of(size, size, size))
            CHECK(lam.transpose().transpose() == lam);
}

TEST_CASE("partition validation and normalization") {
    CHECK(Partition{3, 2, 0, 0} == Partition{3, 2});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK_THROWS_AS(DominantWeight({0, 1}), std::invalid_argument);
    CHECK_NOTHROW(DominantWeight({2, 0, -3}));
}

TEST_CASE("componentwise dominance") {
    CHECK(dominates(Partition{2, 2}, Partition{2, 1}));
    CHECK(!dominates(Partition{3, 0}, Partition{2, 1}));  // not majorization
    CHECK(dominates(Partition{2, 1}, Partition{2, 1}));

    const auto sample = partitions_of(5, 5, 5);
    for (const auto& a : sample) {
        CHECK(dominates(a, a));
        for (const auto& b : sample) {
            if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
            for (const auto& c : sample)
                if (dominates(a, b) && dominates(b, c)) CHECK(dominates(a, c));
        }
    }
}

TEST_CASE("schur dimensions") {
    CHECK(schur_dim(Partition{1}, 3) == 3);
    for (int n = 1; n <= 4; ++n)
        for (int t = 0; t <= 5; ++t)
            CHECK(schur_dim(Partition{t}, n) == binomial(n + t - 1, t));  // Sym^t
    CHECK(schur_dim(Partition{2, 1}, 2) == 2);
    CHECK(schur_dim(Partition{2, 1}, 2) == ssyt_count(Partition{2, 1}, 2));
    CHECK_THROWS_AS(schur_dim(Partition{1, 1, 1}, 2), std::invalid_argument);
    // negative dominant weights are fine
    CHECK(schur_dim(DominantWeight{0, -1}) == 2);
}

TEST_CASE("ssyt oracle") {
    CHECK(ssyt_count(Partition{1}, 4) == 4);
    CHECK(ssyt_count(Partition{1, 1, 1}, 2) == 0);
    CHECK(ssyt_count(Partition{2, 2}, 3) == 6);
    CHECK(ssyt_count(Partition{}, 3) == 1);
}

TEST_CASE("schur_dim equals ssyt_count at desk scale") {
    for (int n = 1; n <= 4; ++n)
        for (int size = 0; size <= 6; ++size)
            for (const Partition& lam : partitions_of(size, n, size))
                CHECK(schur_dim(lam, n) == ssyt_count(lam, n));
}

TEST_CASE("cauchy dimension count") {
    CHECK(cauchy_dim(3, 2, 0) == 1);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= m; ++n) CHECK(cauchy_dim(m, n, 1) == m * n);
    CHECK(cauchy_dim(3, 2, 3) == binomial(8, 3));
    CHECK(cauchy_dim(3, 2, 3) == 56);
    for (int m = 1; m <= 12; ++m)
        for (int n = 1; n <= m && m * n <= 12; ++n)
            for (int r = 0; r <= 6; ++r)
                CHECK(cauchy_dim(m, n, r) == binomial(static_cast<long>(m) * n + r - 1, r));
}

TEST_CASE("capped Schur sums") {
    for (int r = 1; r <= 4; ++r) CHECK(schur_sum_dim(3, 2, 2, r) == 0);  // t = n
    CHECK(schur_sum_dim(3, 2, 3, 1) == 6);
    CHECK(schur_sum_dim(3, 2, 3, 2) == 3);
    CHECK_THROWS_AS(schur_sum_dim(2, 2, 3, 1), std::invalid_argument);
}

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(4, 2, 4).size() == 3);  // (4),(3,1),(2,2)
    CHECK(partitions_of(0, 3, 3).size() == 1);
    CHECK(partitions_of(3, 3, 0).empty());
    CHECK_THROWS_AS(partitions_of(13, 13, 13), std::invalid_argument);
}

TEST_CASE("compositions enumeration") {
    CHECK(compositions(2, 3).size() == 6);
    CHECK(compositions(0, 3).size() == 1);
    CHECK(compositions(0, 0).size() == 1);
    CHECK(compositions(2, 0).empty());
}
