#include "doctest.h"
#include "qgr/combinatorics.hpp"

using namespace qgr;

TEST_CASE("index set enumeration") {
    SUBCASE("(1,3)") {
        auto all = enumerate_index_sets(1, 3);
        REQUIRE(all.size() == 3);
        CHECK(all[0].first == std::vector<int>{1});
        CHECK(all[1].first == std::vector<int>{2});
        CHECK(all[2].first == std::vector<int>{3});
    }
    SUBCASE("(0,n)") {
        auto all = enumerate_index_sets(0, 4);
        REQUIRE(all.size() == 1);
        CHECK(all[0].first.empty());
    }
    SUBCASE("(2,4)") {
        auto all = enumerate_index_sets(2, 4);
        REQUIRE(all.size() == 6);
        CHECK(all[0].first == std::vector<int>{1, 2});
        CHECK(all[1].first == std::vector<int>{1, 3});
        CHECK(all[2].first == std::vector<int>{1, 4});
        CHECK(all[3].first == std::vector<int>{2, 3});
        CHECK(all[4].first == std::vector<int>{2, 4});
        CHECK(all[5].first == std::vector<int>{3, 4});
    }
    SUBCASE("counts match binomials") {
        for (int n = 0; n <= 6; ++n)
            for (int k = 0; k <= n; ++k)
                CHECK(static_cast<long>(enumerate_index_sets(k, n).size()) == binomial(n, k));
    }
}

TEST_CASE("label conversions") {
    SUBCASE("(1,3): lambda=(1) <-> sigma=(213) <-> I={2}") {
        Partition lam({1});
        Perm s = sigma_of_partition(lam, 1, 3);
        CHECK(s.values == std::vector<int>{2, 1, 3});
        IndexSet I = index_of_partition(lam, 1, 3);
        CHECK(I.first == std::vector<int>{2});
        CHECK(partition_of_index(I) == lam);
    }
    SUBCASE("zero partition gives the identity and I_min") {
        for (int n = 1; n <= 5; ++n)
            for (int k = 0; k <= n; ++k) {
                Partition zerop{};
                CHECK(sigma_of_partition(zerop, k, n) == Perm::identity(n));
                auto I = index_of_partition(zerop, k, n);
                std::vector<int> imin;
                for (int i = 1; i <= k; ++i) imin.push_back(i);
                CHECK(I.first == imin);
            }
    }
    SUBCASE("(2,3): lambda=(1,1) -> I={2,3}") {
        CHECK(index_of_partition(Partition({1, 1}), 2, 3).first == std::vector<int>{2, 3});
    }
    SUBCASE("all six round trips for n <= 6") {
        for (int n = 1; n <= 6; ++n)
            for (int k = 0; k <= n; ++k)
                for (const auto& I : enumerate_index_sets(k, n)) {
                    Perm s = sigma_of(I);
                    CHECK(s.is_grassmannian(k));
                    CHECK(index_of_sigma(s, k) == I);
                    Partition lam = partition_of_sigma(s, k);
                    CHECK(lam.fits(k, n - k));
                    CHECK(sigma_of_partition(lam, k, n) == s);
                    CHECK(index_of_partition(lam, k, n) == I);
                    CHECK(partition_of_index(I) == lam);
                }
    }
    SUBCASE("lattice-path rule agrees with the arithmetic rule") {
        for (int n = 1; n <= 6; ++n)
            for (int k = 0; k <= n; ++k)
                for (const auto& I : enumerate_index_sets(k, n)) {
                    Partition lam = partition_of_index(I);
                    CHECK(sigma_of_partition_lattice(lam, k, n) == sigma_of_partition(lam, k, n));
                }
    }
}

TEST_CASE("permutation tuples") {
    SUBCASE("sigma0 reverses") {
        CHECK(tuple_images(Perm::longest(3)) == std::vector<int>{3, 2, 1});
    }
    SUBCASE("identity") {
        CHECK(tuple_images(Perm::identity(3)) == std::vector<int>{1, 2, 3});
    }
    SUBCASE("sigma_I for I={1,3}, n=3 gives (z1, z3, z2)") {
        IndexSet I{2, 3, {1, 3}};
        CHECK(tuple_images(sigma_of(I)) == std::vector<int>{1, 3, 2});
    }
    SUBCASE("composition law") {
        Perm a{{2, 3, 1}}, b{{3, 1, 2}};
        Perm c = a.compose(b);
        for (int i = 1; i <= 3; ++i) CHECK(c(i) == a(b(i)));
        CHECK(a.compose(a.inverse()) == Perm::identity(3));
    }
}

TEST_CASE("partition helpers") {
    Partition lam({2, 1});
    CHECK(lam.size() == 3);
    CHECK(lam.complement(2, 2) == Partition({1, 0}));
    CHECK(lam.conjugate() == Partition({2, 1}));
    CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
    CHECK(Partition({0, 0}).parts.empty());  // trailing zeros normalized away
}

TEST_CASE("reduced words rebuild the permutation") {
    for (int n = 2; n <= 5; ++n) {
        // spot check a few permutations including the longest one
        std::vector<Perm> ps{Perm::longest(n), Perm::identity(n)};
        Perm cyc = Perm::identity(n);
        std::rotate(cyc.values.begin(), cyc.values.begin() + 1, cyc.values.end());
        ps.push_back(cyc);
        for (const auto& p : ps) {
            auto word = p.reduced_word();
            Perm direct = Perm::identity(n);
            for (int a : word) {
                Perm s = Perm::identity(n);
                std::swap(s.values[a - 1], s.values[a]);
                direct = direct.compose(s);
            }
            CHECK(direct == p);
        }
    }
}
