#include <doctest.h>

#include <random>
#include <vector>

#include "wtab/barbasch_vogan.hpp"
#include "wtab/oracle.hpp"

#include "helpers.hpp"
#include "helpers_check.hpp"

using namespace wtab;
using namespace wtab::testutil;

namespace {

Weight wt(std::initializer_list<int> xs) { return Weight{hrow(xs)}; }

Weight wt2(std::initializer_list<int> twice) { return Weight{hrow2(twice)}; }

}  // namespace

TEST_CASE("single coordinate, both signs") {
    SUBCASE("positive stays put") {
        BvResult r = bv(wt({1}), LieType::C);
        CHECK(r.partition == part({1, 1}));
        CHECK(!r.very_even_ambiguous);
        CHECK(r.trace.q == part({1, 1}));
        CHECK(r.trace.r_list == std::vector<int>{0, 2, 3});
        CHECK(r.trace.s_list == std::vector<int>{0, 1});
        CHECK(r.trace.t_list == std::vector<int>{1});
        CHECK(r.trace.u == std::vector<int>{0, 1, 1});
        CHECK(r.trace.s_prime == std::vector<int>{0, 1});
        CHECK(r.trace.t_prime == std::vector<int>{1});
        CHECK(r.trace.r_prime == std::vector<int>{0, 2, 3});
        CHECK(r.trace.q_prime == part({1, 1}));
    }
    SUBCASE("negative collapses") {
        CHECK(bv(wt({-1}), LieType::C).partition == part({2}));
        CHECK(bv(wt({0}), LieType::C).partition == part({2}));
    }
    SUBCASE("marked zero in the other type") {
        CHECK(bv(wt({0}), LieType::D).partition == part({1, 1}));
        CHECK(bv(wt({-1}), LieType::D).partition == part({1, 1}));
        CHECK(bv(wt({1}), LieType::D).partition == part({1, 1}));
    }
}

TEST_CASE("two coordinates") {
    CHECK(bv(wt({0, 0}), LieType::D).partition == part({3, 1}));
    CHECK(bv(wt({2, -1}), LieType::D).partition == part({2, 2}));
    CHECK(bv(wt({2, -1}), LieType::C).partition == part({2, 2}));
    CHECK(bv(wt({0, 2}), LieType::D).partition == part({1, 1, 1, 1}));
    CHECK(bv(wt({1, 2}), LieType::C).partition == part({1, 1, 1, 1}));
    CHECK(bv(wt({0, 0}), LieType::C).partition == part({2, 2}));
}

TEST_CASE("ambiguity flag raised only for an all-even result in type D") {
    BvResult r = bv(wt2({1, 1}), LieType::D);  // (1/2, 1/2)
    CHECK(r.partition == part({2, 2}));
    CHECK(r.very_even_ambiguous);

    BvResult r2 = bv(wt({1, 1}), LieType::D);
    CHECK(r2.partition == part({2, 2}));
    CHECK(r2.very_even_ambiguous);

    CHECK(!bv(wt({0, 0}), LieType::D).very_even_ambiguous);  // (3,1) has odd parts
    CHECK(!bv(wt({2, -1}), LieType::C).very_even_ambiguous);  // not type D
}

TEST_CASE("symbol arithmetic") {
    Symbol s = symbol_of(part({1, 1}), LieType::C);
    CHECK(s.top == std::vector<int>{0, 1});
    CHECK(s.bottom == std::vector<int>{1});
    CHECK(s.content == std::vector<int>{0, 1, 1});

    Symbol s2 = symbol_of(part({2}), LieType::C);
    CHECK(s2.top == std::vector<int>{1});
    CHECK(s2.bottom.empty());

    Symbol s3 = symbol_of(part({1, 1}), LieType::D);
    CHECK(s3.top.size() + s3.bottom.size() == 2);  // even list length
}

TEST_CASE("input validation") {
    CHECK_FAILS_WITH(ErrorKind::NonIntegralWeight, bv(wt2({1}), LieType::C));
    CHECK_FAILS_WITH(ErrorKind::MixedParity, bv(Weight{{HalfInt(1), HalfInt::from_twice(1)}}, LieType::D));
    CHECK_FAILS_WITH(ErrorKind::SizeMismatch, bv(Weight{}, LieType::C));
}

TEST_CASE("agreement with the always-padded variant") {
    std::mt19937 rng(20240818);
    std::uniform_int_distribution<int> n_d(1, 4), val_d(-4, 4);
    for (int trial = 0; trial < 600; ++trial) {
        int n = n_d(rng);
        bool half = rng() % 2 == 1;
        Weight lambda;
        for (int i = 0; i < n; ++i) {
            int v = val_d(rng);
            lambda.coeffs.push_back(half ? HalfInt::from_twice(2 * v + (v >= 0 ? 1 : -1))
                                         : HalfInt(v));
        }
        LieType lt = half ? LieType::D : (rng() % 2 ? LieType::C : LieType::D);
        BvResult r = bv(lambda, lt);
        CHECK(r.partition == oracle::bv_with_step2a(lambda, lt));
        CHECK(r.partition.sum() == 2 * n);
        CHECK(is_orbit_partition(r.partition, lt));
    }
}
