#include <doctest.h>

#include <algorithm>
#include <vector>

#include "wtab/frame.hpp"
#include "wtab/partition.hpp"
#include "wtab/table.hpp"
#include "wtab/word.hpp"

#include "helpers.hpp"
#include "helpers_check.hpp"

using namespace wtab;
using namespace wtab::testutil;

TEST_CASE("half-integer arithmetic and formatting") {
    CHECK(HalfInt(3).t == 6);
    CHECK(HalfInt::from_twice(3).str() == "3/2");
    CHECK(HalfInt::from_twice(-3).str() == "-3/2");
    CHECK(HalfInt(2).str() == "2");
    CHECK(HalfInt(-1).str() == "-1");
    CHECK(HalfInt(0).is_zero());
    CHECK(HalfInt(4).is_integral());
    CHECK(!HalfInt::from_twice(1).is_integral());
    CHECK(HalfInt::from_twice(1) + HalfInt::from_twice(1) == HalfInt(1));
    CHECK(HalfInt(2) - HalfInt(3) == HalfInt(-1));
    CHECK(-HalfInt::from_twice(5) == HalfInt::from_twice(-5));
    CHECK(HalfInt::from_twice(-1) < HalfInt(0));
    CHECK(HalfInt(0) < HalfInt::from_twice(1));
    CHECK(HalfInt::from_twice(1) < HalfInt(1));
}

TEST_CASE("partition validation") {
    SUBCASE("even multiplicity accepted, input order free") {
        ValidatedPartition v = validate_partition({2, 4, 2, 4}, LieType::C);
        CHECK(v.p == part({4, 4, 2, 2}));
        CHECK(v.very_even);  // all parts even
    }
    SUBCASE("type D flags the all-even case") {
        CHECK(validate_partition({2, 2}, LieType::D).very_even);
        CHECK(!validate_partition({1, 1}, LieType::D).very_even);
        CHECK(!validate_partition({3, 3, 2, 2}, LieType::D).very_even);
    }
    SUBCASE("odd multiplicity rejected") {
        CHECK_FAILS_WITH(ErrorKind::NotEvenMultiplicity, validate_partition({3, 2, 2}, LieType::C));
        CHECK_FAILS_WITH(ErrorKind::NotEvenMultiplicity, validate_partition({1}, LieType::D));
    }
}

TEST_CASE("transpose and dominance") {
    CHECK(partition_transpose(part({3, 2, 1})) == part({3, 2, 1}));
    CHECK(partition_transpose(part({4, 4, 2, 2})) == part({4, 4, 2, 2}));
    CHECK(partition_transpose(part({3, 1})) == part({2, 1, 1}));
    CHECK(partition_transpose(part({5, 2})) == part({2, 2, 1, 1, 1}));
    CHECK(partition_transpose(part({})) == part({}));

    CHECK(dominance_leq(part({2, 2}), part({3, 1})));
    CHECK(!dominance_leq(part({3, 1}), part({2, 2})));
    CHECK(dominance_leq(part({3, 1}), part({3, 1})));
    // Incomparable pair.
    CHECK(!dominance_leq(part({3, 3}), part({4, 1, 1})));
    CHECK(!dominance_leq(part({4, 1, 1}), part({3, 3})));

    SUBCASE("transpose reverses dominance") {
        // All partitions of 6.
        std::vector<Partition> ps;
        std::vector<int> acc;
        auto gen = [&](auto&& self, int rest, int maxpart) -> void {
            if (rest == 0) {
                ps.push_back(Partition{acc});
                return;
            }
            for (int k = std::min(rest, maxpart); k >= 1; --k) {
                acc.push_back(k);
                self(self, rest - k, k);
                acc.pop_back();
            }
        };
        gen(gen, 6, 6);
        CHECK(ps.size() == 11);
        for (const Partition& p : ps)
            for (const Partition& q : ps)
                CHECK(dominance_leq(p, q) ==
                      dominance_leq(partition_transpose(q), partition_transpose(p)));
    }
}

TEST_CASE("orbit partition membership") {
    CHECK(is_orbit_partition(part({4, 4, 2, 2}), LieType::C));
    CHECK(is_orbit_partition(part({6, 4, 2}), LieType::C));
    CHECK(!is_orbit_partition(part({3, 1}), LieType::C));
    CHECK(is_orbit_partition(part({5, 5, 1, 1}), LieType::C));
    CHECK(is_orbit_partition(part({3, 1}), LieType::D));
    CHECK(is_orbit_partition(part({2, 2, 1}), LieType::D));
    CHECK(!is_orbit_partition(part({4, 2}), LieType::D));
    CHECK(is_orbit_partition(part({1, 1}), LieType::D));
}

TEST_CASE("symmetric pyramid geometry") {
    Frame F = symmetric_pyramid(part({4, 4, 2, 2}));
    CHECK(F.rows == frame_of({{-2, 2}, {-4, 4}, {-4, 4}, {-2, 2}}).rows);
    CHECK(F.box_count() == 12);
    CHECK(is_sframe(F));
    CHECK(part_of(F) == part({4, 4, 2, 2}));
    CHECK(frame_connected(F));

    FramePredicates fp = frame_predicates(F);
    CHECK(fp.justified);
    CHECK(fp.preconvex);
    CHECK(fp.convex);
    CHECK(!fp.left_justified);

    CHECK(symmetric_pyramid(part({1, 1})).rows == frame_of({{-1, 1}, {-1, 1}}).rows);
    CHECK(symmetric_pyramid(part({3, 3, 1, 1})).rows ==
          frame_of({{-1, 1}, {-3, 3}, {-3, 3}, {-1, 1}}).rows);
}

TEST_CASE("frame predicates discriminate") {
    SUBCASE("misaligned offsets are not justified") {
        FramePredicates fp = frame_predicates(frame_of({{0, 1}, {1, 1}}));
        CHECK(!fp.justified);
        CHECK(!fp.convex);
    }
    SUBCASE("disjoint extents are not preconvex") {
        FramePredicates fp = frame_predicates(frame_of({{0, 2}, {4, 2}}));
        CHECK(!fp.preconvex);
        CHECK(!fp.convex);
    }
    SUBCASE("a column with a vertical gap breaks convexity") {
        FramePredicates fp = frame_predicates(frame_of({{0, 2}, {0, 1}, {0, 2}}));
        CHECK(fp.justified);
        CHECK(fp.preconvex);
        CHECK(!fp.convex);
    }
    SUBCASE("left-justified stack") {
        FramePredicates fp = frame_predicates(frame_of({{0, 2}, {0, 4}, {0, 4}, {0, 2}}));
        CHECK(fp.left_justified);
        CHECK(fp.convex);
    }
    SUBCASE("touching rows without overlap are disconnected") {
        CHECK(!frame_connected(frame_of({{0, 2}, {4, 2}})));
        CHECK(frame_connected(frame_of({{0, 2}, {1, 2}})));
    }
}

TEST_CASE("row labels") {
    CHECK(row_label_of_index(0, 2) == -2);
    CHECK(row_label_of_index(1, 2) == -1);
    CHECK(row_label_of_index(2, 2) == 1);
    CHECK(row_label_of_index(3, 2) == 2);
    for (int label : {-2, -1, 1, 2})
        CHECK(row_label_of_index(row_index_of_label(label, 2), 2) == label);
}

TEST_CASE("columns of a justified frame") {
    auto cols = columns_of(symmetric_pyramid(part({2, 2})));
    REQUIRE(cols.size() == 2);
    REQUIRE(cols.count(-2) == 1);
    REQUIRE(cols.count(0) == 1);
    CHECK(cols[-2].size() == 2);
    CHECK(cols[-2][0].row == 0);
    CHECK(cols[-2][1].row == 1);
    CHECK(cols[0][0].idx == 1);
}

TEST_CASE("coordinate tables") {
    SUBCASE("pyramid fill is plain reading order") {
        STable C = coordinate_table(symmetric_pyramid(part({4, 4, 2, 2})));
        CHECK(C.rows == hrows({{-6, -5}, {-4, -3, -2, -1}, {1, 2, 3, 4}, {5, 6}}));
    }
    SUBCASE("equal-length rows hand the lower row the greater block") {
        Frame F = frame_of({{-3, 3}, {-2, 2}, {-2, 2}, {-3, 3}});
        STable C = coordinate_table(F);
        CHECK(C.rows == hrows({{-3, -2, -1}, {-5, -4}, {4, 5}, {1, 2, 3}}));
        CHECK(is_skew_symmetric(C));
    }
}

TEST_CASE("table basics") {
    Table A = plain({{2, 3}, {5}, {1, 4, 6}});
    CHECK(A.box_count() == 6);
    CHECK(word_of(A).values == hrow({2, 3, 5, 1, 4, 6}));
    CHECK(!word_of(A).d_zero_tiebreak.has_value());

    Table B = plain({{6, 4}, {5}, {1, 2, 3}});
    CHECK(sort_rows(B).rows == hrows({{4, 6}, {5}, {1, 2, 3}}));

    STable P = coordinate_table(symmetric_pyramid(part({4, 4, 2, 2})));
    CHECK(word_of(P).values == hrow({-6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6}));

    CHECK(A.key() == plain({{2, 3}, {5}, {1, 4, 6}}).key());
    CHECK(A.key() != B.key());
}

TEST_CASE("skew symmetry and parity") {
    STable E = on_pyramid({4, 4, 2, 2},
                          {{-7, 3}, {-8, -4, 2, 5}, {-5, -2, 4, 8}, {-3, 7}});
    CHECK(is_skew_symmetric(E));
    CHECK(!is_half_integral(E));

    STable H = make_stable(symmetric_pyramid(part({1, 1})),
                           {hrow2({1}), hrow2({-1})});
    CHECK(is_skew_symmetric(H));
    CHECK(is_half_integral(H));

    Table mixed = plain({{1}, {0}});
    mixed.rows[0][0] = HalfInt::from_twice(1);
    CHECK_FAILS_WITH(ErrorKind::MixedParity, is_half_integral(mixed));

    Table notskew = make_table(symmetric_pyramid(part({2, 2})), hrows({{1, 2}, {-2, 1}}));
    CHECK(!is_skew_symmetric(notskew));
    CHECK_FAILS_WITH(ErrorKind::InvalidFrame,
                     make_stable(symmetric_pyramid(part({2, 2})), hrows({{1, 2}, {-2, 1}})));
    CHECK(is_skew_symmetric(on_pyramid({2, 2}, {{1, 2}, {-2, -1}})));
}

TEST_CASE("stable construction rejects bad input") {
    CHECK_FAILS_WITH(ErrorKind::SizeMismatch,
                     make_stable(symmetric_pyramid(part({2, 2})), hrows({{1, 2}, {-2}})));
    // Frame without central symmetry.
    CHECK_FAILS_WITH(ErrorKind::InvalidFrame,
                     make_stable(frame_of({{0, 2}, {0, 1}}), hrows({{1, 2}, {-1}})));
}

TEST_CASE("row and entry multisets are sorted copies") {
    Table B = plain({{6, 4}, {5}, {1, 2, 3}});
    CHECK(row_multiset(B, 0) == hrow({4, 6}));
    CHECK(entry_multiset(B) == hrow({1, 2, 3, 4, 5, 6}));
    CHECK(B.rows[0] == hrow({6, 4}));  // untouched
}

TEST_CASE("left justify and upper half") {
    STable E = on_pyramid({4, 4, 2, 2},
                          {{-7, 3}, {-8, -4, 2, 5}, {-5, -2, 4, 8}, {-3, 7}});
    Table L = left_justify(E);
    for (const FrameRow& row : L.frame.rows) CHECK(row.offset == 0);
    CHECK(L.rows == E.rows);

    Table U = upper_half(E);
    CHECK(U.rows == hrows({{-7, 3}, {-8, -4, 2, 5}}));
    CHECK(U.frame.rows == frame_of({{-2, 2}, {-4, 4}}).rows);
}

TEST_CASE("weight of a table reads off the coordinate boxes") {
    SUBCASE("single box") {
        STable A = on_pyramid({1, 1}, {{1}, {-1}});
        CHECK(weight_of(A).coeffs == hrow({1}));
    }
    SUBCASE("twelve boxes") {
        STable A = on_pyramid({4, 4, 2, 2},
                              {{2, 4}, {-5, -1, 3, 6}, {-6, -3, 1, 5}, {-4, -2}});
        CHECK(weight_of(A).coeffs == hrow({6, 3, -1, -5, 4, 2}));
    }
}

TEST_CASE("weight words") {
    SUBCASE("doubling") {
        Word w = weight_word(Weight{hrow({1})}, LieType::C);
        CHECK(w.values == hrow({1, -1}));
        CHECK(!w.d_zero_tiebreak.has_value());

        Word w2 = weight_word(Weight{hrow({3, -1, 2})}, LieType::C);
        CHECK(w2.values == hrow({2, -1, 3, -3, 1, -2}));
    }
    SUBCASE("a lone zero coefficient is marked in type D only") {
        Word w = weight_word(Weight{hrow({0, 2})}, LieType::D);
        CHECK(w.values == hrow({2, 0, 0, -2}));
        REQUIRE(w.d_zero_tiebreak.has_value());
        CHECK(*w.d_zero_tiebreak == std::pair<int, int>{1, 2});

        CHECK(!weight_word(Weight{hrow({0, 2})}, LieType::C).d_zero_tiebreak.has_value());
        CHECK(!weight_word(Weight{hrow({0, 0})}, LieType::D).d_zero_tiebreak.has_value());
        Word w1 = weight_word(Weight{hrow({0})}, LieType::D);
        REQUIRE(w1.d_zero_tiebreak.has_value());
        CHECK(*w1.d_zero_tiebreak == std::pair<int, int>{0, 1});
    }
}
