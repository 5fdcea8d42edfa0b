#include <doctest.h>

#include <algorithm>

#include "wtab/oracle.hpp"
#include "wtab/rowops.hpp"
#include "wtab/schensted.hpp"

#include "helpers.hpp"
#include "helpers_check.hpp"

using namespace wtab;
using namespace wtab::testutil;

TEST_CASE("adjacent row exchange, shorter row above") {
    Table A = plain({{6, 7}, {3, 5}, {1, 2, 4}});
    auto B = swap_rows(A, 2);
    REQUIRE(B.has_value());
    CHECK(B->rows == hrows({{6, 7}, {1, 3, 5}, {2, 4}}));
    CHECK(B->frame.rows == frame_of({{0, 2}, {0, 3}, {0, 2}}).rows);
    CHECK(rs_shape(word_of(*B)) == rs_shape(word_of(A)));

    SUBCASE("the exchange inverts itself") {
        auto back = swap_rows(*B, 2);
        REQUIRE(back.has_value());
        CHECK(*back == A);
    }
}

TEST_CASE("adjacent row exchange, equal lengths") {
    Table A = plain({{6, 7}, {3, 5}, {1, 2, 4}});
    auto B = swap_rows(A, 1);
    REQUIRE(B.has_value());
    CHECK(*B == A);  // strict domination leaves the table unchanged

    CHECK(!swap_rows(plain({{1}, {2}}), 1).has_value());
    CHECK(swap_rows(plain({{2}, {1}}), 1).has_value());
}

TEST_CASE("exchange undefined when the entry conditions fail") {
    // Short-above case: the lower row's leading entries must sit strictly
    // below the upper row entrywise.
    CHECK(!swap_rows(plain({{1, 5}, {2, 3, 4}}), 1).has_value());

    auto B = swap_rows(plain({{3, 5}, {1, 2, 6}}), 1);
    REQUIRE(B.has_value());
    CHECK(B->rows == hrows({{3, 5, 6}, {1, 2}}));
}

TEST_CASE("exchange rejects unsorted rows and bad indices") {
    CHECK_FAILS_WITH(ErrorKind::NotRowSorted, swap_rows(plain({{2, 1}, {3, 4}}), 1));
    Table A = plain({{1, 2}, {3, 4}});
    CHECK_FAILS_WITH(ErrorKind::BadIndex, swap_rows(A, 0));
    CHECK_FAILS_WITH(ErrorKind::BadIndex, swap_rows(A, 2));
}

TEST_CASE("symmetric exchange on twelve boxes") {
    STable A = on_pyramid({4, 4, 2, 2},
                          {{2, 5}, {1, 3, 4, 6}, {-6, -4, -3, -1}, {-5, -2}});
    auto B = swap_rows_sym(A, 1);
    REQUIRE(B.has_value());
    CHECK(B->rows == hrows({{2, 3, 5, 6}, {1, 4}, {-4, -1}, {-6, -5, -3, -2}}));
    CHECK(B->frame.rows == frame_of({{-4, 4}, {-2, 2}, {-2, 2}, {-4, 4}}).rows);
    CHECK(is_skew_symmetric(*B));
    CHECK(rs_shape(word_of(*B)) == rs_shape(word_of(A)));

    auto back = swap_rows_sym(*B, 1);
    REQUIRE(back.has_value());
    CHECK(*back == A);
}

TEST_CASE("symmetric exchange with shared entries across the centre") {
    STable A = on_pyramid({4, 4, 2, 2},
                          {{-7, 3}, {-8, -4, 2, 5}, {-5, -2, 4, 8}, {-3, 7}});
    auto B = swap_rows_sym(A, 1);
    REQUIRE(B.has_value());
    CHECK(B->rows == hrows({{-7, -4, 3, 5}, {-8, 2}, {-2, 8}, {-5, -3, 4, 7}}));
    CHECK(is_skew_symmetric(*B));
}

TEST_CASE("column strictness") {
    SUBCASE("gaps still compare") {
        CHECK(is_column_strict(plain({{5, 3}, {4}, {2, 1}})));
        CHECK(!is_column_strict(plain({{5, 1}, {4}, {2, 3}})));
    }
    SUBCASE("zero column variant") {
        STable Z = on_pyramid({1, 1}, {{0}, {0}});
        CHECK(!is_column_strict(Z));
        CHECK(is_column_strict(Z, ColumnStrictMode::typeD_zero));

        STable T = on_pyramid({1, 1, 1, 1}, {{2}, {0}, {0}, {-2}});
        CHECK(is_column_strict(T, ColumnStrictMode::typeD_zero));
        CHECK(!is_column_strict(T));

        // Two zero columns are too many.
        STable Z2 = on_pyramid({2, 2}, {{0, 0}, {0, 0}});
        CHECK(!is_column_strict(Z2, ColumnStrictMode::typeD_zero));

        // The zero pair must still beat its outside neighbours.
        STable bad = on_pyramid({1, 1, 1, 1}, {{0}, {2}, {-2}, {0}});
        CHECK(!is_column_strict(bad, ColumnStrictMode::typeD_zero));
    }
}

TEST_CASE("search for a column strict arrangement") {
    SUBCASE("four-row run, step by step outcome") {
        Table A = plain({{6, 9}, {2, 3, 5, 8}, {1, 7}, {4}});
        auto B = find_column_strict(A);
        REQUIRE(B.has_value());
        CHECK(B->rows == hrows({{9, 6}, {8, 2, 5, 3}, {7, 1}, {4}}));
        CHECK(is_column_strict(*B));
        for (int i = 0; i < A.row_count(); ++i) {
            auto got = row_multiset(*B, i);
            CHECK(got == row_multiset(A, i));
        }
    }
    SUBCASE("absence matches the exhaustive search") {
        Table A = plain({{1, 5}, {4}, {2, 3}});
        CHECK(!find_column_strict(A).has_value());
        CHECK(!oracle::brute_recs(A));
    }
    SUBCASE("presence matches the exhaustive search") {
        Table A = plain({{4, 6}, {5}, {1, 2, 3}});
        auto B = find_column_strict(A);
        REQUIRE(B.has_value());
        CHECK(is_column_strict(*B));
        CHECK(oracle::brute_recs(A));
    }
    SUBCASE("frames without nested columns are rejected") {
        Table A = make_table(frame_of({{0, 2}, {4, 2}}), hrows({{1, 2}, {3, 4}}));
        CHECK_FAILS_WITH(ErrorKind::NotConvex, find_column_strict(A));
    }
    SUBCASE("a vertical gap blocks every arrangement here") {
        Table A = make_table(frame_of({{0, 2}, {0, 1}, {0, 2}}),
                             hrows({{1, 2}, {3}, {4, 5}}));
        CHECK(!find_column_strict(A).has_value());
    }
}

TEST_CASE("symmetric search keeps skew symmetry") {
    SUBCASE("already strict") {
        STable A = on_pyramid({1, 1}, {{1}, {-1}});
        auto B = find_column_strict_sym(A);
        REQUIRE(B.has_value());
        CHECK(B->rows == A.rows);
    }
    SUBCASE("twelve boxes with a witness") {
        STable A = on_pyramid({4, 4, 2, 2},
                              {{2, 5}, {1, 3, 4, 6}, {-6, -4, -3, -1}, {-5, -2}});
        auto B = find_column_strict_sym(A);
        REQUIRE(B.has_value());
        CHECK(is_column_strict(*B));
        CHECK(is_skew_symmetric(*B));
        for (int i = 0; i < A.row_count(); ++i) {
            auto got = row_multiset(*B, i);
            CHECK(got == row_multiset(A, i));
        }
    }
    SUBCASE("no witness") {
        STable A = on_pyramid({4, 4, 2, 2},
                              {{-7, 3}, {-8, -4, 2, 5}, {-5, -2, 4, 8}, {-3, 7}});
        CHECK(!find_column_strict_sym(A).has_value());
    }
}

TEST_CASE("justified rearrangement membership") {
    STable topneg = on_pyramid({1, 1}, {{-1}, {1}});
    CHECK(!is_jrecs(topneg, LieType::C));
    CHECK(!is_jrecs(topneg, LieType::D));

    STable toppos = on_pyramid({1, 1}, {{1}, {-1}});
    CHECK(is_jrecs(toppos, LieType::C));
    CHECK(is_jrecs(toppos, LieType::D));

    STable zeros = on_pyramid({1, 1}, {{0}, {0}});
    CHECK(!is_jrecs(zeros, LieType::C));
    CHECK(is_jrecs(zeros, LieType::D));

    STable big = on_pyramid({4, 4, 2, 2},
                            {{2, 5}, {1, 3, 4, 6}, {-6, -4, -3, -1}, {-5, -2}});
    CHECK(is_jrecs(big, LieType::C));

    STable ex = on_pyramid({4, 4, 2, 2},
                           {{-7, 3}, {-8, -4, 2, 5}, {-5, -2, 4, 8}, {-3, 7}});
    CHECK(!is_jrecs(ex, LieType::C));
}

TEST_CASE("rearrangement witness") {
    SUBCASE("zero column") {
        STable zeros = on_pyramid({1, 1}, {{0}, {0}});
        auto W = find_jrecs_witness(zeros, LieType::D);
        REQUIRE(W.has_value());
        CHECK(W->rows == hrows({{0}, {0}}));
        CHECK(!find_jrecs_witness(zeros, LieType::C).has_value());
    }
    SUBCASE("twelve boxes") {
        STable big = on_pyramid({4, 4, 2, 2},
                                {{2, 5}, {1, 3, 4, 6}, {-6, -4, -3, -1}, {-5, -2}});
        auto W = find_jrecs_witness(big, LieType::C);
        REQUIRE(W.has_value());
        CHECK(is_column_strict(*W));
        for (const FrameRow& row : W->frame.rows) CHECK(row.offset == 0);
        for (int i = 0; i < big.row_count(); ++i) {
            auto got = row_multiset(*W, i);
            CHECK(got == row_multiset(big, i));
        }
    }
}
