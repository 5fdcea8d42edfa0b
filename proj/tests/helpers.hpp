#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "wtab/frame.hpp"
#include "wtab/table.hpp"
#include "wtab/word.hpp"

namespace wtab::testutil {

inline std::vector<HalfInt> hrow(std::initializer_list<int> xs) {
    std::vector<HalfInt> out;
    for (int x : xs) out.push_back(HalfInt(x));
    return out;
}

// Entries given as twice their value, for half-integral rows.
inline std::vector<HalfInt> hrow2(std::initializer_list<int> twice) {
    std::vector<HalfInt> out;
    for (int t : twice) out.push_back(HalfInt::from_twice(t));
    return out;
}

inline std::vector<std::vector<HalfInt>> hrows(
    std::initializer_list<std::initializer_list<int>> rs) {
    std::vector<std::vector<HalfInt>> out;
    for (auto r : rs) out.push_back(hrow(r));
    return out;
}

inline Word iword(std::initializer_list<int> xs) { return Word{hrow(xs), std::nullopt}; }

inline Partition part(std::initializer_list<int> xs) { return Partition{std::vector<int>(xs)}; }

// Rows top to bottom as (offset, length) pairs.
inline Frame frame_of(std::initializer_list<std::pair<int, int>> rows) {
    Frame F;
    for (auto [off, len] : rows) F.rows.push_back(FrameRow{off, len});
    return F;
}

// Left-justified plain table from row lengths implied by the entries.
inline Table plain(std::initializer_list<std::initializer_list<int>> rs) {
    Frame F;
    auto rows = hrows(rs);
    for (const auto& r : rows) F.rows.push_back(FrameRow{0, static_cast<int>(r.size())});
    return make_table(F, rows);
}

// s-table on the symmetric pyramid of p.
inline STable on_pyramid(std::initializer_list<int> p,
                         std::initializer_list<std::initializer_list<int>> rs) {
    return make_stable(symmetric_pyramid(part(p)), hrows(rs));
}

}  // namespace wtab::testutil
