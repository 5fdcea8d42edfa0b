#pragma once

#include "wtab/partition.hpp"
#include "wtab/word.hpp"

namespace wtab {

// Insertion tableau; rows[0] is the bottom (longest) row. Rows weakly increase
// left to right, columns strictly decrease downward.
struct Tableau {
    std::vector<std::vector<HalfInt>> rows;

    Partition shape() const;
    // Entries as the tableau is read on the page: top row first.
    Word reading_word() const;
    bool operator==(const Tableau&) const = default;
};

Tableau rs(const Word& w);

Partition rs_shape(const Word& w);

// Max total length of k disjoint weakly increasing subsequences.
int greene_increasing(const Word& w, int k);

// Max total length of k disjoint strictly decreasing subsequences.
int greene_decreasing(const Word& w, int k);

// BFS over Knuth moves; words longer than max_len are rejected (BoundExceeded).
bool knuth_equivalent(const Word& w1, const Word& w2, int max_len = 12);

}  // namespace wtab
