#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wtab/frame.hpp"
#include "wtab/word.hpp"

namespace wtab {

// A filled frame. STable adds the skew-symmetry invariant; same representation.
struct Table {
    Frame frame;
    std::vector<std::vector<HalfInt>> rows;

    int row_count() const { return static_cast<int>(rows.size()); }
    int box_count() const;
    bool operator==(const Table&) const = default;

    // Canonical serialization; used for dedup and deterministic ordering.
    std::string key() const;
};

using STable = Table;

Table make_table(Frame F, std::vector<std::vector<HalfInt>> rows);

bool is_skew_symmetric(const Table& A);

// Throws InvalidFrame / SizeMismatch if rows don't fit F, InvalidFrame if the
// frame is not an s-frame, and MixedParity on mixed entry parity.
STable make_stable(Frame F, std::vector<std::vector<HalfInt>> rows);

// True when all entries are half-integral; false when integral; throws
// MixedParity otherwise. Empty tables count as integral.
bool is_half_integral(const Table& A);

// coord(F): boxes filled with -n..-1,1..n; blocks of the reading-order fill of
// the symmetric pyramid are redistributed to F's rows by length, equal lengths
// resolved by handing lower rows the greater block.
STable coordinate_table(const Frame& F);

// Entries top to bottom, left to right. No tiebreak attached.
Word word_of(const Table& A);

// a_i = entry of A at the box holding -i in coord(F).
Weight weight_of(const STable& A);

Table left_justify(const Table& A);

Table sort_rows(const Table& A);

// Rows -r..-1 only (boxes above the centre).
Table upper_half(const STable& A);

std::vector<HalfInt> row_multiset(const Table& A, int row_index);

std::vector<HalfInt> entry_multiset(const Table& A);

}  // namespace wtab
