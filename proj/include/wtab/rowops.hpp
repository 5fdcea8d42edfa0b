#pragma once

#include <optional>

#include "wtab/table.hpp"

namespace wtab {

// s_i: exchange rows i and i+1 (1-based from the top) of a row-sorted table.
// Returns nullopt when the defining inequalities fail.
std::optional<Table> swap_rows(const Table& A, int i);

// s-bar_i = s_i s_{-i} on a row-sorted s-table, 1 <= i < r.
std::optional<STable> swap_rows_sym(const STable& A, int i);

enum class ColumnStrictMode { plain, typeD_zero };

// Columns strictly decreasing downward, gaps included. typeD_zero also accepts
// exactly one column whose two middle-row boxes are both zero, all other
// adjacent pairs (those zeros against their outside neighbours included) strict.
bool is_column_strict(const Table& A, ColumnStrictMode mode = ColumnStrictMode::plain);

// Column-strict member of the row-equivalence class, or nullopt. Requires a
// justified convex frame.
std::optional<Table> find_column_strict(const Table& A);

// Symmetric variant: all rows of one length parity, result skew-symmetric.
std::optional<STable> find_column_strict_sym(const STable& A);

// l(A) row equivalent to column strict; type D also admits the middle zero
// column variant.
bool is_jrecs(const STable& A, LieType lt);

// The column-strict arrangement witnessing is_jrecs, on l(A)'s frame.
std::optional<Table> find_jrecs_witness(const STable& A, LieType lt);

}  // namespace wtab
