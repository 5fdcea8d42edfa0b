#pragma once

#include <optional>
#include <string>

#include "wtab/table.hpp"

namespace wtab {

struct ParsedTable {
    STable table;
    Partition partition;
    LieType lt = LieType::C;
};

// JSON ({"type","partition","rows"[,"offsets"]}) or an ASCII grid where each
// line is one row: each leading '.' token is one empty box, remaining tokens
// are entries (integers or odd/2 fractions).
ParsedTable parse_table(const std::string& text, std::optional<LieType> lt_hint = std::nullopt);

// Same input formats without the symmetry checks; rows default to left
// justified when no offsets are given.
Table parse_plain_table(const std::string& text);

enum class TableStyle { json, grid };

std::string format_table(const STable& A, TableStyle style, LieType lt, const Partition& p);

// Grid body only: rows with dot padding, plus the origin marker line.
std::string format_grid(const Table& A);

}  // namespace wtab
