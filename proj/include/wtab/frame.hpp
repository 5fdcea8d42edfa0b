#pragma once

#include <map>
#include <vector>

#include "wtab/partition.hpp"

namespace wtab {

// Horizontal geometry is in half-box units; a box spans 2 units. offset is the
// x-coordinate of the row's leftmost edge.
struct FrameRow {
    int offset = 0;
    int len = 0;
    bool operator==(const FrameRow&) const = default;
};

// Rows listed top to bottom.
struct Frame {
    std::vector<FrameRow> rows;

    int row_count() const { return static_cast<int>(rows.size()); }
    int box_count() const;
    bool operator==(const Frame&) const = default;
};

struct FramePredicates {
    bool justified = false;
    bool left_justified = false;
    bool preconvex = false;
    bool convex = false;
};

FramePredicates frame_predicates(const Frame& F);

// Every pair of vertically adjacent rows shares an edge and each row is nonempty.
bool frame_connected(const Frame& F);

// Central symmetry about the origin with an even number of rows.
bool is_sframe(const Frame& F);

Partition part_of(const Frame& F);

// The s-frame of p: row +-i has the i-th halved part, longest rows in the
// middle, every row centred on the origin.
Frame symmetric_pyramid(const Partition& p);

// Row labels of an s-frame: -r..-1,1..r top to bottom.
int row_label_of_index(int index, int r);
int row_index_of_label(int label, int r);

struct ColumnBox {
    int row = 0;  // 0-based top index
    int idx = 0;  // box position within the row
};

// Boxes grouped by x-position, keyed by left edge; requires a justified frame.
std::map<int, std::vector<ColumnBox>> columns_of(const Frame& F);

}  // namespace wtab
