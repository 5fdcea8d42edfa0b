#include "wtab/frame.hpp"

#include <algorithm>

namespace wtab {

int Frame::box_count() const {
    int n = 0;
    for (const auto& r : rows) n += r.len;
    return n;
}

static bool extent_nested(const FrameRow& a, const FrameRow& b) {
    int a0 = a.offset, a1 = a.offset + 2 * a.len;
    int b0 = b.offset, b1 = b.offset + 2 * b.len;
    return (a0 >= b0 && a1 <= b1) || (b0 >= a0 && b1 <= a1);
}

static std::map<int, std::vector<ColumnBox>> columns_raw(const Frame& F) {
    std::map<int, std::vector<ColumnBox>> cols;
    for (int i = 0; i < F.row_count(); ++i)
        for (int j = 0; j < F.rows[i].len; ++j)
            cols[F.rows[i].offset + 2 * j].push_back(ColumnBox{i, j});
    return cols;
}

static bool offsets_aligned(const Frame& F) {
    if (F.rows.empty()) return true;
    int par = ((F.rows[0].offset % 2) + 2) % 2;
    for (const auto& r : F.rows)
        if (((r.offset % 2) + 2) % 2 != par) return false;
    return true;
}

FramePredicates frame_predicates(const Frame& F) {
    if (F.rows.empty()) return FramePredicates{true, true, true, true};
    FramePredicates out;
    out.justified = offsets_aligned(F);

    int min_off = F.rows[0].offset;
    for (const auto& r : F.rows) min_off = std::min(min_off, r.offset);
    out.left_justified =
        std::all_of(F.rows.begin(), F.rows.end(), [&](const FrameRow& r) { return r.offset == min_off; });

    out.preconvex = true;
    for (size_t i = 0; i < F.rows.size(); ++i)
        for (size_t j = i + 1; j < F.rows.size(); ++j)
            if (!extent_nested(F.rows[i], F.rows[j])) out.preconvex = false;

    out.convex = out.preconvex && out.justified;
    if (out.convex) {
        for (const auto& [x, col] : columns_raw(F)) {
            (void)x;
            for (size_t i = 1; i < col.size(); ++i)
                if (col[i].row != col[i - 1].row + 1) out.convex = false;
        }
    }
    return out;
}

bool frame_connected(const Frame& F) {
    for (const auto& r : F.rows)
        if (r.len <= 0) return false;
    for (size_t i = 1; i < F.rows.size(); ++i) {
        const auto& a = F.rows[i - 1];
        const auto& b = F.rows[i];
        int lo = std::max(a.offset, b.offset);
        int hi = std::min(a.offset + 2 * a.len, b.offset + 2 * b.len);
        if (hi - lo <= 0) return false;
    }
    return true;
}

bool is_sframe(const Frame& F) {
    int m = F.row_count();
    if (m == 0 || m % 2 != 0) return false;
    for (int i = 0; i < m; ++i) {
        const auto& a = F.rows[i];
        const auto& b = F.rows[m - 1 - i];
        if (a.len != b.len) return false;
        if (b.offset != -(a.offset + 2 * a.len)) return false;
    }
    return true;
}

Partition part_of(const Frame& F) {
    std::vector<int> lens;
    lens.reserve(F.rows.size());
    for (const auto& r : F.rows) lens.push_back(r.len);
    return make_partition(std::move(lens));
}

Frame symmetric_pyramid(const Partition& p) {
    if (p.parts.empty()) fail(ErrorKind::InvalidForType, "empty partition");
    std::map<int, int> mult;
    for (int x : p.parts) mult[x]++;
    for (auto [part, m] : mult)
        if (m % 2 != 0)
            fail(ErrorKind::NotEvenMultiplicity,
                 "part " + std::to_string(part) + " has multiplicity " + std::to_string(m));
    std::vector<int> halved;  // P_1 >= ... >= P_r, the pair lengths
    for (size_t i = 1; i < p.parts.size(); i += 2) halved.push_back(p.parts[i]);
    int r = static_cast<int>(halved.size());
    Frame F;
    F.rows.resize(2 * r);
    for (int i = 1; i <= r; ++i) {
        FrameRow row{-halved[i - 1], halved[i - 1]};
        F.rows[r - i] = row;      // label -i
        F.rows[r + i - 1] = row;  // label i
    }
    return F;
}

int row_label_of_index(int index, int r) { return index < r ? index - r : index - r + 1; }

int row_index_of_label(int label, int r) { return label < 0 ? label + r : label + r - 1; }

std::map<int, std::vector<ColumnBox>> columns_of(const Frame& F) {
    if (!offsets_aligned(F)) fail(ErrorKind::NotJustified, "columns need a justified frame");
    return columns_raw(F);
}

}  // namespace wtab
