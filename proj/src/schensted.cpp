#include "wtab/schensted.hpp"

#include <algorithm>
#include <set>

#include "wtab/errors.hpp"

namespace wtab {

namespace {

// Marked zeros order below/above plain entries of the same value.
struct Cell {
    HalfInt v;
    int tag = 0;  // -1, 0, +1

    auto operator<=>(const Cell&) const = default;
};

std::vector<Cell> tagged(const Word& w) {
    std::vector<Cell> cells;
    cells.reserve(w.values.size());
    for (int i = 0; i < w.size(); ++i) cells.push_back(Cell{w.values[i], 0});
    if (w.d_zero_tiebreak) {
        auto [a, b] = *w.d_zero_tiebreak;
        if (a < 0 || b < 0 || a >= w.size() || b >= w.size() || a == b)
            fail(ErrorKind::BadIndex, "tiebreak positions out of range");
        if (!w.values[a].is_zero() || !w.values[b].is_zero())
            fail(ErrorKind::BadIndex, "tiebreak positions must hold zero");
        cells[a].tag = +1;
        cells[b].tag = -1;
    }
    return cells;
}

}  // namespace

Partition Tableau::shape() const {
    std::vector<int> parts;
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    return Partition{std::move(parts)};
}

Word Tableau::reading_word() const {
    Word w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        for (HalfInt v : *it) w.values.push_back(v);
    return w;
}

Tableau rs(const Word& w) {
    std::vector<std::vector<Cell>> rows;
    for (Cell cur : tagged(w)) {
        for (size_t level = 0;; ++level) {
            if (level == rows.size()) rows.emplace_back();
            auto& row = rows[level];
            auto it = std::upper_bound(row.begin(), row.end(), cur);
            if (it == row.end()) {
                row.push_back(cur);
                break;
            }
            std::swap(cur, *it);
        }
    }
    Tableau t;
    t.rows.reserve(rows.size());
    for (const auto& row : rows) {
        std::vector<HalfInt> out;
        out.reserve(row.size());
        for (const Cell& c : row) out.push_back(c.v);
        t.rows.push_back(std::move(out));
    }
    return t;
}

Partition rs_shape(const Word& w) { return rs(w).shape(); }

int greene_increasing(const Word& w, int k) {
    if (k <= 0) return 0;
    Partition p = rs_shape(w);
    int total = 0;
    for (int i = 0; i < k && i < p.length(); ++i) total += p.parts[i];
    return total;
}

int greene_decreasing(const Word& w, int k) {
    if (k <= 0) return 0;
    Partition p = partition_transpose(rs_shape(w));
    int total = 0;
    for (int i = 0; i < k && i < p.length(); ++i) total += p.parts[i];
    return total;
}

bool knuth_equivalent(const Word& w1, const Word& w2, int max_len) {
    if (w1.size() != w2.size()) fail(ErrorKind::LengthMismatch, "words differ in length");
    if (w1.size() > max_len) fail(ErrorKind::BoundExceeded, "word too long for Knuth search");

    auto raw = [](const Word& w) {
        std::vector<int> v;
        v.reserve(w.values.size());
        for (HalfInt h : w.values) v.push_back(h.t);
        return v;
    };
    std::vector<int> a = raw(w1), b = raw(w2);
    {
        auto sa = a, sb = b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    if (a == b) return true;

    std::set<std::vector<int>> seen{a};
    std::vector<std::vector<int>> frontier{a};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier) {
            for (size_t i = 0; i + 2 < w.size(); ++i) {
                int x = w[i], y = w[i + 1], z = w[i + 2];
                // xzy ~ zxy for x <= y < z: swap the first two.
                if (std::min(x, y) <= z && z < std::max(x, y)) {
                    auto m = w;
                    std::swap(m[i], m[i + 1]);
                    if (m == b) return true;
                    if (seen.insert(m).second) next.push_back(m);
                }
                // yxz ~ yzx for x < y <= z: swap the last two.
                if (std::min(y, z) < x && x <= std::max(y, z)) {
                    auto m = w;
                    std::swap(m[i + 1], m[i + 2]);
                    if (m == b) return true;
                    if (seen.insert(m).second) next.push_back(m);
                }
            }
        }
        frontier = std::move(next);
    }
    return false;
}

}  // namespace wtab
