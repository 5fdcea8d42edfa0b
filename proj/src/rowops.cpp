#include "wtab/rowops.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace wtab {

namespace {

bool row_sorted(const std::vector<HalfInt>& row) { return std::is_sorted(row.begin(), row.end()); }

// Largest-sum subset e of d with e_j < c_j, or nullopt. Scans c from the top,
// taking the largest remaining d-value below each bound.
std::optional<std::vector<HalfInt>> pick_below(const std::vector<HalfInt>& c,
                                               const std::vector<HalfInt>& d) {
    size_t s = c.size();
    std::vector<bool> used(d.size(), false);
    std::vector<HalfInt> e(s);
    for (size_t j = s; j-- > 0;) {
        int found = -1;
        for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
            if (!used[i] && d[i] < c[j]) {
                found = i;
                break;
            }
        if (found < 0) return std::nullopt;
        used[found] = true;
        e[j] = d[found];
    }
    std::sort(e.begin(), e.end());
    return e;
}

// Smallest-sum subset e of c with e_i > d_i, or nullopt.
std::optional<std::vector<HalfInt>> pick_above(const std::vector<HalfInt>& c,
                                               const std::vector<HalfInt>& d) {
    size_t t = d.size();
    std::vector<bool> used(c.size(), false);
    std::vector<HalfInt> e(t);
    for (size_t i = 0; i < t; ++i) {
        int found = -1;
        for (size_t j = 0; j < c.size(); ++j)
            if (!used[j] && c[j] > d[i]) {
                found = static_cast<int>(j);
                break;
            }
        if (found < 0) return std::nullopt;
        used[found] = true;
        e[i] = c[found];
    }
    std::sort(e.begin(), e.end());
    return e;
}

std::vector<HalfInt> remainder_plus(const std::vector<HalfInt>& pool,
                                    const std::vector<HalfInt>& taken,
                                    const std::vector<HalfInt>& extra) {
    std::vector<HalfInt> rest;
    size_t ti = 0;
    for (HalfInt v : pool) {
        if (ti < taken.size() && taken[ti] == v) {
            ++ti;
            continue;
        }
        rest.push_back(v);
    }
    rest.insert(rest.end(), extra.begin(), extra.end());
    std::sort(rest.begin(), rest.end());
    return rest;
}

}  // namespace

std::optional<Table> swap_rows(const Table& A, int i) {
    if (i < 1 || i + 1 > A.row_count()) fail(ErrorKind::BadIndex, "no rows " + std::to_string(i) + "," + std::to_string(i + 1));
    const auto& c = A.rows[i - 1];
    const auto& d = A.rows[i];
    if (!row_sorted(c) || !row_sorted(d)) fail(ErrorKind::NotRowSorted, "swap needs weakly increasing rows");
    size_t s = c.size(), t = d.size();

    std::vector<HalfInt> new_upper, new_lower;
    if (s < t) {
        for (size_t j = 0; j < s; ++j)
            if (!(d[j] < c[j])) return std::nullopt;
        auto e = pick_below(c, d);
        if (!e) return std::nullopt;
        new_lower = *e;
        new_upper = remainder_plus(d, *e, c);
    } else if (s > t) {
        for (size_t k = 1; k <= t; ++k)
            if (!(d[t - k] < c[s - k])) return std::nullopt;
        auto e = pick_above(c, d);
        if (!e) return std::nullopt;
        new_upper = *e;
        new_lower = remainder_plus(c, *e, d);
    } else {
        for (size_t j = 0; j < s; ++j)
            if (!(d[j] < c[j])) return std::nullopt;
        new_upper = c;
        new_lower = d;
    }

    Table B = A;
    std::swap(B.frame.rows[i - 1], B.frame.rows[i]);
    B.rows[i - 1] = std::move(new_upper);
    B.rows[i] = std::move(new_lower);
    return B;
}

std::optional<STable> swap_rows_sym(const STable& A, int i) {
    int r = A.row_count() / 2;
    if (A.row_count() % 2 != 0) fail(ErrorKind::InvalidFrame, "s-table needs an even row count");
    if (i < 1 || i >= r) fail(ErrorKind::BadIndex, "sym swap index " + std::to_string(i));
    auto lower = swap_rows(A, r + i);
    if (!lower) return std::nullopt;
    auto both = swap_rows(*lower, r - i);
    if (!both) return std::nullopt;
    return both;
}

bool is_column_strict(const Table& A, ColumnStrictMode mode) {
    auto cols = columns_of(A.frame);  // throws NotJustified
    int m = A.row_count();
    int bad = 0;
    bool bad_is_middle_zero = false;
    for (const auto& [x, col] : cols) {
        (void)x;
        for (size_t i = 1; i < col.size(); ++i) {
            HalfInt upper = A.rows[col[i - 1].row][col[i - 1].idx];
            HalfInt lower = A.rows[col[i].row][col[i].idx];
            if (upper > lower) continue;
            bad++;
            bad_is_middle_zero = upper.is_zero() && lower.is_zero() && m % 2 == 0 &&
                                 col[i - 1].row == m / 2 - 1 && col[i].row == m / 2;
        }
    }
    if (bad == 0) return true;
    return mode == ColumnStrictMode::typeD_zero && bad == 1 && bad_is_middle_zero;
}

std::optional<Table> find_column_strict(const Table& A) {
    FramePredicates fp = frame_predicates(A.frame);
    if (!fp.justified || !fp.preconvex)
        fail(ErrorKind::NotConvex, "search needs nested, aligned columns");
    auto cols = columns_of(A.frame);

    // Geometry lookups: column membership and static above-counts per box.
    int m = A.row_count();
    std::vector<std::vector<int>> above(m), below_exists(m);
    for (int i = 0; i < m; ++i) {
        above[i].assign(A.frame.rows[i].len, 0);
        below_exists[i].assign(A.frame.rows[i].len, 0);
    }
    for (const auto& [x, col] : cols) {
        (void)x;
        for (size_t i = 0; i < col.size(); ++i) {
            above[col[i].row][col[i].idx] = static_cast<int>(i);
            if (i + 1 < col.size()) below_exists[col[i].row][col[i].idx] = 1;
        }
    }
    auto below_of = [&](int row, int idx) {
        int x = A.frame.rows[row].offset + 2 * idx;
        int nrow = row + 1;
        if (nrow >= m) return std::pair<int, int>{-1, -1};
        int off = A.frame.rows[nrow].offset;
        int nidx = (x - off) / 2;
        if (x < off || nidx >= A.frame.rows[nrow].len) return std::pair<int, int>{-1, -1};
        return std::pair<int, int>{nrow, nidx};
    };

    struct Item {
        HalfInt v;
        int row;
    };
    std::vector<Item> items;
    for (int i = 0; i < m; ++i)
        for (HalfInt v : A.rows[i]) items.push_back(Item{v, i});
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
        if (a.v != b.v) return a.v < b.v;
        return a.row > b.row;
    });

    std::vector<std::vector<bool>> filled(m);
    std::vector<std::vector<HalfInt>> out(m);
    for (int i = 0; i < m; ++i) {
        filled[i].assign(A.frame.rows[i].len, false);
        out[i].resize(A.frame.rows[i].len);
    }

    for (const Item& it : items) {
        int best = -1, best_above = -1;
        for (int idx = 0; idx < A.frame.rows[it.row].len; ++idx) {
            if (filled[it.row][idx]) continue;
            auto [brow, bidx] = below_of(it.row, idx);
            if (brow >= 0 && !filled[brow][bidx]) continue;
            if (above[it.row][idx] >= best_above) {  // rightmost wins ties
                best_above = above[it.row][idx];
                best = idx;
            }
        }
        if (best < 0) return std::nullopt;
        filled[it.row][best] = true;
        out[it.row][best] = it.v;
    }
    Table B = make_table(A.frame, std::move(out));
    if (!is_column_strict(B)) return std::nullopt;  // off the convex domain
    return B;
}

std::optional<STable> find_column_strict_sym(const STable& A) {
    int m = A.row_count();
    if (m % 2 != 0 || !is_sframe(A.frame)) fail(ErrorKind::InvalidFrame, "needs an s-frame");
    int par = A.frame.rows[0].len % 2;
    for (const auto& r : A.frame.rows)
        if (r.len % 2 != par) fail(ErrorKind::MixedRowParity, "row lengths of mixed parity");

    auto cols = columns_of(A.frame);
    std::vector<std::vector<int>> above(m);
    std::vector<std::vector<int>> empties_below_static(m);
    for (int i = 0; i < m; ++i) {
        above[i].assign(A.frame.rows[i].len, 0);
        empties_below_static[i].assign(A.frame.rows[i].len, 0);
    }
    for (const auto& [x, col] : cols) {
        (void)x;
        for (size_t i = 0; i < col.size(); ++i)
            above[col[i].row][col[i].idx] = static_cast<int>(i);
    }
    auto neighbour = [&](int row, int idx, int drow) {
        int x = A.frame.rows[row].offset + 2 * idx;
        int nrow = row + drow;
        if (nrow < 0 || nrow >= m) return std::pair<int, int>{-1, -1};
        int off = A.frame.rows[nrow].offset;
        int nidx = (x - off) / 2;
        if (x < off || x % 2 != off % 2 || nidx >= A.frame.rows[nrow].len)
            return std::pair<int, int>{-1, -1};
        return std::pair<int, int>{nrow, nidx};
    };

    std::vector<std::vector<bool>> filled(m);
    std::vector<std::vector<HalfInt>> out(m);
    for (int i = 0; i < m; ++i) {
        filled[i].assign(A.frame.rows[i].len, false);
        out[i].resize(A.frame.rows[i].len);
    }
    auto empties_below = [&](int row, int idx) {
        int count = 0;
        auto [r2, i2] = neighbour(row, idx, +1);
        while (r2 >= 0) {
            if (!filled[r2][i2]) count++;
            auto nxt = neighbour(r2, i2, +1);
            r2 = nxt.first;
            i2 = nxt.second;
        }
        return count;
    };

    auto place_normal = [&](HalfInt v, int row) {
        int best = -1, best_above = -1;
        for (int idx = 0; idx < A.frame.rows[row].len; ++idx) {
            if (filled[row][idx]) continue;
            auto [brow, bidx] = neighbour(row, idx, +1);
            if (brow >= 0 && !filled[brow][bidx]) continue;
            if (above[row][idx] >= best_above) {
                best_above = above[row][idx];
                best = idx;
            }
        }
        if (best < 0) return false;
        filled[row][best] = true;
        out[row][best] = v;
        return true;
    };
    auto place_dual = [&](HalfInt v, int row) {
        int best = -1, best_below = -1;
        for (int idx = A.frame.rows[row].len - 1; idx >= 0; --idx) {  // leftmost wins ties
            if (filled[row][idx]) continue;
            auto [arow, aidx] = neighbour(row, idx, -1);
            if (arow >= 0 && !filled[arow][aidx]) continue;
            int eb = empties_below(row, idx);
            if (eb >= best_below) {
                best_below = eb;
                best = idx;
            }
        }
        if (best < 0) return false;
        filled[row][best] = true;
        out[row][best] = v;
        return true;
    };

    auto greedy = [&]() -> std::optional<STable> {
        struct Occ {
            HalfInt v;
            int row;
        };
        std::vector<Occ> positives;
        std::vector<int> zero_count(m, 0);
        for (int i = 0; i < m; ++i)
            for (HalfInt v : A.rows[i]) {
                if (v > HalfInt(0)) positives.push_back(Occ{v, i});
                else if (v.is_zero()) zero_count[i]++;
            }
        std::stable_sort(positives.begin(), positives.end(), [](const Occ& a, const Occ& b) {
            if (a.v != b.v) return a.v > b.v;
            return a.row < b.row;
        });

        for (const Occ& oc : positives) {
            int mirror_row = m - 1 - oc.row;
            if (!place_normal(-oc.v, mirror_row)) return std::nullopt;
            if (!place_dual(oc.v, oc.row)) return std::nullopt;
        }
        // Zeros last, by mirror pairs: the lower-row member by the normal
        // rule, its partner dually.
        for (int i = m - 1; i >= m / 2; --i)
            while (zero_count[i] > 0) {
                int mirror_row = m - 1 - i;
                if (zero_count[mirror_row] == 0) return std::nullopt;
                zero_count[i]--;
                zero_count[mirror_row]--;
                if (!place_normal(HalfInt(0), i)) return std::nullopt;
                if (!place_dual(HalfInt(0), mirror_row)) return std::nullopt;
            }
        for (int i = 0; i < m; ++i)
            if (zero_count[i] != 0) return std::nullopt;

        Table B = make_table(A.frame, out);
        if (!is_skew_symmetric(B) || !is_column_strict(B)) return std::nullopt;
        return B;
    };
    if (auto found = greedy()) return found;

    // Complete search over skew-symmetric arrangements: the upper half
    // determines the lower half.
    std::vector<std::vector<HalfInt>> upper(m / 2);
    for (int i = 0; i < m / 2; ++i) {
        upper[i] = A.rows[i];
        std::sort(upper[i].begin(), upper[i].end());
    }
    std::vector<std::vector<HalfInt>> cand(m);
    std::function<std::optional<STable>(int)> descend = [&](int row) -> std::optional<STable> {
        if (row == m / 2) {
            Table B = make_table(A.frame, cand);
            if (is_column_strict(B)) return B;
            return std::nullopt;
        }
        auto perm = upper[row];
        do {
            cand[row] = perm;
            auto& mirror = cand[m - 1 - row];
            mirror.assign(perm.rbegin(), perm.rend());
            for (auto& v : mirror) v = -v;
            if (auto found = descend(row + 1)) return found;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return std::nullopt;
    };
    return descend(0);
}

namespace {

// Backtracking search over column fillings of a left-justified row class.
// exempt, when set, pins zeros at (rows m/2-1 and m/2, column x) whose mutual
// comparison is waived.
struct ClassSearch {
    std::vector<std::vector<HalfInt>> pools;  // remaining entries per row, sorted
    std::vector<int> lens;
    int m;
    std::optional<int> exempt_col;

    std::optional<std::vector<std::vector<HalfInt>>> out;

    bool solve() {
        int width = 0;
        for (int l : lens) width = std::max(width, l);
        std::vector<std::vector<HalfInt>> acc(m);
        for (int i = 0; i < m; ++i) acc[i].resize(lens[i]);
        return fill_column(0, width, acc);
    }

    bool fill_column(int x, int width, std::vector<std::vector<HalfInt>>& acc) {
        if (x == width) {
            out = acc;
            return true;
        }
        std::vector<int> rows_here;
        for (int i = 0; i < m; ++i)
            if (lens[i] > x) rows_here.push_back(i);
        return pick(0, rows_here, x, width, acc);
    }

    bool pick(size_t pos, const std::vector<int>& rows_here, int x, int width,
              std::vector<std::vector<HalfInt>>& acc) {
        if (pos == rows_here.size()) return fill_column(x + 1, width, acc);
        int row = rows_here[pos];
        bool pinned = exempt_col && x == *exempt_col && (row == m / 2 - 1 || row == m / 2);
        bool waived = exempt_col && x == *exempt_col && row == m / 2;  // pair with the row above

        HalfInt last{};
        bool have_last = false;
        if (pos > 0) {
            last = acc[rows_here[pos - 1]][x];
            have_last = true;
        }

        auto try_value = [&](HalfInt v) {
            if (have_last && !waived && !(v < last)) return false;
            if (waived && !(v == last)) return false;  // both middle boxes hold 0
            auto& pool = pools[row];
            auto it = std::find(pool.begin(), pool.end(), v);
            if (it == pool.end()) return false;
            pool.erase(it);
            acc[row][x] = v;
            if (pick(pos + 1, rows_here, x, width, acc)) return true;
            pool.insert(std::upper_bound(pool.begin(), pool.end(), v), v);
            return false;
        };

        if (pinned) return try_value(HalfInt(0));
        HalfInt prev{};
        bool first = true;
        for (size_t i = pools[row].size(); i-- > 0;) {
            HalfInt v = pools[row][i];
            if (!first && v == prev) continue;
            first = false;
            prev = v;
            if (try_value(v)) return true;
        }
        return false;
    }
};

std::optional<std::vector<std::vector<HalfInt>>> search_class(const Table& justified,
                                                              std::optional<int> exempt_col) {
    ClassSearch cs;
    cs.m = justified.row_count();
    for (int i = 0; i < cs.m; ++i) {
        cs.pools.push_back(row_multiset(justified, i));
        cs.lens.push_back(static_cast<int>(justified.rows[i].size()));
    }
    cs.exempt_col = exempt_col;
    if (!cs.solve()) return std::nullopt;
    return cs.out;
}

}  // namespace

bool is_jrecs(const STable& A, LieType lt) { return find_jrecs_witness(A, lt).has_value(); }

std::optional<Table> find_jrecs_witness(const STable& A, LieType lt) {
    Table B = sort_rows(left_justify(A));
    if (frame_predicates(B.frame).convex) {
        auto found = find_column_strict(B);
        if (found) return found;
    } else if (auto rows = search_class(B, std::nullopt)) {
        return make_table(B.frame, std::move(*rows));
    }

    if (lt != LieType::D) return std::nullopt;
    int m = B.row_count();
    if (m % 2 != 0) return std::nullopt;
    auto has_zero = [&](int row) {
        return std::any_of(B.rows[row].begin(), B.rows[row].end(),
                           [](HalfInt v) { return v.is_zero(); });
    };
    if (!has_zero(m / 2 - 1) || !has_zero(m / 2)) return std::nullopt;
    int shared = std::min(static_cast<int>(B.rows[m / 2 - 1].size()),
                          static_cast<int>(B.rows[m / 2].size()));
    for (int x = 0; x < shared; ++x)
        if (auto rows = search_class(B, x)) return make_table(B.frame, std::move(*rows));
    return std::nullopt;
}

}  // namespace wtab
