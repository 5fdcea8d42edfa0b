#include "wtab/table.hpp"

#include <algorithm>
#include <map>

namespace wtab {

int Table::box_count() const {
    int n = 0;
    for (const auto& r : rows) n += static_cast<int>(r.size());
    return n;
}

std::string Table::key() const {
    std::string s;
    for (int i = 0; i < row_count(); ++i) {
        s += std::to_string(frame.rows[i].offset);
        s += '@';
        for (HalfInt v : rows[i]) {
            s += std::to_string(v.t);
            s += ',';
        }
        s += ';';
    }
    return s;
}

Table make_table(Frame F, std::vector<std::vector<HalfInt>> rows) {
    if (F.rows.size() != rows.size()) fail(ErrorKind::SizeMismatch, "row count mismatch");
    for (size_t i = 0; i < rows.size(); ++i)
        if (static_cast<int>(rows[i].size()) != F.rows[i].len)
            fail(ErrorKind::SizeMismatch, "row " + std::to_string(i) + " length mismatch");
    return Table{std::move(F), std::move(rows)};
}

bool is_skew_symmetric(const Table& A) {
    int m = A.row_count();
    if (m % 2 != 0) return false;
    for (int i = 0; i < m; ++i) {
        int n = static_cast<int>(A.rows[i].size());
        if (static_cast<int>(A.rows[m - 1 - i].size()) != n) return false;
        for (int j = 0; j < n; ++j)
            if (A.rows[m - 1 - i][n - 1 - j] != -A.rows[i][j]) return false;
    }
    return true;
}

bool is_half_integral(const Table& A) {
    bool seen = false, half = false;
    for (const auto& row : A.rows)
        for (HalfInt v : row) {
            bool h = !v.is_integral();
            if (!seen) {
                seen = true;
                half = h;
            } else if (h != half) {
                fail(ErrorKind::MixedParity, "mixed integral and half-integral entries");
            }
        }
    return seen && half;
}

STable make_stable(Frame F, std::vector<std::vector<HalfInt>> rows) {
    Table A = make_table(std::move(F), std::move(rows));
    if (!is_sframe(A.frame)) fail(ErrorKind::InvalidFrame, "frame is not an s-frame");
    if (!is_skew_symmetric(A)) fail(ErrorKind::InvalidFrame, "entries are not skew-symmetric");
    is_half_integral(A);
    return A;
}

STable coordinate_table(const Frame& F) {
    if (!is_sframe(F)) fail(ErrorKind::InvalidFrame, "coord needs an s-frame");
    Partition p = part_of(F);
    Frame pyr = symmetric_pyramid(p);
    int n = F.box_count() / 2;

    // Reading-order fill of the pyramid, cut into per-row blocks.
    std::vector<HalfInt> seq;
    for (int v = -n; v <= n; ++v)
        if (v != 0) seq.push_back(HalfInt(v));
    std::map<int, std::vector<std::vector<HalfInt>>> blocks_by_len;
    size_t pos = 0;
    for (const auto& row : pyr.rows) {
        std::vector<HalfInt> block(seq.begin() + pos, seq.begin() + pos + row.len);
        blocks_by_len[row.len].push_back(std::move(block));
        pos += row.len;
    }

    // Rows of F of each length, top to bottom, receive the blocks in order.
    std::map<int, size_t> next;
    std::vector<std::vector<HalfInt>> rows(F.row_count());
    for (int i = 0; i < F.row_count(); ++i) {
        int len = F.rows[i].len;
        rows[i] = blocks_by_len[len][next[len]++];
    }
    return make_stable(F, std::move(rows));
}

Word word_of(const Table& A) {
    Word w;
    for (const auto& row : A.rows)
        for (HalfInt v : row) w.values.push_back(v);
    return w;
}

Weight weight_of(const STable& A) {
    is_half_integral(A);
    STable coord = coordinate_table(A.frame);
    int n = A.box_count() / 2;
    Weight lambda;
    lambda.coeffs.resize(n);
    for (int i = 0; i < A.row_count(); ++i)
        for (size_t j = 0; j < A.rows[i].size(); ++j) {
            HalfInt c = coord.rows[i][j];
            if (c < HalfInt(0)) lambda.coeffs[(-c.t / 2) - 1] = A.rows[i][j];
        }
    return lambda;
}

Table left_justify(const Table& A) {
    Table B = A;
    for (auto& r : B.frame.rows) r.offset = 0;
    return B;
}

Table sort_rows(const Table& A) {
    Table B = A;
    for (auto& row : B.rows) std::sort(row.begin(), row.end());
    return B;
}

Table upper_half(const STable& A) {
    int m = A.row_count();
    if (m % 2 != 0) fail(ErrorKind::InvalidFrame, "upper half needs an even row count");
    Table B;
    B.frame.rows.assign(A.frame.rows.begin(), A.frame.rows.begin() + m / 2);
    B.rows.assign(A.rows.begin(), A.rows.begin() + m / 2);
    return B;
}

std::vector<HalfInt> row_multiset(const Table& A, int row_index) {
    auto v = A.rows.at(row_index);
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<HalfInt> entry_multiset(const Table& A) {
    std::vector<HalfInt> v;
    for (const auto& row : A.rows) v.insert(v.end(), row.begin(), row.end());
    std::sort(v.begin(), v.end());
    return v;
}

Word weight_word(const Weight& lambda, LieType lt) {
    int n = lambda.n();
    Word w;
    w.values.reserve(2 * n);
    for (int i = n; i >= 1; --i) w.values.push_back(lambda.coeffs[i - 1]);
    for (int i = 1; i <= n; ++i) w.values.push_back(-lambda.coeffs[i - 1]);
    if (lt == LieType::D) {
        int zeros = 0, j = 0;
        for (int i = 1; i <= n; ++i)
            if (lambda.coeffs[i - 1].is_zero()) {
                zeros++;
                j = i;
            }
        if (zeros == 1) w.d_zero_tiebreak = std::make_pair(n - j, n + j - 1);
    }
    return w;
}

}  // namespace wtab
