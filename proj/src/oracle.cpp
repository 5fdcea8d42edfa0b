#include "wtab/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wtab/errors.hpp"

namespace wtab::oracle {

namespace {

struct Tagged {
    HalfInt v;
    int tag = 0;
    auto operator<=>(const Tagged&) const = default;
};

std::vector<Tagged> tag_word(const Word& w) {
    std::vector<Tagged> out;
    for (HalfInt v : w.values) out.push_back(Tagged{v, 0});
    if (w.d_zero_tiebreak) {
        out[w.d_zero_tiebreak->first].tag = 1;
        out[w.d_zero_tiebreak->second].tag = -1;
    }
    return out;
}

// Longest strictly decreasing subsequence within the masked positions.
int masked_lds(const std::vector<Tagged>& w, unsigned mask) {
    std::vector<int> best;
    std::vector<size_t> picks;
    for (size_t i = 0; i < w.size(); ++i)
        if (mask >> i & 1) picks.push_back(i);
    best.assign(picks.size(), 1);
    int top = picks.empty() ? 0 : 1;
    for (size_t i = 0; i < picks.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (w[picks[j]] > w[picks[i]] && best[j] + 1 > best[i]) {
                best[i] = best[j] + 1;
                top = std::max(top, best[i]);
            }
    return top;
}

int masked_lis_weak(const std::vector<Tagged>& w, unsigned mask) {
    std::vector<int> best;
    std::vector<size_t> picks;
    for (size_t i = 0; i < w.size(); ++i)
        if (mask >> i & 1) picks.push_back(i);
    best.assign(picks.size(), 1);
    int top = picks.empty() ? 0 : 1;
    for (size_t i = 0; i < picks.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (w[picks[j]] <= w[picks[i]] && best[j] + 1 > best[i]) {
                best[i] = best[j] + 1;
                top = std::max(top, best[i]);
            }
    return top;
}

// A set of positions splits into k weakly increasing chains exactly when its
// longest strictly decreasing subsequence has length at most k (dual cover
// bound), and into k strictly decreasing chains exactly when its longest
// weakly increasing subsequence has length at most k.  One pass over all
// subsets therefore yields every chain-sum value at once: record the largest
// subset attaining each bound, then take running maxima.
GreeneProfile profile_of_tagged(const std::vector<Tagged>& w) {
    int m = static_cast<int>(w.size());
    std::vector<int> by_lds(m + 1, 0), by_lis(m + 1, 0);
    unsigned full = 1u << m;
    for (unsigned mask = 1; mask < full; ++mask) {
        int size = __builtin_popcount(mask);
        int lds = masked_lds(w, mask);
        int lis = masked_lis_weak(w, mask);
        by_lds[lds] = std::max(by_lds[lds], size);
        by_lis[lis] = std::max(by_lis[lis], size);
    }
    GreeneProfile out;
    out.increasing.assign(m + 1, 0);
    out.decreasing.assign(m + 1, 0);
    for (int k = 1; k <= m; ++k) {
        out.increasing[k] = std::max(out.increasing[k - 1], by_lds[k]);
        out.decreasing[k] = std::max(out.decreasing[k - 1], by_lis[k]);
    }
    return out;
}

Partition shape_of_tagged(const std::vector<Tagged>& w) {
    GreeneProfile prof = profile_of_tagged(w);
    Partition out;
    int total = static_cast<int>(w.size());
    for (int k = 1; k <= total && prof.increasing[k - 1] < total; ++k)
        out.parts.push_back(prof.increasing[k] - prof.increasing[k - 1]);
    return out;
}

}  // namespace

Partition brute_shape(const Word& w) {
    if (w.size() > 12) fail(ErrorKind::BoundExceeded, "brute shape capped at 12 letters");
    return shape_of_tagged(tag_word(w));
}

int brute_chain_sum(const Word& w, int k, bool increasing) {
    if (w.size() > 12) fail(ErrorKind::BoundExceeded, "brute chains capped at 12 letters");
    GreeneProfile prof = profile_of_tagged(tag_word(w));
    const std::vector<int>& sums = increasing ? prof.increasing : prof.decreasing;
    if (k < 0) return 0;
    return sums[std::min<size_t>(static_cast<size_t>(k), sums.size() - 1)];
}

GreeneProfile brute_greene_profile(const Word& w) {
    if (w.size() > 12) fail(ErrorKind::BoundExceeded, "brute chains capped at 12 letters");
    return profile_of_tagged(tag_word(w));
}

bool brute_recs(const Table& A) {
    if (A.box_count() > 10) fail(ErrorKind::BoundExceeded, "brute search capped at 10 boxes");

    // Boxes grouped by x-coordinate, top to bottom; adjacent entries must
    // strictly decrease.
    std::map<int, std::vector<std::pair<int, int>>> cols;
    for (size_t i = 0; i < A.rows.size(); ++i)
        for (int j = 0; j < A.frame.rows[i].len; ++j)
            cols[A.frame.rows[i].offset + 2 * j].emplace_back(static_cast<int>(i), j);

    std::vector<std::vector<HalfInt>> rows = A.rows;
    for (auto& row : rows) std::sort(row.begin(), row.end());

    std::function<bool(size_t)> next_row = [&](size_t i) -> bool {
        if (i == rows.size()) {
            for (const auto& [x, col] : cols) {
                (void)x;
                for (size_t t = 1; t < col.size(); ++t)
                    if (!(rows[col[t - 1].first][col[t - 1].second] >
                          rows[col[t].first][col[t].second]))
                        return false;
            }
            return true;
        }
        std::vector<HalfInt> perm = rows[i];
        do {
            rows[i] = perm;
            if (next_row(i + 1)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        rows[i] = perm;
        return false;
    };
    return next_row(0);
}

std::optional<HalfInt> brute_sharp(std::vector<HalfInt> vals) {
    if (vals.size() > 7) fail(ErrorKind::BoundExceeded, "brute sharp capped at 7 entries");
    if (vals.size() % 2 == 0) vals.push_back(HalfInt(0));
    std::sort(vals.begin(), vals.end());

    std::optional<HalfInt> best;
    size_t k = vals.size() / 2;
    do {
        bool ok = true;
        for (size_t j = 0; j < k && ok; ++j) {
            HalfInt sum = vals[2 * j] + vals[2 * j + 1];
            ok = sum.t % 2 == 0 && sum > HalfInt(0);
        }
        if (ok && (!best || vals.back() > *best)) best = vals.back();
    } while (std::next_permutation(vals.begin(), vals.end()));
    return best;
}

Partition bv_with_step2a(const Weight& lambda, LieType lt) {
    if (lambda.coeffs.empty()) fail(ErrorKind::SizeMismatch, "empty weight");
    int par = ((lambda.coeffs[0].t % 2) + 2) % 2;
    for (HalfInt a : lambda.coeffs)
        if (((a.t % 2) + 2) % 2 != par) fail(ErrorKind::MixedParity, "weight entries of mixed parity");
    if (par != 0 && lt == LieType::C)
        fail(ErrorKind::NonIntegralWeight, "half-integral weight outside type D");

    size_t n = lambda.coeffs.size();
    std::vector<Tagged> w;
    for (size_t i = n; i-- > 0;) w.push_back(Tagged{lambda.coeffs[i], 0});
    for (size_t i = 0; i < n; ++i) w.push_back(Tagged{-lambda.coeffs[i], 0});
    if (lt == LieType::D) {
        int zeros = 0;
        size_t zpos = 0;
        for (size_t i = 0; i < n; ++i)
            if (lambda.coeffs[i].is_zero()) {
                zeros++;
                zpos = i + 1;
            }
        if (zeros == 1) {
            w[n - zpos].tag = 1;
            w[n + zpos - 1].tag = -1;
        }
    }
    if (w.size() > 12) fail(ErrorKind::BoundExceeded, "oracle weight capped at 6 coordinates");

    Partition q = shape_of_tagged(w);
    std::vector<int> asc(q.parts.rbegin(), q.parts.rend());
    if (asc.size() % 2 == 0) asc.insert(asc.begin(), 0);

    std::vector<int> s, t;
    for (size_t i = 0; i < asc.size(); ++i) {
        int r = asc[i] + static_cast<int>(i);
        (r % 2 == 0 ? s : t).push_back(r / 2);
    }

    if (lt == LieType::D) {
        if (!s.empty() && s[0] == 0) {
            std::vector<int> s2;
            for (size_t i = 1; i < s.size(); ++i) s2.push_back(s[i] - 1);
            s = s2;
        } else {
            std::vector<int> t2{0};
            for (int v : t) t2.push_back(v + 1);
            t = t2;
        }
    }

    std::vector<int> u = s;
    u.insert(u.end(), t.begin(), t.end());
    std::sort(u.begin(), u.end());

    std::vector<int> rp;
    for (size_t i = 0; i < u.size(); ++i) {
        bool top = i % 2 == 0;
        if (lt == LieType::C)
            rp.push_back(top ? 2 * u[i] : 2 * u[i] + 1);
        else
            rp.push_back(top ? 2 * u[i] + 1 : 2 * u[i]);
    }
    std::sort(rp.begin(), rp.end());

    std::vector<int> parts;
    for (size_t i = 0; i < rp.size(); ++i) {
        int part = rp[i] - static_cast<int>(i);
        if (part > 0) parts.push_back(part);
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition{parts};
}

}  // namespace wtab::oracle
