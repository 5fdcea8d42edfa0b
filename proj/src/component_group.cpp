#include "wtab/component_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "wtab/rowops.hpp"

namespace wtab {

GeneratorSet generator_set(const Partition& p, LieType lt) {
    GeneratorSet gs;
    int r = static_cast<int>(p.parts.size()) / 2;
    std::set<int> seen;
    for (int i = 1; i <= r; ++i) {
        int part = p.parts[2 * i - 1];
        bool relevant = (lt == LieType::C) ? part % 2 == 0 : part % 2 != 0;
        if (relevant && seen.insert(part).second) gs.indices.push_back(i);
    }
    return gs;
}

std::optional<HalfInt> sharp_element(std::vector<HalfInt> vals) {
    for (HalfInt v : vals)
        if ((v.t % 2 + 2) % 2 != (vals.front().t % 2 + 2) % 2)
            fail(ErrorKind::MixedParity, "sharp needs entries of one parity");
    std::vector<HalfInt>& pool = vals;
    if (pool.size() % 2 == 0) pool.push_back(HalfInt(0));
    std::sort(pool.begin(), pool.end());

    std::optional<HalfInt> best;
    for (size_t c = 0; c < pool.size(); ++c) {
        if (c + 1 < pool.size() && pool[c] == pool[c + 1]) continue;
        std::vector<HalfInt> rest;
        for (size_t i = 0; i < pool.size(); ++i)
            if (i != c) rest.push_back(pool[i]);
        bool ok = true;
        size_t k = rest.size() / 2;
        for (size_t j = 0; j < k && ok; ++j) {
            HalfInt sum = rest[j] + rest[rest.size() - 1 - j];
            ok = sum.t % 2 == 0 && sum > HalfInt(0);
        }
        if (ok && (!best || pool[c] > *best)) best = pool[c];
    }
    return best;
}

std::optional<STable> c_middle(const STable& A) {
    int m = A.row_count();
    if (m % 2 != 0) fail(ErrorKind::InvalidFrame, "middle operator needs an even row count");
    int r = m / 2;
    auto a = sharp_element(A.rows[r - 1]);
    if (!a) return std::nullopt;
    // The sharp element may be the inserted zero of an even-length row; both
    // replacements are then vacuous.
    if (a->is_zero()) return A;

    STable B = A;
    auto flip_one = [](std::vector<HalfInt>& row, HalfInt from) {
        auto it = std::find(row.begin(), row.end(), from);
        if (it == row.end()) fail(ErrorKind::SizeMismatch, "flip target missing from middle row");
        *it = -from;
        std::sort(row.begin(), row.end());
    };
    flip_one(B.rows[r - 1], *a);
    flip_one(B.rows[r], -*a);
    return B;
}

STable apply_generator(const STable& A, const GeneratorSet& gs, int k) {
    if (k < 1 || k > gs.d()) fail(ErrorKind::BadIndex, "generator " + std::to_string(k));
    int target = gs.indices[k - 1];

    STable cur = A;
    auto swap_or_throw = [](const STable& T, int j) {
        auto next = swap_rows_sym(T, j);
        if (!next) fail(ErrorKind::SwapUndefined, "row swap " + std::to_string(j) + " undefined");
        return *next;
    };
    for (int j = target - 1; j >= 1; --j) cur = swap_or_throw(cur, j);
    auto flipped = c_middle(cur);
    if (!flipped) fail(ErrorKind::SharpUndefined, "sharp element undefined at the middle");
    cur = *flipped;
    for (int j = 1; j <= target - 1; ++j) cur = swap_or_throw(cur, j);
    return cur;
}

const OrbitElement* Orbit::find(const STable& A) const {
    std::string key = A.key();
    for (const auto& el : elements)
        if (el.table.key() == key) return &el;
    return nullptr;
}

Orbit orbit(const STable& A, const GeneratorSet& gs) {
    Orbit result;
    result.elements.push_back(OrbitElement{A, {}, true, false});

    std::map<std::string, size_t> index_of{{A.key(), 0}};
    std::set<std::pair<std::string, int>> pruned_seen;
    std::deque<std::pair<size_t, bool>> queue{{0, true}};

    while (!queue.empty()) {
        auto [idx, even] = queue.front();
        queue.pop_front();
        for (int k = 1; k <= gs.d(); ++k) {
            STable next;
            try {
                next = apply_generator(result.elements[idx].table, gs, k);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::SwapUndefined && e.kind() != ErrorKind::SharpUndefined)
                    throw;
                std::string key = result.elements[idx].table.key();
                if (pruned_seen.insert({key, k}).second)
                    result.pruned.push_back(PrunedBranch{key, k, e.kind()});
                continue;
            }
            bool next_even = !even;
            auto [it, inserted] = index_of.try_emplace(next.key(), result.elements.size());
            if (inserted) {
                auto word = result.elements[idx].word;
                word.push_back(k);
                result.elements.push_back(
                    OrbitElement{std::move(next), std::move(word), next_even, !next_even});
                queue.emplace_back(it->second, next_even);
            } else {
                OrbitElement& el = result.elements[it->second];
                bool& flag = next_even ? el.parity_even : el.parity_odd;
                if (!flag) {
                    flag = true;
                    queue.emplace_back(it->second, next_even);
                }
            }
        }
    }
    return result;
}

}  // namespace wtab
