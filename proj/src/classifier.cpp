#include "wtab/classifier.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wtab/barbasch_vogan.hpp"
#include "wtab/rowops.hpp"

namespace wtab {

CentralCharacter central_character(const STable& A) { return entry_multiset(A); }

bool is_finite_dim_bv(const STable& A, const Partition& p, LieType lt) {
    return bv(weight_of(A), lt).partition == p;
}

ClassificationResult classify(const STable& A, const Partition& p, LieType lt) {
    ClassificationResult res;
    GeneratorSet gs = generator_set(p, lt);
    Orbit orb = orbit(A, gs);
    res.pruned = orb.pruned;

    res.finite_dimensional = false;
    for (const OrbitElement& el : orb.elements) {
        auto arranged = find_jrecs_witness(el.table, lt);
        if (!arranged) continue;
        res.finite_dimensional = true;
        res.witness = Witness{el.word, el.table, std::move(arranged)};
        break;
    }

    BvResult b = bv(weight_of(A), lt);
    res.bv_partition = b.partition;
    res.bv_route = b.partition == p;
    res.routes_agree = res.finite_dimensional == res.bv_route;
    return res;
}

namespace {

void remove_one(std::vector<HalfInt>& pool, HalfInt v) {
    pool.erase(std::find(pool.begin(), pool.end(), v));
}

// Sub-multisets of `pool` of size `want` in lexicographic order, as sorted rows.
void row_choices(const std::vector<HalfInt>& pool, size_t want, size_t from,
                 std::vector<HalfInt>& acc, std::vector<std::vector<HalfInt>>& out) {
    if (acc.size() == want) {
        out.push_back(acc);
        return;
    }
    for (size_t i = from; i + (want - acc.size()) <= pool.size(); ++i) {
        if (i > from && pool[i] == pool[i - 1]) continue;
        acc.push_back(pool[i]);
        row_choices(pool, want, i + 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<STable> enumerate_tables(const Partition& p, const CentralCharacter& chi, LieType lt) {
    ValidatedPartition vp = validate_partition(p.parts, lt);
    Frame F = symmetric_pyramid(vp.p);
    if (static_cast<int>(chi.size()) != F.box_count())
        fail(ErrorKind::SizeMismatch, "entry count " + std::to_string(chi.size()) + " for " +
                                          std::to_string(F.box_count()) + " boxes");

    std::vector<HalfInt> pool = chi;
    std::sort(pool.begin(), pool.end());
    for (size_t i = 0; i < pool.size(); ++i) {
        HalfInt v = pool[i];
        if (std::count(pool.begin(), pool.end(), v) != std::count(pool.begin(), pool.end(), -v))
            fail(ErrorKind::NotNegationClosed, "entry multiset not closed under negation");
    }
    if (!pool.empty()) {
        int par = ((pool[0].t % 2) + 2) % 2;
        for (HalfInt v : pool)
            if (((v.t % 2) + 2) % 2 != par) fail(ErrorKind::MixedParity, "entries of mixed parity");
        if (par != 0 && lt == LieType::C)
            fail(ErrorKind::NonIntegralWeight, "half-integral entries outside type D");
    }

    int m = F.row_count();
    int r = m / 2;
    std::vector<std::vector<HalfInt>> rows(m);
    std::vector<STable> out;

    std::function<void(int, std::vector<HalfInt>)> fill = [&](int i, std::vector<HalfInt> rest) {
        if (i == r) {
            if (!rest.empty()) return;
            out.push_back(make_stable(F, rows));
            return;
        }
        std::vector<std::vector<HalfInt>> choices;
        std::vector<HalfInt> acc;
        row_choices(rest, static_cast<size_t>(F.rows[i].len), 0, acc, choices);
        for (const auto& row : choices) {
            std::vector<HalfInt> remaining = rest;
            bool ok = true;
            for (HalfInt v : row) remove_one(remaining, v);
            for (HalfInt v : row) {
                auto it = std::find(remaining.begin(), remaining.end(), -v);
                if (it == remaining.end()) {
                    ok = false;
                    break;
                }
                remaining.erase(it);
            }
            if (!ok) continue;
            rows[i] = row;
            rows[m - 1 - i].assign(row.rbegin(), row.rend());
            for (auto& v : rows[m - 1 - i]) v = -v;
            fill(i + 1, std::move(remaining));
        }
    };
    fill(0, pool);
    return out;
}

std::vector<STable> enumerate_pyr_c(const Partition& p, const CentralCharacter& chi, LieType lt) {
    std::vector<STable> out;
    for (STable& A : enumerate_tables(p, chi, lt))
        if (is_jrecs(A, lt)) out.push_back(std::move(A));
    return out;
}

std::vector<PrimitiveIdealLabel> primitive_ideal_labels(const Partition& p,
                                                        const CentralCharacter& chi, LieType lt) {
    ValidatedPartition vp = validate_partition(p.parts, lt);
    std::vector<STable> base = enumerate_pyr_c(p, chi, lt);
    std::vector<PrimitiveIdealLabel> out;
    if (lt == LieType::C) {
        for (STable& A : base) out.push_back(PrimitiveIdealLabel{std::move(A), LabelTag::pyr_c});
        return out;
    }

    if (vp.very_even) fail(ErrorKind::VeryEvenUnsupported, "no odd part to build the extra generator");
    GeneratorSet gs = generator_set(p, lt);

    std::vector<STable> moved;
    for (STable& A : base) {
        Orbit orb = orbit(A, gs);
        if (orb.elements[0].parity_odd)
            out.push_back(PrimitiveIdealLabel{std::move(A), LabelTag::fixed});
        else
            moved.push_back(std::move(A));
    }
    for (STable& A : moved) {
        STable image = apply_generator(A, gs, 1);
        out.push_back(PrimitiveIdealLabel{std::move(A), LabelTag::moved});
        out.push_back(PrimitiveIdealLabel{std::move(image), LabelTag::c1_image});
    }
    return out;
}

}  // namespace wtab
