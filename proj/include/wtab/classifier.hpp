#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wtab/barbasch_vogan.hpp"
#include "wtab/component_group.hpp"
#include "wtab/rowops.hpp"

namespace wtab {

struct Witness {
    std::vector<int> word;  // generator indices reaching the accepted table
    STable table;           // orbit member with is_jrecs true
    std::optional<Table> column_strict;  // rearrangement certifying it, when available
};

struct ClassificationResult {
    bool finite_dimensional = false;
    std::optional<Witness> witness;
    Partition bv_partition;
    bool routes_agree = false;
    bool bv_route = false;
    std::vector<PrunedBranch> pruned;
};

// Negation-closed entry multiset, sorted.
using CentralCharacter = std::vector<HalfInt>;

CentralCharacter central_character(const STable& A);

bool is_finite_dim_bv(const STable& A, const Partition& p, LieType lt);

ClassificationResult classify(const STable& A, const Partition& p, LieType lt);

// All A in Pyr^<= of p with entry multiset chi, deterministic order.
std::vector<STable> enumerate_tables(const Partition& p, const CentralCharacter& chi, LieType lt);

std::vector<STable> enumerate_pyr_c(const Partition& p, const CentralCharacter& chi, LieType lt);

enum class LabelTag { pyr_c, fixed, moved, c1_image };

inline const char* label_tag_name(LabelTag t) {
    switch (t) {
        case LabelTag::pyr_c: return "pyr_c";
        case LabelTag::fixed: return "fixed";
        case LabelTag::moved: return "moved";
        case LabelTag::c1_image: return "c1_image";
    }
    return "?";
}

struct PrimitiveIdealLabel {
    STable table;
    LabelTag tag = LabelTag::pyr_c;
};

// Type C: Pyr^c verbatim. Type D: tables fixed by an odd generator word, the
// non-fixed remainder, and the c_1-images of that remainder. Very even type D
// is rejected (VeryEvenUnsupported).
std::vector<PrimitiveIdealLabel> primitive_ideal_labels(const Partition& p,
                                                        const CentralCharacter& chi, LieType lt);

}  // namespace wtab
