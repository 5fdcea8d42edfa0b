#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wtab/halfint.hpp"
#include "wtab/partition.hpp"

namespace wtab {

// Entry sequence for insertion algorithms. The optional tiebreak marks two zero
// positions straddling the midpoint; the first compares strictly greater.
struct Word {
    std::vector<HalfInt> values;
    std::optional<std::pair<int, int>> d_zero_tiebreak;  // 0-based positions

    int size() const { return static_cast<int>(values.size()); }
    bool operator==(const Word&) const = default;
};

// Coefficients a_1..a_n of sum a_i eps_i.
struct Weight {
    std::vector<HalfInt> coeffs;

    int n() const { return static_cast<int>(coeffs.size()); }
    bool operator==(const Weight&) const = default;
};

// The doubled word (a_n,...,a_1,-a_1,...,-a_n). In type D, when exactly one
// coefficient is zero, its two word positions are marked as the tiebreak pair.
Word weight_word(const Weight& lambda, LieType lt);

}  // namespace wtab
