#pragma once

#include <string>
#include <vector>

#include "wtab/errors.hpp"

namespace wtab {

enum class LieType { C, D };

inline const char* lie_type_name(LieType lt) { return lt == LieType::C ? "C" : "D"; }

// Weakly decreasing list of positive integers.
struct Partition {
    std::vector<int> parts;

    int sum() const;
    int length() const { return static_cast<int>(parts.size()); }
    bool operator==(const Partition&) const = default;
    std::string str() const;
};

// Sorts, then checks even multiplicity of every part and orbit validity for lt.
// very_even (meaningful in type D) is set when all parts are even.
struct ValidatedPartition {
    Partition p;
    bool very_even = false;
};

ValidatedPartition validate_partition(std::vector<int> parts, LieType lt);

Partition partition_transpose(const Partition& p);

bool dominance_leq(const Partition& p, const Partition& q);

// Partition sorted from an arbitrary list (no domain validation).
Partition make_partition(std::vector<int> parts);

// Nilpotent-orbit membership for the classical types: type C needs odd parts in
// even multiplicity, type D needs even parts in even multiplicity.
bool is_orbit_partition(const Partition& p, LieType lt);

}  // namespace wtab
