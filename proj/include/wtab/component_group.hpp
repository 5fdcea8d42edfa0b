#pragma once

#include <optional>
#include <vector>

#include "wtab/table.hpp"

namespace wtab {

// Row indices i_1 < ... < i_d of the first occurrence of each distinct even
// (type C) / odd (type D) part among the halved rows of the pyramid.
struct GeneratorSet {
    std::vector<int> indices;

    int d() const { return static_cast<int>(indices.size()); }
};

GeneratorSet generator_set(const Partition& p, LieType lt);

// Maximal last element over arrangements pairing the rest into positive integer
// sums; even-length input gets a zero inserted first. nullopt when unachievable.
std::optional<HalfInt> sharp_element(std::vector<HalfInt> vals);

// Middle-rows flip: a = sharp of row -1; one a there becomes -a, one -a in
// row 1 becomes a; rows re-sorted. nullopt when sharp is undefined.
std::optional<STable> c_middle(const STable& A);

// c_k: conjugate c_middle by the swaps that carry row i_k to the middle.
// Throws SwapUndefined / SharpUndefined off the finite-dimensional locus.
STable apply_generator(const STable& A, const GeneratorSet& gens, int k);

struct OrbitElement {
    STable table;
    std::vector<int> word;  // generator indices (1-based) of the first path found
    bool parity_even = false;
    bool parity_odd = false;
};

struct PrunedBranch {
    std::string from_key;
    int generator = 0;
    ErrorKind reason = ErrorKind::SharpUndefined;
};

struct Orbit {
    std::vector<OrbitElement> elements;  // deterministic order, base point first
    std::vector<PrunedBranch> pruned;

    const OrbitElement* find(const STable& A) const;
};

// BFS closure of A under all generators, tracking achievable word-length
// parities per table. Branches that fail are pruned and recorded.
Orbit orbit(const STable& A, const GeneratorSet& gens);

}  // namespace wtab
