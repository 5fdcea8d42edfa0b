#pragma once

#include <optional>
#include <vector>

#include "wtab/partition.hpp"
#include "wtab/table.hpp"
#include "wtab/word.hpp"

// Definition-level reference implementations. Nothing here calls the production
// algorithms; only the data model is shared.
namespace wtab::oracle {

// Shape whose k-th prefix sum is the exhaustive max total length of k disjoint
// weakly increasing subsequences. Words longer than 12 are rejected.
Partition brute_shape(const Word& w);

// Exhaustive max over k disjoint chains; weakly increasing or strictly
// decreasing.
int brute_chain_sum(const Word& w, int k, bool increasing);

// Both chain-sum tables at once: increasing[k] (resp. decreasing[k]) is the
// max total length of k disjoint weakly increasing (resp. strictly
// decreasing) subsequences, for k = 0..|w|. One subset sweep serves both.
struct GreeneProfile {
    std::vector<int> increasing;
    std::vector<int> decreasing;
};
GreeneProfile brute_greene_profile(const Word& w);

// Exhaustive row-permutation search for a column-strict member of the
// row-equivalence class. Tables over 10 boxes are rejected.
bool brute_recs(const Table& A);

// The sharp definition run literally over all distinct permutations, length <= 7.
std::optional<HalfInt> brute_sharp(std::vector<HalfInt> vals);

// Original-variant associated-variety algorithm: always-odd padding plus the
// type D list surgery, then the common final step.
Partition bv_with_step2a(const Weight& lambda, LieType lt);

}  // namespace wtab::oracle
