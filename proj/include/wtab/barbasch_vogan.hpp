#pragma once

#include "wtab/partition.hpp"
#include "wtab/word.hpp"

namespace wtab {

struct Symbol {
    std::vector<int> top;      // s_1..
    std::vector<int> bottom;   // t_1..
    std::vector<int> content;  // sorted concatenation
};

struct BvTrace {
    Partition q;
    std::vector<int> r_list;
    std::vector<int> s_list;
    std::vector<int> t_list;
    std::vector<int> u;
    std::vector<int> s_prime;
    std::vector<int> t_prime;
    std::vector<int> r_prime;
    Partition q_prime;
};

struct BvResult {
    Partition partition;
    bool very_even_ambiguous = false;  // type D, all parts of q' even
    BvTrace trace;
};

// Associated-variety partition of Ann L(lambda). Rejects mixed parity, and
// half-integral weights outside type D.
BvResult bv(const Weight& lambda, LieType lt);

// Parity padding + the r_i = q_i + i - 1 split, packaged.
Symbol symbol_of(const Partition& q, LieType lt);

}  // namespace wtab
