#include "wtab/barbasch_vogan.hpp"

#include <algorithm>

#include "wtab/schensted.hpp"

namespace wtab {

Symbol symbol_of(const Partition& q, LieType lt) {
    std::vector<int> asc(q.parts.rbegin(), q.parts.rend());
    bool want_odd = lt == LieType::C;
    if ((asc.size() % 2 == 1) != want_odd) asc.insert(asc.begin(), 0);

    Symbol sym;
    for (size_t i = 0; i < asc.size(); ++i) {
        int r = asc[i] + static_cast<int>(i);
        if (r % 2 == 0)
            sym.top.push_back(r / 2);
        else
            sym.bottom.push_back((r - 1) / 2);
    }
    sym.content = sym.top;
    sym.content.insert(sym.content.end(), sym.bottom.begin(), sym.bottom.end());
    std::sort(sym.content.begin(), sym.content.end());
    return sym;
}

BvResult bv(const Weight& lambda, LieType lt) {
    if (lambda.coeffs.empty()) fail(ErrorKind::SizeMismatch, "empty weight");
    int par = ((lambda.coeffs[0].t % 2) + 2) % 2;
    for (HalfInt a : lambda.coeffs)
        if (((a.t % 2) + 2) % 2 != par) fail(ErrorKind::MixedParity, "weight entries of mixed parity");
    if (par != 0 && lt == LieType::C)
        fail(ErrorKind::NonIntegralWeight, "half-integral weight outside type D");

    BvResult res;
    Word w = weight_word(lambda, lt);
    res.trace.q = rs_shape(w);

    Symbol sym = symbol_of(res.trace.q, lt);
    res.trace.s_list = sym.top;
    res.trace.t_list = sym.bottom;
    res.trace.u = sym.content;
    {
        std::vector<int> asc(res.trace.q.parts.rbegin(), res.trace.q.parts.rend());
        bool want_odd = lt == LieType::C;
        if ((asc.size() % 2 == 1) != want_odd) asc.insert(asc.begin(), 0);
        for (size_t i = 0; i < asc.size(); ++i)
            res.trace.r_list.push_back(asc[i] + static_cast<int>(i));
    }

    const auto& u = sym.content;
    for (size_t i = 0; i < u.size(); ++i)
        (i % 2 == 0 ? res.trace.s_prime : res.trace.t_prime).push_back(u[i]);

    for (int s : res.trace.s_prime) res.trace.r_prime.push_back(lt == LieType::C ? 2 * s : 2 * s + 1);
    for (int t : res.trace.t_prime) res.trace.r_prime.push_back(lt == LieType::C ? 2 * t + 1 : 2 * t);
    std::sort(res.trace.r_prime.begin(), res.trace.r_prime.end());

    std::vector<int> parts;
    for (size_t i = 0; i < res.trace.r_prime.size(); ++i)
        parts.push_back(res.trace.r_prime[i] - static_cast<int>(i));
    res.trace.q_prime = make_partition(parts);
    res.partition = res.trace.q_prime;

    res.very_even_ambiguous =
        lt == LieType::D && !res.partition.parts.empty() &&
        std::all_of(res.partition.parts.begin(), res.partition.parts.end(),
                    [](int v) { return v % 2 == 0; });
    return res;
}

}  // namespace wtab
