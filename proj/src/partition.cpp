#include "wtab/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace wtab {

int Partition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

Partition make_partition(std::vector<int> parts) {
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition{std::move(parts)};
}

bool is_orbit_partition(const Partition& p, LieType lt) {
    std::map<int, int> mult;
    for (int x : p.parts) mult[x]++;
    for (auto [part, m] : mult) {
        bool constrained = (lt == LieType::C) ? (part % 2 == 1) : (part % 2 == 0);
        if (constrained && m % 2 != 0) return false;
    }
    return true;
}

ValidatedPartition validate_partition(std::vector<int> parts, LieType lt) {
    if (parts.empty()) fail(ErrorKind::InvalidForType, "empty partition");
    for (int x : parts)
        if (x <= 0) fail(ErrorKind::InvalidForType, "nonpositive part " + std::to_string(x));
    Partition p = make_partition(std::move(parts));
    std::map<int, int> mult;
    for (int x : p.parts) mult[x]++;
    for (auto [part, m] : mult)
        if (m % 2 != 0)
            fail(ErrorKind::NotEvenMultiplicity,
                 "part " + std::to_string(part) + " has multiplicity " + std::to_string(m));
    if (!is_orbit_partition(p, lt))
        fail(ErrorKind::InvalidForType, p.str() + " is not a type " +
                                            std::string(lie_type_name(lt)) + " orbit partition");
    bool very_even = std::all_of(p.parts.begin(), p.parts.end(), [](int x) { return x % 2 == 0; });
    return ValidatedPartition{std::move(p), very_even};
}

Partition partition_transpose(const Partition& p) {
    std::vector<int> t;
    if (p.parts.empty()) return Partition{};
    t.resize(p.parts[0], 0);
    for (int part : p.parts)
        for (int j = 0; j < part; ++j) t[j]++;
    return Partition{std::move(t)};
}

bool dominance_leq(const Partition& p, const Partition& q) {
    if (p.sum() != q.sum()) fail(ErrorKind::SizeMismatch, "dominance needs equal sizes");
    int a = 0, b = 0;
    size_t m = std::max(p.parts.size(), q.parts.size());
    for (size_t i = 0; i < m; ++i) {
        a += i < p.parts.size() ? p.parts[i] : 0;
        b += i < q.parts.size() ? q.parts[i] : 0;
        if (a > b) return false;
    }
    return true;
}

}  // namespace wtab
