#include "letlab/snapshots.hpp"

namespace letlab {

const char* to_string(Value6 v) {
    switch (v) {
        case Value6::T: return "T";
        case Value6::T0: return "T0";
        case Value6::B: return "b";
        case Value6::N: return "n";
        case Value6::F0: return "F0";
        case Value6::F: return "F";
    }
    return "?";
}

std::optional<Value6> value6_from_string(const std::string& name) {
    for (Value6 v : kAllValues)
        if (name == to_string(v)) return v;
    return std::nullopt;
}

Snapshot snapshot_of(Value6 v) {
    switch (v) {
        case Value6::T: return {1, 0, 1};
        case Value6::T0: return {1, 0, 0};
        case Value6::B: return {1, 1, 0};
        case Value6::N: return {0, 0, 0};
        case Value6::F0: return {0, 1, 0};
        case Value6::F: return {0, 1, 1};
    }
    return {0, 0, 0};
}

std::optional<Value6> value6_of(const Snapshot& z) {
    for (Value6 v : kAllValues)
        if (snapshot_of(v) == z) return v;
    return std::nullopt;
}

bool is_snapshot(const BooleanAlgebra& algebra, const Snapshot& z) {
    if (!algebra.contains(z.pos) || !algebra.contains(z.neg) || !algebra.contains(z.cls))
        return false;
    return algebra.leq(z.cls, algebra.join(z.pos, z.neg)) &&
           algebra.meet(algebra.meet(z.pos, z.neg), z.cls) == algebra.bottom();
}

std::vector<Snapshot> snapshot_domain(const BooleanAlgebra& algebra) {
    std::vector<Snapshot> out;
    const auto n = static_cast<BElem>(algebra.size());
    for (BElem p = 0; p < n; ++p)
        for (BElem q = 0; q < n; ++q)
            for (BElem c = 0; c < n; ++c) {
                Snapshot z{p, q, c};
                if (is_snapshot(algebra, z)) out.push_back(z);
            }
    return out;
}

std::string to_string(const BooleanAlgebra& algebra, const Snapshot& z) {
    return "(" + algebra.element_name(z.pos) + "," + algebra.element_name(z.neg) + "," +
           algebra.element_name(z.cls) + ")";
}

}  // namespace letlab
