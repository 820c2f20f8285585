#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "letlab/boolean_algebra.hpp"

namespace letlab {

// A snapshot packs the simultaneous values of a formula A, its negation ¬A
// and its classicality claim ∘A into one triple over a Boolean algebra,
// constrained by  cls ≤ pos ⊔ neg  and  pos ⊓ neg ⊓ cls = 0.
struct Snapshot {
    BElem pos;  // value of A
    BElem neg;  // value of ¬A
    BElem cls;  // value of ∘A

    bool operator==(const Snapshot&) const = default;
};

// The six truth values: snapshots over the two-element algebra.  Order is the
// conventional table row order, also used for countermodel enumeration.
//   T  = (1,0,1)  reliably true          T0 = (1,0,0)  true, not reliable
//   b  = (1,1,0)  contradictory          n  = (0,0,0)  no information
//   F0 = (0,1,0)  false, not reliable    F  = (0,1,1)  reliably false
enum class Value6 : std::uint8_t { T = 0, T0 = 1, B = 2, N = 3, F0 = 4, F = 5 };

inline constexpr std::array<Value6, 6> kAllValues = {Value6::T,  Value6::T0, Value6::B,
                                                     Value6::N,  Value6::F0, Value6::F};

const char* to_string(Value6 v);
std::optional<Value6> value6_from_string(const std::string& name);

// Designated values are those whose first coordinate is the top of the
// algebra: {T, T0, b} over the two-element algebra.
inline bool is_designated(Value6 v) { return static_cast<int>(v) <= 2; }

// Fixed bijection with snapshots over the two-element algebra.
Snapshot snapshot_of(Value6 v);
std::optional<Value6> value6_of(const Snapshot& z);

bool is_snapshot(const BooleanAlgebra& algebra, const Snapshot& z);
inline bool is_designated(const BooleanAlgebra& algebra, const Snapshot& z) {
    return z.pos == algebra.top();
}

// All snapshots over `algebra`, in lexicographic (pos, neg, cls) order.
// There are 6^atoms of them: the constraints act atomwise.
std::vector<Snapshot> snapshot_domain(const BooleanAlgebra& algebra);

// "(1,0,{a1})"-style rendering using the algebra's element names.
std::string to_string(const BooleanAlgebra& algebra, const Snapshot& z);

}  // namespace letlab
