#pragma once

#include <optional>

#include "letlab/formula.hpp"
#include "letlab/logic.hpp"
#include "letlab/matrix6.hpp"
#include "letlab/snapshots.hpp"

namespace letlab {

// The six values carry the bounded-lattice order F < F0 < {n, b} < T0 < T
// (meet and join are the ∧̃ / ∨̃ tables).  On that lattice, ∇ is the operator
// of the six-element involutive Stone algebra: ∇F = F and ∇a = T otherwise.

Value6 nabla(Value6 z);

// ∇ defined inside the implication-free fragment as A ∨ ¬∘A, evaluated
// through the tables; equals `nabla` on all six values.
Value6 nabla_via_circ(Value6 z);

// ∘ recovered from ∇ as ¬∇A ∨ ¬∇¬A; equals the ∘̃ table on all six values.
Value6 circ_via_nabla(Value6 z);

bool l6_leq(Value6 z, Value6 w);
Value6 l6_meet(Value6 z, Value6 w);

struct DegreeResult {
    bool valid;
    // first assignment violating the meet condition (or, with no premises,
    // the top-value condition) when invalid
    std::optional<Assignment6> witness;
};

// Degree-preserving consequence: valid iff the conclusion takes the top
// value T under every assignment, or the lattice meet of all premise values
// stays below the conclusion's value under every assignment.  Defined for
// the implication-free fragment; formulas with -> are accepted too and
// evaluated through the full tables.
DegreeResult degree_entails(const Sequent& s, Logic logic = Logic::LetFPlus);

}  // namespace letlab
