#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "letlab/formula.hpp"
#include "letlab/logic.hpp"
#include "letlab/snapshots.hpp"

namespace letlab {

// The deterministic six-valued operation tables for LET_K+ (and the
// implication-free reduct for LET_F+).  Indexed by Value6 in canonical
// order.  The tables are generated from the twist-structure closed forms
// over the two-element algebra and asserted equal, entry for entry, to a
// hard-coded transcription of the published tables; a mismatch throws at
// construction time.
struct OpTable {
    std::array<std::array<Value6, 6>, 6> conj;
    std::array<std::array<Value6, 6>, 6> disj;
    std::array<std::array<Value6, 6>, 6> imp;  // meaningful only with has_imp
    std::array<Value6, 6> neg;
    std::array<Value6, 6> circ;
    bool has_imp = true;
};

// Cached table for the logic's fragment; `logic` must be LetKPlus or
// LetFPlus.
const OpTable& matrix6_table(Logic logic = Logic::LetKPlus);

// Hand-transcribed reference tables, exposed for exactness tests.
const OpTable& matrix6_table_transcribed();

// A ≡ B, the identity-of-snapshots connective:
// (A ↔ B) ∧ (¬A ↔ ¬B) ∧ (∘A ↔ ∘B), computed from the tables.
Value6 equiv6(Value6 z, Value6 w);

// Total map from variable names to truth values.  Small and ordered;
// lookups are linear.
class Assignment6 {
public:
    Assignment6() = default;
    void set(const std::string& name, Value6 v);
    std::optional<Value6> get(const std::string& name) const;
    const std::vector<std::pair<std::string, Value6>>& items() const { return items_; }
    std::string to_string() const;  // "p=b q=n"

private:
    std::vector<std::pair<std::string, Value6>> items_;
};

class UnboundVariableError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structural evaluation through the tables; ⊤ ↦ T and ⊥ ↦ F.
Value6 eval6(const Formula& f, const Assignment6& assignment, Logic logic = Logic::LetKPlus);

// Evaluates every formula of a subformula-closed list in one pass; entry i
// is the value of list[i].
std::vector<Value6> eval6_closure(const std::vector<Formula>& closure,
                                  const Assignment6& assignment, Logic logic = Logic::LetKPlus);

struct Entail6Result {
    bool valid;
    std::optional<Assignment6> countermodel;  // first in canonical order when invalid
    std::uint64_t assignments_checked = 0;
};

// Γ ⊨ A over all 6^k assignments, k the number of sequent variables.
// Assignments are enumerated as base-6 counters over the variables in
// first-occurrence order, digits in canonical value order.
Entail6Result entails6(const Sequent& s, Logic logic = Logic::LetKPlus);

// Empty-premise special case.
Entail6Result tautology6(const Formula& f, Logic logic = Logic::LetKPlus);

}  // namespace letlab
