#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "letlab/formula.hpp"
#include "letlab/logic.hpp"
#include "letlab/snapshots.hpp"

namespace letlab {

// Small set of truth values as a 6-bit mask; bit i corresponds to the value
// with canonical index i.
struct ValueSet {
    std::uint8_t bits = 0;

    static ValueSet of(std::initializer_list<Value6> vs);
    bool contains(Value6 v) const { return bits >> static_cast<int>(v) & 1; }
    void add(Value6 v) { bits |= static_cast<std::uint8_t>(1u << static_cast<int>(v)); }
    int size() const;
    bool empty() const { return bits == 0; }
    Value6 nth(int k) const;  // k-th member in canonical order
    std::string to_string() const;
    bool operator==(const ValueSet&) const = default;
};

inline const ValueSet kDesignated = ValueSet{0b000111};     // {T, T0, b}
inline const ValueSet kNonDesignated = ValueSet{0b111000};  // {n, F0, F}

// The non-deterministic six-valued tables for LET_K (LET_F− drops the
// implication).  Outputs are nonempty sets: the first two coordinates of the
// result are functions of the inputs, the third coordinate is free subject
// to the snapshot constraints.  Generated from those coordinate rules and
// asserted equal to a transcription of the published tables at construction.
struct MultiOpTable {
    std::array<std::array<ValueSet, 6>, 6> conj;
    std::array<std::array<ValueSet, 6>, 6> disj;
    std::array<std::array<ValueSet, 6>, 6> imp;  // meaningful only with has_imp
    std::array<ValueSet, 6> neg;
    std::array<ValueSet, 6> circ;
    bool has_imp = true;
};

// `logic` must be LetK or LetFMinus.
const MultiOpTable& nmatrix_table(Logic logic = Logic::LetK);
const MultiOpTable& nmatrix_table_transcribed();

// Deterministic index for a subformula-closed formula list.
struct ClosureIndex {
    std::vector<Formula> formulas;
    std::unordered_map<Formula, std::size_t, FormulaHash> position;

    static std::shared_ptr<const ClosureIndex> make(std::vector<Formula> formulas);
};

// A legal valuation restricted to a subformula-closed domain: at every
// compound node the value is a member of the table's output set applied to
// the children's values.
class ClosureValuation {
public:
    ClosureValuation(std::shared_ptr<const ClosureIndex> closure, std::vector<Value6> values)
        : closure_(std::move(closure)), values_(std::move(values)) {}

    const std::vector<Formula>& domain() const { return closure_->formulas; }
    Value6 at_index(std::size_t i) const { return values_[i]; }
    Value6 at(const Formula& f) const;
    const std::shared_ptr<const ClosureIndex>& closure() const { return closure_; }
    std::string to_string() const;  // "p=T ~p=F0 ..."

private:
    std::shared_ptr<const ClosureIndex> closure_;
    std::vector<Value6> values_;
};

// Streams every legal valuation on the subformula closure of `s`, exactly
// once each.  Variables range over all six values (⊤ ↦ T, ⊥ ↦ F) and each
// compound node over its table output set; enumeration order is the closure
// order with choice sets iterated in canonical value order.  Not shareable
// across threads; create one per worker.
class ValuationEnumerator {
public:
    ValuationEnumerator(const Sequent& s, Logic logic);

    // Returns valuations until exhausted.
    std::optional<ClosureValuation> next();

private:
    bool rebuild_from(std::size_t start);  // recompute choice sets and reset indices
    bool advance();

    std::shared_ptr<const ClosureIndex> closure_;
    const MultiOpTable* table_;
    struct Node {
        Conn conn;
        int a = -1, b = -1;
    };
    std::vector<Node> plan_;
    std::vector<ValueSet> choice_;
    std::vector<int> choice_idx_;
    std::vector<Value6> value_;
    bool fresh_ = true;
    bool done_ = false;
};

inline ValuationEnumerator legal_valuations(const Sequent& s, Logic logic = Logic::LetK) {
    return ValuationEnumerator(s, logic);
}

struct NmatrixEntailResult {
    bool valid;
    std::optional<ClosureValuation> countermodel;
    std::uint64_t valuations_checked = 0;
};

// Γ ⊨ A over every legal valuation on the subformula closure.
NmatrixEntailResult nmatrix_entails(const Sequent& s, Logic logic = Logic::LetK);

}  // namespace letlab
