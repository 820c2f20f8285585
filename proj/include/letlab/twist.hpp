#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "letlab/boolean_algebra.hpp"
#include "letlab/formula.hpp"
#include "letlab/logic.hpp"
#include "letlab/snapshots.hpp"

namespace letlab {

// Twist algebra over an arbitrary finite Boolean algebra B: the snapshot
// domain equipped with the coordinatewise closed-form operations
//   z ∧̃ w = (z1⊓w1, z2⊔w2, (z1⊓z3⊓w1⊓w3) ⊔ (z2⊓z3) ⊔ (w2⊓w3))
//   z ∨̃ w = (z1⊔w1, z2⊓w2, (z2⊓z3⊓w2⊓w3) ⊔ (z1⊓z3) ⊔ (w1⊓w3))
//   z →̃ w = (z1⇒w1, z1⊓w2, (z1⊓w2⊓w3) ⊔ (z2⊓z3) ⊔ (w1⊓w3))
//   ¬̃ z   = (z2, z1, z3)
//   ∘̃ z   = (z3, ∼z3, 1)
// Operation tables are precomputed on the whole domain, so evaluation is a
// plain index lookup.  Over the two-element algebra this coincides with the
// six-valued tables for LET_K+.
class TwistAlgebra {
public:
    TwistAlgebra(BooleanAlgebra base, Logic logic = Logic::LetKPlus);

    const BooleanAlgebra& base() const { return base_; }
    Logic logic() const { return logic_; }
    int size() const { return static_cast<int>(domain_.size()); }
    const std::vector<Snapshot>& domain() const { return domain_; }
    Snapshot at(int i) const { return domain_[static_cast<std::size_t>(i)]; }
    int index_of(const Snapshot& z) const;  // throws if z is not a snapshot of base

    int op_and(int i, int j) const { return and_[idx(i, j)]; }
    int op_or(int i, int j) const { return or_[idx(i, j)]; }
    int op_imp(int i, int j) const;
    int op_not(int i) const { return not_[static_cast<std::size_t>(i)]; }
    int op_circ(int i) const { return circ_[static_cast<std::size_t>(i)]; }

    bool designated(int i) const { return at(i).pos == base_.top(); }
    int top_index() const { return top_; }     // (1,0,1)
    int bottom_index() const { return bot_; }  // (0,1,1)

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * domain_.size() + static_cast<std::size_t>(j);
    }

    BooleanAlgebra base_;
    Logic logic_;
    std::vector<Snapshot> domain_;
    std::unordered_map<std::uint64_t, int> index_;
    std::vector<int> and_, or_, imp_, not_, circ_;
    int top_ = 0, bot_ = 0;
};

// z ≤ w in the lattice order induced by ∧̃ / ∨̃, via the closed four-condition
// characterization: z1 ≤ w1, z2 ≥ w2, z2⊓z3 ≥ w2⊓w3, z3 ≤ (z1⊓w3) ⊔ z2.
bool order_leq(const BooleanAlgebra& algebra, const Snapshot& z, const Snapshot& w);

struct LatticeReport {
    std::vector<std::string> failures;
    std::uint64_t checks = 0;
    bool ok() const { return failures.empty(); }
};

// Exhaustively checks idempotence, commutativity, associativity and
// absorption of ∧̃ / ∨̃ plus the bound laws z ∧̃ T = z = z ∨̃ F over the whole
// domain.  Failures are collected, not thrown.
LatticeReport verify_lattice(const TwistAlgebra& twist);

namespace detail {
// Table-level checker, shared with the report above; lets tests corrupt a
// table copy and watch the laws fail.
LatticeReport verify_lattice_tables(int size, const std::vector<int>& and_table,
                                    const std::vector<int>& or_table, int top_index,
                                    int bottom_index);
}  // namespace detail

struct TwistEntailResult {
    enum class Status { Valid, Invalid, BudgetExceeded };
    Status status;
    // variable name -> snapshot, for the first countermodel found
    std::vector<std::pair<std::string, Snapshot>> countermodel;
    std::uint64_t assignments_checked = 0;
};

// Brute force over |domain|^k assignments; refuses to run past `budget`
// evaluations and reports that instead of sampling.
TwistEntailResult twist_entails(const TwistAlgebra& twist, const Sequent& s,
                                std::uint64_t budget = 100'000'000ULL);

// --- the informational meet-semilattice over the six values ----------------
//
// Values are read as subsets of {0, 1, c}: n=∅, T0={1}, F0={0}, T={1,c},
// F={0,c}, b={0,1}  (c marks the information as reliable; {c} alone and
// {0,1,c} are excluded).  Order is inclusion; meets always exist, joins only
// when some member of the domain contains both operands.

bool a6_order(Value6 z, Value6 w);
Value6 a6_meet(Value6 z, Value6 w);
std::optional<Value6> a6_join(Value6 z, Value6 w);

// The subset encoding as a 3-bit mask (bit0 = "0", bit1 = "1", bit2 = "c").
std::uint8_t a6_encoding(Value6 v);

}  // namespace letlab
