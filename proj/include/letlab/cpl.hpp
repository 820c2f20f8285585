#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "letlab/formula.hpp"
#include "letlab/logic.hpp"

namespace letlab {

// Term over the Boolean-algebra signature {⊓, ⊔, ⇒, ∼, ⊥, ⊤} with coordinate
// variables p^j (j ∈ {1,2,3}) for every source variable p.  ASCII rendering
// uses *, +, =>, -, 0, 1 and prints variables as "p^1".
class BoolTerm {
public:
    enum class Kind : std::uint8_t { Var, Top, Bot, Comp, Meet, Join, Imp };

    static BoolTerm var(std::string base, int coord);
    static BoolTerm top();
    static BoolTerm bot();
    static BoolTerm comp(BoolTerm a);
    static BoolTerm meet(BoolTerm a, BoolTerm b);
    static BoolTerm join(BoolTerm a, BoolTerm b);
    static BoolTerm imp(BoolTerm a, BoolTerm b);

    Kind kind() const { return node_->kind; }
    const std::string& base() const { return node_->base; }  // Var
    int coord() const { return node_->coord; }               // Var
    BoolTerm child() const;                                  // Comp
    BoolTerm lhs() const;
    BoolTerm rhs() const;

    // Node identity; shared subterms compare equal.  Lets evaluators treat
    // the term as a DAG instead of a tree.
    const void* id() const { return node_.get(); }

private:
    struct Node {
        Kind kind;
        std::string base;
        int coord = 0;
        std::shared_ptr<const Node> a, b;
    };
    explicit BoolTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

std::string to_string(const BoolTerm& t);

// Coordinate variable identity: (source variable, coordinate).
struct CoordVar {
    std::string base;
    int coord;
    bool operator==(const CoordVar&) const = default;
    std::string name() const { return base + "^" + std::to_string(coord); }
};

// Distinct variables of a term in first-occurrence order.
std::vector<CoordVar> term_variables(const BoolTerm& t);

// The three coordinate terms (value of A, of ¬A, of ∘A) of a formula, by
// structural recursion over the twist closed forms; no simplification is
// performed.  Variables pᵢ map to (pᵢ^1, pᵢ^2, pᵢ^3), ⊤ to (1,0,1) and ⊥ to
// (0,1,1).
struct CoordTerms {
    BoolTerm t1, t2, t3;
};
CoordTerms coord_terms(const Formula& f, Logic logic = Logic::LetKPlus);

// τ for one variable: (p^3 => (p^1 + p^2)) * -(p^1 * p^2 * p^3), the
// statement that (p^1,p^2,p^3) is a snapshot.
BoolTerm snapshot_constraint(const std::string& var);

// Meet of the per-variable constraints, 1 when the list is empty.
BoolTerm constraint_term(const std::vector<std::string>& vars);

// Γ ⊨ A reduced to a classical tautology:  constraints => (t1(Γ∧) => t1(A)),
// with Γ∧ the left-associated conjunction of the premises; for empty Γ just
// constraints => t1(A).
BoolTerm reduce_sequent(const Sequent& s, Logic logic = Logic::LetKPlus);

struct TautResult {
    bool tautology;
    // first falsifying row in enumeration order, as (variable, bit) pairs
    std::vector<std::pair<CoordVar, bool>> falsifier;
    std::uint64_t rows_checked = 0;
};

// Classical tautology checking.  The baseline engine enumerates all 2^m rows
// over the term's m distinct variables, short-circuiting on the first
// falsifier; other engines can be plugged behind the same interface.
class CplEngine {
public:
    virtual ~CplEngine() = default;
    virtual TautResult tautology(const BoolTerm& t) const = 0;
};

class TruthTableEngine final : public CplEngine {
public:
    TautResult tautology(const BoolTerm& t) const override;
};

TautResult cpl_taut(const BoolTerm& t);  // runs the truth-table engine

// Multi-line report used by the CLI `reduce` command (and pinned by tests):
//   sequent: ...
//   constraints: ...
//   premise-term: ...      (omitted when Γ is empty)
//   conclusion-term: ...
//   reduction: ...
std::string reduce_report(const Sequent& s, Logic logic = Logic::LetKPlus);

}  // namespace letlab
