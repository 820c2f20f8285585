#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace letlab {

// Propositional connectives of the LET signature {∧, ∨, →, ¬, ∘} plus the
// constants ⊤/⊥ and variables.  The implication-free fragment (LET_F logics)
// is the same signature without Imp.
enum class Conn : std::uint8_t { Var, Top, Bot, Not, Circ, And, Or, Imp };

// Immutable formula tree with value semantics.  Copies share structure; all
// observers are const, so formulas are freely shareable across threads.
// Equality and hashing are structural.
class Formula {
public:
    static Formula var(std::string name);
    static Formula top();
    static Formula bot();
    static Formula neg(Formula a);
    static Formula circ(Formula a);
    static Formula conj(Formula a, Formula b);
    static Formula disj(Formula a, Formula b);
    static Formula impl(Formula a, Formula b);

    Conn conn() const { return node_->conn; }
    bool is_binary() const { return conn() == Conn::And || conn() == Conn::Or || conn() == Conn::Imp; }
    bool is_unary() const { return conn() == Conn::Not || conn() == Conn::Circ; }
    bool is_leaf() const { return conn() == Conn::Var || conn() == Conn::Top || conn() == Conn::Bot; }

    const std::string& name() const;  // Var only
    Formula child() const;            // Not / Circ
    Formula lhs() const;              // And / Or / Imp
    Formula rhs() const;

    std::size_t hash() const { return node_->hash; }
    bool operator==(const Formula& other) const;
    bool operator!=(const Formula& other) const { return !(*this == other); }

    // True when no Imp node occurs anywhere in the tree.
    bool implication_free() const;

private:
    struct Node {
        Conn conn;
        std::size_t hash;
        std::string name;  // Var only
        std::shared_ptr<const Node> a, b;
    };
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Formula make(Conn c, std::string name, std::shared_ptr<const Node> a,
                        std::shared_ptr<const Node> b);

    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Γ ⊢ A query: finite ordered premise list (possibly empty) and a conclusion.
struct Sequent {
    std::vector<Formula> premises;
    Formula conclusion;
};

// Raised on malformed input text.  `offset` is the byte offset of the
// offending token; `expected` describes the token set that would have been
// accepted there.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, std::string expected, std::string got);
    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// Raised when a formula uses a connective outside the selected fragment
// (an Imp node under an implication-free logic).
class FragmentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Grammar (ASCII first, Unicode aliases in parentheses):
//   imp  := or ('->' imp)?          right-associative   (→)
//   or   := and ('|' and)*          left-associative    (∨)
//   and  := unary ('&' unary)*      left-associative    (∧)
//   unary:= ('~' | 'o' | '@') unary | atom              (¬, ∘)
//   atom := ident | 'T' | 'top' | 'F' | 'bot' | '(' imp ')'
// 'T', 'top', 'F', 'bot' and 'o' are reserved words; any other identifier
// ([A-Za-z_][A-Za-z0-9_']*) is a variable.
Formula parse_formula(std::string_view text);

// "F1, F2, ... |- G"; the left side may be empty.
Sequent parse_sequent(std::string_view text);

// Minimal-parentheses rendering; parse(print(f)) is structurally equal to f.
std::string to_string(const Formula& f);
std::string to_string(const Sequent& s);

// All subformulas of all formulas in the sequent, structurally deduplicated,
// children before parents.  Order is deterministic: premises left to right,
// then the conclusion, each traversed left-to-right depth-first.
std::vector<Formula> subformula_closure(const Sequent& s);
std::vector<Formula> subformula_closure(const Formula& f);

// Extends a subformula-closed list with ¬A and ∘A for every member A.  The
// result is still closed under children; the first `base.size()` entries are
// the input list.
std::vector<Formula> triple_closure(const std::vector<Formula>& base);

// Variable names in left-to-right first-occurrence order.
std::vector<std::string> variables(const Formula& f);
std::vector<std::string> variables(const Sequent& s);

}  // namespace letlab
