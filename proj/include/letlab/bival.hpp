#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "letlab/formula.hpp"
#include "letlab/logic.hpp"
#include "letlab/matrix6.hpp"
#include "letlab/nmatrix.hpp"

namespace letlab {

// Two-valued assignment on a finite subformula-closed domain.  The clause
// presentations below are all local, so closed domains suffice for checking.
class Bivaluation {
public:
    explicit Bivaluation(std::vector<Formula> domain);

    // Domain closed under children plus ¬A / ∘A for every member of the base
    // closure of `s`; the base closure comes first.
    static Bivaluation on_triple_closure(const Sequent& s);

    const std::vector<Formula>& domain() const { return domain_; }
    bool contains(const Formula& f) const { return position_.count(f) != 0; }
    bool value(const Formula& f) const;
    void set(const Formula& f, bool v);
    bool domain_is_closed() const;  // every child of every member is a member

private:
    friend class ValuationBridge;
    std::vector<Formula> domain_;
    std::unordered_map<Formula, std::size_t, FormulaHash> position_;
    std::vector<bool> bits_;
};

// Named closure clauses.  v1–v8 axiomatize LET_K bivaluations, vp1–vp17 the
// LET_K+ extension, v9–v11 the compact Boolean reformulation of vp3–vp17.
enum class ClauseId {
    V1, V2, V3, V4, V5, V6, V7, V8,
    Vp1, Vp2, Vp3, Vp4, Vp5, Vp6, Vp7, Vp8, Vp9, Vp10, Vp11, Vp12,
    Vp13, Vp14, Vp15, Vp16, Vp17,
    V9, V10, V11,
    Consts,  // ⊤ ↦ 1 / ⊥ ↦ 0 and their ¬/∘ companions
};

const char* to_string(ClauseId c);

enum class ClauseSet {
    LetKV1V8,          // v1–v8 (+ constants)
    LetKPlusVp1Vp17,   // v1–v8, vp1–vp17
    LetKPlusCompact,   // v1–v8, vp1, vp2, v9–v11
};

std::optional<ClauseSet> clause_set_from_string(const std::string& name);

struct ClauseReport {
    struct Violation {
        ClauseId clause;
        Formula at;           // the formula instance triggering the clause
        std::string detail;
    };
    std::vector<Violation> violations;
    // clause instances whose required formulas are missing from the domain
    std::vector<std::pair<ClauseId, Formula>> not_applicable;
    std::uint64_t instances_checked = 0;
    bool ok() const { return violations.empty(); }
};

ClauseReport check_clauses(const Bivaluation& rho, ClauseSet set);

// Triple of two-valued snapshots for one binary-connective instance:
// (ρA, ρ¬A, ρ∘A, ρB, ρ¬B, ρ∘B, ρC, ρ¬C, ρ∘C) with C the compound.  Used for
// the finite clause-presentation equivalence checks.
struct LocalProfile {
    bool a, na, ca;  // ρA, ρ¬A, ρ∘A
    bool b, nb, cb;
    bool c, nc, cc;

    bool triples_are_snapshots() const;
};

// All 6^3 profiles whose three triples satisfy the snapshot constraints.
std::vector<LocalProfile> all_constrained_profiles();

// Constrained profiles whose C-triple is additionally coherent with the
// connective's first two coordinate laws (v1/v5 for ∧, v2/v6 for ∨, v3/v7
// for →); only ρ∘C stays free.  The clause-presentation equivalences are
// statements about bivaluations, so they quantify over these.
std::vector<LocalProfile> coherent_profiles(Conn conn);

// Profile-level clause evaluation for the conjunction clauses vp3–vp7 / v9,
// the disjunction clauses vp8–vp12 / v10, the implication clauses
// vp13–vp17 / v11, and the contrapositive reformulations of vp6, vp7, vp11,
// vp12, vp16, vp17 (passed as the `primed` flag).
bool profile_satisfies(ClauseId clause, const LocalProfile& p, bool primed = false);

// --- translations between valuations and bivaluations ----------------------

enum class TranslationTarget { LetKNmatrix, LetKPlusMatrix };

class ClauseViolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Truth values for every formula of a closed list (the matrix-side view of a
// valuation; for the Nmatrix side ClosureValuation plays the same role).
struct TripleValuation {
    std::vector<Formula> domain;
    std::vector<Value6> values;

    Value6 at(const Formula& f) const;
};

// ρ_v(A) = first coordinate of v(A): designation becomes truth.
Bivaluation from_valuation(const ClosureValuation& v);
Bivaluation from_valuation(const TripleValuation& v);

// v_ρ(A) = (ρA, ρ¬A, ρ∘A), for every A of `base` (whose ¬/∘ companions must
// be in ρ's domain).  Verifies legality for the chosen target semantics and
// throws ClauseViolationError otherwise.
TripleValuation to_valuation(const Bivaluation& rho, const std::vector<Formula>& base,
                             TranslationTarget target);

}  // namespace letlab
