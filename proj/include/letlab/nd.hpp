#pragma once

#include <optional>
#include <string>
#include <vector>

#include "letlab/formula.hpp"
#include "letlab/logic.hpp"

namespace letlab {

// Rule identifiers for the natural-deduction calculi.  Rules with left/right
// variants (AndE, OrI, ...) carry both schemas under one identifier; the
// checker tries the alternatives in order.
enum class RuleId {
    Hyp,
    // basic rules
    AndI, AndE, OrI, OrE, NegAndI, NegAndE, NegOrI, NegOrE, DN,
    ImpI, ImpE, ToCL, NegImpI, NegImpE, ExpCirc, PemCirc,
    // classicality-propagation rules (plus systems only)
    ICirc, INegCirc, ENegCirc,
    IAndT, IAndF, IOrT, IOrF, IImpT, IImpF,
    EAndT, EAndF, EOrT, EOrF, EImpT, EImpF,
    // derived (admitted behind a flag)
    Cons, Comp,
};

const char* to_string(RuleId r);
std::optional<RuleId> rule_from_string(const std::string& name);

// Derivation tree.  Hyp nodes are leaves and carry a label; `discharges`
// aligns with the rule's discharge slots (improper rules only) and an empty
// string marks a vacuous discharge.
struct ProofNode {
    RuleId rule;
    Formula conclusion;
    std::vector<ProofNode> premises;
    std::vector<std::string> discharges;
    std::string label;  // Hyp only
};

struct CheckResult {
    std::vector<Formula> open_hypotheses;  // deduplicated, first-occurrence order
    Formula conclusion;
    Logic logic;
};

class ProofError : public std::runtime_error {
public:
    ProofError(std::string path, const std::string& what)
        : std::runtime_error("at " + path + ": " + what), path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;  // node path like "root/2/1"
};

// Validates every rule application: the node's conclusion and premises must
// match one of the rule's schemas under a consistent metavariable
// instantiation, improper rules must discharge hypotheses equal to the
// instantiated schema hypothesis inside the designated subderivation, and
// every rule must belong to `logic` (derived rules additionally need
// `allow_derived`).
CheckResult check_proof(const ProofNode& root, Logic logic, bool allow_derived = false);

// One schema of a rule: premise patterns (with the hypothesis pattern a
// subderivation may discharge, for improper slots) and a conclusion pattern.
// Metavariables are pattern variables named A, B, C.
struct RuleSchema {
    struct Premise {
        Formula pattern;
        std::optional<Formula> discharged;
    };
    std::vector<Premise> premises;
    Formula conclusion;
};

struct RuleInfo {
    RuleId id;
    std::vector<RuleSchema> alternatives;
    bool uses_implication;
    bool plus_only;
    bool derived;
};

const std::vector<RuleInfo>& rule_table();
const RuleInfo& rule_info(RuleId id);
bool rule_in_logic(RuleId id, Logic logic, bool allow_derived);
std::vector<RuleId> rules_of(Logic logic, bool include_derived);

// First-order matching of a schema pattern against a concrete formula;
// pattern variables bind whole formulas.  Returns false on conflict.
bool match_pattern(const Formula& pattern, const Formula& concrete,
                   std::vector<std::pair<std::string, Formula>>& bindings);
Formula substitute(const Formula& pattern,
                   const std::vector<std::pair<std::string, Formula>>& bindings);

struct SoundnessVerdict {
    bool valid;
    std::string detail;  // countermodel or mismatch description when invalid
};

// Re-checks a proof's sequent ⟨open hypotheses ⊢ conclusion⟩ against the
// logic's semantics (the deterministic matrix for the plus systems, the
// Nmatrix otherwise).  An invalid result indicates a checker bug or an
// unsound rule encoding.
SoundnessVerdict soundness_harness(const ProofNode& root, Logic logic,
                                   bool allow_derived = false);

// Schema-level soundness: instantiates the rule's metavariables with
// distinct fresh variables and verifies, for every valuation of the logic's
// semantics, that designated premises (and, for improper slots, the
// per-valuation conditional "hypothesis designated implies subconclusion
// designated") force a designated conclusion.
bool rule_semantically_sound(RuleId id, Logic logic);

// JSON proof files: {"rule": ..., "formula": ..., "premises": [...],
// "discharge": [...], "label": ...}.
ProofNode parse_proof(const std::string& json_text);
ProofNode load_proof_file(const std::string& path);

}  // namespace letlab
