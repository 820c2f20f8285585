#include "letlab/nd.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "letlab/matrix6.hpp"
#include "letlab/nmatrix.hpp"

namespace letlab {

const char* to_string(RuleId r) {
    switch (r) {
        case RuleId::Hyp: return "Hyp";
        case RuleId::AndI: return "AndI";
        case RuleId::AndE: return "AndE";
        case RuleId::OrI: return "OrI";
        case RuleId::OrE: return "OrE";
        case RuleId::NegAndI: return "NegAndI";
        case RuleId::NegAndE: return "NegAndE";
        case RuleId::NegOrI: return "NegOrI";
        case RuleId::NegOrE: return "NegOrE";
        case RuleId::DN: return "DN";
        case RuleId::ImpI: return "ImpI";
        case RuleId::ImpE: return "ImpE";
        case RuleId::ToCL: return "ToCL";
        case RuleId::NegImpI: return "NegImpI";
        case RuleId::NegImpE: return "NegImpE";
        case RuleId::ExpCirc: return "ExpCirc";
        case RuleId::PemCirc: return "PemCirc";
        case RuleId::ICirc: return "ICirc";
        case RuleId::INegCirc: return "INegCirc";
        case RuleId::ENegCirc: return "ENegCirc";
        case RuleId::IAndT: return "IAndT";
        case RuleId::IAndF: return "IAndF";
        case RuleId::IOrT: return "IOrT";
        case RuleId::IOrF: return "IOrF";
        case RuleId::IImpT: return "IImpT";
        case RuleId::IImpF: return "IImpF";
        case RuleId::EAndT: return "EAndT";
        case RuleId::EAndF: return "EAndF";
        case RuleId::EOrT: return "EOrT";
        case RuleId::EOrF: return "EOrF";
        case RuleId::EImpT: return "EImpT";
        case RuleId::EImpF: return "EImpF";
        case RuleId::Cons: return "Cons";
        case RuleId::Comp: return "Comp";
    }
    return "?";
}

std::optional<RuleId> rule_from_string(const std::string& name) {
    for (int i = 0; i <= static_cast<int>(RuleId::Comp); ++i) {
        const RuleId r = static_cast<RuleId>(i);
        if (name == to_string(r)) return r;
    }
    return std::nullopt;
}

namespace {

// A^T = ∘A ∧ A marks A as reliably true; A^F = ∘A ∧ ¬A as reliably false.
Formula tmark(const Formula& x) { return Formula::conj(Formula::circ(x), x); }
Formula fmark(const Formula& x) { return Formula::conj(Formula::circ(x), Formula::neg(x)); }

std::vector<RuleInfo> build_rule_table() {
    const Formula A = Formula::var("A");
    const Formula B = Formula::var("B");
    const Formula C = Formula::var("C");
    using P = RuleSchema::Premise;
    auto proper = [](Formula pattern) { return P{std::move(pattern), std::nullopt}; };
    auto sub = [](Formula pattern, Formula hyp) { return P{std::move(pattern), std::move(hyp)}; };

    std::vector<RuleInfo> rules;
    auto add = [&](RuleId id, std::vector<RuleSchema> alts, bool imp = false, bool plus = false,
                   bool derived = false) {
        rules.push_back({id, std::move(alts), imp, plus, derived});
    };

    add(RuleId::AndI, {{{proper(A), proper(B)}, Formula::conj(A, B)}});
    add(RuleId::AndE, {{{proper(Formula::conj(A, B))}, A},
                       {{proper(Formula::conj(A, B))}, B}});
    add(RuleId::OrI, {{{proper(A)}, Formula::disj(A, B)},
                      {{proper(B)}, Formula::disj(A, B)}});
    add(RuleId::OrE, {{{proper(Formula::disj(A, B)), sub(C, A), sub(C, B)}, C}});
    add(RuleId::NegAndI, {{{proper(Formula::neg(A))}, Formula::neg(Formula::conj(A, B))},
                          {{proper(Formula::neg(B))}, Formula::neg(Formula::conj(A, B))}});
    add(RuleId::NegAndE, {{{proper(Formula::neg(Formula::conj(A, B))), sub(C, Formula::neg(A)),
                            sub(C, Formula::neg(B))},
                           C}});
    add(RuleId::NegOrI, {{{proper(Formula::neg(A)), proper(Formula::neg(B))},
                          Formula::neg(Formula::disj(A, B))}});
    add(RuleId::NegOrE, {{{proper(Formula::neg(Formula::disj(A, B)))}, Formula::neg(A)},
                         {{proper(Formula::neg(Formula::disj(A, B)))}, Formula::neg(B)}});
    add(RuleId::DN, {{{proper(A)}, Formula::neg(Formula::neg(A))},
                     {{proper(Formula::neg(Formula::neg(A)))}, A}});
    add(RuleId::ImpI, {{{sub(B, A)}, Formula::impl(A, B)}}, true);
    add(RuleId::ImpE, {{{proper(Formula::impl(A, B)), proper(A)}, B}}, true);
    add(RuleId::ToCL, {{{}, Formula::disj(A, Formula::impl(A, B))}}, true);
    add(RuleId::NegImpI, {{{proper(A), proper(Formula::neg(B))},
                           Formula::neg(Formula::impl(A, B))}},
        true);
    add(RuleId::NegImpE, {{{proper(Formula::neg(Formula::impl(A, B)))}, A},
                          {{proper(Formula::neg(Formula::impl(A, B)))}, Formula::neg(B)}},
        true);
    add(RuleId::ExpCirc, {{{proper(Formula::circ(A)), proper(A), proper(Formula::neg(A))}, B}});
    add(RuleId::PemCirc, {{{proper(Formula::circ(A))}, Formula::disj(A, Formula::neg(A))}});

    add(RuleId::ICirc, {{{}, Formula::circ(Formula::circ(A))}}, false, true);
    add(RuleId::INegCirc, {{{proper(Formula::circ(A))}, Formula::circ(Formula::neg(A))}}, false,
        true);
    add(RuleId::ENegCirc, {{{proper(Formula::circ(Formula::neg(A)))}, Formula::circ(A)}}, false,
        true);
    add(RuleId::IAndT, {{{proper(tmark(A)), proper(tmark(B))}, tmark(Formula::conj(A, B))}},
        false, true);
    add(RuleId::IAndF, {{{proper(fmark(A))}, fmark(Formula::conj(A, B))},
                        {{proper(fmark(B))}, fmark(Formula::conj(A, B))}},
        false, true);
    add(RuleId::IOrT, {{{proper(tmark(A))}, tmark(Formula::disj(A, B))},
                       {{proper(tmark(B))}, tmark(Formula::disj(A, B))}},
        false, true);
    add(RuleId::IOrF, {{{proper(fmark(A)), proper(fmark(B))}, fmark(Formula::disj(A, B))}},
        false, true);
    add(RuleId::IImpT, {{{proper(fmark(A))}, tmark(Formula::impl(A, B))},
                        {{proper(tmark(B))}, tmark(Formula::impl(A, B))}},
        true, true);
    add(RuleId::IImpF, {{{proper(A), proper(fmark(B))}, fmark(Formula::impl(A, B))}}, true, true);
    add(RuleId::EAndT, {{{proper(tmark(Formula::conj(A, B)))}, tmark(A)},
                        {{proper(tmark(Formula::conj(A, B)))}, tmark(B)}},
        false, true);
    add(RuleId::EAndF, {{{proper(fmark(Formula::conj(A, B))), sub(C, fmark(A)), sub(C, fmark(B))},
                         C}},
        false, true);
    add(RuleId::EOrT, {{{proper(tmark(Formula::disj(A, B))), sub(C, tmark(A)), sub(C, tmark(B))},
                        C}},
        false, true);
    add(RuleId::EOrF, {{{proper(fmark(Formula::disj(A, B)))}, fmark(A)},
                       {{proper(fmark(Formula::disj(A, B)))}, fmark(B)}},
        false, true);
    add(RuleId::EImpT, {{{proper(tmark(Formula::impl(A, B))), sub(C, fmark(A)), sub(C, tmark(B))},
                         C}},
        true, true);
    add(RuleId::EImpF, {{{proper(fmark(Formula::impl(A, B)))}, A},
                        {{proper(fmark(Formula::impl(A, B)))}, fmark(B)}},
        true, true);

    add(RuleId::Cons, {{{proper(Formula::circ(A)), proper(Formula::neg(Formula::circ(A)))}, B}},
        false, true, true);
    add(RuleId::Comp,
        {{{sub(B, Formula::circ(A)), sub(B, Formula::neg(Formula::circ(A)))}, B}}, false, true,
        true);
    return rules;
}

}  // namespace

const std::vector<RuleInfo>& rule_table() {
    static const std::vector<RuleInfo> table = build_rule_table();
    return table;
}

const RuleInfo& rule_info(RuleId id) {
    for (const RuleInfo& r : rule_table())
        if (r.id == id) return r;
    throw std::invalid_argument("Hyp has no rule schema");
}

bool rule_in_logic(RuleId id, Logic logic, bool allow_derived) {
    if (id == RuleId::Hyp) return true;
    const RuleInfo& info = rule_info(id);
    if (info.uses_implication && !has_implication(logic)) return false;
    if (info.plus_only && !is_plus(logic)) return false;
    if (info.derived && !allow_derived) return false;
    return true;
}

std::vector<RuleId> rules_of(Logic logic, bool include_derived) {
    std::vector<RuleId> out;
    for (const RuleInfo& r : rule_table())
        if (rule_in_logic(r.id, logic, include_derived)) out.push_back(r.id);
    return out;
}

bool match_pattern(const Formula& pattern, const Formula& concrete,
                   std::vector<std::pair<std::string, Formula>>& bindings) {
    if (pattern.conn() == Conn::Var) {
        for (const auto& [name, bound] : bindings)
            if (name == pattern.name()) return bound == concrete;
        bindings.emplace_back(pattern.name(), concrete);
        return true;
    }
    if (pattern.conn() != concrete.conn()) return false;
    if (pattern.is_unary()) return match_pattern(pattern.child(), concrete.child(), bindings);
    if (pattern.is_binary())
        return match_pattern(pattern.lhs(), concrete.lhs(), bindings) &&
               match_pattern(pattern.rhs(), concrete.rhs(), bindings);
    return true;  // Top / Bot
}

Formula substitute(const Formula& pattern,
                   const std::vector<std::pair<std::string, Formula>>& bindings) {
    switch (pattern.conn()) {
        case Conn::Var:
            for (const auto& [name, bound] : bindings)
                if (name == pattern.name()) return bound;
            throw std::logic_error("unbound metavariable '" + pattern.name() + "'");
        case Conn::Not: return Formula::neg(substitute(pattern.child(), bindings));
        case Conn::Circ: return Formula::circ(substitute(pattern.child(), bindings));
        case Conn::And:
            return Formula::conj(substitute(pattern.lhs(), bindings),
                                 substitute(pattern.rhs(), bindings));
        case Conn::Or:
            return Formula::disj(substitute(pattern.lhs(), bindings),
                                 substitute(pattern.rhs(), bindings));
        case Conn::Imp:
            return Formula::impl(substitute(pattern.lhs(), bindings),
                                 substitute(pattern.rhs(), bindings));
        default: return pattern;
    }
}

namespace {

using Open = std::vector<std::pair<std::string, Formula>>;  // label -> hypothesis

void merge_open(Open& into, const Open& from, const std::string& path) {
    for (const auto& [label, formula] : from) {
        bool found = false;
        for (const auto& [l2, f2] : into) {
            if (l2 == label) {
                if (!(f2 == formula))
                    throw ProofError(path, "label '" + label + "' names both '" + to_string(f2) +
                                               "' and '" + to_string(formula) + "'");
                found = true;
                break;
            }
        }
        if (!found) into.emplace_back(label, formula);
    }
}

// Tries one schema; returns the open hypotheses on success.
std::optional<Open> try_schema(const ProofNode& node, const RuleSchema& schema,
                               const std::vector<Open>& premise_open, const std::string& path,
                               std::string& why_not) {
    std::vector<std::pair<std::string, Formula>> bindings;
    for (std::size_t i = 0; i < schema.premises.size(); ++i) {
        if (!match_pattern(schema.premises[i].pattern, node.premises[i].conclusion, bindings)) {
            why_not = "premise " + std::to_string(i + 1) + " '" +
                      to_string(node.premises[i].conclusion) + "' does not match the schema";
            return std::nullopt;
        }
    }
    if (!match_pattern(schema.conclusion, node.conclusion, bindings)) {
        why_not = "conclusion '" + to_string(node.conclusion) + "' does not match the schema";
        return std::nullopt;
    }

    // discharge bookkeeping, slot by slot.  The labeled hypothesis is
    // matched against the schema's hypothesis pattern; this also pins down
    // metavariables that occur in discharged hypotheses only (Comp's A).
    std::vector<Open> open = premise_open;
    std::size_t slot = 0;
    for (std::size_t i = 0; i < schema.premises.size(); ++i) {
        if (!schema.premises[i].discharged) continue;
        const std::string label = slot < node.discharges.size() ? node.discharges[slot] : "";
        ++slot;
        if (label.empty()) continue;  // vacuous discharge
        bool found = false;
        for (std::size_t k = 0; k < open[i].size(); ++k) {
            if (open[i][k].first == label) {
                if (!match_pattern(*schema.premises[i].discharged, open[i][k].second, bindings)) {
                    why_not = "label '" + label + "' is '" + to_string(open[i][k].second) +
                              "' which does not fit the hypothesis the rule discharges";
                    return std::nullopt;
                }
                open[i].erase(open[i].begin() + static_cast<std::ptrdiff_t>(k));
                found = true;
                break;
            }
        }
        if (!found) {
            why_not = "discharge label '" + label + "' does not occur open in premise " +
                      std::to_string(i + 1);
            return std::nullopt;
        }
    }
    if (slot < node.discharges.size() && !node.discharges[slot].empty()) {
        why_not = "rule has only " + std::to_string(slot) + " discharge slot(s)";
        return std::nullopt;
    }

    Open merged;
    for (const Open& o : open) merge_open(merged, o, path);
    return merged;
}

Open check_node(const ProofNode& node, Logic logic, bool allow_derived, const std::string& path) {
    if (node.rule == RuleId::Hyp) {
        if (!node.premises.empty()) throw ProofError(path, "Hyp nodes take no premises");
        if (node.label.empty()) throw ProofError(path, "Hyp nodes need a label");
        require_in_fragment(node.conclusion, logic);
        return {{node.label, node.conclusion}};
    }
    if (!rule_in_logic(node.rule, logic, allow_derived)) {
        const RuleInfo& info = rule_info(node.rule);
        if (info.derived && is_plus(logic) && (!info.uses_implication || has_implication(logic)))
            throw ProofError(path, std::string(to_string(node.rule)) +
                                       " is a derived rule; pass --allow-derived to admit it");
        throw ProofError(path, std::string(to_string(node.rule)) + " is not a rule of " +
                                   to_string(logic));
    }
    require_in_fragment(node.conclusion, logic);

    const RuleInfo& info = rule_info(node.rule);
    const std::size_t arity = info.alternatives.front().premises.size();
    if (node.premises.size() != arity)
        throw ProofError(path, std::string(to_string(node.rule)) + " takes " +
                                   std::to_string(arity) + " premise(s), got " +
                                   std::to_string(node.premises.size()));

    std::vector<Open> premise_open;
    for (std::size_t i = 0; i < node.premises.size(); ++i)
        premise_open.push_back(
            check_node(node.premises[i], logic, allow_derived, path + "/" + std::to_string(i + 1)));

    std::string why_not = "no schema alternative applies";
    for (const RuleSchema& schema : info.alternatives) {
        std::string why;
        if (auto open = try_schema(node, schema, premise_open, path, why)) return *open;
        if (!why.empty()) why_not = why;
    }
    throw ProofError(path, std::string(to_string(node.rule)) + ": " + why_not);
}

}  // namespace

CheckResult check_proof(const ProofNode& root, Logic logic, bool allow_derived) {
    const Open open = check_node(root, logic, allow_derived, "root");
    CheckResult result{{}, root.conclusion, logic};
    for (const auto& [label, formula] : open) {
        bool dup = false;
        for (const Formula& f : result.open_hypotheses)
            if (f == formula) {
                dup = true;
                break;
            }
        if (!dup) result.open_hypotheses.push_back(formula);
    }
    return result;
}

SoundnessVerdict soundness_harness(const ProofNode& root, Logic logic, bool allow_derived) {
    const CheckResult checked = check_proof(root, logic, allow_derived);
    const Sequent s{checked.open_hypotheses, checked.conclusion};
    if (is_plus(logic)) {
        const Entail6Result r = entails6(s, logic);
        if (r.valid) return {true, {}};
        return {false, "matrix countermodel: " + r.countermodel->to_string()};
    }
    const NmatrixEntailResult r = nmatrix_entails(s, logic);
    if (r.valid) return {true, {}};
    return {false, "Nmatrix countermodel: " + r.countermodel->to_string()};
}

bool rule_semantically_sound(RuleId id, Logic logic) {
    const RuleInfo& info = rule_info(id);
    for (const RuleSchema& schema : info.alternatives) {
        // The schema's metavariables double as fresh object variables.
        std::vector<Formula> proper_premises;
        std::vector<std::pair<Formula, Formula>> conditionals;  // hypothesis -> subconclusion
        std::vector<Formula> everything;
        for (const auto& p : schema.premises) {
            everything.push_back(p.pattern);
            if (p.discharged) {
                everything.push_back(*p.discharged);
                conditionals.emplace_back(*p.discharged, p.pattern);
            } else {
                proper_premises.push_back(p.pattern);
            }
        }
        everything.push_back(schema.conclusion);

        if (is_plus(logic)) {
            const std::vector<std::string> vars = variables(Sequent{everything, schema.conclusion});
            const std::vector<Formula> closure = subformula_closure(Sequent{everything, schema.conclusion});
            std::vector<int> digits(vars.size(), 0);
            while (true) {
                Assignment6 assignment;
                for (std::size_t i = 0; i < vars.size(); ++i)
                    assignment.set(vars[i], kAllValues[digits[i]]);
                const std::vector<Value6> values = eval6_closure(closure, assignment, logic);
                auto value_of = [&](const Formula& g) {
                    for (std::size_t i = 0; i < closure.size(); ++i)
                        if (closure[i] == g) return values[i];
                    throw std::logic_error("closure lookup");
                };
                bool applies = true;
                for (const Formula& p : proper_premises)
                    if (!is_designated(value_of(p))) applies = false;
                for (const auto& [hyp, sub] : conditionals)
                    if (is_designated(value_of(hyp)) && !is_designated(value_of(sub)))
                        applies = false;
                if (applies && !is_designated(value_of(schema.conclusion))) return false;

                std::size_t pos = vars.size();
                bool done = vars.empty();
                while (pos > 0) {
                    --pos;
                    if (++digits[pos] < 6) break;
                    digits[pos] = 0;
                    if (pos == 0) done = true;
                }
                if (done) break;
            }
        } else {
            ValuationEnumerator stream(Sequent{everything, schema.conclusion}, logic);
            while (auto v = stream.next()) {
                bool applies = true;
                for (const Formula& p : proper_premises)
                    if (!is_designated(v->at(p))) applies = false;
                for (const auto& [hyp, sub] : conditionals)
                    if (is_designated(v->at(hyp)) && !is_designated(v->at(sub))) applies = false;
                if (applies && !is_designated(v->at(schema.conclusion))) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Proof files

namespace {

ProofNode node_from_json(const nlohmann::json& j, const std::string& path) {
    if (!j.is_object()) throw ProofError(path, "proof nodes must be JSON objects");
    if (!j.contains("rule") || !j["rule"].is_string())
        throw ProofError(path, "missing \"rule\"");
    const auto rule = rule_from_string(j["rule"].get<std::string>());
    if (!rule) throw ProofError(path, "unknown rule '" + j["rule"].get<std::string>() + "'");
    if (!j.contains("formula") || !j["formula"].is_string())
        throw ProofError(path, "missing \"formula\"");

    ProofNode node{*rule, parse_formula(j["formula"].get<std::string>()), {}, {}, {}};
    if (j.contains("label")) node.label = j["label"].get<std::string>();
    if (j.contains("discharge")) {
        for (const auto& d : j["discharge"]) node.discharges.push_back(d.get<std::string>());
    }
    if (j.contains("premises")) {
        std::size_t i = 0;
        for (const auto& p : j["premises"])
            node.premises.push_back(node_from_json(p, path + "/" + std::to_string(++i)));
    }
    return node;
}

}  // namespace

ProofNode parse_proof(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ProofError("root", std::string("invalid JSON: ") + e.what());
    }
    return node_from_json(j, "root");
}

ProofNode load_proof_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open proof file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_proof(buffer.str());
}

}  // namespace letlab
