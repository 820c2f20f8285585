// letlab — decision procedures, proof checking and algebra checks for the
// six-valued logics of evidence and truth (LET_K, LET_K+, LET_F-, LET_F+).
//
// Exit codes: 0 success / valid, 1 invalid sequent (countermodel printed) or
// failed check, 2 usage or engine error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "letlab/bival.hpp"
#include "letlab/cpl.hpp"
#include "letlab/isa.hpp"
#include "letlab/matrix6.hpp"
#include "letlab/nd.hpp"
#include "letlab/nmatrix.hpp"
#include "letlab/selftest.hpp"
#include "letlab/twist.hpp"

namespace {

using namespace letlab;

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitError = 2;

// Strips '#' comment lines and joins the rest with spaces.
std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream joined;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        joined << line << ' ';
    }
    return joined.str();
}

Logic parse_logic(const std::string& name) {
    if (auto logic = logic_from_string(name)) return *logic;
    throw CLI::ValidationError("--logic", "unknown logic '" + name + "'");
}

struct EntailsOptions {
    std::string sequent_text;
    std::string file;
    std::string logic = "letk+";
    std::string method = "matrix";
    int atoms = 2;
    bool json = false;
};

int run_entails(const EntailsOptions& options) {
    const Logic logic = parse_logic(options.logic);
    const std::string text =
        options.file.empty() ? options.sequent_text : read_text_file(options.file);
    const Sequent s = parse_sequent(text);

    const bool nondeterministic = options.method == "nmatrix";
    if (nondeterministic && is_plus(logic))
        throw CLI::ValidationError("--method", "nmatrix decides letk / letf- only");
    if (!nondeterministic && !is_plus(logic))
        throw CLI::ValidationError("--method",
                                   options.method + " decides letk+ / letf+ only");

    bool valid = false;
    nlohmann::json out;
    std::string countermodel;

    if (options.method == "nmatrix") {
        const NmatrixEntailResult r = nmatrix_entails(s, logic);
        valid = r.valid;
        out["stats"]["valuations"] = r.valuations_checked;
        if (!valid) {
            countermodel = r.countermodel->to_string();
            for (std::size_t i = 0; i < r.countermodel->domain().size(); ++i)
                out["countermodel"][to_string(r.countermodel->domain()[i])] =
                    to_string(r.countermodel->at_index(i));
        }
    } else if (options.method == "matrix") {
        const Entail6Result r = entails6(s, logic);
        valid = r.valid;
        out["stats"]["assignments"] = r.assignments_checked;
        if (!valid) {
            countermodel = r.countermodel->to_string();
            for (const auto& [name, v] : r.countermodel->items())
                out["countermodel"][name] = to_string(v);
        }
    } else if (options.method == "twist") {
        const BooleanAlgebra algebra(options.atoms);
        const TwistAlgebra twist(algebra, has_implication(logic) ? Logic::LetKPlus
                                                                 : Logic::LetFPlus);
        const TwistEntailResult r = twist_entails(twist, s);
        if (r.status == TwistEntailResult::Status::BudgetExceeded)
            throw std::runtime_error("assignment space exceeds the evaluation budget");
        valid = r.status == TwistEntailResult::Status::Valid;
        out["stats"]["assignments"] = r.assignments_checked;
        if (!valid) {
            std::ostringstream cm;
            for (std::size_t i = 0; i < r.countermodel.size(); ++i) {
                if (i) cm << ' ';
                cm << r.countermodel[i].first << '='
                   << to_string(algebra, r.countermodel[i].second);
                out["countermodel"][r.countermodel[i].first] =
                    to_string(algebra, r.countermodel[i].second);
            }
            countermodel = cm.str();
        }
    } else if (options.method == "cpl") {
        const TautResult r = cpl_taut(reduce_sequent(s, logic));
        valid = r.tautology;
        out["stats"]["rows"] = r.rows_checked;
        if (!valid) {
            std::ostringstream cm;
            for (std::size_t i = 0; i < r.falsifier.size(); ++i) {
                if (i) cm << ' ';
                cm << r.falsifier[i].first.name() << '=' << (r.falsifier[i].second ? 1 : 0);
                out["countermodel"][r.falsifier[i].first.name()] = r.falsifier[i].second ? 1 : 0;
            }
            countermodel = cm.str();
        }
    } else if (options.method == "degree") {
        const DegreeResult r = degree_entails(s, logic);
        valid = r.valid;
        if (!valid && r.witness) {
            countermodel = r.witness->to_string();
            for (const auto& [name, v] : r.witness->items()) out["countermodel"][name] = to_string(v);
        }
    } else {
        throw CLI::ValidationError("--method", "unknown method '" + options.method + "'");
    }

    out["verdict"] = valid ? "valid" : "invalid";
    if (options.json) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (valid ? "valid" : "invalid") << "\n";
        if (!valid && !countermodel.empty()) std::cout << "countermodel: " << countermodel << "\n";
    }
    return valid ? kExitValid : kExitInvalid;
}

int run_table(const std::string& logic_name, const std::string& connective) {
    const Logic logic = parse_logic(logic_name);
    const auto header = [&] {
        std::cout << to_string(logic) << " " << connective << "\n      ";
        for (Value6 v : kAllValues) std::cout << to_string(v) << std::string(6 - std::string(to_string(v)).size(), ' ');
        std::cout << "\n";
    };
    auto pad = [](const std::string& s, std::size_t width) {
        return s + std::string(s.size() < width ? width - s.size() : 1, ' ');
    };

    if (is_plus(logic)) {
        const OpTable& t = matrix6_table(logic);
        auto cell = [&](int i, int j) -> std::string {
            if (connective == "and") return to_string(t.conj[i][j]);
            if (connective == "or") return to_string(t.disj[i][j]);
            if (connective == "imp") {
                if (!t.has_imp) throw std::runtime_error("no implication in this fragment");
                return to_string(t.imp[i][j]);
            }
            if (connective == "equiv") {
                if (!t.has_imp)
                    throw std::runtime_error("the identity connective needs the implication");
                return to_string(equiv6(static_cast<Value6>(i), static_cast<Value6>(j)));
            }
            throw CLI::ValidationError("--connective", "unknown connective '" + connective + "'");
        };
        if (connective == "not" || connective == "circ") {
            for (Value6 v : kAllValues)
                std::cout << pad(to_string(v), 4)
                          << (connective == "not" ? to_string(t.neg[static_cast<int>(v)])
                                                  : to_string(t.circ[static_cast<int>(v)]))
                          << "\n";
            return kExitValid;
        }
        header();
        for (Value6 v : kAllValues) {
            std::cout << pad(to_string(v), 6);
            for (Value6 w : kAllValues)
                std::cout << pad(cell(static_cast<int>(v), static_cast<int>(w)), 6);
            std::cout << "\n";
        }
        return kExitValid;
    }

    const MultiOpTable& t = nmatrix_table(logic);
    if (connective == "equiv")
        throw CLI::ValidationError("--connective", "equiv is defined for the plus logics only");
    if (connective == "not" || connective == "circ") {
        for (Value6 v : kAllValues)
            std::cout << pad(to_string(v), 4)
                      << (connective == "not" ? t.neg[static_cast<int>(v)].to_string()
                                              : t.circ[static_cast<int>(v)].to_string())
                      << "\n";
        return kExitValid;
    }
    auto cell = [&](int i, int j) -> std::string {
        if (connective == "and") return t.conj[i][j].to_string();
        if (connective == "or") return t.disj[i][j].to_string();
        if (connective == "imp") {
            if (!t.has_imp) throw std::runtime_error("no implication in this fragment");
            return t.imp[i][j].to_string();
        }
        throw CLI::ValidationError("--connective", "unknown connective '" + connective + "'");
    };
    std::cout << to_string(logic) << " " << connective << "\n";
    for (Value6 v : kAllValues) {
        std::cout << pad(to_string(v), 4);
        for (Value6 w : kAllValues)
            std::cout << pad(cell(static_cast<int>(v), static_cast<int>(w)), 10);
        std::cout << "\n";
    }
    return kExitValid;
}

int run_bival_check(const std::string& path, const std::string& clauses, bool json) {
    const auto set = clause_set_from_string(clauses);
    if (!set)
        throw CLI::ValidationError("--clauses",
                                   "expected letk, letk+ or letk+compact, got '" + clauses + "'");

    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::vector<Formula> domain;
    std::vector<bool> bits;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = line.rfind('=');
        if (eq == std::string::npos)
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": expected 'formula = 0|1'");
        const std::string rhs = line.substr(eq + 1);
        const auto bitpos = rhs.find_first_not_of(" \t\r");
        if (bitpos == std::string::npos || (rhs[bitpos] != '0' && rhs[bitpos] != '1'))
            throw std::runtime_error("line " + std::to_string(line_no) +
                                     ": value must be 0 or 1");
        const Formula f = parse_formula(line.substr(0, eq));
        for (const Formula& seen : domain)
            if (seen == f)
                throw std::runtime_error("line " + std::to_string(line_no) + ": formula '" +
                                         to_string(f) + "' listed twice");
        domain.push_back(f);
        bits.push_back(rhs[bitpos] == '1');
    }

    Bivaluation rho(domain);
    for (std::size_t i = 0; i < domain.size(); ++i) rho.set(domain[i], bits[i]);
    if (!rho.domain_is_closed())
        throw std::runtime_error("the listed formulas are not subformula-closed");

    const ClauseReport report = check_clauses(rho, *set);
    if (json) {
        nlohmann::json out;
        out["verdict"] = report.ok() ? "ok" : "violations";
        out["checked"] = report.instances_checked;
        for (const auto& v : report.violations) out["violations"].push_back(v.detail);
        for (const auto& [clause, at] : report.not_applicable)
            out["not_applicable"].push_back(std::string(to_string(clause)) + " at '" +
                                            to_string(at) + "'");
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& v : report.violations) std::cout << "violation: " << v.detail << "\n";
        for (const auto& [clause, at] : report.not_applicable)
            std::cout << "not applicable: " << to_string(clause) << " at '" << to_string(at)
                      << "'\n";
        std::cout << (report.ok() ? "ok" : "violations found") << " ("
                  << report.instances_checked << " instance(s) checked)\n";
    }
    return report.ok() ? kExitValid : kExitInvalid;
}

int run_lattice_check(int atoms, bool json) {
    const TwistAlgebra twist(BooleanAlgebra(atoms), Logic::LetKPlus);
    const LatticeReport report = verify_lattice(twist);

    // the order characterization must agree with the meet definition
    std::uint64_t order_checks = 0;
    std::vector<std::string> order_failures;
    for (int i = 0; i < twist.size(); ++i)
        for (int j = 0; j < twist.size(); ++j) {
            ++order_checks;
            const bool by_order = order_leq(twist.base(), twist.at(i), twist.at(j));
            const bool by_meet = twist.op_and(i, j) == i;
            if (by_order != by_meet && order_failures.size() < 5)
                order_failures.push_back("order/meet mismatch at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
        }

    const bool ok = report.ok() && order_failures.empty();
    if (json) {
        nlohmann::json out;
        out["verdict"] = ok ? "pass" : "fail";
        out["domain"] = twist.size();
        out["lattice_checks"] = report.checks;
        out["order_checks"] = order_checks;
        for (const auto& f : report.failures) out["failures"].push_back(f);
        for (const auto& f : order_failures) out["failures"].push_back(f);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "domain size: " << twist.size() << "\n";
        for (const auto& f : report.failures) std::cout << "failure: " << f << "\n";
        for (const auto& f : order_failures) std::cout << "failure: " << f << "\n";
        std::cout << "lattice laws: " << (report.ok() ? "pass" : "fail") << " (" << report.checks
                  << " checks)\n";
        std::cout << "order vs meet: " << (order_failures.empty() ? "pass" : "fail") << " ("
                  << order_checks << " pairs)\n";
    }
    return ok ? kExitValid : kExitInvalid;
}

int run_check_proof(const std::string& path, const std::string& logic_name, bool allow_derived,
                    bool json) {
    const Logic logic = parse_logic(logic_name);
    const ProofNode proof = load_proof_file(path);
    const CheckResult result = check_proof(proof, logic, allow_derived);
    const SoundnessVerdict verdict = soundness_harness(proof, logic, allow_derived);

    if (json) {
        nlohmann::json out;
        out["verdict"] = verdict.valid ? "ok" : "unsound";
        out["conclusion"] = to_string(result.conclusion);
        for (const Formula& f : result.open_hypotheses)
            out["open_hypotheses"].push_back(to_string(f));
        if (!verdict.valid) out["detail"] = verdict.detail;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "conclusion: " << to_string(result.conclusion) << "\n";
        std::cout << "open hypotheses:";
        for (const Formula& f : result.open_hypotheses) std::cout << " '" << to_string(f) << "'";
        if (result.open_hypotheses.empty()) std::cout << " (none)";
        std::cout << "\n";
        if (verdict.valid) {
            std::cout << "checked: ok (sequent semantically valid)\n";
        } else {
            std::cout << "checked, but the sequent is semantically INVALID — " << verdict.detail
                      << "\n";
        }
    }
    return verdict.valid ? kExitValid : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"six-valued logics of evidence and truth: decision procedures and checkers"};
    app.require_subcommand(1);

    EntailsOptions entails_options;
    auto* entails = app.add_subcommand("entails", "decide a sequent");
    entails->add_option("sequent", entails_options.sequent_text, "sequent 'F1, F2 |- G'");
    entails->add_option("--file", entails_options.file, "read the sequent from a file");
    entails->add_option("--logic", entails_options.logic, "letk, letk+, letf-, letf+");
    entails->add_option("--method", entails_options.method,
                        "matrix, nmatrix, twist, cpl, degree");
    entails->add_option("--atoms", entails_options.atoms, "algebra size for --method twist");
    entails->add_flag("--json", entails_options.json, "machine-readable output");

    std::string table_logic = "letk+", table_connective = "and";
    auto* table = app.add_subcommand("table", "print a connective table");
    table->add_option("--logic", table_logic, "letk, letk+, letf-, letf+");
    table->add_option("--connective", table_connective, "and, or, imp, not, circ, equiv");

    std::string reduce_text, reduce_file, reduce_logic = "letk+";
    auto* reduce = app.add_subcommand("reduce", "print the classical reduction of a sequent");
    reduce->add_option("sequent", reduce_text, "sequent 'F1, F2 |- G'");
    reduce->add_option("--file", reduce_file, "read the sequent from a file");
    reduce->add_option("--logic", reduce_logic, "letk+ or letf+");

    int lattice_atoms = 2;
    bool lattice_json = false;
    auto* lattice = app.add_subcommand("lattice-check", "verify the twist lattice laws");
    lattice->add_option("--atoms", lattice_atoms, "number of atoms of the base algebra");
    lattice->add_flag("--json", lattice_json, "machine-readable output");

    std::string bival_file, bival_clauses = "letk+";
    bool bival_json = false;
    auto* bival = app.add_subcommand("bival-check", "check clause satisfaction of a bivaluation");
    bival->add_option("file", bival_file, "file of 'formula = 0|1' lines")->required();
    bival->add_option("--clauses", bival_clauses, "letk, letk+ or letk+compact");
    bival->add_flag("--json", bival_json, "machine-readable output");

    std::string proof_file, proof_logic = "letk+";
    bool allow_derived = false, proof_json = false;
    auto* proof = app.add_subcommand("check-proof", "check a natural-deduction proof file");
    proof->add_option("file", proof_file, "JSON proof file")->required();
    proof->add_option("--logic", proof_logic, "letk, letk+, letf-, letf+");
    proof->add_flag("--allow-derived", allow_derived, "admit the derived rules Cons and Comp");
    proof->add_flag("--json", proof_json, "machine-readable output");

    std::uint64_t seed = 42;
    int trials = 500;
    auto* selftest = app.add_subcommand("selftest", "run the cross-procedure oracle suites");
    selftest->add_option("--seed", seed, "generator seed");
    selftest->add_option("--trials", trials, "trials per randomized suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitError : kExitValid;
    }

    try {
        if (entails->parsed()) {
            if (entails_options.sequent_text.empty() && entails_options.file.empty())
                throw CLI::ValidationError("sequent", "give a sequent or --file");
            return run_entails(entails_options);
        }
        if (table->parsed()) return run_table(table_logic, table_connective);
        if (reduce->parsed()) {
            const std::string text = reduce_file.empty() ? reduce_text : read_text_file(reduce_file);
            if (text.empty()) throw CLI::ValidationError("sequent", "give a sequent or --file");
            std::cout << reduce_report(parse_sequent(text), parse_logic(reduce_logic));
            return kExitValid;
        }
        if (lattice->parsed()) return run_lattice_check(lattice_atoms, lattice_json);
        if (bival->parsed()) return run_bival_check(bival_file, bival_clauses, bival_json);
        if (proof->parsed())
            return run_check_proof(proof_file, proof_logic, allow_derived, proof_json);
        if (selftest->parsed()) {
            const std::string report = selftest_report(seed, trials);
            std::cout << report;
            return report.find("selftest: PASS") != std::string::npos ? kExitValid : kExitInvalid;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const ProofError& e) {
        std::cerr << "proof error " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
