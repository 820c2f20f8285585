#include "letlab/selftest.hpp"

#include <sstream>

#include "letlab/bival.hpp"
#include "letlab/cpl.hpp"
#include "letlab/generator.hpp"
#include "letlab/isa.hpp"
#include "letlab/matrix6.hpp"
#include "letlab/nmatrix.hpp"
#include "letlab/twist.hpp"

namespace letlab {

namespace {

void note(SuiteResult& suite, const std::string& message) {
    ++suite.failures;
    if (suite.messages.size() < 5) suite.messages.push_back(message);
}

}  // namespace

SuiteResult suite_matrix_vs_nmatrix() {
    SuiteResult suite{"matrix-vs-nmatrix", 0, 0, {}};
    const OpTable& det = matrix6_table(Logic::LetKPlus);
    const MultiOpTable& nd = nmatrix_table(Logic::LetK);
    for (int i = 0; i < 6; ++i) {
        ++suite.checks;
        if (!nd.neg[i].contains(det.neg[i])) note(suite, "negation row " + std::to_string(i));
        ++suite.checks;
        if (!nd.circ[i].contains(det.circ[i])) note(suite, "circle row " + std::to_string(i));
        for (int j = 0; j < 6; ++j) {
            ++suite.checks;
            if (!nd.conj[i][j].contains(det.conj[i][j]))
                note(suite, "conjunction " + std::to_string(i) + "," + std::to_string(j));
            ++suite.checks;
            if (!nd.disj[i][j].contains(det.disj[i][j]))
                note(suite, "disjunction " + std::to_string(i) + "," + std::to_string(j));
            ++suite.checks;
            if (!nd.imp[i][j].contains(det.imp[i][j]))
                note(suite, "implication " + std::to_string(i) + "," + std::to_string(j));
        }
    }
    return suite;
}

SuiteResult suite_matrix_vs_cpl(std::uint64_t seed, int trials) {
    SuiteResult suite{"matrix-vs-cpl", 0, 0, {}};
    FormulaGen gen(seed);
    for (int t = 0; t < trials; ++t) {
        FormulaGen::Options options;
        options.max_depth = 5;
        options.num_vars = 4;
        options.allow_implication = (t % 2 == 0);
        options.with_constants = (t % 5 == 0);
        const Sequent s = gen.sequent(options);
        const Logic logic = options.allow_implication ? Logic::LetKPlus : Logic::LetFPlus;
        ++suite.checks;
        const bool by_matrix = entails6(s, logic).valid;
        const bool by_cpl = cpl_taut(reduce_sequent(s, logic)).tautology;
        if (by_matrix != by_cpl)
            note(suite, "disagreement on '" + to_string(s) + "' (matrix " +
                            (by_matrix ? "valid" : "invalid") + ", cpl " +
                            (by_cpl ? "valid" : "invalid") + ")");
    }
    return suite;
}

SuiteResult suite_matrix_vs_twist(std::uint64_t seed, int trials) {
    SuiteResult suite{"matrix-vs-twist", 0, 0, {}};
    FormulaGen gen(seed);
    const TwistAlgebra two_atoms(BooleanAlgebra(2), Logic::LetKPlus);
    for (int t = 0; t < trials; ++t) {
        FormulaGen::Options options;
        options.max_depth = 4;
        options.num_vars = 3;
        options.allow_implication = (t % 2 == 0);
        const Sequent s = gen.sequent(options);
        const Logic logic = options.allow_implication ? Logic::LetKPlus : Logic::LetFPlus;
        ++suite.checks;
        const bool by_matrix = entails6(s, logic).valid;
        if (!by_matrix) continue;  // soundness direction: matrix-valid must stay valid
        const TwistEntailResult r = twist_entails(two_atoms, s);
        if (r.status != TwistEntailResult::Status::Valid)
            note(suite, "matrix-valid but not twist-valid: '" + to_string(s) + "'");
    }
    return suite;
}

SuiteResult suite_degree_vs_matrix(std::uint64_t seed, int trials) {
    SuiteResult suite{"degree-vs-matrix", 0, 0, {}};
    FormulaGen gen(seed);
    for (int t = 0; t < trials; ++t) {
        FormulaGen::Options options;
        options.max_depth = 4;
        options.num_vars = 3;
        options.allow_implication = false;
        options.with_constants = (t % 3 == 0);
        const Sequent s = gen.sequent(options);
        ++suite.checks;
        const bool by_matrix = entails6(s, Logic::LetFPlus).valid;
        const bool by_degree = degree_entails(s, Logic::LetFPlus).valid;
        if (by_matrix != by_degree)
            note(suite, "disagreement on '" + to_string(s) + "' (matrix " +
                            (by_matrix ? "valid" : "invalid") + ", degree " +
                            (by_degree ? "valid" : "invalid") + ")");
    }
    return suite;
}

SuiteResult suite_bival_roundtrip(std::uint64_t seed, int trials) {
    SuiteResult suite{"bival-roundtrip", 0, 0, {}};
    FormulaGen gen(seed);
    for (int t = 0; t < trials; ++t) {
        FormulaGen::Options options;
        options.max_depth = 4;
        options.num_vars = 3;
        options.allow_implication = (t % 2 == 0);
        const Sequent s = gen.sequent(options);
        const Logic logic = options.allow_implication ? Logic::LetKPlus : Logic::LetFPlus;
        ++suite.checks;

        const std::vector<Formula> base = subformula_closure(s);
        const std::vector<Formula> domain = triple_closure(base);
        Assignment6 assignment;
        for (const std::string& name : variables(s))
            assignment.set(name, kAllValues[gen.next(6)]);

        TripleValuation v;
        v.domain = domain;
        v.values = eval6_closure(domain, assignment, logic);

        const Bivaluation rho = from_valuation(v);
        // designation equivalence
        for (std::size_t i = 0; i < domain.size(); ++i)
            if (rho.value(domain[i]) != is_designated(v.values[i])) {
                note(suite, "designation mismatch on '" + to_string(s) + "'");
                break;
            }
        // clause satisfaction, expanded and compact presentations
        if (!check_clauses(rho, ClauseSet::LetKPlusVp1Vp17).ok() ||
            !check_clauses(rho, ClauseSet::LetKPlusCompact).ok()) {
            note(suite, "clause violation for '" + to_string(s) + "'");
            continue;
        }
        // round trips
        try {
            const TripleValuation back = to_valuation(rho, base, TranslationTarget::LetKPlusMatrix);
            for (std::size_t i = 0; i < base.size(); ++i)
                if (back.values[i] != v.at(base[i])) {
                    note(suite, "to_valuation(from_valuation(v)) != v on '" + to_string(s) + "'");
                    break;
                }
            const Bivaluation rho2 = from_valuation(back);
            for (const Formula& f : base)
                if (rho2.value(f) != rho.value(f)) {
                    note(suite, "from_valuation(to_valuation(rho)) != rho on '" + to_string(s) + "'");
                    break;
                }
        } catch (const ClauseViolationError& e) {
            note(suite, std::string("translation rejected a legal valuation: ") + e.what());
        }
    }
    return suite;
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int trials) {
    return {
        suite_matrix_vs_nmatrix(),
        suite_matrix_vs_cpl(seed, trials),
        suite_matrix_vs_twist(seed, trials),
        suite_degree_vs_matrix(seed, trials),
        suite_bival_roundtrip(seed, trials),
    };
}

std::string selftest_report(std::uint64_t seed, int trials) {
    std::ostringstream out;
    out << "selftest seed=" << seed << " trials=" << trials << "\n";
    bool all_ok = true;
    for (const SuiteResult& suite : run_all_suites(seed, trials)) {
        out << "suite " << suite.name << ": " << (suite.ok() ? "PASS" : "FAIL") << " ("
            << suite.checks << " checks, " << suite.failures << " failures)\n";
        for (const std::string& m : suite.messages) out << "  " << m << "\n";
        all_ok = all_ok && suite.ok();
    }
    out << "selftest: " << (all_ok ? "PASS" : "FAIL") << "\n";
    return out.str();
}

}  // namespace letlab
