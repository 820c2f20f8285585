// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: letlab_acceptance [proof-corpus-dir]

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <vector>

#include "letlab/bival.hpp"
#include "letlab/cpl.hpp"
#include "letlab/generator.hpp"
#include "letlab/isa.hpp"
#include "letlab/matrix6.hpp"
#include "letlab/nd.hpp"
#include "letlab/nmatrix.hpp"
#include "letlab/selftest.hpp"
#include "letlab/twist.hpp"

using namespace letlab;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << criterion << ": " << what;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

constexpr Value6 T = Value6::T, T0 = Value6::T0, b = Value6::B, n = Value6::N, F0 = Value6::F0,
                 F = Value6::F;
int idx(Value6 v) { return static_cast<int>(v); }

// --- criterion 1: deterministic table exactness ----------------------------

void criterion_table_exactness() {
    bool ok = true;
    int entries = 0;
    try {
        const OpTable& generated = matrix6_table(Logic::LetKPlus);  // throws on mismatch
        const OpTable& ref = matrix6_table_transcribed();
        for (int i = 0; i < 6; ++i) {
            ok = ok && generated.neg[i] == ref.neg[i];
            ok = ok && generated.circ[i] == ref.circ[i];
            entries += 2;
            for (int j = 0; j < 6; ++j) {
                ok = ok && generated.conj[i][j] == ref.conj[i][j];
                ok = ok && generated.disj[i][j] == ref.disj[i][j];
                ok = ok && generated.imp[i][j] == ref.imp[i][j];
                entries += 3;
            }
        }
    } catch (const std::exception& e) {
        report(1, "deterministic tables from the twist closed forms", false, e.what());
        return;
    }
    report(1, "deterministic tables from the twist closed forms", ok && entries == 120,
           std::to_string(entries) + " entries compared");
}

// --- criterion 2: non-deterministic table exactness -------------------------

void criterion_nmatrix_exactness() {
    bool ok = true;
    std::string detail;
    try {
        const MultiOpTable& generated = nmatrix_table(Logic::LetK);
        const MultiOpTable& ref = nmatrix_table_transcribed();
        ok = generated.conj == ref.conj && generated.disj == ref.disj &&
             generated.imp == ref.imp && generated.neg == ref.neg && generated.circ == ref.circ;
        const OpTable& det = matrix6_table(Logic::LetKPlus);
        for (int i = 0; i < 6 && ok; ++i) {
            ok = ok && generated.neg[i].contains(det.neg[i]) &&
                 generated.circ[i].contains(det.circ[i]);
            for (int j = 0; j < 6 && ok; ++j)
                ok = ok && generated.conj[i][j].contains(det.conj[i][j]) &&
                     generated.disj[i][j].contains(det.disj[i][j]) &&
                     generated.imp[i][j].contains(det.imp[i][j]);
        }
        detail = "tables exact; deterministic selections are members everywhere";
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    report(2, "non-deterministic tables and selection membership", ok, detail);
}

// --- criterion 3: rule soundness --------------------------------------------

void criterion_rule_soundness(const std::string& corpus_dir) {
    int rules_checked = 0, rules_failed = 0;
    for (Logic logic : {Logic::LetK, Logic::LetKPlus, Logic::LetFMinus, Logic::LetFPlus}) {
        for (RuleId rule : rules_of(logic, /*include_derived=*/is_plus(logic))) {
            if (rule == RuleId::Hyp) continue;
            ++rules_checked;
            if (!rule_semantically_sound(rule, logic)) ++rules_failed;
        }
    }
    int corpus_checked = 0, corpus_failed = 0;
    if (!corpus_dir.empty() && std::filesystem::is_directory(corpus_dir)) {
        for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
            if (entry.path().extension() != ".prf") continue;
            ++corpus_checked;
            try {
                if (!soundness_harness(load_proof_file(entry.path().string()), Logic::LetKPlus,
                                       /*allow_derived=*/true)
                         .valid)
                    ++corpus_failed;
            } catch (const std::exception&) {
                ++corpus_failed;
            }
        }
    }
    report(3, "rule schemas validate under their semantics",
           rules_failed == 0 && corpus_failed == 0,
           std::to_string(rules_checked) + " rule/logic pairs, " +
               std::to_string(corpus_checked) + " corpus proofs");
}

// --- criterion 4: clause-presentation equivalence ---------------------------

void criterion_clause_equivalence() {
    int discrepancies = 0;
    std::size_t profile_count = 0;
    auto group = [&](Conn conn, std::initializer_list<ClauseId> expanded, ClauseId compact) {
        const auto profiles = coherent_profiles(conn);
        profile_count += profiles.size();
        for (const LocalProfile& p : profiles) {
            bool all = true;
            for (ClauseId c : expanded) all = all && profile_satisfies(c, p);
            if (all != profile_satisfies(compact, p)) ++discrepancies;
        }
    };
    group(Conn::And, {ClauseId::Vp3, ClauseId::Vp4, ClauseId::Vp5, ClauseId::Vp6, ClauseId::Vp7},
          ClauseId::V9);
    group(Conn::Or, {ClauseId::Vp8, ClauseId::Vp9, ClauseId::Vp10, ClauseId::Vp11, ClauseId::Vp12},
          ClauseId::V10);
    group(Conn::Imp,
          {ClauseId::Vp13, ClauseId::Vp14, ClauseId::Vp15, ClauseId::Vp16, ClauseId::Vp17},
          ClauseId::V11);
    for (const LocalProfile& p : all_constrained_profiles())
        for (ClauseId c : {ClauseId::Vp6, ClauseId::Vp7, ClauseId::Vp11, ClauseId::Vp12,
                           ClauseId::Vp16, ClauseId::Vp17})
            if (profile_satisfies(c, p) != profile_satisfies(c, p, /*primed=*/true))
                ++discrepancies;
    report(4, "compact and contrapositive clause forms match the expanded ones",
           discrepancies == 0 && profile_count <= 512,
           std::to_string(profile_count) + " coherent profiles plus 216 constrained ones, " +
               std::to_string(discrepancies) + " discrepancies");
}

// --- criterion 5: lattice laws ----------------------------------------------

void criterion_lattice() {
    const auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::uint64_t checks = 0;
    for (int atoms = 0; atoms <= 2; ++atoms) {
        const TwistAlgebra twist(BooleanAlgebra(atoms), Logic::LetKPlus);
        const LatticeReport r = verify_lattice(twist);
        ok = ok && r.ok();
        checks += r.checks;
        for (int i = 0; i < twist.size(); ++i)
            for (int j = 0; j < twist.size(); ++j) {
                ++checks;
                if (order_leq(twist.base(), twist.at(i), twist.at(j)) !=
                    (twist.op_and(i, j) == i))
                    ok = false;
            }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream detail;
    detail << checks << " checks in " << seconds << " s";
    report(5, "lattice laws and order characterization for 0, 1, 2 atoms",
           ok && seconds < 10.0, detail.str());
}

// --- criterion 6: four-way oracle agreement ----------------------------------

void criterion_oracle_agreement() {
    FormulaGen gen(20250810);
    int cpl_mismatches = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        FormulaGen::Options options;
        options.max_depth = 5;
        options.num_vars = 4;
        const Sequent s = gen.sequent(options);
        if (entails6(s, Logic::LetKPlus).valid !=
            cpl_taut(reduce_sequent(s, Logic::LetKPlus)).tautology)
            ++cpl_mismatches;
    }
    int twist_mismatches = 0, twist_valid_checked = 0;
    FormulaGen gen2(4242);
    const TwistAlgebra two(BooleanAlgebra(2), Logic::LetKPlus);
    for (int trial = 0; trial < 500; ++trial) {
        FormulaGen::Options options;
        options.max_depth = 4;
        options.num_vars = 3;
        const Sequent s = gen2.sequent(options);
        if (!entails6(s, Logic::LetKPlus).valid) continue;
        ++twist_valid_checked;
        if (twist_entails(two, s).status != TwistEntailResult::Status::Valid) ++twist_mismatches;
    }
    report(6, "matrix = classical reduction; matrix-valid stays twist-valid",
           cpl_mismatches == 0 && twist_mismatches == 0,
           "1000 reduction sequents, " + std::to_string(twist_valid_checked) +
               " valid sequents lifted to two atoms");
}

// --- criterion 7: bivaluation round trips ------------------------------------

void criterion_bival_roundtrip() {
    const SuiteResult suite = suite_bival_roundtrip(97531, 1000);
    report(7, "valuation/bivaluation round trips", suite.ok(),
           std::to_string(suite.checks) + " valuations, " + std::to_string(suite.failures) +
               " failures");
}

// --- criterion 8: the identity connective -----------------------------------

Formula eq_formula(const Formula& a, const Formula& bf) {
    auto iff = [](const Formula& x, const Formula& y) {
        return Formula::conj(Formula::impl(x, y), Formula::impl(y, x));
    };
    return Formula::conj(Formula::conj(iff(a, bf), iff(Formula::neg(a), Formula::neg(bf))),
                         iff(Formula::circ(a), Formula::circ(bf)));
}

void criterion_identity_connective() {
    bool ok = true;
    // (1) designated exactly on the diagonal; (2) compositionality over all
    // two-variable assignments
    for (Value6 z : kAllValues)
        for (Value6 w : kAllValues) {
            ok = ok && (is_designated(equiv6(z, w)) == (z == w));
            Assignment6 a;
            a.set("p", z);
            a.set("q", w);
            const Value6 via_formula =
                eval6(eq_formula(Formula::var("p"), Formula::var("q")), a);
            ok = ok && (via_formula == equiv6(z, w));
            ok = ok && (is_designated(via_formula) == (z == w));
        }

    const Formula p = Formula::var("p"), q = Formula::var("q"), r = Formula::var("r"),
                  s = Formula::var("s");
    // (3) reflexivity
    ok = ok && tautology6(eq_formula(p, p)).valid;
    // (4) symmetry, (5) transitivity
    ok = ok && entails6(Sequent{{eq_formula(p, q)}, eq_formula(q, p)}).valid;
    ok = ok && entails6(Sequent{{eq_formula(p, q), eq_formula(q, r)}, eq_formula(p, r)}).valid;
    // (6) congruence for the unary connectives
    ok = ok && entails6(Sequent{{eq_formula(p, q)}, eq_formula(Formula::neg(p), Formula::neg(q))})
                   .valid;
    ok = ok &&
         entails6(Sequent{{eq_formula(p, q)}, eq_formula(Formula::circ(p), Formula::circ(q))})
             .valid;
    // (7) congruence for the binary connectives
    ok = ok && entails6(Sequent{{eq_formula(p, q), eq_formula(r, s)},
                                eq_formula(Formula::conj(p, r), Formula::conj(q, s))})
                   .valid;
    ok = ok && entails6(Sequent{{eq_formula(p, q), eq_formula(r, s)},
                                eq_formula(Formula::disj(p, r), Formula::disj(q, s))})
                   .valid;
    ok = ok && entails6(Sequent{{eq_formula(p, q), eq_formula(r, s)},
                                eq_formula(Formula::impl(p, r), Formula::impl(q, s))})
                   .valid;
    // (8) A interderivable with A ≡ (A → A)
    ok = ok && entails6(Sequent{{eq_formula(p, Formula::impl(p, p))}, p}).valid;
    ok = ok && entails6(Sequent{{p}, eq_formula(p, Formula::impl(p, p))}).valid;

    report(8, "all eight identity-connective properties", ok);
}

// --- criterion 9: the Stone-algebra bridge -----------------------------------

void criterion_isa_bridge() {
    bool ok = true;
    const OpTable& t = matrix6_table(Logic::LetKPlus);
    for (Value6 v : kAllValues) {
        ok = ok && nabla_via_circ(v) == nabla(v);
        ok = ok && circ_via_nabla(v) == t.circ[idx(v)];
    }

    FormulaGen gen(5897);
    int degree_mismatches = 0;
    for (int trial = 0; trial < 500; ++trial) {
        FormulaGen::Options options;
        options.max_depth = 4;
        options.num_vars = 3;
        options.allow_implication = false;
        options.with_constants = (trial % 3 == 0);
        const Sequent s = gen.sequent(options);
        if (degree_entails(s, Logic::LetFPlus).valid != entails6(s, Logic::LetFPlus).valid)
            ++degree_mismatches;
    }
    ok = ok && degree_mismatches == 0;

    // the implication counterexample: valid in the matrix, degree-invalid,
    // with p=b, q=n breaching the lattice condition
    const Sequent counterexample = parse_sequent("~(p -> q) |- p");
    ok = ok && entails6(counterexample, Logic::LetKPlus).valid;
    ok = ok && !degree_entails(counterexample, Logic::LetKPlus).valid;
    Assignment6 witness;
    witness.set("p", b);
    witness.set("q", n);
    const Value6 premise_value = eval6(parse_formula("~(p -> q)"), witness);
    ok = ok && premise_value == n && !l6_leq(premise_value, b);

    // non-selfextensionality: ~(p->q) ⟚ p & ~q everywhere, yet their
    // negations differ in designation somewhere
    bool originals_agree = true, negations_differ = false;
    for (Value6 z : kAllValues)
        for (Value6 w : kAllValues) {
            Assignment6 a;
            a.set("p", z);
            a.set("q", w);
            originals_agree =
                originals_agree && (is_designated(eval6(parse_formula("~(p -> q)"), a)) ==
                                    is_designated(eval6(parse_formula("p & ~q"), a)));
            if (is_designated(eval6(parse_formula("~~(p -> q)"), a)) !=
                is_designated(eval6(parse_formula("~(p & ~q)"), a)))
                negations_differ = true;
        }
    ok = ok && originals_agree && negations_differ;

    report(9, "nabla/circle interdefinability and degree-preserving consequence", ok,
           std::to_string(degree_mismatches) + " degree mismatches over 500 sequents");
}

// --- criterion 10: quoted singletons -----------------------------------------

void criterion_quoted_values() {
    bool ok = true;
    const OpTable& t = matrix6_table(Logic::LetKPlus);
    ok = ok && t.conj[idx(b)][idx(n)] == F0;
    ok = ok && t.imp[idx(b)][idx(n)] == n;
    ok = ok && t.circ[idx(b)] == F;
    ok = ok && nmatrix_table(Logic::LetK).conj[idx(T)][idx(T0)] == ValueSet::of({T, T0});

    const std::string tau_a = reduce_report(parse_sequent("|- (p1 & ~p2) | o p1"));
    ok = ok && tau_a.find("conclusion-term: (p1^1 * p2^2) + p1^3\n") != std::string::npos;
    const std::string tau_b = reduce_report(parse_sequent("|- ~((p1 & ~p2) | o p1)"));
    ok = ok && tau_b.find("conclusion-term: (p1^2 + p2^1) * -p1^3\n") != std::string::npos;

    report(10, "quoted table entries and reduction terms", ok);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string corpus_dir = argc > 1 ? argv[1] : "";
    criterion_table_exactness();
    criterion_nmatrix_exactness();
    criterion_rule_soundness(corpus_dir);
    criterion_clause_equivalence();
    criterion_lattice();
    criterion_oracle_agreement();
    criterion_bival_roundtrip();
    criterion_identity_connective();
    criterion_isa_bridge();
    criterion_quoted_values();
    if (failures == 0) {
        std::cout << "acceptance: all criteria PASS\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return 1;
}
