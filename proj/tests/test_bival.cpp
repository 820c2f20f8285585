#include <random>

#include "doctest.h"
#include "letlab/bival.hpp"
#include "letlab/generator.hpp"

using namespace letlab;

TEST_CASE("clause violations are detected with witnesses") {
    // ρ(∘p)=ρ(p)=ρ(~p)=1 violates v8
    const Sequent s = parse_sequent("|- o p");
    Bivaluation rho = Bivaluation::on_triple_closure(s);
    rho.set(parse_formula("p"), true);
    rho.set(parse_formula("~p"), true);
    rho.set(parse_formula("o p"), true);
    const ClauseReport report = check_clauses(rho, ClauseSet::LetKV1V8);
    REQUIRE(!report.ok());
    bool found_v8 = false;
    for (const auto& v : report.violations)
        if (v.clause == ClauseId::V8 && v.at == parse_formula("o p")) found_v8 = true;
    CHECK(found_v8);
}

TEST_CASE("vp2 holds by construction on the translation of a matrix valuation") {
    const Sequent s = parse_sequent("|- o ~p");
    const std::vector<Formula> domain = triple_closure(subformula_closure(s));
    for (Value6 z : kAllValues) {
        Assignment6 a;
        a.set("p", z);
        TripleValuation v{domain, eval6_closure(domain, a)};
        const Bivaluation rho = from_valuation(v);
        const ClauseReport report = check_clauses(rho, ClauseSet::LetKPlusVp1Vp17);
        CHECK(report.ok());
    }
}

TEST_CASE("a hand-built bivaluation on the closure of the circle of a negation") {
    Bivaluation rho = Bivaluation::on_triple_closure(parse_sequent("|- o ~p"));
    rho.set(parse_formula("p"), true);
    rho.set(parse_formula("~p"), false);
    rho.set(parse_formula("o p"), true);
    rho.set(parse_formula("o ~p"), true);
    rho.set(parse_formula("~~p"), true);
    rho.set(parse_formula("o o ~p"), true);
    rho.set(parse_formula("~o ~p"), false);
    const ClauseReport report = check_clauses(rho, ClauseSet::LetKPlusVp1Vp17);
    for (const auto& v : report.violations) CAPTURE(v.detail);
    CHECK(report.ok());
}

TEST_CASE("missing companions are reported as not applicable") {
    // domain {p, o p} lacks ~p, so v8 at 'o p' cannot be evaluated when it matters
    Bivaluation rho(std::vector<Formula>{parse_formula("p"), parse_formula("o p")});
    rho.set(parse_formula("p"), true);
    rho.set(parse_formula("o p"), true);
    const ClauseReport report = check_clauses(rho, ClauseSet::LetKV1V8);
    CHECK(report.ok());
    bool v8_skipped = false;
    for (const auto& [clause, at] : report.not_applicable)
        if (clause == ClauseId::V8) v8_skipped = true;
    CHECK(v8_skipped);
}

TEST_CASE("non-closed domains are rejected") {
    Bivaluation rho(std::vector<Formula>{parse_formula("p & q")});
    CHECK_THROWS_AS(check_clauses(rho, ClauseSet::LetKV1V8), std::invalid_argument);
}

TEST_CASE("translations agree with the quoted triples") {
    const Sequent s = parse_sequent("|- p");
    Bivaluation rho = Bivaluation::on_triple_closure(s);
    rho.set(parse_formula("p"), true);
    rho.set(parse_formula("~p"), false);
    rho.set(parse_formula("o p"), true);
    const TripleValuation v =
        to_valuation(rho, subformula_closure(s), TranslationTarget::LetKPlusMatrix);
    CHECK(v.at(parse_formula("p")) == Value6::T);

    rho.set(parse_formula("~p"), true);
    rho.set(parse_formula("o p"), false);
    CHECK(to_valuation(rho, subformula_closure(s), TranslationTarget::LetKPlusMatrix)
              .at(parse_formula("p")) == Value6::B);

    // ρ(p)=ρ(~p)=0, ρ(∘p)=1 is not a snapshot
    rho.set(parse_formula("p"), false);
    rho.set(parse_formula("~p"), false);
    rho.set(parse_formula("o p"), true);
    CHECK_THROWS_AS(to_valuation(rho, subformula_closure(s), TranslationTarget::LetKPlusMatrix),
                    ClauseViolationError);
}

TEST_CASE("projections of random legal valuations satisfy the basic clauses") {
    FormulaGen gen(811);
    int trials = 0;
    while (trials < 1000) {
        FormulaGen::Options options;
        options.max_depth = 3;
        options.num_vars = 2;
        const Sequent s{{}, gen.formula(options)};
        ValuationEnumerator stream(s, Logic::LetK);
        // walk a pseudo-random prefix of the stream instead of just the head
        std::optional<ClosureValuation> v = stream.next();
        for (std::uint64_t skip = gen.next(40); skip > 0 && v; --skip) {
            auto w = stream.next();
            if (!w) break;
            v = w;
        }
        if (!v) continue;
        const Bivaluation rho = from_valuation(*v);
        const ClauseReport report = check_clauses(rho, ClauseSet::LetKV1V8);
        CAPTURE(to_string(s.conclusion));
        CHECK(report.ok());
        // designation equivalence
        for (const Formula& f : v->domain())
            CHECK(rho.value(f) == is_designated(v->at(f)));
        ++trials;
    }
}

TEST_CASE("matrix valuations translate to clause-satisfying bivaluations and back") {
    FormulaGen gen(427);
    for (int trial = 0; trial < 1000; ++trial) {
        FormulaGen::Options options;
        options.max_depth = 4;
        options.num_vars = 3;
        options.allow_implication = (trial % 2 == 0);
        const Logic logic = options.allow_implication ? Logic::LetKPlus : Logic::LetFPlus;
        const Sequent s{{}, gen.formula(options)};
        const std::vector<Formula> base = subformula_closure(s);
        const std::vector<Formula> domain = triple_closure(base);

        Assignment6 a;
        for (const std::string& name : variables(s.conclusion)) a.set(name, kAllValues[gen.next(6)]);
        TripleValuation v{domain, eval6_closure(domain, a, logic)};

        const Bivaluation rho = from_valuation(v);
        CHECK(check_clauses(rho, ClauseSet::LetKPlusVp1Vp17).ok());
        CHECK(check_clauses(rho, ClauseSet::LetKPlusCompact).ok());

        const TripleValuation back = to_valuation(rho, base, TranslationTarget::LetKPlusMatrix);
        for (std::size_t i = 0; i < base.size(); ++i) CHECK(back.values[i] == v.at(base[i]));

        const Bivaluation rho2 = from_valuation(back);
        for (const Formula& f : base) CHECK(rho2.value(f) == rho.value(f));
    }
}

TEST_CASE("nmatrix-side translation round-trips legal valuations on triple closures") {
    // enumerate legal valuations on a triple-closed domain by handing the
    // whole domain to the enumerator as premises
    const std::vector<Formula> base = subformula_closure(parse_sequent("|- (p -> q) & o p"));
    const std::vector<Formula> domain = triple_closure(base);
    Sequent widened{domain, domain.back()};
    ValuationEnumerator stream(widened, Logic::LetK);
    int counted = 0;
    while (auto v = stream.next()) {
        const Bivaluation rho = from_valuation(*v);
        CHECK(check_clauses(rho, ClauseSet::LetKV1V8).ok());
        const TripleValuation back = to_valuation(rho, base, TranslationTarget::LetKNmatrix);
        // the triple of first coordinates reconstructs the valuation itself
        for (std::size_t i = 0; i < base.size(); ++i) CHECK(back.values[i] == v->at(base[i]));
        if (++counted >= 400) break;
    }
    CHECK(counted > 0);
}

TEST_CASE("matrix verdicts translate through the round-trip maps") {
    // invalid sequents hand over bivaluation countermodels; valid ones stay
    // valid because designation survives the translation
    FormulaGen gen(60601);
    int invalid_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        FormulaGen::Options options;
        options.max_depth = 4;
        options.num_vars = 3;
        options.allow_implication = (trial % 2 == 0);
        const Logic logic = options.allow_implication ? Logic::LetKPlus : Logic::LetFPlus;
        const Sequent s = gen.sequent(options);
        const Entail6Result verdict = entails6(s, logic);
        if (verdict.valid) continue;
        ++invalid_seen;

        const std::vector<Formula> domain = triple_closure(subformula_closure(s));
        TripleValuation v{domain, eval6_closure(domain, *verdict.countermodel, logic)};
        const Bivaluation rho = from_valuation(v);
        CHECK(check_clauses(rho, ClauseSet::LetKPlusVp1Vp17).ok());
        for (const Formula& p : s.premises) CHECK(rho.value(p));
        CHECK(!rho.value(s.conclusion));
    }
    CHECK(invalid_seen > 50);
}

TEST_CASE("clause-presentation equivalence over coherent profiles") {
    CHECK(all_constrained_profiles().size() == 216);

    int discrepancies = 0;
    auto group = [&](Conn conn, std::initializer_list<ClauseId> expanded, ClauseId compact) {
        const auto profiles = coherent_profiles(conn);
        CHECK(profiles.size() >= 36);
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
    CHECK(discrepancies == 0);

    SUBCASE("the contrapositive reformulations agree on every constrained profile") {
        int primed_discrepancies = 0;
        for (const LocalProfile& p : all_constrained_profiles())
            for (ClauseId c : {ClauseId::Vp6, ClauseId::Vp7, ClauseId::Vp11, ClauseId::Vp12,
                               ClauseId::Vp16, ClauseId::Vp17})
                if (profile_satisfies(c, p) != profile_satisfies(c, p, /*primed=*/true))
                    ++primed_discrepancies;
        CHECK(primed_discrepancies == 0);
    }
}
