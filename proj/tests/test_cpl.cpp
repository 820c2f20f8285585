#include <functional>

#include "doctest.h"
#include "letlab/cpl.hpp"
#include "letlab/generator.hpp"
#include "letlab/matrix6.hpp"
#include "letlab/snapshots.hpp"

using namespace letlab;

TEST_CASE("coordinate terms of the worked example") {
    // A = (p1 & ~p2) | o p1 and its negation
    const CoordTerms a = coord_terms(parse_formula("(p1 & ~p2) | o p1"));
    CHECK(to_string(a.t1) == "(p1^1 * p2^2) + p1^3");
    const CoordTerms na = coord_terms(parse_formula("~((p1 & ~p2) | o p1)"));
    CHECK(to_string(na.t1) == "(p1^2 + p2^1) * -p1^3");

    const CoordTerms base = coord_terms(parse_formula("p1"));
    CHECK(to_string(base.t1) == "p1^1");
    CHECK(to_string(base.t2) == "p1^2");
    CHECK(to_string(base.t3) == "p1^3");
}

TEST_CASE("constraint terms") {
    CHECK(to_string(constraint_term({})) == "1");
    CHECK(to_string(constraint_term({"p1"})) ==
          "(p1^3 => (p1^1 + p1^2)) * -(p1^1 * p1^2 * p1^3)");
    CHECK(to_string(constraint_term({"p1", "p2"})) ==
          "(p1^3 => (p1^1 + p1^2)) * -(p1^1 * p1^2 * p1^3) * "
          "((p2^3 => (p2^1 + p2^2)) * -(p2^1 * p2^2 * p2^3))");
}

TEST_CASE("sequent reduction and tautology checking") {
    CHECK(cpl_taut(reduce_sequent(parse_sequent("p |- p"))).tautology);
    CHECK(cpl_taut(reduce_sequent(parse_sequent("o p, p, ~p |- q"))).tautology);

    const TautResult not_taut = cpl_taut(reduce_sequent(parse_sequent("p |- o p")));
    CHECK(!not_taut.tautology);
    // the falsifying row encodes a snapshot with p true but o p false
    bool p1 = false, p3 = true;
    for (const auto& [v, bit] : not_taut.falsifier) {
        if (v.name() == "p^1") p1 = bit;
        if (v.name() == "p^3") p3 = bit;
    }
    CHECK(p1);
    CHECK(!p3);
}

TEST_CASE("basic tautologies") {
    CHECK(cpl_taut(BoolTerm::top()).tautology);
    CHECK(!cpl_taut(BoolTerm::bot()).tautology);
    const BoolTerm p = BoolTerm::var("p1", 1);
    CHECK(cpl_taut(BoolTerm::imp(p, p)).tautology);
    const TautResult r = cpl_taut(BoolTerm::join(BoolTerm::var("p1", 1), BoolTerm::var("p1", 2)));
    CHECK(!r.tautology);
    REQUIRE(r.falsifier.size() == 2);
    CHECK(!r.falsifier[0].second);  // all-zero row comes first
    CHECK(!r.falsifier[1].second);
}

TEST_CASE("coordinate terms track the evaluation coordinates") {
    FormulaGen gen(5150);
    for (int trial = 0; trial < 60; ++trial) {
        FormulaGen::Options options;
        options.max_depth = 4;
        options.num_vars = 2;
        options.with_constants = (trial % 4 == 0);
        const Formula f = gen.formula(options);
        const CoordTerms terms = coord_terms(f);
        const std::vector<std::string> vars = variables(f);

        std::vector<int> digits(vars.size(), 0);
        while (true) {
            Assignment6 a;
            for (std::size_t i = 0; i < vars.size(); ++i) a.set(vars[i], kAllValues[digits[i]]);
            const Snapshot expected = snapshot_of(eval6(f, a));

            // evaluate the coordinate terms under the row induced by the
            // snapshot coordinates of the assignment
            std::function<bool(const BoolTerm&)> row_eval = [&](const BoolTerm& u) -> bool {
                switch (u.kind()) {
                    case BoolTerm::Kind::Var: {
                        const Snapshot z = snapshot_of(*a.get(u.base()));
                        return (u.coord() == 1 ? z.pos : u.coord() == 2 ? z.neg : z.cls) == 1;
                    }
                    case BoolTerm::Kind::Top: return true;
                    case BoolTerm::Kind::Bot: return false;
                    case BoolTerm::Kind::Comp: return !row_eval(u.child());
                    case BoolTerm::Kind::Meet: return row_eval(u.lhs()) && row_eval(u.rhs());
                    case BoolTerm::Kind::Join: return row_eval(u.lhs()) || row_eval(u.rhs());
                    case BoolTerm::Kind::Imp: return !row_eval(u.lhs()) || row_eval(u.rhs());
                }
                return false;
            };
            CHECK(row_eval(terms.t1) == (expected.pos == 1));
            CHECK(row_eval(terms.t2) == (expected.neg == 1));
            CHECK(row_eval(terms.t3) == (expected.cls == 1));

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
    }
}

TEST_CASE("mechanized lattice-law identities") {
    // associativity of the third meet coordinate: both bracketings of
    // p1 & (p2 & p3) give classically equivalent coordinate terms
    const BoolTerm c = coord_terms(parse_formula("p1 & (p2 & p3)")).t3;
    const BoolTerm d = coord_terms(parse_formula("(p1 & p2) & p3")).t3;
    CHECK(cpl_taut(BoolTerm::meet(BoolTerm::imp(c, d), BoolTerm::imp(d, c))).tautology);

    const BoolTerm cj = coord_terms(parse_formula("p1 | (p2 | p3)")).t3;
    const BoolTerm dj = coord_terms(parse_formula("(p1 | p2) | p3")).t3;
    CHECK(cpl_taut(BoolTerm::meet(BoolTerm::imp(cj, dj), BoolTerm::imp(dj, cj))).tautology);

    // absorption needs the snapshot constraints: without them the identity
    // fails, with them it is a tautology
    for (const char* text : {"p1 | (p1 & p2)", "p1 & (p1 | p2)"}) {
        CAPTURE(text);
        const BoolTerm absorbed = coord_terms(parse_formula(text)).t3;
        const BoolTerm identity = BoolTerm::meet(BoolTerm::imp(BoolTerm::var("p1", 3), absorbed),
                                                 BoolTerm::imp(absorbed, BoolTerm::var("p1", 3)));
        CHECK(!cpl_taut(identity).tautology);
        CHECK(cpl_taut(BoolTerm::imp(constraint_term({"p1", "p2"}), identity)).tautology);
    }
}

TEST_CASE("reduction agrees with the matrix on random sequents") {
    FormulaGen gen(7777);
    for (int trial = 0; trial < 1000; ++trial) {
        FormulaGen::Options options;
        options.max_depth = 5;
        options.num_vars = 4;
        options.allow_implication = (trial % 2 == 0);
        const Logic logic = options.allow_implication ? Logic::LetKPlus : Logic::LetFPlus;
        const Sequent s = gen.sequent(options);
        CAPTURE(to_string(s));
        CHECK(cpl_taut(reduce_sequent(s, logic)).tautology == entails6(s, logic).valid);
    }
}

TEST_CASE("reduce report") {
    const std::string report = reduce_report(parse_sequent("p |- p"));
    CHECK(report.find("sequent: p |- p\n") != std::string::npos);
    CHECK(report.find("constraints: (p^3 => (p^1 + p^2)) * -(p^1 * p^2 * p^3)\n") !=
          std::string::npos);
    CHECK(report.find("premise-term: p^1\n") != std::string::npos);
    CHECK(report.find("conclusion-term: p^1\n") != std::string::npos);
    CHECK(report.find("reduction: ") != std::string::npos);
}
