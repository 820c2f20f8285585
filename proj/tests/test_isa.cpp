#include "doctest.h"
#include "letlab/generator.hpp"
#include "letlab/isa.hpp"
#include "letlab/twist.hpp"

using namespace letlab;

namespace {
constexpr Value6 T = Value6::T, T0 = Value6::T0, b = Value6::B, n = Value6::N, F0 = Value6::F0,
                 F = Value6::F;
}

TEST_CASE("the nabla operator") {
    CHECK(nabla(F) == F);
    CHECK(nabla(n) == T);
    CHECK(nabla(T) == T);
    for (Value6 v : kAllValues) CHECK(nabla(v) == (v == F ? F : T));
}

TEST_CASE("nabla and circle define each other") {
    const OpTable& t = matrix6_table(Logic::LetKPlus);
    CHECK(nabla_via_circ(F) == F);
    CHECK(circ_via_nabla(b) == F);
    CHECK(circ_via_nabla(T) == T);
    for (Value6 v : kAllValues) {
        CHECK(nabla_via_circ(v) == nabla(v));
        CHECK(circ_via_nabla(v) == t.circ[static_cast<int>(v)]);
    }
}

TEST_CASE("lattice order helpers") {
    CHECK(l6_leq(F, T));
    CHECK(l6_leq(F0, n));
    CHECK(!l6_leq(n, b));
    CHECK(l6_meet(b, n) == F0);

    // same order as the snapshot characterization over the two-element algebra
    const BooleanAlgebra b2(1);
    for (Value6 x : kAllValues)
        for (Value6 y : kAllValues)
            CHECK(l6_leq(x, y) == order_leq(b2, snapshot_of(x), snapshot_of(y)));
}

TEST_CASE("degree-preserving consequence") {
    CHECK(degree_entails(parse_sequent("p & q |- p")).valid);
    CHECK(degree_entails(parse_sequent("|- o o p")).valid);

    SUBCASE("implication breaks the correspondence") {
        const Sequent s = parse_sequent("~(p -> q) |- p");
        CHECK(entails6(s, Logic::LetKPlus).valid);
        const DegreeResult r = degree_entails(s, Logic::LetKPlus);
        CHECK(!r.valid);
        REQUIRE(r.witness.has_value());

        // the published witness: at p=b, q=n the premise evaluates to n,
        // which is not below b in the lattice
        Assignment6 witness;
        witness.set("p", b);
        witness.set("q", n);
        const Value6 premise = eval6(parse_formula("~(p -> q)"), witness);
        CHECK(premise == n);
        CHECK(!l6_leq(premise, eval6(parse_formula("p"), witness)));
    }

    SUBCASE("no-premise queries demand the top value, not mere designation") {
        // p | (p -> q) is always designated but not always T
        CHECK(entails6(parse_sequent("|- p | (p -> q)"), Logic::LetKPlus).valid);
        CHECK(!degree_entails(parse_sequent("|- p | (p -> q)"), Logic::LetKPlus).valid);
    }
}

TEST_CASE("degree coincides with the matrix on the implication-free fragment") {
    FormulaGen gen(31337);
    for (int trial = 0; trial < 250; ++trial) {
        FormulaGen::Options options;
        options.max_depth = 4;
        options.num_vars = 3;
        options.allow_implication = false;
        options.with_constants = (trial % 3 == 0);
        const Sequent s = gen.sequent(options);
        CAPTURE(to_string(s));
        CHECK(degree_entails(s, Logic::LetFPlus).valid == entails6(s, Logic::LetFPlus).valid);
    }
}

TEST_CASE("the plus logic with implication is not selfextensional") {
    const Formula neg_imp = parse_formula("~(p -> q)");
    const Formula conj_form = parse_formula("p & ~q");
    const Formula dneg_imp = parse_formula("~~(p -> q)");
    const Formula neg_conj = parse_formula("~(p & ~q)");

    bool values_differ = false, designation_differs = false;
    for (Value6 x : kAllValues)
        for (Value6 y : kAllValues) {
            Assignment6 a;
            a.set("p", x);
            a.set("q", y);
            // the originals agree in designation everywhere
            CHECK(is_designated(eval6(neg_imp, a)) == is_designated(eval6(conj_form, a)));
            // their negations do not
            const Value6 u = eval6(dneg_imp, a);
            const Value6 w = eval6(neg_conj, a);
            if (u != w) values_differ = true;
            if (is_designated(u) != is_designated(w)) designation_differs = true;
        }
    CHECK(values_differ);
    CHECK(designation_differs);
}
