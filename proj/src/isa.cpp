#include "letlab/isa.hpp"

namespace letlab {

Value6 nabla(Value6 z) { return z == Value6::F ? Value6::F : Value6::T; }

Value6 nabla_via_circ(Value6 z) {
    const OpTable& t = matrix6_table(Logic::LetKPlus);
    auto i = [](Value6 v) { return static_cast<int>(v); };
    return t.disj[i(z)][i(t.neg[i(t.circ[i(z)])])];
}

Value6 circ_via_nabla(Value6 z) {
    const OpTable& t = matrix6_table(Logic::LetKPlus);
    auto i = [](Value6 v) { return static_cast<int>(v); };
    const Value6 left = t.neg[i(nabla(z))];
    const Value6 right = t.neg[i(nabla(t.neg[i(z)]))];
    return t.disj[i(left)][i(right)];
}

Value6 l6_meet(Value6 z, Value6 w) {
    return matrix6_table(Logic::LetKPlus).conj[static_cast<int>(z)][static_cast<int>(w)];
}

bool l6_leq(Value6 z, Value6 w) { return l6_meet(z, w) == z; }

DegreeResult degree_entails(const Sequent& s, Logic logic) {
    // -> formulas are tolerated here on purpose; they evaluate through the
    // full tables while the order stays the lattice order.
    const Logic eval_logic = has_implication(logic) ? Logic::LetKPlus : Logic::LetFPlus;
    require_in_fragment(s, eval_logic);

    const std::vector<std::string> vars = variables(s);
    const std::vector<Formula> closure = subformula_closure(s);

    bool top_everywhere = true;
    bool meet_everywhere = !s.premises.empty();
    std::optional<Assignment6> top_witness, meet_witness;

    std::vector<int> digits(vars.size(), 0);
    while (true) {
        Assignment6 assignment;
        for (std::size_t i = 0; i < vars.size(); ++i)
            assignment.set(vars[i], kAllValues[digits[i]]);
        const std::vector<Value6> values = eval6_closure(closure, assignment, eval_logic);
        auto value_of = [&](const Formula& g) {
            for (std::size_t i = 0; i < closure.size(); ++i)
                if (closure[i] == g) return values[i];
            throw std::logic_error("closure lookup");
        };

        const Value6 goal = value_of(s.conclusion);
        if (goal != Value6::T && top_everywhere) {
            top_everywhere = false;
            top_witness = assignment;
        }
        if (meet_everywhere) {
            Value6 meet = value_of(s.premises[0]);
            for (std::size_t i = 1; i < s.premises.size(); ++i)
                meet = l6_meet(meet, value_of(s.premises[i]));
            if (!l6_leq(meet, goal)) {
                meet_everywhere = false;
                meet_witness = assignment;
            }
        }
        if (!top_everywhere && !meet_everywhere) break;

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

    if (top_everywhere || meet_everywhere) return {true, std::nullopt};
    return {false, s.premises.empty() ? top_witness : meet_witness};
}

}  // namespace letlab
