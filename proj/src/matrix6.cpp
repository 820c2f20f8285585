#include "letlab/matrix6.hpp"

#include <sstream>
#include <stdexcept>

#include "letlab/twist.hpp"

namespace letlab {

void require_in_fragment(const Formula& f, Logic logic) {
    if (!has_implication(logic) && !f.implication_free())
        throw FragmentError("formula '" + to_string(f) + "' uses '->' outside the " +
                            std::string(to_string(logic)) + " fragment");
}

void require_in_fragment(const Sequent& s, Logic logic) {
    for (const Formula& p : s.premises) require_in_fragment(p, logic);
    require_in_fragment(s.conclusion, logic);
}

namespace {

constexpr Value6 T = Value6::T, T0 = Value6::T0, b = Value6::B, n = Value6::N, F0 = Value6::F0,
                 F = Value6::F;

OpTable build_transcribed() {
    OpTable t;
    t.conj = {{{T, T0, b, n, F0, F},
               {T0, T0, b, n, F0, F},
               {b, b, b, F0, F0, F},
               {n, n, F0, n, F0, F},
               {F0, F0, F0, F0, F0, F},
               {F, F, F, F, F, F}}};
    t.disj = {{{T, T, T, T, T, T},
               {T, T0, T0, T0, T0, T0},
               {T, T0, b, T0, b, b},
               {T, T0, T0, n, n, n},
               {T, T0, b, n, F0, F0},
               {T, T0, b, n, F0, F}}};
    t.imp = {{{T, T0, b, n, F0, F},
              {T, T0, b, n, F0, F},
              {T, T0, b, n, F0, F},
              {T, T0, T0, T0, T0, T0},
              {T, T0, T0, T0, T0, T0},
              {T, T, T, T, T, T}}};
    t.neg = {F, F0, b, n, T0, T};
    t.circ = {T, F, F, F, F, T};
    t.has_imp = true;
    return t;
}

// Generates the tables by evaluating the twist operations over the
// two-element algebra, then checks them against the transcription.
OpTable build_checked() {
    const BooleanAlgebra b2(1);
    const TwistAlgebra twist(b2, Logic::LetKPlus);
    OpTable t;
    auto idx = [&](Value6 v) { return twist.index_of(snapshot_of(v)); };
    auto val = [&](int i) {
        auto v = value6_of(twist.at(i));
        if (!v) throw std::logic_error("twist result over B2 is not one of the six values");
        return *v;
    };
    for (Value6 x : kAllValues) {
        for (Value6 y : kAllValues) {
            const int i = idx(x), j = idx(y);
            t.conj[static_cast<int>(x)][static_cast<int>(y)] = val(twist.op_and(i, j));
            t.disj[static_cast<int>(x)][static_cast<int>(y)] = val(twist.op_or(i, j));
            t.imp[static_cast<int>(x)][static_cast<int>(y)] = val(twist.op_imp(i, j));
        }
        t.neg[static_cast<int>(x)] = val(twist.op_not(idx(x)));
        t.circ[static_cast<int>(x)] = val(twist.op_circ(idx(x)));
    }
    t.has_imp = true;

    const OpTable& ref = matrix6_table_transcribed();
    if (t.conj != ref.conj || t.disj != ref.disj || t.imp != ref.imp || t.neg != ref.neg ||
        t.circ != ref.circ)
        throw std::logic_error(
            "six-valued tables generated from the twist closed forms disagree with the "
            "transcription");
    return t;
}

}  // namespace

const OpTable& matrix6_table_transcribed() {
    static const OpTable table = build_transcribed();
    return table;
}

const OpTable& matrix6_table(Logic logic) {
    if (!is_plus(logic))
        throw std::invalid_argument("deterministic tables exist only for letk+ / letf+");
    static const OpTable full = build_checked();
    static const OpTable reduct = [] {
        OpTable t = build_checked();
        t.has_imp = false;
        return t;
    }();
    return has_implication(logic) ? full : reduct;
}

Value6 equiv6(Value6 z, Value6 w) {
    const OpTable& t = matrix6_table(Logic::LetKPlus);
    auto i = [](Value6 v) { return static_cast<int>(v); };
    auto iff = [&](Value6 x, Value6 y) {
        return t.conj[i(t.imp[i(x)][i(y)])][i(t.imp[i(y)][i(x)])];
    };
    Value6 first = iff(z, w);
    Value6 second = iff(t.neg[i(z)], t.neg[i(w)]);
    Value6 third = iff(t.circ[i(z)], t.circ[i(w)]);
    return t.conj[i(t.conj[i(first)][i(second)])][i(third)];
}

void Assignment6::set(const std::string& name, Value6 v) {
    for (auto& [k, old] : items_) {
        if (k == name) {
            old = v;
            return;
        }
    }
    items_.emplace_back(name, v);
}

std::optional<Value6> Assignment6::get(const std::string& name) const {
    for (const auto& [k, v] : items_)
        if (k == name) return v;
    return std::nullopt;
}

std::string Assignment6::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < items_.size(); ++i) {
        if (i) out << ' ';
        out << items_[i].first << '=' << letlab::to_string(items_[i].second);
    }
    return out.str();
}

Value6 eval6(const Formula& f, const Assignment6& assignment, Logic logic) {
    require_in_fragment(f, logic);
    const OpTable& t = matrix6_table(logic);
    auto i = [](Value6 v) { return static_cast<int>(v); };
    switch (f.conn()) {
        case Conn::Var: {
            auto v = assignment.get(f.name());
            if (!v) throw UnboundVariableError("unbound variable '" + f.name() + "'");
            return *v;
        }
        case Conn::Top: return Value6::T;
        case Conn::Bot: return Value6::F;
        case Conn::Not: return t.neg[i(eval6(f.child(), assignment, logic))];
        case Conn::Circ: return t.circ[i(eval6(f.child(), assignment, logic))];
        case Conn::And:
            return t.conj[i(eval6(f.lhs(), assignment, logic))][i(eval6(f.rhs(), assignment, logic))];
        case Conn::Or:
            return t.disj[i(eval6(f.lhs(), assignment, logic))][i(eval6(f.rhs(), assignment, logic))];
        case Conn::Imp:
            return t.imp[i(eval6(f.lhs(), assignment, logic))][i(eval6(f.rhs(), assignment, logic))];
    }
    throw std::logic_error("unreachable");
}

std::vector<Value6> eval6_closure(const std::vector<Formula>& closure,
                                  const Assignment6& assignment, Logic logic) {
    const OpTable& t = matrix6_table(logic);
    auto i = [](Value6 v) { return static_cast<int>(v); };
    std::vector<Value6> out;
    out.reserve(closure.size());
    auto value_of = [&](const Formula& g) {
        for (std::size_t k = 0; k < out.size(); ++k)
            if (closure[k] == g) return out[k];
        throw std::logic_error("list is not subformula-closed");
    };
    for (const Formula& f : closure) {
        require_in_fragment(f, logic);
        switch (f.conn()) {
            case Conn::Var: {
                auto v = assignment.get(f.name());
                if (!v) throw UnboundVariableError("unbound variable '" + f.name() + "'");
                out.push_back(*v);
                break;
            }
            case Conn::Top: out.push_back(Value6::T); break;
            case Conn::Bot: out.push_back(Value6::F); break;
            case Conn::Not: out.push_back(t.neg[i(value_of(f.child()))]); break;
            case Conn::Circ: out.push_back(t.circ[i(value_of(f.child()))]); break;
            case Conn::And: out.push_back(t.conj[i(value_of(f.lhs()))][i(value_of(f.rhs()))]); break;
            case Conn::Or: out.push_back(t.disj[i(value_of(f.lhs()))][i(value_of(f.rhs()))]); break;
            case Conn::Imp: out.push_back(t.imp[i(value_of(f.lhs()))][i(value_of(f.rhs()))]); break;
        }
    }
    return out;
}

Entail6Result entails6(const Sequent& s, Logic logic) {
    require_in_fragment(s, logic);
    const std::vector<std::string> vars = variables(s);
    const std::vector<Formula> closure = subformula_closure(s);
    const std::size_t k = vars.size();

    std::vector<int> digits(k, 0);
    Entail6Result result{true, std::nullopt, 0};
    while (true) {
        Assignment6 assignment;
        for (std::size_t i = 0; i < k; ++i) assignment.set(vars[i], kAllValues[digits[i]]);
        ++result.assignments_checked;

        const std::vector<Value6> values = eval6_closure(closure, assignment, logic);
        auto value_of = [&](const Formula& g) {
            for (std::size_t i = 0; i < closure.size(); ++i)
                if (closure[i] == g) return values[i];
            throw std::logic_error("formula missing from closure");
        };
        bool premises_hold = true;
        for (const Formula& p : s.premises)
            if (!is_designated(value_of(p))) {
                premises_hold = false;
                break;
            }
        if (premises_hold && !is_designated(value_of(s.conclusion))) {
            result.valid = false;
            result.countermodel = std::move(assignment);
            return result;
        }

        // base-6 odometer, least-significant digit last
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < 6) break;
            digits[pos] = 0;
            if (pos == 0) return result;
        }
        if (k == 0) return result;
    }
}

Entail6Result tautology6(const Formula& f, Logic logic) {
    return entails6(Sequent{{}, f}, logic);
}

}  // namespace letlab
