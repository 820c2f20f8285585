#include "letlab/nmatrix.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace letlab {

ValueSet ValueSet::of(std::initializer_list<Value6> vs) {
    ValueSet s;
    for (Value6 v : vs) s.add(v);
    return s;
}

int ValueSet::size() const { return std::popcount(bits); }

Value6 ValueSet::nth(int k) const {
    for (int i = 0; i < 6; ++i) {
        if (bits >> i & 1) {
            if (k == 0) return static_cast<Value6>(i);
            --k;
        }
    }
    throw std::out_of_range("value set has no member with that index");
}

std::string ValueSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < 6; ++i) {
        if (bits >> i & 1) {
            if (!first) out += ",";
            out += letlab::to_string(static_cast<Value6>(i));
            first = false;
        }
    }
    return out + "}";
}

namespace {

constexpr Value6 T = Value6::T, T0 = Value6::T0, b = Value6::B, n = Value6::N, F0 = Value6::F0,
                 F = Value6::F;

MultiOpTable build_transcribed() {
    const ValueSet TT0 = ValueSet::of({T, T0});
    const ValueSet FF0 = ValueSet::of({F, F0});
    const ValueSet sb = ValueSet::of({b});
    const ValueSet sn = ValueSet::of({n});
    const ValueSet D = kDesignated;
    const ValueSet ND = kNonDesignated;

    MultiOpTable t;
    t.conj = {{{TT0, TT0, sb, sn, FF0, FF0},
               {TT0, TT0, sb, sn, FF0, FF0},
               {sb, sb, sb, FF0, FF0, FF0},
               {sn, sn, FF0, sn, FF0, FF0},
               {FF0, FF0, FF0, FF0, FF0, FF0},
               {FF0, FF0, FF0, FF0, FF0, FF0}}};
    t.disj = {{{TT0, TT0, TT0, TT0, TT0, TT0},
               {TT0, TT0, TT0, TT0, TT0, TT0},
               {TT0, TT0, sb, TT0, sb, sb},
               {TT0, TT0, TT0, sn, sn, sn},
               {TT0, TT0, sb, sn, FF0, FF0},
               {TT0, TT0, sb, sn, FF0, FF0}}};
    t.imp = {{{TT0, TT0, sb, sn, FF0, FF0},
              {TT0, TT0, sb, sn, FF0, FF0},
              {TT0, TT0, sb, sn, FF0, FF0},
              {TT0, TT0, TT0, TT0, TT0, TT0},
              {TT0, TT0, TT0, TT0, TT0, TT0},
              {TT0, TT0, TT0, TT0, TT0, TT0}}};
    t.neg = {FF0, FF0, sb, sn, TT0, TT0};
    t.circ = {D, ND, ND, ND, ND, D};
    t.has_imp = true;
    return t;
}

// Builds the multioperations from the coordinate rules: for binary # the
// output is every snapshot whose first coordinate is the Boolean op on the
// inputs' first coordinates and whose second follows the fixed rule for #;
// negation swaps the first two coordinates, ∘ reads the third.
MultiOpTable build_checked() {
    auto snaps_with = [](int pos, int neg) {
        ValueSet out;
        for (Value6 v : kAllValues) {
            const Snapshot z = snapshot_of(v);
            if (static_cast<int>(z.pos) == pos && static_cast<int>(z.neg) == neg) out.add(v);
        }
        return out;
    };
    auto snaps_with_pos = [](int pos) {
        ValueSet out;
        for (Value6 v : kAllValues)
            if (static_cast<int>(snapshot_of(v).pos) == pos) out.add(v);
        return out;
    };

    MultiOpTable t;
    for (Value6 x : kAllValues) {
        const Snapshot z = snapshot_of(x);
        const int i = static_cast<int>(x);
        t.neg[i] = snaps_with(static_cast<int>(z.neg), static_cast<int>(z.pos));
        t.circ[i] = snaps_with_pos(static_cast<int>(z.cls));
        for (Value6 y : kAllValues) {
            const Snapshot w = snapshot_of(y);
            const int j = static_cast<int>(y);
            t.conj[i][j] = snaps_with(z.pos & w.pos, z.neg | w.neg);
            t.disj[i][j] = snaps_with(z.pos | w.pos, z.neg & w.neg);
            t.imp[i][j] = snaps_with((z.pos ^ 1) | w.pos, z.pos & w.neg);
        }
    }
    t.has_imp = true;

    for (int i = 0; i < 6; ++i) {
        if (t.neg[i].empty() || t.circ[i].empty())
            throw std::logic_error("empty multioperation output");
        for (int j = 0; j < 6; ++j)
            if (t.conj[i][j].empty() || t.disj[i][j].empty() || t.imp[i][j].empty())
                throw std::logic_error("empty multioperation output");
    }
    const MultiOpTable& ref = nmatrix_table_transcribed();
    if (t.conj != ref.conj || t.disj != ref.disj || t.imp != ref.imp || t.neg != ref.neg ||
        t.circ != ref.circ)
        throw std::logic_error(
            "non-deterministic tables generated from the coordinate rules disagree with the "
            "transcription");
    return t;
}

}  // namespace

const MultiOpTable& nmatrix_table_transcribed() {
    static const MultiOpTable table = build_transcribed();
    return table;
}

const MultiOpTable& nmatrix_table(Logic logic) {
    if (is_plus(logic))
        throw std::invalid_argument("non-deterministic tables exist only for letk / letf-");
    static const MultiOpTable full = build_checked();
    static const MultiOpTable reduct = [] {
        MultiOpTable t = build_checked();
        t.has_imp = false;
        return t;
    }();
    return has_implication(logic) ? full : reduct;
}

std::shared_ptr<const ClosureIndex> ClosureIndex::make(std::vector<Formula> formulas) {
    auto idx = std::make_shared<ClosureIndex>();
    idx->formulas = std::move(formulas);
    for (std::size_t i = 0; i < idx->formulas.size(); ++i) idx->position[idx->formulas[i]] = i;
    return idx;
}

Value6 ClosureValuation::at(const Formula& f) const {
    auto it = closure_->position.find(f);
    if (it == closure_->position.end())
        throw std::out_of_range("formula '" + letlab::to_string(f) + "' outside the valuation domain");
    return values_[it->second];
}

std::string ClosureValuation::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < domain().size(); ++i) {
        if (i) out << ' ';
        out << letlab::to_string(domain()[i]) << '=' << letlab::to_string(values_[i]);
    }
    return out.str();
}

ValuationEnumerator::ValuationEnumerator(const Sequent& s, Logic logic) {
    require_in_fragment(s, logic);
    table_ = &nmatrix_table(logic);
    // leaves first (variables in first-occurrence order, then constants),
    // compounds after in topological order; children stay before parents
    std::vector<Formula> ordered = subformula_closure(s);
    std::stable_partition(ordered.begin(), ordered.end(),
                          [](const Formula& f) { return f.conn() == Conn::Var; });
    std::stable_partition(ordered.begin(), ordered.end(),
                          [](const Formula& f) { return f.is_leaf(); });
    closure_ = ClosureIndex::make(std::move(ordered));
    const std::size_t m = closure_->formulas.size();
    plan_.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Formula& f = closure_->formulas[i];
        plan_[i].conn = f.conn();
        if (f.is_unary()) plan_[i].a = static_cast<int>(closure_->position.at(f.child()));
        if (f.is_binary()) {
            plan_[i].a = static_cast<int>(closure_->position.at(f.lhs()));
            plan_[i].b = static_cast<int>(closure_->position.at(f.rhs()));
        }
    }
    choice_.resize(m);
    choice_idx_.resize(m);
    value_.resize(m, Value6::T);
    done_ = !rebuild_from(0);
}

bool ValuationEnumerator::rebuild_from(std::size_t start) {
    const std::size_t m = plan_.size();
    for (std::size_t i = start; i < m; ++i) {
        const Node& nd = plan_[i];
        switch (nd.conn) {
            case Conn::Var: choice_[i].bits = 0b111111; break;
            case Conn::Top: choice_[i] = ValueSet::of({Value6::T}); break;
            case Conn::Bot: choice_[i] = ValueSet::of({Value6::F}); break;
            case Conn::Not:
                choice_[i] = table_->neg[static_cast<int>(value_[static_cast<std::size_t>(nd.a)])];
                break;
            case Conn::Circ:
                choice_[i] = table_->circ[static_cast<int>(value_[static_cast<std::size_t>(nd.a)])];
                break;
            case Conn::And:
                choice_[i] = table_->conj[static_cast<int>(value_[static_cast<std::size_t>(nd.a)])]
                                         [static_cast<int>(value_[static_cast<std::size_t>(nd.b)])];
                break;
            case Conn::Or:
                choice_[i] = table_->disj[static_cast<int>(value_[static_cast<std::size_t>(nd.a)])]
                                         [static_cast<int>(value_[static_cast<std::size_t>(nd.b)])];
                break;
            case Conn::Imp:
                choice_[i] = table_->imp[static_cast<int>(value_[static_cast<std::size_t>(nd.a)])]
                                        [static_cast<int>(value_[static_cast<std::size_t>(nd.b)])];
                break;
        }
        if (choice_[i].empty()) return false;  // cannot happen: outputs are nonempty
        choice_idx_[i] = 0;
        value_[i] = choice_[i].nth(0);
    }
    return true;
}

bool ValuationEnumerator::advance() {
    std::size_t i = plan_.size();
    while (i > 0) {
        --i;
        if (choice_idx_[i] + 1 < choice_[i].size()) {
            ++choice_idx_[i];
            value_[i] = choice_[i].nth(choice_idx_[i]);
            return rebuild_from(i + 1);
        }
    }
    return false;
}

std::optional<ClosureValuation> ValuationEnumerator::next() {
    if (done_) return std::nullopt;
    if (fresh_) {
        fresh_ = false;
        if (plan_.empty()) {
            done_ = true;
            return std::nullopt;
        }
        return ClosureValuation(closure_, value_);
    }
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return ClosureValuation(closure_, value_);
}

NmatrixEntailResult nmatrix_entails(const Sequent& s, Logic logic) {
    ValuationEnumerator stream(s, logic);
    NmatrixEntailResult result{true, std::nullopt, 0};
    while (auto v = stream.next()) {
        ++result.valuations_checked;
        bool premises_hold = true;
        for (const Formula& p : s.premises)
            if (!is_designated(v->at(p))) {
                premises_hold = false;
                break;
            }
        if (premises_hold && !is_designated(v->at(s.conclusion))) {
            result.valid = false;
            result.countermodel = std::move(v);
            return result;
        }
    }
    return result;
}

}  // namespace letlab
